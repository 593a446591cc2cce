"""NMV Workbench - finite NMV-algebras, conditionally residuated posets and their conversions"""

__version__ = "1.0.0"
