from .schemas import (
    AlgebraFile,
    Carrier,
    CheckReport,
    Counterexample,
    EnumerationTask,
    LawResult,
    PropertyFlags,
    ReportDocument,
    ReportEntry,
)

__all__ = [
    "AlgebraFile",
    "Carrier",
    "CheckReport",
    "Counterexample",
    "EnumerationTask",
    "LawResult",
    "PropertyFlags",
    "ReportDocument",
    "ReportEntry",
]
