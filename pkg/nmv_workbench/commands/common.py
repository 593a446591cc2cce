"""Helpers shared by the subcommands"""

from pathlib import Path
from typing import Optional, Sequence, TextIO

from ..config import get_logger
from ..models.errors import UsageError
from ..models.schemas import AlgebraFile
from ..services.algebra_file import load_algebra_file

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def read_document(path: str, kinds: Optional[Sequence[str]] = None) -> AlgebraFile:
    """Load an algebra file, insisting on one of the given kinds"""
    doc = load_algebra_file(path)
    if kinds is not None and doc.kind not in kinds:
        raise UsageError(f"{path} holds a {doc.kind} structure; expected {' or '.join(kinds)}")
    return doc


def write_output(text: str, out: TextIO, path: Optional[str] = None) -> None:
    """Write to path when given, otherwise to the command's output stream"""
    if not text.endswith("\n"):
        text += "\n"
    if path is None:
        out.write(text)
        return
    Path(path).write_text(text, encoding="utf-8")
    logger.info(f"Wrote {path}")
