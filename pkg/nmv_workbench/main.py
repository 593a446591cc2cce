#!/usr/bin/env python3
"""
NMV Workbench - check, derive, convert and enumerate finite NMV-algebras
Main entry point
"""

import argparse
import io
import logging
import sys
from contextlib import redirect_stderr
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import __version__
from .commands import EXIT_FAILED, EXIT_OK, EXIT_USAGE, register_all
from .config import get_logger
from .models.errors import (
    AlgebraFileError,
    ConsistencyError,
    HypothesisError,
    LawViolation,
    OrderError,
    UnknownPredicate,
    UnsupportedSize,
    UsageError,
)

logger = get_logger(__name__)

REJECTED = (HypothesisError, LawViolation)
BAD_INPUT = (AlgebraFileError, OrderError, UnsupportedSize, UnknownPredicate, UsageError, OSError)


@dataclass
class CommandResult:
    exit_code: int
    output: str
    errors: str


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nmv-workbench",
        description="NMV Workbench - finite NMV-algebras and conditionally residuated posets",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('-v', '--verbose', action='store_true', help='Enable debug logging')
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    register_all(subparsers)
    return parser


def _dispatch(args, out, err) -> int:
    try:
        return args.handler(args, out)
    except REJECTED as e:
        logger.warning(f"{args.command} rejected its input: {e}")
        err.write(f"error: {e}\n")
        return EXIT_FAILED
    except BAD_INPUT as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except ConsistencyError as e:
        logger.error(f"Internal consistency check failed: {e}")
        err.write(f"internal error: {e}\n")
        return EXIT_FAILED


def run_command(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """Run one command line and capture what it prints

    Exit codes: 0 success, 1 failed check or rejected hypothesis, 2 usage or
    input error.
    """
    out, err = io.StringIO(), io.StringIO()
    parser = build_parser()
    with redirect_stderr(err):
        try:
            args = parser.parse_args(list(argv) if argv is not None else None)
        except SystemExit as e:
            code = e.code if isinstance(e.code, int) else EXIT_USAGE
            return CommandResult(code, out.getvalue(), err.getvalue())

    root = logging.getLogger()
    previous = root.level
    if args.verbose:
        root.setLevel(logging.DEBUG)
    try:
        code = _dispatch(args, out, err)
    finally:
        root.setLevel(previous)
    return CommandResult(code, out.getvalue(), err.getvalue())


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point"""
    result = run_command(argv)
    sys.stdout.write(result.output)
    sys.stderr.write(result.errors)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
