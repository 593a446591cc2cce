"""derive: print the term operations of an NMV-algebra"""

from typing import TextIO

from ..models.errors import UsageError
from ..services.algebra_file import load_structure
from ..services.reports import DERIVED_SYMBOLS, render_derived, render_derived_json
from .common import EXIT_OK, read_document

OPS = tuple(DERIVED_SYMBOLS) + ("sections",)


def _parse_ops(value: str):
    ops = [op.strip() for op in value.split(",") if op.strip()]
    unknown = [op for op in ops if op not in OPS]
    if unknown:
        raise UsageError(f"unknown operation(s) {', '.join(unknown)}; choose from {', '.join(OPS)}")
    return ops


def register(subparsers) -> None:
    parser = subparsers.add_parser("derive", help="Print ⊗, →, ⊔, ⊓ and the section involutions")
    parser.add_argument("file", help="NMV algebra file")
    parser.add_argument("--ops", default=",".join(OPS),
                        help=f"Comma separated subset of {','.join(OPS)}")
    parser.add_argument("--json", action="store_true", help="Print label tables as JSON")
    parser.set_defaults(handler=run)


def run(args, out: TextIO) -> int:
    ops = _parse_ops(args.ops)
    alg = load_structure(read_document(args.file, ("nmv",)))
    out.write((render_derived_json(alg, ops) if args.json else render_derived(alg, ops)) + "\n")
    return EXIT_OK
