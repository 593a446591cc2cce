"""hasse: Graphviz export of an order"""

from typing import TextIO

from ..services.algebra_file import indexed_tables, load_structure
from ..services.reports import emit_dot
from .common import EXIT_OK, read_document, write_output


def register(subparsers) -> None:
    parser = subparsers.add_parser("hasse", help="Write the Hasse diagram as DOT")
    parser.add_argument("file", help="Algebra file; NMV files use the induced order")
    parser.add_argument("-o", "--output", help="Output .dot file (default: stdout)")
    parser.set_defaults(handler=run)


def run(args, out: TextIO) -> int:
    doc = read_document(args.file)
    if doc.kind == "nmv":
        order = load_structure(doc).order
    else:
        order = indexed_tables(doc).order
    write_output(emit_dot(order, doc.elements), out, args.output)
    return EXIT_OK
