"""convert: move a structure across one of the four conversions"""

from typing import TextIO

from ..config import get_logger
from ..services.algebra_file import load_structure, serialize_algebra_file, structure_to_file
from ..services.reports import render_report, to_report_document
from ..services.transforms import crp_to_nmv_verified, nmv_to_crp, poset_to_residuated, residuated_to_poset
from .common import EXIT_OK, read_document, write_output

logger = get_logger(__name__)

SOURCE_KINDS = {
    "nmv-to-crp": ("nmv",),
    "crp-to-nmv": ("crp",),
    "poset-to-residuated": ("ipp",),
    "residuated-to-poset": ("residuated",),
}


def register(subparsers) -> None:
    parser = subparsers.add_parser("convert", help="Convert between structure kinds")
    parser.add_argument("file", help="Source algebra file")
    parser.add_argument("--via", required=True, choices=list(SOURCE_KINDS),
                        help="Conversion to apply")
    parser.add_argument("-o", "--output", help="Write the converted file here (default: stdout)")
    parser.set_defaults(handler=run)


def run(args, out: TextIO) -> int:
    source = load_structure(read_document(args.file, SOURCE_KINDS[args.via]))
    report = None

    if args.via == "nmv-to-crp":
        target, flags = nmv_to_crp(source)
        logger.debug(f"Optional laws on the result: {flags.model_dump()}")
    elif args.via == "crp-to-nmv":
        target, report = crp_to_nmv_verified(source)
    elif args.via == "poset-to-residuated":
        target = poset_to_residuated(source)
    else:
        target, report = residuated_to_poset(source)

    write_output(serialize_algebra_file(structure_to_file(target)), out, args.output)
    if args.output is not None:
        out.write(f"{args.file} -> {args.output} via {args.via}\n")
        if report is not None:
            out.write(render_report(to_report_document(report, target.carrier)) + "\n")
    return EXIT_OK
