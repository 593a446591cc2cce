"""enumerate and find: exhaustive search over small NMV-algebras"""

import json
from pathlib import Path
from typing import List, Optional, TextIO

from ..config import get_logger, load_settings
from ..models.errors import UsageError
from ..models.schemas import EnumerationTask
from ..services.algebra_file import load_structure, serialize_algebra_file, structure_to_file
from ..services.nmv import NmvAlgebra
from ..services.reports import render_binary, render_unary
from ..services.search import PREDICATES, brute_force_count, canonical_form, find_counterexamples, iter_algebras
from .common import EXIT_FAILED, EXIT_OK, read_document

logger = get_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("enumerate", help="List the NMV-algebras of a given size")
    _add_task_arguments(parser)
    parser.add_argument("--sai", action="store_true", help="Shorthand for --kind nmv-sai")
    parser.add_argument("--up-to-iso", action="store_true",
                        help="Keep one algebra per isomorphism class")
    parser.add_argument("--count-only", action="store_true", help="Print only the count")
    parser.add_argument("--oracle", action="store_true",
                        help="Cross-check the labeled count against an unpruned brute-force search")
    parser.add_argument("--emit-files", metavar="DIR", help="Write each algebra to DIR as an algebra file")
    parser.set_defaults(handler=run_enumerate)

    parser = subparsers.add_parser("find", help="Search for counterexamples")
    _add_task_arguments(parser, size_required=False)
    parser.add_argument("--predicate", required=True, choices=sorted(PREDICATES),
                        help="Counterexample predicate")
    parser.add_argument("--file", help="Scan this NMV algebra file instead of enumerating")
    parser.set_defaults(handler=run_find)


def _add_task_arguments(parser, size_required: bool = True) -> None:
    parser.add_argument("--size", type=int, required=size_required, help="Number of elements")
    parser.add_argument("--kind", choices=["nmv", "nmv-sai", "crp"], default="nmv",
                        help="Which algebras to keep (default: nmv)")
    parser.add_argument("--allow-large", action="store_true",
                        help="Allow sizes above the configured limit")
    parser.add_argument("--workers", type=int, help="Worker processes (default from settings)")
    parser.add_argument("--json", action="store_true", help="JSON output")


def _task(args, up_to_iso: bool) -> EnumerationTask:
    settings = load_settings()
    workers = args.workers if args.workers is not None else settings.workers
    if workers < 1:
        raise UsageError("--workers must be at least 1")
    kind = "nmv-sai" if getattr(args, "sai", False) and args.kind == "nmv" else args.kind
    return EnumerationTask(size=args.size, kind=kind, up_to_iso=up_to_iso,
                           allow_large=args.allow_large, workers=workers)


def _render_algebra(k: int, alg: NmvAlgebra) -> str:
    return "\n".join([
        f"# {k}  {canonical_form(alg).hex()}",
        render_binary("⊕", alg.oplus, alg.carrier),
        render_unary("¬", alg.neg, alg.carrier),
    ])


def _emit_files(algebras: List[NmvAlgebra], directory: str, size: int) -> None:
    target = Path(directory)
    target.mkdir(parents=True, exist_ok=True)
    for k, alg in enumerate(algebras, start=1):
        path = target / f"size{size}-{k:03d}.nmv.json"
        path.write_text(serialize_algebra_file(structure_to_file(alg)), encoding="utf-8")
    logger.info(f"Wrote {len(algebras)} algebra file(s) to {target}")


def run_enumerate(args, out: TextIO) -> int:
    task = _task(args, args.up_to_iso)
    algebras = list(iter_algebras(task))

    oracle: Optional[int] = None
    labeled = len(algebras)
    if args.oracle:
        if task.up_to_iso:
            labeled = sum(1 for _ in iter_algebras(task.model_copy(update={"up_to_iso": False})))
        oracle = brute_force_count(task.size, task.kind)

    if args.emit_files:
        _emit_files(algebras, args.emit_files, task.size)

    if args.json:
        summary = {"size": task.size, "kind": task.kind, "up_to_iso": task.up_to_iso,
                   "count": len(algebras)}
        if oracle is not None:
            summary.update(labeled=labeled, oracle=oracle)
        if not args.count_only:
            summary["algebras"] = [structure_to_file(alg).model_dump() for alg in algebras]
        out.write(json.dumps(summary, indent=2, ensure_ascii=False) + "\n")
    else:
        if not args.count_only:
            for k, alg in enumerate(algebras, start=1):
                out.write(_render_algebra(k, alg) + "\n\n")
        out.write(f"count: {len(algebras)}\n")
        if oracle is not None:
            out.write(f"oracle: {oracle} labeled (search found {labeled})\n")

    if oracle is not None and oracle != labeled:
        logger.error(f"Search and brute force disagree for size {task.size}: {labeled} != {oracle}")
        return EXIT_FAILED
    return EXIT_OK


def run_find(args, out: TextIO) -> int:
    if args.file:
        alg = load_structure(read_document(args.file, ("nmv",)))
        task = EnumerationTask(size=alg.size, kind=args.kind)
        found = find_counterexamples(task, args.predicate, algebras=[alg])
    else:
        if args.size is None:
            raise UsageError("find needs --size or --file")
        found = find_counterexamples(_task(args, True), args.predicate)

    if args.json:
        payload = [{
            "algebra": structure_to_file(c.algebra).model_dump(),
            "witnesses": [list(c.algebra.carrier.labels(w)) for w in c.witnesses],
        } for c in found]
        out.write(json.dumps({"predicate": args.predicate, "count": len(found),
                              "counterexamples": payload}, indent=2, ensure_ascii=False) + "\n")
        return EXIT_OK

    for k, c in enumerate(found, start=1):
        out.write(_render_algebra(k, c.algebra) + "\n")
        for w in c.witnesses:
            out.write(f"  witness ({', '.join(c.algebra.carrier.labels(w))})\n")
        out.write("\n")
    out.write(f"{args.predicate}: {len(found)} counterexample(s)\n")
    return EXIT_OK
