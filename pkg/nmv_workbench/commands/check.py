"""check: evaluate the laws of a structure kind on an algebra file"""

from typing import TextIO

from ..config import get_logger
from ..models.schemas import CheckReport, LawResult
from ..services.algebra_file import indexed_tables
from ..services.laws import from_verdict
from ..services.nmv import (
    NmvAlgebra,
    check_derived_identities,
    check_nmv_axioms,
    check_sai,
    check_structure_facts,
)
from ..services.reports import render_report, render_report_json, to_report_document
from ..services.residuation import (
    CondResPoset,
    check_conditional_adjointness_lemmas,
    check_crp,
    check_crp_consequences,
    check_property_laws,
    check_residuated,
)
from ..services.transforms import check_ipp_hypotheses
from .common import EXIT_FAILED, EXIT_OK, read_document

logger = get_logger(__name__)

FILE_KINDS = {
    "nmv": ("nmv",),
    "sai": ("nmv",),
    "crp": ("crp", "residuated"),
    "residuated": ("crp", "residuated"),
    "ipp": ("ipp",),
}

SAI_LAW = ("sai.antitone-sections", "every x ↦ x^a is antitone on [a, 1]", "section involutions")


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="Check the laws of a structure")
    parser.add_argument("file", help="Algebra file (JSON or YAML)")
    parser.add_argument("--kind", choices=sorted(FILE_KINDS), default="nmv",
                        help="Which laws to check (default: nmv)")
    parser.add_argument("--deep", action="store_true",
                        help="Also check derived identities, optional laws and lemmas")
    parser.add_argument("--json", action="store_true", help="Print the report as JSON")
    parser.set_defaults(handler=run)


def _nmv_report(t, deep: bool, with_sai: bool) -> CheckReport:
    oplus, neg = t.binary["oplus"], t.unary["neg"]
    report = check_nmv_axioms(oplus, neg, t.zero)
    if not report.passed:
        if with_sai:
            law_id, name, reference = SAI_LAW
            report = report.merge(CheckReport(results=[
                LawResult(law_id=law_id, name=name, reference=reference, verdict="n/a")]))
        return report

    alg = NmvAlgebra(t.carrier, oplus, neg, t.zero)
    sai = check_sai(alg)
    if with_sai:
        report = report.merge(CheckReport(results=[from_verdict(*SAI_LAW, sai)]))
    if deep:
        report = report.merge(check_derived_identities(alg), check_structure_facts(alg))
        if with_sai and sai:
            report = report.merge(check_conditional_adjointness_lemmas(alg))
    return report


def _crp_report(t, deep: bool) -> CheckReport:
    otimes, imp = t.binary["otimes"], t.binary["to"]
    report = check_crp(t.order, otimes, imp, t.zero, t.one)
    if deep and report.passed:
        crp = CondResPoset(t.carrier, t.order, otimes, imp, t.zero, t.one)
        report = report.merge(check_property_laws(crp), check_crp_consequences(crp))
    return report


def build_report(kind: str, t, deep: bool = False) -> CheckReport:
    if kind in ("nmv", "sai"):
        return _nmv_report(t, deep, with_sai=kind == "sai")
    if kind == "crp":
        return _crp_report(t, deep)
    if kind == "residuated":
        return check_residuated(t.order, t.binary["otimes"], t.binary["to"], t.zero, t.one,
                                integral=deep)
    return check_ipp_hypotheses(t.order, t.unary["neg"], t.binary["otimes"], t.zero, t.one)


def run(args, out: TextIO) -> int:
    doc = read_document(args.file, FILE_KINDS[args.kind])
    t = indexed_tables(doc)
    report = build_report(args.kind, t, args.deep)
    report = CheckReport(subject=f"{args.file} ({args.kind})", results=report.results)

    document = to_report_document(report, t.carrier)
    out.write((render_report_json(document) if args.json else render_report(document)) + "\n")
    if not report.passed:
        logger.info(f"{args.file}: {len(report.failures())} law(s) failed")
        return EXIT_FAILED
    return EXIT_OK
