"""Conversions between NMV-algebras, conditionally residuated posets,
involutive posets with product and residuated posets

Every conversion re-verifies its hypotheses on the tables it receives and
verifies its conclusions on the tables it produces.
"""

from dataclasses import dataclass
from typing import Tuple

from ..config import get_logger
from ..models.errors import ConsistencyError, HypothesisError, LawViolation
from ..models.schemas import Carrier, CheckReport, PropertyFlags
from .laws import Verdict, from_verdict, grid, implies, scan, verdict
from .nmv import NmvAlgebra, check_nmv_axioms, check_sai
from .residuation import CondResPoset, ResiduatedPoset, check_crp, check_properties
from .tables import (
    FiniteBinaryOp,
    FiniteUnaryOp,
    PartialOrder,
    is_antitone_involution,
    is_commutative,
    is_monotone,
)

logger = get_logger(__name__)

IPP = "bounded involutive poset with monotone product"


def _hypothesis_name(law_id: str) -> str:
    return law_id.split(".", 1)[1]


def _raise_for(report: CheckReport) -> None:
    failures = report.failures()
    if failures:
        raise HypothesisError([_hypothesis_name(r.law_id) for r in failures], failures[0].witness)


def check_ipp_hypotheses(order: PartialOrder, neg: FiniteUnaryOp, otimes: FiniteBinaryOp,
                         zero: int, one: int, subject: str = IPP) -> CheckReport:
    """Bounds, antitone involution, commutative monotone product with unit 1,
    and the residuation condition x ≤ ¬(¬(x⊗y)⊗y)"""
    n = order.size
    times = otimes
    bounded = Verdict(order.least == zero and order.greatest == one,
                      None if order.least == zero and order.greatest == one else (zero, one))
    return CheckReport(subject=subject, results=[
        from_verdict("ipp.bounded", "bounded by 0 and 1", f"{IPP}: order", bounded),
        from_verdict("ipp.antitone-involution", "¬ is an antitone involution", f"{IPP}: negation",
                     is_antitone_involution(neg, order)),
        from_verdict("ipp.commutative", "x⊗y = y⊗x", f"{IPP}: product", is_commutative(otimes)),
        from_verdict("ipp.monotone", "x ≤ y implies x⊗z ≤ y⊗z", f"{IPP}: product",
                     is_monotone(otimes, order)),
        from_verdict("ipp.neutral-one", "x⊗1 = x", f"{IPP}: product",
                     scan(n, 1, lambda x: times(x, one) == x)),
        from_verdict("ipp.residuation-condition", "x ≤ ¬(¬(x⊗y)⊗y)", f"{IPP}: residuation condition",
                     scan(n, 2, lambda x, y: order(x, neg(times(neg(times(x, y)), y))))),
    ])


@dataclass(frozen=True)
class InvolutivePosetWithProduct:
    """(P, ≤, ⊗, ¬, 0, 1): bounded poset, antitone involution ¬, commutative
    monotone ⊗ with x⊗1 = x

    The residuation condition is not required; see residuation_condition.
    """
    carrier: Carrier
    order: PartialOrder
    neg: FiniteUnaryOp
    otimes: FiniteBinaryOp
    zero: int
    one: int

    def __post_init__(self):
        if not (self.carrier.size == self.order.size == self.neg.size == self.otimes.size):
            raise ValueError("carrier, order and tables disagree on the number of elements")
        report = self.hypotheses()
        structural = CheckReport(subject=report.subject, results=[
            r for r in report.results if r.law_id != "ipp.residuation-condition"])
        _raise_for(structural)

    @property
    def size(self) -> int:
        return self.carrier.size

    def hypotheses(self) -> CheckReport:
        return check_ipp_hypotheses(self.order, self.neg, self.otimes, self.zero, self.one)

    @property
    def residuation_condition(self) -> bool:
        return self.hypotheses().get("ipp.residuation-condition").passed


def nmv_to_crp(alg: NmvAlgebra) -> Tuple[CondResPoset, PropertyFlags]:
    """(A, ≤, ⊗, →, 0, 1) of an NMV-algebra with SAI, with its five optional laws"""
    axioms = check_nmv_axioms(alg.oplus, alg.neg, alg.zero)
    _raise_for(axioms)
    sai = check_sai(alg)
    if not sai:
        raise HypothesisError(["sai"], sai.witness)

    ops = alg.derived
    try:
        crp = CondResPoset(alg.carrier, alg.order, ops.otimes, ops.imp, alg.zero, alg.one)
    except LawViolation as e:
        raise ConsistencyError(f"term structure of an NMV-algebra with SAI failed: {e}") from e

    flags = check_properties(crp)
    if not flags.all_hold:
        raise ConsistencyError(f"term structure lacks {', '.join(flags.missing())}")
    logger.info(f"Converted {alg.size}-element NMV-algebra to a conditionally residuated poset")
    return crp, flags


def check_weak_exchange(crp: CondResPoset) -> Verdict:
    """¬x→y = ¬y→x"""
    imp, neg = crp.imp, crp.neg
    return scan(crp.size, 2, lambda x, y: imp(neg(x), y) == imp(neg(y), x))


def crp_to_nmv_verified(crp: CondResPoset) -> Tuple[NmvAlgebra, CheckReport]:
    """x⊕y := ¬x→y, plus the verified list of conclusions

    The conclusions are weak exchange, the NMV axioms for ⊕ and ¬, and
    agreement of the induced order with the order of the poset.
    """
    _raise_for(check_crp(crp.order, crp.otimes, crp.imp, crp.zero, crp.one))
    flags = check_properties(crp)
    if not flags.all_hold:
        raise HypothesisError(flags.missing())

    x, y = grid(crp.size, 2)
    neg = crp.neg
    oplus = FiniteBinaryOp(crp.imp(neg(x), y))

    conclusions = CheckReport(results=[
        from_verdict("nmv.weak-exchange", "¬x→y = ¬y→x", "conditionally residuated poset",
                     check_weak_exchange(crp)),
    ]).merge(check_nmv_axioms(oplus, neg, crp.zero), subject="NMV-algebra (conclusions)")
    if not conclusions.passed:
        failed = ", ".join(f.law_id for f in conclusions.failures())
        raise ConsistencyError(f"⊕ := ¬x→y is not an NMV-algebra: {failed}")

    alg = NmvAlgebra(crp.carrier, oplus, neg, crp.zero)
    same_order = verdict(alg.order.leq == crp.order.leq)
    conclusions = conclusions.merge(CheckReport(results=[
        from_verdict("nmv.same-order", "x→y = 1 iff x ≤ y in the poset", "induced order", same_order),
    ]))
    if not same_order:
        raise ConsistencyError(f"induced order differs from the order of the poset at {same_order.witness}")
    logger.info(f"Converted {crp.size}-element conditionally residuated poset to an NMV-algebra")
    return alg, conclusions


def crp_to_nmv(crp: CondResPoset) -> NmvAlgebra:
    """x⊕y := ¬x→y on a conditionally residuated poset with all five optional laws"""
    alg, _ = crp_to_nmv_verified(crp)
    return alg


def poset_to_residuated(p: InvolutivePosetWithProduct) -> ResiduatedPoset:
    """x→y := ¬(x⊗¬y); needs every hypothesis including the residuation condition"""
    _raise_for(p.hypotheses())

    x, y = grid(p.size, 2)
    neg, times = p.neg, p.otimes
    imp = FiniteBinaryOp(neg(times(x, neg(y))))
    try:
        residuated = ResiduatedPoset(p.carrier, p.order, times, imp, p.zero, p.one)
    except LawViolation as e:
        raise ConsistencyError(f"adjointness fails for x→y := ¬(x⊗¬y): {e}") from e

    if not residuated.integral:
        raise ConsistencyError("resulting residuated poset is not integral")
    if residuated.neg != neg:
        raise ConsistencyError("x→0 differs from ¬x")
    logger.info(f"Converted {p.size}-element involutive poset to a residuated poset")
    return residuated


def residuated_to_poset(r: ResiduatedPoset) -> Tuple[InvolutivePosetWithProduct, CheckReport]:
    """(R, ≤, ⊗, ¬, 0, 1) with ¬x := x→0, plus the verified list of conclusions"""
    n = r.size
    neg, times, imp, order = r.neg, r.otimes, r.imp, r.order

    integral = Verdict(r.integral, None if r.integral else (r.one,))
    hypotheses = CheckReport(subject="residuated poset hypotheses", results=[
        from_verdict("hyp.integral", "1 is the greatest element", "residuated poset", integral),
        from_verdict("hyp.implication-product", "x→y = ¬(x⊗¬y)", "residuated poset",
                     scan(n, 2, lambda x, y: imp(x, y) == neg(times(x, neg(y))))),
        from_verdict("hyp.double-negation", "¬¬x = x", "residuated poset",
                     scan(n, 1, lambda x: neg(neg(x)) == x)),
        from_verdict("hyp.antitone-negation", "x ≤ y implies ¬y ≤ ¬x", "residuated poset",
                     scan(n, 2, lambda x, y: implies(order(x, y), order(neg(y), neg(x))))),
    ])
    _raise_for(hypotheses)

    conclusions = check_ipp_hypotheses(order, neg, times, r.zero, r.one).merge(
        CheckReport(results=[
            from_verdict("ipp.absorbing-zero", "x⊗0 = 0", f"{IPP}: product",
                         scan(n, 1, lambda x: times(x, r.zero) == r.zero)),
        ]),
        subject=f"{IPP} (conclusions)",
    )
    if not conclusions.passed:
        failed = ", ".join(f.law_id for f in conclusions.failures())
        raise ConsistencyError(f"conclusions fail on a residuated poset meeting the hypotheses: {failed}")

    p = InvolutivePosetWithProduct(r.carrier, order, neg, times, r.zero, r.one)
    logger.info(f"Converted {n}-element residuated poset to an involutive poset with product")
    return p, conclusions
