"""Conditionally residuated and residuated posets"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..config import get_logger
from ..models.errors import HypothesisError, LawViolation
from ..models.schemas import Carrier, CheckReport, PropertyFlags
from .laws import (
    Law,
    Verdict,
    all_violations,
    evaluate,
    evaluate_law,
    from_verdict,
    implies,
    not_applicable,
    scan,
)
from .nmv import NmvAlgebra, check_sai
from .tables import FiniteBinaryOp, FiniteUnaryOp, PartialOrder, has_neutral, is_commutative

logger = get_logger(__name__)

CRP = "conditionally residuated poset"
RESIDUATED = "residuated poset"
PROPERTIES = "optional laws of conditionally residuated posets"
LEMMAS = "conditional adjointness in NMV-algebras with SAI"
CONSEQUENCES = "consequences of conditional residuation"


def negation_of(imp: FiniteBinaryOp, zero: int) -> FiniteUnaryOp:
    """¬x := x→0"""
    return FiniteUnaryOp(imp.table[:, zero])


def _bounds_verdict(order: PartialOrder, zero: int, one: Optional[int]) -> Verdict:
    if order.least != zero:
        return Verdict(False, (zero,))
    if one is not None and order.greatest != one:
        return Verdict(False, (one,))
    if order.greatest is None:
        return Verdict(False, ())
    return Verdict(True)


def _groupoid_verdict(otimes: FiniteBinaryOp, one: int) -> Verdict:
    commutative = is_commutative(otimes)
    if not commutative:
        return commutative
    return has_neutral(otimes, one)


def check_crp(order: PartialOrder, otimes: FiniteBinaryOp, imp: FiniteBinaryOp,
              zero: int, one: int, subject: str = CRP) -> CheckReport:
    """Conditions (a), (b) and (c); every violated condition is reported"""
    n = order.size
    times = otimes
    neg = negation_of(imp, zero)

    bounded = _bounds_verdict(order, zero, one)
    cond_a = bounded if not bounded else scan(
        n, 2, lambda x, y: implies(order(x, y), imp(x, y) == one))

    cond_c = scan(n, 3, lambda x, y, z: (
        implies(order(times(x, y), z) & order(z, y), order(x, imp(y, z)))
        & implies(order(x, imp(y, z)) & order(neg(x), y), order(times(x, y), z))
    ))

    return CheckReport(subject=subject, results=[
        from_verdict("crp.a", "bounded poset and x ≤ y implies x→y = 1", f"{CRP}: order", cond_a),
        from_verdict("crp.b", "(P, ⊗, 1) is a commutative groupoid with neutral 1", f"{CRP}: product",
                     _groupoid_verdict(otimes, one)),
        from_verdict("crp.c", "conditional adjointness", f"{CRP}: conditional adjointness", cond_c),
    ])


def adjointness_mismatches(order: PartialOrder, otimes: FiniteBinaryOp,
                           imp: FiniteBinaryOp) -> List[Tuple[int, int, int]]:
    """Triples where x⊗y ≤ z and x ≤ y→z differ in truth value"""
    x, y, z = np.indices((order.size,) * 3)
    return all_violations(order(otimes(x, y), z) == order(x, imp(y, z)))


def check_residuated(order: PartialOrder, otimes: FiniteBinaryOp, imp: FiniteBinaryOp,
                     zero: int, one: int, integral: bool = False,
                     subject: str = RESIDUATED) -> CheckReport:
    """Bounded order, commutative groupoid with neutral 1, full adjointness

    With integral=True the report also states whether 1 is the top.
    """
    n = order.size
    results = [
        from_verdict("res.bounded", "bounded poset with least element 0", f"{RESIDUATED}: order",
                     _bounds_verdict(order, zero, None)),
        from_verdict("res.groupoid", "(P, ⊗, 1) is a commutative groupoid with neutral 1",
                     f"{RESIDUATED}: product", _groupoid_verdict(otimes, one)),
        from_verdict("res.adjointness", "x⊗y ≤ z iff x ≤ y→z", f"{RESIDUATED}: adjointness",
                     scan(n, 3, lambda x, y, z: order(otimes(x, y), z) == order(x, imp(y, z)))),
    ]
    if integral:
        top = Verdict(order.greatest == one, None if order.greatest == one else (one,))
        results.append(from_verdict("res.integral", "1 is the greatest element",
                                    f"{RESIDUATED}: integrality", top))
    return CheckReport(subject=subject, results=results)


@dataclass(frozen=True)
class CondResPoset:
    """(P, ≤, ⊗, →, 0, 1) satisfying (a), (b) and conditional adjointness"""
    carrier: Carrier
    order: PartialOrder
    otimes: FiniteBinaryOp
    imp: FiniteBinaryOp
    zero: int
    one: int

    def __post_init__(self):
        if not (self.carrier.size == self.order.size == self.otimes.size == self.imp.size):
            raise ValueError("carrier, order and tables disagree on the number of elements")
        report = check_crp(self.order, self.otimes, self.imp, self.zero, self.one)
        if not report.passed:
            raise LawViolation(report)

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def neg(self) -> FiniteUnaryOp:
        return negation_of(self.imp, self.zero)

    def as_residuated(self) -> "ResiduatedPoset":
        return ResiduatedPoset(self.carrier, self.order, self.otimes, self.imp, self.zero, self.one)


@dataclass(frozen=True)
class ResiduatedPoset:
    """(P, ≤, ⊗, →, 0, 1) with full adjointness"""
    carrier: Carrier
    order: PartialOrder
    otimes: FiniteBinaryOp
    imp: FiniteBinaryOp
    zero: int
    one: int

    def __post_init__(self):
        if not (self.carrier.size == self.order.size == self.otimes.size == self.imp.size):
            raise ValueError("carrier, order and tables disagree on the number of elements")
        report = check_residuated(self.order, self.otimes, self.imp, self.zero, self.one)
        if not report.passed:
            raise LawViolation(report)

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def neg(self) -> FiniteUnaryOp:
        return negation_of(self.imp, self.zero)

    @property
    def integral(self) -> bool:
        return self.order.greatest == self.one


def property_verdicts(crp) -> Dict[str, Verdict]:
    """Exhaustive verdicts for the five optional laws, keyed by flag name"""
    order, times, imp, neg, n = crp.order, crp.otimes, crp.imp, crp.neg, crp.size
    return {
        "weak_divisibility": scan(n, 2, lambda x, y: order(times(x, imp(x, y)), y)),
        "contraposition": scan(n, 2, lambda x, y: imp(x, y) == imp(neg(y), neg(x))),
        "double_negation": scan(n, 1, lambda x: neg(neg(x)) == x),
        "lukasiewicz": scan(n, 2, lambda x, y: imp(imp(x, y), y) == imp(imp(y, x), x)),
        "compatibility": scan(n, 2, lambda x, y: order(y, imp(x, y))
                              & (imp(imp(imp(x, y), y), y) == imp(x, y))),
    }


_PROPERTY_NAMES = {
    "weak_divisibility": "x⊗(x→y) ≤ y",
    "contraposition": "x→y = ¬y→¬x",
    "double_negation": "¬¬x = x",
    "lukasiewicz": "(x→y)→y = (y→x)→x",
    "compatibility": "y ≤ x→y and ((x→y)→y)→y = x→y",
}


def check_properties(crp: CondResPoset) -> PropertyFlags:
    verdicts = property_verdicts(crp)
    return PropertyFlags(**{name: result.holds for name, result in verdicts.items()})


def check_property_laws(crp: CondResPoset) -> CheckReport:
    """The five optional laws as a report, with witnesses"""
    return CheckReport(subject=PROPERTIES, results=[
        from_verdict(f"property.{name.replace('_', '-')}", _PROPERTY_NAMES[name],
                     f"{PROPERTIES}: {name.replace('_', ' ')}", result)
        for name, result in property_verdicts(crp).items()
    ])


def adjointness_failures(crp: CondResPoset) -> List[Tuple[int, int, int]]:
    """Exactly the triples where adjointness fails; empty iff residuated"""
    return adjointness_mismatches(crp.order, crp.otimes, crp.imp)


def check_conditional_adjointness_lemmas(alg: NmvAlgebra) -> CheckReport:
    """Conditional adjointness in both directions and its two corollaries

    Rejects algebras whose section involutions are not all antitone.
    """
    sai = check_sai(alg)
    if not sai:
        raise HypothesisError(["sai"], sai.witness)

    ops = alg.derived
    order, times, imp, join, neg = alg.order, ops.otimes, ops.imp, ops.sqcup, alg.neg

    def join_equivalence(x, y, z):
        w = join(y, z)
        u = join(x, neg(w))
        return (order(times(u, w), z) == order(u, imp(w, z))) & (imp(w, z) == imp(y, z))

    laws = [
        Law("lemma.forward", "c ≤ b and a⊗b ≤ c imply a ≤ b→c", f"{LEMMAS}: forward direction", 3,
            lambda a, b, c: implies(order(c, b) & order(times(a, b), c), order(a, imp(b, c)))),
        Law("lemma.backward", "¬a ≤ b and a ≤ b→c imply a⊗b ≤ c", f"{LEMMAS}: backward direction", 3,
            lambda a, b, c: implies(order(neg(a), b) & order(a, imp(b, c)), order(times(a, b), c))),
        Law("corollary.conditional", "¬x, z ≤ y imply (x⊗y ≤ z iff x ≤ y→z)",
            f"{LEMMAS}: both directions together", 3,
            lambda x, y, z: implies(order(neg(x), y) & order(z, y),
                                    order(times(x, y), z) == order(x, imp(y, z)))),
        Law("corollary.join", "(x⊔¬(y⊔z))⊗(y⊔z) ≤ z iff x⊔¬(y⊔z) ≤ (y⊔z)→z = y→z",
            f"{LEMMAS}: unconditional form via joins", 3, join_equivalence),
    ]
    return evaluate(laws, alg.size, LEMMAS)


def check_crp_consequences(crp: CondResPoset, flags: Optional[PropertyFlags] = None) -> CheckReport:
    """Items whose hypotheses are absent are reported n/a, not failed"""
    flags = flags or check_properties(crp)
    order, times, imp, neg = crp.order, crp.otimes, crp.imp, crp.neg
    zero, one, n = crp.zero, crp.one, crp.size

    units = Law("consequence.units", "1→x = x, x→x = 1 and ¬0 = 1", f"{CONSEQUENCES}: units", 1,
                lambda x: (imp(one, x) == x) & (imp(x, x) == one) & (neg(zero) == one))
    negation = Law("consequence.negation", "¬x⊗x = 0 and ¬1 = 0",
                   f"{CONSEQUENCES}: under double negation", 1,
                   lambda x: (times(neg(x), x) == zero) & (neg(one) == zero))
    ordering = Law("consequence.order", "x ≤ (x→y)→y, and x ≤ y iff x→y = 1",
                   f"{CONSEQUENCES}: under weak divisibility and compatibility", 2,
                   lambda x, y: order(x, imp(imp(x, y), y)) & (order(x, y) == (imp(x, y) == one)))

    results = [evaluate_law(units, n)]
    results.append(evaluate_law(negation, n) if flags.double_negation else not_applicable(negation))
    if flags.weak_divisibility and flags.compatibility:
        results.append(evaluate_law(ordering, n))
    else:
        results.append(not_applicable(ordering))
    return CheckReport(subject=CONSEQUENCES, results=results)
