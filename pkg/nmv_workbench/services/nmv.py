"""NMV-algebras: axioms, term operations, induced order and section involutions"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import get_logger
from ..models.errors import ConsistencyError, LawViolation, OrderError, OutsideSection
from ..models.schemas import Carrier, CheckReport
from .laws import Law, Verdict, evaluate, from_verdict, grid, implies, scan
from .tables import (
    FiniteBinaryOp,
    FiniteUnaryOp,
    PartialOrder,
    check_directoid,
    validate_partial_order,
)

logger = get_logger(__name__)

AXIOMS = "NMV axioms"
IDENTITIES = "NMV term identities"
FACTS = "NMV structure facts"


def _as_ops(oplus, neg) -> Tuple[FiniteBinaryOp, FiniteUnaryOp]:
    oplus = oplus if isinstance(oplus, FiniteBinaryOp) else FiniteBinaryOp(oplus)
    neg = neg if isinstance(neg, FiniteUnaryOp) else FiniteUnaryOp(neg)
    if oplus.size != neg.size:
        raise ValueError(f"⊕ has {oplus.size} elements but ¬ has {neg.size}")
    return oplus, neg


def nmv_axiom_laws(oplus: FiniteBinaryOp, neg: FiniteUnaryOp, zero: int) -> List[Law]:
    plus = oplus
    one = neg(zero)

    def join(x, y):
        return plus(neg(plus(neg(x), y)), y)

    return [
        Law("nmv.commutative", "x⊕y = y⊕x", f"{AXIOMS}: commutativity", 2,
            lambda x, y: plus(x, y) == plus(y, x)),
        Law("nmv.zero-neutral", "x⊕0 = x", f"{AXIOMS}: zero is neutral", 1,
            lambda x: plus(x, zero) == x),
        Law("nmv.double-negation", "¬¬x = x", f"{AXIOMS}: double negation", 1,
            lambda x: neg(neg(x)) == x),
        Law("nmv.one-absorbing", "x⊕1 = 1", f"{AXIOMS}: one is absorbing", 1,
            lambda x: plus(x, one) == one),
        Law("nmv.lukasiewicz", "¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x", f"{AXIOMS}: Łukasiewicz axiom", 2,
            lambda x, y: join(x, y) == join(y, x)),
        Law("nmv.join-bound", "¬x⊕(¬(¬(¬(¬x⊕y)⊕y)⊕z)⊕z) = 1", f"{AXIOMS}: x below (x⊔y)⊔z", 3,
            lambda x, y, z: plus(neg(x), join(join(x, y), z)) == one),
        Law("nmv.sum-bound", "¬x⊕(x⊕y) = 1", f"{AXIOMS}: x below x⊕y", 2,
            lambda x, y: plus(neg(x), plus(x, y)) == one),
    ]


def check_nmv_axioms(oplus, neg, zero: int) -> CheckReport:
    """Evaluate the seven defining identities over every tuple"""
    oplus, neg = _as_ops(oplus, neg)
    return evaluate(nmv_axiom_laws(oplus, neg, zero), oplus.size, "NMV axioms")


@dataclass(frozen=True)
class DerivedOps:
    """Term operations of an NMV-algebra; x^y is x→y"""
    imp: FiniteBinaryOp
    sqcup: FiniteBinaryOp
    otimes: FiniteBinaryOp
    sqcap: FiniteBinaryOp

    def power(self, x, y):
        return self.imp(x, y)


@dataclass(frozen=True)
class SectionFamily:
    """The maps x -> x^a on each section [a, 1]

    Stored as partial maps; looking up x outside [a, 1] raises OutsideSection.
    """
    maps: Tuple[Tuple[Tuple[int, int], ...], ...]

    @classmethod
    def from_implication(cls, order: PartialOrder, imp: FiniteBinaryOp) -> "SectionFamily":
        n = order.size
        return cls(maps=tuple(
            tuple((x, int(imp(x, a))) for x in range(n) if order.leq[a, x])
            for a in range(n)
        ))

    @property
    def size(self) -> int:
        return len(self.maps)

    def section(self, a: int) -> Tuple[int, ...]:
        return tuple(x for x, _ in self.maps[a])

    def mapping(self, a: int) -> Dict[int, int]:
        return dict(self.maps[a])

    def apply(self, a: int, x: int) -> int:
        image = self.mapping(a).get(x)
        if image is None:
            raise OutsideSection(a, x)
        return image

    def rows(self) -> List[List[Optional[int]]]:
        """One row per a, None outside [a, 1]"""
        rows = []
        for a in range(self.size):
            mapping = self.mapping(a)
            rows.append([mapping.get(x) for x in range(self.size)])
        return rows


@dataclass(frozen=True)
class NmvAlgebra:
    """(A, ⊕, ¬, 0) satisfying the seven NMV axioms; 1 is ¬0"""
    carrier: Carrier
    oplus: FiniteBinaryOp
    neg: FiniteUnaryOp
    zero: int

    def __post_init__(self):
        if not (self.carrier.size == self.oplus.size == self.neg.size):
            raise ValueError("carrier and tables disagree on the number of elements")
        report = check_nmv_axioms(self.oplus, self.neg, self.zero)
        if not report.passed:
            raise LawViolation(report)

    @classmethod
    def from_tables(cls, names: Sequence[str], oplus, neg, zero: int = 0) -> "NmvAlgebra":
        return cls(Carrier(names=tuple(names)), FiniteBinaryOp(oplus), FiniteUnaryOp(neg), zero)

    @property
    def size(self) -> int:
        return self.carrier.size

    @property
    def one(self) -> int:
        return int(self.neg(self.zero))

    @cached_property
    def derived(self) -> DerivedOps:
        return _derive(self)

    @cached_property
    def order(self) -> PartialOrder:
        return induced_order(self)

    @cached_property
    def sections(self) -> SectionFamily:
        return SectionFamily.from_implication(self.order, self.derived.imp)


def _derive(alg: NmvAlgebra) -> DerivedOps:
    plus, neg = alg.oplus, alg.neg
    x, y = grid(alg.size, 2)
    imp = plus(neg(x), y)
    sqcup = imp[imp[x, y], y]
    otimes = neg(plus(neg(x), neg(y)))
    sqcap = neg(sqcup[neg(x), neg(y)])
    return DerivedOps(
        imp=FiniteBinaryOp(imp),
        sqcup=FiniteBinaryOp(sqcup),
        otimes=FiniteBinaryOp(otimes),
        sqcap=FiniteBinaryOp(sqcap),
    )


def derive_ops(alg: NmvAlgebra) -> Tuple[DerivedOps, SectionFamily]:
    """Term operation tables and the section involutions x^a = x→a on [a, 1]"""
    return alg.derived, alg.sections


def induced_order(alg: NmvAlgebra) -> PartialOrder:
    """x <= y iff x→y = 1"""
    imp = alg.derived.imp
    try:
        order = validate_partial_order(imp.table == alg.one)
    except OrderError as e:
        raise ConsistencyError(f"induced relation of a valid NMV-algebra is not an order: {e}") from e
    if order.least != alg.zero or order.greatest != alg.one:
        raise ConsistencyError("induced order is not bounded by 0 and 1")
    return order


def check_derived_identities(alg: NmvAlgebra) -> CheckReport:
    ops = alg.derived
    imp, join, times, meet = ops.imp, ops.sqcup, ops.otimes, ops.sqcap
    neg, one, zero = alg.neg, alg.one, alg.zero
    laws = [
        Law("ident.triple-implication", "((x→y)→y)→y = x→y", f"{IDENTITIES}: compatibility", 2,
            lambda x, y: imp(imp(imp(x, y), y), y) == imp(x, y)),
        Law("ident.implication-section", "x→y = (x⊔y)^y", f"{IDENTITIES}: implication via sections", 2,
            lambda x, y: imp(x, y) == ops.power(join(x, y), y)),
        Law("ident.contraposition", "x→y = ¬y→¬x", f"{IDENTITIES}: contraposition", 2,
            lambda x, y: imp(x, y) == imp(neg(y), neg(x))),
        Law("ident.product-section", "x⊗y = ¬(x⊔¬y)^¬y", f"{IDENTITIES}: product via sections", 2,
            lambda x, y: times(x, y) == neg(ops.power(join(x, neg(y)), neg(y)))),
        Law("ident.lukasiewicz", "(x→y)→y = (y→x)→x", f"{IDENTITIES}: Łukasiewicz axiom", 2,
            lambda x, y: imp(imp(x, y), y) == imp(imp(y, x), x)),
        Law("ident.one-implication", "1→x = x", f"{IDENTITIES}: one is a left unit of →", 1,
            lambda x: imp(one, x) == x),
        Law("ident.implication-zero", "x→0 = ¬x", f"{IDENTITIES}: negation via →", 1,
            lambda x: imp(x, zero) == neg(x)),
        Law("ident.product-meet", "x⊗(x→y) = x⊓y", f"{IDENTITIES}: product with implication", 2,
            lambda x, y: times(x, imp(x, y)) == meet(x, y)),
        Law("ident.weakening", "x→(y→x) = 1", f"{IDENTITIES}: weakening", 2,
            lambda x, y: imp(x, imp(y, x)) == one),
        Law("ident.join-implication", "(x⊔y)→y = x→y", f"{IDENTITIES}: join absorbed by →", 2,
            lambda x, y: imp(join(x, y), y) == imp(x, y)),
    ]
    return evaluate(laws, alg.size, "NMV term identities")


def check_structure_facts(alg: NmvAlgebra) -> CheckReport:
    """The seven structural facts every NMV-algebra enjoys"""
    ops = alg.derived
    order, one, n = alg.order, alg.one, alg.size
    imp, join, meet, plus, neg = ops.imp, ops.sqcup, ops.sqcap, alg.oplus, alg.neg

    greatest = scan(n, 1, lambda a: order(a, one))
    if greatest and order.greatest != one:
        greatest = Verdict(False, (one,))

    directoid = check_directoid(join)
    failed = directoid.failures()
    directoid_verdict = Verdict(not failed, failed[0].witness if failed else None)

    ends = scan(n, 1, lambda a: (imp(a, a) == one) & (imp(one, a) == a))
    switching = ends if not ends else scan(
        n, 2, lambda a, x: implies(order(a, x), order(a, imp(x, a)) & (imp(imp(x, a), a) == x)))

    facts = [
        ("fact.greatest-one", "(A, ≤, 1) is a poset with greatest element 1", greatest),
        ("fact.directoid", "(A, ⊔) is a commutative directoid", directoid_verdict),
        ("fact.switching", "^a is a switching involution on [a, 1]", switching),
        ("fact.sum-upper", "a, b ≤ a⊕b",
         scan(n, 2, lambda a, b: order(a, plus(a, b)) & order(b, plus(a, b)))),
        ("fact.join-upper", "a, b ≤ a⊔b",
         scan(n, 2, lambda a, b: order(a, join(a, b)) & order(b, join(a, b)))),
        ("fact.meet-lower", "a⊓b ≤ a, b",
         scan(n, 2, lambda a, b: order(meet(a, b), a) & order(meet(a, b), b))),
        ("fact.negation-below-implication", "¬a ≤ a→b",
         scan(n, 2, lambda a, b: order(neg(a), imp(a, b)))),
    ]
    return CheckReport(
        subject="NMV structure facts",
        results=[from_verdict(law_id, name, FACTS, result) for law_id, name, result in facts],
    )


def check_sai(alg: NmvAlgebra) -> Verdict:
    """Every section involution is antitone; witness (a, x, y) with a <= x <= y"""
    order, imp = alg.order, alg.derived.imp
    return scan(alg.size, 3, lambda a, x, y: implies(
        order(a, x) & order(a, y) & order(x, y),
        order(imp(y, a), imp(x, a)),
    ))


def is_associative(op: FiniteBinaryOp) -> Verdict:
    """(x·y)·z = x·(y·z) for all triples; witness (x, y, z)"""
    return scan(op.size, 3, lambda x, y, z: op(op(x, y), z) == op(x, op(y, z)))
