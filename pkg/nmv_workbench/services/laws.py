"""Exhaustive law evaluation over small carriers

A law is a vectorized predicate: it receives one integer index grid per
variable (built with ``np.indices``) and returns a boolean array telling,
for every assignment, whether the law holds there. Witnesses are the first
failing assignment in lexicographic order, which is exactly the first row
of ``np.argwhere``.
"""

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Tuple

import numpy as np

from ..config import get_logger
from ..models.schemas import CheckReport, LawResult

logger = get_logger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a single predicate with its first counterexample"""
    holds: bool
    witness: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class Law:
    law_id: str
    name: str
    reference: str
    arity: int
    holds: Callable[..., np.ndarray]


def implies(premise, conclusion):
    return ~np.asarray(premise, dtype=bool) | np.asarray(conclusion, dtype=bool)


def grid(size: int, arity: int) -> Tuple[np.ndarray, ...]:
    """One index array per variable covering all size**arity assignments"""
    return tuple(np.indices((size,) * arity))


def first_violation(holds) -> Optional[Tuple[int, ...]]:
    bad = np.argwhere(~np.asarray(holds, dtype=bool))
    if len(bad) == 0:
        return None
    return tuple(int(i) for i in bad[0])


def all_violations(holds) -> list:
    return [tuple(int(i) for i in row) for row in np.argwhere(~np.asarray(holds, dtype=bool))]


def verdict(holds) -> Verdict:
    witness = first_violation(holds)
    return Verdict(holds=witness is None, witness=witness)


def scan(size: int, arity: int, predicate: Callable[..., np.ndarray]) -> Verdict:
    """Evaluate a predicate over every assignment and keep the first failure"""
    if arity == 0:
        ok = bool(predicate())
        return Verdict(holds=ok, witness=None if ok else ())
    shape = (size,) * arity
    return verdict(np.broadcast_to(predicate(*grid(size, arity)), shape))


def evaluate_law(law: Law, size: int) -> LawResult:
    result = scan(size, law.arity, law.holds)
    logger.debug(f"{law.law_id}: {'pass' if result.holds else 'fail'}")
    return LawResult(
        law_id=law.law_id,
        name=law.name,
        reference=law.reference,
        verdict="pass" if result.holds else "fail",
        witness=result.witness,
    )


def not_applicable(law: Law) -> LawResult:
    return LawResult(law_id=law.law_id, name=law.name, reference=law.reference, verdict="n/a")


def evaluate(laws: Iterable[Law], size: int, subject: str = "") -> CheckReport:
    return CheckReport(subject=subject, results=[evaluate_law(law, size) for law in laws])


def from_verdict(law_id: str, name: str, reference: str, result: Verdict) -> LawResult:
    """Turn an already computed verdict into a report entry"""
    return LawResult(
        law_id=law_id,
        name=name,
        reference=reference,
        verdict="pass" if result.holds else "fail",
        witness=None if result.holds else result.witness,
    )
