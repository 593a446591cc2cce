"""Operation tables, partial orders and directoids over an indexed carrier"""

from dataclasses import dataclass
from typing import Callable, FrozenSet, List, Optional, Tuple

import numpy as np

from ..config import get_logger
from ..models.errors import LawViolation, NotAntisymmetric, NotDirected, NotReflexive, NotTransitive
from ..models.schemas import CheckReport
from .laws import Law, Verdict, evaluate, first_violation, implies, scan

logger = get_logger(__name__)


def _frozen_indices(table, ndim: int) -> np.ndarray:
    arr = np.array(table, dtype=np.intp)
    if arr.ndim != ndim or arr.size == 0:
        raise ValueError(f"expected a non-empty {ndim}-dimensional table, got shape {arr.shape}")
    size = arr.shape[0]
    if any(extent != size for extent in arr.shape):
        raise ValueError(f"table of shape {arr.shape} is not square")
    if arr.min() < 0 or arr.max() >= size:
        raise ValueError(f"table entries must be element indices below {size}")
    arr.setflags(write=False)
    return arr


class FiniteUnaryOp:
    """Total unary operation given by its table"""

    __slots__ = ("table",)

    def __init__(self, table):
        self.table = _frozen_indices(table, 1)

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __call__(self, x):
        return self.table[x]

    def tolist(self) -> List[int]:
        return self.table.tolist()

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteUnaryOp) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((1, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteUnaryOp({self.tolist()})"


class FiniteBinaryOp:
    """Total binary operation given by its size x size table"""

    __slots__ = ("table",)

    def __init__(self, table):
        self.table = _frozen_indices(table, 2)

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __call__(self, x, y):
        return self.table[x, y]

    def tolist(self) -> List[List[int]]:
        return self.table.tolist()

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteBinaryOp) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((2, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteBinaryOp({self.tolist()})"


@dataclass(frozen=True, eq=False)
class PartialOrder:
    """Validated order; build it with validate_partial_order"""
    leq: np.ndarray
    least: Optional[int] = None
    greatest: Optional[int] = None

    @property
    def size(self) -> int:
        return self.leq.shape[0]

    @property
    def is_bounded(self) -> bool:
        return self.least is not None and self.greatest is not None

    def __call__(self, x, y):
        return self.leq[x, y]

    def comparable(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y] or self.leq[y, x])

    def up_set(self, x: int) -> FrozenSet[int]:
        return frozenset(np.flatnonzero(self.leq[x]).tolist())

    def pairs(self) -> List[Tuple[int, int]]:
        return [(int(x), int(y)) for x, y in np.argwhere(self.leq)]

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialOrder) and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash(self.leq.tobytes())

    def __repr__(self) -> str:
        return f"PartialOrder(pairs={len(self.pairs())}, least={self.least}, greatest={self.greatest})"


def validate_partial_order(leq) -> PartialOrder:
    """Check the order axioms and detect bounds

    Raises NotReflexive, NotAntisymmetric or NotTransitive with the first
    offending pair or triple.
    """
    arr = np.array(leq, dtype=bool)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.size == 0:
        raise ValueError(f"order matrix must be square, got shape {arr.shape}")
    n = arr.shape[0]

    missing = np.flatnonzero(~np.diagonal(arr))
    if len(missing):
        x = int(missing[0])
        raise NotReflexive((x, x))

    witness = first_violation(~(arr & arr.T & ~np.eye(n, dtype=bool)))
    if witness is not None:
        raise NotAntisymmetric(witness)

    x, y, z = np.indices((n, n, n))
    witness = first_violation(implies(arr[x, y] & arr[y, z], arr[x, z]))
    if witness is not None:
        raise NotTransitive(witness)

    arr.setflags(write=False)
    bottoms = np.flatnonzero(arr.all(axis=1))
    tops = np.flatnonzero(arr.all(axis=0))
    return PartialOrder(
        leq=arr,
        least=int(bottoms[0]) if len(bottoms) else None,
        greatest=int(tops[0]) if len(tops) else None,
    )


def upper_bounds(order: PartialOrder, x: int, y: int) -> FrozenSet[int]:
    """U(x, y): the common upper bounds of x and y"""
    return frozenset(np.flatnonzero(order.leq[x] & order.leq[y]).tolist())


Choice = Callable[[PartialOrder, int, int, FrozenSet[int]], int]


def minimal_upper_bound(order: PartialOrder, x: int, y: int, bounds: FrozenSet[int]) -> int:
    """Smallest-index minimal element of U(x, y)"""
    minimal = [b for b in sorted(bounds)
               if not any(order.leq[c, b] and c != b for c in bounds)]
    return minimal[0]


def check_directoid(join: FiniteBinaryOp, subject: str = "directoid") -> CheckReport:
    laws = [
        Law("directoid.idempotent", "x⊔x = x", "directoid identities", 1,
            lambda x: join(x, x) == x),
        Law("directoid.commutative", "x⊔y = y⊔x", "directoid identities", 2,
            lambda x, y: join(x, y) == join(y, x)),
        Law("directoid.absorption", "x⊔((x⊔y)⊔z) = (x⊔y)⊔z", "directoid identities", 3,
            lambda x, y, z: join(x, join(join(x, y), z)) == join(join(x, y), z)),
    ]
    return evaluate(laws, join.size, subject)


@dataclass(frozen=True)
class Directoid:
    join: FiniteBinaryOp

    def __post_init__(self):
        report = check_directoid(self.join)
        if not report.passed:
            raise LawViolation(report)

    def to_order(self) -> PartialOrder:
        return order_from_directoid(self.join)


def order_from_directoid(join: FiniteBinaryOp) -> PartialOrder:
    """x <= y iff x⊔y = y"""
    return validate_partial_order(join.table == np.arange(join.size)[np.newaxis, :])


def build_directoid(order: PartialOrder, choice: Optional[Choice] = None) -> Directoid:
    """Turn a directed poset into a directoid

    Comparable pairs join to their maximum; for an incomparable pair the
    choice rule picks one fixed element of U(x, y), used for both orders of
    the pair.
    """
    choice = choice or minimal_upper_bound
    n = order.size
    table = np.empty((n, n), dtype=np.intp)
    for x in range(n):
        for y in range(x, n):
            if order.leq[x, y]:
                value = y
            elif order.leq[y, x]:
                value = x
            else:
                bounds = upper_bounds(order, x, y)
                if not bounds:
                    raise NotDirected((x, y))
                value = choice(order, x, y, bounds)
                if value not in bounds:
                    raise ValueError(f"choice rule picked {value}, not an upper bound of ({x}, {y})")
            table[x, y] = table[y, x] = value
    return Directoid(FiniteBinaryOp(table))


def is_monotone(op: FiniteBinaryOp, order: PartialOrder) -> Verdict:
    """x <= y implies op(x, z) <= op(y, z); witness (x, y, z)"""
    return scan(op.size, 3, lambda x, y, z: implies(order(x, y), order(op(x, z), op(y, z))))


def is_antitone_involution(op: FiniteUnaryOp, order: PartialOrder) -> Verdict:
    """op(op(x)) = x and x <= y implies op(y) <= op(x)

    The witness is (x,) when op is not an involution and (x, y) when it is
    not antitone.
    """
    involution = scan(op.size, 1, lambda x: op(op(x)) == x)
    if not involution:
        return involution
    return scan(op.size, 2, lambda x, y: implies(order(x, y), order(op(y), op(x))))


def is_commutative(op: FiniteBinaryOp) -> Verdict:
    return scan(op.size, 2, lambda x, y: op(x, y) == op(y, x))


def has_neutral(op: FiniteBinaryOp, e: int) -> Verdict:
    """op(x, e) = x = op(e, x); witness (x,)"""
    return scan(op.size, 1, lambda x: (op(x, e) == x) & (op(e, x) == x))
