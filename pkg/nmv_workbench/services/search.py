"""Enumeration of finite NMV-algebras and counterexample search

Algebras are produced in normal form: zero at index 0, one at index n-1.
The negation table is fixed first; each negation table is an independent
partition of the search space. Within a partition the free cells of the
upper triangle of ⊕ are filled row by row, rejecting a partial table as
soon as a placed instance of x ≤ x⊕y or of the Łukasiewicz axiom fails.
"""

import itertools
import multiprocessing as mp
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config import HARD_MAX_SIZE, MIN_SIZE, SearchSettings, get_logger, load_settings
from ..models.errors import UnknownPredicate, UnsupportedSize
from ..models.schemas import Carrier, Counterexample, EnumerationTask
from .nmv import NmvAlgebra, check_nmv_axioms, check_sai, is_associative
from .residuation import adjointness_mismatches, check_crp
from .tables import FiniteBinaryOp, FiniteUnaryOp

logger = get_logger(__name__)

UNSET = -1


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Permutation-minimal serialization of (¬, ⊕)"""
    data: bytes

    def hex(self) -> str:
        return self.data.hex()


def _serialize(neg: np.ndarray, oplus: np.ndarray) -> bytes:
    return np.concatenate([neg, oplus.ravel()]).astype(np.uint8).tobytes()


def permute(alg: NmvAlgebra, perm: Sequence[int]) -> NmvAlgebra:
    """Relabel element i as perm[i]"""
    p = np.asarray(perm, dtype=np.intp)
    inv = np.argsort(p)
    return NmvAlgebra(
        carrier=Carrier(names=alg.carrier.labels(inv)),
        oplus=FiniteBinaryOp(p[alg.oplus.table[np.ix_(inv, inv)]]),
        neg=FiniteUnaryOp(p[alg.neg.table[inv]]),
        zero=int(p[alg.zero]),
    )


def _normalizing_perm(alg: NmvAlgebra) -> List[int]:
    n = alg.size
    middle = [x for x in range(n) if x not in (alg.zero, alg.one)]
    perm = [0] * n
    perm[alg.zero] = 0
    perm[alg.one] = n - 1
    for position, x in enumerate(middle, start=1):
        perm[x] = position
    return perm


def normalize(alg: NmvAlgebra) -> NmvAlgebra:
    """Isomorphic copy with zero at index 0 and one at index n-1"""
    return permute(alg, _normalizing_perm(alg))


def canonical_form(alg: NmvAlgebra) -> CanonicalForm:
    """Minimum over all relabelings fixing 0 and 1; equal iff isomorphic"""
    n = alg.size
    base = np.asarray(_normalizing_perm(alg), dtype=np.intp)
    neg, oplus = alg.neg.table, alg.oplus.table
    best = None
    for middle in itertools.permutations(range(1, n - 1)):
        relabel = np.array((0,) + middle + (n - 1,), dtype=np.intp)
        p = relabel[base]
        inv = np.argsort(p)
        data = _serialize(p[neg[inv]], p[oplus[np.ix_(inv, inv)]])
        if best is None or data < best:
            best = data
    return CanonicalForm(best)


def raw_form(alg: NmvAlgebra) -> bytes:
    return _serialize(alg.neg.table, alg.oplus.table)


def is_isomorphic(left: NmvAlgebra, right: NmvAlgebra) -> bool:
    return left.size == right.size and canonical_form(left) == canonical_form(right)


def _middle_involutions(elements: Tuple[int, ...]) -> Iterator[Dict[int, int]]:
    if not elements:
        yield {}
        return
    first, rest = elements[0], elements[1:]
    for tail in _middle_involutions(rest):
        yield {first: first, **tail}
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in _middle_involutions(remaining):
            yield {first: partner, partner: first, **tail}


def negation_tables(size: int) -> List[Tuple[int, ...]]:
    """Involutions with ¬0 = n-1, sorted"""
    top = size - 1
    tables = []
    for mapping in _middle_involutions(tuple(range(1, top))):
        tables.append((top,) + tuple(mapping[x] for x in range(1, top)) + (0,))
    return sorted(tables)


def free_cells(size: int) -> List[Tuple[int, int]]:
    """Upper-triangle cells of ⊕ not fixed by x⊕0 = x and x⊕1 = 1"""
    return [(i, j) for i in range(1, size - 1) for j in range(i, size - 1)]


def _unit_table(size: int) -> List[List[int]]:
    top = size - 1
    t = [[UNSET] * size for _ in range(size)]
    for x in range(size):
        t[x][0] = t[0][x] = x
        t[x][top] = t[top][x] = top
    return t


def _partially_consistent(t: List[List[int]], neg: Sequence[int], size: int) -> bool:
    top = size - 1
    for x in range(size):
        row, negrow = t[x], t[neg[x]]
        for y in range(size):
            s = row[y]
            if s != UNSET:
                bound = negrow[s]
                if bound != UNSET and bound != top:
                    return False
            # Łukasiewicz axiom once both joins are placed
            left = negrow[y]
            right = t[neg[y]][x]
            if left != UNSET and right != UNSET:
                lj = t[neg[left]][y]
                rj = t[neg[right]][x]
                if lj != UNSET and rj != UNSET and lj != rj:
                    return False
    return True


def _search_partition(args: Tuple[int, Tuple[int, ...], int]) -> Tuple[List[List[List[int]]], int]:
    """All ⊕ tables for one negation table; returns (tables, leaves visited)"""
    size, neg, progress_every = args
    cells = free_cells(size)
    t = _unit_table(size)
    found: List[List[List[int]]] = []
    leaves = 0

    def extend(k: int) -> None:
        nonlocal leaves
        if k == len(cells):
            leaves += 1
            if progress_every and leaves % progress_every == 0:
                logger.info(f"size {size}, ¬={list(neg)}: {leaves} leaves, {len(found)} found")
            if check_nmv_axioms(t, neg, 0).passed:
                found.append([row[:] for row in t])
            return
        i, j = cells[k]
        for value in range(size):
            t[i][j] = t[j][i] = value
            if _partially_consistent(t, neg, size):
                extend(k + 1)
        t[i][j] = t[j][i] = UNSET

    extend(0)
    return found, leaves


def _check_size(task: EnumerationTask, settings: SearchSettings) -> None:
    if not MIN_SIZE <= task.size <= HARD_MAX_SIZE:
        raise UnsupportedSize(f"size must be between {MIN_SIZE} and {HARD_MAX_SIZE}, got {task.size}")
    if task.size > settings.max_size and not task.allow_large:
        raise UnsupportedSize(
            f"size {task.size} exceeds the default limit {settings.max_size}; use --allow-large to opt in")


def _matches_kind(alg: NmvAlgebra, kind: str) -> bool:
    if kind == "nmv":
        return True
    if not check_sai(alg):
        return False
    if kind == "crp":
        ops = alg.derived
        return check_crp(alg.order, ops.otimes, ops.imp, alg.zero, alg.one).passed
    return True


def _labeled_algebras(task: EnumerationTask, settings: SearchSettings) -> Iterator[NmvAlgebra]:
    size = task.size
    partitions = [(size, neg, settings.progress_every) for neg in negation_tables(size)]
    carrier = Carrier.standard(size)

    if task.workers > 1 and len(partitions) > 1:
        with mp.Pool(min(task.workers, len(partitions))) as pool:
            results = pool.map(_search_partition, partitions)
    else:
        results = [_search_partition(p) for p in partitions]

    total_leaves = 0
    for (_, neg, _), (tables, leaves) in zip(partitions, results):
        total_leaves += leaves
        for table in tables:
            # re-validated on emission by the constructor
            yield NmvAlgebra(carrier, FiniteBinaryOp(table), FiniteUnaryOp(neg), 0)
    logger.debug(f"size {size}: {total_leaves} complete tables examined")


def iter_algebras(task: EnumerationTask, settings: Optional[SearchSettings] = None) -> Iterator[NmvAlgebra]:
    """Stream the algebras of a task in canonical-form order"""
    settings = settings or load_settings()
    _check_size(task, settings)
    predicate = PREDICATES[task.predicate] if task.predicate else None

    keyed = {}
    for alg in _labeled_algebras(task, settings):
        if not _matches_kind(alg, task.kind):
            continue
        if predicate is not None and not predicate(alg):
            continue
        form = canonical_form(alg)
        key = form if task.up_to_iso else (form, raw_form(alg))
        if key not in keyed or raw_form(alg) < raw_form(keyed[key]):
            keyed[key] = alg

    logger.info(f"Enumerated {len(keyed)} algebra(s) of size {task.size} (kind={task.kind}, "
                f"up_to_iso={task.up_to_iso})")
    for key in sorted(keyed):
        yield keyed[key]


@dataclass
class Enumeration:
    task: EnumerationTask
    algebras: List[NmvAlgebra] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.algebras)


def enumerate_algebras(task: EnumerationTask, settings: Optional[SearchSettings] = None) -> Enumeration:
    return Enumeration(task=task, algebras=list(iter_algebras(task, settings)))


def brute_force_count(size: int, kind: str = "nmv") -> int:
    """Unpruned oracle: every involution with ¬0 = n-1 and every commutative ⊕
    with the unit rows fixed, each checked in full"""
    top = size - 1
    cells = free_cells(size)
    count = 0
    for perm in itertools.permutations(range(size)):
        if perm[0] != top or any(perm[perm[x]] != x for x in range(size)):
            continue
        for values in itertools.product(range(size), repeat=len(cells)):
            t = np.zeros((size, size), dtype=np.intp)
            t[:, 0] = t[0, :] = np.arange(size)
            t[:, top] = t[top, :] = top
            for (i, j), v in zip(cells, values):
                t[i, j] = t[j, i] = v
            if not check_nmv_axioms(t, perm, 0).passed:
                continue
            if kind != "nmv":
                alg = NmvAlgebra(Carrier.standard(size), FiniteBinaryOp(t), FiniteUnaryOp(perm), 0)
                if not _matches_kind(alg, kind):
                    continue
            count += 1
    return count


def _non_antitone_section(alg: NmvAlgebra) -> List[Tuple[int, ...]]:
    result = check_sai(alg)
    return [] if result else [result.witness]


def _adjointness_failure(alg: NmvAlgebra) -> List[Tuple[int, ...]]:
    ops = alg.derived
    return adjointness_mismatches(alg.order, ops.otimes, ops.imp)


def _non_associative(alg: NmvAlgebra) -> List[Tuple[int, ...]]:
    result = is_associative(alg.oplus)
    return [] if result else [result.witness]


WITNESSES: Dict[str, Callable[[NmvAlgebra], List[Tuple[int, ...]]]] = {
    "non-antitone-section": _non_antitone_section,
    "adjointness-failure": _adjointness_failure,
    "non-associative": _non_associative,
}

PREDICATES: Dict[str, Callable[[NmvAlgebra], bool]] = {
    name: (lambda alg, find=find: bool(find(alg))) for name, find in WITNESSES.items()
}


def witnesses_for(alg: NmvAlgebra, predicate: str) -> List[Tuple[int, ...]]:
    if predicate not in WITNESSES:
        raise UnknownPredicate(f"unknown predicate {predicate!r}; expected one of {', '.join(WITNESSES)}")
    return WITNESSES[predicate](alg)


def find_counterexamples(task: EnumerationTask, predicate: str,
                         algebras: Optional[Sequence[NmvAlgebra]] = None) -> List[Counterexample]:
    """Algebras satisfying the predicate, each with its witnesses

    When algebras is given those are scanned instead of enumerating the task.
    """
    if predicate not in WITNESSES:
        raise UnknownPredicate(f"unknown predicate {predicate!r}; expected one of {', '.join(WITNESSES)}")
    if algebras is None:
        algebras = iter_algebras(task.model_copy(update={"predicate": None}))

    found = []
    for alg in algebras:
        witnesses = witnesses_for(alg, predicate)
        if witnesses:
            found.append(Counterexample(predicate=predicate, algebra=alg, witnesses=witnesses))
    logger.info(f"{predicate}: {len(found)} counterexample(s) of size {task.size}")
    return found
