"""Built-in algebras"""

import numpy as np

from ..models.schemas import Carrier
from .nmv import NmvAlgebra
from .tables import FiniteBinaryOp, FiniteUnaryOp, validate_partial_order
from .transforms import InvolutivePosetWithProduct

BOWTIE_LABELS = ("0", "a", "b", "c", "d", "1")

# 0 < a, b < c, d < 1 with a, b and c, d incomparable; not a lattice
BOWTIE_OPLUS = (
    ("0", "a", "b", "c", "d", "1"),
    ("a", "d", "c", "c", "1", "1"),
    ("b", "c", "d", "1", "d", "1"),
    ("c", "c", "1", "1", "1", "1"),
    ("d", "1", "d", "1", "1", "1"),
    ("1", "1", "1", "1", "1", "1"),
)
BOWTIE_NEG = ("1", "d", "c", "b", "a", "0")


def _indexed(labels, rows):
    position = {label: i for i, label in enumerate(labels)}
    return [[position[cell] for cell in row] for row in rows]


def bowtie_algebra() -> NmvAlgebra:
    """Six-element non-associative NMV-algebra whose induced order is not a lattice"""
    oplus = _indexed(BOWTIE_LABELS, BOWTIE_OPLUS)
    neg = _indexed(BOWTIE_LABELS, [BOWTIE_NEG])[0]
    return NmvAlgebra.from_tables(BOWTIE_LABELS, oplus, neg, zero=0)


def boolean_algebra() -> NmvAlgebra:
    return NmvAlgebra.from_tables(("0", "1"), [[0, 1], [1, 1]], [1, 0], zero=0)


def _chain_labels(size: int):
    if size == 3:
        return ("0", "h", "1")
    return Carrier.standard(size).names


def lukasiewicz_chain(size: int) -> NmvAlgebra:
    """MV-chain on {0, 1/(n-1), ..., 1}: x⊕y = min(1, x+y), ¬x = 1-x"""
    top = size - 1
    x, y = np.indices((size, size))
    return NmvAlgebra.from_tables(
        _chain_labels(size),
        np.minimum(top, x + y),
        top - np.arange(size),
        zero=0,
    )


def lukasiewicz_poset(size: int) -> InvolutivePosetWithProduct:
    """The same chain as an involutive poset with x⊗y = max(0, x+y-1)"""
    top = size - 1
    x, y = np.indices((size, size))
    return InvolutivePosetWithProduct(
        carrier=Carrier(names=_chain_labels(size)),
        order=validate_partial_order(x <= y),
        neg=FiniteUnaryOp(top - np.arange(size)),
        otimes=FiniteBinaryOp(np.maximum(0, x + y - top)),
        zero=0,
        one=top,
    )
