import numpy as np
import pytest

from nmv_workbench.models.errors import LawViolation, NotAntisymmetric, NotDirected, NotReflexive, NotTransitive
from nmv_workbench.services.tables import (
    Directoid,
    FiniteBinaryOp,
    FiniteUnaryOp,
    build_directoid,
    has_neutral,
    is_antitone_involution,
    is_commutative,
    is_monotone,
    order_from_directoid,
    upper_bounds,
    validate_partial_order,
)

ZERO, A, B, C, D, ONE = range(6)


def chain(n):
    x, y = np.indices((n, n))
    return validate_partial_order(x <= y)


def test_tables_reject_out_of_range_entries():
    with pytest.raises(ValueError):
        FiniteBinaryOp([[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        FiniteUnaryOp([0, -1])


def test_tables_are_read_only():
    op = FiniteBinaryOp([[0, 1], [1, 1]])
    with pytest.raises(ValueError):
        op.table[0, 0] = 1


def test_chain_is_bounded():
    order = chain(3)
    assert order.least == 0
    assert order.greatest == 2
    assert order.is_bounded
    assert len(order.pairs()) == 6


def test_not_reflexive():
    with pytest.raises(NotReflexive) as exc:
        validate_partial_order([[True, False], [False, False]])
    assert exc.value.witness == (1, 1)


def test_not_antisymmetric():
    with pytest.raises(NotAntisymmetric) as exc:
        validate_partial_order([[True, True], [True, True]])
    assert exc.value.witness == (0, 1)


def test_not_transitive():
    leq = np.eye(3, dtype=bool)
    leq[0, 1] = leq[1, 2] = True
    with pytest.raises(NotTransitive) as exc:
        validate_partial_order(leq)
    assert exc.value.witness == (0, 1, 2)


def test_bowtie_order(bowtie):
    order = bowtie.order
    assert len(order.pairs()) == 19
    assert not order.comparable(A, B)
    assert not order.comparable(C, D)
    assert order.up_set(A) == {A, C, D, ONE}
    assert upper_bounds(order, A, B) == {C, D, ONE}


@pytest.mark.parametrize("name", ["bowtie", "chain5"])
def test_upper_bounds_symmetric(name, bowtie):
    order = bowtie.order if name == "bowtie" else chain(5)
    for x in range(order.size):
        for y in range(order.size):
            bounds = upper_bounds(order, x, y)
            assert bounds == upper_bounds(order, y, x)
            assert bounds == order.up_set(x) & order.up_set(y)
            assert order.greatest in bounds


def test_directoid_from_bowtie_order(bowtie):
    directoid = build_directoid(bowtie.order)
    assert directoid.join(A, B) == C
    assert directoid.join(B, A) == C
    assert directoid.join(C, D) == ONE
    assert directoid.join(A, C) == C
    assert directoid.to_order() == bowtie.order


def test_directoid_custom_choice(bowtie):
    def largest(order, x, y, bounds):
        return max(bounds)

    directoid = build_directoid(bowtie.order, choice=largest)
    assert directoid.join(A, B) == ONE
    assert order_from_directoid(directoid.join) == bowtie.order


def test_directoid_choice_must_be_upper_bound(bowtie):
    with pytest.raises(ValueError):
        build_directoid(bowtie.order, choice=lambda order, x, y, bounds: ZERO)


def test_not_directed():
    with pytest.raises(NotDirected) as exc:
        build_directoid(validate_partial_order(np.eye(2, dtype=bool)))
    assert exc.value.witness == (0, 1)


def test_directoid_constructor_validates():
    # 0⊔1 = 0 but 1⊔0 = 1
    with pytest.raises(LawViolation) as exc:
        Directoid(FiniteBinaryOp([[0, 0], [1, 1]]))
    assert "directoid.commutative" in exc.value.report.law_ids()
    assert exc.value.report.get("directoid.commutative").witness == (0, 1)


def test_bowtie_product_is_not_monotone(bowtie):
    result = is_monotone(bowtie.derived.otimes, bowtie.order)
    assert not result
    assert result.witness == (A, D, C)


def test_sum_is_monotone_on_chain(chain3):
    assert is_monotone(chain3.oplus, chain3.order)


def test_antitone_involution(bowtie):
    assert is_antitone_involution(bowtie.neg, bowtie.order)


def test_not_an_involution():
    result = is_antitone_involution(FiniteUnaryOp([1, 1]), chain(2))
    assert not result
    assert result.witness == (0,)


def test_involution_not_antitone():
    result = is_antitone_involution(FiniteUnaryOp([0, 1]), chain(2))
    assert not result
    assert result.witness == (0, 1)


def test_commutative_and_neutral(bowtie):
    assert is_commutative(bowtie.oplus)
    assert has_neutral(bowtie.oplus, ZERO)
    assert has_neutral(bowtie.derived.otimes, ONE)
    result = has_neutral(bowtie.oplus, ONE)
    assert not result
    assert result.witness == (ZERO,)
    assert not is_commutative(FiniteBinaryOp([[0, 0], [1, 1]]))
