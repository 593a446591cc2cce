import numpy as np
import pytest

from nmv_workbench.models.errors import HypothesisError, LawViolation
from nmv_workbench.models.schemas import Carrier, PropertyFlags
from nmv_workbench.services import residuation
from nmv_workbench.services.laws import Verdict
from nmv_workbench.services.residuation import (
    CondResPoset,
    ResiduatedPoset,
    adjointness_failures,
    adjointness_mismatches,
    check_conditional_adjointness_lemmas,
    check_crp,
    check_crp_consequences,
    check_properties,
    check_property_laws,
    check_residuated,
)
from nmv_workbench.services.tables import FiniteBinaryOp, validate_partial_order

ZERO, A, B, C, D, ONE = range(6)


@pytest.fixture
def bowtie_crp(bowtie):
    ops = bowtie.derived
    return CondResPoset(bowtie.carrier, bowtie.order, ops.otimes, ops.imp, bowtie.zero, bowtie.one)


def goedel_chain():
    x, y = np.indices((3, 3))
    return (
        Carrier(names=("0", "h", "1")),
        validate_partial_order(x <= y),
        FiniteBinaryOp(np.minimum(x, y)),
        FiniteBinaryOp(np.where(x <= y, 2, y)),
    )


def test_bowtie_term_structure_is_crp(bowtie):
    ops = bowtie.derived
    report = check_crp(bowtie.order, ops.otimes, ops.imp, bowtie.zero, bowtie.one)
    assert report.passed
    assert report.law_ids() == ["crp.a", "crp.b", "crp.c"]


def test_adjointness_failures_on_bowtie(bowtie_crp):
    failures = adjointness_failures(bowtie_crp)
    assert failures == [(A, C, B), (B, D, A), (C, C, D), (D, D, C)]
    # y and z incomparable
    assert {(C, C, D), (D, D, C)} <= set(failures)


def test_adjointness_failure_with_comparable_arguments(bowtie_crp):
    order, times, imp = bowtie_crp.order, bowtie_crp.otimes, bowtie_crp.imp
    assert times(A, C) == A
    assert imp(C, B) == D
    assert order(A, D)
    assert not order(A, B)
    assert order(B, C)
    assert (A, C, B) in adjointness_failures(bowtie_crp)


def test_adjointness_mismatches_by_hand(bowtie_crp):
    order, times, imp = bowtie_crp.order, bowtie_crp.otimes, bowtie_crp.imp
    expected = [(x, y, z) for x in range(6) for y in range(6) for z in range(6)
                if bool(order(times(x, y), z)) != bool(order(x, imp(y, z)))]
    assert adjointness_mismatches(order, times, imp) == expected


def test_bowtie_crp_is_not_residuated(bowtie_crp):
    report = check_residuated(bowtie_crp.order, bowtie_crp.otimes, bowtie_crp.imp,
                              bowtie_crp.zero, bowtie_crp.one)
    assert [r.law_id for r in report.failures()] == ["res.adjointness"]
    assert report.get("res.adjointness").witness == (A, C, B)
    with pytest.raises(LawViolation):
        bowtie_crp.as_residuated()


def test_bowtie_crp_has_all_optional_laws(bowtie_crp):
    flags = check_properties(bowtie_crp)
    assert flags.all_hold
    assert flags.missing() == []
    assert check_property_laws(bowtie_crp).passed


def test_negation_of_crp(bowtie_crp):
    assert bowtie_crp.neg.tolist() == [ONE, D, C, B, A, ZERO]


def test_consequences(bowtie_crp):
    report = check_crp_consequences(bowtie_crp)
    assert report.passed
    assert all(r.verdict == "pass" for r in report.results)


def test_consequences_without_hypotheses_are_not_applicable(bowtie_crp):
    flags = PropertyFlags(weak_divisibility=False, contraposition=True, double_negation=False,
                          lukasiewicz=True, compatibility=True)
    report = check_crp_consequences(bowtie_crp, flags)
    assert report.get("consequence.units").verdict == "pass"
    assert report.get("consequence.negation").verdict == "n/a"
    assert report.get("consequence.order").verdict == "n/a"
    assert report.passed


def test_goedel_chain_lacks_double_negation():
    carrier, order, times, imp = goedel_chain()
    crp = CondResPoset(carrier, order, times, imp, 0, 2)
    flags = check_properties(crp)
    assert not flags.double_negation
    assert "double_negation" in flags.missing()
    residuated = crp.as_residuated()
    assert residuated.integral


def test_crp_constructor_validates(bowtie):
    ops = bowtie.derived
    with pytest.raises(LawViolation) as exc:
        CondResPoset(bowtie.carrier, bowtie.order, ops.otimes, ops.imp, bowtie.zero, A)
    assert "crp.a" in [r.law_id for r in exc.value.report.failures()]


def test_lukasiewicz_residuated(load_fixture):
    r = load_fixture("lukasiewicz3.residuated.json")
    assert isinstance(r, ResiduatedPoset)
    assert r.integral
    report = check_residuated(r.order, r.otimes, r.imp, r.zero, r.one, integral=True)
    assert report.passed
    assert "res.integral" in report.law_ids()


def test_non_integral_residuated_poset():
    # 1 is the product unit but the order is 0 < 1 < t
    x, y = np.indices((3, 3))
    order = validate_partial_order(x <= y)
    times = FiniteBinaryOp([[0, 0, 0], [0, 1, 2], [0, 2, 2]])
    imp = FiniteBinaryOp([[2, 2, 2], [0, 1, 2], [0, 0, 2]])
    report = check_residuated(order, times, imp, 0, 1, integral=True)
    assert report.get("res.adjointness").verdict == "pass"
    assert report.get("res.integral").verdict == "fail"
    assert not ResiduatedPoset(Carrier(names=("0", "1", "t")), order, times, imp, 0, 1).integral


def test_lemmas_hold_on_bowtie(bowtie):
    report = check_conditional_adjointness_lemmas(bowtie)
    assert report.passed
    assert report.law_ids() == ["lemma.forward", "lemma.backward",
                                "corollary.conditional", "corollary.join"]


def test_lemmas_reject_non_sai(bowtie, monkeypatch):
    monkeypatch.setattr(residuation, "check_sai", lambda alg: Verdict(False, (A, C, ONE)))
    with pytest.raises(HypothesisError) as exc:
        check_conditional_adjointness_lemmas(bowtie)
    assert exc.value.hypothesis == "sai"
    assert exc.value.witness == (A, C, ONE)
