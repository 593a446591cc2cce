import json

import numpy as np
import pytest
from pydantic import ValidationError

from nmv_workbench.models.schemas import CheckReport, LawResult, ReportEntry
from nmv_workbench.services.nmv import check_nmv_axioms
from nmv_workbench.services.reports import (
    covering_pairs,
    emit_dot,
    render_binary,
    render_derived,
    render_derived_json,
    render_report,
    render_report_json,
    to_report_document,
)
from nmv_workbench.services.residuation import check_residuated
from nmv_workbench.services.tables import validate_partial_order

ZERO, A, B, C, D, ONE = range(6)


def test_bowtie_covering_pairs(bowtie):
    assert covering_pairs(bowtie.order) == [
        (ZERO, A), (ZERO, B), (A, C), (A, D), (B, C), (B, D), (C, ONE), (D, ONE)]


def test_two_chain_dot():
    order = validate_partial_order([[True, True], [False, True]])
    dot = emit_dot(order, ["0", "1"])
    assert dot.count("->") == 1
    assert "n0 -> n1" in dot
    assert "rankdir=BT" in dot


def test_bounded_antichain():
    leq = np.eye(4, dtype=bool)
    leq[0, :] = True
    leq[:, 3] = True
    assert covering_pairs(validate_partial_order(leq)) == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_dot_is_deterministic(bowtie):
    labels = bowtie.carrier.names
    first = emit_dot(bowtie.order, labels)
    assert first == emit_dot(bowtie.order, labels)
    assert first.count("->") == 8
    assert 'n3 [label="c"];' in first


def test_dot_quotes_labels():
    order = validate_partial_order([[True, True], [False, True]])
    assert 'label="say \\"hi\\""' in emit_dot(order, ['say "hi"', "1"])


def test_report_document_uses_labels(bowtie):
    ops = bowtie.derived
    report = check_residuated(bowtie.order, ops.otimes, ops.imp, bowtie.zero, bowtie.one)
    doc = to_report_document(report, bowtie.carrier)
    assert not doc.passed
    failing = [e for e in doc.entries if e.verdict == "fail"]
    assert [(e.law_id, e.witness) for e in failing] == [("res.adjointness", ["a", "c", "b"])]
    assert all(e.witness is None for e in doc.entries if e.verdict != "fail")


def test_render_report(bowtie):
    report = check_nmv_axioms(bowtie.oplus, bowtie.neg, bowtie.zero)
    text = render_report(to_report_document(report, bowtie.carrier))
    assert "PASS  nmv.lukasiewicz" in text
    assert text.endswith("all 7 law(s) hold")


def test_render_report_json(bowtie):
    report = CheckReport(subject="t", results=[
        LawResult(law_id="x.one", name="x", reference="r", verdict="fail", witness=(A, B)),
        LawResult(law_id="x.two", name="y", reference="r", verdict="n/a"),
    ])
    data = json.loads(render_report_json(to_report_document(report, bowtie.carrier)))
    assert data["passed"] is False
    assert data["entries"][0]["witness"] == ["a", "b"]
    assert data["entries"][1]["witness"] is None


def test_entry_needs_witness_iff_fail():
    with pytest.raises(ValidationError):
        ReportEntry(law_id="x", name="x", reference="", verdict="fail")
    with pytest.raises(ValidationError):
        ReportEntry(law_id="x", name="x", reference="", verdict="pass", witness=["a"])


def test_render_binary(bowtie):
    text = render_binary("→", bowtie.derived.imp, bowtie.carrier)
    lines = text.splitlines()
    assert lines[0] == "→ | 0 a b c d 1"
    assert "d | a d c c 1 1" in lines


def test_render_sections(bowtie):
    text = render_derived(bowtie, ["sections"])
    assert " a |  .  1  .  c  d  a" in text.splitlines()


def test_derived_json(bowtie):
    data = json.loads(render_derived_json(bowtie, ["to", "sections"]))
    assert data["tables"]["to"][4] == ["a", "d", "c", "c", "1", "1"]
    assert data["tables"]["sections"][1] == [None, "1", None, "c", "d", "a"]
