import json
import logging

import pytest

from nmv_workbench.main import run_command
from nmv_workbench.services.algebra_file import load_algebra_file, parse_algebra_file


def test_check_sai(fixture_path):
    result = run_command(["check", fixture_path("example1.nmv.json"), "--kind", "sai"])
    assert result.exit_code == 0
    assert "sai.antitone-sections" in result.output
    assert "all 8 law(s) hold" in result.output
    assert "FAIL" not in result.output


def test_check_deep(fixture_path):
    result = run_command(["check", fixture_path("example1.nmv.json"), "--kind", "sai", "--deep"])
    assert result.exit_code == 0
    assert "lemma.backward" in result.output
    assert "ident.weakening" in result.output


def test_verbose_is_scoped_to_one_command(fixture_path):
    root = logging.getLogger()
    before = root.level
    assert run_command(["-v", "check", fixture_path("boolean2.nmv.json")]).exit_code == 0
    assert root.level == before
    assert run_command(["-v", "check", fixture_path("missing.nmv.json")]).exit_code == 2
    assert root.level == before


def test_check_json(fixture_path):
    result = run_command(["check", fixture_path("boolean2.nmv.json"), "--json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["passed"] is True
    assert len(data["entries"]) == 7


def test_check_crp_fixture(fixture_path):
    result = run_command(["check", fixture_path("example1.crp.json"), "--kind", "crp", "--deep"])
    assert result.exit_code == 0
    assert "property.weak-divisibility" in result.output


def test_check_residuated_fails(fixture_path):
    result = run_command(["check", fixture_path("example1.crp.json"), "--kind", "residuated"])
    assert result.exit_code == 1
    assert "FAIL  res.adjointness" in result.output
    assert "witness (a, c, b)" in result.output


def test_check_ipp(fixture_path):
    result = run_command(["check", fixture_path("lukasiewicz3.ipp.json"), "--kind", "ipp"])
    assert result.exit_code == 0


def test_check_failing_axioms(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "kind": "nmv",
        "elements": ["0", "1"],
        "tables": {"oplus": [["0", "1"], ["0", "1"]], "neg": ["1", "0"]},
        "consts": {"zero": "0"},
    }))
    result = run_command(["check", str(path), "--kind", "sai"])
    assert result.exit_code == 1
    assert "N/A   sai.antitone-sections" in result.output


def test_check_wrong_kind(fixture_path):
    result = run_command(["check", fixture_path("example1.nmv.json"), "--kind", "crp"])
    assert result.exit_code == 2
    assert "expected crp or residuated" in result.errors


def test_check_unknown_label(tmp_path, fixture_path):
    text = open(fixture_path("example1.nmv.json")).read()
    path = tmp_path / "broken.json"
    path.write_text(text.replace('["c", "c", "1", "1", "1", "1"]', '["c", "c", "z", "1", "1", "1"]'))
    result = run_command(["check", str(path)])
    assert result.exit_code == 2
    assert "tables.oplus[3][2]" in result.errors


def test_missing_file(tmp_path):
    result = run_command(["check", str(tmp_path / "absent.json")])
    assert result.exit_code == 2


def test_usage_errors():
    assert run_command([]).exit_code == 2
    assert run_command(["check"]).exit_code == 2
    assert run_command(["enumerate", "--size", "3", "--kind", "lattice"]).exit_code == 2


def test_derive_implication(fixture_path):
    result = run_command(["derive", fixture_path("example1.nmv.json"), "--ops", "to"])
    assert result.exit_code == 0
    assert "d | a d c c 1 1" in result.output.splitlines()


def test_derive_json(fixture_path):
    result = run_command(["derive", fixture_path("example1.nmv.json"), "--ops", "otimes,sqcup", "--json"])
    data = json.loads(result.output)
    assert data["tables"]["sqcup"][1][2] == "c"
    assert data["tables"]["otimes"][3] == ["0", "a", "0", "a", "b", "c"]


def test_derive_unknown_op(fixture_path):
    result = run_command(["derive", fixture_path("example1.nmv.json"), "--ops", "oplus"])
    assert result.exit_code == 2


def test_convert_nmv_to_crp(fixture_path, tmp_path):
    out = tmp_path / "crp.json"
    result = run_command(["convert", fixture_path("example1.nmv.json"), "--via", "nmv-to-crp", "-o", str(out)])
    assert result.exit_code == 0
    assert load_algebra_file(str(out)) == load_algebra_file(fixture_path("example1.crp.json"))


def test_convert_crp_to_nmv(fixture_path):
    result = run_command(["convert", fixture_path("example1.crp.json"), "--via", "crp-to-nmv"])
    assert result.exit_code == 0
    assert parse_algebra_file(result.output) == load_algebra_file(fixture_path("example1.nmv.json"))


def test_convert_poset_to_residuated(fixture_path):
    result = run_command(["convert", fixture_path("lukasiewicz3.ipp.json"), "--via", "poset-to-residuated"])
    assert result.exit_code == 0
    assert parse_algebra_file(result.output) == load_algebra_file(fixture_path("lukasiewicz3.residuated.json"))


def test_convert_crp_to_nmv_reports_conclusions(fixture_path, tmp_path):
    out = tmp_path / "nmv.json"
    result = run_command(["convert", fixture_path("example1.crp.json"), "--via", "crp-to-nmv", "-o", str(out)])
    assert result.exit_code == 0
    assert "PASS  nmv.weak-exchange" in result.output
    assert "PASS  nmv.same-order" in result.output
    assert load_algebra_file(str(out)) == load_algebra_file(fixture_path("example1.nmv.json"))


def test_convert_residuated_to_poset(fixture_path, tmp_path):
    out = tmp_path / "ipp.json"
    result = run_command(["convert", fixture_path("lukasiewicz3.residuated.json"),
                          "--via", "residuated-to-poset", "-o", str(out)])
    assert result.exit_code == 0
    assert "ipp.absorbing-zero" in result.output
    assert load_algebra_file(str(out)) == load_algebra_file(fixture_path("lukasiewicz3.ipp.json"))


def test_convert_rejects_invalid_source(fixture_path, tmp_path):
    doc = json.loads(open(fixture_path("example1.crp.json")).read())
    doc["consts"]["one"] = "0"
    path = tmp_path / "bad.crp.json"
    path.write_text(json.dumps(doc))
    result = run_command(["convert", str(path), "--via", "crp-to-nmv"])
    assert result.exit_code == 1
    assert "crp.a" in result.errors


def test_convert_wrong_source_kind(fixture_path):
    result = run_command(["convert", fixture_path("example1.nmv.json"), "--via", "crp-to-nmv"])
    assert result.exit_code == 2


def test_enumerate_count_only():
    result = run_command(["enumerate", "--size", "2", "--kind", "nmv", "--count-only"])
    assert result.exit_code == 0
    assert result.output.strip() == "count: 1"


def test_enumerate_with_oracle():
    result = run_command(["enumerate", "--size", "3", "--up-to-iso", "--count-only", "--oracle", "--json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["count"] == 1
    assert data["oracle"] == data["labeled"] == 1


def test_enumerate_lists_tables():
    result = run_command(["enumerate", "--size", "3", "--sai"])
    assert result.exit_code == 0
    assert "⊕ | 0 a 1" in result.output
    assert "a | a 1 1" in result.output


def test_enumerate_emit_files(tmp_path):
    result = run_command(["enumerate", "--size", "3", "--emit-files", str(tmp_path / "out")])
    assert result.exit_code == 0
    (path,) = sorted((tmp_path / "out").iterdir())
    assert load_algebra_file(str(path)).kind == "nmv"


def test_enumerate_size_limits():
    assert run_command(["enumerate", "--size", "9", "--allow-large"]).exit_code == 2
    assert run_command(["enumerate", "--size", "1"]).exit_code == 2


def test_find_on_file(fixture_path):
    result = run_command(["find", "--predicate", "adjointness-failure", "--file", fixture_path("example1.nmv.json")])
    assert result.exit_code == 0
    assert "witness (a, c, b)" in result.output
    assert "witness (b, d, a)" in result.output
    assert "witness (c, c, d)" in result.output
    assert "witness (d, d, c)" in result.output
    assert "adjointness-failure: 1 counterexample(s)" in result.output


def test_find_none_at_size_two():
    result = run_command(["find", "--size", "2", "--predicate", "non-associative", "--json"])
    assert result.exit_code == 0
    assert json.loads(result.output)["count"] == 0


def test_find_needs_size_or_file():
    assert run_command(["find", "--predicate", "non-associative"]).exit_code == 2


def test_hasse(fixture_path, tmp_path):
    out = tmp_path / "order.dot"
    result = run_command(["hasse", fixture_path("example1.nmv.json"), "-o", str(out)])
    assert result.exit_code == 0
    dot = out.read_text()
    assert dot.count("->") == 8
    assert "n0 -> n1" in dot


def test_hasse_of_explicit_order(fixture_path):
    result = run_command(["hasse", fixture_path("lukasiewicz3.ipp.json")])
    assert result.exit_code == 0
    assert result.output.count("->") == 2
