"""Command line behavior: rendering, exit codes, determinism."""

import json

import pytest

from fusioncat import catalog_get, catalog_input, save_category
from fusioncat.category import category_to_input, input_to_json
from fusioncat.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- happy paths -------------------------------------------------------------


def test_catalog_lists_entries(capsys):
    code, out, _ = invoke(capsys, "catalog")
    assert code == 0
    for name in ("toric_code", "ising", "fibonacci", "vec_z8"):
        assert name in out


def test_info_renders_exact_and_numeric(capsys):
    code, out, _ = invoke(capsys, "info", "--catalog", "fibonacci")
    assert code == 0
    assert "-ζ5^2-ζ5^3 ≈ 1.61803" in out
    assert "tau" in out


def test_validate_catalog_entry(capsys):
    code, out, _ = invoke(capsys, "validate", "--catalog", "semion")
    assert code == 0
    assert "0 failed" in out


def test_verify_all_pass(capsys):
    code, out, _ = invoke(capsys, "verify", "--catalog", "toric_code")
    assert code == 0
    assert "0 failed" in out
    assert "main-identity" in out


def test_classes_shows_class_sums(capsys):
    code, out, _ = invoke(capsys, "classes", "--catalog", "toric_code")
    assert code == 0
    assert "[1, 1, -1, -1]" in out


def test_centralizer_reports_both_routes(capsys):
    code, out, _ = invoke(capsys, "centralizer", "--catalog", "toric_code", "--subcat", "e")
    assert code == 0
    assert "{1, e}" in out
    assert "s-matrix route" in out and "transform route" in out


def test_centralizer_multi_generator(capsys):
    code, out, _ = invoke(
        capsys, "centralizer", "--catalog", "toric_code", "--subcat", "e,m"
    )
    assert code == 0
    assert "D' (s-matrix route)      {1}" in out


def test_subcats_and_grading(capsys):
    code, out, _ = invoke(capsys, "subcats", "--catalog", "ising")
    assert code == 0
    assert "{1, psi}" in out
    code, out, _ = invoke(capsys, "grading", "--catalog", "toric_code")
    assert code == 0
    assert "group order  4" in out


# -- json mode ----------------------------------------------------------------


def test_json_output_parses(capsys):
    code, out, _ = invoke(capsys, "verify", "--catalog", "ising", "--json")
    assert code == 0
    obj = json.loads(out)
    assert sorted(obj) == ["category", "checks", "command", "sections"]
    assert obj["category"] == "ising"
    statuses = {c["status"] for c in obj["checks"]}
    assert "fail" not in statuses
    # ising is non-integral, so the prime-index law is skipped, nothing else
    skipped = [c["id"] for c in obj["checks"] if c["status"] == "skip"]
    assert skipped == ["prime-index"]


def test_json_exact_coefficient_arrays(capsys):
    code, out, _ = invoke(capsys, "info", "--catalog", "fibonacci", "--json")
    assert code == 0
    obj = json.loads(out)
    dims = [s for s in obj["sections"] if s["title"] == "dims"][0]
    tau = dict(dims["rows"])["tau"]
    assert tau["exact"] == ["0", "0", "-1", "-1"]
    assert tau["conductor"] == 5
    assert tau["approx"] == "1.61803"


def test_json_deterministic_in_process(capsys):
    code1, out1, _ = invoke(capsys, "verify", "--catalog", "double_semion", "--json")
    code2, out2, _ = invoke(capsys, "verify", "--catalog", "double_semion", "--json")
    assert code1 == code2 == 0
    assert out1 == out2


# -- exit codes ----------------------------------------------------------------


def test_exit_validate_failure(tmp_path, capsys):
    obj = input_to_json(catalog_input("toric_code"))
    obj["s_matrix"][1][2] = "2"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    code, out, _ = invoke(capsys, "validate", "--file", str(path))
    assert code == 1
    assert "fail" in out


def test_exit_verify_identity_failure(tmp_path, capsys):
    obj = input_to_json(catalog_input("toric_code"))
    obj["s_matrix"][1][2] = "2"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    code, out, _ = invoke(capsys, "verify", "--file", str(path))
    assert code == 2


def test_exit_parse_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{")
    code, _, err = invoke(capsys, "verify", "--file", str(path))
    assert code == 3
    assert "error:" in err


def test_exit_missing_file(capsys):
    code, _, err = invoke(capsys, "info", "--file", "/no/such/file.json")
    assert code == 3


def test_exit_unknown_catalog(capsys):
    code, _, err = invoke(capsys, "verify", "--catalog", "nope")
    assert code == 3
    assert "available" in err


def test_exit_usage_errors(capsys):
    assert invoke(capsys, "frobnicate")[0] == 3
    assert invoke(capsys, "verify")[0] == 3
    assert invoke(capsys, "centralizer", "--catalog", "toric_code")[0] == 3
    assert invoke(capsys, "verify", "--catalog", "a", "--file", "b")[0] == 3


def test_exit_unknown_label(capsys):
    code, _, err = invoke(
        capsys, "centralizer", "--catalog", "toric_code", "--subcat", "zz"
    )
    assert code == 3
    assert "unknown object label" in err


def test_exit_capability(tmp_path, capsys):
    path = tmp_path / "fr.json"
    save_category(catalog_get("toric_code"), path, kind="fusion_ring")
    code, _, err = invoke(capsys, "centralizer", "--file", str(path), "--subcat", "e")
    assert code == 4
    assert "s-matrix" in err


def test_exit_capability_classes_without_tables(tmp_path, capsys):
    obj = input_to_json(category_to_input(catalog_get("toric_code"), kind="fusion_ring"))
    del obj["char_table"]
    path = tmp_path / "bare.json"
    path.write_text(json.dumps(obj))
    code, _, err = invoke(capsys, "classes", "--file", str(path))
    assert code == 4


def test_verify_fusion_ring_skips_but_passes(tmp_path, capsys):
    path = tmp_path / "fr.json"
    save_category(catalog_get("ising"), path, kind="fusion_ring")
    code, out, _ = invoke(capsys, "verify", "--file", str(path))
    assert code == 0
    assert "skipped" in out and "0 failed" in out


def test_input_files_not_modified(tmp_path, capsys):
    path = tmp_path / "cat.json"
    save_category(catalog_get("semion"), path)
    before = path.read_bytes()
    invoke(capsys, "verify", "--file", str(path))
    assert path.read_bytes() == before
