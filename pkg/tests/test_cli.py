import json
import subprocess
import sys

import pytest

from liegraph import catalog
from liegraph.catalog import CatalogEntry
from liegraph.cli import main
from liegraph.io import save


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_derived_solvable7(capsys):
    code, out, _ = run(capsys, "derived", "catalog:solvable7")
    assert code == 0
    assert out.strip() == "7 → 6 → 4 → 0 (solvable, derived length 3)"


def test_lcs_nilpotent7(capsys):
    code, out, _ = run(capsys, "lcs", "catalog:nilpotent7")
    assert out.strip() == "7 → 5 → 4 → 3 → 2 → 1 → 0 (nilpotent, index 6)"


def test_derived_not_solvable(capsys):
    code, out, _ = run(capsys, "derived", "catalog:schrodinger_m2")
    assert code == 0 and "not solvable" in out and "h -> x" in out


def test_classify_schrodinger(capsys):
    code, out, _ = run(capsys, "classify", "catalog:schrodinger_m2")
    assert code == 0
    assert "not solvable; not semisimple; radical dim 5 nilpotent(2-step)" in out
    assert "sinkholes: z" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--json", "catalog:su2")
    rep = json.loads(out)
    assert rep["semisimple"] and rep["graph"]["zn_symmetry"] == ["e1", "e2", "e3"]
    assert rep["summary"] == "not solvable; semisimple; radical {0}"


def test_classify_without_basis(capsys):
    code, out, _ = run(capsys, "classify", "catalog:l3_alpha_m1_4")
    assert code == 0 and "no admissible basis found" in out


def test_validate_type_viii(tmp_path, capsys):
    path = tmp_path / "viii.json"
    save(CatalogEntry("viii", catalog.fixture("type_viii")), path)
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 1
    assert "Jacobi (a, b, c)" in out


def test_validate_ok(capsys):
    code, out, _ = run(capsys, "validate", "catalog:sl2_rotated")
    assert code == 0 and "over Q(sqrt 2)" in out


def test_schema_error_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": "three", "brackets": []}))
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2 and "/dim" in err


def test_antisymmetry_exit_1(tmp_path, capsys):
    path = tmp_path / "anti.json"
    path.write_text(json.dumps({"dim": 3, "brackets": [
        {"i": 1, "j": 2, "coeffs": {"3": "1"}}, {"i": 2, "j": 1, "coeffs": {"3": "1"}}]}))
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1 and "antisymmetry" in err


def test_missing_file_and_unknown_entry(capsys):
    assert run(capsys, "graph", "/nonexistent.json")[0] == 2
    assert run(capsys, "graph", "catalog:nope")[0] == 2


def test_non_lie_rejected_by_analysis(capsys):
    code, _, err = run(capsys, "derived", "fixture:passes_scan")
    assert code == 1 and "not a Lie algebra" in err


def test_graph_and_dot(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "graph", "catalog:tight3", "--dot", str(dot))
    assert code == 0 and "6 <= 6" in out and "XI:1" in out
    assert dot.read_text().startswith('digraph "tight3"')


def test_graded(capsys):
    code, out, _ = run(capsys, "graded", "catalog:l3_alpha_m1_4")
    assert code == 0 and "derived: 3 → 2 → 0" in out
    assert run(capsys, "graded", "catalog:su2")[0] == 1


def test_graded_source_derived(capsys):
    code, out, _ = run(capsys, "derived", "catalog:l3_alpha_m1_4")
    assert out.strip() == "3 → 2 → 0 (solvable, derived length 2)"


def test_ideals(capsys):
    code, out, _ = run(capsys, "ideals", "catalog:schrodinger_m1")
    assert "closure(p) = {q,p,z}" in out


def test_similarity(capsys):
    code, out, _ = run(capsys, "similarity", "catalog:wh2", "--by", "N", "--on", "P", "--order", "4")
    assert code == 0 and "preperiod 0, period 2" in out
    assert run(capsys, "similarity", "catalog:wh2", "--by", "Q", "--on", "P")[0] == 2
    assert run(capsys, "similarity", "catalog:wh2", "--by", "N", "--on", "P", "--order", "-1")[0] == 2


def test_catalog_list_and_export(tmp_path, capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert len(out.splitlines()) == len(catalog.list_names())
    target = tmp_path / "su2.json"
    assert run(capsys, "catalog", "export", "su2", "-o", str(target))[0] == 0
    assert run(capsys, "validate", str(target))[0] == 0


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and out.strip().endswith("47/47 catalog entries consistent")


def test_console_script_entry():
    out = subprocess.run([sys.executable, "-m", "liegraph.cli", "derived", "catalog:heisenberg"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "3 → 1 → 0 (solvable, derived length 2)"


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["frobnicate"])
    assert ei.value.code == 2
