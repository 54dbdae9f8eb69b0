from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from leebounds.cli import analyze_report, main, render_table
from leebounds.code import load_code

from conftest import DATA


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def path(name):
    return DATA / f"{name}.json"


def test_analyze_join_example(capsys):
    code, out, _ = run(capsys, "analyze", path("join_z9"), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["d_L"] == 2
    assert report["hierarchies"]["join"] == [6, 9, 12]
    assert report["wt_join"] == 16
    assert report["k"] == "5/2"


def test_analyze_json_round_trip(capsys):
    _, out, _ = run(capsys, "analyze", path("example2_z27"), "--format", "json")
    assert json.loads(out) == analyze_report(load_code(path("example2_z27")))


def test_analyze_profile_tables(capsys):
    _, out, _ = run(capsys, "analyze", path("profile_z27"), "--format", "json")
    prof = json.loads(out)["filtration_profile"]
    assert prof["ell_per_row"] == [1, 0, 2]
    assert prof["nprime_per_row"] == [2, 2, 1]
    assert prof["Nprime"] == 2 and prof["sigma"] == 0


def test_analyze_integral_k_is_rational(capsys):
    _, out, _ = run(capsys, "analyze", path("example1_z9"), "--format", "json")
    assert json.loads(out)["k"] == "3/1"


def test_analyze_cap_is_per_field(capsys):
    code, out, _ = run(capsys, "analyze", path("example2_z27"), "--format", "json", "--cap", "10")
    assert code == 0
    report = json.loads(out)
    assert "error" in report["d_L"] and "error" in report["hierarchies"]["filtration"]
    assert report["hierarchies"]["join"] == [9, 36]  # needs no enumeration


def test_analyze_text_is_fixed_width(capsys):
    _, out, _ = run(capsys, "analyze", path("shiromoto_z5"))
    lines = out.splitlines()
    assert lines[0].split() == ["field", "value"]
    col = lines[0].index("value")
    assert all(line[col - 2:col] == "  " for line in lines[1:])


def test_zero_code_is_an_error(capsys):
    code, out, err = run(capsys, "analyze", path("zero_z9"))
    assert code == 1 and out == ""
    assert "zero code" in err and len(err.strip().splitlines()) == 1


def test_missing_and_malformed_files(capsys, tmp_path):
    code, out, err = run(capsys, "bounds", tmp_path / "none.json")
    assert code == 1 and out == "" and err.startswith("leebounds: error:")
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    code, out, err = run(capsys, "analyze", bad)
    assert code == 1 and out == "" and len(err.strip().splitlines()) == 1


def bounds_of(capsys, name):
    code, out, _ = run(capsys, "bounds", path(name), "--format", "json")
    assert code == 0
    return {r["name"]: r for r in json.loads(out)}


def test_bounds_example_one(capsys):
    rows = bounds_of(capsys, "example1_z9")
    assert {k: rows[k]["value"] for k in ("filtration_min", "join", "column_cancelling",
                                          "puncturing")} == {
        "filtration_min": 3, "join": 6, "column_cancelling": 5, "puncturing": 8}
    assert rows["filtration_min"]["attained"] is True
    assert rows["join"]["attained"] is False
    assert rows["d_L"]["attained"] is None


def test_bounds_example_three(capsys):
    rows = bounds_of(capsys, "example3_z125")
    assert rows["filtration_min"]["value"] == 5
    # join and puncturing evaluate to 250 and 308 for this code
    assert (rows["join"]["value"], rows["puncturing"]["value"]) == (250, 308)


def test_bounds_binary_cancelling_not_applicable(capsys):
    rows = bounds_of(capsys, "binary_z8")
    assert rows["column_cancelling"]["applicable"] is False
    assert rows["column_cancelling"]["value"] is None


def test_bounds_csv(capsys):
    code, out, _ = run(capsys, "bounds", path("optimal_z9"), "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0].keys() >= {"name", "value", "applicable", "attained"}
    by_name = {r["name"]: r for r in rows}
    assert by_name["join"]["value"] == "6" and by_name["join"]["attained"] == "yes"


def table_cells(capsys, *params):
    argv = ["table", "--format", "json"]
    if params:
        argv += ["--params", *params]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_table_first_block(capsys):
    rows = table_cells(capsys, "6,3,9,0")
    filt = {r["cell"]: r["value"] for r in rows if r["bound"] == "filtration"}
    assert filt == {"(0,3)": 13, "(1,1)": 9, "(1,2)": 6, "(1,3)": 3, "(2,1)": 9, "(2,2)": 5,
                    "(2,3)": 1}


def test_table_sigma_blocks(capsys):
    rows = table_cells(capsys, "6,3,9,1", "6,3,125,2")
    one = [(r["cell"], r["value"]) for r in rows if r["bound"] == "filtration" and r["q"] == 9]
    assert one == [("(1,*)", 12), ("(2,1)", 9), ("(2,2)", 6), ("(2,3)", 3)]
    last = [(r["cell"], r["value"]) for r in rows if r["bound"] == "filtration" and r["q"] == 125]
    assert last == [("(2,*)", 175), ("(3,1)", 125), ("(3,2)", 75), ("(3,3)", 25)]
    ald = [r["value"] for r in rows if r["bound"] == "alderson" and r["q"] == 125]
    assert ald == ["Not existing", 248]


def test_table_default_has_five_blocks(capsys):
    rows = table_cells(capsys)
    assert len({(r["n"], r["K"], r["q"], r["sigma"]) for r in rows}) == 5


def test_table_bad_params(capsys):
    with pytest.raises(SystemExit) as info:
        main(["table", "--params", "6,3,9"])
    assert info.value.code == 2
    code, _, err = run(capsys, "table", "--params", "6,3,9,5")
    assert code == 1 and "sigma" in err


def test_density_ell_zero_csv(capsys):
    code, out, _ = run(capsys, "density", "ell-zero", "--p", "3", "--K", "3", "--n", "6",
                       "--trials", "2000", "--seed", "1", "--format", "csv")
    assert code == 0
    lines = out.split("\r\n")
    assert len(lines) == 2
    (row,) = csv.DictReader(io.StringIO(out))
    assert row["exact"] == "512/19683"
    assert 0 <= float(row["estimate"]) <= 1


def test_density_census_column(capsys):
    code, out, _ = run(capsys, "density", "ell-zero", "--p", "3", "--s", "2", "--K", "2",
                       "--n", "3", "--trials", "100", "--census", "--format", "json")
    assert code == 0
    (row,) = json.loads(out)
    assert row["census"] == row["exact"] == "4/9"


def test_density_shiromoto_census(capsys):
    code, out, _ = run(capsys, "density", "census", "--p", "5", "--s", "1", "--n", "2",
                       "--subtype", "1", "--bound", "shiromoto", "--format", "json")
    assert code == 0
    (row,) = json.loads(out)
    assert row["isometry_classes"] == 1 and row["attaining"] == 2
    assert row["class_representatives"] == [[[1, 2]]]


def test_density_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["density", "ell-zero", "--p", "3", "--K", "2", "--n", "4", "--trials", "0"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["density", "ell-zero", "--p", "3", "--K", "2", "--n", "4", "--seed", "-1"])
    code, out, err = run(capsys, "density", "full-row", "--p", "3", "--K", "2", "--n", "4")
    assert code == 1 and out == "" and "ell_tilde" in err
    code, _, err = run(capsys, "density", "census", "--p", "3", "--n", "3")
    assert code == 1 and "--bound" in err
    code, _, err = run(capsys, "density", "free", "--p", "3", "--n", "3", "--census")
    assert code == 1


def test_render_table_empty_and_quoting():
    assert render_table([], "text") == ""
    out = render_table([{"a": "x,y", "b": 1}], "csv")
    assert out == 'a,b\r\n"x,y",1'


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "leebounds", "table", "--params", "6,3,9,0",
                          "--format", "csv"], capture_output=True, text=True, check=True)
    assert res.stdout.startswith("n,K,q,sigma,bound,cell,value")
