import json
import subprocess
import sys

import pytest

from gradedpi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_codim_json_echoes_formula(capsys):
    code, out, _ = run(capsys, "codim", "--algebra", "UT2", "--n", "1..5", "--json")
    assert code == 0
    rows = json.loads(out)
    assert [r["c"] for r in rows] == [1, 2, 6, 18, 50]
    assert all(r["formula"]["c"] == r["c"] for r in rows)


def test_codim_dgr_table(capsys):
    code, out, _ = run(capsys, "codim", "--algebra", "Dgr", "--n", "3")
    assert code == 0
    assert out.splitlines()[1].split()[:5] == ["Dgr", "3", "8", "0", "8"]


def test_codim_csv(capsys):
    code, out, _ = run(capsys, "codim", "--algebra", "N3", "--n", "2..3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "algebra,n,c,cz,delta,formula"


def test_unknown_algebra_exits_2(capsys):
    code, _, err = run(capsys, "codim", "--algebra", "Foo", "--n", "3")
    assert code == 2
    assert "unknown algebra" in err


def test_cap_exceeded_exits_2(capsys):
    code, _, err = run(capsys, "codim", "--algebra", "Dgr", "--n", "9")
    assert code == 2 and "cap" in err
    code, _, err = run(capsys, "cocharacter", "--algebra", "Dgr", "--n", "9")
    assert code == 2


def test_cocharacter_outputs(capsys):
    code, out, _ = run(capsys, "cocharacter", "--algebra", "G2", "--n", "4", "--kind", "central")
    assert code == 0
    assert "((4),∅): 1" in out
    code, out, _ = run(capsys, "cocharacter", "--algebra", "Dgr", "--n", "2", "--json")
    data = json.loads(out)
    assert [t["m"] for t in data["terms"]] == [1, 1, 1]
    assert data["degree_sum"] == 4


def test_degree_sum_matches_codim(capsys):
    _, out, _ = run(capsys, "cocharacter", "--algebra", "N4gr", "--n", "4", "--json")
    ds = json.loads(out)["degree_sum"]
    _, out, _ = run(capsys, "codim", "--algebra", "N4gr", "--n", "4", "--json")
    assert json.loads(out)[0]["c"] == ds


def test_algebra_commands(capsys):
    code, out, _ = run(capsys, "algebra", "list")
    assert code == 0 and "Nkgr" in out
    code, out, _ = run(capsys, "algebra", "show", "N3gr", "--json")
    assert json.loads(out)["name"] == "N3gr"
    code, out, _ = run(capsys, "algebra", "show", "N3gr")
    assert "valid: True" in out


def test_algebra_from_json_file(capsys, tmp_path):
    from gradedpi.algebra import catalog

    p = tmp_path / "a.json"
    p.write_text(catalog("Dgr").to_json())
    code, out, _ = run(capsys, "codim", "--algebra", str(p), "--n", "2", "--json")
    assert code == 0 and json.loads(out)[0]["c"] == 4
    p.write_text("{oops")
    code, _, _ = run(capsys, "codim", "--algebra", str(p), "--n", "2")
    assert code == 2


def test_t2_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "t2", "verify", "--algebra", "N3", "--n", "4")
    assert code == 0
    code, out, _ = run(capsys, "t2", "verify", "--algebra", "UT2gr", "--n", "3", "--ideal", "z1z2", "--json")
    assert code == 1 and not json.loads(out)["ok"]
    code, out, _ = run(capsys, "t2", "closure", "--algebra", "N4gr", "--n", "3")
    assert code == 0
    code, out, _ = run(capsys, "t2", "span", "--ideal", "[y1,y2,y3]", "--n", "3", "--r", "0", "--basis", "--json")
    data = json.loads(out)
    assert data["sectors"][0]["dim"] == 2 and len(data["sectors"][0]["basis"]) == 2
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"ideal": ["[y1,y2]"], "space": []}))
    code, out, _ = run(capsys, "t2", "span", "--gens", str(g), "--n", "2", "--json")
    assert json.loads(out)["sectors"][0]["dim"] == 1
    g.write_text(json.dumps({"bogus": []}))
    code, _, _ = run(capsys, "t2", "span", "--gens", str(g), "--n", "2")
    assert code == 2
    code, out, _ = run(capsys, "t2", "congruence", "--n", "4")
    assert code == 0


def test_verify_filter_and_corrupt_file(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--filter", "N*", "--json")
    assert code == 0
    ids = [r["id"] for r in json.loads(out)["results"]]
    assert ids and all(i.startswith("N") for i in ids)
    bad = tmp_path / "bad.json"
    bad.write_text("[{")
    code, _, err = run(capsys, "verify", "--fixtures", str(bad))
    assert code == 2


def test_verify_reports_failures(capsys, tmp_path):
    from gradedpi.fixtures import load_fixtures

    f = next(x for x in load_fixtures() if x.id == "Dgr.codim").to_dict()
    f["formula"] = 3
    p = tmp_path / "f.json"
    p.write_text(json.dumps([f]))
    code, out, _ = run(capsys, "verify", "--fixtures", str(p))
    assert code == 1 and "fail" in out


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "gradedpi", "codim", "--algebra", "Dgr", "--n", "2", "--json"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)[0]["delta"] == 4
