import json
from pathlib import Path

import pytest

from gradedpi.fixtures import (
    KINDS,
    Fixture,
    FormulaError,
    evaluate,
    evaluate_formula,
    expand_template,
    load_fixtures,
    run_fixture,
    run_fixtures,
)

FIXTURES = load_fixtures()
BY_ID = {f.id: f for f in FIXTURES}
MANIFEST = json.loads((Path(__file__).parent / "claims_manifest.json").read_text())["claims"]


def test_every_claim_appears_exactly_once():
    expected = [f"{fam}.{claim}" for fam, claims in MANIFEST.items() for claim in claims]
    assert len(expected) == len(set(expected))
    ids = [f.id for f in FIXTURES]
    assert sorted(ids) == sorted(expected)


def test_fixture_fields():
    for f in FIXTURES:
        assert f.kind in KINDS
        assert f.status in ("asserted", "suspect")
        # anchors are bare LaTeX formulas, not citations or prose
        assert ("^" in f.anchor or "_" in f.anchor) and ("=" in f.anchor or "\\neq" in f.anchor or "\\text" in f.anchor)
        assert not any(w in f.anchor for w in ("Theorem", "Lemma", "Corollary", "Section", "§"))
        assert Fixture.from_dict(json.loads(json.dumps(f.to_dict()))) == f


def test_suspect_fixtures_are_exactly_the_ut2gr_ones():
    assert sorted(f.id for f in FIXTURES if f.status == "suspect") == [
        "UT2gr.cochar", "UT2gr.cochar-central", "UT2gr.identities"]


def test_formula_examples():
    assert evaluate_formula(BY_ID["UT2.codim"], 4) == 18
    assert evaluate_formula(BY_ID["Dgr.delta"], 3) == 8
    assert evaluate_formula(BY_ID["Nk.delta"], 5, {"k": 4}) == 20
    assert evaluate_formula(BY_ID["G2kgr.delta"], 4, {"k": 1}) == 1 + 6
    chi = evaluate_formula(BY_ID["Dgr.cochar"], 2)
    assert chi == {((2,), ()): 1, ((1,), (1,)): 1, ((), (2,)): 1}
    with pytest.raises(ValueError):
        evaluate_formula(BY_ID["UT2.codim"], 99)


def test_partition_templates_drop_invalid_shapes():
    chi = lambda lam: {"chi": {"lambda": lam, "mu": []}}
    n = {"param": "n"}
    assert evaluate(chi([{"sub": [n, 2]}, 2]), {"n": 3}) == {}          # (1,2) not a partition
    assert evaluate(chi([{"sub": [n, 2]}, {"ones": 2}]), {"n": 2}) == {}  # (0,1,1)
    assert evaluate(chi([n, 0]), {"n": 2}) == {((2,), ()): 1}           # trailing zero dropped
    with pytest.raises(FormulaError):
        evaluate({"param": "q"}, {})
    with pytest.raises(FormulaError):
        evaluate({"mul": [chi([1]), chi([1])]}, {})


def test_templates():
    assert expand_template("[z1,{list:y:1:k-1}]", {"k": 4}) == "[z1,y1,y2,y3]"
    assert expand_template("{word:z:1:t+1}", {"t": 2}) == "z1z2z3"
    assert expand_template("y0{pairs:1:k}", {"k": 2}) == "y0[y1,y2][y3,y4]"


def test_whole_ledger():
    results = run_fixtures(FIXTURES)
    failed = [(r.id, r.diffs[:1]) for r in results if r.verdict == "fail"]
    assert not failed
    suspect = {r.id: r for r in results if r.verdict == "suspect-diff"}
    assert set(suspect) == {"UT2gr.cochar", "UT2gr.cochar-central", "UT2gr.identities"}
    # the printed UT2gr cocharacter has the wrong degree sum already at n = 2
    first = next(d for d in suspect["UT2gr.cochar"].diffs if d["n"] == 2)
    assert first["expected_degree_sum"] == 1 and first["computed_degree_sum"] == 5


def test_broken_fixture_fails_with_first_differing_degree():
    data = BY_ID["UT2.codim"].to_dict()
    data["formula"] = {"pow": [2, {"param": "n"}]}
    result = run_fixture(Fixture.from_dict(data))
    assert result.verdict == "fail"
    assert result.diffs[0]["n"] == 1  # 2^1 != 2^0 (1 - 2) + 2


def test_bad_fixture_files(tmp_path):
    p = tmp_path / "f.json"
    p.write_text("{not json")
    with pytest.raises(json.JSONDecodeError):
        load_fixtures(p)
    p.write_text(json.dumps([{"id": "x"}]))
    with pytest.raises(ValueError):
        load_fixtures(p)
    dup = BY_ID["Dgr.codim"].to_dict()
    p.write_text(json.dumps([dup, dup]))
    with pytest.raises(ValueError):
        load_fixtures(p)
