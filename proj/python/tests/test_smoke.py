import json

import pytest

import affinekit as ak

MODEL = json.dumps(
    {
        "sorts": {"S": 2},
        "atoms": {
            "p": {"args": ["S"], "table": ["pos", "und"]},
            "q": {"table": ["neg"]},
        },
    }
)


def test_pair_connectives():
    u = ak.UNDETERMINED
    assert ak.par(u, u) == ak.PROVEN
    assert ak.tensor(u, u) == ak.REFUTED
    assert ak.lollipop(ak.PROVEN, u) == u
    assert ak.of_course(u) == ak.REFUTED
    assert ak.why_not(u) == ak.PROVEN
    assert repr(ak.with_(ak.PROVEN, u)) == "PairValue(und)"


def test_parse_and_translate():
    f = ak.parse("p -o ?q")
    assert str(f) == "p -o ?q"
    assert ak.parse(str(f)) == f
    assert ak.translate("!(p) -o q")[0] == "(p+ -> q+) /\\ (q- -> ~p+)"
    assert ak.translate(f, simplify=True)[0] == "q- -> p-"
    assert ak.parse("forall x:S. p(x)").free_vars() == set()
    with pytest.raises(ak.ParseError):
        ak.parse("p * * q")
    with pytest.raises(ak.ParseError):
        ak.parse("p(x)", closed=True)


def test_eval_and_disjointness():
    m = ak.Interpretation.from_json(MODEL)
    f = "exists x:S. p(x) * ~q"
    assert ak.eval_pair(f, m) == ak.PROVEN
    assert ak.eval_translated(f, m) == ak.eval_pair(f, m)
    assert ak.eval_pair("forall x:S. p(x)", m).word == "und"
    assert ak.check_disjointness(f, m)["ok"]
    with pytest.raises(ak.ParseError):
        ak.Interpretation.from_json('{"atoms": {"q": {"table": ["both"]}}}')


def test_oracle_small():
    rep = ak.equivalence_oracle(depth=2)
    assert rep["ok"] and rep["mismatches"] == 0 and rep["assignments"] == 9


def test_cover():
    r = ak.cover("0 1 ; -1 1/4 ; 0 1/2 ; 1/8 3/4 ; 1/2 2", verify=True)
    assert r["covered"] and r["verified"] and r["reflection_agrees"]
    assert r["indices"] == [0, 2, 3]
    assert r["chain"] == ["1/4", "3/4", "2"]
    gap = ak.cover("0 2 ; 0 1 ; 1 2")
    assert not gap["covered"] and gap["witness"] == "0"


def test_lemmas():
    assert all(c["pass"] for c in ak.lemma_suite())


def test_topology():
    assert ak.filter_count(1) == 3
    assert ak.filter_count(2) == 15
    assert ak.is_filter("nup", 1)
    assert not ak.is_filter("nnp", 1)
    assert ak.basis_interior(["pp"], 2) == "nn.nn.nn.nn.uu.uu.nn.uu.pp"
    rep = ak.topo_suite("filters", carrier=2)
    assert rep["ok"] and rep["facts"]["filter_count"] == "15"
    assert "compact" in ak.topo_suite_names()
    with pytest.raises(ak.BudgetError):
        ak.filter_count(3)
