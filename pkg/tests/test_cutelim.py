import pytest
from hypothesis import given, settings

from lpc.corpora import searched, shipped
from lpc.cutelim import (
    CUTS, CutElimError, CutSpec, cut_node, dual_axiom, elaborate_dual, eliminate_all, eliminate_all_traced,
    eliminate_cut_plus, pair_cuts,
)
from lpc.kernel import RuleId, check, node
from lpc.syntax import Mode, One, dual, enumerate_props, parse_prop, parse_sequent
from lpc.search import SearchBudget, search
from strategies import props

R = RuleId


def proof(text):
    d = search(parse_sequent(text), SearchBudget(8, 1, 20000))
    assert not isinstance(d, str), text
    return d


@pytest.fixture(scope="module")
def small_cuts():
    return pair_cuts(list(searched(3, 5)), per_rule=12)


def test_small_cut_pool_has_every_rule(small_cuts):
    assert {d.rule for d in small_cuts} == set(CUTS)


def test_eliminate_all_gives_cut_free_same_conclusion(small_cuts):
    for d in small_cuts:
        out, trace = eliminate_all_traced(d)
        assert check(out, allow_cut=False).ok
        assert out.conclusion == d.conclusion
        assert trace.decreasing() and trace.steps


def test_shipped_cuts_eliminate():
    for d in shipped()["cuts.lpc"]:
        out = eliminate_all(d)
        assert check(out, allow_cut=False).ok and out.conclusion == d.conclusion


def test_elimination_is_idempotent(small_cuts):
    for d in small_cuts[:20]:
        once = eliminate_all(d)
        assert eliminate_all(once) is once


def test_replicated_cut_removes_copies():
    d1 = proof("(||- () ((! 1)))")
    d2 = proof("(|- ((! 1) (! 1)) ((tensor 1 1)))")
    x = parse_prop("(! 1)")
    out, trace = eliminate_cut_plus(d1, d2, CutSpec(x, 2, R.CUT_P))
    assert check(out, allow_cut=False).ok
    assert out.conclusion == parse_sequent("(|- () ((tensor 1 1)))")
    assert trace.decreasing()
    labels = {s.label.split(":")[0] for s in trace.steps}
    assert "principal" in labels


def test_persistent_cuts_need_a_copy():
    with pytest.raises(ValueError):
        CutSpec(parse_prop("(! 1)"), 0, R.CUT_P)


def test_cut_spec_validation():
    with pytest.raises(ValueError):
        CutSpec(One, 2, R.CUT_L)
    with pytest.raises(ValueError):
        CutSpec(parse_prop("(! 1)"), 1, R.AX)
    d1 = proof("(||- () ((! 1)))")
    d2 = proof("(|- ((! 1)) (1))")
    with pytest.raises(CutElimError):
        eliminate_cut_plus(d1, d2, CutSpec(parse_prop("(! 1)"), 1, R.CUT_PP))


def test_cut_node_shape():
    d = cut_node(proof("(|- () (1))"), proof("(|- (1) (1))"), One)
    assert d.rule is R.CUT_L and check(d).ok
    with pytest.raises(CutElimError):
        cut_node(proof("(|- () (1))"), proof("(|- (1) (1))"), parse_prop("B"))


@pytest.mark.parametrize("mode", list(Mode))
def test_dual_axioms_to_depth_2(mode):
    for x in enumerate_props(2)[mode]:
        pair = dual_axiom(x)
        for name, d in pair.items():
            assert check(d).ok, (name, x)
            if not name.endswith("_cut"):
                assert not d.has_cut()
        assert sorted(pair["left"].conclusion.left) == sorted((x, dual(x)))
        assert sorted(pair["right"].conclusion.right) == sorted((x, dual(x)))


@given(props(depth=3))
@settings(max_examples=60, deadline=None)
def test_dual_axioms_random(x):
    for d in dual_axiom(x).values():
        assert check(d).ok


def test_elaborate_dual_moves_both_ways():
    for d in searched(3, 5)[:300]:
        s = d.conclusion
        for side in ("L", "R"):
            for x in dict.fromkeys(s.side(side)):
                moved = elaborate_dual(d, side, x)
                assert check(moved, allow_cut=False).ok
                other = "R" if side == "L" else "L"
                assert moved.conclusion.side(other).count(dual(x)) == s.side(other).count(dual(x)) + 1


def test_elaborate_dual_rejects_missing_formula():
    with pytest.raises(ValueError):
        elaborate_dual(proof("(|- () (1))"), "L", One)
