import pytest

from lpc.kernel import Derivation, check
from lpc.search import EXHAUSTED, SearchBudget, enumerate_provable, props_of_size, search, sequents_of_size
from lpc.syntax import Mode, parse_sequent


@pytest.mark.parametrize("goal", [
    "(|- () (1))",
    "(|- (1) (1))",
    "(|- ((tensor 1 1)) ((tensor 1 1)))",
    "(|- () ((& 1 T)))",
    "(|- (0) ())",
    "(||- () ((! 1)))",
    "(|- ((! B)) ((tensor B B)))",
    "(||- ((? 1)) ((par (? 1) Bc)))",
])
def test_finds_proofs(goal):
    d = search(parse_sequent(goal), SearchBudget(8, 1, 20000))
    assert isinstance(d, Derivation)
    assert check(d, allow_cut=False).ok
    assert d.conclusion == parse_sequent(goal)


@pytest.mark.parametrize("goal", ["(|- () (0))", "(|- () ())", "(|- () (B))", "(||- () (Bc))"])
def test_unprovable_goals_exhaust(goal):
    assert search(parse_sequent(goal), SearchBudget(6, 2, 20000)) == EXHAUSTED


def test_contraction_needs_budget():
    goal = parse_sequent("(|- ((! B)) ((tensor B B)))")
    assert search(goal, SearchBudget(8, 0, 20000)) == EXHAUSTED
    assert isinstance(search(goal, SearchBudget(8, 1, 20000)), Derivation)


def test_depth_budget_bounds_height():
    goal = parse_sequent("(|- (1 1) ((tensor 1 1)))")
    assert search(goal, SearchBudget(1, 0, 100)) == EXHAUSTED
    d = search(goal, SearchBudget(8, 0, 1000))
    assert d.depth <= 8


@pytest.mark.parametrize("bad", [{"depth": -1}, {"nodes": 1.5}, {"contractions": True}])
def test_budget_validation(bad):
    with pytest.raises(ValueError):
        SearchBudget(**bad)


def test_search_is_deterministic():
    goal = parse_sequent("(|- ((+ 1 1)) ((& 1 1)))")
    assert search(goal) == search(goal)


def test_sizes_partition():
    for n in (1, 2, 3):
        by_mode = props_of_size(n)
        assert all(x.size == n and x.mode is m for m in Mode for x in by_mode[m])
    ss = sequents_of_size(2)
    assert len(ss) == len(set(ss))


def test_enumerate_provable_small():
    found = enumerate_provable(2, SearchBudget(5, 1, 500))
    assert found and all(check(d, allow_cut=False).ok and d.conclusion == s for s, d in found)
    assert found == enumerate_provable(2, SearchBudget(5, 1, 500))
