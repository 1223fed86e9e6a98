import pytest

from lpc.corpora import searched, shipped
from lpc.kernel import (
    CUTS, Derivation, LIN, PERS, RuleId, check, check_records, contract, displaced, displacement_violations,
    node, parse_derivations, replicate, show_derivation, weaken, weaken_all,
)
from lpc.syntax import Bang, Bot, BotC, One, OneP, Sequent, Why, parse_sequent
from mutations import suite

R = RuleId


@pytest.fixture(scope="module")
def proofs():
    return [d for ds in shipped().values() for d in ds]


def rules_in(ds):
    return {n.rule for d in ds for _, n in d.nodes()}


def test_shipped_corpus_checks_and_covers_every_rule(proofs):
    assert len(proofs) >= 35
    for d in proofs:
        assert check(d).ok, str(check(d))
    assert rules_in(proofs) == set(RuleId)


def test_text_round_trip(proofs):
    for d in proofs:
        assert parse_derivations(show_derivation(d)) == [d]


@pytest.mark.parametrize("kind", ["principal", "context", "mode"])
def test_mutations_rejected_with_cause(proofs, kind):
    cases = [c for c in suite(proofs) if c[1] == kind]
    assert cases
    for rule, _, mutant, cause in cases:
        rep = check(mutant)
        assert not rep.ok and rep.cause == cause and rep.path == (), (rule, str(rep))


def test_every_rule_has_a_mutation(proofs):
    assert {rule for rule, *_ in suite(proofs)} == set(RuleId)


def test_axiom():
    s = parse_sequent("(|- (1) (1))")
    assert check(node(R.AX, s, (("L", 0), ("R", 0)))).ok
    bad = parse_sequent("(|- (1) (B))")
    assert check(node(R.AX, bad, (("L", 0), ("R", 0)))).cause == "principal-mismatch"


def test_arity_and_kind():
    s = parse_sequent("(|- () (1))")
    d = node(R.ONE_R, s, (("R", 0),))
    assert check(Derivation(R.ONE_R, s, (("R", 0),), (d,))).cause == "arity"
    p = parse_sequent("(||- () (1p))")
    assert check(node(R.ONE_R, p, (("R", 0),))).cause == "judgment-kind"
    assert check(node(R.ONE_P_R, p, (("R", 0),))).ok


def test_cut_switch(proofs):
    with_cut = [d for d in proofs if d.has_cut()]
    assert {n.rule for d in with_cut for _, n in d.nodes()} >= set(CUTS)
    for d in with_cut:
        assert check(d).ok
        assert check(d, allow_cut=False).cause == "cut-forbidden"


def test_check_records_report_every_node(proofs):
    d = proofs[0]
    recs = check_records(d)
    assert len(recs) == d.size() and all(r["verdict"] == "ok" for r in recs)


def test_error_path_points_at_failing_node():
    top = parse_sequent("(|- () ((tensor 1 1)))")
    good = node(R.ONE_R, parse_sequent("(|- () (1))"), (("R", 0),))
    broken = node(R.ONE_R, parse_sequent("(|- () (1))"), (("L", 0),))
    d = node(R.TENSOR_R, top, (("R", 0),), good, broken)
    rep = check(d)
    assert not rep.ok and rep.path == (1,)


def test_displacement_on_persistent_sequents():
    s = Sequent(PERS, [OneP, BotC], [Bang(One)])
    assert [s.side(side)[i] for side, i in displaced(s)] == [BotC, Bang(One)]
    with pytest.raises(ValueError):
        displaced(Sequent(LIN, [], [One]))
    for d in searched(3, 5):
        assert displacement_violations(d) == []


def test_structural_helpers_produce_checked_proofs():
    d = node(R.AX_P, Sequent(PERS, [Bang(One)], [Bang(One)]), (("L", 0), ("R", 0)))
    w = weaken(d, "L", OneP)
    assert check(w).ok and w.conclusion.left.count(OneP) == 1
    c = contract(weaken(w, "L", OneP), "L", OneP)
    assert check(c).ok and c.conclusion == w.conclusion
    three = weaken(weaken(d, "L", Bang(One)), "L", Bang(One))
    r = replicate(three, "L", Bang(One), 3)
    assert check(r).ok and r.conclusion.left.count(Bang(One)) == 1
    assert replicate(d, "L", Bang(One), 1) is d
    z = replicate(d, "L", Bang(One), 0)
    assert check(z).ok and z.conclusion.left.count(Bang(One)) == 2
    with pytest.raises(ValueError):
        replicate(d, "R", Bang(One), 1)
    wa = weaken_all(d, [OneP], [Why(Bot)])
    assert check(wa).ok


def test_natural_context_enforced():
    prem = node(R.ONE_R, parse_sequent("(|- () (1))"), (("R", 0),))
    ok = node(R.BANG_R, parse_sequent("(||- () ((! 1)))"), (("R", 0),), prem)
    assert check(ok).ok
    lin_prem = node(R.AX, parse_sequent("(|- (1) (1))"), (("L", 0), ("R", 0)))
    assert not check(node(R.BANG_R, parse_sequent("(|- (1) ((! 1)))"), (("R", 0),), lin_prem)).ok
