"""Acceptance criteria, one test each.

Every test records a one-line summary; the conftest hook prints them all after
the run as `criterion N: PASS|FAIL  detail`.
"""
import io
import time

import pytest

from lpc import involution
from lpc.cli import run
from lpc.corpora import PROOFS, cut_instances, searched, shipped
from lpc.cutelim import elaborate_dual, eliminate_all_traced
from lpc.kernel import CUTS, PERS, RuleId, check, displacement_violations, parse_derivations
from lpc.models import instance_build
from lpc.search import EXHAUSTED, SearchBudget, search
from lpc.semantics import expected_type, interp_derivation
from lpc.stability import stability
from lpc.syntax import Mode, dual, enumerate_props, lin, neg, pers, raw_sequent
from mutations import suite

INVOLUTION_COUNTS = {"L": 1539150042, "P": 31066, "C": 31066}


def cli(*argv):
    out = io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=io.StringIO())
    return code, out.getvalue()


@pytest.fixture
def report(record_property):
    def put(number, detail):
        record_property("criterion", (number, detail))
    return put


def rules(d):
    return {n.rule for _, n in d.nodes()}


def test_1_rule_coverage(report):
    started = time.perf_counter()
    ds = [d for ds in shipped().values() for d in ds]
    rejected = [str(check(d)) for d in ds if not check(d).ok]
    used = set().union(*(rules(d) for d in ds))
    cases = suite(ds)
    wrong = [(r.value, kind, check(m).cause) for r, kind, m, want in cases
             if check(m).ok or check(m).cause != want]
    mutated_rules = {r for r, *_ in cases}
    seconds = time.perf_counter() - started
    report(1, f"{len(ds)} derivations, {len(used)}/{len(RuleId)} rules, {len(cases)} mutants "
              f"({len(wrong)} misjudged), {seconds:.2f}s")
    assert len(ds) >= 35
    assert not rejected
    assert used == set(RuleId)
    assert mutated_rules == set(RuleId)
    assert {kind for _, kind, _, _ in cases} == {"principal", "context", "mode"}
    assert not wrong, wrong[:5]
    assert seconds < 5


def test_2_duality_involution(report):
    r = involution.check_involution(4)
    report(2, f"{r.total} propositions to depth 4 {r.counts}, {r.violations} violations, "
              f"{r.sample_mismatches}/{r.sampled} sample mismatches, {r.backend}, {r.seconds:.1f}s")
    assert r.counts == INVOLUTION_COUNTS
    assert r.violations == 0 and r.sample_mismatches == 0
    assert r.seconds < 30


def test_3_displacement(report):
    code, out = cli("corpus", "--size", 4, "--depth", 5)
    ds = parse_derivations(out)
    persistent = sum(1 for d in ds for _, n in d.nodes() if n.conclusion.kind is PERS)
    violations = sum(len(displacement_violations(d)) for d in ds)
    report(3, f"{len(ds)} derivations, {persistent} persistent sequents, {violations} violations")
    assert code == 0 and ds
    assert out.splitlines()[-1] == f"; derivations={len(ds)} displacement_violations=0"
    assert violations == 0


def test_4_cut_elimination(report):
    cuts = cut_instances(40)
    bad, slowest = [], 0.0
    for d in cuts:
        started = time.perf_counter()
        out, trace = eliminate_all_traced(d)
        slowest = max(slowest, time.perf_counter() - started)
        if not (trace.decreasing() and check(out, allow_cut=False).ok and out.conclusion == d.conclusion):
            bad.append(d)
    per_rule = {r.value: sum(d.rule is r for d in cuts) for r in sorted(CUTS, key=lambda r: r.value)}
    report(4, f"{len(cuts)} instances {per_rule}, {len(bad)} failures, slowest {slowest * 1000:.1f}ms")
    assert len(cuts) >= 200 and all(per_rule.values())
    assert not bad
    assert slowest < 1


def test_5_duality_admissibility(report):
    tried, failures = 0, []
    for d in searched(4, 5):
        s = d.conclusion
        for x in dict.fromkeys(s.right):
            tried += 1
            rest = list(s.right)
            rest.remove(x)
            want = raw_sequent(s.kind, list(s.left) + [dual(x)], rest)
            try:
                moved = elaborate_dual(d, "R", x)
            except Exception as e:  # any failure to produce a proof counts
                failures.append((s, x, repr(e)))
                continue
            if not check(moved, allow_cut=False).ok or moved.conclusion != want:
                failures.append((s, x, "bad result"))
    report(5, f"{tried} right formulas moved, {len(failures)} failures")
    assert tried and not failures, failures[:3]


def test_6_consistency(report):
    started = time.perf_counter()
    code, out = cli("search", "(|- () (0))", "--depth", 8, "--contractions", 2)
    budget = SearchBudget(6, 1, 2000)
    by_mode = enumerate_props(3)
    both, found = [], 0
    for m in Mode:
        for x in by_mode[m]:
            if m is Mode.L:
                goals = lin((), (x,)), lin((), (neg(x),))
            else:
                goals = pers((), (x,)), pers((), (dual(x),))
            hits = [search(g, budget) != EXHAUSTED for g in goals]
            found += sum(hits)
            if all(hits):
                both.append(x)
    seconds = time.perf_counter() - started
    total = sum(len(v) for v in by_mode.values())
    report(6, f"empty-goal search {out.strip()}; {total} propositions, {found} one-sided proofs, "
              f"{len(both)} provable both ways, {seconds:.1f}s")
    assert code == 1 and out == "exhausted\n"
    assert not both
    assert seconds < 120


def test_7_model_laws(report):
    started = time.perf_counter()
    verdicts = {}
    for model, size, extra in (("finvect", 2, ["q=2"]), ("rel", 3, []), ("boolalg", 3, [])):
        argv = ["verify-model", "--model", model, "--max-size", size] + (["--params", *extra] if extra else [])
        code, out = cli(*argv)
        lines = out.splitlines()
        fams = {line.split("\t")[0] for line in lines[:-1]}
        verdicts[model] = (code, lines[-1], len(lines) - 1, fams,
                           [line for line in lines if "\tFAIL\t" in line])
    seconds = time.perf_counter() - started
    report(7, ", ".join(f"{m} {v[1]} ({v[2]} laws)" for m, v in verdicts.items()) + f", {seconds:.1f}s")
    for model, (code, verdict, _, fams, failed) in verdicts.items():
        assert code == 0 and verdict == "pass", (model, failed)
        assert {"adjunction", "comonoid", "monoid", "functor", "snake"} <= fams
    assert "birkhoff" in verdicts["boolalg"][3]
    assert seconds < 180


def test_8_semantic_well_typedness(report):
    ds = [d for ds in shipped().values() for d in ds] + list(searched(4, 5))
    failures = []
    for name in ("rel", "finvect"):
        model = instance_build(name)
        for d in ds:
            try:
                f = interp_derivation(d, model)
                ok = (f.dom, f.cod) == expected_type(d.conclusion, model)
            except Exception as e:  # an exception is a failure to return a morphism
                ok = False
            if not ok:
                failures.append((name, d.conclusion))
    report(8, f"{len(ds)} derivations in rel and finvect, {len(failures)} failures")
    assert not failures, failures[:3]


def test_9_denotation_stability(report, tmp_path):
    rep = stability(cut_instances(40), instance_build("rel"))
    path = tmp_path / "stability.tsv"
    path.write_text("\n".join(rep.lines()) + "\n")
    report(9, f"re-eliminated equal {rep.idempotent}/{rep.instances}; independent proofs share the "
              f"denotation in {rep.shared}/{rep.searched} ({rep.shared_fraction:.1%}, not gated)")
    assert path.read_text().startswith("model\trel")
    assert rep.idempotent == rep.instances
