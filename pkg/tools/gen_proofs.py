"""Regenerate the derivation files under proofs/.

    python3 tools/gen_proofs.py [outdir]

Every derivation comes from bounded search or from the cut builder and is
re-checked before it is written.
"""
import sys
from pathlib import Path

from lpc.cutelim import cut_node
from lpc.kernel import Derivation, RuleId, check, show_derivation
from lpc.search import SearchBudget, enumerate_provable, search
from lpc.syntax import parse_prop, parse_sequent

BUDGET = SearchBudget(depth=8, contractions=1, nodes=20000)


def prove(text):
    d = search(parse_sequent(text), BUDGET)
    if not isinstance(d, Derivation):
        raise SystemExit(f"no proof for {text}")
    return d


def cut(first, second, formula):
    d = cut_node(prove(first), prove(second), parse_prop(formula))
    rep = check(d)
    if not rep.ok:
        raise SystemExit(f"cut on {formula} does not check: {rep}")
    return d


def rules(d):
    yield d.rule
    for p in d.premises:
        yield from rules(p)


def structural():
    goals = [
        "(|- ((! B)) ((tensor B B)))",
        "(|- ((par 1 1)) ((? 1)))",
        "(||- ((! B)) ((tensor (! B) (! B))))",
        "(||- ((par (? 1) (? 1))) ((? 1)))",
        "(||- ((tensor (! 1) 1p)) ((! 1)))",
        "(||- ((? 1)) ((par (? 1) Bc)))",
    ]
    return [prove(g) for g in goals]


def cuts():
    return [
        cut("(|- () ((tensor 1 1)))", "(|- ((tensor 1 1)) (1))", "(tensor 1 1)"),
        cut("(||- () ((! 1)))", "(|- ((! 1)) (1))", "(! 1)"),
        cut("(||- () ((! 1)))", "(||- ((! 1)) ((tensor (! 1) (! 1))))", "(! 1)"),
        cut("(|- (B) ((? B)))", "(||- ((? B)) ())", "(? B)"),
        cut("(||- ((par (? 1) (? 1))) ((? 1)))", "(||- ((? 1)) ((par (? 1) Bc)))", "(? 1)"),
        cut("(|- () ((& 1 T)))", "(|- ((& 1 T)) ((+ 1 0)))", "(& 1 T)"),
        cut("(|- ((F! 1p)) ((F! 1p)))", "(|- ((F! 1p)) (1))", "(F! 1p)"),
        cut("(|- (B) ((F? Bc)))", "(|- ((F? Bc)) ())", "(F? Bc)"),
    ]


def nested():
    inner = cut("(|- () ((tensor 1 1)))", "(|- ((tensor 1 1)) (1))", "(tensor 1 1)")
    d = cut_node(inner, prove("(|- (1) ((par 1 B)))"), parse_prop("1"))
    assert check(d).ok
    return [d]


def searched(limit_per_rule=2):
    """Small cut-free proofs chosen so each rule they use appears at least twice."""
    seen = {}
    picked = []
    for _, d in enumerate_provable(4, SearchBudget(6, 1, 2000)):
        new = [r for r in set(rules(d)) if seen.get(r, 0) < limit_per_rule]
        if new:
            picked.append(d)
            for r in set(rules(d)):
                seen[r] = seen.get(r, 0) + 1
    return picked


def write(path, ds, header):
    for d in ds:
        assert check(d).ok, show_derivation(d)
    text = f"; {header}\n" + "\n\n".join(show_derivation(d) for d in ds) + "\n"
    path.write_text(text, encoding="utf-8")
    return ds


def main(outdir="proofs"):
    out = Path(outdir)
    out.mkdir(exist_ok=True)
    files = {
        "ax.lpc": ([prove("(|- (1) (1))")], "identity axiom on the unit"),
        "cut1.lpc": ([cuts()[0]], "one linear cut"),
        "cuts.lpc": (cuts() + nested(), "each cut rule, plus a nested cut"),
        "structural.lpc": (structural(), "contraction and the persistent multiplicatives"),
        "searched.lpc": (searched(), "cut-free proofs found by bounded search"),
    }
    used = set()
    total = 0
    for name, (ds, header) in files.items():
        write(out / name, ds, header)
        total += len(ds)
        for d in ds:
            used |= set(rules(d))
    missing = [r.value for r in RuleId if r not in used]
    print(f"{total} derivations in {len(files)} files; rules missing: {missing or 'none'}")
    return 1 if missing else 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
