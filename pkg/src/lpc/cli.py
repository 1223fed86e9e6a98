"""Command-line entry point: `lpc <subcommand> ...`.

Exit status is 0 when the verdict is positive, 1 when it is negative and 2 for
usage, parse or parameter errors.  Output is deterministic for fixed inputs.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .cutelim import CutElimError, elaborate_dual, eliminate_all_traced
from .kernel import Derivation, check, derivation_from_sexpr, displacement_violations, show_derivation
from .laws import check_laws
from .models import DomainTooLarge, ModelError, instance_build
from .search import EXHAUSTED, SearchBudget, enumerate_provable, search
from .syntax import Mode, ModeError, Prop, Sequent, SyntaxErr, dual, mode_of, neg, parse, read_sexprs, show


class UsageError(Exception):
    pass


class Out:
    """Writes either tab-separated text or one JSON object per line."""

    def __init__(self, stream, structured):
        self.stream, self.structured = stream, structured

    def emit(self, kind, line="", /, **fields):
        if self.structured:
            rec = {"record": kind, **fields}
            self.stream.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            self.stream.write(line + "\n")


def _text(arg):
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _forms(arg):
    return read_sexprs(_text(arg))


def _derivations(arg):
    out = []
    for e in _forms(arg):
        if not (isinstance(e, list) and e and e[0] == "rule"):
            raise UsageError("expected derivation scripts of the form (rule ...)")
        out.append(derivation_from_sexpr(e))
    if not out:
        raise UsageError("no derivations in input")
    return out


def _params(items):
    params = {}
    for item in items or ():
        for part in item.split(","):
            if not part:
                continue
            key, sep, value = part.partition("=")
            if not sep:
                raise UsageError(f"parameter {part!r} is not key=value")
            try:
                params[key] = int(value)
            except ValueError:
                raise UsageError(f"parameter {key} needs an integer, got {value!r}") from None
    return params


# ---------------------------------------------------------------- subcommands

def cmd_check(args, out):
    ok = True
    for n, d in enumerate(_derivations(args.input)):
        rep = check(d, allow_cut=not args.no_cut)
        ok &= rep.ok
        if rep.ok:
            out.emit("check", "ok", index=n, ok=True)
        else:
            out.emit("check", str(rep), index=n, ok=False, cause=rep.cause, path=list(rep.path),
                     rule=rep.rule.value if rep.rule else None, message=rep.message)
    return 0 if ok else 1


def _require_checked(d, n, out, allow_cut=True):
    rep = check(d, allow_cut=allow_cut)
    if not rep.ok:
        out.emit("rejected", f"rejected\t{n}\t{rep.cause}\t{rep.message}", index=n, cause=rep.cause,
                 message=rep.message)
    return rep.ok


def cmd_elim(args, out):
    results = []
    for n, d in enumerate(_derivations(args.input)):
        if not _require_checked(d, n, out):
            return 1
        cut_free, trace = eliminate_all_traced(d)
        rep = check(cut_free, allow_cut=False)
        if not rep.ok or cut_free.conclusion != d.conclusion:
            out.emit("error", f"error\t{n}\telimination produced an invalid derivation", index=n)
            return 1
        if args.trace:
            for r in trace.records():
                out.emit("trace", f"trace\t{n}\t{r['step']}\tparent={r['parent']}\t{r['case']}\t"
                         f"measure={tuple(r['measure'])}", index=n, **r)
            out.emit("measure", f"decreasing\t{n}\t{trace.decreasing()}", index=n,
                     decreasing=trace.decreasing())
        results.append(cut_free)
    text = "\n".join(show_derivation(d) for d in results) + "\n"
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.emit("emitted", f"emitted\t{len(results)}\t{args.emit}", count=len(results), path=args.emit)
    elif out.structured:
        for n, d in enumerate(results):
            out.emit("derivation", index=n, text=show_derivation(d))
    else:
        out.stream.write(text)
    return 0


def cmd_dual(args, out):
    forms = _forms(args.input)
    if len(forms) == 1 and not (isinstance(forms[0], list) and forms[0] and forms[0][0] == "rule"):
        x = parse(_text(args.input))
        if isinstance(x, Sequent):
            raise UsageError("dual takes a proposition or a derivation, not a bare sequent")
        fields = {"prop": show(x), "dual": show(dual(x)), "mode": mode_of(x).name}
        line = f"dual\t{show(dual(x))}"
        if mode_of(x) is Mode.L:
            fields["neg"] = show(neg(x))
        out.emit("dual", line, **fields)
        return 0
    results = []
    for n, d in enumerate(_derivations(args.input)):
        if not _require_checked(d, n, out, allow_cut=False):
            return 1
        side = args.side
        items = d.conclusion.side(side)
        if not items:
            raise UsageError(f"derivation {n} has nothing on side {side}")
        idx = len(items) - 1 if args.index is None else args.index
        if not 0 <= idx < len(items):
            raise UsageError(f"index {idx} out of range for side {side}")
        moved = elaborate_dual(d, side, items[idx])
        if not check(moved, allow_cut=False).ok:
            out.emit("error", f"error\t{n}\tdual derivation does not check", index=n)
            return 1
        results.append(moved)
    if out.structured:
        for n, d in enumerate(results):
            out.emit("derivation", index=n, text=show_derivation(d))
    else:
        out.stream.write("\n".join(show_derivation(d) for d in results) + "\n")
    return 0


def cmd_search(args, out):
    goal = parse(_text(args.goal))
    if not isinstance(goal, Sequent):
        raise UsageError("search goal must be a sequent such as (|- () (1))")
    budget = SearchBudget(args.depth, args.contractions, args.nodes)
    d = search(goal, budget)
    if d == EXHAUSTED:
        out.emit("search", EXHAUSTED, goal=show(goal), found=False)
        return 1
    out.emit("search", show_derivation(d), goal=show(goal), found=True, text=show_derivation(d))
    return 0


def _morphism_fields(f):
    if hasattr(f, "m"):
        return {"category": "L", "dom": len(f.dom), "cod": len(f.cod),
                "matrix": [[int(v) for v in row] for row in f.m]}
    if hasattr(f, "pmap"):
        return {"category": "C", "dom": len(f.dom.base), "cod": len(f.cod.base), "table": list(map(int, f.pmap.table))}
    return {"category": "P", "dom": len(f.dom), "cod": len(f.cod), "table": list(map(int, f.table))}


def cmd_interp(args, out):
    from .semantics import interp_derivation
    model = instance_build(args.model, _params(args.params))
    ok = True
    for n, d in enumerate(_derivations(args.input)):
        if not _require_checked(d, n, out):
            return 1
        try:
            f = interp_derivation(d, model)
        except DomainTooLarge as e:
            out.emit("interp", f"too-large\t{n}\t{e}", index=n, too_large=True, message=str(e))
            ok = False
            continue
        fields = _morphism_fields(f)
        body = fields.get("matrix", fields.get("table"))
        out.emit("interp", f"{n}\t{fields['category']}\t{fields['dom']}->{fields['cod']}\t{json.dumps(body)}",
                 index=n, **fields)
    return 0 if ok else 1


def cmd_verify_model(args, out):
    params = _params(args.params)
    params.setdefault("max_size", args.max_size)
    model = instance_build(args.model, params)
    laws = [x for x in (args.laws or "").split(",") if x] or None
    report = check_laws(model, {"max_size": args.max_size, "seed": args.seed, "laws": laws})
    for r in sorted(report.records, key=lambda r: (r.family, r.law)):
        status = "pass" if r.ok else "FAIL"
        tail = f"\twitness={r.witness}" if r.witness else ""
        out.emit("law", f"{r.family}\t{r.law}\t{status}\tchecked={r.checked}{tail}",
                 family=r.family, law=r.law, ok=r.ok, checked=r.checked, witness=r.witness)
    verdict = "pass" if report.ok and report.records else "fail"
    out.emit("verdict", verdict, model=args.model, ok=verdict == "pass", laws=len(report.records))
    return 0 if verdict == "pass" else 1


def cmd_corpus(args, out):
    budget = SearchBudget(args.depth, args.contractions, args.nodes)
    corpus = enumerate_provable(args.size, budget)
    violations = 0
    for s, d in corpus:
        violations += len(displacement_violations(d))
        if out.structured:
            out.emit("derivation", sequent=show(s), text=show_derivation(d))
        else:
            out.stream.write(show_derivation(d) + "\n")
    if out.structured:
        out.emit("summary", derivations=len(corpus), displacement_violations=violations)
    else:
        out.stream.write(f"; derivations={len(corpus)} displacement_violations={violations}\n")
    return 0 if violations == 0 else 1


# ---------------------------------------------------------------- argument parsing

def _parser():
    p = argparse.ArgumentParser(prog="lpc", description="Checker, cut eliminator, prover and model tools.")
    p.add_argument("--format", choices=("pretty", "structured"), default="pretty",
                   help="structured writes one JSON record per line")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check derivation scripts")
    c.add_argument("input", help="file path, inline text, or - for stdin")
    c.add_argument("--no-cut", action="store_true", help="reject derivations that use a cut rule")
    c.set_defaults(run=cmd_check)

    c = sub.add_parser("elim", help="eliminate every cut")
    c.add_argument("input")
    c.add_argument("--trace", action="store_true", help="print the elimination trace")
    c.add_argument("--emit", metavar="FILE", help="write the cut-free derivations to FILE")
    c.set_defaults(run=cmd_elim)

    c = sub.add_parser("dual", help="dual of a proposition, or move a formula across a derivation")
    c.add_argument("input")
    c.add_argument("--side", choices=("L", "R"), default="R")
    c.add_argument("--index", type=int, help="position on that side (default: last)")
    c.set_defaults(run=cmd_dual)

    c = sub.add_parser("search", help="bounded cut-free proof search")
    c.add_argument("goal")
    c.add_argument("--depth", type=int, required=True)
    c.add_argument("--contractions", type=int, default=1)
    c.add_argument("--nodes", type=int, default=20000)
    c.set_defaults(run=cmd_search)

    c = sub.add_parser("interp", help="interpret derivations in a finite model")
    c.add_argument("input")
    c.add_argument("--model", required=True)
    c.add_argument("--params", nargs="*", help="key=value integers, e.g. q=3 max_dim=2")
    c.set_defaults(run=cmd_interp)

    c = sub.add_parser("verify-model", help="check every law family on small objects")
    c.add_argument("--model", required=True)
    c.add_argument("--max-size", type=int, required=True)
    c.add_argument("--laws", help="comma-separated family names to restrict to")
    c.add_argument("--seed", type=int, default=0, help="seed for morphism sampling")
    c.add_argument("--params", nargs="*")
    c.set_defaults(run=cmd_verify_model)

    c = sub.add_parser("corpus", help="print every provable sequent up to a size, with proofs")
    c.add_argument("--size", type=int, required=True)
    c.add_argument("--depth", type=int, required=True)
    c.add_argument("--contractions", type=int, default=1)
    c.add_argument("--nodes", type=int, default=2000)
    c.set_defaults(run=cmd_corpus)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    out = Out(stdout, args.format == "structured")
    try:
        return args.run(args, out)
    except (UsageError, SyntaxErr, ModeError, ModelError, ValueError, CutElimError) as e:
        stderr.write(f"lpc {args.command}: {e}\n")
        stderr.write(parser.format_usage())
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
