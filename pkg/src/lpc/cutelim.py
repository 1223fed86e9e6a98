"""Cut elimination by induction on replicated cuts, plus the duality constructions.

A replicated cut on x with n copies removes x once from the side where x is
introduced and n times from the side that may duplicate it (the left for
producers, the right for consumers).  Linear cuts always use one copy.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .build import SHARED, SPLIT, assemble, components, linearize, principal_formula, principal_side, zero_premise
from .kernel import (
    CUTS, STRUCTURAL, Derivation, RuleId, contract_all, cut_formula, node, replicate, weaken_all,
    LIN, PERS,
)
from .syntax import Mode, ModeError, Prop, Sequent, ctx_sub, dual, show

R = RuleId
WEAKENINGS = frozenset({R.WEAK_L, R.WEAK_R, R.PWEAK_L, R.PWEAK_R})


class CutElimError(RuntimeError):
    """Input that does not fit a cut shape, or a proof case that should be unreachable."""

    def __init__(self, msg, trace=None):
        super().__init__(msg)
        self.trace = trace


@dataclass(frozen=True)
class CutSpec:
    formula: Prop
    copies: int
    rule: RuleId

    def __post_init__(self):
        if self.rule not in CUTS:
            raise ValueError(f"{self.rule} is not a cut rule")
        if self.rule is R.CUT_L and (self.formula.mode is not Mode.L or self.copies != 1):
            raise ValueError("a linear cut has exactly one copy of a linear formula")
        if self.rule is not R.CUT_L and self.copies < 1:
            raise ValueError("persistent cuts take at least one copy")


@dataclass
class Step:
    label: str
    measure: tuple
    parent: int | None


@dataclass
class EliminationTrace:
    """One step per replicated cut handled; children point at the cut that spawned them."""
    steps: list = field(default_factory=list)

    def push(self, measure, parent):
        self.steps.append(Step("?", measure, parent))
        return len(self.steps) - 1

    def decreasing(self) -> bool:
        return all(s.parent is None or s.measure < self.steps[s.parent].measure for s in self.steps)

    def records(self):
        return [{"step": i, "parent": s.parent, "case": s.label, "measure": list(s.measure)}
                for i, s in enumerate(self.steps)]


def _count(items, x):
    return sum(1 for y in items if y == x)


def _target(x, d1, d2, n, kind):
    s1, s2 = d1.conclusion, d2.conclusion
    n1, n2 = (n, 1) if x.mode is Mode.C else (1, n)
    right1 = ctx_sub(s1.right, [x] * n1)
    left2 = ctx_sub(s2.left, [x] * n2)
    if right1 is None or left2 is None:
        raise CutElimError(f"premises do not carry {show(x)} as the cut needs")
    return Sequent(kind, s1.left + left2, right1 + s2.right)


def cut_rule_for(mode: Mode, kind) -> RuleId:
    if mode is Mode.L:
        return R.CUT_L
    if mode is Mode.P:
        return R.CUT_P if kind is LIN else R.CUT_PP
    return R.CUT_C if kind is LIN else R.CUT_CP


def cut_node(d1: Derivation, d2: Derivation, x: Prop) -> Derivation:
    """The single cut of d1 (x on the right) against d2 (x on the left); not checked here."""
    s1, s2 = d1.conclusion, d2.conclusion
    if x not in s1.right or x not in s2.left:
        raise CutElimError(f"{show(x)} must be on the right of the first and the left of the second premise")
    kind = LIN if x.mode is Mode.L else (s2.kind if x.mode is Mode.P else s1.kind)
    try:
        concl = Sequent(kind, s1.left + ctx_sub(s2.left, [x]), ctx_sub(s1.right, [x]) + s2.right)
    except ModeError as e:
        raise CutElimError(f"no cut rule joins these premises on {show(x)}: {e}") from None
    return Derivation(cut_rule_for(x.mode, kind), concl, (), (d1, d2))


def _introduces(d: Derivation, side: str, x: Prop) -> bool:
    if not d.principal or d.rule in STRUCTURAL:
        return False
    return any(s == side and d.conclusion.side(s)[i] == x for s, i in d.principal)


class _Eliminator:
    def __init__(self, trace: EliminationTrace):
        self.trace = trace

    def cut(self, x, d1, d2, n, parent=None):
        """Cut-free proof of the replicated cut of x between d1 (x right) and d2 (x left)."""
        kind = d1.conclusion.kind if x.mode is Mode.C else d2.conclusion.kind
        self._validate(x, d1, d2, n)
        goal = _target(x, d1, d2, n, kind)
        me = self.trace.push((x.size, d1.depth + d2.depth), parent)
        out = self._dispatch(x, d1, d2, n, kind, me)
        if out.conclusion != goal:
            raise CutElimError(f"case {self.trace.steps[me].label} built {show(out.conclusion)}, "
                               f"expected {show(goal)}", self.trace)
        return out

    @staticmethod
    def _validate(x, d1, d2, n):
        s1, s2 = d1.conclusion, d2.conclusion
        if n < 0:
            raise CutElimError("negative copy count")
        if x.mode is Mode.L:
            if s1.kind is not LIN or s2.kind is not LIN or n != 1:
                raise CutElimError("a linear cut joins two linear proofs on one copy")
        elif x.mode is Mode.P:
            if s1.kind is not PERS:
                raise CutElimError(f"cutting producer {show(x)} needs a persistent first premise")
        elif s2.kind is not PERS:
            raise CutElimError(f"cutting consumer {show(x)} needs a persistent second premise")

    def _label(self, me, text):
        self.trace.steps[me].label = text

    def _dispatch(self, x, d1, d2, n, kind, me):
        mode = x.mode
        # rep holds the n copies on rep_side; the rest_* lists are what the other proof adds
        if mode is Mode.C:
            rep, rep_side, other = d1, "R", d2
            rest_left, rest_right = ctx_sub(d2.conclusion.left, [x]), d2.conclusion.right
        else:
            rep, rep_side, other = d2, "L", d1
            rest_left, rest_right = d1.conclusion.left, ctx_sub(d1.conclusion.right, [x])

        if n == 0:
            self._label(me, "no-copies")
            return weaken_all(rep, rest_left, rest_right)

        if mode is not Mode.L and rep.rule in STRUCTURAL and principal_side(rep) == rep_side \
                and principal_formula(rep) == x:
            weak = rep.rule in WEAKENINGS
            self._label(me, "weakening" if weak else "contraction")
            m = n - 1 if weak else n + 1
            if mode is Mode.C:
                return self.cut(x, rep.premises[0], other, m, me)
            return self.cut(x, other, rep.premises[0], m, me)

        out = self._axiom(x, d1, d2, n, kind)
        if out is not None:
            self._label(me, "axiom")
            return out

        p1 = _introduces(d1, "R", x)
        p2 = _introduces(d2, "L", x)
        if p1 and p2:
            return self._principal(x, d1, d2, n, me)
        if not p2:
            return self._commute(x, d1, d2, n, kind, me, moving=2)
        return self._commute(x, d1, d2, n, kind, me, moving=1)

    # ---------------------------------------------------------------- axioms
    @staticmethod
    def _axiom(x, d1, d2, n, kind):
        axioms = (R.AX, R.AX_P, R.AX_C)
        if x.mode is Mode.L:
            if d1.rule is R.AX:
                return d2
            if d2.rule is R.AX:
                return d1
            return None
        if x.mode is Mode.P:
            if d1.rule is R.AX_P:
                return replicate(d2, "L", x, n)
            if d2.rule in axioms:
                return linearize(d1) if kind is LIN else d1
            return None
        if d2.rule is R.AX_C:
            return replicate(d1, "R", x, n)
        if d1.rule in axioms:
            return linearize(d2) if kind is LIN else d2
        return None

    # ---------------------------------------------------------------- principal cases
    def _principal(self, x, d1, d2, n, me):
        t = x.tag
        self._label(me, f"principal:{t}")
        if x.mode is Mode.L:
            return self._principal_linear(x, d1, d2, me)
        if x.mode is Mode.P:
            # d2 used one copy; the other n - 1 are cut first against all of d1
            rest = d2.premises[0]
            e = rest if n == 1 else self.cut(x, d1, rest, n - 1, me)
            if t == "tensor_p":
                d11, d12 = d1.premises
                f = self.cut(x.args[1], d12, e, 1, me)
                g = self.cut(x.args[0], d11, f, 1, me)
            elif t == "one_p":
                g = e
            elif t == "bang":
                g = self.cut(x.args[0], d1.premises[0], e, 1, me)
            else:
                raise CutElimError(f"no introduction pair for producer {show(x)}", self.trace)
            if n > 1:
                s1 = d1.conclusion
                g = contract_all(g, s1.left, ctx_sub(s1.right, [x]))
            return g
        rest = d1.premises[0]
        e = rest if n == 1 else self.cut(x, rest, d2, n - 1, me)
        if t == "par_c":
            d21, d22 = d2.premises
            f = self.cut(x.args[1], e, d22, 1, me)
            g = self.cut(x.args[0], f, d21, 1, me)
        elif t == "bot_c":
            g = e
        elif t == "why":
            g = self.cut(x.args[0], e, d2.premises[0], 1, me)
        else:
            raise CutElimError(f"no introduction pair for consumer {show(x)}", self.trace)
        if n > 1:
            s2 = d2.conclusion
            g = contract_all(g, ctx_sub(s2.left, [x]), s2.right)
        return g

    def _principal_linear(self, x, d1, d2, me):
        t = x.tag
        a = x.args
        if t == "with":
            i = 0 if d2.rule is R.WITH_L1 else 1
            return self.cut(a[i], d1.premises[i], d2.premises[0], 1, me)
        if t == "plus":
            i = 0 if d1.rule is R.PLUS_R1 else 1
            return self.cut(a[i], d1.premises[0], d2.premises[i], 1, me)
        if t == "tensor":
            d11, d12 = d1.premises
            e = self.cut(a[1], d12, d2.premises[0], 1, me)
            return self.cut(a[0], d11, e, 1, me)
        if t == "par":
            d21, d22 = d2.premises
            e = self.cut(a[0], d1.premises[0], d21, 1, me)
            return self.cut(a[1], e, d22, 1, me)
        if t == "one":
            return d2.premises[0]
        if t == "bot":
            return d1.premises[0]
        if t in ("fbang", "fwhy"):
            return self.cut(a[0], d1.premises[0], d2.premises[0], 1, me)
        raise CutElimError(f"no introduction pair for {show(x)}", self.trace)

    # ---------------------------------------------------------------- commuting cases
    def _commute(self, x, d1, d2, n, kind, me, moving):
        moved, fixed = (d2, d1) if moving == 2 else (d1, d2)
        side = "L" if moving == 2 else "R"
        holds_copies = x.mode is not Mode.L and (x.mode is Mode.P) == (moving == 2)
        want = n if holds_copies else 1
        self._label(me, f"commute-d{moving}:{moved.rule.value}")
        y = principal_formula(moved)
        yside = principal_side(moved)

        if not moved.premises:
            if moved.rule not in (R.TOP_R, R.ZERO_L):
                raise CutElimError(f"{moved.rule.value} cannot carry a passive {show(x)}", self.trace)
            goal = _target(x, d1, d2, n, kind)
            return zero_premise(moved.rule, kind, yside, y, goal.left, goal.right)

        comps = components(moved.rule, y)
        if len(moved.premises) == 1:
            ks = [want]
        elif moved.rule in SHARED:
            ks = [want, want]
        else:
            avail = [_count(p.conclusion.side(side), x) - _count([z for s, z in cs if s == side], x)
                     for p, cs in zip(moved.premises, comps)]
            first = min(want, avail[0])
            ks = [first, want - first]
            if ks[1] > avail[1]:
                raise CutElimError("split premises hold too few copies of the cut term", self.trace)

        if not holds_copies:
            # the moved side has x once; the copy count belongs to the fixed side
            ks = [n if k else 0 for k in ks]
        new = []
        for p, k in zip(moved.premises, ks):
            if moved.rule in SPLIT and k == 0:
                new.append(p)
            elif moving == 2:
                new.append(self.cut(x, fixed, p, k, me))
            else:
                new.append(self.cut(x, p, fixed, k, me))
        out = assemble(moved.rule, kind, yside, y, new)
        if moved.rule in SPLIT and holds_copies and all(ks):
            # the fixed side's context went into both premises
            fc = fixed.conclusion
            if moving == 2:
                out = contract_all(out, fc.left, ctx_sub(fc.right, [x]))
            else:
                out = contract_all(out, ctx_sub(fc.left, [x]), fc.right)
        return out


def eliminate_cut_plus(d1: Derivation, d2: Derivation, spec: CutSpec):
    """Cut-free proof of the replicated cut's conclusion, with its trace."""
    kind = d1.conclusion.kind if spec.formula.mode is Mode.C else d2.conclusion.kind
    actual = cut_rule_for(spec.formula.mode, kind)
    if actual is not spec.rule:
        raise CutElimError(f"premises instantiate {actual.value}, not {spec.rule.value}")
    trace = EliminationTrace()
    out = _Eliminator(trace).cut(spec.formula, d1, d2, spec.copies)
    return out, trace


def eliminate_all(d: Derivation, trace: EliminationTrace | None = None) -> Derivation:
    """Remove every cut, innermost first; each cut is handled as a one-copy replicated cut."""
    if not d.has_cut():
        return d
    if trace is None:
        trace = EliminationTrace()
    prem = tuple(eliminate_all(p, trace) for p in d.premises)
    if d.rule not in CUTS:
        return Derivation(d.rule, d.conclusion, d.principal, prem)
    return _Eliminator(trace).cut(cut_formula(d), prem[0], prem[1], 1)


def eliminate_all_traced(d: Derivation):
    trace = EliminationTrace()
    return eliminate_all(d, trace), trace


# ------------------------------------------------------------------ duality

def _axiom_of(x):
    return node(R.AX, Sequent(LIN, [x], [x]), [("L", 0), ("R", 0)])


def _mk(rule, kind, left, right, side, x, *prem):
    s = Sequent(kind, left, right)
    return node(rule, s, [(side, s.side(side).index(x))], *prem)


def _dual_pair(x: Prop):
    """Cut-free (x, x* |- .) and (. |- x, x*); persistent forms when x is a producer."""
    xd = dual(x)
    t = x.tag
    if x.mode is Mode.C:
        raise ValueError("consumer pairs come from the producer x*")
    if x.mode is Mode.P:
        k = PERS
        if t == "one_p":
            left = _mk(R.ONE_P_L, k, [x, xd], [], "L", x, _mk(R.BOT_C_L, k, [xd], [], "L", xd))
            right = _mk(R.BOT_C_R, k, [], [x, xd], "R", xd, _mk(R.ONE_P_R, k, [], [x], "R", x))
            return left, right
        if t == "tensor_p":
            (l0, r0), (l1, r1) = _dual_pair(x.args[0]), _dual_pair(x.args[1])
            pl = _mk(R.PAR_C_L, k, list(x.args) + [xd], [], "L", xd, l0, l1)
            left = _mk(R.TENSOR_P_L, k, [x, xd], [], "L", x, pl)
            tr = _mk(R.TENSOR_P_R, k, [], [x] + list(xd.args), "R", x, r0, r1)
            right = _mk(R.PAR_C_R, k, [], [x, xd], "R", xd, tr)
            return left, right
        a, ad = x.args[0], xd.args[0]
        la, ra = _dual_pair(a)
        left = _mk(R.WHY_L, k, [x, xd], [], "L", xd, _mk(R.BANG_L, LIN, [x, ad], [], "L", x, la))
        right = _mk(R.BANG_R, k, [], [x, xd], "R", x, _mk(R.WHY_R, LIN, [], [a, xd], "R", xd, ra))
        return left, right

    k = LIN
    if t in ("top", "zero"):
        top, zero = (x, xd) if t == "top" else (xd, x)
        return _mk(R.ZERO_L, k, [x, xd], [], "L", zero), _mk(R.TOP_R, k, [], [x, xd], "R", top)
    if t in ("one", "bot"):
        one, bot = (x, xd) if t == "one" else (xd, x)
        left = _mk(R.ONE_L, k, [one, bot], [], "L", one, _mk(R.BOT_L, k, [bot], [], "L", bot))
        right = _mk(R.BOT_R, k, [], [one, bot], "R", bot, _mk(R.ONE_R, k, [], [one], "R", one))
        return left, right
    if t in ("with", "plus"):
        w, p = (x, xd) if t == "with" else (xd, x)
        (l0, r0), (l1, r1) = _dual_pair(w.args[0]), _dual_pair(w.args[1])
        la = _mk(R.WITH_L1, k, [w, p.args[0]], [], "L", w, l0)
        lb = _mk(R.WITH_L2, k, [w, p.args[1]], [], "L", w, l1)
        left = _mk(R.PLUS_L, k, [w, p], [], "L", p, la, lb)
        ra = _mk(R.PLUS_R1, k, [], [w.args[0], p], "R", p, r0)
        rb = _mk(R.PLUS_R2, k, [], [w.args[1], p], "R", p, r1)
        right = _mk(R.WITH_R, k, [], [w, p], "R", w, ra, rb)
        return left, right
    if t in ("tensor", "par"):
        tn, pr = (x, xd) if t == "tensor" else (xd, x)
        (l0, r0), (l1, r1) = _dual_pair(tn.args[0]), _dual_pair(tn.args[1])
        pl = _mk(R.PAR_L, k, list(tn.args) + [pr], [], "L", pr, l0, l1)
        left = _mk(R.TENSOR_L, k, [tn, pr], [], "L", tn, pl)
        tr = _mk(R.TENSOR_R, k, [], [tn] + list(pr.args), "R", tn, r0, r1)
        right = _mk(R.PAR_R, k, [], [tn, pr], "R", pr, tr)
        return left, right
    # F! P against F? P*
    fb, fw = (x, xd) if t == "fbang" else (xd, x)
    p, c = fb.args[0], fw.args[0]
    pl, pr = _dual_pair(p)
    left = _mk(R.FBANG_L, k, [fb, fw], [], "L", fb, _mk(R.FWHY_L, k, [p, fw], [], "L", fw, pl))
    right = _mk(R.FWHY_R, k, [], [fb, fw], "R", fw, _mk(R.FBANG_R, k, [], [fb, c], "R", fb, pr))
    return left, right


def dual_axiom(x: Prop) -> dict:
    """Proofs pairing x with its dual.

    Always 'left' (x and x* on the left) and 'right' (both on the right), persistent when
    x or x* is a producer; a consumer gets the proofs built for its producer dual.
    Producers also get 'linear_left_cut' / 'linear_right_cut', linear versions built
    with one cut, and their cut-free forms 'linear_left' / 'linear_right'.
    """
    if x.mode is Mode.C:
        return dual_axiom(dual(x))
    left, right = _dual_pair(x)
    out = {"left": left, "right": right}
    if x.mode is Mode.P:
        xd = dual(x)
        lin_l = node(R.CUT_C, Sequent(LIN, [x, xd], []), (), _axiom_of(xd), left)
        lin_r = node(R.CUT_P, Sequent(LIN, [], [x, xd]), (), right, _axiom_of(x))
        out.update(linear_left_cut=lin_l, linear_right_cut=lin_r,
                   linear_left=eliminate_all(lin_l), linear_right=eliminate_all(lin_r))
    return out


def _moved(s: Sequent, side: str, x: Prop) -> Sequent:
    xd = dual(x)
    if side == "R":
        return Sequent(s.kind, s.left + (xd,), ctx_sub(s.right, [x]))
    return Sequent(s.kind, ctx_sub(s.left, [x]), s.right + (xd,))


def elaborate_dual(d: Derivation, side: str, x: Prop) -> Derivation:
    """Move x across the turnstile as its dual; the result is cut-free.

    side='R' turns a proof of G |- D, x into one of G, x* |- D; side='L' is the mirror.
    Persistent proofs work the same way for persistent x.
    """
    s = d.conclusion
    if x not in s.side(side):
        raise ValueError(f"{show(x)} does not occur on the {side} of {show(s)}")
    goal = _moved(s, side, x)
    if x.mode is Mode.L:
        if side == "R":
            return eliminate_all(node(R.CUT_L, goal, (), d, _dual_pair(x)[0]))
        return eliminate_all(node(R.CUT_L, goal, (), _dual_pair(x)[1], d))
    if x.mode is Mode.C:
        pair = _dual_pair(dual(x))
        if side == "R":
            return eliminate_all(node(cut_rule_for(Mode.C, s.kind), goal, (), d, pair[0]))
        if s.kind is PERS:
            return eliminate_all(node(R.CUT_CP, goal, (), pair[1], d))
    else:
        pair = _dual_pair(x)
        if side == "L":
            return eliminate_all(node(cut_rule_for(Mode.P, s.kind), goal, (), pair[1], d))
        if s.kind is PERS:
            return eliminate_all(node(R.CUT_PP, goal, (), d, pair[0]))
    # producer on the right or consumer on the left of a linear sequent: no cut fits
    return _by_induction(eliminate_all(d), side, x)


def _by_induction(d: Derivation, side: str, x: Prop) -> Derivation:
    """Follow the occurrence of x up a cut-free linear proof to the rule that made it."""
    s = d.conclusion
    xd = dual(x)
    other = "L" if side == "R" else "R"
    if _introduces(d, side, x):
        rule = d.rule
        if rule is R.AX:
            forms = dual_axiom(x if side == "R" else xd)
            return forms["linear_left"] if side == "R" else forms["linear_right"]
        if rule in (R.ONE_R, R.BOT_L):
            return node(R.BOT_L if rule is R.ONE_R else R.ONE_R, _moved(s, side, x), [(other, 0)])
        if rule in (R.TENSOR_R, R.PAR_L):
            d1 = _by_induction(d.premises[0], side, x.args[0])
            d2 = _by_induction(d.premises[1], side, x.args[1])
            return assemble(R.PAR_L if rule is R.TENSOR_R else R.TENSOR_R, LIN, other, xd, [d1, d2])
        if rule in (R.BANG_R, R.WHY_L):
            inner = elaborate_dual(d.premises[0], side, x.args[0])
            return assemble(R.WHY_L if rule is R.BANG_R else R.BANG_R, LIN, other, xd, [inner])
        raise CutElimError(f"unexpected introduction {rule.value} of {show(x)}")
    if not d.premises:
        goal = _moved(s, side, x)
        return zero_premise(d.rule, LIN, principal_side(d), principal_formula(d), goal.left, goal.right)
    y, yside = principal_formula(d), principal_side(d)
    comps = components(d.rule, y)
    new = list(d.premises)
    if d.rule in SHARED:
        todo = range(len(new))
    else:
        todo = [next(i for i, (p, cs) in enumerate(zip(d.premises, comps))
                     if _count(p.conclusion.side(side), x) > _count([z for sd, z in cs if sd == side], x))]
    for i in todo:
        new[i] = _by_induction(new[i], side, x)
    return assemble(d.rule, LIN, yside, y, new)


def pair_cuts(derivations, per_rule: int = 60) -> list:
    """Checked cuts joining two of the given derivations, at most per_rule of each cut rule.

    Pairs are taken in input order, so the result is deterministic.
    """
    from .kernel import check
    taken = {r: [] for r in CUTS}
    for d1 in derivations:
        for x in dict.fromkeys(d1.conclusion.right):
            for d2 in derivations:
                if x not in d2.conclusion.left:
                    continue
                try:
                    d = cut_node(d1, d2, x)
                except CutElimError:
                    continue
                if len(taken[d.rule]) < per_rule and check(d).ok:
                    taken[d.rule].append(d)
            if all(len(v) >= per_rule for v in taken.values()):
                break
    return [d for r in sorted(taken, key=lambda r: r.value) for d in taken[r]]
