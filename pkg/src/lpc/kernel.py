"""Derivation trees and the rule checker for both judgments."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .syntax import (
    Kind, Mode, Prop, Sequent, SyntaxErr, ctx, ctx_sub, all_producer, all_consumer,
    prop_from_sexpr, raw_sequent, read_sexprs, show, _pos,
)


class RuleId(str, enum.Enum):
    # linear judgment
    AX = "Ax"
    TOP_R = "TopR"
    ZERO_L = "ZeroL"
    WITH_L1 = "WithL1"
    WITH_L2 = "WithL2"
    WITH_R = "WithR"
    PLUS_R1 = "PlusR1"
    PLUS_R2 = "PlusR2"
    PLUS_L = "PlusL"
    TENSOR_L = "TensorL"
    TENSOR_R = "TensorR"
    ONE_L = "OneL"
    ONE_R = "OneR"
    PAR_L = "ParL"
    PAR_R = "ParR"
    BOT_L = "BotL"
    BOT_R = "BotR"
    # persistent judgment
    AX_P = "AxP"
    AX_C = "AxC"
    TENSOR_P_L = "TensorPL"
    TENSOR_P_R = "TensorPR"
    ONE_P_L = "OnePL"
    ONE_P_R = "OnePR"
    PAR_C_L = "ParCL"
    PAR_C_R = "ParCR"
    BOT_C_L = "BotCL"
    BOT_C_R = "BotCR"
    # adjunctions
    FBANG_L = "FBangL"
    FBANG_R = "FBangR"
    FWHY_L = "FWhyL"
    FWHY_R = "FWhyR"
    BANG_L = "BangL"
    BANG_R = "BangR"
    WHY_L = "WhyL"
    WHY_R = "WhyR"
    # weakening and contraction
    WEAK_L = "WeakL"
    WEAK_R = "WeakR"
    CONTR_L = "ContrL"
    CONTR_R = "ContrR"
    PWEAK_L = "PWeakL"
    PWEAK_R = "PWeakR"
    PCONTR_L = "PContrL"
    PCONTR_R = "PContrR"
    # cuts
    CUT_L = "CutL"
    CUT_P = "CutP"
    CUT_PP = "CutPP"
    CUT_C = "CutC"
    CUT_CP = "CutCP"


R = RuleId
LIN, PERS = Kind.LIN, Kind.PERS
BOTH = (LIN, PERS)

# rule -> (arity, allowed conclusion kinds, premise kinds)
SHAPE = {
    R.AX: (0, (LIN,), ()),
    R.TOP_R: (0, (LIN,), ()),
    R.ZERO_L: (0, (LIN,), ()),
    R.WITH_L1: (1, (LIN,), (LIN,)),
    R.WITH_L2: (1, (LIN,), (LIN,)),
    R.WITH_R: (2, (LIN,), (LIN, LIN)),
    R.PLUS_R1: (1, (LIN,), (LIN,)),
    R.PLUS_R2: (1, (LIN,), (LIN,)),
    R.PLUS_L: (2, (LIN,), (LIN, LIN)),
    R.TENSOR_L: (1, (LIN,), (LIN,)),
    R.TENSOR_R: (2, (LIN,), (LIN, LIN)),
    R.ONE_L: (1, (LIN,), (LIN,)),
    R.ONE_R: (0, (LIN,), ()),
    R.PAR_L: (2, (LIN,), (LIN, LIN)),
    R.PAR_R: (1, (LIN,), (LIN,)),
    R.BOT_L: (0, (LIN,), ()),
    R.BOT_R: (1, (LIN,), (LIN,)),
    R.AX_P: (0, (PERS,), ()),
    R.AX_C: (0, (PERS,), ()),
    R.TENSOR_P_L: (1, (PERS,), (PERS,)),
    R.TENSOR_P_R: (2, (PERS,), (PERS, PERS)),
    R.ONE_P_L: (1, (PERS,), (PERS,)),
    R.ONE_P_R: (0, (PERS,), ()),
    R.PAR_C_L: (2, (PERS,), (PERS, PERS)),
    R.PAR_C_R: (1, (PERS,), (PERS,)),
    R.BOT_C_L: (0, (PERS,), ()),
    R.BOT_C_R: (1, (PERS,), (PERS,)),
    R.FBANG_L: (1, (LIN,), (LIN,)),
    R.FBANG_R: (1, (LIN,), (PERS,)),
    R.FWHY_L: (1, (LIN,), (PERS,)),
    R.FWHY_R: (1, (LIN,), (LIN,)),
    R.BANG_L: (1, (LIN,), (LIN,)),
    R.BANG_R: (1, BOTH, (LIN,)),
    R.WHY_L: (1, BOTH, (LIN,)),
    R.WHY_R: (1, (LIN,), (LIN,)),
    R.WEAK_L: (1, (LIN,), (LIN,)),
    R.WEAK_R: (1, (LIN,), (LIN,)),
    R.CONTR_L: (1, (LIN,), (LIN,)),
    R.CONTR_R: (1, (LIN,), (LIN,)),
    R.PWEAK_L: (1, (PERS,), (PERS,)),
    R.PWEAK_R: (1, (PERS,), (PERS,)),
    R.PCONTR_L: (1, (PERS,), (PERS,)),
    R.PCONTR_R: (1, (PERS,), (PERS,)),
    R.CUT_L: (2, (LIN,), (LIN, LIN)),
    R.CUT_P: (2, (LIN,), (PERS, LIN)),
    R.CUT_PP: (2, (PERS,), (PERS, PERS)),
    R.CUT_C: (2, (LIN,), (LIN, PERS)),
    R.CUT_CP: (2, (PERS,), (PERS, PERS)),
}
CUTS = frozenset({R.CUT_L, R.CUT_P, R.CUT_PP, R.CUT_C, R.CUT_CP})
STRUCTURAL = frozenset({R.WEAK_L, R.WEAK_R, R.CONTR_L, R.CONTR_R,
                        R.PWEAK_L, R.PWEAK_R, R.PCONTR_L, R.PCONTR_R})


@dataclass(frozen=True)
class Derivation:
    rule: RuleId
    conclusion: Sequent
    principal: tuple = ()
    premises: tuple = ()
    _depth: int = field(default=0, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_depth", 1 + max((p.depth for p in self.premises), default=0))

    @property
    def depth(self) -> int:
        return self._depth

    def nodes(self, path=()):
        """Pre-order walk yielding (path, node)."""
        yield path, self
        for i, p in enumerate(self.premises):
            yield from p.nodes(path + (i,))

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)

    def has_cut(self) -> bool:
        return any(n.rule in CUTS for _, n in self.nodes())

    def rules(self) -> set:
        return {n.rule for _, n in self.nodes()}


def node(rule: RuleId, conclusion: Sequent, principal=(), *premises: Derivation) -> Derivation:
    return Derivation(RuleId(rule), conclusion, tuple(principal), tuple(premises))


# ---------------------------------------------------------------- reports

CAUSES = ("arity", "judgment-kind", "mode-restriction", "principal-mismatch",
          "context-mismatch", "cut-forbidden")


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    path: tuple = ()
    rule: RuleId | None = None
    cause: str | None = None
    message: str = ""

    @property
    def verdict(self) -> str:
        return "ok" if self.ok else "error"

    def __str__(self):
        if self.ok:
            return "ok"
        where = "/".join(map(str, self.path)) or "root"
        return f"error at {where} [{self.rule.value}] {self.cause}: {self.message}"


class RuleFailure(Exception):
    def __init__(self, cause: str, message: str):
        super().__init__(message)
        self.cause = cause


def _fail(cause, msg):
    raise RuleFailure(cause, msg)


def _expect(cond, cause, msg):
    if not cond:
        _fail(cause, msg)


def _principal(d: Derivation, count: int) -> list:
    if len(d.principal) != count:
        _fail("principal-mismatch", f"expected {count} principal position(s), got {len(d.principal)}")
    out = []
    for side, idx in d.principal:
        if side not in ("L", "R"):
            _fail("principal-mismatch", f"bad side {side!r}")
        c = d.conclusion.side(side)
        if not 0 <= idx < len(c):
            _fail("principal-mismatch", f"position ({side} {idx}) out of range")
        out.append((side, c[idx], c[:idx] + c[idx + 1:]))
    return out


def _one(d, side, tags):
    s, x, rest = _principal(d, 1)[0]
    if s != side or x.tag not in tags:
        _fail("principal-mismatch", f"principal {show(x)} on {s} is not a {'/'.join(tags)} on {side}")
    return x, rest


def _same(premise: Sequent, kind: Kind, left, right, what="premise"):
    want = raw_sequent(kind, left, right)
    if premise != want:
        _fail("context-mismatch", f"{what} is {show(premise)}, expected {show(want)}")


def _persistent_only(s: Sequent):
    for x in s.left + s.right:
        if x.mode is Mode.L:
            _fail("mode-restriction", f"persistent sequent contains linear {show(x)}")


def _natural(left, right, what="context"):
    if not all_producer(left) or not all_consumer(right):
        _fail("mode-restriction", f"{what} must be producers on the left and consumers on the right")


def _split(d: Derivation, side: str, x: Prop, pieces, kind: Kind):
    """Binary multiplicative rule: premises must partition the conclusion's context."""
    p1, p2 = d.premises
    s1, s2 = p1.conclusion, p2.conclusion
    a, b = pieces
    if side == "R":
        r1, r2 = ctx_sub(s1.right, [a]), ctx_sub(s2.right, [b])
        if r1 is None or r2 is None:
            _fail("context-mismatch", "premises do not carry the components on the right")
        left, right = s1.left + s2.left, r1 + r2
    else:
        l1, l2 = ctx_sub(s1.left, [a]), ctx_sub(s2.left, [b])
        if l1 is None or l2 is None:
            _fail("context-mismatch", "premises do not carry the components on the left")
        left, right = l1 + l2, s1.right + s2.right
    concl = d.conclusion
    full_left = concl.left if side == "R" else ctx_sub(concl.left, [x])
    full_right = ctx_sub(concl.right, [x]) if side == "R" else concl.right
    if ctx(*left) != full_left or ctx(*right) != full_right:
        _fail("context-mismatch", "premise contexts do not split the conclusion's context")
    return s1, s2


def cut_formula(d: Derivation):
    s1, s2 = d.premises[0].conclusion, d.premises[1].conclusion
    c = d.conclusion
    rest_r = ctx_sub(s1.right + s2.right, c.right)
    rest_l = ctx_sub(s1.left + s2.left, c.left)
    if rest_r is None or rest_l is None or len(rest_r) != 1 or rest_l != rest_r:
        _fail("context-mismatch", "premises do not combine into the conclusion around one cut formula")
    x = rest_r[0]
    if x not in s1.right or x not in s2.left:
        _fail("context-mismatch", f"cut formula {show(x)} not on the right of the first and left of the second premise")
    return x


def _check_node(d: Derivation, allow_cut: bool):
    rule = d.rule
    arity, kinds, prem_kinds = SHAPE[rule]
    if len(d.premises) != arity:
        _fail("arity", f"{rule.value} takes {arity} premise(s), got {len(d.premises)}")
    if rule in CUTS and not allow_cut:
        _fail("cut-forbidden", "cut rules are disabled")
    c = d.conclusion
    if c.kind not in kinds:
        _fail("judgment-kind", f"{rule.value} does not conclude a {c.kind.value} sequent")
    for p, k in zip(d.premises, prem_kinds):
        if p.conclusion.kind is not k:
            _fail("judgment-kind", f"{rule.value} needs a {k.value} premise")
    if c.kind is PERS:
        _persistent_only(c)
    prem = [p.conclusion for p in d.premises]
    CHECKS[rule](d, c, prem)


# ---- individual rules; each receives (node, conclusion, premise sequents)

def _ax(d, c, prem):
    (s1, x, r1), (s2, y, r2) = sorted(_principal(d, 2))
    _expect(s1 == "L" and s2 == "R" and x == y, "principal-mismatch", "axiom needs the same formula on both sides")
    _expect(not r1 and not r2, "context-mismatch", "axiom contexts must be empty apart from the formula")


def _ax_mode(mode):
    def check(d, c, prem):
        _ax(d, c, prem)
        _expect(c.left[0].mode is mode, "mode-restriction", f"axiom formula must be {mode.name}")
    return check


def _top_r(d, c, prem):
    _one(d, "R", ("top",))


def _zero_l(d, c, prem):
    _one(d, "L", ("zero",))


def _with_l(i):
    def check(d, c, prem):
        x, rest = _one(d, "L", ("with",))
        _same(prem[0], LIN, rest + (x.args[i],), c.right)
    return check


def _plus_r(i):
    def check(d, c, prem):
        x, rest = _one(d, "R", ("plus",))
        _same(prem[0], LIN, c.left, rest + (x.args[i],))
    return check


def _with_r(d, c, prem):
    x, rest = _one(d, "R", ("with",))
    _same(prem[0], LIN, c.left, rest + (x.args[0],), "first premise")
    _same(prem[1], LIN, c.left, rest + (x.args[1],), "second premise")


def _plus_l(d, c, prem):
    x, rest = _one(d, "L", ("plus",))
    _same(prem[0], LIN, rest + (x.args[0],), c.right, "first premise")
    _same(prem[1], LIN, rest + (x.args[1],), c.right, "second premise")


def _invert_l(tags, kind):
    def check(d, c, prem):
        x, rest = _one(d, "L", tags)
        _same(prem[0], kind, rest + x.args, c.right)
    return check


def _invert_r(tags, kind):
    def check(d, c, prem):
        x, rest = _one(d, "R", tags)
        _same(prem[0], kind, c.left, rest + x.args)
    return check


def _unit_axiom(side, tags):
    def check(d, c, prem):
        _, rest = _one(d, side, tags)
        other = c.left if side == "R" else c.right
        _expect(not rest and not other, "context-mismatch", "unit axiom admits no other formulas")
    return check


def _split_r(tags, kind, natural=False):
    def check(d, c, prem):
        x, _ = _one(d, "R", tags)
        s1, s2 = _split(d, "R", x, x.args, kind)
        if natural:
            _natural(s1.left, ctx_sub(s1.right, [x.args[0]]), "first premise context")
            _natural(s2.left, ctx_sub(s2.right, [x.args[1]]), "second premise context")
    return check


def _split_l(tags, kind, natural=False):
    def check(d, c, prem):
        x, _ = _one(d, "L", tags)
        s1, s2 = _split(d, "L", x, x.args, kind)
        if natural:
            _natural(ctx_sub(s1.left, [x.args[0]]), s1.right, "first premise context")
            _natural(ctx_sub(s2.left, [x.args[1]]), s2.right, "second premise context")
    return check


def _drop_l(tags, kind):
    def check(d, c, prem):
        _, rest = _one(d, "L", tags)
        _same(prem[0], kind, rest, c.right)
    return check


def _drop_r(tags, kind):
    def check(d, c, prem):
        _, rest = _one(d, "R", tags)
        _same(prem[0], kind, c.left, rest)
    return check


def _fbang_r(d, c, prem):
    x, rest = _one(d, "R", ("fbang",))
    _natural(c.left, rest)
    _same(prem[0], PERS, c.left, rest + x.args)


def _fwhy_l(d, c, prem):
    x, rest = _one(d, "L", ("fwhy",))
    _natural(rest, c.right)
    _same(prem[0], PERS, rest + x.args, c.right)


def _bang_r(d, c, prem):
    x, rest = _one(d, "R", ("bang",))
    _natural(c.left, rest)
    _same(prem[0], LIN, c.left, rest + x.args)


def _why_l(d, c, prem):
    x, rest = _one(d, "L", ("why",))
    _natural(rest, c.right)
    _same(prem[0], LIN, rest + x.args, c.right)


def _weak(side, kind):
    mode = Mode.P if side == "L" else Mode.C

    def check(d, c, prem):
        s, x, rest = _principal(d, 1)[0]
        _expect(s == side, "principal-mismatch", f"weakening acts on the {side} side")
        _expect(x.mode is mode, "mode-restriction", f"only {mode.name} formulas weaken on the {side}")
        if side == "L":
            _same(prem[0], kind, rest, c.right)
        else:
            _same(prem[0], kind, c.left, rest)
    return check


def _contr(side, kind):
    mode = Mode.P if side == "L" else Mode.C

    def check(d, c, prem):
        s, x, _ = _principal(d, 1)[0]
        _expect(s == side, "principal-mismatch", f"contraction acts on the {side} side")
        _expect(x.mode is mode, "mode-restriction", f"only {mode.name} formulas contract on the {side}")
        if side == "L":
            _same(prem[0], kind, c.left + (x,), c.right)
        else:
            _same(prem[0], kind, c.left, c.right + (x,))
    return check


def _cut(mode):
    def check(d, c, prem):
        _expect(not d.principal, "principal-mismatch", "cut nodes carry no principal position")
        x = cut_formula(d)
        _expect(x.mode is mode, "mode-restriction", f"cut formula {show(x)} must be {mode.name}")
        s1, s2 = prem
        if mode is Mode.P:
            _natural(s1.left, ctx_sub(s1.right, [x]), "first premise context")
        elif mode is Mode.C:
            _natural(ctx_sub(s2.left, [x]), s2.right, "second premise context")
    return check


CHECKS = {
    R.AX: _ax,
    R.TOP_R: _top_r,
    R.ZERO_L: _zero_l,
    R.WITH_L1: _with_l(0),
    R.WITH_L2: _with_l(1),
    R.WITH_R: _with_r,
    R.PLUS_R1: _plus_r(0),
    R.PLUS_R2: _plus_r(1),
    R.PLUS_L: _plus_l,
    R.TENSOR_L: _invert_l(("tensor", "tensor_p"), LIN),
    R.TENSOR_R: _split_r(("tensor", "tensor_p"), LIN),
    R.ONE_L: _drop_l(("one", "one_p"), LIN),
    R.ONE_R: _unit_axiom("R", ("one", "one_p")),
    R.PAR_L: _split_l(("par", "par_c"), LIN),
    R.PAR_R: _invert_r(("par", "par_c"), LIN),
    R.BOT_L: _unit_axiom("L", ("bot", "bot_c")),
    R.BOT_R: _drop_r(("bot", "bot_c"), LIN),
    R.AX_P: _ax_mode(Mode.P),
    R.AX_C: _ax_mode(Mode.C),
    R.TENSOR_P_L: _invert_l(("tensor_p",), PERS),
    R.TENSOR_P_R: _split_r(("tensor_p",), PERS, natural=True),
    R.ONE_P_L: _drop_l(("one_p",), PERS),
    R.ONE_P_R: _unit_axiom("R", ("one_p",)),
    R.PAR_C_L: _split_l(("par_c",), PERS, natural=True),
    R.PAR_C_R: _invert_r(("par_c",), PERS),
    R.BOT_C_L: _unit_axiom("L", ("bot_c",)),
    R.BOT_C_R: _drop_r(("bot_c",), PERS),
    R.FBANG_L: _invert_l(("fbang",), LIN),
    R.FBANG_R: _fbang_r,
    R.FWHY_L: _fwhy_l,
    R.FWHY_R: _invert_r(("fwhy",), LIN),
    R.BANG_L: _invert_l(("bang",), LIN),
    R.BANG_R: _bang_r,
    R.WHY_L: _why_l,
    R.WHY_R: _invert_r(("why",), LIN),
    R.WEAK_L: _weak("L", LIN),
    R.WEAK_R: _weak("R", LIN),
    R.CONTR_L: _contr("L", LIN),
    R.CONTR_R: _contr("R", LIN),
    R.PWEAK_L: _weak("L", PERS),
    R.PWEAK_R: _weak("R", PERS),
    R.PCONTR_L: _contr("L", PERS),
    R.PCONTR_R: _contr("R", PERS),
    R.CUT_L: _cut(Mode.L),
    R.CUT_P: _cut(Mode.P),
    R.CUT_PP: _cut(Mode.P),
    R.CUT_C: _cut(Mode.C),
    R.CUT_CP: _cut(Mode.C),
}
assert set(CHECKS) == set(RuleId) == set(SHAPE)


def check(d: Derivation, allow_cut: bool = True) -> CheckReport:
    """Verify every node; the report names the first failing node in pre-order."""
    for path, n in d.nodes():
        try:
            _check_node(n, allow_cut)
        except RuleFailure as e:
            return CheckReport(False, path, n.rule, e.cause, str(e))
    return CheckReport(True)


def check_records(d: Derivation, allow_cut: bool = True) -> list:
    """One record per node, in pre-order."""
    out = []
    for path, n in d.nodes():
        try:
            _check_node(n, allow_cut)
            out.append({"path": list(path), "rule": n.rule.value, "verdict": "ok"})
        except RuleFailure as e:
            out.append({"path": list(path), "rule": n.rule.value, "verdict": "error",
                        "cause": e.cause, "message": str(e)})
    return out


# ---------------------------------------------------------------- displacement

def displaced(s: Sequent) -> list:
    if s.kind is not PERS:
        raise ValueError("displacement is defined for persistent sequents only")
    return ([("L", i) for i, x in enumerate(s.left) if x.mode is Mode.C]
            + [("R", i) for i, x in enumerate(s.right) if x.mode is Mode.P])


def displacement_violations(d: Derivation) -> list:
    return [(path, n.conclusion) for path, n in d.nodes()
            if n.conclusion.kind is PERS and len(displaced(n.conclusion)) != 1]


# ---------------------------------------------------------------- builders

def position(s: Sequent, side: str, x: Prop) -> tuple:
    return (side, s.side(side).index(x))


def weaken(d: Derivation, side: str, x: Prop) -> Derivation:
    """One weakening step adding x on the given side."""
    s = d.conclusion
    if side == "L":
        new = Sequent(s.kind, s.left + (x,), s.right)
        rule = R.WEAK_L if s.kind is LIN else R.PWEAK_L
    else:
        new = Sequent(s.kind, s.left, s.right + (x,))
        rule = R.WEAK_R if s.kind is LIN else R.PWEAK_R
    return node(rule, new, [position(new, side, x)], d)


def contract(d: Derivation, side: str, x: Prop) -> Derivation:
    """One contraction step merging two copies of x."""
    s = d.conclusion
    if side == "L":
        new = Sequent(s.kind, ctx_sub(s.left, [x]), s.right)
        rule = R.CONTR_L if s.kind is LIN else R.PCONTR_L
    else:
        new = Sequent(s.kind, s.left, ctx_sub(s.right, [x]))
        rule = R.CONTR_R if s.kind is LIN else R.PCONTR_R
    return node(rule, new, [position(new, side, x)], d)


def replicate(d: Derivation, side: str, x: Prop, n: int) -> Derivation:
    """From a proof with n copies of a replicable x, build the proof with exactly one copy.

    n = 0 adds one weakening, n = 1 returns d, larger n applies n - 1 contractions.
    """
    need = Mode.P if side == "L" else Mode.C
    if x.mode is not need:
        raise ValueError(f"{show(x)} cannot be replicated on the {side}")
    if n < 0:
        raise ValueError("copy count must be non-negative")
    have = d.conclusion.side(side).count(x)
    if have < n:
        raise ValueError(f"conclusion holds {have} copies of {show(x)}, fewer than {n}")
    if n == 0:
        return weaken(d, side, x)
    for _ in range(n - 1):
        d = contract(d, side, x)
    return d


def weaken_all(d: Derivation, left=(), right=()) -> Derivation:
    for x in left:
        d = weaken(d, "L", x)
    for x in right:
        d = weaken(d, "R", x)
    return d


def contract_all(d: Derivation, left=(), right=()) -> Derivation:
    """Contract away one extra copy of each listed formula."""
    for x in left:
        d = contract(d, "L", x)
    for x in right:
        d = contract(d, "R", x)
    return d


# ---------------------------------------------------------------- text format

def _principal_text(d: Derivation) -> str:
    return "(principal" + "".join(f" ({s} {i})" for s, i in d.principal) + ")"


def show_derivation(d: Derivation, indent: int = 0) -> str:
    pad = "  " * indent
    head = f"{pad}(rule {d.rule.value} {show(d.conclusion)} {_principal_text(d)}"
    if not d.premises:
        return head + ")"
    body = "\n".join(show_derivation(p, indent + 1) for p in d.premises)
    return head + "\n" + body + ")"


def _loose_sequent(e) -> Sequent:
    if isinstance(e, str) or len(e) != 3 or e[0] not in ("|-", "||-"):
        raise SyntaxErr("expected a sequent", *_pos(e))

    def side(c):
        if isinstance(c, str):
            raise SyntaxErr("expected a context list", *_pos(c))
        items = list(c)
        if items and items[0] == "ctx":
            items = items[1:]
        return [prop_from_sexpr(x) for x in items]
    return raw_sequent(Kind(e[0]), side(e[1]), side(e[2]))


def derivation_from_sexpr(e) -> Derivation:
    if isinstance(e, str) or len(e) < 4 or e[0] != "rule":
        raise SyntaxErr("expected (rule <id> <sequent> (principal ...) premises...)", *_pos(e))
    try:
        rule = RuleId(e[1])
    except ValueError:
        raise SyntaxErr(f"unknown rule {e[1]!r}", *_pos(e[1])) from None
    concl = _loose_sequent(e[2])
    pr = e[3]
    if isinstance(pr, str) or not pr or pr[0] != "principal":
        raise SyntaxErr("expected (principal ...)", *_pos(pr))
    principal = []
    for item in pr[1:]:
        if isinstance(item, str) or len(item) != 2 or item[0] not in ("L", "R") or not item[1].isdigit():
            raise SyntaxErr("principal entries look like (L 0) or (R 1)", *_pos(item))
        principal.append((str(item[0]), int(item[1])))
    premises = [derivation_from_sexpr(p) for p in e[4:]]
    return Derivation(rule, concl, tuple(principal), tuple(premises))


def parse_derivations(text: str) -> list:
    return [derivation_from_sexpr(e) for e in read_sexprs(text)]
