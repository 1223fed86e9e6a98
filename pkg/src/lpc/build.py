"""Forward rule application: rebuild a node from new premises."""
from __future__ import annotations

from .kernel import Derivation, RuleId, node, position, LIN, PERS
from .syntax import Kind, Sequent, ctx_sub

R = RuleId

SPLIT = frozenset({R.TENSOR_R, R.TENSOR_P_R, R.PAR_L, R.PAR_C_L})
SHARED = frozenset({R.WITH_R, R.PLUS_L})

# persistent-figure rule -> counterpart in the linear judgment
TO_LINEAR = {
    R.AX_P: R.AX, R.AX_C: R.AX,
    R.TENSOR_P_L: R.TENSOR_L, R.TENSOR_P_R: R.TENSOR_R,
    R.ONE_P_L: R.ONE_L, R.ONE_P_R: R.ONE_R,
    R.PAR_C_L: R.PAR_L, R.PAR_C_R: R.PAR_R,
    R.BOT_C_L: R.BOT_L, R.BOT_C_R: R.BOT_R,
    R.PWEAK_L: R.WEAK_L, R.PWEAK_R: R.WEAK_R,
    R.PCONTR_L: R.CONTR_L, R.PCONTR_R: R.CONTR_R,
}
TO_PERSISTENT = {
    R.WEAK_L: R.PWEAK_L, R.WEAK_R: R.PWEAK_R, R.CONTR_L: R.PCONTR_L, R.CONTR_R: R.PCONTR_R,
}


def components(rule: RuleId, x) -> list:
    """Per premise, the (side, formula) pieces the rule replaces its principal x with."""
    a = x.args
    if rule in (R.WITH_L1,):
        return [[("L", a[0])]]
    if rule in (R.WITH_L2,):
        return [[("L", a[1])]]
    if rule is R.PLUS_R1:
        return [[("R", a[0])]]
    if rule is R.PLUS_R2:
        return [[("R", a[1])]]
    if rule in (R.WITH_R, R.TENSOR_R, R.TENSOR_P_R):
        return [[("R", a[0])], [("R", a[1])]]
    if rule in (R.PLUS_L, R.PAR_L, R.PAR_C_L):
        return [[("L", a[0])], [("L", a[1])]]
    if rule in (R.TENSOR_L, R.TENSOR_P_L, R.FBANG_L, R.BANG_L, R.FWHY_L, R.WHY_L):
        return [[("L", y) for y in a]]
    if rule in (R.PAR_R, R.PAR_C_R, R.FWHY_R, R.WHY_R, R.FBANG_R, R.BANG_R):
        return [[("R", y) for y in a]]
    if rule in (R.ONE_L, R.ONE_P_L, R.BOT_R, R.BOT_C_R,
                R.WEAK_L, R.WEAK_R, R.PWEAK_L, R.PWEAK_R):
        return [[]]
    if rule in (R.CONTR_L, R.PCONTR_L):
        return [[("L", x), ("L", x)]]
    if rule in (R.CONTR_R, R.PCONTR_R):
        return [[("R", x), ("R", x)]]
    return []


def principal_side(d: Derivation) -> str:
    return d.principal[0][0]


def principal_formula(d: Derivation):
    side, idx = d.principal[0]
    return d.conclusion.side(side)[idx]


def for_kind(rule: RuleId, kind: Kind) -> RuleId:
    if kind is LIN:
        return TO_LINEAR.get(rule, rule)
    return TO_PERSISTENT.get(rule, rule)


def assemble(rule: RuleId, kind: Kind, side: str, x, premises) -> Derivation:
    """Apply a one- or two-premise rule forward with principal x on `side`."""
    comps = components(rule, x)
    left, right = [], []
    used = premises if rule in SPLIT else premises[:1]
    for p, cs in zip(used, comps):
        l, r = p.conclusion.left, p.conclusion.right
        for s, y in cs:
            if s == "L":
                l = ctx_sub(l, [y])
            else:
                r = ctx_sub(r, [y])
            if l is None or r is None:
                raise ValueError(f"premise lacks component for {rule.value}")
        left += l
        right += r
    (left if side == "L" else right).append(x)
    concl = Sequent(kind, left, right)
    return node(for_kind(rule, kind), concl, [position(concl, side, x)], *premises)


def zero_premise(rule: RuleId, kind: Kind, side: str, x, left, right) -> Derivation:
    """Rebuild a premise-free rule (only TopR / ZeroL carry extra context)."""
    concl = Sequent(kind, left, right)
    return node(for_kind(rule, kind), concl, [position(concl, side, x)])


def linearize(d: Derivation) -> Derivation:
    """Turn a persistent proof into a linear proof of the same sequent."""
    c = d.conclusion
    if c.kind is LIN:
        return d
    concl = Sequent(LIN, c.left, c.right)
    rule = d.rule
    if rule is R.CUT_PP:
        return node(R.CUT_P, concl, (), d.premises[0], linearize(d.premises[1]))
    if rule is R.CUT_CP:
        return node(R.CUT_C, concl, (), linearize(d.premises[0]), d.premises[1])
    if rule in (R.BANG_R, R.WHY_L):
        return node(rule, concl, d.principal, *d.premises)
    return node(TO_LINEAR[rule], concl, d.principal, *(linearize(p) for p in d.premises))
