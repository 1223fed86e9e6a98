"""Bounded backward proof search over the cut-free rules."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .build import components
from .kernel import Derivation, RuleId, check, node, LIN, PERS
from .syntax import GRAMMAR, Mode, Prop, Sequent, all_consumer, all_producer, ctx_sub

R = RuleId
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one search.

    depth bounds the height of the returned tree, contractions bounds contraction steps
    along any branch, and nodes bounds the goals expanded in each deepening round.
    """
    depth: int = 8
    contractions: int = 1
    nodes: int = 20000

    def __post_init__(self):
        for name in ("depth", "contractions", "nodes"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"budget field {name} must be a non-negative integer, got {v!r}")


class _OutOfNodes(Exception):
    pass


def _distinct(items):
    seen = []
    for i, x in enumerate(items):
        if x not in seen:
            seen.append(x)
            yield i, x


def _sub_multisets(items):
    """All sub-multisets of a sorted tuple, each once, in a fixed order."""
    groups = []
    for x in items:
        if groups and groups[-1][0] == x:
            groups[-1][1] += 1
        else:
            groups.append([x, 1])
    for counts in product(*(range(c + 1) for _, c in groups)):
        yield tuple(x for (x, _), k in zip(groups, counts) for _ in range(k))


# rule groups tried in this order on each goal
_LIN_UNITS = [("R", R.ONE_R, ("one", "one_p")), ("L", R.BOT_L, ("bot", "bot_c")),
              ("R", R.TOP_R, ("top",)), ("L", R.ZERO_L, ("zero",))]
_LIN_INVERTIBLE = [("R", R.PAR_R, ("par", "par_c")), ("L", R.TENSOR_L, ("tensor", "tensor_p")),
                   ("R", R.WITH_R, ("with",)), ("L", R.PLUS_L, ("plus",)),
                   ("L", R.ONE_L, ("one", "one_p")), ("R", R.BOT_R, ("bot", "bot_c")),
                   ("L", R.FBANG_L, ("fbang",)), ("R", R.FWHY_R, ("fwhy",))]
_LIN_OTHER = [("R", R.TENSOR_R, ("tensor", "tensor_p")), ("L", R.PAR_L, ("par", "par_c")),
              ("R", R.PLUS_R1, ("plus",)), ("R", R.PLUS_R2, ("plus",)),
              ("L", R.WITH_L1, ("with",)), ("L", R.WITH_L2, ("with",)),
              ("R", R.FBANG_R, ("fbang",)), ("L", R.FWHY_L, ("fwhy",)),
              ("R", R.BANG_R, ("bang",)), ("L", R.WHY_L, ("why",)),
              ("L", R.BANG_L, ("bang",)), ("R", R.WHY_R, ("why",))]
_PERS_UNITS = [("R", R.ONE_P_R, ("one_p",)), ("L", R.BOT_C_L, ("bot_c",))]
_PERS_INVERTIBLE = [("R", R.PAR_C_R, ("par_c",)), ("L", R.TENSOR_P_L, ("tensor_p",)),
                    ("L", R.ONE_P_L, ("one_p",)), ("R", R.BOT_C_R, ("bot_c",))]
_PERS_OTHER = [("R", R.TENSOR_P_R, ("tensor_p",)), ("L", R.PAR_C_L, ("par_c",)),
               ("R", R.BANG_R, ("bang",)), ("L", R.WHY_L, ("why",))]

_SPLIT = {R.TENSOR_R, R.TENSOR_P_R, R.PAR_L, R.PAR_C_L}
_UNIT_AXIOMS = {R.ONE_R, R.BOT_L, R.ONE_P_R, R.BOT_C_L}
_PREMISE_KIND = {R.FBANG_R: PERS, R.FWHY_L: PERS, R.BANG_R: LIN, R.WHY_L: LIN}
_NATURAL = {R.FBANG_R, R.FWHY_L, R.BANG_R, R.WHY_L}


def _expansions(goal: Sequent):
    """Backward rule applications: (rule, principal, premise sequents), in search order."""
    kind = goal.kind
    if len(goal.left) == 1 and goal.left == goal.right:
        x = goal.left[0]
        rule = R.AX if kind is LIN else (R.AX_P if x.mode is Mode.P else R.AX_C)
        if kind is LIN or x.mode is not Mode.L:
            yield rule, (("L", 0), ("R", 0)), ()
    groups = (_LIN_UNITS, _LIN_INVERTIBLE, _LIN_OTHER) if kind is LIN else \
        (_PERS_UNITS, _PERS_INVERTIBLE, _PERS_OTHER)
    for group in groups:
        for side, rule, tags in group:
            for i, x in _distinct(goal.side(side)):
                if x.tag in tags:
                    yield from _apply(goal, side, i, x, rule)
    yield from _structural(goal)


def _apply(goal, side, i, x, rule):
    kind = goal.kind
    rest = goal.side(side)[:i] + goal.side(side)[i + 1:]
    left, right = (rest, goal.right) if side == "L" else (goal.left, rest)
    pos = ((side, i),)
    if rule in _UNIT_AXIOMS:
        if not left and not right:
            yield rule, pos, ()
        return
    if rule in (R.TOP_R, R.ZERO_L):
        yield rule, pos, ()
        return
    if rule in _NATURAL and not (all_producer(left) and all_consumer(right)):
        return
    prem_kind = _PREMISE_KIND.get(rule, kind)
    comps = components(rule, x)
    if rule in _SPLIT:
        (s1, a), (s2, b) = comps[0][0], comps[1][0]
        for part_l in _sub_multisets(left):
            for part_r in _sub_multisets(right):
                other_l = ctx_sub(left, part_l)
                other_r = ctx_sub(right, part_r)
                p1 = _premise(prem_kind, part_l, part_r, [(s1, a)])
                p2 = _premise(prem_kind, other_l, other_r, [(s2, b)])
                if p1 and p2:
                    yield rule, pos, (p1, p2)
        return
    prems = []
    for cs in comps:
        p = _premise(prem_kind, left, right, cs)
        if p is None:
            return
        prems.append(p)
    yield rule, pos, tuple(prems)


def _premise(kind, left, right, comps):
    left, right = list(left), list(right)
    for s, y in comps:
        (left if s == "L" else right).append(y)
    if kind is PERS and any(y.mode is Mode.L for y in left + right):
        return None
    return Sequent(kind, left, right)


def _structural(goal):
    kind = goal.kind
    wl, wr, cl, cr = (R.WEAK_L, R.WEAK_R, R.CONTR_L, R.CONTR_R) if kind is LIN else \
        (R.PWEAK_L, R.PWEAK_R, R.PCONTR_L, R.PCONTR_R)
    for i, x in _distinct(goal.left):
        if x.mode is Mode.P:
            yield wl, (("L", i),), (Sequent(kind, goal.left[:i] + goal.left[i + 1:], goal.right),)
    for i, x in _distinct(goal.right):
        if x.mode is Mode.C:
            yield wr, (("R", i),), (Sequent(kind, goal.left, goal.right[:i] + goal.right[i + 1:]),)
    for i, x in _distinct(goal.left):
        if x.mode is Mode.P:
            yield cl, (("L", i),), (Sequent(kind, goal.left + (x,), goal.right),)
    for i, x in _distinct(goal.right):
        if x.mode is Mode.C:
            yield cr, (("R", i),), (Sequent(kind, goal.left, goal.right + (x,)),)


_CONTRACTIONS = {R.CONTR_L, R.CONTR_R, R.PCONTR_L, R.PCONTR_R}


class _Search:
    def __init__(self, nodes):
        self.node_limit = nodes
        self.used = 0
        self.failed = {}        # sequent -> list of (depth, contractions) known to fail

    def known_failure(self, goal, depth, contr):
        return any(d >= depth and c >= contr for d, c in self.failed.get(goal, ()))

    def prove(self, goal, depth, contr):
        if depth <= 0 or self.known_failure(goal, depth, contr):
            return None
        self.used += 1
        if self.used > self.node_limit:
            raise _OutOfNodes
        for rule, pos, prems in _expansions(goal):
            c = contr - 1 if rule in _CONTRACTIONS else contr
            if c < 0:
                continue
            subs = []
            for p in prems:
                sub = self.prove(p, depth - 1, c)
                if sub is None:
                    break
                subs.append(sub)
            else:
                return node(rule, goal, pos, *subs)
        self.failed.setdefault(goal, []).append((depth, contr))
        return None


def search(goal: Sequent, budget: SearchBudget | None = None):
    """A cut-free proof of goal within budget, or the string "exhausted".

    Rounds run over (depth, contractions) pairs in increasing order so the first
    proof found uses as little of the budget as possible.
    """
    if budget is None:
        budget = SearchBudget()
    if not isinstance(budget, SearchBudget):
        raise ValueError("budget must be a SearchBudget")
    failures = {}
    for depth in range(1, budget.depth + 1):
        for contr in range(0, min(budget.contractions, depth) + 1):
            s = _Search(budget.nodes)
            s.failed = failures
            try:
                d = s.prove(goal, depth, contr)
            except _OutOfNodes:
                continue
            if d is not None:
                assert check(d, allow_cut=False).ok
                return d
    return EXHAUSTED


# ---------------------------------------------------------------- enumeration

def props_of_size(size: int, _memo={}) -> dict:
    """All propositions with exactly `size` constructors, keyed by mode."""
    if size in _memo:
        return _memo[size]
    out = {m: [] for m in Mode}
    for tag, (mode, kids, _) in GRAMMAR.items():
        if len(kids) == 0 and size == 1:
            out[mode].append(Prop(tag))
        elif len(kids) == 1 and size > 1:
            out[mode].extend(Prop(tag, a) for a in props_of_size(size - 1)[kids[0]])
        elif len(kids) == 2 and size > 2:
            for k in range(1, size - 1):
                for a in props_of_size(k)[kids[0]]:
                    for b in props_of_size(size - 1 - k)[kids[1]]:
                        out[mode].append(Prop(tag, a, b))
    _memo[size] = out
    return out


def _multisets(total: int, smallest: int = 1):
    """Nondecreasing lists of positive proposition sizes summing to total."""
    if total == 0:
        yield []
        return
    for s in range(smallest, total + 1):
        for rest in _multisets(total - s, s):
            yield [s] + rest


def sequents_of_size(total: int):
    """Every sequent whose propositions have `total` constructors altogether, deduplicated."""
    seen = set()
    out = []
    for split in range(total + 1):
        for lsizes in _multisets(split):
            for rsizes in _multisets(total - split):
                lefts = product(*(_all_of_size(s) for s in lsizes))
                rights = list(product(*(_all_of_size(s) for s in rsizes)))
                for left in lefts:
                    for right in rights:
                        for kind in (LIN, PERS):
                            if kind is PERS and any(x.mode is Mode.L for x in left + right):
                                continue
                            s = Sequent(kind, left, right)
                            if s not in seen:
                                seen.add(s)
                                out.append(s)
    out.sort(key=lambda s: s.key)
    return out


def _all_of_size(s):
    by_mode = props_of_size(s)
    return [x for m in Mode for x in by_mode[m]]


def enumerate_provable(size_bound: int, budget: SearchBudget | None = None) -> list:
    """(sequent, proof) for every sequent up to size_bound that search proves, in a fixed order."""
    out = []
    for total in range(1, size_bound + 1):
        for s in sequents_of_size(total):
            d = search(s, budget)
            if isinstance(d, Derivation):
                out.append((s, d))
    return out
