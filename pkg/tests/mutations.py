"""Single-node corruptions of checked derivations, each with the cause the kernel must report."""
from lpc.kernel import CUTS, Derivation, PERS, RuleId
from lpc.syntax import Bot, BotC, One, OneP, raw_sequent

R = RuleId
EXPECTED = {"principal": "principal-mismatch", "context": "context-mismatch", "mode": "mode-restriction"}
ANY_CONTEXT = {R.TOP_R, R.ZERO_L}
NATURAL = {R.FBANG_R, R.FWHY_L, R.BANG_R, R.WHY_L}
WEAKENINGS = {R.WEAK_L, R.WEAK_R, R.PWEAK_L, R.PWEAK_R}


def _with(d, **kw):
    fields = dict(rule=d.rule, conclusion=d.conclusion, principal=d.principal, premises=d.premises)
    fields.update(kw)
    return Derivation(fields["rule"], fields["conclusion"], fields["principal"], fields["premises"])


def _remap(principal, old, new):
    """Follow each principal formula to its place in a re-sorted conclusion."""
    out = []
    for side, i in principal:
        x = old.side(side)[i]
        rank = old.side(side)[:i].count(x)
        spots = [j for j, y in enumerate(new.side(side)) if y == x]
        out.append((side, spots[rank]))
    return tuple(out)


def _reconclude(d, new):
    return _with(d, conclusion=new, principal=_remap(d.principal, d.conclusion, new))


def wrong_principal(d):
    if d.rule in CUTS:
        return _with(d, principal=(("R", 0),))
    side, idx = d.principal[-1]
    here = d.conclusion.side(side)[idx]
    # another formula under a weakening is a mode error, checked first; point past the end instead
    for s in ("L", "R") if d.rule not in WEAKENINGS else ():
        for i, x in enumerate(d.conclusion.side(s)):
            if x.tag != here.tag and (s, i) not in d.principal:
                return _with(d, principal=d.principal[:-1] + ((s, i),))
    return _with(d, principal=d.principal[:-1] + ((side, len(d.conclusion.side(side))),))


def broken_context(d):
    if d.rule in ANY_CONTEXT:
        return None
    c = d.conclusion
    extra = OneP if c.kind is PERS or d.rule in NATURAL or d.rule in CUTS else One
    return _reconclude(d, raw_sequent(c.kind, c.left + (extra,), c.right))


def mode_violation(d):
    c = d.conclusion
    if c.kind is PERS:
        return _reconclude(d, raw_sequent(PERS, c.left + (One,), c.right))
    if d.rule in NATURAL:
        return _reconclude(d, raw_sequent(c.kind, c.left + (BotC,), c.right))
    if d.rule in WEAKENINGS | {R.CONTR_L, R.CONTR_R}:
        side, idx = d.principal[0]
        items = list(c.side(side))
        items[idx] = Bot if side == "R" else One
        left, right = (items, c.right) if side == "L" else (c.left, items)
        new = raw_sequent(c.kind, left, right)
        moved = new.side(side).index(items[idx])
        return _with(d, conclusion=new, principal=((side, moved),))
    return None


KINDS = {"principal": wrong_principal, "context": broken_context, "mode": mode_violation}


def first_uses(derivations):
    """rule -> the smallest subderivation whose root uses it."""
    out = {}
    for d in derivations:
        for _, n in d.nodes():
            if n.rule not in out or n.size() < out[n.rule].size():
                out[n.rule] = n
    return out


def suite(derivations):
    """(rule, kind, mutant, expected cause) for every rule and every applicable mutation kind."""
    cases = []
    for rule, d in sorted(first_uses(derivations).items(), key=lambda kv: kv[0].value):
        for kind, make in KINDS.items():
            m = make(d)
            if m is not None:
                cases.append((rule, kind, m, EXPECTED[kind]))
    return cases
