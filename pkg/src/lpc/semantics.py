"""Interpretation of propositions, contexts and derivations in a concrete model.

Contexts are folded to the left in their canonical order.  A linear proof of
G |- D denotes an L-morphism from the tensor of G to the par of D; a persistent
proof denotes a P-morphism from (natural producers) (x) (natural consumers, seen in P)
to the displaced formula seen in P.  Bookkeeping isomorphisms (associativity,
symmetry, unit laws and linear distributivity) are built from label bijections,
which is what the model's structural maps are.
"""
from __future__ import annotations

import numpy as np

from .cutelim import eliminate_all
from .kernel import Derivation, RuleId, check, displaced, CUTS, LIN
from .models.base import LMor, empty, fold_labels, pcompose, pfun, point, prod, ptensor, unfold_labels
from .syntax import Mode, ModeError, Prop, all_consumer, all_producer, dual

R = RuleId
ROLES = ("left", "right", "ptensor", "ccotensor")


# ---------------------------------------------------------------- objects

def interp_obj(x: Prop, model, cat: str | None = None):
    """Object of x in category "L", "P" or "C" (default: x's own mode)."""
    cat = cat or x.mode.name
    if cat == "L":
        if x.mode is Mode.P:
            return model.fbang(interp_obj(x, model, "P"))
        if x.mode is Mode.C:
            return model.fwhy(interp_obj(x, model, "C"))
        return _linear(x, model)
    if x.mode is Mode.L:
        raise ModeError(f"linear proposition has no interpretation in {cat}")
    if cat == "P":
        if x.mode is Mode.C:
            return model.down(interp_obj(x, model, "C"))
        if x.tag == "one_p":
            return point()
        if x.tag == "tensor_p":
            return prod(*(interp_obj(a, model, "P") for a in x.args))
        return model.gbang(interp_obj(x.args[0], model, "L"))
    if cat == "C":
        if x.mode is Mode.P:
            return model.up(interp_obj(x, model, "P"))
        if x.tag == "bot_c":
            return model.cunit()
        if x.tag == "par_c":
            return model.ctensor_obj(*(interp_obj(a, model, "C") for a in x.args))
        return model.gwhy(interp_obj(x.args[0], model, "L"))
    raise ValueError(f"unknown category {cat!r}")


def _linear(x, model):
    t = x.tag
    if t in ("top", "zero"):
        return empty()
    if t in ("one", "bot"):
        return model.unit()
    if t == "fbang":
        return model.fbang(interp_obj(x.args[0], model, "P"))
    if t == "fwhy":
        return model.fwhy(interp_obj(x.args[0], model, "C"))
    a, b = (interp_obj(y, model, "L") for y in x.args)
    if t in ("with", "plus"):
        return model.sum(a, b)
    return prod(a, b)


def _fold(objs):
    out = None
    for o in objs:
        out = o if out is None else prod(out, o)
    return point() if out is None else out


def interp_ctx(gamma, role: str, model):
    """Left fold of a context: tensor or par in L, tensor in P, cotensor in C."""
    gamma = list(gamma)
    if role in ("left", "right"):
        return _fold([interp_obj(x, model, "L") for x in gamma])
    if role == "ptensor":
        if not all_producer(gamma):
            raise ModeError("P-tensor context must contain producers only")
        return _fold([interp_obj(x, model, "P") for x in gamma])
    if role == "ccotensor":
        if not all_consumer(gamma):
            raise ModeError("C-cotensor context must contain consumers only")
        out = model.cunit()
        objs = [interp_obj(x, model, "C") for x in gamma]
        if objs:
            out = objs[0]
            for o in objs[1:]:
                out = model.ctensor_obj(out, o)
        return out
    raise ValueError(f"unknown role {role!r}; expected one of {ROLES}")


def _pobjs(props, model):
    return [interp_obj(x, model, "P") for x in props]


# ---------------------------------------------------------------- the isomorphisms pi and tau

def _m_fold(model, pobjs, inverse=False):
    """F!P1 (x) ... (x) F!Pk  <->  F!(P1 (x) ... (x) Pk) from the monoidal components."""
    if not pobjs:
        return model.fbang_n1() if inverse else model.fbang_m1()
    out = model.lid(model.fbang(pobjs[0]))
    acc = pobjs[0]
    for p in pobjs[1:]:
        if inverse:
            out = model.lcomp(model.fbang_n(acc, p), model.ltensor(out, model.lid(model.fbang(p))))
        else:
            out = model.lcomp(model.ltensor(out, model.lid(model.fbang(p))), model.fbang_m(acc, p))
        acc = prod(acc, p)
    return out


def iso_pi(gamma, model, inverse=False):
    """tensor of G in L  ~  F! of G's tensor in P, for an all-producer G."""
    gamma = list(gamma)
    if not all_producer(gamma):
        raise ModeError("pi is defined for producer contexts")
    return _m_fold(model, _pobjs(gamma, model), inverse)


def iso_tau(delta, model, inverse=False):
    """(par of D in L)^bot  ~  F! of D seen in P, for an all-consumer D."""
    delta = list(delta)
    if not all_consumer(delta):
        raise ModeError("tau is defined for consumer contexts")
    m = _m_fold(model, _pobjs(delta, model), inverse)
    negated = model.neg(interp_ctx(delta, "right", model))
    if (m.cod if inverse else m.dom) != negated:
        raise AssertionError("negated par context differs from the dual free objects")
    return m


# ---------------------------------------------------------------- helpers on folded contexts

def _perm(src, dst):
    """Positions in src supplying each entry of dst (equal entries matched in order)."""
    used = [False] * len(src)
    out = []
    for y in dst:
        k = next(i for i, x in enumerate(src) if not used[i] and x == y)
        used[k] = True
        out.append(k)
    return out


def _rel(model, src_objs, dst_objs, fn):
    n = len(src_objs)
    return model.relabel(_fold(src_objs), _fold(dst_objs),
                         lambda lab: fold_labels(fn(unfold_labels(lab, n))))


def _prel(src_objs, dst_objs, fn):
    n = len(src_objs)
    return pfun(_fold(src_objs), _fold(dst_objs), lambda lab: fold_labels(fn(unfold_labels(lab, n))))


def _at(model, objs, i, h):
    """Identity on every factor of the fold except factor i, where h acts."""
    acc = None
    for k, o in enumerate(objs):
        piece = h if k == i else model.lid(o)
        acc = piece if acc is None else model.ltensor(acc, piece)
    return model.lid(point()) if acc is None else acc


def _expand(label, count):
    if count == 0:
        return []
    if count == 1:
        return [label]
    return list(label)


def _collapse(labels):
    if not labels:
        return ()
    if len(labels) == 1:
        return labels[0]
    return tuple(labels)


def _lobjs(props, model):
    return [interp_obj(x, model, "L") for x in props]


# ---------------------------------------------------------------- derivations

def interp_derivation(d: Derivation, model):
    """Denotation of a checked derivation; cuts are eliminated first."""
    rep = check(d)
    if not rep.ok:
        raise ValueError(f"derivation does not check: {rep.message}")
    if d.has_cut():
        d = eliminate_all(d)
    return _Interp(model).run(d)


def expected_type(s, model):
    """(dom, cod) a proof of sequent s must denote: L-objects if linear, P-objects if persistent."""
    it = _Interp(model)
    if s.kind is LIN:
        return it.ldom(s), it.lcod(s)
    return it.pdom(s), it.pcod(s)


class _Interp:
    def __init__(self, model):
        self.m = model
        self.memo = {}

    def run(self, d):
        key = id(d)
        if key not in self.memo:
            self.memo[key] = (d, self._node(d))
        return self.memo[key][1]

    # -- shapes
    def ldom(self, s):
        return interp_ctx(s.left, "left", self.m)

    def lcod(self, s):
        return interp_ctx(s.right, "right", self.m)

    def naturals(self, s):
        (side, idx), = displaced(s)
        nl = [x for i, x in enumerate(s.left) if not (side == "L" and i == idx)]
        nr = [x for i, x in enumerate(s.right) if not (side == "R" and i == idx)]
        x = s.side(side)[idx]
        return nl, nr, x, side

    def pdom(self, s):
        nl, nr, _, _ = self.naturals(s)
        return prod(_fold(_pobjs(nl, self.m)), _fold(_pobjs(nr, self.m)))

    def pcod(self, s):
        _, _, x, _ = self.naturals(s)
        return interp_obj(x, self.m, "P")

    # -- dispatch
    def _node(self, d):
        m, c, r = self.m, d.conclusion, d.rule
        if c.kind is LIN:
            out = self._linear(d)
            assert out.dom == self.ldom(c) and out.cod == self.lcod(c), r
        else:
            out = self._persistent(d)
            assert out.dom == self.pdom(c) and out.cod == self.pcod(c), r
        return out

    # ------------------------------------------------------------ linear rules
    def _linear(self, d):
        m, c, r = self.m, d.conclusion, d.rule
        if r is R.AX:
            return m.lid(interp_obj(c.left[0], m, "L"))
        if r in (R.TOP_R, R.ZERO_L):
            dom, cod = self.ldom(c), self.lcod(c)
            return LMor(dom, cod, np.zeros((len(cod), len(dom)), dtype=m.ring.dtype))
        if r is R.ONE_R:
            return m.fbang_m1() if c.right[0].mode is Mode.P else m.lid(m.unit())
        if r is R.BOT_L:
            return m.fwhy_n1() if c.left[0].mode is Mode.C else m.lid(m.unit())
        side, i = d.principal[0]
        x = c.side(side)[i]
        if r in (R.WITH_R, R.PLUS_L):
            return self._shared(d, side, i, x)
        if r in (R.TENSOR_R, R.PAR_L):
            return self._split_linear(d, side, i, x)
        if r in (R.FBANG_R, R.BANG_R) and side == "R":
            prem = self.run(d.premises[0]) if r is R.FBANG_R else self._bang_r(d)
            return self._fbang_r(c, i, prem)
        if r in (R.FWHY_L, R.WHY_L) and side == "L":
            prem = self.run(d.premises[0]) if r is R.FWHY_L else self._why_l(d)
            return self._fwhy_l(c, i, prem)
        core = self._left_core(r, x) if side == "L" else self._right_core(r, x)
        h, comps = core
        prem = d.premises[0]
        f = self.run(prem)
        if side == "L":
            objs = _lobjs(c.left, m)
            objs2 = objs[:i] + [h.cod] + objs[i + 1:]
            mod = list(c.left[:i]) + comps + list(c.left[i + 1:])
            perm = _perm(mod, prem.conclusion.left)
            n = len(comps)

            def fn(leaves):
                flat = leaves[:i] + _expand(leaves[i], n) + leaves[i + 1:]
                return [flat[k] for k in perm]
            return m.lcomp(_at(m, objs, i, h), _rel(m, objs2, _lobjs(prem.conclusion.left, m), fn), f)
        objs = _lobjs(c.right, m)
        objs2 = objs[:i] + [h.dom] + objs[i + 1:]
        mod = list(c.right[:i]) + comps + list(c.right[i + 1:])
        perm = _perm(prem.conclusion.right, mod)
        n = len(comps)

        def fn(leaves):
            flat = [leaves[k] for k in perm]
            return flat[:i] + [_collapse(flat[i:i + n])] + flat[i + n:]
        return m.lcomp(f, _rel(m, _lobjs(prem.conclusion.right, m), objs2, fn), _at(m, objs, i, h))

    def _left_core(self, r, x):
        """(morphism from [[x]] to the tensor of the premise components, components)."""
        m = self.m
        X = interp_obj(x, m, "L")
        if r is R.TENSOR_L:
            a, b = x.args
            if x.mode is Mode.P:
                pa, pb = interp_obj(a, m, "P"), interp_obj(b, m, "P")
                return m.fbang_n(pa, pb), [a, b]
            return m.lid(X), [a, b]
        if r is R.ONE_L:
            return (m.fbang_n1() if x.mode is Mode.P else m.lid(X)), []
        if r in (R.WITH_L1, R.WITH_L2):
            a, b = x.args
            k = 0 if r is R.WITH_L1 else 1
            return m.proj(interp_obj(a, m, "L"), interp_obj(b, m, "L"), k), [x.args[k]]
        if r is R.FBANG_L:
            return m.lid(X), [x.args[0]]
        if r is R.BANG_L:
            return m.counit(interp_obj(x.args[0], m, "L")), [x.args[0]]
        if r is R.WEAK_L:
            p = interp_obj(x, m, "P")
            return m.lcomp(m.fbang_mor(m.perase(p)), m.fbang_n1()), []
        if r is R.CONTR_L:
            p = interp_obj(x, m, "P")
            return m.lcomp(m.fbang_mor(m.pdiag(p)), m.fbang_n(p, p)), [x, x]
        raise ValueError(f"no left interpretation for {r.value}")

    def _right_core(self, r, x):
        """(morphism from the par of the premise components to [[x]], components)."""
        m = self.m
        X = interp_obj(x, m, "L")
        if r is R.PAR_R:
            a, b = x.args
            if x.mode is Mode.C:
                ca, cb = interp_obj(a, m, "C"), interp_obj(b, m, "C")
                return m.fwhy_m(ca, cb), [a, b]
            return m.lid(X), [a, b]
        if r is R.BOT_R:
            return (m.fwhy_m1() if x.mode is Mode.C else m.lid(X)), []
        if r in (R.PLUS_R1, R.PLUS_R2):
            a, b = x.args
            k = 0 if r is R.PLUS_R1 else 1
            return m.inj(interp_obj(a, m, "L"), interp_obj(b, m, "L"), k), [x.args[k]]
        if r is R.FWHY_R:
            return m.lid(X), [x.args[0]]
        if r is R.WHY_R:
            return m.why_unit(interp_obj(x.args[0], m, "L")), [x.args[0]]
        if r is R.WEAK_R:
            cx = interp_obj(x, m, "C")
            return m.lcomp(m.fwhy_m1(), m.fwhy_mor(m.cone(cx))), []
        if r is R.CONTR_R:
            cx = interp_obj(x, m, "C")
            return m.lcomp(m.fwhy_m(cx, cx), m.fwhy_mor(m.cmult(cx))), [x, x]
        raise ValueError(f"no right interpretation for {r.value}")

    def _shared(self, d, side, i, x):
        """WithR pairs the premises, PlusL copairs them; both share the context."""
        m, c = self.m, d.conclusion
        a, b = x.args
        A, B = interp_obj(a, m, "L"), interp_obj(b, m, "L")
        rest = list(c.side(side)[:i] + c.side(side)[i + 1:])
        rest_obj = _fold(_lobjs(rest, m))
        k = len(rest)
        objs = _lobjs(c.side(side), m)
        whole = _fold(objs)
        split = prod(rest_obj, m.sum(A, B))
        # conclusion fold <-> (rest, principal)
        to_split = m.relabel(whole, split, lambda lab: (
            lambda ls: (fold_labels(ls[:i] + ls[i + 1:]), ls[i]))(unfold_labels(lab, len(objs))))
        from_split = m.relabel(split, whole, lambda lab: (
            lambda ls: fold_labels(ls[:i] + [lab[1]] + ls[i:]))(unfold_labels(lab[0], k)))
        outs = []
        for prem, comp, C in zip(d.premises, (a, b), (A, B)):
            ps = list(prem.conclusion.side(side))
            if side == "R":
                perm = _perm(ps, rest + [comp])
                outs.append(m.lcomp(self.run(prem), m.relabel(
                    _fold(_lobjs(ps, m)), prod(rest_obj, C),
                    lambda lab, perm=perm, n=len(ps): _split_last(
                        fold_labels([unfold_labels(lab, n)[q] for q in perm]), k))))
            else:
                perm = _perm(rest + [comp], ps)
                outs.append(m.lcomp(m.relabel(
                    prod(rest_obj, C), _fold(_lobjs(ps, m)),
                    lambda lab, perm=perm: fold_labels(
                        [(unfold_labels(lab[0], k) + [lab[1]])[q] for q in perm])), self.run(prem)))
        if side == "R":
            paired = m.pair(*outs)
            dist = m.relabel(paired.cod, split, lambda lab: (lab[1][0], (lab[0], lab[1][1])))
            return m.lcomp(paired, dist, from_split)
        copaired = m.copair(*outs)
        undist = m.relabel(split, copaired.dom, lambda lab: (lab[1][0], (lab[0], lab[1][1])))
        return m.lcomp(to_split, undist, copaired)

    def _split_linear(self, d, side, i, x):
        """TensorR and ParL: tensor the premises and route the context factors."""
        m, c = self.m, d.conclusion
        p1, p2 = d.premises
        f1, f2 = self.run(p1), self.run(p2)
        s1, s2 = p1.conclusion, p2.conclusion
        a, b = x.args
        if side == "R":
            h = m.fbang_m(interp_obj(a, m, "P"), interp_obj(b, m, "P")) if x.mode is Mode.P \
                else m.lid(interp_obj(x, m, "L"))
            # left: conclusion context -> (premise 1 context, premise 2 context)
            lperm = _perm(list(c.left), list(s1.left) + list(s2.left))
            n1 = len(s1.left)
            into = m.relabel(self.ldom(c), prod(self.ldom(s1), self.ldom(s2)),
                             lambda lab: _two(lab, len(c.left), lperm, n1))
            body = m.ltensor(f1, f2)
            # right: (D1, A) and (D2, B) -> conclusion with leaf i = A (x) B
            r1, r2 = list(s1.right), list(s2.right)
            j1, j2 = r1.index(a), r2.index(b)
            d1 = r1[:j1] + r1[j1 + 1:]
            d2 = r2[:j2] + r2[j2 + 1:]
            rest = list(c.right[:i] + c.right[i + 1:])
            rperm = _perm(d1 + d2, rest)
            objs = _lobjs(c.right, m)
            objs2 = objs[:i] + [h.dom] + objs[i + 1:]

            def fn(lab):
                l1 = unfold_labels(lab[0], len(r1))
                l2 = unfold_labels(lab[1], len(r2))
                pool = l1[:j1] + l1[j1 + 1:] + l2[:j2] + l2[j2 + 1:]
                leaves = [pool[k] for k in rperm]
                return fold_labels(leaves[:i] + [(l1[j1], l2[j2])] + leaves[i:])
            out = m.relabel(body.cod, _fold(objs2), fn)
            return m.lcomp(into, body, out, _at(m, objs, i, h))
        h = m.fwhy_n(interp_obj(a, m, "C"), interp_obj(b, m, "C")) if x.mode is Mode.C \
            else m.lid(interp_obj(x, m, "L"))
        objs = _lobjs(c.left, m)
        objs2 = objs[:i] + [h.cod] + objs[i + 1:]
        l1, l2 = list(s1.left), list(s2.left)
        j1, j2 = l1.index(a), l2.index(b)
        g1 = l1[:j1] + l1[j1 + 1:]
        g2 = l2[:j2] + l2[j2 + 1:]
        rest = list(c.left[:i] + c.left[i + 1:])
        lperm = _perm(rest, g1 + g2)

        def fn(lab):
            leaves = unfold_labels(lab, len(objs))
            pa, pb = leaves[i]
            pool = [leaves[k] for k in range(len(leaves)) if k != i]
            picked = [pool[k] for k in lperm]
            q1, q2 = picked[:len(g1)], picked[len(g1):]
            return (fold_labels(q1[:j1] + [pa] + q1[j1:]), fold_labels(q2[:j2] + [pb] + q2[j2:]))
        into = m.relabel(_fold(objs2), prod(self.ldom(s1), self.ldom(s2)), fn)
        body = m.lpar(f1, f2)
        rperm = _perm(list(s1.right) + list(s2.right), list(c.right))
        n1, n2 = len(s1.right), len(s2.right)
        out = m.relabel(body.cod, self.lcod(c),
                        lambda lab: fold_labels([(unfold_labels(lab[0], n1) + unfold_labels(lab[1], n2))[k]
                                                 for k in rperm]))
        return m.lcomp(_at(m, objs, i, h), into, body, out)

    # ------------------------------------------------------------ adjunction rules
    def _fbang_r(self, c, i, prem):
        """From a P-morphism (G_P (x) D_P -> P) to G |- D, F!P in L."""
        m = self.m
        gamma = list(c.left)
        delta = list(c.right[:i] + c.right[i + 1:])
        gl = interp_ctx(gamma, "left", m)
        dl = interp_ctx(delta, "right", m)
        gp, dp = _fold(_pobjs(gamma, m)), _fold(_pobjs(delta, m))
        steps = [
            m.rho_inv(gl),
            m.ltensor(m.lid(gl), m.gamma_one(dl)),
            m.ltensor(iso_pi(gamma, m), m.lpar(iso_tau(delta, m), m.lid(dl))),
            m.delta(m.fbang(gp), m.fbang(dp), dl),
            m.lpar(m.fbang_m(gp, dp), m.lid(dl)),
            m.lpar(m.fbang_mor(prem), m.lid(dl)),
            m.sym(m.fbang(prem.cod), dl),
        ]
        body = m.lcomp(*steps)
        k = len(delta)
        objs = _lobjs(c.right, m)
        return m.lcomp(body, m.relabel(body.cod, _fold(objs), lambda lab: fold_labels(
            (lambda ls: ls[:i] + [lab[1]] + ls[i:])(unfold_labels(lab[0], k)))))

    def _fwhy_l(self, c, i, prem):
        """From a P-morphism (G_P (x) D_P -> C_*) to G, F?C |- D in L."""
        m = self.m
        gamma = list(c.left[:i] + c.left[i + 1:])
        delta = list(c.right)
        gl = interp_ctx(gamma, "left", m)
        dl = interp_ctx(delta, "right", m)
        gp, dp = _fold(_pobjs(gamma, m)), _fold(_pobjs(delta, m))
        X = interp_obj(c.left[i], m, "L")
        nd = m.neg(dl)
        k_mor = m.lcomp(m.ltensor(iso_pi(gamma, m), iso_tau(delta, m)), m.fbang_m(gp, dp),
                        m.fbang_mor(prem))
        objs = _lobjs(c.left, m)
        n = len(objs)

        def front(lab):
            leaves = unfold_labels(lab, n)
            return (fold_labels(leaves[:i] + leaves[i + 1:]), leaves[i])
        steps = [
            m.relabel(_fold(objs), prod(gl, X), front),
            m.rho_inv(prod(gl, X)),
            m.ltensor(m.lid(prod(gl, X)), m.gamma_one(dl)),
            m.relabel(prod(prod(gl, X), prod(nd, dl)), prod(prod(prod(gl, nd), X), dl),
                      lambda t: (((t[0][0], t[1][0]), t[0][1]), t[1][1])),
            m.lpar(m.ltensor(k_mor, m.lid(X)), m.lid(dl)),
            m.lpar(m.gamma_bot(m.neg(X)), m.lid(dl)),
            m.lam(dl),
        ]
        return m.lcomp(*steps)

    def _bang_core(self, gamma, delta, A, body):
        """P-morphism G_P (x) D_P -> G!A from an L-morphism G -> D par A."""
        m = self.m
        gl = interp_ctx(gamma, "left", m)
        dl = interp_ctx(delta, "right", m)
        gp, dp = _fold(_pobjs(gamma, m)), _fold(_pobjs(delta, m))
        nd = m.neg(dl)
        inner = m.lcomp(
            m.ltensor(iso_pi(gamma, m, inverse=True), iso_tau(delta, m, inverse=True)),
            m.ltensor(body, m.lid(nd)),
            m.relabel(prod(prod(dl, A), nd), prod(prod(dl, nd), A),
                      lambda t: ((t[0][0], t[1]), t[0][1])),
            m.lpar(m.gamma_bot(dl), m.lid(A)),
            m.lam(A),
        )
        return pcompose(
            ptensor(m.unit_of(gp), m.unit_of(dp)),
            m.gbang_m(m.fbang(gp), m.fbang(dp)),
            m.gbang_mor(inner),
        )

    def _bang_r(self, d):
        """BangR: the premise G |- D, A becomes G_P (x) D_P -> G!A."""
        m, c = self.m, d.conclusion
        side, i = d.principal[0]
        x = c.right[i]
        gamma = list(c.left)
        delta = list(c.right[:i] + c.right[i + 1:])
        prem = d.premises[0]
        f = self.run(prem)
        pr = list(prem.conclusion.right)
        perm = _perm(pr, delta + [x.args[0]])
        k = len(delta)
        dl = interp_ctx(delta, "right", m)
        A = interp_obj(x.args[0], m, "L")
        shaped = m.lcomp(f, m.relabel(f.cod, prod(dl, A), lambda lab: _split_last(
            fold_labels([unfold_labels(lab, len(pr))[j] for j in perm]), k)))
        return self._bang_core(gamma, delta, A, shaped)

    def _why_l(self, d):
        """WhyL: the premise G, A |- D becomes G_P (x) D_P -> G!(A^bot), which is ?A seen in P."""
        m, c = self.m, d.conclusion
        side, i = d.principal[0]
        x = c.left[i]
        gamma = list(c.left[:i] + c.left[i + 1:])
        delta = list(c.right)
        prem = d.premises[0]
        f = self.run(prem)
        A = interp_obj(x.args[0], m, "L")
        nA = m.neg(A)
        gl = interp_ctx(gamma, "left", m)
        pl = list(prem.conclusion.left)
        perm = _perm(gamma + [x.args[0]], pl)
        k = len(gamma)
        into = m.relabel(prod(gl, A), f.dom, lambda lab: fold_labels(
            [(unfold_labels(lab[0], k) + [lab[1]])[j] for j in perm]))
        shaped = m.lcomp(
            m.rho_inv(gl),
            m.ltensor(m.lid(gl), m.gamma_one(nA)),
            m.relabel(prod(gl, prod(A, nA)), prod(prod(gl, A), nA), lambda t: ((t[0], t[1][0]), t[1][1])),
            m.lpar(m.lcomp(into, f), m.lid(nA)),
        )
        return self._bang_core(gamma, delta, nA, shaped)

    # ------------------------------------------------------------ persistent rules
    def _persistent(self, d):
        m, c, r = self.m, d.conclusion, d.rule
        dom, cod = self.pdom(c), self.pcod(c)
        if r in (R.AX_P, R.AX_C, R.ONE_P_R, R.BOT_C_L):
            if r is R.AX_P:
                return pfun(dom, cod, lambda t: t[0])
            if r is R.AX_C:
                return pfun(dom, cod, lambda t: t[1])
            return pfun(dom, cod, lambda t: ())
        if r is R.BANG_R:
            return self._bang_r(d)
        if r is R.WHY_L:
            return self._why_l(d)
        if r in (R.TENSOR_P_R, R.PAR_C_L):
            return self._split_persistent(d)
        nl, nr, _, _ = self.naturals(c)
        side, i = d.principal[0]
        x = c.side(side)[i]
        # index of the principal among the naturals on its side
        j = i - sum(1 for (s, k) in displaced(c) if s == side and k < i)
        comps, expand = {
            R.TENSOR_P_L: (list(x.args), lambda v: list(v)),
            R.PAR_C_R: (list(x.args), lambda v: list(v)),
            R.ONE_P_L: ([], lambda v: []),
            R.BOT_C_R: ([], lambda v: []),
            R.PWEAK_L: ([], lambda v: []),
            R.PWEAK_R: ([], lambda v: []),
            R.PCONTR_L: ([x, x], lambda v: [v, v]),
            R.PCONTR_R: ([x, x], lambda v: [v, v]),
        }[r]
        prem = d.premises[0]
        pnl, pnr, _, _ = self.naturals(prem.conclusion)
        f = self.run(prem)
        mods = [nl, nr]
        k = 0 if side == "L" else 1
        mod = list(mods[k][:j]) + comps + list(mods[k][j + 1:])
        perm = _perm(mod, pnl if k == 0 else pnr)
        other_perm = _perm(mods[1 - k], pnr if k == 0 else pnl)
        sizes = (len(nl), len(nr))

        def fn(t):
            parts = [unfold_labels(t[0], sizes[0]), unfold_labels(t[1], sizes[1])]
            own = parts[k]
            flat = own[:j] + expand(own[j]) + own[j + 1:]
            new = [None, None]
            new[k] = fold_labels([flat[q] for q in perm])
            new[1 - k] = fold_labels([parts[1 - k][q] for q in other_perm])
            return tuple(new)
        return pcompose(pfun(dom, f.dom, fn), f)

    def _split_persistent(self, d):
        m, c = self.m, d.conclusion
        nl, nr, x, _ = self.naturals(c)
        dom, cod = self.pdom(c), self.pcod(c)
        p1, p2 = d.premises
        f1, f2 = self.run(p1), self.run(p2)
        a1, b1, _, _ = self.naturals(p1.conclusion)
        a2, b2, _, _ = self.naturals(p2.conclusion)
        lperm = _perm(nl, a1 + a2)
        rperm = _perm(nr, b1 + b2)

        def fn(t):
            gl = unfold_labels(t[0], len(nl))
            dl = unfold_labels(t[1], len(nr))
            gs = [gl[q] for q in lperm]
            ds = [dl[q] for q in rperm]
            u = (fold_labels(gs[:len(a1)]), fold_labels(ds[:len(b1)]))
            v = (fold_labels(gs[len(a1):]), fold_labels(ds[len(b1):]))
            return (f1(u), f2(v))
        return pfun(dom, cod, fn)


def _split_last(label, k):
    """Left fold of k+1 leaves -> (fold of the first k, last)."""
    leaves = unfold_labels(label, k + 1)
    return (fold_labels(leaves[:k]), leaves[k])


def _two(lab, n, perm, n1):
    leaves = unfold_labels(lab, n)
    picked = [leaves[k] for k in perm]
    return (fold_labels(picked[:n1]), fold_labels(picked[n1:]))
