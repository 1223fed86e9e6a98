"""Exhaustive small-instance checking of the structure a model must carry.

Objects are enumerated up to the scope's size bound.  Equations quantified over
morphisms use every morphism when both carriers have at most two elements and a
seeded random sample otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .models.base import (
    CMor, DomainTooLarge, LMor, PMor, Poset, all_pmors, discrete, pcompose, pid, point,
    posets_up_to, prod, ptensor,
)

FAMILIES = ("category", "pentagon", "triangle", "hexagon", "symmetry", "unit", "bifunctoriality",
            "naturality", "functor", "adjunction", "comonoid", "monoid", "duality", "snake",
            "products", "birkhoff")


@dataclass
class LawRecord:
    family: str
    law: str
    ok: bool
    checked: int
    witness: str = ""


@dataclass
class LawReport:
    model: str
    scope: dict
    records: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.ok for r in self.records)

    def families(self) -> dict:
        out = {}
        for r in self.records:
            out[r.family] = out.get(r.family, True) and r.ok
        return out

    def failures(self):
        return [r for r in self.records if not r.ok]

    def lines(self):
        for r in sorted(self.records, key=lambda r: (FAMILIES.index(r.family), r.law)):
            status = "pass" if r.ok else "FAIL"
            tail = f"\twitness={r.witness}" if r.witness else ""
            yield f"{r.family}\t{r.law}\t{status}\tchecked={r.checked}{tail}"


class _Law:
    """Accumulates one law's instances, keeping the first counterexample."""

    def __init__(self, report, family, law):
        self.report, self.family, self.law = report, family, law
        self.count = 0
        self.witness = None

    def __enter__(self):
        return self

    def check(self, ok, witness):
        self.count += 1
        if not ok and self.witness is None:
            self.witness = witness() if callable(witness) else witness

    def __exit__(self, exc_type, exc, tb):
        # an exception, including a size guard, means the law was not established
        if exc_type is not None:
            self.witness = self.witness or f"raised {exc_type.__name__}: {exc}"
        self.report.records.append(LawRecord(self.family, self.law, self.witness is None,
                                             self.count, self.witness or ""))
        return True


def _desc(*objs):
    return "(" + ",".join(_size(o) for o in objs) + ")"


def _size(o):
    if isinstance(o, Poset):
        return str(len(o)) + ("" if o.discrete else "o")
    return "C" + _size(o.base)


# ---------------------------------------------------------------- adapters over the three categories

class _Cat:
    def __init__(self, name, objs):
        self.name, self.objs = name, objs


class _LCat(_Cat):
    def __init__(self, m, objs, par=False):
        super().__init__("L-par" if par else "L-tensor", objs)
        self.m = m
        self.t = m.lpar if par else m.ltensor

    def id(self, a): return self.m.lid(a)
    def comp(self, *fs): return self.m.lcomp(*fs)
    def tensor(self, f, g): return self.t(f, g)
    def tobj(self, a, b): return prod(a, b)
    def unit(self): return self.m.unit()
    def alpha(self, a, b, c): return self.m.alpha(a, b, c)
    def alpha_inv(self, a, b, c): return self.m.alpha_inv(a, b, c)
    def lam(self, a): return self.m.lam(a)
    def lam_inv(self, a): return self.m.lam_inv(a)
    def rho(self, a): return self.m.rho(a)
    def rho_inv(self, a): return self.m.rho_inv(a)
    def sym(self, a, b): return self.m.sym(a, b)


class _PCat(_Cat):
    def __init__(self, m, objs):
        super().__init__("P", objs)
        self.m = m

    def id(self, a): return pid(a)
    def comp(self, *fs): return pcompose(*fs)
    def tensor(self, f, g): return ptensor(f, g)
    def tobj(self, a, b): return prod(a, b)
    def unit(self): return point()
    def alpha(self, a, b, c): return self.m.palpha(a, b, c)
    def alpha_inv(self, a, b, c):
        return _pinverse(self.m.palpha(a, b, c))
    def lam(self, a): return self.m.plam(a)
    def lam_inv(self, a): return _pinverse(self.m.plam(a))
    def rho(self, a): return self.m.prho(a)
    def rho_inv(self, a): return _pinverse(self.m.prho(a))
    def sym(self, a, b): return self.m.psym(a, b)


class _CCat(_Cat):
    def __init__(self, m, objs):
        super().__init__("C", objs)
        self.m = m

    def id(self, a): return self.m.cid(a)
    def comp(self, *fs): return self.m.ccomp(*fs)
    def tensor(self, f, g): return self.m.ctensor(f, g)
    def tobj(self, a, b): return self.m.ctensor_obj(a, b)
    def unit(self): return self.m.cunit()
    def alpha(self, a, b, c): return self.m.calpha(a, b, c)
    def alpha_inv(self, a, b, c): return _cinverse(self.m.calpha(a, b, c))
    def lam(self, a): return self.m.clam(a)
    def lam_inv(self, a): return _cinverse(self.m.clam(a))
    def rho(self, a): return self.m.crho(a)
    def rho_inv(self, a): return _cinverse(self.m.crho(a))
    def sym(self, a, b): return self.m.csym(a, b)


def _pinverse(f):
    inv = [0] * len(f.table)
    for i, j in enumerate(f.table):
        inv[j] = i
    return PMor(f.cod, f.dom, inv)


def _cinverse(h):
    return CMor(h.cod, h.dom, _pinverse(h.pmap))


# ---------------------------------------------------------------- sampling

class _Sampler:
    def __init__(self, model, rng, samples):
        self.m, self.rng, self.samples = model, rng, samples

    def lmors(self, a, b):
        m = self.m
        q = m.ring.size
        n, k = len(a), len(b)
        if n <= 2 and k <= 2 and q ** (n * k) <= 256:
            out = []
            for bits in product(range(q), repeat=n * k):
                f = LMor(a, b, np.array(bits, dtype=m.ring.dtype).reshape(k, n))
                if m.lvalid(f):
                    out.append(f)
            return out
        return [self._random_l(a, b) for _ in range(self.samples)]

    def _random_l(self, a, b):
        m = self.m
        raw = self.rng.integers(0, m.ring.size, size=(len(b), len(a)))
        if m.ring.q is not None:
            return LMor(a, b, raw.astype(m.ring.dtype))
        raw = raw.astype(bool)
        # close columns downward in b, then upward along a
        cols = (b.le.astype(int) @ raw.astype(int)) > 0 if len(b) else raw
        cols = (cols.astype(int) @ a.le.astype(int)) > 0 if len(a) else cols
        return LMor(a, b, cols.astype(m.ring.dtype).reshape(len(b), len(a)))

    def pmors(self, a, b):
        if len(a) <= 2 and len(b) <= 2 or len(b) ** len(a) <= 27:
            return list(all_pmors(a, b))
        out = []
        tries = 0
        while len(out) < self.samples and tries < 50 * self.samples:
            tries += 1
            f = PMor(a, b, self.rng.integers(0, len(b), size=len(a)))
            if f.monotone():
                out.append(f)
        return out

    def cmors(self, c, d):
        return [CMor(c, d, f) for f in self.pmors(d.base, c.base)]

    def tuples(self, *homs):
        """Tuples drawn from several hom-lists: all of them when few, else a seeded sample."""
        total = 1
        for h in homs:
            total *= len(h)
        if total <= 4 * self.samples * self.samples:
            return list(product(*homs))
        return [tuple(h[self.rng.integers(len(h))] for h in homs) for _ in range(4 * self.samples)]

    def mors(self, cat, a, b):
        if isinstance(cat, _LCat):
            return self.lmors(a, b)
        if isinstance(cat, _PCat):
            return self.pmors(a, b)
        return self.cmors(a, b)


# ---------------------------------------------------------------- the checker

def _objects(model, size):
    if model.name == "boolalg":
        ps = posets_up_to(size)
    else:
        ps = [discrete(range(n)) for n in range(size + 1)]
    return ps


def check_laws(model, scope=None) -> LawReport:
    """Check every law family on objects up to scope["max_size"]; failures become report records."""
    scope = dict(scope or {})
    size = scope.setdefault("max_size", 2)
    seed = scope.setdefault("seed", 0)
    samples = scope.setdefault("samples", 6)
    wanted = scope.get("laws")
    rng = np.random.default_rng(seed)
    report = LawReport(model.name, scope)
    objs = _objects(model, size)
    small = [o for o in objs if len(o) <= 2]
    sampler = _Sampler(model, rng, samples)
    ctx = _Ctx(model, report, objs, small, sampler)
    for fam in FAMILIES:
        if wanted and not any(w in fam for w in wanted):
            continue
        getattr(ctx, "fam_" + fam)()
    return report


class _Ctx:
    def __init__(self, m, report, objs, small, sampler):
        self.m, self.report, self.objs, self.small, self.s = m, report, objs, small, sampler
        self.L = _LCat(m, objs)
        self.Lpar = _LCat(m, objs, par=True)
        self.P = _PCat(m, objs)
        self.C = _CCat(m, [m.up(o) for o in objs])
        self.cats = [self.L, self.Lpar, self.P, self.C]

    def law(self, family, name):
        return _Law(self.report, family, name)

    def quads(self, cat):
        pool = cat.objs if len(cat.objs) ** 4 <= 1000 else \
            [o for o in cat.objs if len(o if isinstance(o, Poset) else o.base) <= 2]
        return product(pool, repeat=4)

    # ---------------------------------------------------------- category laws and isomorphisms
    def fam_category(self):
        for cat in self.cats:
            with self.law("category", f"identity[{cat.name}]") as lw:
                for a, b in product(cat.objs, repeat=2):
                    for f in self.s.mors(cat, a, b):
                        lw.check(cat.comp(cat.id(a), f) == f and cat.comp(f, cat.id(b)) == f,
                                 lambda: f"f:{_desc(a, b)}")
            with self.law("category", f"associativity[{cat.name}]") as lw:
                for a, b, c, d in product(self.small_of(cat), repeat=4):
                    for f, g, h in self.s.tuples(self.s.mors(cat, a, b), self.s.mors(cat, b, c), self.s.mors(cat, c, d)):
                        lw.check(cat.comp(cat.comp(f, g), h) == cat.comp(f, cat.comp(g, h)),
                                 lambda: _desc(a, b, c, d))
            with self.law("category", f"structural-inverses[{cat.name}]") as lw:
                for a, b, c in product(cat.objs, repeat=3):
                    abc = cat.tobj(cat.tobj(a, b), c)
                    lw.check(cat.comp(cat.alpha(a, b, c), cat.alpha_inv(a, b, c)) == cat.id(abc),
                             lambda: "alpha" + _desc(a, b, c))
                    lw.check(cat.comp(cat.alpha_inv(a, b, c), cat.alpha(a, b, c)) ==
                             cat.id(cat.tobj(a, cat.tobj(b, c))), lambda: "alpha^-1" + _desc(a, b, c))
                u = cat.unit()
                for a in cat.objs:
                    lw.check(cat.comp(cat.lam(a), cat.lam_inv(a)) == cat.id(cat.tobj(u, a)), "lambda" + _desc(a))
                    lw.check(cat.comp(cat.lam_inv(a), cat.lam(a)) == cat.id(a), "lambda^-1" + _desc(a))
                    lw.check(cat.comp(cat.rho(a), cat.rho_inv(a)) == cat.id(cat.tobj(a, u)), "rho" + _desc(a))
                    lw.check(cat.comp(cat.rho_inv(a), cat.rho(a)) == cat.id(a), "rho^-1" + _desc(a))

    def fits(self, *objs):
        """Whether G! of every partial product of objs stays within the model's size limit."""
        whole = point()
        for o in objs:
            # an empty factor would hide the size of the others
            whole = prod(whole, o if len(o) else point())
        try:
            self.m.gbang(whole)
        except DomainTooLarge:
            return False
        return True

    def small_of(self, cat):
        return [o for o in cat.objs if len(o if isinstance(o, Poset) else o.base) <= 2]

    # ---------------------------------------------------------- monoidal coherence
    def fam_pentagon(self):
        for cat in self.cats:
            with self.law("pentagon", cat.name) as lw:
                for a, b, c, d in self.quads(cat):
                    t = cat.tobj
                    lhs = cat.comp(cat.alpha(t(a, b), c, d), cat.alpha(a, b, t(c, d)))
                    rhs = cat.comp(cat.tensor(cat.alpha(a, b, c), cat.id(d)), cat.alpha(a, t(b, c), d),
                                   cat.tensor(cat.id(a), cat.alpha(b, c, d)))
                    lw.check(lhs == rhs, lambda: _desc(a, b, c, d))

    def fam_triangle(self):
        for cat in self.cats:
            with self.law("triangle", cat.name) as lw:
                u = cat.unit()
                for a, b in product(cat.objs, repeat=2):
                    lhs = cat.comp(cat.alpha(a, u, b), cat.tensor(cat.id(a), cat.lam(b)))
                    rhs = cat.tensor(cat.rho(a), cat.id(b))
                    lw.check(lhs == rhs, lambda: _desc(a, b))

    def fam_hexagon(self):
        for cat in self.cats:
            with self.law("hexagon", cat.name) as lw:
                t = cat.tobj
                for a, b, c in product(cat.objs, repeat=3):
                    lhs = cat.comp(cat.alpha(a, b, c), cat.sym(a, t(b, c)), cat.alpha(b, c, a))
                    rhs = cat.comp(cat.tensor(cat.sym(a, b), cat.id(c)), cat.alpha(b, a, c),
                                   cat.tensor(cat.id(b), cat.sym(a, c)))
                    lw.check(lhs == rhs, lambda: _desc(a, b, c))

    def fam_symmetry(self):
        for cat in self.cats:
            with self.law("symmetry", cat.name) as lw:
                for a, b in product(cat.objs, repeat=2):
                    lw.check(cat.comp(cat.sym(a, b), cat.sym(b, a)) == cat.id(cat.tobj(a, b)),
                             lambda: _desc(a, b))

    def fam_unit(self):
        for cat in self.cats:
            with self.law("unit", cat.name) as lw:
                u = cat.unit()
                for a in cat.objs:
                    lw.check(cat.comp(cat.sym(a, u), cat.lam(a)) == cat.rho(a), lambda: _desc(a))
                lw.check(cat.lam(u) == cat.rho(u), "unit object")

    def fam_bifunctoriality(self):
        for cat in self.cats:
            with self.law("bifunctoriality", cat.name) as lw:
                pool = self.small_of(cat)
                for a, b in product(pool, repeat=2):
                    lw.check(cat.tensor(cat.id(a), cat.id(b)) == cat.id(cat.tobj(a, b)), lambda: _desc(a, b))
                for a, b, c in product(pool, repeat=3):
                    fs, gs = self.s.mors(cat, a, b), self.s.mors(cat, b, c)
                    hs, ks = self.s.mors(cat, c, a), self.s.mors(cat, a, c)
                    for f, g, h, k in self.s.tuples(fs, gs, hs, ks):
                        lhs = cat.tensor(cat.comp(f, g), cat.comp(h, k))
                        rhs = cat.comp(cat.tensor(f, h), cat.tensor(g, k))
                        lw.check(lhs == rhs, lambda: _desc(a, b, c))

    # ---------------------------------------------------------- naturality
    def fam_naturality(self):
        m = self.m
        for cat in self.cats:
            pool = self.small_of(cat)
            with self.law("naturality", f"alpha[{cat.name}]") as lw:
                for a, b, c in product(pool, repeat=3):
                    for f, g, h in self.s.tuples(self.s.mors(cat, a, b), self.s.mors(cat, b, c), self.s.mors(cat, c, a)):
                        lhs = cat.comp(cat.tensor(cat.tensor(f, g), h), cat.alpha(b, c, a))
                        rhs = cat.comp(cat.alpha(a, b, c), cat.tensor(f, cat.tensor(g, h)))
                        lw.check(lhs == rhs, lambda: _desc(a, b, c))
            with self.law("naturality", f"sigma-lambda-rho[{cat.name}]") as lw:
                u = cat.unit()
                for a, b in product(pool, repeat=2):
                    for f, g in self.s.tuples(self.s.mors(cat, a, b), self.s.mors(cat, b, a)):
                        lw.check(cat.comp(cat.tensor(f, g), cat.sym(b, a)) ==
                                 cat.comp(cat.sym(a, b), cat.tensor(g, f)), lambda: "sigma" + _desc(a, b))
                        lw.check(cat.comp(cat.tensor(cat.id(u), f), cat.lam(b)) == cat.comp(cat.lam(a), f),
                                 lambda: "lambda" + _desc(a, b))
                        lw.check(cat.comp(cat.tensor(f, cat.id(u)), cat.rho(b)) == cat.comp(cat.rho(a), f),
                                 lambda: "rho" + _desc(a, b))
        L = self.L
        pool = self.small_of(L)
        with self.law("naturality", "delta[L]") as lw:
            for a, b, c in product(pool, repeat=3):
                for f, g, h in self.s.tuples(self.s.lmors(a, b), self.s.lmors(b, c), self.s.lmors(c, a)):
                    lhs = m.lcomp(m.ltensor(f, m.lpar(g, h)), m.delta(b, c, a))
                    rhs = m.lcomp(m.delta(a, b, c), m.lpar(m.ltensor(f, g), h))
                    lw.check(lhs == rhs, lambda: _desc(a, b, c))
        with self.law("naturality", "fbang-m") as lw:
            for a, b in product(pool, repeat=2):
                for f, g in self.s.tuples(self.s.pmors(a, b), self.s.pmors(b, a)):
                    lhs = m.lcomp(m.ltensor(m.fbang_mor(f), m.fbang_mor(g)), m.fbang_m(b, a))
                    rhs = m.lcomp(m.fbang_m(a, b), m.fbang_mor(ptensor(f, g)))
                    lw.check(lhs == rhs, lambda: _desc(a, b))
        with self.law("naturality", "gbang-m") as lw:
            for a, b in product(pool, repeat=2):
                if not self.fits(a, b):
                    continue
                for f, g in self.s.tuples(self.s.lmors(a, b), self.s.lmors(b, a)):
                    lhs = pcompose(ptensor(m.gbang_mor(f), m.gbang_mor(g)), m.gbang_m(b, a))
                    rhs = pcompose(m.gbang_m(a, b), m.gbang_mor(m.ltensor(f, g)))
                    lw.check(lhs == rhs, lambda: _desc(a, b))
        with self.law("naturality", "unit-counit") as lw:
            for a, b in product(self.objs, repeat=2):
                for f in self.s.pmors(a, b)[: self.s.samples]:
                    # f ; eta_b = eta_a ; G!F!f, evaluated on elements
                    for x in a.labels:
                        lhs = _unit_vec(b, f(x))
                        rhs = _apply(m, m.fbang_mor(f), _unit_vec(a, x))
                        lw.check(lhs == rhs, lambda: "eta" + _desc(a, b))
                for g in self.s.lmors(a, b)[: self.s.samples]:
                    lhs = m.lcomp(m.fbang_mor(m.gbang_mor(g)), m.counit(b))
                    rhs = m.lcomp(m.counit(a), g)
                    lw.check(lhs == rhs, lambda: "epsilon" + _desc(a, b))
        with self.law("naturality", "comonoid-maps[P]") as lw:
            for a, b in product(self.objs, repeat=2):
                for f in self.s.pmors(a, b):
                    lw.check(pcompose(f, m.pdiag(b)) == pcompose(m.pdiag(a), ptensor(f, f)),
                             lambda: "d" + _desc(a, b))
                    lw.check(pcompose(f, m.perase(b)) == m.perase(a), lambda: "e" + _desc(a, b))
        with self.law("naturality", "monoid-maps[C]") as lw:
            for a, b in product(self.C.objs, repeat=2):
                for h in self.s.cmors(a, b):
                    lw.check(m.ccomp(m.ctensor(h, h), m.cmult(b)) == m.ccomp(m.cmult(a), h),
                             lambda: "d" + _desc(a, b))
                    lw.check(m.ccomp(m.cone(a), h) == m.cone(b), lambda: "e" + _desc(a, b))

    # ---------------------------------------------------------- functors
    def fam_functor(self):
        m = self.m
        pool = self.small

        def functorial(name, F, sample, ident_src, ident_dst):
            with self.law("functor", name) as lw:
                for a in self.objs:
                    lw.check(F(ident_src(a)) == ident_dst(F(ident_src(a)).dom), lambda: _desc(a))
                for a, b, c in product(pool, repeat=3):
                    for f, g in self.s.tuples(sample(a, b), sample(b, c)):
                        lw.check(F(_comp(m, f, g)) == _comp(m, F(f), F(g)), lambda: _desc(a, b, c))

        functorial("F!", m.fbang_mor, self.s.pmors, pid, m.lid)
        functorial("G!", m.gbang_mor, self.s.lmors, m.lid, pid)
        functorial("F?", m.fwhy_mor, lambda a, b: self.s.cmors(m.up(a), m.up(b)),
                   lambda a: m.cid(m.up(a)), m.lid)
        functorial("G?", m.gwhy_mor, self.s.lmors, m.lid, m.cid)
        with self.law("functor", "dualities") as lw:
            for a, b, c in product(pool, repeat=3):
                for f, g in self.s.tuples(self.s.pmors(a, b), self.s.pmors(b, c)):
                    lw.check(m.up_mor(pcompose(f, g)) == m.ccomp(m.up_mor(g), m.up_mor(f)),
                             lambda: "up" + _desc(a, b, c))
                    h, k = m.up_mor(g), m.up_mor(f)
                    lw.check(m.down_mor(m.ccomp(h, k)) == pcompose(m.down_mor(k), m.down_mor(h)),
                             lambda: "down" + _desc(a, b, c))
                for f, g in self.s.tuples(self.s.lmors(a, b), self.s.lmors(b, c)):
                    lw.check(m.neg_mor(m.lcomp(f, g)) == m.lcomp(m.neg_mor(g), m.neg_mor(f)),
                             lambda: "neg" + _desc(a, b, c))
        # monoidal coherence for F! and G! (associativity, units, symmetry)
        with self.law("functor", "monoidal[F!]") as lw:
            for a, b, c in product(pool, repeat=3):
                lhs = m.lcomp(m.ltensor(m.fbang_m(a, b), m.lid(c)), m.fbang_m(prod(a, b), c),
                              m.fbang_mor(m.palpha(a, b, c)))
                rhs = m.lcomp(m.alpha(a, b, c), m.ltensor(m.lid(a), m.fbang_m(b, c)),
                              m.fbang_m(a, prod(b, c)))
                lw.check(lhs == rhs, lambda: "assoc" + _desc(a, b, c))
            for a, b in product(pool, repeat=2):
                lw.check(m.lcomp(m.fbang_m(a, b), m.fbang_mor(m.psym(a, b))) ==
                         m.lcomp(m.sym(a, b), m.fbang_m(b, a)), lambda: "sym" + _desc(a, b))
            for a in pool:
                u = point()
                lw.check(m.lcomp(m.ltensor(m.fbang_m1(), m.lid(a)), m.fbang_m(u, a), m.fbang_mor(m.plam(a)))
                         == m.lam(a), lambda: "left-unit" + _desc(a))
                lw.check(m.lcomp(m.ltensor(m.lid(a), m.fbang_m1()), m.fbang_m(a, u), m.fbang_mor(m.prho(a)))
                         == m.rho(a), lambda: "right-unit" + _desc(a))
                lw.check(m.lcomp(m.fbang_m(a, u), m.fbang_n(a, u)) == m.lid(prod(a, u)),
                         lambda: "m-n-inverse" + _desc(a))
        with self.law("functor", "monoidal[G!]") as lw:
            for a, b, c in product(pool, repeat=3):
                if not self.fits(a, b, c):
                    continue
                lhs = pcompose(ptensor(m.gbang_m(a, b), pid(m.gbang(c))), m.gbang_m(prod(a, b), c),
                               m.gbang_mor(m.alpha(a, b, c)))
                rhs = pcompose(m.palpha(m.gbang(a), m.gbang(b), m.gbang(c)),
                               ptensor(pid(m.gbang(a)), m.gbang_m(b, c)), m.gbang_m(a, prod(b, c)))
                lw.check(lhs == rhs, lambda: "assoc" + _desc(a, b, c))
            for a, b in product(pool, repeat=2):
                if not self.fits(a, b):
                    continue
                lw.check(pcompose(m.gbang_m(a, b), m.gbang_mor(m.sym(a, b))) ==
                         pcompose(m.psym(m.gbang(a), m.gbang(b)), m.gbang_m(b, a)), lambda: "sym" + _desc(a, b))
            for a in pool:
                ga = m.gbang(a)
                lw.check(pcompose(ptensor(m.gbang_m1(), pid(ga)), m.gbang_m(point(), a), m.gbang_mor(m.lam(a)))
                         == m.plam(ga), lambda: "left-unit" + _desc(a))
                lw.check(pcompose(ptensor(pid(ga), m.gbang_m1()), m.gbang_m(a, point()), m.gbang_mor(m.rho(a)))
                         == m.prho(ga), lambda: "right-unit" + _desc(a))
        with self.law("functor", "monoidal[F?,G?]") as lw:
            for a, b in product(pool, repeat=2):
                if not self.fits(a, b):
                    continue
                ca, cb = m.up(a), m.up(b)
                lw.check(m.lcomp(m.fwhy_m(ca, cb), m.fwhy_mor(m.csym(ca, cb))) ==
                         m.lcomp(m.sym(m.fwhy(ca), m.fwhy(cb)), m.fwhy_m(cb, ca)), lambda: "F?-sym" + _desc(a, b))
                lw.check(m.lcomp(m.fwhy_m(ca, cb), m.fwhy_n(ca, cb)) ==
                         m.lid(prod(m.fwhy(ca), m.fwhy(cb))), lambda: "F?-inverse" + _desc(a, b))
                lw.check(m.ccomp(m.gwhy_mor(m.sym(a, b)), m.gwhy_n(b, a)) ==
                         m.ccomp(m.gwhy_n(a, b), m.csym(m.gwhy(a), m.gwhy(b))), lambda: "G?-sym" + _desc(a, b))

    # ---------------------------------------------------------- adjunctions
    def fam_adjunction(self):
        m = self.m
        with self.law("adjunction", "triangle[F!-G!]") as lw:
            for p in self.objs:
                lhs = m.lcomp(m.fbang_mor(m.unit_of(p)), m.counit(m.fbang(p)))
                lw.check(lhs == m.lid(m.fbang(p)), lambda: "F!eta;eps" + _desc(p))
            for a in self.objs:
                ga = m.gbang(a)
                eps = m.counit(a)
                for v in ga.labels:
                    lw.check(_apply(m, eps, _unit_vec(ga, v)) == v, lambda: "eta;G!eps" + _desc(a))
        with self.law("adjunction", "triangle[G?-F?]") as lw:
            for p in self.objs:
                c = m.up(p)
                lhs = m.lcomp(m.why_unit(m.fwhy(c)), m.fwhy_mor(m.why_counit(c)))
                lw.check(lhs == m.lid(m.fwhy(c)), lambda: "eta;F?eps" + _desc(p))
            for a in self.objs:
                na = m.neg(a)
                base = m.gbang(na)
                eps = m.counit(na)
                for v in base.labels:
                    lw.check(_apply(m, eps, _unit_vec(base, v)) == v, lambda: "G?eta;eps" + _desc(a))
        with self.law("adjunction", "monoidal-unit") as lw:
            for p, q in product(self.objs, repeat=2):
                for x, y in product(p.labels, q.labels):
                    lhs = _unit_vec(prod(p, q), (x, y))
                    rhs = _apply(m, m.fbang_m(p, q), _kron(m, _unit_vec(p, x), _unit_vec(q, y)))
                    lw.check(lhs == rhs, lambda: _desc(p, q))
            lw.check(_unit_vec(point(), ()) == _apply(m, m.fbang_m1(), m.gbang_m1()(())), "unit")
        with self.law("adjunction", "monoidal-counit") as lw:
            for a, b in product(self.small, repeat=2):
                if not self.fits(a, b):
                    continue
                lhs = m.lcomp(m.fbang_m(m.gbang(a), m.gbang(b)), m.fbang_mor(m.gbang_m(a, b)),
                              m.counit(prod(a, b)))
                rhs = m.ltensor(m.counit(a), m.counit(b))
                lw.check(lhs == rhs, lambda: _desc(a, b))
            lw.check(m.lcomp(m.fbang_m1(), m.fbang_mor(m.gbang_m1()), m.counit(point())) == m.lid(point()),
                     "unit")
        with self.law("adjunction", "hom-bijection[F!-G!]") as lw:
            for p, a in product(self.small, repeat=2):
                for f in self.s.lmors(m.fbang(p), a):
                    g = _sharp(m, f)
                    lw.check(_flat(m, g, a) == f, lambda: "flat.sharp" + _desc(p, a))
                for g in self.s.pmors(p, m.gbang(a)):
                    lw.check(_sharp(m, _flat(m, g, a)) == g, lambda: "sharp.flat" + _desc(p, a))

    # ---------------------------------------------------------- (co)monoids
    def fam_comonoid(self):
        m = self.m
        with self.law("comonoid", "P") as lw:
            for p in self.objs:
                d, e = m.pdiag(p), m.perase(p)
                lw.check(pcompose(d, ptensor(d, pid(p)), m.palpha(p, p, p)) == pcompose(d, ptensor(pid(p), d)),
                         lambda: "coassociative" + _desc(p))
                lw.check(pcompose(d, ptensor(e, pid(p)), m.plam(p)) == pid(p), lambda: "left counit" + _desc(p))
                lw.check(pcompose(d, ptensor(pid(p), e), m.prho(p)) == pid(p), lambda: "right counit" + _desc(p))
                lw.check(pcompose(d, m.psym(p, p)) == d, lambda: "cocommutative" + _desc(p))

    def fam_monoid(self):
        m = self.m
        with self.law("monoid", "C") as lw:
            for c in self.C.objs:
                d, e = m.cmult(c), m.cone(c)
                cc = m.ctensor_obj(c, c)
                lw.check(m.ccomp(m.calpha(c, c, c), m.ctensor(m.cid(c), d), d) ==
                         m.ccomp(m.ctensor(d, m.cid(c)), d), lambda: "associative" + _desc(c))
                lw.check(m.ccomp(m.ctensor(e, m.cid(c)), d) == m.clam(c), lambda: "left unit" + _desc(c))
                lw.check(m.ccomp(m.ctensor(m.cid(c), e), d) == m.crho(c), lambda: "right unit" + _desc(c))
                lw.check(m.ccomp(m.csym(c, c), d) == d, lambda: "commutative" + _desc(c))
                del cc
        if m.lattice:
            from .models.boolalg import ba_lower_unguarded, is_lattice_hom, materialize
            with self.law("monoid", "meet-and-bottom[lattices]") as lw:
                for c in self.C.objs:
                    q = c.base
                    lat = ba_lower_unguarded(q)
                    lat2 = ba_lower_unguarded(prod(q, q))
                    dm = materialize(m.cmult(c))
                    em = materialize(m.cone(c))
                    unit = ba_lower_unguarded(point())
                    lw.check(is_lattice_hom(lat2, lat, dm), lambda: "d is a lattice hom" + _desc(c))
                    lw.check(is_lattice_hom(unit, lat, em), lambda: "e is a lattice hom" + _desc(c))
                    lw.check(em[unit.bot] == lat.bot, lambda: "e(empty) = bottom" + _desc(c))
                    for i, x in enumerate(lat.labels):
                        for j, y in enumerate(lat.labels):
                            gen = tuple(int(x[a] and y[b]) for a in range(len(q)) for b in range(len(q)))
                            lw.check(dm[lat2.poset.index[gen]] == lat.meet[i, j], lambda: "d(x,y) = x meet y" + _desc(c))

    # ---------------------------------------------------------- dualities
    def fam_duality(self):
        m = self.m
        with self.law("duality", "negation-involutive") as lw:
            for a in self.objs:
                lw.check(m.neg(m.neg(a)) == a, lambda: _desc(a))
            for a, b in product(self.small, repeat=2):
                for f in self.s.lmors(a, b):
                    lw.check(m.neg_mor(m.neg_mor(f)) == f, lambda: _desc(a, b))
        with self.law("duality", "respect-isos") as lw:
            for p in self.objs:
                lw.check(m.neg(m.fbang(p)) == m.fwhy(m.up(p)), lambda: "(F!P)^bot = F?(P^*)" + _desc(p))
                lw.check(m.up(m.gbang(p)) == m.gwhy(m.neg(p)), lambda: "(G!A)^* = G?(A^bot)" + _desc(p))
            for a, b in product(self.small, repeat=2):
                for f in self.s.pmors(a, b):
                    lw.check(m.neg_mor(m.fbang_mor(f)) == m.fwhy_mor(m.up_mor(f)), lambda: "on maps" + _desc(a, b))
                for g in self.s.lmors(a, b):
                    lw.check(m.up_mor(m.gbang_mor(g)) == m.gwhy_mor(m.neg_mor(g)), lambda: "on maps" + _desc(a, b))
        with self.law("duality", "round-trip-isos") as lw:
            for p in self.objs:
                lw.check(m.down(m.up(p)) == p, lambda: "P" + _desc(p))
                c = m.up(p)
                lw.check(m.up(m.down(c)) == c, lambda: "C" + _desc(p))
        if m.name in ("finvect", "rel"):
            with self.law("duality", "tensor-equals-par") as lw:
                for a, b in product(self.small, repeat=2):
                    for f, g in self.s.tuples(self.s.lmors(a, b), self.s.lmors(b, a)):
                        lw.check(m.ltensor(f, g) == m.lpar(f, g), lambda: _desc(a, b))
        if m.name == "rel":
            with self.law("duality", "negation-is-identity") as lw:
                for a in self.objs:
                    lw.check(m.neg(a) == a, lambda: _desc(a))

    def fam_snake(self):
        m = self.m
        with self.law("snake", "lambda.(eval x id).alpha.(id x coeval) = rho") as lw:
            for a in self.objs:
                na = m.neg(a)
                lhs = m.lcomp(m.ltensor(m.lid(a), m.gamma_one(a)), m.alpha_inv(a, na, a),
                              m.ltensor(m.gamma_bot(a), m.lid(a)), m.lam(a))
                lw.check(lhs == m.rho(a), lambda: _desc(a))
        with self.law("snake", "mirrored, on the negation") as lw:
            for a in self.objs:
                na = m.neg(a)
                lhs = m.lcomp(m.ltensor(m.gamma_one(a), m.lid(na)), m.alpha(na, a, na),
                              m.ltensor(m.lid(na), m.gamma_bot(a)), m.rho(na))
                lw.check(lhs == m.lam(na), lambda: _desc(a))

    def fam_products(self):
        m = self.m
        with self.law("products", "pairing") as lw:
            for a, b, c in product(self.small, repeat=3):
                for f, g in self.s.tuples(self.s.lmors(c, a), self.s.lmors(c, b)):
                    h = m.pair(f, g)
                    lw.check(m.lcomp(h, m.proj(a, b, 0)) == f and m.lcomp(h, m.proj(a, b, 1)) == g,
                             lambda: _desc(a, b, c))
                    lw.check(m.pair(m.lcomp(h, m.proj(a, b, 0)), m.lcomp(h, m.proj(a, b, 1))) == h,
                             lambda: "uniqueness" + _desc(a, b, c))
        with self.law("products", "copairing") as lw:
            for a, b, c in product(self.small, repeat=3):
                for f, g in self.s.tuples(self.s.lmors(a, c), self.s.lmors(b, c)):
                    h = m.copair(f, g)
                    lw.check(m.lcomp(m.inj(a, b, 0), h) == f and m.lcomp(m.inj(a, b, 1), h) == g,
                             lambda: _desc(a, b, c))
                    lw.check(m.copair(m.lcomp(m.inj(a, b, 0), h), m.lcomp(m.inj(a, b, 1), h)) == h,
                             lambda: "uniqueness" + _desc(a, b, c))
        with self.law("products", "terminal-initial") as lw:
            z = Poset([])
            for a in self.objs:
                lw.check(len(self.s.lmors(a, z)) == 1 and len(self.s.lmors(z, a)) == 1 if len(a) <= 2 else True,
                         lambda: _desc(a))

    def fam_birkhoff(self):
        m = self.m
        if not m.lattice:
            return
        from .models.boolalg import (
            ba_joinirr, ba_lower, birkhoff_lattice, birkhoff_point, distributive_lattices, is_lattice_hom,
            lattice_iso, materialize, ba_lower_unguarded,
        )
        with self.law("birkhoff", "posets: joinirr(lower(P)) ~ P") as lw:
            for p in posets_up_to(min(3, self.report.scope["max_size"] + 1)):
                f = birkhoff_point(p)
                inv_ok = len(set(f.table)) == len(p) and len(ba_joinirr(ba_lower(p))) == len(p)
                back = _pinverse(f) if inv_ok else None
                lw.check(inv_ok and f.monotone() and back.monotone(), lambda: _desc(p))
        with self.law("birkhoff", "lattices: lower(joinirr(L)) ~ L") as lw:
            for lat in distributive_lattices(8):
                lw.check(lat.distributive() and lattice_iso(lat, ba_lower_unguarded(ba_joinirr(lat)), birkhoff_lattice(lat)),
                         lambda: f"lattice of {len(lat)}")
        with self.law("birkhoff", "C-morphisms are lattice homs") as lw:
            for c, d in product(self.small_of(self.C), repeat=2):
                for h in self.s.cmors(c, d):
                    lw.check(is_lattice_hom(ba_lower_unguarded(c.base), ba_lower_unguarded(d.base), materialize(h)),
                             lambda: _desc(c, d))
        with self.law("birkhoff", "transposes agree with sharp/flat") as lw:
            from .models.boolalg import ba_flat, ba_sharp
            for p, a in product(self.small, repeat=2):
                for f in self.s.lmors(p, a):
                    g = ba_sharp(f)
                    lw.check(g == _sharp(m, f) and ba_flat(g, a) == f, lambda: _desc(p, a))


# ---------------------------------------------------------------- element-level helpers

def _comp(m, f, g):
    if isinstance(f, LMor):
        return m.lcomp(f, g)
    if isinstance(f, PMor):
        return pcompose(f, g)
    return m.ccomp(f, g)


def _unit_vec(p, x):
    """The generator x of F!P as an element of G!F!P: its down-set."""
    i = p.index[x]
    return tuple(int(b) for b in p.le[:, i])


def _apply(m, f, vec):
    v = np.array(vec, dtype=np.int64).reshape(len(f.dom), 1)
    return tuple(int(t) for t in m.ring.mul(f.m, v)[:, 0])


def _kron(m, u, v):
    return tuple(int(t) for t in m.ring.kron(np.array(u, dtype=np.int64), np.array(v, dtype=np.int64)))


def _sharp(m, f):
    """F!P -> A  to  P -> G!A."""
    p = f.dom
    g = m.gbang(f.cod)
    return PMor(p, g, [g.index[_apply(m, f, _unit_vec(p, x))] for x in p.labels])


def _flat(m, g, a):
    """P -> G!A  to  F!P -> A, as counit after F!g."""
    return m.lcomp(m.fbang_mor(g), m.counit(a))
