"""Shared machinery for the concrete models.

Every instance is built from finite posets:

* P-objects are posets and P-morphisms monotone functions (sets are discrete posets).
* C is the opposite of P: a C-morphism D -> E is stored as a P-morphism base(E) -> base(D).
  Instances choose how C-objects are presented (as sets, or as lattices of lower sets).
* L-objects are posets too; an L-morphism X -> Y is a matrix over the instance's
  semiring whose column x is the image of the generator x.  The identity of X has
  column x equal to the down-set of x, so for discrete posets it is the identity matrix.

Tensor and par are both the product of posets, negation reverses the order and
transposes matrices, and the additive connectives are the disjoint union.
"""
from __future__ import annotations

from itertools import product

import numpy as np


class DomainTooLarge(ValueError):
    """A construction would exceed the instance's size guard."""


class ModelError(ValueError):
    pass


# ---------------------------------------------------------------- posets

class Poset:
    __slots__ = ("labels", "le", "index", "_key")

    def __init__(self, labels, le=None):
        labels = tuple(labels)
        n = len(labels)
        if le is None:
            le = np.eye(n, dtype=bool)
        le = np.asarray(le, dtype=bool).reshape(n, n)
        self.labels = labels
        self.le = le
        self.index = {x: i for i, x in enumerate(labels)}
        if len(self.index) != n:
            raise ModelError("poset labels must be distinct")
        self._key = (labels, le.tobytes())

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, Poset) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Poset({len(self)})"

    @property
    def discrete(self):
        return bool((self.le == np.eye(len(self), dtype=bool)).all())

    def op(self):
        return Poset(self.labels, self.le.T)

    def down(self, i):
        return self.le[:, i]

    def is_lower(self, mask):
        mask = np.asarray(mask, dtype=bool)
        return not (self.le[:, mask].any(axis=1) & ~mask).any()

    def check(self):
        le = self.le
        n = len(self)
        ok = le.diagonal().all() and not (le & le.T & ~np.eye(n, dtype=bool)).any()
        trans = (le.astype(int) @ le.astype(int)) > 0
        return bool(ok and not (trans & ~le).any())


def point():
    return Poset([()])


def empty():
    return Poset([])


def discrete(labels):
    return Poset(labels)


def prod(a: Poset, b: Poset) -> Poset:
    return Poset([(x, y) for x in a.labels for y in b.labels], np.kron(a.le, b.le))


def disjoint(a: Poset, b: Poset) -> Poset:
    n, m = len(a), len(b)
    le = np.zeros((n + m, n + m), dtype=bool)
    le[:n, :n] = a.le
    le[n:, n:] = b.le
    return Poset([(0, x) for x in a.labels] + [(1, y) for y in b.labels], le)


def chain(n):
    return Poset(range(n), np.triu(np.ones((n, n), dtype=bool)))


def posets_up_to(n: int) -> list:
    """One representative of every poset with at most n elements, up to isomorphism."""
    out, seen = [], set()
    for size in range(n + 1):
        pairs = [(i, j) for i in range(size) for j in range(size) if i < j]
        for bits in product((0, 1), repeat=len(pairs)):
            le = np.eye(size, dtype=bool)
            for (i, j), b in zip(pairs, bits):
                le[i, j] = bool(b)
            p = Poset(range(size), le)
            if not p.check():
                continue
            canon = _canonical(le)
            if canon not in seen:
                seen.add(canon)
                out.append(p)
    return out


def _canonical(le):
    from itertools import permutations
    n = le.shape[0]
    return min(le[np.ix_(p, p)].tobytes() for p in permutations(range(n))) + bytes([n])


# ---------------------------------------------------------------- P: monotone maps

class PMor:
    __slots__ = ("dom", "cod", "table")

    def __init__(self, dom: Poset, cod: Poset, table):
        self.dom, self.cod, self.table = dom, cod, tuple(int(t) for t in table)
        if len(self.table) != len(dom):
            raise ModelError("function table does not cover the domain")

    def __eq__(self, other):
        return (isinstance(other, PMor) and self.dom == other.dom and self.cod == other.cod
                and self.table == other.table)

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"PMor{self.table}"

    def __call__(self, label):
        return self.cod.labels[self.table[self.dom.index[label]]]

    def monotone(self):
        t = np.array(self.table, dtype=int)
        if not len(t):
            return True
        return bool(self.cod.le[np.ix_(t, t)][self.dom.le].all())


def pfun(dom, cod, fn):
    """P-morphism from a function on labels."""
    try:
        return PMor(dom, cod, [cod.index[fn(x)] for x in dom.labels])
    except KeyError as e:
        raise ModelError(f"function leaves the codomain: {e}") from None


def pid(a):
    return PMor(a, a, range(len(a)))


def pcompose(*fs):
    """Diagrammatic composite: pcompose(f, g) is f then g."""
    out = fs[0]
    for g in fs[1:]:
        if out.cod != g.dom:
            raise ModelError("P-composite of mismatched morphisms")
        out = PMor(out.dom, g.cod, [g.table[i] for i in out.table])
    return out


def ptensor(f, g):
    dom, cod = prod(f.dom, g.dom), prod(f.cod, g.cod)
    m = len(g.cod)
    return PMor(dom, cod, [i * m + j for i in f.table for j in g.table])


def all_pmors(a, b):
    for t in product(range(len(b)), repeat=len(a)):
        f = PMor(a, b, t)
        if f.monotone():
            yield f


# ---------------------------------------------------------------- L: matrices

class Semiring:
    def __init__(self, q):
        self.q = q                      # None for booleans
        self.dtype = np.uint8 if q is None else np.int64

    def norm(self, m):
        m = np.asarray(m)
        if self.q is None:
            return (m != 0).astype(np.uint8)
        return (m.astype(np.int64) % self.q).astype(np.int64)

    def mul(self, a, b):
        if self.q is None:
            return ((a.astype(np.int64) @ b.astype(np.int64)) > 0).astype(np.uint8)
        return (a.astype(np.int64) @ b.astype(np.int64)) % self.q

    def kron(self, a, b):
        return self.norm(np.kron(a.astype(np.int64), b.astype(np.int64)))

    @property
    def size(self):
        return 2 if self.q is None else self.q


class LMor:
    __slots__ = ("dom", "cod", "m")

    def __init__(self, dom: Poset, cod: Poset, m):
        self.dom, self.cod = dom, cod
        self.m = np.asarray(m)
        if self.m.shape != (len(cod), len(dom)):
            raise ModelError(f"matrix shape {self.m.shape} does not match {len(cod)}x{len(dom)}")

    def __eq__(self, other):
        return (isinstance(other, LMor) and self.dom == other.dom and self.cod == other.cod
                and np.array_equal(self.m, other.m))

    def __hash__(self):
        return hash(self.m.tobytes())

    def __repr__(self):
        return f"LMor({len(self.dom)}->{len(self.cod)})"


# ---------------------------------------------------------------- C: opposite of P

class CObj:
    """A C-object is determined by its base poset; `lattice` marks the lower-set presentation."""
    __slots__ = ("base", "lattice")

    def __init__(self, base: Poset, lattice: bool):
        self.base, self.lattice = base, lattice

    def __eq__(self, other):
        return isinstance(other, CObj) and self.base == other.base and self.lattice == other.lattice

    def __hash__(self):
        return hash(self.base)

    def __repr__(self):
        return f"CObj({len(self.base)}{', lattice' if self.lattice else ''})"


class CMor:
    __slots__ = ("dom", "cod", "pmap")

    def __init__(self, dom: CObj, cod: CObj, pmap: PMor):
        if pmap.dom != cod.base or pmap.cod != dom.base:
            raise ModelError("C-morphism must be carried by a P-map between the bases, reversed")
        self.dom, self.cod, self.pmap = dom, cod, pmap

    def __eq__(self, other):
        return isinstance(other, CMor) and self.dom == other.dom and self.cod == other.cod \
            and self.pmap == other.pmap

    def __hash__(self):
        return hash(self.pmap)

    def __repr__(self):
        return f"CMor({self.pmap.table})"


# ---------------------------------------------------------------- labels of folded contexts

def fold_labels(parts):
    """Label of a left-nested product of the given leaf labels; () for no leaves."""
    if not parts:
        return ()
    out = parts[0]
    for p in parts[1:]:
        out = (out, p)
    return out


def unfold_labels(label, n):
    if n == 0:
        return []
    out = []
    for _ in range(n - 1):
        label, last = label
        out.append(last)
    out.append(label)
    return out[::-1]


# ---------------------------------------------------------------- instances

class ModelInstance:
    """One concrete model: the three categories, the functors between them and their structure.

    Instances differ only in the semiring, in whether G! orders its elements by
    inclusion, in how C-objects are presented, and in their size guard.
    """

    def __init__(self, name, q=None, ordered=False, lattice=False, max_elements=16, params=None):
        self.name = name
        self.ring = Semiring(q)
        self.ordered = ordered
        self.lattice = lattice
        self.max_elements = max_elements
        self.params = dict(params or {})
        self._gbang = {}

    def __repr__(self):
        return f"<model {self.name} {self.params}>"

    def guard(self, n, what):
        if n > self.max_elements:
            raise DomainTooLarge(f"{self.name}: {what} would have {n} elements (limit {self.max_elements})")

    # -------------------------------------------------------- L
    def lmor(self, dom, cod, m):
        return LMor(dom, cod, self.ring.norm(m))

    def lid(self, a):
        return LMor(a, a, a.le.astype(self.ring.dtype))

    def lmap(self, dom, cod, fn):
        """The L-morphism induced by a monotone function on labels (columns are down-sets)."""
        cols = [cod.index[fn(x)] for x in dom.labels]
        m = cod.le[:, cols] if cols else np.zeros((len(cod), 0), dtype=bool)
        return LMor(dom, cod, m.astype(self.ring.dtype))

    def lcomp(self, *fs):
        """Diagrammatic composite in L."""
        out = fs[0]
        for g in fs[1:]:
            if out.cod != g.dom:
                raise ModelError(f"L-composite of mismatched morphisms {out} ; {g}")
            out = LMor(out.dom, g.cod, self.ring.mul(g.m, out.m))
        return out

    def ltensor(self, f, g):
        return LMor(prod(f.dom, g.dom), prod(f.cod, g.cod), self.ring.kron(f.m, g.m))

    lpar = ltensor

    def lvalid(self, f):
        """Columns are down-sets and grow along the order of the domain."""
        if self.ring.q is not None:
            return True
        m = f.m.astype(bool)
        if not all(f.cod.is_lower(m[:, j]) for j in range(m.shape[1])):
            return False
        for i, j in zip(*np.nonzero(f.dom.le)):
            if (m[:, i] & ~m[:, j]).any():
                return False
        return True

    def neg(self, a):
        return a.op()

    def neg_mor(self, f):
        return LMor(f.cod.op(), f.dom.op(), f.m.T.copy())

    def unit(self):
        return point()

    def alpha(self, a, b, c):
        return self.lmap(prod(prod(a, b), c), prod(a, prod(b, c)), lambda t: (t[0][0], (t[0][1], t[1])))

    def alpha_inv(self, a, b, c):
        return self.lmap(prod(a, prod(b, c)), prod(prod(a, b), c), lambda t: ((t[0], t[1][0]), t[1][1]))

    def lam(self, a):
        return self.lmap(prod(point(), a), a, lambda t: t[1])

    def lam_inv(self, a):
        return self.lmap(a, prod(point(), a), lambda x: ((), x))

    def rho(self, a):
        return self.lmap(prod(a, point()), a, lambda t: t[0])

    def rho_inv(self, a):
        return self.lmap(a, prod(a, point()), lambda x: (x, ()))

    def sym(self, a, b):
        return self.lmap(prod(a, b), prod(b, a), lambda t: (t[1], t[0]))

    def delta(self, a, b, c):
        """Linear distributivity A (x) (B par C) -> (A (x) B) par C."""
        return self.alpha_inv(a, b, c)

    def gamma_bot(self, a):
        """Evaluation A (x) A^bot -> bot."""
        na = self.neg(a)
        dom = prod(a, na)
        m = np.array([[1 if a.le[na.index[y], a.index[x]] else 0 for x, y in dom.labels]])
        return LMor(dom, point(), m.astype(self.ring.dtype).reshape(1, len(dom)))

    def gamma_one(self, a):
        """Coevaluation 1 -> A^bot par A."""
        na = self.neg(a)
        cod = prod(na, a)
        col = np.array([1 if a.le[a.index[y], a.index[x]] else 0 for x, y in cod.labels])
        return LMor(point(), cod, col.astype(self.ring.dtype).reshape(len(cod), 1))

    def sum(self, a, b):
        return disjoint(a, b)

    def inj(self, a, b, i):
        return self.lmap(a if i == 0 else b, disjoint(a, b), lambda x: (i, x))

    def proj(self, a, b, i):
        s = disjoint(a, b)
        target = a if i == 0 else b
        m = np.zeros((len(target), len(s)), dtype=self.ring.dtype)
        off = 0 if i == 0 else len(a)
        m[:, off:off + len(target)] = target.le
        return LMor(s, target, m)

    def pair(self, f, g):
        if f.dom != g.dom:
            raise ModelError("pairing needs a common domain")
        return LMor(f.dom, disjoint(f.cod, g.cod), np.vstack([f.m, g.m]))

    def copair(self, f, g):
        if f.cod != g.cod:
            raise ModelError("copairing needs a common codomain")
        return LMor(disjoint(f.dom, g.dom), f.cod, np.hstack([f.m, g.m]))

    def to_terminal(self, a, cod):
        if len(cod):
            raise ModelError("target is not terminal")
        return LMor(a, cod, np.zeros((0, len(a)), dtype=self.ring.dtype))

    def from_initial(self, dom, b):
        if len(dom):
            raise ModelError("source is not initial")
        return LMor(dom, b, np.zeros((len(b), 0), dtype=self.ring.dtype))

    def relabel(self, dom, cod, fn):
        """Structural isomorphism given by a bijection of labels."""
        return self.lmap(dom, cod, fn)

    # -------------------------------------------------------- P
    def pdiag(self, p):
        return pfun(p, prod(p, p), lambda x: (x, x))

    def perase(self, p):
        return pfun(p, point(), lambda x: ())

    def palpha(self, a, b, c):
        return pfun(prod(prod(a, b), c), prod(a, prod(b, c)), lambda t: (t[0][0], (t[0][1], t[1])))

    def plam(self, a):
        return pfun(prod(point(), a), a, lambda t: t[1])

    def prho(self, a):
        return pfun(prod(a, point()), a, lambda t: t[0])

    def psym(self, a, b):
        return pfun(prod(a, b), prod(b, a), lambda t: (t[1], t[0]))

    # -------------------------------------------------------- C, the opposite of P
    def cobj(self, base):
        return CObj(base, self.lattice)

    def cid(self, c):
        return CMor(c, c, pid(c.base))

    def ccomp(self, *hs):
        out = hs[0]
        for h in hs[1:]:
            if out.cod != h.dom:
                raise ModelError("C-composite of mismatched morphisms")
            out = CMor(out.dom, h.cod, pcompose(h.pmap, out.pmap))
        return out

    def cunit(self):
        return self.cobj(point())

    def ctensor_obj(self, c, d):
        return self.cobj(prod(c.base, d.base))

    def ctensor(self, h, k):
        return CMor(self.ctensor_obj(h.dom, k.dom), self.ctensor_obj(h.cod, k.cod),
                    ptensor(h.pmap, k.pmap))

    def _cfrom(self, dom, cod, fn):
        return CMor(dom, cod, pfun(cod.base, dom.base, fn))

    def calpha(self, c, d, e):
        dom = self.ctensor_obj(self.ctensor_obj(c, d), e)
        cod = self.ctensor_obj(c, self.ctensor_obj(d, e))
        return self._cfrom(dom, cod, lambda t: ((t[0], t[1][0]), t[1][1]))

    def clam(self, c):
        return self._cfrom(self.ctensor_obj(self.cunit(), c), c, lambda x: ((), x))

    def crho(self, c):
        return self._cfrom(self.ctensor_obj(c, self.cunit()), c, lambda x: (x, ()))

    def csym(self, c, d):
        return self._cfrom(self.ctensor_obj(c, d), self.ctensor_obj(d, c), lambda t: (t[1], t[0]))

    def cmult(self, c):
        return self._cfrom(self.ctensor_obj(c, c), c, lambda x: (x, x))

    def cone(self, c):
        return self._cfrom(self.cunit(), c, lambda x: ())

    # dualities between P and C
    def up(self, p):
        """P -> C on objects."""
        return self.cobj(p)

    def up_mor(self, f):
        return CMor(self.up(f.cod), self.up(f.dom), f)

    def down(self, c):
        """C -> P on objects."""
        return c.base

    def down_mor(self, h):
        return h.pmap

    # -------------------------------------------------------- F! and G!
    def fbang(self, p):
        return p

    def fbang_mor(self, f):
        return self.lmap(f.dom, f.cod, f)

    def fbang_m(self, p, q):
        """F!P (x) F!Q -> F!(P (x) Q)."""
        return self.lid(prod(p, q))

    def fbang_n(self, p, q):
        return self.lid(prod(p, q))

    def fbang_m1(self):
        return self.lid(point())

    def fbang_n1(self):
        return self.lid(point())

    def elements(self, a):
        """Labels of G!A: the global elements 1 -> A, as coefficient tuples."""
        if a in self._gbang:
            return self._gbang[a]
        n = len(a)
        self.guard(self.ring.size ** n if n <= 64 else float("inf"), f"G!({n})")
        out = []
        for v in product(range(self.ring.size), repeat=n):
            if self.ring.q is None and not a.is_lower(np.array(v, dtype=bool)):
                continue
            out.append(v)
        self.guard(len(out), f"G!({n})")
        if self.ordered:
            vs = np.array(out, dtype=bool).reshape(len(out), n)
            le = (vs[:, None, :] <= vs[None, :, :]).all(axis=2)
        else:
            le = None
        res = Poset(out, le)
        self._gbang[a] = res
        return res

    def gbang(self, a):
        return self.elements(a)

    def gbang_mor(self, f):
        dom, cod = self.gbang(f.dom), self.gbang(f.cod)
        img = self.ring.mul(f.m, np.array(dom.labels, dtype=np.int64).reshape(len(dom), len(f.dom)).T)
        return PMor(dom, cod, [cod.index[tuple(int(v) for v in img[:, j])] for j in range(len(dom))])

    def gbang_m(self, a, b):
        """G!A (x) G!B -> G!(A (x) B)."""
        dom = prod(self.gbang(a), self.gbang(b))
        cod = self.gbang(prod(a, b))
        return pfun(dom, cod, lambda t: tuple(int(v) for v in self.ring.kron(
            np.array(t[0], dtype=np.int64), np.array(t[1], dtype=np.int64))))

    def gbang_m1(self):
        return pfun(point(), self.gbang(point()), lambda x: (1,))

    def counit(self, a):
        """F!G!A -> A."""
        g = self.gbang(a)
        m = np.array(g.labels, dtype=np.int64).reshape(len(g), len(a)).T
        return LMor(self.fbang(g), a, m.astype(self.ring.dtype))

    def unit_of(self, p):
        """P -> G!F!P."""
        cod = self.gbang(self.fbang(p))
        return PMor(p, cod, [cod.index[tuple(int(v) for v in p.le[:, i])] for i in range(len(p))])

    # -------------------------------------------------------- F? and G?, obtained through the dualities
    def fwhy(self, c):
        return self.neg(self.fbang(self.down(c)))

    def fwhy_mor(self, h):
        return self.neg_mor(self.fbang_mor(self.down_mor(h)))

    def fwhy_m(self, c, d):
        """F?C par F?D -> F?(C par D)."""
        return self.lid(self.fwhy(self.ctensor_obj(c, d)))

    def fwhy_n(self, c, d):
        return self.lid(self.fwhy(self.ctensor_obj(c, d)))

    def fwhy_m1(self):
        return self.lid(point())

    def fwhy_n1(self):
        return self.lid(point())

    def gwhy(self, a):
        return self.up(self.gbang(self.neg(a)))

    def gwhy_mor(self, f):
        return self.up_mor(self.gbang_mor(self.neg_mor(f)))

    def gwhy_n(self, a, b):
        """G?(A par B) -> G?A par G?B in C."""
        return self.up_mor(self.gbang_m(self.neg(a), self.neg(b)))

    def gwhy_n1(self):
        return self.up_mor(self.gbang_m1())

    def why_unit(self, a):
        """A -> F?G?A."""
        return self.neg_mor(self.counit(self.neg(a)))

    def why_counit(self, c):
        """G?F?C -> C in C."""
        return CMor(self.gwhy(self.fwhy(c)), c, self.unit_of(self.down(c)))
