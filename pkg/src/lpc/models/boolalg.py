"""Lattices of lower sets over finite posets, related to distributive lattices by Birkhoff duality.

The linear objects are presented by posets X standing for the lattice of lower sets of X;
for a discrete X that is the powerset algebra on X.  Linear morphisms are the maps that
preserve joins, stored by their values on the principal lower sets.
"""
from __future__ import annotations

from functools import lru_cache

from itertools import product

import numpy as np

from .base import (
    DomainTooLarge, LMor, ModelError, ModelInstance, PMor, Poset, pfun, prod,
)

MAX_POSET = 4
MAX_LATTICE = 16


def boolalg(max_poset=3):
    if not isinstance(max_poset, int) or not 0 <= max_poset <= MAX_POSET:
        raise ValueError(f"max_poset must be an integer in 0..{MAX_POSET}")
    return ModelInstance("boolalg", q=None, ordered=True, lattice=True, max_elements=MAX_LATTICE,
                         params={"max_poset": max_poset})


class Lattice:
    """A finite lattice given by its carrier and order; joins and meets are tabulated."""

    def __init__(self, labels, le):
        self.poset = Poset(labels, le)
        n = len(self.poset)
        le = self.poset.le
        self.join = np.full((n, n), -1, dtype=int)
        self.meet = np.full((n, n), -1, dtype=int)
        for i in range(n):
            for j in range(n):
                ups = [k for k in range(n) if le[i, k] and le[j, k]]
                downs = [k for k in range(n) if le[k, i] and le[k, j]]
                lub = [k for k in ups if all(le[k, u] for u in ups)]
                glb = [k for k in downs if all(le[d, k] for d in downs)]
                if len(lub) != 1 or len(glb) != 1:
                    raise ModelError("order is not a lattice")
                self.join[i, j], self.meet[i, j] = lub[0], glb[0]
        self.bot = next(i for i in range(n) if le[i].all())
        self.top = next(i for i in range(n) if le[:, i].all())

    @property
    def labels(self):
        return self.poset.labels

    def __len__(self):
        return len(self.poset)

    def distributive(self):
        n = len(self)
        j, m = self.join, self.meet
        return all(m[a, j[b, c]] == j[m[a, b], m[a, c]]
                   for a in range(n) for b in range(n) for c in range(n))


def ba_lower(p: Poset) -> Lattice:
    """Lower sets of p, ordered by inclusion (join is union, meet is intersection)."""
    if len(p) > MAX_POSET:
        raise DomainTooLarge(f"poset with {len(p)} elements exceeds {MAX_POSET}")
    sets = [v for v in product((0, 1), repeat=len(p)) if p.is_lower(np.array(v, dtype=bool))]
    vs = np.array(sets, dtype=bool).reshape(len(sets), len(p))
    le = (vs[:, None, :] <= vs[None, :, :]).all(axis=2)
    return Lattice(sets, le)


def join_irreducibles(lat: Lattice) -> list:
    """Indices of elements that are not bottom and not the join of two strictly smaller ones."""
    le = lat.poset.le
    n = len(lat)
    out = []
    for x in range(n):
        if x == lat.bot:
            continue
        below = [y for y in range(n) if le[y, x] and y != x]
        if not any(lat.join[a, b] == x for a in below for b in below):
            out.append(x)
    return out


def ba_joinirr(lat: Lattice) -> Poset:
    if len(lat) > MAX_LATTICE:
        raise DomainTooLarge(f"lattice with {len(lat)} elements exceeds {MAX_LATTICE}")
    js = join_irreducibles(lat)
    return Poset([lat.labels[j] for j in js], lat.poset.le[np.ix_(js, js)])


def birkhoff_point(p: Poset):
    """p -> joinirr(lower(p)), x -> down-set of x."""
    ji = ba_joinirr(ba_lower(p))
    return pfun(p, ji, lambda x: tuple(int(b) for b in p.le[:, p.index[x]]))


def birkhoff_lattice(lat: Lattice) -> dict:
    """lat -> lower(joinirr(lat)), l -> the join-irreducibles below l, as an index map."""
    ji = ba_joinirr(lat)
    low = ba_lower_unguarded(ji)
    le = lat.poset.le
    js = [lat.poset.index[x] for x in ji.labels]
    return {i: low.poset.index[tuple(int(le[j, i]) for j in js)] for i in range(len(lat))}


def lattice_iso(a: Lattice, b: Lattice, f: dict) -> bool:
    n = len(a)
    if len(b) != n or sorted(f.values()) != list(range(n)):
        return False
    return all(b.join[f[x], f[y]] == f[a.join[x, y]] and b.meet[f[x], f[y]] == f[a.meet[x, y]]
               for x in range(n) for y in range(n))


def is_lattice_hom(a: Lattice, b: Lattice, f: dict, bounded=True) -> bool:
    n = len(a)
    ok = all(b.join[f[x], f[y]] == f[a.join[x, y]] and b.meet[f[x], f[y]] == f[a.meet[x, y]]
             for x in range(n) for y in range(n))
    if bounded:
        ok = ok and f[a.bot] == b.bot and f[a.top] == b.top
    return ok


def distributive_lattices(max_size=8) -> list:
    """Every distributive lattice with at most max_size elements, once per shape, presented abstractly.

    Built from posets whose lower-set lattice is small enough, grown one maximal element at a time.
    """
    return list(_distributive_lattices(max_size))


@lru_cache(maxsize=None)
def _distributive_lattices(max_size):
    out, seen = [], set()

    def grow(p):
        lat = ba_lower_unguarded(p)
        if len(lat) > max_size:
            return
        shape = _lattice_shape(lat)
        if shape not in seen:
            seen.add(shape)
            out.append(_abstract(lat))
        n = len(p)
        for v in _lower_vectors(p):
            le = np.zeros((n + 1, n + 1), dtype=bool)
            le[:n, :n] = p.le
            le[n, n] = True
            below = np.array(v, dtype=bool)
            le[:n, n] = below
            grow(Poset(range(n + 1), le))

    grow(Poset([]))
    return tuple(out)


def ba_lower_unguarded(p):
    # for structural checks on lattices bigger than any model object
    sets = _lower_vectors(p)
    vs = np.array(sets, dtype=bool).reshape(len(sets), len(p))
    le = (vs[:, None, :] <= vs[None, :, :]).all(axis=2)
    return Lattice(sets, le)


def _lower_vectors(p):
    return [v for v in product((0, 1), repeat=len(p)) if p.is_lower(np.array(v, dtype=bool))]


def _lattice_shape(lat):
    from itertools import permutations
    le = lat.poset.le
    n = len(lat)
    if n > 8:
        raise DomainTooLarge("shape test limited to 8 elements")
    return min(le[np.ix_(q, q)].tobytes() for q in permutations(range(n))) + bytes([n])


def _abstract(lat):
    """The same lattice with plain integer labels in a scrambled order."""
    n = len(lat)
    perm = list(range(n))[::-1]
    le = lat.poset.le[np.ix_(perm, perm)]
    return Lattice(range(n), le)


# ---------------------------------------------------------------- free algebras and the adjunction

def ba_powerset_algebra(p) -> Poset:
    """The linear object presenting the lattice of lower sets of p (the powerset algebra when p is discrete)."""
    if isinstance(p, Lattice):
        p = p.poset
    if len(p) > MAX_POSET:
        raise DomainTooLarge(f"carrier with {len(p)} elements exceeds {MAX_POSET}")
    return p


def ba_hom_image(f: PMor) -> LMor:
    """F! on a monotone map: a lower set goes to the down-closure of its image."""
    return boolalg().fbang_mor(f)


def ba_apply(f: LMor, vec):
    """Apply a join-preserving map to a lower set of its domain (as an indicator tuple)."""
    m = f.m.astype(bool)
    cols = [j for j, b in enumerate(vec) if b]
    out = m[:, cols].any(axis=1) if cols else np.zeros(len(f.cod), dtype=bool)
    return tuple(int(b) for b in out)


def ba_sharp(f: LMor) -> PMor:
    """Transpose of f : F!P -> A across the adjunction: x -> f(down-set of x)."""
    m = boolalg()
    if not m.lvalid(f):
        raise ModelError("not a join-preserving map between lower-set lattices")
    p = f.dom
    g = m.gbang(f.cod)
    return PMor(p, g, [g.index[ba_apply(f, tuple(int(b) for b in p.le[:, i]))] for i in range(len(p))])


def ba_flat(g: PMor, a: Poset) -> LMor:
    """Transpose of a monotone g : P -> G!A: a lower set X goes to the union of g(x) for x in X."""
    if not g.monotone():
        raise ModelError("not an order-preserving map")
    if g.cod != boolalg().gbang(a):
        raise ModelError("g does not land in the elements of the target algebra")
    m = np.array([g(x) for x in g.dom.labels], dtype=np.uint8).reshape(len(g.dom), len(a)).T
    return LMor(g.dom, a, m)


def ba_counit(a: Poset) -> LMor:
    """F!G!A -> A: a set of elements goes to its join."""
    return boolalg().counit(a)


def ba_unit(p: Poset) -> PMor:
    """P -> G!F!P: x goes to its down-set."""
    return boolalg().unit_of(p)


def materialize(h, model=None) -> dict:
    """The lattice homomorphism carried by a C-morphism: lower sets pulled back along its map."""
    dom, cod = ba_lower_unguarded(h.dom.base), ba_lower_unguarded(h.cod.base)
    f = h.pmap                       # base(cod) -> base(dom)
    out = {}
    for i, s in enumerate(dom.labels):
        pulled = tuple(int(s[f.table[k]]) for k in range(len(f.dom)))
        out[i] = cod.poset.index[pulled]
    return out
