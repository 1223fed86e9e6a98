"""Finite-dimensional vector spaces over GF(q), with finite sets as the persistent side."""
from __future__ import annotations

import numpy as np

from .base import DomainTooLarge, ModelInstance, Poset, discrete, pfun

PRIMES = (2, 3, 5, 7)
MAX_DIM = 3


def finvect(q=2, max_dim=MAX_DIM):
    if q not in PRIMES:
        raise ValueError(f"modulus must be a prime <= 7, got {q!r}")
    if not isinstance(max_dim, int) or not 0 <= max_dim <= MAX_DIM:
        raise ValueError(f"max_dim must be an integer in 0..{MAX_DIM}")
    return ModelInstance("finvect", q=q, max_elements=q ** MAX_DIM,
                         params={"q": q, "max_dim": max_dim})


def _space(labels):
    return discrete(labels)


def fv_free(x: Poset, q=2):
    """The free space on a finite set: its basis is the set's labels."""
    if len(x) > MAX_DIM:
        raise DomainTooLarge(f"free space of dimension {len(x)} exceeds {MAX_DIM}")
    return _space(x.labels)


def fv_free_mor(f, q=2):
    return finvect(q).fbang_mor(f)


def fv_forget(v: Poset, q=2):
    """All q**dim vectors of v, in radix order."""
    if len(v) > MAX_DIM:
        raise DomainTooLarge(f"cannot list the vectors of a {len(v)}-dimensional space")
    return finvect(q).gbang(v)


def fv_forget_mor(f, q=2):
    return finvect(q).gbang_mor(f)


def fv_tensor_vectors(u, v, q=2):
    """The monoidal component of the forgetful functor on a pair of vectors."""
    return tuple(int(x) for x in np.kron(np.array(u), np.array(v)) % q)


def fv_gamma(v: Poset, q=2):
    """(evaluation row, coevaluation column) for the space v."""
    m = finvect(q)
    return m.gamma_bot(v), m.gamma_one(v)


def fv_snake(v: Poset, q=2):
    """lambda . (eval (x) id) . alpha . (id (x) coeval) compared against rho."""
    m = finvect(q)
    gb, g1 = m.gamma_bot(v), m.gamma_one(v)
    left = m.lcomp(m.ltensor(m.lid(v), g1), m.alpha_inv(v, m.neg(v), v),
                   m.ltensor(gb, m.lid(v)), m.lam(v))
    return left, m.rho(v)


def fv_adjunction(v: Poset, x: Poset, q=2):
    """Counit at the space v (a matrix) and unit at the set x (a function)."""
    m = finvect(q)
    return m.counit(v), m.unit_of(x)


def fv_basis_injection(x: Poset, q=2):
    return pfun(x, fv_forget(fv_free(x, q), q), lambda a: tuple(int(b == a) for b in x.labels))
