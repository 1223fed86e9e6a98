"""Finite sets and relations, with sets and functions on the persistent side."""
from __future__ import annotations

import numpy as np

from .base import DomainTooLarge, LMor, ModelInstance, Poset

MAX_CARRIER = 4


def rel(max_size=3):
    if not isinstance(max_size, int) or not 0 <= max_size <= MAX_CARRIER:
        raise ValueError(f"max_size must be an integer in 0..{MAX_CARRIER}")
    return ModelInstance("rel", q=None, max_elements=2 ** MAX_CARRIER, params={"max_size": max_size})


def relation(dom: Poset, cod: Poset, pairs):
    """Boolean matrix of a relation given as (source label, target label) pairs."""
    m = np.zeros((len(cod), len(dom)), dtype=np.uint8)
    for a, b in pairs:
        m[cod.index[b], dom.index[a]] = 1
    return LMor(dom, cod, m)


def pairs_of(r: LMor):
    return sorted((r.dom.labels[j], r.cod.labels[i]) for i, j in zip(*np.nonzero(r.m)))


def subset(carrier: Poset, members):
    return tuple(int(x in members) for x in carrier.labels)


def members(carrier: Poset, vec):
    return {x for x, b in zip(carrier.labels, vec) if b}


def rel_bang(r: LMor):
    """Direct image of r as a function between powersets."""
    for c in (r.dom, r.cod):
        if len(c) > MAX_CARRIER:
            raise DomainTooLarge(f"powerset of a {len(c)}-element carrier exceeds the guard")
    return rel().gbang_mor(r)


def rel_bang_m(a: Poset, b: Poset):
    """(X1, X2) -> X1 x X2."""
    return rel().gbang_m(a, b)
