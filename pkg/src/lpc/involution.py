"""Exhaustive check that dual is an involution that flips modes, to depth 4.

Every proposition of height at most base is built as a Prop and indexed.  A
proposition one level higher is then a constructor applied to such indices, so
the full next level is scanned without allocating it.  The constructor clause
of dual is read off the real implementation, and a seeded sample of encoded
terms is rebuilt as Props and compared against it.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass

import numpy as np

from .syntax import GRAMMAR, Mode, Prop, count_props, dual, enumerate_props

try:
    if os.environ.get("LPC_PURE"):
        raise ImportError
    from . import _kernels as _native
except ImportError:
    _native = None

MODES = (Mode.L, Mode.P, Mode.C)
MODE_ID = {m: i for i, m in enumerate(MODES)}
FLIP = {Mode.L: Mode.L, Mode.P: Mode.C, Mode.C: Mode.P}


def backend() -> str:
    return "compiled" if _native is not None else "numpy"


@dataclass
class InvolutionResult:
    depth: int
    counts: dict
    total: int
    violations: int
    sampled: int
    sample_mismatches: int
    backend: str
    seconds: float

    @property
    def ok(self):
        return self.violations == 0 and self.sample_mismatches == 0


class Table:
    """All propositions up to a height, indexed with L first, then P, then C."""

    def __init__(self, height):
        by_mode = enumerate_props(height)
        self.props = [x for m in MODES for x in by_mode[m]]
        self.index = {x: i for i, x in enumerate(self.props)}
        self.mode = np.array([MODE_ID[x.mode] for x in self.props], dtype=np.int8)
        self.dual = np.array([self.index[dual(x)] for x in self.props], dtype=np.int32)
        self.pool = {m: np.array([self.index[x] for x in by_mode[m]], dtype=np.int32) for m in MODES}


def dual_clause(tag):
    """(image tag, child permutation) of dual at a constructor, observed on distinct children."""
    _, kid_modes, _ = GRAMMAR[tag]
    kids = []
    for m in kid_modes:
        pool = [x for x in enumerate_props(2)[m] if x not in kids]
        kids.append(pool[len(kids)])
    image = dual(Prop(tag, *kids))
    perm = tuple([dual(k) for k in kids].index(a) for a in image.args)
    return image.tag, perm


# ---------------------------------------------------------------- numpy fallback, one row at a time

def _np_unary(pool, dual_, mode, kid_mode):
    da = dual_[pool]
    bad = (dual_[da] != pool) | (mode[da] != kid_mode)
    hits = np.flatnonzero(bad)
    return int(bad.sum()), int(hits[0]) if len(hits) else -1


def _np_binary(left, right, dual_, mode, left_mode, right_mode):
    db = dual_[right]
    right_bad = (dual_[db] != right) | (mode[db] != right_mode)
    bad, first = 0, -1
    for i, a in enumerate(left):
        da = dual_[a]
        row = right_bad | (dual_[da] != a) | (mode[da] != left_mode)
        n = int(row.sum())
        if n and first < 0:
            first = i * len(right) + int(np.flatnonzero(row)[0])
        bad += n
    return bad, first


def _scans(use_native):
    if use_native:
        return _native.scan_unary, _native.scan_binary
    return _np_unary, _np_binary


def check_involution(depth: int = 4, samples: int = 20000, seed: int = 0, native: bool | None = None):
    """Scan every proposition of height <= depth; depths up to 3 are checked directly on Props."""
    if depth < 1 or depth > 4:
        raise ValueError("depth must be between 1 and 4")
    use_native = _native is not None if native is None else native
    if use_native and _native is None:
        raise RuntimeError("compiled kernels are not built")
    started = time.perf_counter()
    if depth <= 3:
        by_mode = enumerate_props(depth)
        bad = sum(1 for m in MODES for x in by_mode[m]
                  if dual(dual(x)) != x or dual(x).mode is not FLIP[m])
        counts = {m.name: len(by_mode[m]) for m in MODES}
        return InvolutionResult(depth, counts, sum(counts.values()), bad, 0, 0,
                                "direct", time.perf_counter() - started)
    table = Table(depth - 1)
    unary, binary = _scans(use_native)
    counts = {m.name: 0 for m in MODES}
    bad = 0
    for tag, (mode, kid_modes, _) in GRAMMAR.items():
        image, perm = dual_clause(tag)
        image_mode, image_kids, _ = GRAMMAR[image]
        if image_mode is not FLIP[mode]:
            # a mode-flip failure at the constructor fails every term it builds
            bad += int(np.prod([len(table.pool[m]) for m in kid_modes]))
        if not kid_modes:
            counts[mode.name] += 1
            bad += int(dual(dual(Prop(tag))) != Prop(tag))
            continue
        # child k of the image is the dual of child perm[k]; the scan checks each child's image mode
        want = [MODE_ID[image_kids[perm.index(k)]] for k in range(len(kid_modes))]
        pools = [table.pool[m] for m in kid_modes]
        if len(kid_modes) == 1:
            n, _ = unary(pools[0], table.dual, table.mode, want[0])
        else:
            n, _ = binary(pools[0], pools[1], table.dual, table.mode, want[0], want[1])
        counts[mode.name] += int(np.prod([len(p) for p in pools]))
        bad += n
    mismatches = _sample_against_props(table, samples, seed)
    expected = count_props(depth)
    assert counts == {m.name: expected[m] for m in MODES}
    return InvolutionResult(depth, counts, sum(counts.values()), bad, samples, mismatches,
                            "compiled" if use_native else "numpy", time.perf_counter() - started)


def _sample_against_props(table, samples, seed):
    """Rebuild random encoded terms as Props and compare the encoded dual with the real one."""
    rng = np.random.default_rng(seed)
    tags = [t for t, (_, kids, _) in GRAMMAR.items() if kids]
    clauses = {t: dual_clause(t) for t in tags}
    bad = 0
    for _ in range(samples):
        tag = tags[rng.integers(len(tags))]
        kids = [int(table.pool[m][rng.integers(len(table.pool[m]))]) for m in GRAMMAR[tag][1]]
        x = Prop(tag, *(table.props[k] for k in kids))
        image_tag, perm = clauses[tag]
        encoded = Prop(image_tag, *(table.props[table.dual[kids[p]]] for p in perm))
        real = dual(x)
        if real != encoded or dual(real) != x or real.mode is not FLIP[x.mode]:
            bad += 1
    return bad
