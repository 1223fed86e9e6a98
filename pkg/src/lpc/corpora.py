"""Derivation collections used by the test suites and the report tools."""
from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from .cutelim import pair_cuts
from .kernel import parse_derivations
from .search import SearchBudget, enumerate_provable

PROOFS = Path(__file__).resolve().parents[2] / "proofs"


@lru_cache(maxsize=None)
def searched(size: int = 4, depth: int = 5, contractions: int = 1, nodes: int = 2000) -> tuple:
    """Proofs of every sequent up to `size` that bounded search finds."""
    return tuple(d for _, d in enumerate_provable(size, SearchBudget(depth, contractions, nodes)))


def shipped(directory=PROOFS) -> dict:
    """file name -> derivations, for every .lpc file in the directory."""
    out = {}
    for path in sorted(Path(directory).glob("*.lpc")):
        out[path.name] = parse_derivations(path.read_text(encoding="utf-8"))
    return out


def cut_free_parts(derivations):
    """The derivations themselves when cut-free, else their maximal cut-free subderivations."""
    out = []
    stack = list(reversed(derivations))
    while stack:
        d = stack.pop()
        if d.has_cut():
            stack.extend(reversed(d.premises))
        else:
            out.append(d)
    return list(dict.fromkeys(out))


@lru_cache(maxsize=None)
def cut_instances(per_rule: int = 40) -> tuple:
    """Cuts pairing shipped and searched proofs, per_rule of each cut rule in two orders.

    The shipped proofs first gives the structural cases; the deepest searched
    proofs first gives longer commutation chains.
    """
    found = sorted(searched(4, 6, 2), key=lambda d: (-d.depth, d.conclusion.key))
    mine = cut_free_parts([d for ds in shipped().values() for d in ds])
    first = pair_cuts(mine + [d for d in found if d not in set(mine)], per_rule)
    second = pair_cuts(found, per_rule)
    return tuple(dict.fromkeys(first + second))
