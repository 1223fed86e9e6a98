"""Denotation stability over a cut corpus.

Two numbers per corpus.  The first compares the denotation of each cut-free
result with that of eliminating again, which must agree exactly because
elimination leaves cut-free proofs alone.  The second compares it with the
denotation of an independent proof of the same sequent found by search; no
agreement is promised there, so it is reported and never gated.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cutelim import eliminate_all
from .search import EXHAUSTED, SearchBudget, search
from .semantics import interp_derivation


@dataclass
class StabilityReport:
    model: str
    instances: int
    idempotent: int
    searched: int
    shared: int

    @property
    def idempotent_fraction(self):
        return self.idempotent / self.instances if self.instances else 1.0

    @property
    def shared_fraction(self):
        return self.shared / self.searched if self.searched else 0.0

    def lines(self):
        return [
            f"model\t{self.model}",
            f"instances\t{self.instances}",
            f"re-eliminated equal\t{self.idempotent}/{self.instances}\t{self.idempotent_fraction:.4f}",
            f"independent proof found\t{self.searched}/{self.instances}",
            f"independent proof shares denotation\t{self.shared}/{self.searched}\t{self.shared_fraction:.4f}",
        ]


def stability(cuts, model, budget=SearchBudget(8, 1, 5000)) -> StabilityReport:
    idem = found = shared = 0
    for d in cuts:
        once = eliminate_all(d)
        sem = interp_derivation(once, model)
        idem += sem == interp_derivation(eliminate_all(once), model)
        other = search(once.conclusion, budget)
        if other != EXHAUSTED:
            found += 1
            shared += sem == interp_derivation(other, model)
    return StabilityReport(model.name, len(cuts), idem, found, shared)
