"""Canonical enumeration of k-element subsets of {0,...,m-1}.

Two orderings are used by the matrix constructions: "lex-on-taken" sorts
subsets by the increasing sequence of taken indices (plain combination
order), while "lex-on-omitted" sorts by the increasing sequence of omitted
indices.  Ranking and unranking use the combinatorial number system.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import BadIndexError

LEX_ON_TAKEN = "lex-on-taken"
LEX_ON_OMITTED = "lex-on-omitted"


def _lex_rank(m: int, k: int, subset: tuple) -> int:
    rank = 0
    prev = 0
    for pos, c in enumerate(subset):
        for v in range(prev, c):
            rank += comb(m - 1 - v, k - pos - 1)
        prev = c + 1
    return rank


def _lex_unrank(m: int, k: int, rank: int) -> tuple:
    out = []
    v = 0
    for pos in range(k):
        while True:
            block = comb(m - 1 - v, k - pos - 1)
            if rank < block:
                break
            rank -= block
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


@dataclass(frozen=True)
class SubsetIndex:
    ground: int
    k: int
    mode: str = LEX_ON_TAKEN

    def __post_init__(self):
        if self.ground < 0 or not 0 <= self.k <= self.ground:
            raise BadIndexError(f"no {self.k}-subsets of a {self.ground}-set")
        if self.mode not in (LEX_ON_TAKEN, LEX_ON_OMITTED):
            raise BadIndexError(f"unknown subset ordering: {self.mode!r}")

    def __len__(self) -> int:
        return comb(self.ground, self.k)

    def _complement(self, subset: tuple) -> tuple:
        taken = set(subset)
        return tuple(i for i in range(self.ground) if i not in taken)

    def subsets(self):
        """All subsets, as increasing tuples, in this index's order."""
        if self.mode == LEX_ON_TAKEN:
            yield from combinations(range(self.ground), self.k)
        else:
            for omitted in combinations(range(self.ground), self.ground - self.k):
                yield self._complement(omitted)

    def _validate(self, subset: tuple) -> tuple:
        subset = tuple(subset)
        if len(subset) != self.k or any(
            not 0 <= c < self.ground for c in subset
        ) or any(a >= b for a, b in zip(subset, subset[1:])):
            raise BadIndexError(f"not a valid {self.k}-subset: {subset!r}")
        return subset

    def rank(self, subset) -> int:
        subset = self._validate(subset)
        if self.mode == LEX_ON_TAKEN:
            return _lex_rank(self.ground, self.k, subset)
        return _lex_rank(self.ground, self.ground - self.k, self._complement(subset))

    def unrank(self, rank: int) -> tuple:
        if not 0 <= rank < len(self):
            raise BadIndexError(f"rank {rank} out of range")
        if self.mode == LEX_ON_TAKEN:
            return _lex_unrank(self.ground, self.k, rank)
        return self._complement(_lex_unrank(self.ground, self.ground - self.k, rank))
