"""
Backtrack searches over a stabilizer chain: conjugating elements,
centralizers and normalizers.

The chain is rebased so that its base lists the cycles of x, longest first.
A base point that continues a cycle of x has a forced image, since
g(x^k(b)) = y^k(g(b)) for any g with x^g = y. A base point that opens a
cycle may only go to a point on a y-cycle of the same length.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from configs.settings import DEFAULT_BUDGET, ENUMERATION_LIMIT
from src.errors import ResourceLimitError
from src.permgrp.permutation import Permutation
from src.permgrp.stabilizer_chain import StabilizerChain, build_chain, trivial_chain

logger = logging.getLogger(__name__)


@dataclass
class SearchBudget:
    """Node budget shared by one search; exhaustion raises ResourceLimitError."""

    limit: int
    where: str = "backtrack"
    used: int = 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise ResourceLimitError(self.where, self.limit, self.used)


BudgetLike = Union[int, SearchBudget, None]


def as_budget(budget: BudgetLike, where: str) -> SearchBudget:
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(limit=DEFAULT_BUDGET if budget is None else budget, where=where)


def _cycles_with_fixed(p: Permutation) -> List[Tuple[int, ...]]:
    cycles = p.cycles()
    moved = {i for c in cycles for i in c}
    return cycles + [(i,) for i in range(p.degree) if i not in moved]


def cycle_base_prefix(x: Permutation) -> List[int]:
    """Points of x cycle by cycle, longest cycles first."""
    cycles = sorted(_cycles_with_fixed(x), key=lambda c: (-len(c), c[0]))
    return [i for c in cycles for i in c]


class _CycleIndex:
    def __init__(self, p: Permutation):
        self.cycles = _cycles_with_fixed(p)
        self.cycle_of: List[int] = [0] * p.degree
        self.position: List[int] = [0] * p.degree
        for ci, c in enumerate(self.cycles):
            for k, i in enumerate(c):
                self.cycle_of[i] = ci
                self.position[i] = k

    def length(self, i: int) -> int:
        return len(self.cycles[self.cycle_of[i]])

    def power(self, i: int, k: int) -> int:
        c = self.cycles[self.cycle_of[i]]
        return c[(self.position[i] + k) % len(c)]


class _ConjugatorSearch:
    def __init__(self, chain: StabilizerChain, x: Permutation, y: Permutation, budget: SearchBudget):
        self.chain = chain.with_base_prefix(cycle_base_prefix(x))
        self.x = x
        self.y = y
        self.budget = budget
        self.base = self.chain.base

        xi = _CycleIndex(x)
        self.yi = _CycleIndex(y)
        self.lengths = [xi.length(b) for b in self.base]
        # rel[l] = (j, k): base[l] = x^k(base[j]) for an earlier base point
        self.rel: List[Optional[Tuple[int, int]]] = []
        first_seen: Dict[int, int] = {}
        for level, b in enumerate(self.base):
            ci = xi.cycle_of[b]
            if ci in first_seen:
                j = first_seen[ci]
                k = (xi.position[b] - xi.position[self.base[j]]) % xi.length(b)
                self.rel.append((j, k))
            else:
                first_seen[ci] = level
                self.rel.append(None)

    def candidates(self, level: int, p: Permutation, p_inv: Permutation) -> Iterator[int]:
        trans = self.chain.transversals[level]
        rel = self.rel[level]
        if rel is not None:
            j, k = rel
            target = self.yi.power(p.images[self.base[j]], k)
            gamma = p_inv.images[target]
            if gamma in trans:
                yield gamma
            return
        want = self.lengths[level]
        for gamma in sorted(trans):
            if self.yi.length(p.images[gamma]) == want:
                yield gamma

    def first(self, level: int, p: Permutation, p_inv: Permutation) -> Optional[Permutation]:
        self.budget.spend()
        if level == len(self.base):
            return p if self.x.conjugate(p) == self.y else None
        for gamma in self.candidates(level, p, p_inv):
            u = self.chain.transversals[level][gamma]
            found = self.first(level + 1, u * p, p_inv * self.chain._inverse_rep(level, gamma))
            if found is not None:
                return found
        return None

    def subgroup_generators(self, level: int = 0) -> List[Permutation]:
        """Generators of {g in G^(level) : x^g = x}, pruning by orbits of what is found."""
        if level == len(self.base):
            return []
        gens = self.subgroup_generators(level + 1)
        b = self.base[level]
        orbit = _orbit(b, gens)
        identity = self.chain.identity
        for gamma in self.candidates(level, identity, identity):
            if gamma in orbit:
                continue
            u = self.chain.transversals[level][gamma]
            g = self.first(level + 1, u, self.chain._inverse_rep(level, gamma))
            if g is not None:
                gens.append(g)
                orbit = _orbit(b, gens)
        return gens


def _orbit(point: int, gens: Sequence[Permutation]) -> set:
    seen = {point}
    frontier = [point]
    for i in frontier:
        for g in gens:
            j = g.images[i]
            if j not in seen:
                seen.add(j)
                frontier.append(j)
    return seen


def is_conjugate(
    chain: StabilizerChain, x: Permutation, y: Permutation, budget: BudgetLike = None
) -> Optional[Permutation]:
    """An element g of the group with x^g = y, or None when there is none."""
    if x.cycle_type() != y.cycle_type():
        return None
    if x == y:
        return chain.identity
    search = _ConjugatorSearch(chain, x, y, as_budget(budget, "is_conjugate"))
    w = search.first(0, search.chain.identity, search.chain.identity)
    logger.debug("is_conjugate: %s nodes, witness %s", search.budget.used, w)
    return w


def centralizer(chain: StabilizerChain, g: Permutation, budget: BudgetLike = None) -> StabilizerChain:
    if g.is_identity():
        return chain
    search = _ConjugatorSearch(chain, g, g, as_budget(budget, "centralizer"))
    gens = search.subgroup_generators()
    logger.debug("centralizer of %s: %d generators after %d nodes", g, len(gens), search.budget.used)
    return build_chain(gens, chain.degree) if gens else trivial_chain(chain.degree)


def normalizes(g: Permutation, sub: StabilizerChain) -> bool:
    return all(sub.contains(h.conjugate(g)) for h in sub.generators)


def normalizer(chain: StabilizerChain, sub: StabilizerChain, budget: BudgetLike = None) -> StabilizerChain:
    """
    N_G(sub). Small groups are scanned element by element; otherwise every
    normalizing element maps the anchor h1 (a generator of largest order)
    to some a in sub, so it lies in C_G(h1) * w_a where h1^(w_a) = a.
    """
    budget = as_budget(budget, "normalizer")
    hgens = sorted((h for h in sub.generators if not h.is_identity()), key=lambda h: (-h.order(), h))
    if not hgens:
        return chain

    found: List[Permutation] = []
    current = trivial_chain(chain.degree)

    def offer(g: Permutation) -> None:
        nonlocal current
        budget.spend()
        if not current.contains(g) and normalizes(g, sub):
            found.append(g)
            current = build_chain(found, chain.degree)

    if chain.order() <= ENUMERATION_LIMIT:
        for g in chain.sorted_elements():
            offer(g)
        return current

    h1 = hgens[0]
    cent = centralizer(chain, h1, budget)
    cent_elements = cent.sorted_elements()
    anchor_type = h1.cycle_type()
    for a in sub.sorted_elements():
        if a.cycle_type() != anchor_type:
            continue
        w = is_conjugate(chain, h1, a, budget)
        if w is None:
            continue
        for c in cent_elements:
            offer(c * w)
    logger.info("normalizer of a subgroup of order %d has order %d", sub.order(), current.order())
    return current
