"""
Base and strong generating set for a permutation group, built with the
incremental Schreier-Sims algorithm.

Level i holds base point b_i, the strong generators fixing b_0..b_{i-1},
and a transversal {gamma: u} with u(b_i) = gamma. Every element factors
uniquely as g = u_{k-1} * ... * u_1 * u_0 (u_{k-1} applied first).
"""

from __future__ import annotations

import logging
import math
import random
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from configs.settings import ENUMERATION_LIMIT
from src.errors import GensSyntaxError, ResourceLimitError
from src.permgrp.permutation import Permutation

logger = logging.getLogger(__name__)


def _orbit_transversal(gens: Sequence[Permutation], alpha: int, identity: Permutation) -> Dict[int, Permutation]:
    tr = [(alpha, identity)]
    seen = {alpha}
    for x, px in tr:
        for gen in gens:
            y = gen.images[x]
            if y not in seen:
                seen.add(y)
                tr.append((y, px * gen))
    return dict(tr)


def _distribute_gens_by_base(base: Sequence[int], gens: Sequence[Permutation]) -> List[List[Permutation]]:
    """stabs[i] holds the generators fixing base[0..i-1]."""
    stabs: List[List[Permutation]] = [[] for _ in base]
    for gen in gens:
        for i, b in enumerate(base):
            stabs[i].append(gen)
            if gen.images[b] != b:
                break
    return stabs


def _first_moved(g: Permutation) -> int:
    for i, j in enumerate(g.images):
        if i != j:
            return i
    raise ValueError("identity moves no point")


class StabilizerChain:
    """
    Immutable once built. Use build_chain() rather than the constructor.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        base: Sequence[int],
        strong_gens: Sequence[Permutation],
        transversals: Sequence[Dict[int, Permutation]],
    ):
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.base: Tuple[int, ...] = tuple(base)
        self.strong_gens: Tuple[Permutation, ...] = tuple(strong_gens)
        self.transversals: Tuple[Dict[int, Permutation], ...] = tuple(transversals)
        self.orbits: Tuple[Tuple[int, ...], ...] = tuple(tuple(t) for t in transversals)
        self._order = math.prod(len(t) for t in transversals)
        self._inverses: List[Dict[int, Permutation]] = [{} for _ in transversals]
        self._rebased: Dict[Tuple[int, ...], "StabilizerChain"] = {}

    # -------------------------
    # Order and membership
    # -------------------------
    def order(self) -> int:
        return self._order

    def is_trivial(self) -> bool:
        return self._order == 1

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def _inverse_rep(self, level: int, gamma: int) -> Permutation:
        cache = self._inverses[level]
        u = cache.get(gamma)
        if u is None:
            u = cache[gamma] = self.transversals[level][gamma].inverse()
        return u

    def sift(self, g: Permutation, start: int = 0) -> Tuple[Permutation, int]:
        """
        Strip g through levels start.. ; returns the residue and the level
        where sifting stopped (len(base) when every level was passed).
        """
        for i in range(start, len(self.base)):
            b = self.base[i]
            beta = g.images[b]
            if beta == b:
                continue
            if beta not in self.transversals[i]:
                return g, i
            g = g * self._inverse_rep(i, beta)
        return g, len(self.base)

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        h, level = self.sift(g)
        return level == len(self.base) and h.is_identity()

    def __contains__(self, g: Permutation) -> bool:
        return self.contains(g)

    # -------------------------
    # Elements
    # -------------------------
    def elements(self, limit: int = ENUMERATION_LIMIT) -> Iterator[Permutation]:
        """Every element exactly once; refuses groups larger than limit."""
        if self._order > limit:
            raise ResourceLimitError("element enumeration", limit, self._order)
        if not self.base:
            yield self.identity
            return
        levels = [list(t.values()) for t in reversed(self.transversals)]
        for reps in product(*levels):
            g = reps[0]
            for u in reps[1:]:
                g = g * u
            yield g

    def sorted_elements(self, limit: int = ENUMERATION_LIMIT) -> List[Permutation]:
        return sorted(self.elements(limit))

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniform: one random transversal element per level."""
        g = self.identity
        for orbit, t in zip(reversed(self.orbits), reversed(self.transversals)):
            g = g * t[rng.choice(orbit)]
        return g

    def orbit(self, point: int) -> List[int]:
        seen = {point}
        out = [point]
        for x in out:
            for gen in self.strong_gens:
                y = gen.images[x]
                if y not in seen:
                    seen.add(y)
                    out.append(y)
        return out

    def with_base_prefix(self, prefix: Sequence[int]) -> "StabilizerChain":
        """Same group, base starting with prefix; trailing trivial levels dropped."""
        key = tuple(prefix)
        chain = self._rebased.get(key)
        if chain is None:
            chain = build_chain(self.strong_gens or self.generators, self.degree, base=key)
            chain = chain._trimmed()
            self._rebased[key] = chain
        return chain

    def _trimmed(self) -> "StabilizerChain":
        last = len(self.base)
        while last > 0 and len(self.transversals[last - 1]) == 1:
            last -= 1
        if last == len(self.base):
            return self
        return StabilizerChain(
            self.degree, self.generators, self.base[:last], self.strong_gens, self.transversals[:last]
        )

    def __repr__(self) -> str:
        return f"StabilizerChain(degree={self.degree}, order={self._order}, base={list(self.base)})"


def build_chain(
    gens: Sequence[Permutation],
    degree: Optional[int] = None,
    base: Optional[Sequence[int]] = None,
) -> StabilizerChain:
    """
    Extend base (if any) and gens to a base and strong generating set.
    """
    if degree is None:
        if not gens:
            raise GensSyntaxError("cannot infer the degree of an empty generating set")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise GensSyntaxError(f"generator of degree {g.degree} in a group of degree {degree}")

    identity = Permutation.identity(degree)
    base = list(base or [])
    original = list(gens)
    gens = [g for g in gens if not g.is_identity()]
    for gen in gens:
        if all(gen.images[b] == b for b in base):
            base.append(_first_moved(gen))

    strong_gens_distr = _distribute_gens_by_base(base, gens)
    transversals = [_orbit_transversal(strong_gens_distr[i], b, identity) for i, b in enumerate(base)]
    new_strong_gens: List[Permutation] = []

    def strip(h: Permutation, start: int) -> Tuple[Permutation, int]:
        for i in range(start, len(base)):
            beta = h.images[base[i]]
            if beta == base[i]:
                continue
            if beta not in transversals[i]:
                return h, i
            h = h * transversals[i][beta].inverse()
        return h, len(base)

    i = len(base) - 1
    while i >= 0:
        restart = False
        inverses: Dict[int, Permutation] = {}
        for beta, u_beta in list(transversals[i].items()):
            for gen in strong_gens_distr[i]:
                gb = gen.images[beta]
                u1 = transversals[i][gb]
                g1 = u_beta * gen
                if g1 == u1:
                    continue
                u1_inv = inverses.get(gb)
                if u1_inv is None:
                    u1_inv = inverses[gb] = u1.inverse()
                h, j = strip(g1 * u1_inv, i + 1)
                if j == len(base):
                    if h.is_identity():
                        continue
                    base.append(_first_moved(h))
                    strong_gens_distr.append([])
                    transversals.append({base[-1]: identity})
                new_strong_gens.append(h)
                for level in range(i + 1, j + 1):
                    strong_gens_distr[level].append(h)
                    transversals[level] = _orbit_transversal(strong_gens_distr[level], base[level], identity)
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1

    chain = StabilizerChain(degree, original, base, gens + new_strong_gens, transversals)
    logger.debug("built stabilizer chain: degree %d, base length %d, order %d", degree, len(base), chain.order())
    return chain


def trivial_chain(degree: int) -> StabilizerChain:
    return StabilizerChain(degree, [], [], [], [])


def group_order(chain: StabilizerChain) -> int:
    return chain.order()


def contains(chain: StabilizerChain, p: Permutation) -> bool:
    return chain.contains(p)


def random_element(chain: StabilizerChain, rng: random.Random) -> Permutation:
    return chain.random_element(rng)
