from __future__ import annotations

import logging
import random
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from sympy import multiplicity
from tqdm import tqdm

from configs.settings import ENUMERATION_LIMIT, SUBGROUP_LIMIT
from src.errors import AscentStalledError, ResourceLimitError, UsageError
from src.permgrp.backtrack import BudgetLike, as_budget, normalizer
from src.permgrp.permutation import Permutation
from src.permgrp.stabilizer_chain import StabilizerChain, build_chain, trivial_chain

logger = logging.getLogger(__name__)


def p_part(n: int, p: int) -> int:
    return p ** multiplicity(p, n)


def cyclic_elements(g: Permutation) -> FrozenSet[Permutation]:
    out = [Permutation.identity(g.degree)]
    h = g
    while not h.is_identity():
        out.append(h)
        h = h * g
    return frozenset(out)


def closure(gens: Sequence[Permutation], degree: int, limit: int = ENUMERATION_LIMIT) -> FrozenSet[Permutation]:
    """Element set of <gens> by breadth-first right multiplication."""
    identity = Permutation.identity(degree)
    seen = {identity}
    frontier = [identity]
    gens = [g for g in gens if not g.is_identity()]
    for h in frontier:
        for g in gens:
            k = h * g
            if k not in seen:
                seen.add(k)
                frontier.append(k)
                if len(seen) > limit:
                    raise ResourceLimitError("closure", limit, len(seen))
    return frozenset(seen)


def subgroup_chain(gens: Sequence[Permutation], degree: int, base: Sequence[int] = ()) -> StabilizerChain:
    gens = [g for g in gens if not g.is_identity()]
    if not gens:
        return trivial_chain(degree)
    return build_chain(gens, degree, base=list(base))


def all_subgroups(chain: StabilizerChain, limit: int = SUBGROUP_LIMIT) -> List[StabilizerChain]:
    """
    Every subgroup, found as joins of cyclic subgroups and deduplicated by
    element set. Sorted by order, then by sorted element list.
    """
    if chain.order() > limit:
        raise ResourceLimitError("all_subgroups", limit, chain.order())
    elements = chain.sorted_elements()
    identity = chain.identity

    cyclic: Dict[FrozenSet[Permutation], Permutation] = {}
    for g in elements:
        cyclic.setdefault(cyclic_elements(g), g)
    cyclic_list = [(s, g) for s, g in cyclic.items() if len(s) > 1]

    found: Dict[FrozenSet[Permutation], Tuple[Permutation, ...]] = {frozenset([identity]): ()}
    frontier = []
    for s, g in cyclic_list:
        found[s] = (g,)
        frontier.append(s)

    progress = tqdm(desc="subgroups", disable=not logger.isEnabledFor(logging.INFO), leave=False)
    while frontier:
        next_frontier = []
        for s in frontier:
            gens = found[s]
            for c, g in cyclic_list:
                if c <= s:
                    continue
                joined = closure(gens + (g,), chain.degree, limit)
                if joined not in found:
                    found[joined] = gens + (g,)
                    next_frontier.append(joined)
                    progress.update(1)
        frontier = next_frontier
    progress.close()

    ordered = sorted(found.items(), key=lambda item: (len(item[0]), sorted(item[0])))
    logger.info("%d subgroups in a group of order %d", len(ordered), chain.order())
    return [subgroup_chain(gens, chain.degree) for _, gens in ordered]


def is_cyclic(sub: StabilizerChain) -> bool:
    n = sub.order()
    return any(g.order() == n for g in sub.elements())


def find_element_of_order(
    chain: StabilizerChain, n: int, rng: Optional[random.Random] = None, tries: int = 2000
) -> Optional[Permutation]:
    """
    An element of order exactly n: the first one in canonical order for
    enumerable groups, else a power of a random element whose order n divides.
    """
    if chain.order() % n:
        return None
    if chain.order() <= ENUMERATION_LIMIT:
        for g in chain.sorted_elements():
            if g.order() == n:
                return g
        return None
    rng = rng or random.Random(0)
    for _ in range(tries):
        g = chain.random_element(rng)
        k = g.order()
        if k % n == 0:
            return g ** (k // n)
    return None


def sylow_by_ascent(
    chain: StabilizerChain, seed: Permutation, p: int, budget: BudgetLike = None
) -> StabilizerChain:
    """
    Grow <seed> to a Sylow p-subgroup. While P is short of the p-part of |G|,
    some g in N(P) \\ P has a power g' outside P with g'^p in P, and
    <P, g'> is a p-group of order p * |P|.
    """
    k = seed.order()
    if k != p_part(k, p):
        raise UsageError(f"seed of order {k} is not a {p}-element")
    if not chain.contains(seed):
        raise UsageError("seed does not lie in the group")
    budget = as_budget(budget, f"sylow{p}_by_ascent")
    target = p_part(chain.order(), p)
    P = subgroup_chain([seed], chain.degree, chain.base)

    while P.order() < target:
        N = normalizer(chain, P, budget)
        grown = None
        for g in N.sorted_elements():
            if P.contains(g):
                continue
            h, e = g, 1
            while not P.contains(h):
                h = h * g
                e += 1
            a = multiplicity(p, e)
            if a >= 1:
                grown = g ** (e // p)
                break
        if grown is None:
            raise AscentStalledError(
                f"ascent stalled at order {P.order()} (normalizer order {N.order()}, target {target})", partial=P
            )
        P = subgroup_chain(list(P.generators) + [grown], chain.degree, chain.base)
        logger.info("%d-subgroup ascent: order %d of %d", p, P.order(), target)
    return P


def sylow3_by_ascent(chain: StabilizerChain, seed: Permutation, budget: BudgetLike = None) -> StabilizerChain:
    return sylow_by_ascent(chain, seed, 3, budget)


def normal_closure(chain: StabilizerChain, elements: Iterable[Permutation]) -> StabilizerChain:
    """Smallest normal subgroup containing elements."""
    gens = [g for g in elements if not g.is_identity()]
    N = subgroup_chain(gens, chain.degree, chain.base)
    full = chain.order()
    changed = True
    while changed and N.order() < full:
        changed = False
        for s in chain.generators:
            for h in list(N.generators):
                k = h.conjugate(s)
                if not N.contains(k):
                    gens.append(k)
                    N = subgroup_chain(gens, chain.degree, chain.base)
                    changed = True
                    if N.order() == full:
                        return N
    return N
