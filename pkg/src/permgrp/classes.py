"""
Conjugacy classes of a permutation group, matching them to the classes of
a character table, and the brute-force structure constant oracle.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence

from tqdm import tqdm

from configs.settings import DEFAULT_SEED, ENUMERATION_LIMIT, RANDOM_CLASS_TRIES
from src.errors import FusionError, ResourceLimitError, UsageError
from src.permgrp.backtrack import BudgetLike, as_budget, centralizer, is_conjugate
from src.permgrp.permutation import Permutation
from src.permgrp.stabilizer_chain import StabilizerChain
from src.tables.model import CharacterTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjClassData:
    representative: Permutation
    size: int
    element_order: int
    centralizer_order: int
    # only filled on the exhaustive path
    elements: Optional[FrozenSet[Permutation]] = field(default=None, compare=False, repr=False)

    def __str__(self) -> str:
        return f"order {self.element_order}, size {self.size}, rep {self.representative}"


def _progress(iterable, total: int, desc: str):
    return tqdm(iterable, total=total, desc=desc, disable=not logger.isEnabledFor(logging.INFO), leave=False)


def conjugacy_classes(
    chain: StabilizerChain,
    seed: int = DEFAULT_SEED,
    tries: int = RANDOM_CLASS_TRIES,
    budget: BudgetLike = None,
) -> List[ConjClassData]:
    """
    Exhaustive for |G| <= ENUMERATION_LIMIT; otherwise random sampling where
    each new class size is certified as |G| / |C_G(rep)|. The randomized list
    is complete exactly when the sizes sum to |G|.
    """
    if chain.order() <= ENUMERATION_LIMIT:
        return _classes_exhaustive(chain)
    return _classes_randomized(chain, seed, tries, budget)


def _classes_exhaustive(chain: StabilizerChain) -> List[ConjClassData]:
    n = chain.order()
    gens = [g for g in chain.generators if not g.is_identity()]
    seen: set = set()
    classes = []
    for g in _progress(chain.sorted_elements(), n, "classes"):
        if g in seen:
            continue
        orbit = {g}
        frontier = [g]
        for h in frontier:
            for s in gens:
                k = h.conjugate(s)
                if k not in orbit:
                    orbit.add(k)
                    frontier.append(k)
        seen |= orbit
        classes.append(ConjClassData(min(orbit), len(orbit), g.order(), n // len(orbit), frozenset(orbit)))
    classes.sort(key=lambda c: (c.element_order, c.size, c.representative))
    logger.info("%d conjugacy classes in a group of order %d", len(classes), n)
    return classes


def _classes_randomized(chain: StabilizerChain, seed: int, tries: int, budget: BudgetLike) -> List[ConjClassData]:
    n = chain.order()
    budget = as_budget(budget, "conjugacy_classes")
    rng = random.Random(seed)
    classes: List[ConjClassData] = [ConjClassData(chain.identity, 1, 1, n)]
    total = 1
    for _ in _progress(range(tries), tries, "sampling classes"):
        if total == n:
            break
        g = chain.random_element(rng)
        ct = g.cycle_type()
        cent_order = None
        known = False
        for c in classes:
            if c.representative.cycle_type() != ct:
                continue
            if cent_order is None:
                cent_order = centralizer(chain, g, budget).order()
            if cent_order == c.centralizer_order and is_conjugate(chain, c.representative, g, budget) is not None:
                known = True
                break
        if known:
            continue
        if cent_order is None:
            cent_order = centralizer(chain, g, budget).order()
        classes.append(ConjClassData(g, n // cent_order, g.order(), cent_order))
        total += n // cent_order
        logger.debug("new class: order %d, size %d", g.order(), n // cent_order)
    if total != n:
        logger.warning("randomized class search covered %d of %d elements", total, n)
    classes.sort(key=lambda c: (c.element_order, c.size, c.representative))
    return classes


def class_lookup(classes: Sequence[ConjClassData]) -> Dict[Permutation, int]:
    lookup = {}
    for i, c in enumerate(classes):
        if c.elements is None:
            raise UsageError("class lookup needs exhaustively computed classes")
        for g in c.elements:
            lookup[g] = i
    return lookup


def match_classes(
    chain: StabilizerChain, classes: Sequence[ConjClassData], table: CharacterTable
) -> Dict[str, ConjClassData]:
    """
    Assign table labels to permutation classes so that element orders,
    class sizes and every stored power map agree. The first consistent
    assignment in canonical order is returned.
    """
    if chain.order() != table.group_order:
        raise FusionError(f"group of order {chain.order()} cannot carry table {table.name} of order {table.group_order}")
    if len(classes) != table.class_count:
        raise FusionError(f"{len(classes)} classes against {table.class_count} in {table.name}")
    lookup = class_lookup(classes)

    powers = {p: {j: lookup[classes[j].representative ** p] for j in range(len(classes))} for p in table.power_maps}
    table_pre = {p: Counter(pm) for p, pm in table.power_maps.items()}
    perm_pre = {p: Counter(images.values()) for p, images in powers.items()}

    # candidates agree on order, size and how many classes power into them
    def table_key(i: int) -> tuple:
        return (table.classes[i].element_order, table.class_size(i), *(table_pre[p][i] for p in sorted(powers)))

    def perm_key(j: int) -> tuple:
        return (classes[j].element_order, classes[j].size, *(perm_pre[p][j] for p in sorted(powers)))

    candidates: Dict[int, List[int]] = {}
    for i in range(table.class_count):
        key = table_key(i)
        candidates[i] = [j for j in range(len(classes)) if perm_key(j) == key]
        same = sum(1 for k in range(table.class_count) if table_key(k) == key)
        if len(candidates[i]) != same:
            raise FusionError(f"{table.name}: {same} classes of type {key}, group has {len(candidates[i])}")

    order = sorted(range(table.class_count), key=lambda i: (table.classes[i].element_order, i))
    assignment: Dict[int, int] = {}
    used: set = set()

    def fits(i: int, j: int) -> bool:
        for p, pm in table.power_maps.items():
            target = assignment.get(pm[i], j if pm[i] == i else None)
            if target is not None and powers[p][j] != target:
                return False
            for k, assigned in assignment.items():
                if pm[k] == i and powers[p][assigned] != j:
                    return False
        return True

    def solve(pos: int) -> bool:
        if pos == len(order):
            return True
        i = order[pos]
        for j in candidates[i]:
            if j in used or not fits(i, j):
                continue
            assignment[i] = j
            used.add(j)
            if solve(pos + 1):
                return True
            del assignment[i]
            used.discard(j)
        return False

    if not solve(0):
        raise FusionError(f"no class assignment of {table.name} is consistent with the power maps")
    return {table.classes[i].label: classes[j] for i, j in sorted(assignment.items())}


def count_products(
    chain: StabilizerChain, c1: ConjClassData, c2: ConjClassData, c3: ConjClassData
) -> int:
    """Pairs (x, y) in c1 x c2 with x*y = z for z the representative of c3."""
    if c1.elements is None or c2.elements is None:
        raise ResourceLimitError("count_products", ENUMERATION_LIMIT, chain.order())
    z = c3.representative
    return sum(1 for x in c1.elements if x.inverse() * z in c2.elements)
