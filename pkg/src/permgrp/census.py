"""
Subgroup censuses behind the PSU3(8) and PSL2(8) construction checks:
conjugacy of cyclic subgroups of order 9, dihedral extensions, the
normalizer of a 9x3 torus, Sylow 2-subgroups, and generation.
"""

from __future__ import annotations

import logging
import random
from dataclasses import asdict, dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from configs.settings import DEFAULT_SEED
from src.errors import SubgroupOrderMismatch, UsageError
from src.permgrp.backtrack import BudgetLike, as_budget, centralizer, is_conjugate, normalizer
from src.permgrp.classes import conjugacy_classes
from src.permgrp.permutation import Permutation
from src.permgrp.stabilizer_chain import StabilizerChain
from src.permgrp.subgroups import (
    all_subgroups,
    closure,
    cyclic_elements,
    find_element_of_order,
    is_cyclic,
    subgroup_chain,
    sylow_by_ascent,
)

logger = logging.getLogger(__name__)

UNITS_MOD_9 = (1, 2, 4, 5, 7, 8)


class _Report:
    def as_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if not k.startswith("_")}


# -------------------------
# Cyclic subgroups of order 9
# -------------------------
@dataclass
class C9CensusReport(_Report):
    group_order: int
    sylow_order: int
    c9_count: int
    class_count: int
    verdict: str
    witnesses: List[str] = field(default_factory=list)


def _cyclic_subgroups_of_order(elements: Sequence[Permutation], n: int) -> List[Tuple[Permutation, FrozenSet[Permutation]]]:
    """(generator, element set) per cyclic subgroup of order n; generator is the smallest."""
    found: Dict[FrozenSet[Permutation], Permutation] = {}
    for g in sorted(elements):
        if g.order() == n:
            found.setdefault(cyclic_elements(g), g)
    return sorted(((g, s) for s, g in found.items()), key=lambda item: item[0])


def c9_conjugacy_census(
    chain: StabilizerChain, seed: int = DEFAULT_SEED, budget: BudgetLike = None
) -> C9CensusReport:
    """
    Every C9 lies in some Sylow 3-subgroup and those are conjugate, so
    classifying the C9s of one Sylow 3-subgroup under G-conjugacy settles
    all of them.
    """
    budget = as_budget(budget, "c9_conjugacy_census")
    rng = random.Random(seed)
    x = find_element_of_order(chain, 9, rng)
    if x is None:
        return C9CensusReport(chain.order(), 0, 0, 0, "no elements of order 9")

    sylow = sylow_by_ascent(chain, x, 3, budget)
    c9s = _cyclic_subgroups_of_order(sylow.elements(), 9)
    classes: List[Permutation] = []
    witnesses = []
    for y, _ in c9s:
        for rep_index, rep in enumerate(classes):
            hit = next(
                ((k, w) for k in UNITS_MOD_9 if (w := is_conjugate(chain, rep, y ** k, budget)) is not None),
                None,
            )
            if hit is not None:
                k, w = hit
                witnesses.append(f"<{y}> = <c{rep_index + 1}>^g with (c{rep_index + 1})^g = ({y})^{k}, g = {w}")
                break
        else:
            classes.append(y)
            witnesses.append(f"c{len(classes)} = {y}")

    verdict = "all conjugate" if len(classes) == 1 else f"{len(classes)} classes"
    logger.info("C9 census: %d cyclic subgroups of order 9, %s", len(c9s), verdict)
    return C9CensusReport(chain.order(), sylow.order(), len(c9s), len(classes), verdict, witnesses)


# -------------------------
# Dihedral extensions of a C9
# -------------------------
@dataclass
class D18CensusReport(_Report):
    generator: str
    normalizer_order: int
    involution_count: int
    d18_count: int
    count: int
    witnesses: List[str] = field(default_factory=list)


def _generator_of_order(sub: StabilizerChain, n: int) -> Permutation:
    for g in sub.generators:
        if g.order() == n:
            return g
    for g in sub.sorted_elements():
        if g.order() == n:
            return g
    raise UsageError(f"subgroup of order {sub.order()} has no element of order {n}")


def d18_extension_census(chain: StabilizerChain, c9: StabilizerChain, budget: BudgetLike = None) -> D18CensusReport:
    """
    Involutions t in N(<x>) with x^t = x^-1, the D18 subgroups <x, t> they
    generate, and the number of those up to conjugacy in N(<x>).
    """
    if c9.order() != 9 or not is_cyclic(c9):
        raise UsageError(f"expected a cyclic subgroup of order 9, got order {c9.order()}")
    budget = as_budget(budget, "d18_extension_census")
    x = _generator_of_order(c9, 9)
    if not chain.contains(x):
        raise UsageError("the cyclic subgroup does not lie in the group")
    x_inv = x.inverse()
    powers = sorted(cyclic_elements(x))

    N = normalizer(chain, subgroup_chain([x], chain.degree, chain.base), budget)
    inverting = [t for t in N.sorted_elements() if t.order() == 2 and x.conjugate(t) == x_inv]

    dihedral: Dict[FrozenSet[Permutation], Permutation] = {}
    for t in inverting:
        dihedral.setdefault(frozenset(powers + [p * t for p in powers]), t)

    # orbits of the D18s under conjugation by N
    remaining = set(dihedral)
    orbits = []
    for start in sorted(dihedral, key=lambda s: dihedral[s]):
        if start not in remaining:
            continue
        orbit = [start]
        remaining.discard(start)
        for s in orbit:
            for g in N.generators:
                image = frozenset(h.conjugate(g) for h in s)
                if image in remaining:
                    remaining.discard(image)
                    orbit.append(image)
        orbits.append(orbit)

    witnesses = [f"<x, t> with t = {dihedral[o[0]]}: {len(o)} conjugate D18" for o in orbits]
    logger.info("D18 census: %d inverting involutions, %d D18, %d classes", len(inverting), len(dihedral), len(orbits))
    return D18CensusReport(str(x), N.order(), len(inverting), len(dihedral), len(orbits), witnesses)


# -------------------------
# 9x3 tori
# -------------------------
@dataclass
class SubgroupCensusReport(_Report):
    group_order: int
    c9_count: int
    c3_count: int
    complement_count: int
    witnesses: List[str] = field(default_factory=list)


def _census_of_elements(elements: Sequence[Permutation]) -> Tuple[list, list, list]:
    c9s = _cyclic_subgroups_of_order(elements, 9)
    c3s = _cyclic_subgroups_of_order(elements, 3)
    anchor = c9s[0][1] if c9s else frozenset()
    complements = [(g, s) for g, s in c3s if len(s & anchor) == 1]
    return c9s, c3s, complements


def subgroup_census(chain: StabilizerChain) -> SubgroupCensusReport:
    """C9 and C3 subgroups of a small group, and the C3s meeting the first C9 trivially."""
    subgroups = all_subgroups(chain)
    c9 = sum(1 for s in subgroups if s.order() == 9 and is_cyclic(s))
    c3 = sum(1 for s in subgroups if s.order() == 3)
    _, _, complements = _census_of_elements(chain.sorted_elements())
    witnesses = [f"complement <{g}>" for g, _ in complements]
    return SubgroupCensusReport(chain.order(), c9, c3, len(complements), witnesses)


@dataclass
class TorusCensusReport(_Report):
    torus_order: int
    c9_count: int
    c3_count: int
    complement_count: int
    normalizer_order: int
    c9_action_order: int
    complement_action_order: int
    witnesses: List[str] = field(default_factory=list)


def _action_order(subsets: Sequence[FrozenSet[Permutation]], gens: Sequence[Permutation]) -> int:
    """Order of the permutation group induced by conjugation on subsets."""
    if len(subsets) < 2:
        return 1
    index = {s: i for i, s in enumerate(subsets)}
    induced = []
    for g in gens:
        images = [index[frozenset(h.conjugate(g) for h in s)] for s in subsets]
        induced.append(Permutation(images))
    return subgroup_chain(induced, len(subsets)).order()


def torus_census(chain: StabilizerChain, x: Permutation, budget: BudgetLike = None) -> TorusCensusReport:
    """
    T = C_G(x) for x of order 9, its cyclic subgroups, and how N_G(T)
    permutes the C9s and the complements of order 3.
    """
    if x.order() != 9:
        raise UsageError(f"torus census needs an element of order 9, got order {x.order()}")
    budget = as_budget(budget, "torus_census")
    T = centralizer(chain, x, budget)
    elements = T.sorted_elements()
    c9s, c3s, complements = _census_of_elements(elements)
    NT = normalizer(chain, T, budget)
    c9_action = _action_order([s for _, s in c9s], NT.generators)
    comp_action = _action_order([s for _, s in complements], NT.generators)
    witnesses = [f"C9 <{g}>" for g, _ in c9s] + [f"complement <{g}>" for g, _ in complements]
    logger.info("torus of order %d, normalizer of order %d", T.order(), NT.order())
    return TorusCensusReport(
        T.order(), len(c9s), len(c3s), len(complements), NT.order(), c9_action, comp_action, witnesses
    )


# -------------------------
# PSL2(8) prerequisites
# -------------------------
@dataclass
class FusionPrerequisitesReport(_Report):
    group_order: int
    has_order_9: bool
    involution_class_sizes: List[int]
    single_involution_class: bool
    sylow2_order: int
    elementary_abelian_2_cubed: bool
    involutions: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.has_order_9 and self.single_involution_class and self.elementary_abelian_2_cubed


def fusion_prerequisites_psl28(chain: StabilizerChain, seed: int = DEFAULT_SEED) -> FusionPrerequisitesReport:
    rng = random.Random(seed)
    has_9 = find_element_of_order(chain, 9, rng) is not None
    sizes = [c.size for c in conjugacy_classes(chain, seed=seed) if c.element_order == 2]

    t = find_element_of_order(chain, 2, rng)
    if t is None:
        return FusionPrerequisitesReport(chain.order(), has_9, sizes, len(sizes) == 1, 1, False)
    sylow = sylow_by_ascent(chain, t, 2)
    nontrivial = [g for g in sylow.sorted_elements() if not g.is_identity()]
    elementary = sylow.order() == 8 and all(g.order() == 2 for g in nontrivial)
    return FusionPrerequisitesReport(
        chain.order(),
        has_9,
        sizes,
        len(sizes) == 1,
        sylow.order(),
        elementary,
        [str(g) for g in nontrivial] if elementary else [],
    )


# -------------------------
# Generation from 3 x PSL2(8)
# -------------------------
SUBGROUP_ORDER = 1512


@dataclass
class GenerationReport(_Report):
    subgroup_order: int
    central_order_3: Optional[str]
    extender_is_involution: bool
    extender_normalizes_torus: bool
    closure_order: int
    group_order: int
    full_group: bool


def generation_check(
    chain: StabilizerChain, sub_gens: Sequence[Permutation], extender: Permutation
) -> GenerationReport:
    sub = subgroup_chain(sub_gens, chain.degree, chain.base)
    if sub.order() != SUBGROUP_ORDER:
        raise SubgroupOrderMismatch(f"subgroup has order {sub.order()}, expected {SUBGROUP_ORDER}")
    for g in list(sub_gens) + [extender]:
        if not chain.contains(g):
            raise SubgroupOrderMismatch(f"{g} does not lie in the group")

    elements = sub.sorted_elements()
    central = next(
        (z for z in elements if z.order() == 3 and all(z.commutes_with(s) for s in sub_gens)),
        None,
    )
    if central is None:
        raise SubgroupOrderMismatch("subgroup of order 1512 has no central element of order 3")

    normalizes_torus = False
    if extender.order() == 2:
        for y in elements:
            if y.order() != 9:
                continue
            torus = closure([y, central], chain.degree)
            if y.conjugate(extender) in torus and central.conjugate(extender) in torus:
                normalizes_torus = True
                break

    generated = subgroup_chain(list(sub_gens) + [extender], chain.degree, chain.base)
    logger.info("<3 x PSL2(8), extender> has order %d", generated.order())
    return GenerationReport(
        sub.order(),
        str(central),
        extender.order() == 2,
        normalizes_torus,
        generated.order(),
        chain.order(),
        generated.order() == chain.order(),
    )
