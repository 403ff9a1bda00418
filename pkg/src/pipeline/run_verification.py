"""
Ordered claim checks.

    R1-R4  restriction of the 196883 character to S3 x Th
    C1-C2  centralizer arithmetic and the counting bound
    P1     subgroups of A5 of order at least 14
    U1-U4  PSU3(8) on 513 points
    F1,S1  PSL2(8) prerequisites and structure constants
    A1-A4  imported facts, recorded as assumed
"""

from __future__ import annotations

import logging
import random
from functools import cached_property
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Union

from sympy import factorint

from configs.settings import DEFAULT_BUDGET, DEFAULT_SEED, NORMAL_CLOSURE_PROBES, PSU38_ORDER
from src.classops.characters import decompose, sum_rows, value_on
from src.classops.structure_constants import cmc, min_centralizer_bound
from src.errors import MathError, UsageError
from src.exact.cyclotomic import Cyclotomic
from src.permgrp.census import (
    c9_conjugacy_census,
    d18_extension_census,
    fusion_prerequisites_psl28,
    generation_check,
    subgroup_census,
    torus_census,
)
from src.permgrp.classes import conjugacy_classes, count_products, match_classes
from src.permgrp.gens_format import load_gens
from src.permgrp.stabilizer_chain import StabilizerChain, build_chain
from src.permgrp.subgroups import all_subgroups, find_element_of_order, normal_closure, subgroup_chain
from src.pipeline.claims import ClaimReport, Status, Step
from src.pipeline.data_dir import DataFiles, locate_data
from src.tables.ct_format import load_table
from src.tables.model import CharacterTable, ClassFunction
from src.tables.products import direct_product, outer_tensor, product_label

logger = logging.getLogger(__name__)

MONSTER_DEGREE = 196883

# name -> constituents of the three Th characters in the restriction
TH_CONSTITUENTS = {
    "34999": ("30875", "4123", "1"),
    "30628": ("30628",),
    "65628": ("61256", "4123", "248", "1"),
}
# S3 row tensored with each Th character, with multiplicity
S3_PARTS = (("2", "65628"), ("1+", "34999"), ("1-", "30628"))
VALUES_ON_2A_7A = {"34999": (183, 13), "30628": (-92, 3), "65628": (92, 17)}
NINE_CLASSES = ("9A", "9B", "9C")
INNER_VALUES = (-1, -1, 26)
DIAGONAL_VALUES = (26, 26, -1)

PSU4_2_ORDER = 25920
OMEGA5_3_ORDER = 25920
A6_ORDER = 360
SYMMETRY_ORDER = 9720
C2_CLASS_SIZE = 3 ** 6
MIN_ORDER = 14
PSL28_ORDER = 504

ANCHORS = {
    "R1": r"2\otimes 65628 + 1^+\otimes 34999",
    "R2": "34999 & 183 & 13",
    "R3": "30875+4123+1",
    "R4": "always in a different conjugacy class",
    "C1": r"has shape $[3^7].\PSU_4(2)$",
    "C2": "contains only $3^6=729$ elements",
    "P1": "order at least $14$",
    "U1": "all cyclic groups of order $9$",
    "U2": "contains three cyclic subgroups of order $9$",
    "U3": "extends to a unique",
    "U4": "can be generated from a group",
    "F1": "contains a pure $2^3$",
    "S1": "structure constants of type",
    "A1": "exactly four classes of",
    "A2": "Baby Monster class $9B$",
    "A3": "order $19$ is $19\\times A_5$",
    "A4": "the extension is non-split",
}

CLAIMS = {
    "R1": "2*65628 + 34999 + 30628 = 196883 on S3 x Th",
    "R2": "Th constituents take the tabulated values on 2A and 7A",
    "R3": "the three Th characters decompose into the displayed irreducibles",
    "R4": "on every 9-class of Th the inner and diagonal values differ",
    "C1": "|[3^7].PSU4(2)| = 3^7 * 25920 = 56,687,040",
    "C2": "a class of 729 elements under a group of order 9720 has stabilizers of order >= 14",
    "P1": "the only subgroup of A5 of order >= 14 is A5",
    "U1": "all cyclic subgroups of order 9 in PSU3(8) are conjugate",
    "U2": "a 9x3 torus has three C9s and three complements of order 3, permuted by S3",
    "U3": "a C9 of PSU3(8) extends to a unique D18 up to conjugacy",
    "U4": "PSU3(8) is generated by 3 x PSL2(8) and one extending involution",
    "F1": "PSL2(8) has elements of order 9 and a pure 2^3",
    "S1": "PSL2(8) structure constants of type (2A, 3A, 7X) match pair counts",
    "A1": "there are exactly four classes of PSL2(8) x 3 in the Monster",
    "A2": "in the 3A cases the order-9 elements lie in Baby Monster class 9B",
    "A3": "the centralizer of an element of order 19 is 19 x A5, with classes 2A, 3C, 5A",
    "A4": "the 9A-centralizer extension in the Monster is non-split",
}

STEP_ORDER = ("R1", "R2", "R3", "R4", "C1", "C2", "P1", "U1", "U2", "U3", "U4", "F1", "S1", "A1", "A2", "A3", "A4")


def _step(step_id: str, ok: bool, witnesses: List[str]) -> Step:
    return Step(
        id=step_id,
        claim=CLAIMS[step_id],
        anchor=ANCHORS[step_id],
        status=Status.PASS if ok else Status.FAIL,
        witnesses=witnesses,
    )


def _skipped(step_id: str, reason: str) -> Step:
    return Step.skipped(step_id, CLAIMS[step_id], ANCHORS[step_id], reason)


def _assumed(step_id: str, source: str) -> Step:
    return Step(
        id=step_id,
        claim=CLAIMS[step_id],
        anchor=ANCHORS[step_id],
        status=Status.ASSUMED,
        witnesses=[f"imported from {source}; not computed here"],
    )


def _exact(v: Cyclotomic) -> Union[int, Cyclotomic]:
    return int(v.to_rational()) if v.is_integer() else v


class VerificationContext:
    """Lazily loaded tables and groups shared by the steps."""

    def __init__(self, files: DataFiles, seed: int, budget: int):
        self.files = files
        self.seed = seed
        self.budget = budget

    # -------------------------
    # Tables
    # -------------------------
    @cached_property
    def th(self) -> CharacterTable:
        return load_table(self.files.th)

    @cached_property
    def s3(self) -> CharacterTable:
        return load_table(self.files.path("s3.ct"))

    @cached_property
    def th_characters(self) -> Dict[str, ClassFunction]:
        return {name: sum_rows(self.th, parts) for name, parts in TH_CONSTITUENTS.items()}

    @cached_property
    def s3_th(self) -> CharacterTable:
        return direct_product(self.s3, self.th)

    @cached_property
    def monster_character(self) -> ClassFunction:
        """2 (x) 65628 + 1+ (x) 34999 + 1- (x) 30628 on S3 x Th."""
        total = None
        for s3_row, th_name in S3_PARTS:
            part = outer_tensor(self.s3_th, self.s3.row(s3_row), self.th_characters[th_name])
            total = part if total is None else total + part
        return total

    # -------------------------
    # Groups
    # -------------------------
    def _chain(self, path: Path) -> StabilizerChain:
        degree, gens = load_gens(path)
        return build_chain(gens, degree)

    @cached_property
    def a5(self) -> StabilizerChain:
        return self._chain(self.files.path("a5.gens"))

    @cached_property
    def psl28(self) -> StabilizerChain:
        return self._chain(self.files.path("psl28.gens"))

    @cached_property
    def psu38(self) -> StabilizerChain:
        chain = self._chain(self.files.psu38)
        logger.info("PSU3(8) generators: order %d", chain.order())
        return chain

    @cached_property
    def psu38_c9(self):
        rng = random.Random(self.seed)
        if self.files.psu38_c9 is not None:
            _, gens = load_gens(self.files.psu38_c9)
            return subgroup_chain(gens, self.psu38.degree, self.psu38.base)
        x = find_element_of_order(self.psu38, 9, rng)
        return subgroup_chain([x], self.psu38.degree, self.psu38.base)

    def require_psu38(self, step_id: str) -> Optional[Step]:
        if self.files.psu38 is None:
            return _skipped(step_id, "no PSU3(8) generators in the data directory")
        return None


# -------------------------
# R: the 196883 character on S3 x Th
# -------------------------
def step_r1(ctx: VerificationContext) -> Step:
    degrees = {name: _exact(f.degree()) for name, f in ctx.th_characters.items()}
    total = _exact(ctx.monster_character.degree())
    ok = all(degrees[name] == int(name) for name in degrees) and total == MONSTER_DEGREE
    return _step(
        "R1",
        ok,
        [f"{name} = {' + '.join(TH_CONSTITUENTS[name])} has degree {degrees[name]}" for name in degrees]
        + [f"2*{degrees['65628']} + {degrees['34999']} + {degrees['30628']} = {total}"],
    )


def step_r2(ctx: VerificationContext) -> Step:
    witnesses = []
    ok = True
    for name, expected in VALUES_ON_2A_7A.items():
        f = ctx.th_characters[name]
        got = (_exact(value_on(f, "2A")), _exact(value_on(f, "7A")))
        if got != expected:
            ok = False
            rows = ", ".join(
                f"{p} -> ({value_on(ctx.th.row(p), '2A')}, {value_on(ctx.th.row(p), '7A')})"
                for p in TH_CONSTITUENTS[name]
            )
            witnesses.append(
                f"{name}: values on (2A, 7A) are ({got[0]}, {got[1]}), expected {expected}; rows {rows}"
            )
        else:
            witnesses.append(f"{name}: 2A -> {got[0]}, 7A -> {got[1]}")
    return _step("R2", ok, witnesses)


def step_r3(ctx: VerificationContext) -> Step:
    if ctx.th.partial:
        return _skipped("R3", "partial-table: decomposition needs the full Th table; R2 stands as the check")
    witnesses = []
    ok = True
    for name, parts in TH_CONSTITUENTS.items():
        d = decompose(ctx.th, ctx.th_characters[name])
        got = d.as_dict()
        expected = {p: 1 for p in parts}
        if not d.ok or got != expected:
            ok = False
        witnesses.append(f"{name} = {d}")
    return _step("R3", ok, witnesses)


def step_r4(ctx: VerificationContext) -> Step:
    chi = ctx.monster_character
    inner = tuple(_exact(chi[product_label("1A", c)]) for c in NINE_CLASSES)
    diagonal = tuple(_exact(chi[product_label("3A", c)]) for c in NINE_CLASSES)
    ok = inner == INNER_VALUES and diagonal == DIAGONAL_VALUES and all(a != b for a, b in zip(inner, diagonal))
    witnesses = [
        f"Th-{c}: inner {a}, diagonal {b}{'' if a != b else ' (equal!)'}"
        for c, a, b in zip(NINE_CLASSES, inner, diagonal)
    ]
    return _step("R4", ok, witnesses)


# -------------------------
# C: arithmetic
# -------------------------
def step_c1(ctx: VerificationContext) -> Step:
    order = 3 ** 7 * PSU4_2_ORDER
    quotient = 3 ** 5 * OMEGA5_3_ORDER
    return _step(
        "C1",
        order == 56_687_040,
        [
            f"3^7 * {PSU4_2_ORDER} = {order:,}",
            f"factorization {factorint(order)}",
            f"informational: |C(9)/9| = 3^5 * |Omega5(3)| = {quotient:,}",
        ],
    )


def step_c2(ctx: VerificationContext) -> Step:
    bound, at_least = min_centralizer_bound(SYMMETRY_ORDER, C2_CLASS_SIZE)
    side = 3 ** 7 * 2 * A6_ORDER
    return _step(
        "C2",
        bound * C2_CLASS_SIZE == SYMMETRY_ORDER and at_least >= MIN_ORDER,
        [
            f"symmetry group order 9 * 1080 = {SYMMETRY_ORDER}",
            f"{SYMMETRY_ORDER}/{C2_CLASS_SIZE} = {bound}",
            f"integer bound {at_least}",
            f"informational: |(9x3).3^4.(2xA6)| = 3^7 * 720 = {side:,}",
        ],
    )


# -------------------------
# P: A5 lattice
# -------------------------
def step_p1(ctx: VerificationContext) -> Step:
    subgroups = all_subgroups(ctx.a5)
    n = ctx.a5.order()
    proper = max(s.order() for s in subgroups if s.order() < n)
    large = [s.order() for s in subgroups if s.order() >= MIN_ORDER]
    return _step(
        "P1",
        n == 60 and proper < MIN_ORDER and large == [n],
        [f"{len(subgroups)} subgroups of A5", f"largest proper subgroup order {proper}", f"orders >= {MIN_ORDER}: {large}"],
    )


# -------------------------
# U: PSU3(8)
# -------------------------
def step_u1(ctx: VerificationContext) -> Step:
    if skip := ctx.require_psu38("U1"):
        return skip
    G = ctx.psu38
    witnesses = [f"order {G.order():,} = {factorint(G.order())}"]
    ok = G.order() == PSU38_ORDER

    rng = random.Random(ctx.seed)
    for i in range(NORMAL_CLOSURE_PROBES):
        g = G.random_element(rng)
        if g.is_identity():
            continue
        closure_order = normal_closure(G, [g]).order()
        ok = ok and closure_order == G.order()
        witnesses.append(f"normal closure probe {i + 1}: element of order {g.order()} -> order {closure_order:,}")

    census = c9_conjugacy_census(G, seed=ctx.seed, budget=ctx.budget)
    ok = ok and census.verdict == "all conjugate" and census.sylow_order == 81
    witnesses.append(f"Sylow 3-subgroup of order {census.sylow_order} holds {census.c9_count} cyclic subgroups of order 9")
    witnesses.append(f"verdict: {census.verdict}")
    witnesses.extend(census.witnesses)
    return _step("U1", ok, witnesses)


def step_u2(ctx: VerificationContext) -> Step:
    witnesses = []
    ok = True
    if ctx.files.c9xc3 is not None:
        standalone = subgroup_census(ctx._chain(ctx.files.c9xc3))
        ok = (standalone.c9_count, standalone.c3_count, standalone.complement_count) == (3, 4, 3)
        witnesses.append(
            f"C9 x C3: {standalone.c9_count} C9, {standalone.c3_count} C3, {standalone.complement_count} complements"
        )
    if ctx.files.psu38 is None:
        if not witnesses:
            return _skipped("U2", "no PSU3(8) generators and no C9 x C3 generators in the data directory")
        witnesses.append("PSU3(8) torus skipped: no generators")
        return _step("U2", ok, witnesses)

    x = next(g for g in ctx.psu38_c9.sorted_elements() if g.order() == 9)
    report = torus_census(ctx.psu38, x, budget=ctx.budget)
    ok = ok and (
        report.torus_order == 27
        and report.c9_count == 3
        and report.complement_count == 3
        and report.normalizer_order == 162
        and report.c9_action_order == 6
        and report.complement_action_order == 6
    )
    witnesses.extend(
        [
            f"T = C(x) has order {report.torus_order}: {report.c9_count} C9, {report.c3_count} C3, "
            f"{report.complement_count} complements",
            f"N(T) has order {report.normalizer_order}",
            f"N(T) acts on the C9s as a group of order {report.c9_action_order}",
            f"N(T) acts on the complements as a group of order {report.complement_action_order}",
        ]
    )
    return _step("U2", ok, witnesses)


def step_u3(ctx: VerificationContext) -> Step:
    if skip := ctx.require_psu38("U3"):
        return skip
    report = d18_extension_census(ctx.psu38, ctx.psu38_c9, budget=ctx.budget)
    return _step(
        "U3",
        report.count == 1,
        [
            f"N(C9) has order {report.normalizer_order}",
            f"{report.involution_count} involutions invert the generator",
            f"{report.d18_count} D18 subgroups, {report.count} up to conjugacy",
        ]
        + report.witnesses,
    )


def step_u4(ctx: VerificationContext) -> Step:
    if skip := ctx.require_psu38("U4"):
        return skip
    if ctx.files.psu38_sub is None or ctx.files.psu38_ext is None:
        return _skipped("U4", "no 3 x PSL2(8) or extender generators in the data directory")
    _, sub = load_gens(ctx.files.psu38_sub)
    _, ext = load_gens(ctx.files.psu38_ext)
    if len(ext) != 1:
        raise UsageError(f"{ctx.files.psu38_ext}: expected exactly one extending element")
    report = generation_check(ctx.psu38, sub, ext[0])
    return _step(
        "U4",
        report.full_group and report.extender_is_involution,
        [
            f"subgroup order {report.subgroup_order}, central element of order 3 present",
            f"extender is an involution: {report.extender_is_involution}",
            f"extender normalizes a 9x3 of the subgroup: {report.extender_normalizes_torus}",
            f"<subgroup, extender> has order {report.closure_order:,} of {report.group_order:,}",
        ],
    )


# -------------------------
# F, S: PSL2(8)
# -------------------------
def step_f1(ctx: VerificationContext) -> Step:
    report = fusion_prerequisites_psl28(ctx.psl28, seed=ctx.seed)
    return _step(
        "F1",
        report.group_order == PSL28_ORDER and report.ok,
        [
            f"order {report.group_order}",
            f"elements of order 9: {report.has_order_9}",
            f"involution class sizes: {report.involution_class_sizes}",
            f"Sylow 2-subgroup of order {report.sylow2_order}, elementary abelian: {report.elementary_abelian_2_cubed}",
        ]
        + [f"involution {s}" for s in report.involutions],
    )


def step_s1(ctx: VerificationContext) -> Step:
    if ctx.files.psl28_table is None:
        return _skipped("S1", "no PSL2(8) character table in the data directory")
    table = load_table(ctx.files.psl28_table)
    classes = match_classes(ctx.psl28, conjugacy_classes(ctx.psl28), table)
    witnesses = []
    ok = True
    for c3 in ("7A", "7B", "7C"):
        expected = cmc(table, "2A", "3A", c3)
        counted = count_products(ctx.psl28, classes["2A"], classes["3A"], classes[c3])
        ok = ok and expected == counted
        witnesses.append(f"(2A, 3A, {c3}): table {expected}, pairs counted {counted}")
    return _step("S1", ok, witnesses)


# -------------------------
# A: imported facts
# -------------------------
def step_a1(ctx: VerificationContext) -> Step:
    return _assumed("A1", "the published classification of PSL2(8) x 3 subgroups of the Monster")


def step_a2(ctx: VerificationContext) -> Step:
    return _assumed("A2", "the maximal subgroups of the Baby Monster")


def step_a3(ctx: VerificationContext) -> Step:
    return _assumed("A3", "the ATLAS structure of the Monster")


def step_a4(ctx: VerificationContext) -> Step:
    return _assumed("A4", "the literature on the 3^(1+12) local subgroup")


STEPS: Dict[str, Callable[[VerificationContext], Step]] = {
    "R1": step_r1,
    "R2": step_r2,
    "R3": step_r3,
    "R4": step_r4,
    "C1": step_c1,
    "C2": step_c2,
    "P1": step_p1,
    "U1": step_u1,
    "U2": step_u2,
    "U3": step_u3,
    "U4": step_u4,
    "F1": step_f1,
    "S1": step_s1,
    "A1": step_a1,
    "A2": step_a2,
    "A3": step_a3,
    "A4": step_a4,
}


def run_verification(
    data_dir: Union[str, Path],
    seed: int = DEFAULT_SEED,
    budget: int = DEFAULT_BUDGET,
    only: Optional[Iterable[str]] = None,
) -> ClaimReport:
    files = locate_data(data_dir)
    wanted = list(STEP_ORDER)
    if only is not None:
        only = [s.strip().upper() for s in only if s.strip()]
        unknown = [s for s in only if s not in STEPS]
        if unknown:
            raise UsageError(f"unknown step id(s): {', '.join(unknown)}")
        wanted = [s for s in STEP_ORDER if s in only]

    ctx = VerificationContext(files, seed, budget)
    report = ClaimReport(seed=seed, budget=budget)
    total = len(wanted)
    for i, step_id in enumerate(wanted, 1):
        logger.info("[%d/%d] %s: %s", i, total, step_id, CLAIMS[step_id])
        try:
            step = STEPS[step_id](ctx)
        except MathError as e:
            step = _step(step_id, False, [f"{type(e).__name__}: {e}"])
        report.steps.append(step)
        logger.info("[%s] %s", step.status.value.upper(), step_id)
    return report
