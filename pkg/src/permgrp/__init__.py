from src.permgrp.backtrack import SearchBudget, centralizer, is_conjugate, normalizer
from src.permgrp.census import (
    c9_conjugacy_census,
    d18_extension_census,
    fusion_prerequisites_psl28,
    generation_check,
    subgroup_census,
    torus_census,
)
from src.permgrp.classes import ConjClassData, conjugacy_classes, count_products, match_classes
from src.permgrp.gens_format import format_gens, load_gens, parse_gens
from src.permgrp.permutation import Permutation
from src.permgrp.stabilizer_chain import StabilizerChain, build_chain, contains, group_order, random_element
from src.permgrp.subgroups import (
    all_subgroups,
    find_element_of_order,
    normal_closure,
    sylow3_by_ascent,
    sylow_by_ascent,
)

__all__ = [
    "ConjClassData",
    "Permutation",
    "SearchBudget",
    "StabilizerChain",
    "all_subgroups",
    "build_chain",
    "c9_conjugacy_census",
    "centralizer",
    "conjugacy_classes",
    "contains",
    "count_products",
    "d18_extension_census",
    "find_element_of_order",
    "format_gens",
    "fusion_prerequisites_psl28",
    "generation_check",
    "group_order",
    "is_conjugate",
    "load_gens",
    "match_classes",
    "normal_closure",
    "normalizer",
    "parse_gens",
    "random_element",
    "subgroup_census",
    "sylow3_by_ascent",
    "sylow_by_ascent",
    "torus_census",
]
