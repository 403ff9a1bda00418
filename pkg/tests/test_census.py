import pytest

from src.errors import SubgroupOrderMismatch, UsageError
from src.permgrp import (
    Permutation,
    c9_conjugacy_census,
    d18_extension_census,
    find_element_of_order,
    fusion_prerequisites_psl28,
    generation_check,
    load_gens,
    subgroup_census,
    torus_census,
)
from src.permgrp.subgroups import subgroup_chain

NINE_CYCLE = "(1,2,3,4,5,6,7,8,9)"


def _c9(chain, text=NINE_CYCLE):
    return subgroup_chain([Permutation.parse(text, chain.degree)], chain.degree)


def test_c9xc3_census(c9xc3_chain):
    report = subgroup_census(c9xc3_chain)
    assert (report.c9_count, report.c3_count, report.complement_count) == (3, 4, 3)
    assert report.group_order == 27
    assert len(report.witnesses) == 3


def test_c9_census_psl28(psl28_chain):
    report = c9_conjugacy_census(psl28_chain)
    assert report.verdict == "all conjugate"
    assert report.sylow_order == 9
    assert report.c9_count == 1


def test_c9_census_abelian(c9xc3_chain):
    report = c9_conjugacy_census(c9xc3_chain)
    assert report.verdict == "3 classes"
    assert report.c9_count == 3
    assert report.class_count == 3


def test_c9_census_without_order_nine(a5_chain):
    report = c9_conjugacy_census(a5_chain)
    assert report.verdict == "no elements of order 9"
    assert report.as_dict()["c9_count"] == 0


def test_d18_census_in_d18(d18_chain):
    report = d18_extension_census(d18_chain, _c9(d18_chain))
    assert report.normalizer_order == 18
    assert report.involution_count == 9
    assert report.d18_count == 1
    assert report.count == 1


def test_d18_census_in_abelian_group(c9xc3_chain):
    report = d18_extension_census(c9xc3_chain, _c9(c9xc3_chain))
    assert report.normalizer_order == 27
    assert report.involution_count == 0
    assert report.count == 0


def test_d18_census_in_psl28(psl28_chain):
    x = find_element_of_order(psl28_chain, 9)
    report = d18_extension_census(psl28_chain, subgroup_chain([x], psl28_chain.degree))
    assert report.normalizer_order == 18
    assert report.count == 1


def test_d18_census_rejects_non_c9(d18_chain):
    with pytest.raises(UsageError):
        d18_extension_census(d18_chain, _c9(d18_chain, "(1,4,7)(2,5,8)(3,6,9)"))


def test_torus_census_of_abelian_group(c9xc3_chain):
    x = Permutation.parse(NINE_CYCLE, c9xc3_chain.degree)
    report = torus_census(c9xc3_chain, x)
    assert report.torus_order == 27
    assert (report.c9_count, report.c3_count, report.complement_count) == (3, 4, 3)
    assert report.normalizer_order == 27
    assert report.c9_action_order == 1


def test_torus_census_needs_order_nine(c9xc3_chain):
    with pytest.raises(UsageError):
        torus_census(c9xc3_chain, c9xc3_chain.generators[1])


def test_psl28_fusion_prerequisites(psl28_chain):
    report = fusion_prerequisites_psl28(psl28_chain)
    assert report.ok
    assert report.has_order_9
    assert report.involution_class_sizes == [63]
    assert report.sylow2_order == 8
    assert len(report.involutions) == 7


def test_a5_lacks_prerequisites(a5_chain):
    report = fusion_prerequisites_psl28(a5_chain)
    assert not report.ok
    assert not report.has_order_9
    assert report.involution_class_sizes == [15]
    assert not report.elementary_abelian_2_cubed


def test_generation_needs_subgroup_of_order_1512(psl28_chain):
    with pytest.raises(SubgroupOrderMismatch, match="order 504"):
        generation_check(psl28_chain, list(psl28_chain.generators), psl28_chain.generators[0])


# -------------------------
# PSU3(8)
# -------------------------
@pytest.mark.slow
def test_psu38_c9_census(psu38_chain):
    report = c9_conjugacy_census(psu38_chain)
    assert report.verdict == "all conjugate"
    assert report.sylow_order == 81


@pytest.mark.slow
def test_psu38_torus(psu38_chain, data_dir):
    _, (x,) = load_gens(data_dir / "psu38_c9.gens")
    report = torus_census(psu38_chain, x)
    assert report.torus_order == 27
    assert (report.c9_count, report.complement_count) == (3, 3)
    assert report.normalizer_order == 162
    assert (report.c9_action_order, report.complement_action_order) == (6, 6)


@pytest.mark.slow
def test_psu38_d18(psu38_chain, data_dir):
    _, gens = load_gens(data_dir / "psu38_c9.gens")
    report = d18_extension_census(psu38_chain, subgroup_chain(gens, psu38_chain.degree))
    assert report.count == 1


@pytest.mark.slow
def test_psu38_generation(psu38_chain, data_dir):
    _, sub = load_gens(data_dir / "psu38_sub.gens")
    _, (ext,) = load_gens(data_dir / "psu38_ext.gens")
    report = generation_check(psu38_chain, sub, ext)
    assert report.subgroup_order == 1512
    assert report.extender_is_involution
    assert report.full_group
    assert report.closure_order == 5_515_776
