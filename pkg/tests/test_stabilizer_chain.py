import random

import pytest

from src.errors import ResourceLimitError
from src.permgrp import Permutation, build_chain, contains, group_order, random_element


@pytest.mark.parametrize(
    "chain, order",
    [("s3_chain", 6), ("a5_chain", 60), ("d18_chain", 18), ("c9xc3_chain", 27), ("psl28_chain", 504)],
)
def test_orders(chain, order, request):
    assert group_order(request.getfixturevalue(chain)) == order


def test_symmetric_group_s6():
    gens = [Permutation.parse("(1,2,3,4,5,6)", 6), Permutation.parse("(1,2)", 6)]
    assert build_chain(gens).order() == 720


def test_membership(a5_chain):
    assert contains(a5_chain, Permutation.parse("(1,2)(3,4)", 5))
    assert not contains(a5_chain, Permutation.parse("(1,2)", 5))
    assert Permutation.parse("(1,5,2)", 5) in a5_chain


def test_elements_are_distinct_and_closed(d18_chain):
    elements = d18_chain.sorted_elements()
    assert len(elements) == 18
    assert len(set(elements)) == 18
    assert elements[0].is_identity()
    s = set(elements)
    assert all(a * b in s for a in elements for b in elements)


def test_element_limit(psl28_chain):
    with pytest.raises(ResourceLimitError):
        list(psl28_chain.elements(limit=100))


def test_random_elements_lie_in_group(psl28_chain):
    rng = random.Random(7)
    for _ in range(20):
        assert psl28_chain.contains(random_element(psl28_chain, rng))


def test_random_elements_are_reproducible(a5_chain):
    a = [random_element(a5_chain, random.Random(3)) for _ in range(5)]
    b = [random_element(a5_chain, random.Random(3)) for _ in range(5)]
    assert a == b


def test_orbits(a5_chain, c9xc3_chain):
    assert sorted(a5_chain.orbit(0)) == [0, 1, 2, 3, 4]
    assert sorted(c9xc3_chain.orbit(10)) == [9, 10, 11]


def test_base_prefix_keeps_group(psl28_chain):
    rebuilt = psl28_chain.with_base_prefix([4, 2])
    assert rebuilt.base[:2] == (4, 2)
    assert rebuilt.order() == 504
    assert all(rebuilt.contains(g) for g in psl28_chain.generators)


def test_trivial_group():
    chain = build_chain([Permutation.identity(4)], 4)
    assert chain.order() == 1
    assert chain.is_trivial()


@pytest.mark.slow
def test_psu38_order(psu38_chain):
    assert psu38_chain.order() == 5_515_776
    assert psu38_chain.degree == 513
