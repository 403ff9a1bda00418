from collections import Counter
from itertools import product

import pytest

from src.classops import cmc
from src.errors import FusionError
from src.permgrp import conjugacy_classes, count_products, match_classes
from src.tables import load_table


def test_a5_classes(a5_chain):
    classes = conjugacy_classes(a5_chain)
    assert sorted(c.size for c in classes) == [1, 12, 12, 15, 20]
    assert sum(c.size for c in classes) == 60
    assert all(c.size * c.centralizer_order == 60 for c in classes)
    assert classes[0].representative.is_identity()


def test_psl28_classes(psl28_chain):
    classes = conjugacy_classes(psl28_chain)
    assert len(classes) == 9
    assert sorted(c.element_order for c in classes) == [1, 2, 3, 7, 7, 7, 9, 9, 9]
    sizes = Counter(c.size for c in classes)
    assert sizes[56] == 4 and sizes[72] == 3 and sizes[63] == 1


def test_abelian_group_has_singleton_classes(c9xc3_chain):
    classes = conjugacy_classes(c9xc3_chain)
    assert len(classes) == 27
    assert {c.size for c in classes} == {1}


def test_classes_are_sorted_canonically(d18_chain):
    classes = conjugacy_classes(d18_chain)
    keys = [(c.element_order, c.size, c.representative) for c in classes]
    assert keys == sorted(keys)


def test_match_respects_power_maps(d18_chain, d18_table):
    labelled = match_classes(d18_chain, conjugacy_classes(d18_chain), d18_table)
    assert set(labelled) == set(d18_table.labels)
    a = labelled["9A"].representative
    assert (a ** 2) in labelled["9B"].elements
    assert (a ** 3) in labelled["3A"].elements


def test_match_abelian(c9xc3_chain, data_dir):
    table = load_table(data_dir / "c9xc3.ct")
    labelled = match_classes(c9xc3_chain, conjugacy_classes(c9xc3_chain), table)
    assert len(labelled) == 27
    assert len({c.representative for c in labelled.values()}) == 27


def test_match_rejects_wrong_table(a5_chain, psl28_table):
    with pytest.raises(FusionError):
        match_classes(a5_chain, conjugacy_classes(a5_chain), psl28_table)


@pytest.mark.parametrize(
    "chain_name, table_name",
    [("s3_chain", "s3_table"), ("d18_chain", "d18_table"), ("a5_chain", "a5_table")],
)
def test_structure_constants_count_pairs(chain_name, table_name, request):
    chain = request.getfixturevalue(chain_name)
    table = request.getfixturevalue(table_name)
    labelled = match_classes(chain, conjugacy_classes(chain), table)
    for c1, c2, c3 in product(table.labels, repeat=3):
        assert cmc(table, c1, c2, c3) == count_products(chain, labelled[c1], labelled[c2], labelled[c3]), (c1, c2, c3)


def test_psl28_structure_constants(psl28_chain, psl28_table):
    labelled = match_classes(psl28_chain, conjugacy_classes(psl28_chain), psl28_table)
    for c3 in ("7A", "7B", "7C"):
        expected = cmc(psl28_table, "2A", "3A", c3)
        assert expected == count_products(psl28_chain, labelled["2A"], labelled["3A"], labelled[c3])
