import pytest

from src.errors import PartialTableError, TableMismatchError
from src.tables import direct_product, outer_tensor, validate_table


def test_s3_x_s3(s3_table):
    t = direct_product(s3_table, s3_table)
    assert t.group_order == 36
    assert t.class_count == 9
    assert t.labels[:3] == ("1A,1A", "1A,2A", "1A,3A")
    assert t.classes[t.class_index("2A,3A")].element_order == 6
    assert t.classes[t.class_index("2A,3A")].centralizer_order == 6
    assert "2x1-" in t.irreducible_names
    assert validate_table(t).ok


def test_product_power_maps_act_componentwise(s3_table, c3_table):
    t = direct_product(s3_table, c3_table)
    pm = t.power_map(2)
    assert t.classes[pm[t.class_index("2A,3A")]].label == "1A,3B"


def test_product_with_partial_is_partial(s3_table, th_partial):
    t = direct_product(s3_table, th_partial)
    assert t.partial
    assert t.class_count == 18
    assert t.group_order == 6 * 90745943887872000
    with pytest.raises(PartialTableError):
        direct_product(s3_table, th_partial, accept_partial=False)


def test_outer_tensor(s3_table, a5_table):
    t = direct_product(s3_table, a5_table)
    f = outer_tensor(t, s3_table.row("2"), a5_table.row("4"))
    assert f.degree() == 8
    assert f["3A,3A"] == -1
    assert f["2A,5A"] == 0


def test_outer_tensor_needs_factors(s3_table, a5_table):
    t = direct_product(s3_table, a5_table)
    with pytest.raises(TableMismatchError):
        outer_tensor(t, a5_table.row("4"), s3_table.row("2"))
    with pytest.raises(TableMismatchError):
        outer_tensor(s3_table, s3_table.row("2"), s3_table.row("2"))
