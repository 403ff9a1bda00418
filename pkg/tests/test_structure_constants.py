from fractions import Fraction

import pytest

from src.classops import cmc, min_centralizer_bound
from src.errors import PartialTableError, UnknownLabelError, UsageError, ZeroClassSizeError


def test_s3_constants(s3_table):
    assert cmc(s3_table, "2A", "2A", "3A") == 3
    assert cmc(s3_table, "2A", "2A", "1A") == 3
    assert cmc(s3_table, "3A", "3A", "3A") == 1
    assert cmc(s3_table, "2A", "3A", "3A") == 0


def test_a5_constants(a5_table):
    # (2,3,5)-generation of A5
    assert cmc(a5_table, "2A", "3A", "5A") == 5
    assert cmc(a5_table, "2A", "3A", "5B") == 5


def test_psl28_constants_are_galois_invariant(psl28_table):
    values = {cmc(psl28_table, "2A", "3A", c) for c in ("7A", "7B", "7C")}
    assert len(values) == 1


def test_cmc_needs_full_table(th_partial):
    with pytest.raises(PartialTableError):
        cmc(th_partial, "2A", "2A", "9A")


def test_cmc_unknown_label(s3_table):
    with pytest.raises(UnknownLabelError):
        cmc(s3_table, "2A", "2B", "3A")


def test_min_centralizer_bound():
    assert min_centralizer_bound(9720, 729) == (Fraction(40, 3), 14)
    assert min_centralizer_bound(60, 12) == (Fraction(5), 5)
    with pytest.raises(ZeroClassSizeError):
        min_centralizer_bound(9720, 0)
    with pytest.raises(UsageError):
        min_centralizer_bound(9720, -3)
    with pytest.raises(UsageError):
        min_centralizer_bound(-9720, 729)
