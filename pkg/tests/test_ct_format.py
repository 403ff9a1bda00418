import pytest

from src.errors import (
    CtSyntaxError,
    DuplicateLabelError,
    FusionError,
    MissingHeaderError,
    RowLengthError,
    TableMismatchError,
    UnknownLabelError,
)
from src.exact import E
from src.tables import parse_fusion, parse_table, serialize_fusion, serialize_table

S3_TEXT = """\
# S3
GROUP S3
ORDER 6
CLASSES 3
CLASS 1A ORDER=1 CENT=6
CLASS 2A ORDER=2 CENT=2
CLASS 3A ORDER=3 CENT=3
POWERMAP 2 : 1A->1A, 2A->1A, 3A->3A
POWERMAP 3 : 1A->1A, 2A->2A, 3A->1A
IRR 1+ : 1 1 1
IRR 1- : 1 -1 1
IRR 2 : 2 0 -1
"""


def test_parse_s3():
    t = parse_table(S3_TEXT)
    assert t.name == "S3"
    assert t.group_order == 6
    assert t.labels == ("1A", "2A", "3A")
    assert t.class_sizes() == [1, 3, 2]
    assert t.irreducible_names == ("1+", "1-", "2")
    assert t.power_maps[2] == (0, 0, 2)
    assert not t.partial


def test_serialized_table_parses_to_equal_table(s3_table, a5_table, th_partial):
    for t in (s3_table, a5_table, th_partial):
        assert parse_table(serialize_table(t)) == t


def test_partial_flag(th_partial):
    assert th_partial.partial
    assert th_partial.labels == ("1A", "2A", "7A", "9A", "9B", "9C")
    assert "PARTIAL" in serialize_table(th_partial)


def test_cyclotomic_rows(a5_table):
    row = a5_table.row("3a")
    assert row["5A"] == -E(5) - E(5, 4)
    assert row["5A"] + row["5B"] == 1


def test_inverse_class(psl28_table, a5_table, c3_table):
    assert psl28_table.inverse_class("9A") == "9A"
    assert psl28_table.inverse_class("7B") == "7B"
    assert a5_table.inverse_class("5A") == "5A"
    assert a5_table.inverse_class("2A") == "2A"
    # C3 stores no 2-power map, so 3A^2 cannot be followed
    assert c3_table.inverse_class("3A") is None


def test_missing_header():
    with pytest.raises(MissingHeaderError):
        parse_table(S3_TEXT.replace("ORDER 6\n", ""))


def test_duplicate_label_names_line():
    text = S3_TEXT.replace("CLASS 3A ORDER=3", "CLASS 2A ORDER=3")
    with pytest.raises(DuplicateLabelError, match="line 7"):
        parse_table(text)


def test_row_length_mismatch():
    with pytest.raises(RowLengthError, match="row-length-mismatch"):
        parse_table(S3_TEXT.replace("IRR 2 : 2 0 -1", "IRR 2 : 2 0"))


def test_bad_value_reports_line():
    with pytest.raises(CtSyntaxError, match="line 12"):
        parse_table(S3_TEXT.replace("IRR 2 : 2 0 -1", "IRR 2 : 2 0 E(3"))


def test_class_count_mismatch():
    with pytest.raises(CtSyntaxError):
        parse_table(S3_TEXT.replace("CLASSES 3", "CLASSES 4"))


def test_power_map_must_cover_every_class():
    with pytest.raises(CtSyntaxError, match="does not map 3A"):
        parse_table(S3_TEXT.replace(", 3A->3A\n", "\n"))


def test_power_map_prime_only():
    with pytest.raises(CtSyntaxError, match="not a prime"):
        parse_table(S3_TEXT.replace("POWERMAP 3", "POWERMAP 4"))


def test_unknown_line():
    with pytest.raises(CtSyntaxError):
        parse_table(S3_TEXT + "CHARACTER 1 : 1 1 1\n")


def test_fusion_parse(c9_d18_fusion):
    assert c9_d18_fusion.image("9D") == "9C"
    assert c9_d18_fusion.image("3B") == "3A"
    assert dict(c9_d18_fusion.pairs())["9F"] == "9A"


def test_fusion_serialized_form(c9_d18_fusion, c9_table, d18_table):
    again = parse_fusion(serialize_fusion(c9_d18_fusion), c9_table, d18_table)
    assert again.map == c9_d18_fusion.map


def test_fusion_header_must_name_tables(s3_table, a5_table):
    with pytest.raises(TableMismatchError):
        parse_fusion("FUSION S3 -> A6\n1A -> 1A\n", s3_table, a5_table)


def test_fusion_unknown_label(s3_table, a5_table):
    with pytest.raises(UnknownLabelError, match="line 2"):
        parse_fusion("FUSION S3 -> A5\n1A -> 1B\n2A -> 2A\n3A -> 3A\n", s3_table, a5_table)


def test_fusion_unmapped_class(s3_table, a5_table):
    with pytest.raises(FusionError, match="unmapped class: 3A"):
        parse_fusion("FUSION S3 -> A5\n1A -> 1A\n2A -> 2A\n", s3_table, a5_table)


def test_fusion_order_mismatch(s3_table, a5_table):
    with pytest.raises(FusionError, match="order-mismatch"):
        parse_fusion("FUSION S3 -> A5\n1A -> 1A\n2A -> 3A\n3A -> 3A\n", s3_table, a5_table)
