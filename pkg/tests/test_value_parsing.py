from fractions import Fraction

import pytest

from src.errors import ValueSyntaxError
from src.exact import Cyclotomic, E, cyc_parse, parse_row


@pytest.mark.parametrize(
    "text, expected",
    [
        ("5", Cyclotomic.rational(5)),
        ("-3/2", Cyclotomic.rational(Fraction(-3, 2))),
        ("E(3)+E(3)^2", Cyclotomic.rational(-1)),
        ("2*E(9)^4-E(9)^5", E(9, 4) * 2 - E(9, 5)),
        ("-E(5)-E(5)^4", -E(5) - E(5, 4)),
        ("1+E(4)", E(4) + 1),
        ("E(9)^12", E(3)),
    ],
)
def test_parse_values(text, expected):
    assert cyc_parse(text) == expected


def test_str_output_parses_back():
    for value in (E(9, 2) * 3 - Fraction(1, 2), -E(5) - E(5, 4), E(7) + E(7, 2) + E(7, 4)):
        assert cyc_parse(str(value)) == value


@pytest.mark.parametrize("text", ["", "E(3", "2*", "1/0", "E(0)", "E(3) + 1", "3**E(4)", "x"])
def test_malformed_values_rejected(text):
    with pytest.raises(ValueSyntaxError):
        cyc_parse(text)


def test_parse_row_splits_on_whitespace():
    row = parse_row("3 -1 0 -E(5)-E(5)^4 -E(5)^2-E(5)^3")
    assert len(row) == 5
    assert row[0] == Cyclotomic.rational(3)
    assert row[3] + row[4] == Cyclotomic.rational(1)
