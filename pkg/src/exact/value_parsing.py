from __future__ import annotations

from fractions import Fraction
from typing import Dict, List

import pyparsing as pp

from src.errors import ValueSyntaxError
from src.exact.cyclotomic import Cyclotomic, cyc_sum

# value    := term (('+'|'-') term)*
# term     := rational | [rational '*'] 'E(' int ')' ['^' int]
# rational := int | int '/' int
_INT = pp.Word(pp.nums)
_SIGN = pp.one_of("+ -")
_RATIONAL = pp.Combine(_INT + pp.Optional("/" + _INT))
_ROOT = pp.Group(
    pp.Suppress("E(")
    + _INT
    + pp.Suppress(")")
    + pp.Optional(pp.Suppress("^") + pp.Combine(pp.Optional("-") + _INT))
)
_ROOT_TERM = pp.Group(pp.Optional(_RATIONAL + pp.Suppress("*"), default="1") + _ROOT)
_RATIONAL_TERM = pp.Group(_RATIONAL)
_TERM = _ROOT_TERM | _RATIONAL_TERM
VALUE = (pp.Optional(_SIGN, default="+") + _TERM + pp.ZeroOrMore(_SIGN + _TERM)).leave_whitespace()


def _to_fraction(token: str, text: str) -> Fraction:
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueSyntaxError("zero denominator", text, text.find(token))
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def cyc_parse(text: str) -> Cyclotomic:
    """
    Parse one value of the table grammar, e.g. "5", "-3/2", "E(3)+E(3)^2",
    "2*E(9)^4-E(9)^5". No whitespace is allowed inside a value.
    """
    try:
        tokens = VALUE.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise ValueSyntaxError("malformed cyclotomic value", text, e.loc) from e

    rational = Fraction(0)
    by_order: Dict[int, Dict[int, Fraction]] = {}
    items = list(tokens)
    for sign, term in zip(items[0::2], items[1::2]):
        factor = -1 if sign == "-" else 1
        if len(term) == 1:
            rational += factor * _to_fraction(term[0], text)
            continue
        coeff = factor * _to_fraction(term[0], text)
        root = term[1]
        n = int(root[0])
        if n == 0:
            raise ValueSyntaxError("root of unity order must be positive", text, text.find("E(0)"))
        e = int(root[1]) if len(root) > 1 else 1
        exps = by_order.setdefault(n, {})
        exps[e % n] = exps.get(e % n, Fraction(0)) + coeff

    parts: List[Cyclotomic] = [Cyclotomic.from_exponents(n, exps) for n, exps in sorted(by_order.items())]
    return cyc_sum([Cyclotomic.rational(rational), *parts])


def split_values(text: str) -> List[str]:
    """Whitespace separated value tokens of one table row."""
    return text.split()


def parse_row(text: str) -> List[Cyclotomic]:
    return [cyc_parse(tok) for tok in split_values(text)]
