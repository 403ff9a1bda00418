from src.exact.cyclotomic import (
    ONE,
    ZERO,
    Cyclotomic,
    E,
    Rational,
    canonicalize,
    cyc_arith,
    cyc_conj,
    cyc_sum,
    cyc_to_rational,
)
from src.exact.value_parsing import cyc_parse, parse_row

__all__ = [
    "ONE",
    "ZERO",
    "Cyclotomic",
    "E",
    "Rational",
    "canonicalize",
    "cyc_arith",
    "cyc_conj",
    "cyc_parse",
    "cyc_sum",
    "cyc_to_rational",
    "parse_row",
]
