from __future__ import annotations

import math
from fractions import Fraction
from typing import Tuple

from src.errors import CorruptTableError, NotRationalError, UsageError, ZeroClassSizeError
from src.exact.cyclotomic import cyc_sum
from src.tables.model import CharacterTable


def cmc(t: CharacterTable, c1: str, c2: str, c3: str) -> Fraction:
    """
    Class multiplication coefficient: the number of pairs (x, y) with x in c1,
    y in c2 and x*y = z for one fixed z in c3.
    """
    t.require_full("cmc")
    i, j, k = t.class_index(c1), t.class_index(c2), t.class_index(c3)
    one = t._identity_index()
    terms = []
    for _, row in t.irreducibles:
        terms.append(row[i] * row[j] * row[k].conj() / row[one])
    try:
        total = cyc_sum(terms).to_rational()
    except NotRationalError as e:
        raise CorruptTableError(f"cmc({c1}, {c2}, {c3}) on {t.name} is not rational") from e
    value = Fraction(t.class_size(i) * t.class_size(j), t.group_order) * total
    if value.denominator != 1 or value < 0:
        raise CorruptTableError(f"cmc({c1}, {c2}, {c3}) on {t.name} = {value} is not a non-negative integer")
    return value


def min_centralizer_bound(symmetry_order: int, class_size: int) -> Tuple[Fraction, int]:
    """
    A group of symmetries acting on a class of candidates: the stabilizer of a
    candidate has order at least symmetry_order / class_size.
    """
    if class_size == 0:
        raise ZeroClassSizeError("class size must be positive")
    if symmetry_order <= 0 or class_size < 0:
        raise UsageError("symmetry order and class size must be positive")
    bound = Fraction(symmetry_order, class_size)
    return bound, math.ceil(bound)
