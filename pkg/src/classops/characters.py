"""
Class-function algebra over a character table.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.errors import NotRationalError, TableMismatchError
from src.exact.cyclotomic import Cyclotomic, cyc_sum
from src.tables.model import CharacterTable, ClassFunction, FusionMap, same_table, sum_functions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    parts: Tuple[Tuple[str, int], ...]
    remainder: ClassFunction
    multiplicities: Tuple[Tuple[str, Optional[Fraction]], ...]
    ok: bool

    def as_dict(self) -> Dict[str, int]:
        return dict(self.parts)

    def failures(self) -> List[str]:
        out = []
        for name, m in self.multiplicities:
            if m is None:
                out.append(f"{name}: irrational multiplicity")
            elif m < 0 or m.denominator != 1:
                out.append(f"{name}: multiplicity {m}")
        if not self.remainder.is_zero():
            out.append(f"remainder {self.remainder}")
        return out

    def __str__(self) -> str:
        body = " + ".join(name if m == 1 else f"{m}*{name}" for name, m in self.parts) or "0"
        return body if self.ok else f"{body} (failed: {'; '.join(self.failures())})"


def _check_on(t: CharacterTable, f: ClassFunction) -> None:
    if not same_table(t, f.table):
        raise TableMismatchError(f"class function lives on {f.table.name}, not {t.name}")


def inner_product(t: CharacterTable, f: ClassFunction, g: ClassFunction) -> Fraction:
    """(1/|G|) * sum over classes of |class| * f(c) * conj(g(c))."""
    t.require_full("inner product")
    _check_on(t, f)
    _check_on(t, g)
    total = cyc_sum(
        (a * b.conj()).scale(size) for a, b, size in zip(f.values, g.values, t.class_sizes())
    )
    return (total / t.group_order).to_rational()


def decompose(t: CharacterTable, f: ClassFunction) -> Decomposition:
    t.require_full("decompose")
    _check_on(t, f)
    mults: List[Tuple[str, Optional[Fraction]]] = []
    for name, chi in zip(t.irreducible_names, t.rows()):
        try:
            mults.append((name, inner_product(t, f, chi)))
        except NotRationalError:
            mults.append((name, None))

    parts = tuple((name, int(m)) for name, m in mults if m is not None and m > 0 and m.denominator == 1)
    rebuilt = sum_functions(t, [t.row(name) * m for name, m in parts]) if parts else t.zero()
    remainder = f - rebuilt
    ok = all(m is not None and m >= 0 and m.denominator == 1 for _, m in mults) and remainder.is_zero()
    if not ok:
        logger.info("decomposition on %s failed: %s", t.name, mults)
    return Decomposition(parts=parts, remainder=remainder, multiplicities=tuple(mults), ok=ok)


def tensor(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    if not same_table(f.table, g.table):
        raise TableMismatchError(f"tensor of functions on {f.table.name} and {g.table.name}")
    return ClassFunction(f.table, tuple(a * b for a, b in zip(f.values, g.values)))


def restrict(fu: FusionMap, f: ClassFunction) -> ClassFunction:
    if not same_table(fu.target, f.table):
        raise TableMismatchError(f"class function lives on {f.table.name}, fusion targets {fu.target.name}")
    return ClassFunction(fu.source, tuple(f.values[j] for j in fu.map))


def value_on(f: ClassFunction, label: str) -> Cyclotomic:
    return f.values[f.table.class_index(label)]


def class_of_power(t: CharacterTable, label: str, n: int) -> str:
    return t.classes[t.power_index(t.class_index(label), n)].label


def sum_rows(t: CharacterTable, names: Sequence[str]) -> ClassFunction:
    """Sum of named irreducible rows; works on PARTIAL tables."""
    return sum_functions(t, [t.row(name) for name in names])
