from __future__ import annotations

import logging
from math import gcd
from typing import Dict, List, Tuple

from src.errors import MissingPowerMapError, PartialTableError, TableMismatchError
from src.tables.model import CharacterTable, ClassFunction, ClassInfo, same_table

logger = logging.getLogger(__name__)


def product_label(a: str, b: str) -> str:
    return f"{a},{b}"


def product_row_name(a: str, b: str) -> str:
    return f"{a}x{b}"


def direct_product(a: CharacterTable, b: CharacterTable, accept_partial: bool = True) -> CharacterTable:
    """
    Character table of A x B. Classes are pairs in left-factor-major order,
    rows are all outer tensor products, power maps act componentwise.
    """
    partial = a.partial or b.partial
    if partial and not accept_partial:
        raise PartialTableError(f"direct product of {a.name} and {b.name} would be PARTIAL")

    classes: List[ClassInfo] = []
    for ca in a.classes:
        for cb in b.classes:
            order = ca.element_order * cb.element_order // gcd(ca.element_order, cb.element_order)
            classes.append(
                ClassInfo(product_label(ca.label, cb.label), order, ca.centralizer_order * cb.centralizer_order)
            )

    kb = b.class_count
    power_maps: Dict[int, Tuple[int, ...]] = {}
    primes = sorted(set(a.primes()) | set(b.primes()))
    for p in primes:
        try:
            pa, pb = a.power_map(p), b.power_map(p)
        except MissingPowerMapError:
            logger.debug("product %s x %s: no %d-power map", a.name, b.name, p)
            continue
        power_maps[p] = tuple(pa[i] * kb + pb[j] for i in range(a.class_count) for j in range(kb))

    irreducibles = []
    for na, ra in a.irreducibles:
        for nb, rb in b.irreducibles:
            irreducibles.append((product_row_name(na, nb), tuple(x * y for x in ra for y in rb)))

    return CharacterTable(
        name=f"{a.name}x{b.name}",
        group_order=a.group_order * b.group_order,
        classes=tuple(classes),
        power_maps=power_maps,
        irreducibles=tuple(irreducibles),
        partial=partial,
        factors=(a, b),
    )


def outer_tensor(product: CharacterTable, f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """The class function (x, y) -> f(x) g(y) on a table built by direct_product."""
    if product.factors is None:
        raise TableMismatchError(f"table {product.name} is not a direct product")
    left, right = product.factors
    if not same_table(left, f.table) or not same_table(right, g.table):
        raise TableMismatchError(
            f"outer tensor of functions on {f.table.name} and {g.table.name} requested on {product.name}"
        )
    return ClassFunction(product, tuple(x * y for x in f.values for y in g.values))
