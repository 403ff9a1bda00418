from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import factorint

from src.errors import (
    MissingPowerMapError,
    PartialTableError,
    TableMismatchError,
    UnknownLabelError,
    UsageError,
)
from src.exact.cyclotomic import ONE, ZERO, Cyclotomic, Number, cyc_sum


@dataclass(frozen=True)
class ClassInfo:
    label: str
    element_order: int
    centralizer_order: int


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """
    Classes, power maps and irreducible rows of one group.

    power_maps[p][i] is the index of the class containing g^p for g in class i.
    A PARTIAL table holds a subset of classes and rows; checks and operations
    that need the whole table refuse it.
    """

    name: str
    group_order: int
    classes: Tuple[ClassInfo, ...]
    power_maps: Dict[int, Tuple[int, ...]]
    irreducibles: Tuple[Tuple[str, Tuple[Cyclotomic, ...]], ...]
    partial: bool = False
    factors: Optional[Tuple["CharacterTable", "CharacterTable"]] = None
    _index: Dict[str, int] = field(default_factory=dict, init=False, repr=False)
    _rows: Dict[str, int] = field(default_factory=dict, init=False, repr=False)
    _derived: Dict[int, Tuple[int, ...]] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        self._index.update({c.label: i for i, c in enumerate(self.classes)})
        self._rows.update({name: i for i, (name, _) in enumerate(self.irreducibles)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterTable):
            return NotImplemented
        if self is other:
            return True
        return (
            self.name == other.name
            and self.group_order == other.group_order
            and self.classes == other.classes
            and self.power_maps == other.power_maps
            and self.irreducibles == other.irreducibles
            and self.partial == other.partial
        )

    def __hash__(self) -> int:
        return hash((self.name, self.group_order, self.classes))

    # -------------------------
    # Classes
    # -------------------------
    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(c.label for c in self.classes)

    def class_index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"table {self.name} has no class {label!r}") from None

    def class_size(self, i: int) -> int:
        return self.group_order // self.classes[i].centralizer_order

    def class_sizes(self) -> List[int]:
        return [self.class_size(i) for i in range(self.class_count)]

    def primes(self) -> List[int]:
        return sorted(factorint(self.group_order))

    # -------------------------
    # Power maps
    # -------------------------
    def power_map(self, p: int) -> Tuple[int, ...]:
        """
        Stored p-power map. For p not dividing |G| on a full table the map is
        recovered from the Galois action: chi(g^p) = chi(g) under z -> z^p.
        """
        if p in self.power_maps:
            return self.power_maps[p]
        if self.group_order % p and not self.partial and self.irreducibles:
            if p not in self._derived:
                self._derived[p] = self._galois_power_map(p)
            return self._derived[p]
        raise MissingPowerMapError(f"table {self.name} has no {p}-power map")

    def _galois_power_map(self, p: int) -> Tuple[int, ...]:
        columns = {self.column(j): j for j in range(self.class_count)}
        image = []
        for i in range(self.class_count):
            target = tuple(row[i].galois(p) for _, row in self.irreducibles)
            if target not in columns:
                raise MissingPowerMapError(f"table {self.name}: no class matches the {p}-th power of {self.classes[i].label}")
            image.append(columns[target])
        return tuple(image)

    def column(self, j: int) -> Tuple[Cyclotomic, ...]:
        return tuple(row[j] for _, row in self.irreducibles)

    def power_index(self, i: int, n: int) -> int:
        """Class index of g^n for g in class i, composing prime power maps."""
        if n <= 0:
            raise UsageError(f"power must be positive, got {n}")
        # g^n only depends on n modulo the element order
        order = self.classes[i].element_order
        n %= order
        if n == 0:
            return self._identity_index()
        for p, k in sorted(factorint(n).items()):
            pm = self.power_map(p)
            for _ in range(k):
                i = pm[i]
        return i

    def inverse_index(self, i: int) -> Optional[int]:
        """Class of inverses via stored power maps, or None if not identifiable."""
        order = self.classes[i].element_order
        if order <= 2:
            return i
        try:
            n = order - 1
            for p, k in sorted(factorint(n).items()):
                if p not in self.power_maps:
                    return None
                for _ in range(k):
                    i = self.power_maps[p][i]
            return i
        except IndexError:
            return None

    def inverse_class(self, label: str) -> Optional[str]:
        i = self.inverse_index(self.class_index(label))
        return None if i is None else self.classes[i].label

    def _identity_index(self) -> int:
        for i, c in enumerate(self.classes):
            if c.element_order == 1:
                return i
        raise UnknownLabelError(f"table {self.name} has no identity class")

    # -------------------------
    # Rows
    # -------------------------
    @property
    def irreducible_names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.irreducibles)

    def row(self, name: str) -> "ClassFunction":
        try:
            values = self.irreducibles[self._rows[name]][1]
        except KeyError:
            raise UnknownLabelError(f"table {self.name} has no irreducible {name!r}") from None
        return ClassFunction(self, values)

    def rows(self) -> List["ClassFunction"]:
        return [ClassFunction(self, values) for _, values in self.irreducibles]

    def degree(self, name: str) -> int:
        return int(self.row(name).degree().to_rational())

    def trivial(self) -> "ClassFunction":
        return ClassFunction(self, tuple(ONE for _ in self.classes))

    def zero(self) -> "ClassFunction":
        return ClassFunction(self, tuple(ZERO for _ in self.classes))

    def class_function(self, values: Sequence[Number]) -> "ClassFunction":
        return ClassFunction(self, tuple(Cyclotomic.coerce(v) for v in values))

    def require_full(self, what: str) -> None:
        if self.partial:
            raise PartialTableError(f"{what} requires a full table; {self.name} is PARTIAL")


def same_table(a: CharacterTable, b: CharacterTable) -> bool:
    return a is b or a == b


@dataclass(frozen=True, eq=False)
class ClassFunction:
    table: CharacterTable
    values: Tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != self.table.class_count:
            raise TableMismatchError(
                f"class function has {len(self.values)} values, table {self.table.name} has {self.table.class_count} classes"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.values == other.values and same_table(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, key: Union[int, str]) -> Cyclotomic:
        if isinstance(key, str):
            key = self.table.class_index(key)
        return self.values[key]

    def _check(self, other: "ClassFunction") -> None:
        if not same_table(self.table, other.table):
            raise TableMismatchError(f"class functions live on {self.table.name} and {other.table.name}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.table, tuple(-a for a in self.values))

    def __mul__(self, scalar: Union[int, Fraction, Cyclotomic]) -> "ClassFunction":
        if isinstance(scalar, ClassFunction):
            return NotImplemented
        return ClassFunction(self.table, tuple(a * scalar for a in self.values))

    __rmul__ = __mul__

    def degree(self) -> Cyclotomic:
        return self.values[self.table._identity_index()]

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.table, tuple(v.conj() for v in self.values))

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


def sum_functions(table: CharacterTable, functions: Sequence[ClassFunction]) -> ClassFunction:
    for f in functions:
        if not same_table(table, f.table):
            raise TableMismatchError(f"class function on {f.table.name} summed on {table.name}")
    values = tuple(cyc_sum(f.values[i] for f in functions) for i in range(table.class_count))
    return ClassFunction(table, values)


@dataclass(frozen=True, eq=False)
class FusionMap:
    source: CharacterTable
    target: CharacterTable
    map: Tuple[int, ...]

    def image(self, label: str) -> str:
        return self.target.classes[self.map[self.source.class_index(label)]].label

    def pairs(self) -> List[Tuple[str, str]]:
        return [(c.label, self.target.classes[j].label) for c, j in zip(self.source.classes, self.map)]
