from __future__ import annotations

import functools
import re
from math import gcd
from typing import Iterable, List, Sequence, Tuple

from src.errors import GensSyntaxError, PointRangeError, RepeatedPointError

CYCLE_RE = re.compile(r"\(([^()]*)\)")
CYCLES_TEXT_RE = re.compile(r"^(\s*\([^()]*\)\s*)+$")


@functools.total_ordering
class Permutation:
    """
    Permutation of {0..n-1}, shown 1-based in cycle notation.

    Products read left to right: (p * q)(i) = q(p(i)), i.e. apply p first.
    The total order compares image tuples and is the canonical order used
    wherever results must be deterministic.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        self.images: Tuple[int, ...] = tuple(images)
        self._hash = hash(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Product of 1-based cycles, composed left to right."""
        result = list(range(degree))
        for cycle in cycles:
            if len(set(cycle)) != len(cycle):
                raise RepeatedPointError(f"repeated point in cycle {tuple(cycle)}")
            for point in cycle:
                if not 1 <= point <= degree:
                    raise PointRangeError(f"point {point} out of range 1..{degree}")
            if len(cycle) < 2:
                continue
            step = list(range(degree))
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                step[a - 1] = b - 1
            result = [step[i] for i in result]
        return cls(result)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        return cls.from_cycles(parse_cycles(text), degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        o = other.images
        return Permutation([o[i] for i in self.images])

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """self^g = g^-1 * self * g, which sends g(i) to g(self(i))."""
        out = [0] * len(self.images)
        gi = g.images
        for i, j in enumerate(self.images):
            out[gi[i]] = gi[j]
        return Permutation(out)

    def commutes_with(self, other: "Permutation") -> bool:
        a, b = self.images, other.images
        return all(b[a[i]] == a[b[i]] for i in range(len(a)))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Non-trivial cycles, 0-based, each starting at its smallest point."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Tuple[int, ...]:
        lengths = [len(c) for c in self.cycles()]
        fixed = self.degree - sum(lengths)
        return tuple(sorted(lengths, reverse=True)) + (1,) * fixed

    def order(self) -> int:
        n = 1
        for c in self.cycles():
            n = n * len(c) // gcd(n, len(c))
        return n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def parse_cycles(text: str) -> List[List[int]]:
    text = text.strip()
    if text in ("", "()"):
        return []
    if not CYCLES_TEXT_RE.match(text):
        raise GensSyntaxError(f"cannot parse cycle notation {text!r}")
    cycles = []
    for m in CYCLE_RE.finditer(text):
        body = m.group(1).strip()
        if not body:
            continue
        try:
            cycles.append([int(tok) for tok in body.split(",")])
        except ValueError as e:
            raise GensSyntaxError(f"bad point in cycle ({body})") from e
    return cycles
