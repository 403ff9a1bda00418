"""
Exact cyclotomic numbers.

A value is stored as (n, coeffs) where coeffs are the rational coordinates of
the value in the power basis 1, z, ..., z^(phi(n)-1) of Q(z), z = exp(2*pi*i/n).
The order n is always reduced as far as the value allows, so rational values
have n = 1 and two values are equal iff their (n, coeffs) pairs are equal.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import Symbol, cyclotomic_poly, factorint

from src.errors import NotRationalError

logger = logging.getLogger(__name__)

Rational = Fraction
Number = Union[int, Fraction, "Cyclotomic"]

_X = Symbol("x")
_ZERO = Fraction(0)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


# -------------------------
# Canonical form
# -------------------------
@lru_cache(maxsize=None)
def _phi_coeffs(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    poly = cyclotomic_poly(n, _X, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _prime_divisors(n: int) -> Tuple[int, ...]:
    return tuple(sorted(factorint(n)))


def _reduce_mod_phi(n: int, dense: Sequence) -> List[Fraction]:
    phi = _phi_coeffs(n)
    d = len(phi) - 1
    a = list(dense)
    if len(a) < d:
        a.extend([_ZERO] * (d - len(a)))
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if not c:
            continue
        a[k] = _ZERO
        base = k - d
        for j in range(d):
            pj = phi[j]
            if pj:
                a[base + j] -= c * pj
    return a[:d]


def _drop_prime(n: int, coeffs: List[Fraction], p: int) -> Optional[List[Fraction]]:
    """Coordinates of the value in Q(z_{n/p}) if it lies there, else None."""
    m = n // p
    if m % p == 0:
        # z_n^(p*j) = z_m^j and the power basis of Q(z_n) splits by residue mod p
        if any(c for i, c in enumerate(coeffs) if i % p):
            return None
        return list(coeffs[::p])

    # n = p*m with gcd(p, m) = 1: z_n^i = z_p^(u*i) * z_m^(v*i)
    u = pow(m, -1, p)
    v = pow(p, -1, m) if m > 1 else 0
    parts = [[_ZERO] * m for _ in range(p)]
    for i, c in enumerate(coeffs):
        if c:
            parts[(u * i) % p][(v * i) % m] += c
    parts = [_reduce_mod_phi(m, z) for z in parts]

    # x = sum_r z_p^r * parts[r] lies in Q(z_m) iff parts[r] - parts[0] agree for r >= 1
    first = [a - b for a, b in zip(parts[1], parts[0])]
    for r in range(2, p):
        if any(a - b != f for a, b, f in zip(parts[r], parts[0], first)):
            return None
    return [a - b for a, b in zip(parts[0], parts[1])]


def canonicalize(n: int, dense: Sequence) -> Tuple[int, Tuple[Fraction, ...]]:
    """Canonical (order, coeffs) for sum(dense[i] * z_n^i)."""
    coeffs = _reduce_mod_phi(n, dense)
    dropped = True
    while dropped and n > 1:
        dropped = False
        for p in _prime_divisors(n):
            smaller = _drop_prime(n, coeffs, p)
            if smaller is not None:
                n //= p
                coeffs = smaller
                dropped = True
                break
    return n, tuple(Fraction(c) for c in coeffs)


# -------------------------
# Value type
# -------------------------
class Cyclotomic:
    """Immutable exact element of a cyclotomic field."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Tuple[Fraction, ...]):
        # callers pass canonical data; use the classmethods otherwise
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    # --- constructors ---
    @classmethod
    def rational(cls, q: Union[int, Fraction]) -> "Cyclotomic":
        return cls(1, (Fraction(q),))

    @classmethod
    def from_dense(cls, n: int, dense: Sequence) -> "Cyclotomic":
        if n <= 0:
            raise ValueError(f"root of unity order must be positive, got {n}")
        return cls(*canonicalize(n, dense))

    @classmethod
    def from_exponents(cls, n: int, terms: Dict[int, Union[int, Fraction]]) -> "Cyclotomic":
        dense: List = [_ZERO] * n
        for e, c in terms.items():
            dense[e % n] += Fraction(c)
        return cls.from_dense(n, dense)

    @classmethod
    def root(cls, n: int, k: int = 1) -> "Cyclotomic":
        return cls.from_exponents(n, {k: 1})

    @classmethod
    def coerce(cls, value: Number) -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f"cannot use {type(value).__name__} as a cyclotomic number")

    # --- queries ---
    def is_rational(self) -> bool:
        return self.order == 1

    def is_zero(self) -> bool:
        return self.order == 1 and self.coeffs[0] == 0

    def to_rational(self) -> Fraction:
        if self.order != 1:
            raise NotRationalError(f"value {self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.order == 1 and self.coeffs[0].denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _dense_at(self, n: int) -> List[Fraction]:
        dense: List[Fraction] = [_ZERO] * n
        step = n // self.order
        for i, c in enumerate(self.coeffs):
            if c:
                dense[i * step] += c
        return dense

    def terms(self) -> Iterable[Tuple[int, Fraction]]:
        return ((i, c) for i, c in enumerate(self.coeffs) if c)

    # --- arithmetic ---
    def __add__(self, other: Number) -> "Cyclotomic":
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return Cyclotomic.rational(self.coeffs[0] + other.coeffs[0])
        n = _lcm(self.order, other.order)
        a = self._dense_at(n)
        for i, c in enumerate(other._dense_at(n)):
            if c:
                a[i] += c
        return Cyclotomic.from_dense(n, a)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Number) -> "Cyclotomic":
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "Cyclotomic":
        return Cyclotomic.coerce(other) - self

    def scale(self, q: Union[int, Fraction]) -> "Cyclotomic":
        q = Fraction(q)
        if q == 0:
            return ZERO
        return Cyclotomic(self.order, tuple(c * q for c in self.coeffs))

    def __mul__(self, other: Number) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.order == 1:
            return self.scale(other.coeffs[0])
        if self.order == 1:
            return other.scale(self.coeffs[0])
        n = _lcm(self.order, other.order)
        sa, sb = n // self.order, n // other.order
        dense: List[Fraction] = [_ZERO] * n
        right = [(j * sb, d) for j, d in other.terms()]
        for i, c in self.terms():
            ei = i * sa
            for ej, d in right:
                dense[(ei + ej) % n] += c * d
        return Cyclotomic.from_dense(n, dense)

    __rmul__ = __mul__

    def __truediv__(self, other: Union[int, Fraction, "Cyclotomic"]) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            other = other.to_rational()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a cyclotomic number by zero")
        return self.scale(Fraction(1) / Fraction(other))

    def galois(self, k: int) -> "Cyclotomic":
        """Image under z -> z^k, gcd(k, order) = 1."""
        n = self.order
        if gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        if n == 1:
            return self
        dense: List[Fraction] = [_ZERO] * n
        for i, c in self.terms():
            dense[(i * k) % n] += c
        return Cyclotomic.from_dense(n, dense)

    def conj(self) -> "Cyclotomic":
        return self.galois(-1)

    # --- comparison ---
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.order == 1 and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self.order == 1:
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    # --- text ---
    def __str__(self) -> str:
        if self.order == 1:
            return str(self.coeffs[0])
        out: List[str] = []
        for i, c in self.terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                root = f"E({self.order})" if i == 1 else f"E({self.order})^{i}"
                body = root if mag == 1 else f"{mag}*{root}"
            if not out:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(sign + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Cyclotomic({str(self)!r})"


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)


def E(n: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.root(n, k)


# -------------------------
# Batch helpers
# -------------------------
def cyc_sum(values: Iterable[Number]) -> Cyclotomic:
    """
    Sum of many values. Terms sharing an order are added coordinate-wise
    (their coordinates live in the same basis) and canonicalized once.
    """
    rational = Fraction(0)
    groups: Dict[int, List[Fraction]] = {}
    for v in values:
        if isinstance(v, (int, Fraction)):
            rational += v
            continue
        if v.order == 1:
            rational += v.coeffs[0]
            continue
        acc = groups.get(v.order)
        if acc is None:
            groups[v.order] = list(v.coeffs)
        else:
            for i, c in enumerate(v.coeffs):
                if c:
                    acc[i] += c
    total = Cyclotomic.rational(rational)
    for n in sorted(groups):
        total = total + Cyclotomic.from_dense(n, groups[n])
    return total


def cyc_arith(a: Number, b: Number, op: str) -> Cyclotomic:
    a = Cyclotomic.coerce(a)
    b = Cyclotomic.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}; expected add, sub or mul")


def cyc_conj(a: Number) -> Cyclotomic:
    return Cyclotomic.coerce(a).conj()


def cyc_to_rational(a: Number) -> Fraction:
    return Cyclotomic.coerce(a).to_rational()
