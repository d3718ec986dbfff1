"""Pythagorean triples: recognition, Euclid's parametrization, enumeration, scaling."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .core import Numeric, as_exact
from .errors import DomainError, EmptyRange, InvalidParams, NoSolution

__all__ = [
    "Triple",
    "EuclidParams",
    "RationalTriple",
    "is_pythagorean",
    "is_primitive",
    "euclid_generate",
    "decompose",
    "enumerate_primitives",
    "brute_force_primitives",
    "hypotenuse_triples",
    "scale",
    "sides_from_diagonal_constant",
]


def is_pythagorean(a: int, b: int, c: int) -> bool:
    return a * a + b * b == c * c


@dataclass(frozen=True)
class Triple:
    """Positive integers with a^2 + b^2 = c^2; a and b are the legs."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidParams(f"{name} must be a positive integer, got {v!r}")
        if not is_pythagorean(self.a, self.b, self.c):
            raise InvalidParams(f"({self.a}, {self.b}, {self.c}) is not Pythagorean")

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"

    @property
    def k(self) -> int:
        return math.gcd(self.a, self.b, self.c)

    def normalized(self) -> Triple:
        """Leg order fixed so the leg that is odd in the primitive part comes first."""
        k = self.k
        if (self.a // k) % 2 == 1:
            return self
        return Triple(self.b, self.a, self.c)

    def legs(self) -> frozenset[int]:
        return frozenset((self.a, self.b))


@dataclass(frozen=True)
class EuclidParams:
    """Generator data: coprime m > n > 0 of opposite parity, scale k >= 1."""

    m: int
    n: int
    k: int = 1

    def __post_init__(self):
        m, n, k = self.m, self.n, self.k
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (m, n, k)):
            raise InvalidParams("m, n and k must be integers")
        if not m > n > 0:
            raise InvalidParams(f"need m > n > 0, got m={m} n={n}")
        if k < 1:
            raise InvalidParams(f"scale k must be >= 1, got {k}")
        if math.gcd(m, n) != 1:
            raise InvalidParams(f"m={m} and n={n} are not coprime")
        if m % 2 == 1 and n % 2 == 1:
            raise InvalidParams(f"m={m} and n={n} are both odd")

    def __str__(self):
        return f"k={self.k} m={self.m} n={self.n}"


@dataclass(frozen=True)
class RationalTriple:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        if min(self.a, self.b, self.c) <= 0:
            raise DomainError("sides must be positive")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise DomainError(f"({self.a}, {self.b}, {self.c}) is not Pythagorean")

    def __iter__(self):
        return iter((self.a, self.b, self.c))


def is_primitive(t: Triple) -> bool:
    return t.k == 1


def euclid_generate(p: EuclidParams) -> Triple:
    """(k(m^2 - n^2), 2kmn, k(m^2 + n^2)) in that leg order."""
    m, n, k = p.m, p.n, p.k
    return Triple(k * (m * m - n * n), 2 * k * m * n, k * (m * m + n * n))


def decompose(t: Triple) -> EuclidParams:
    """Recover the unique (k, m, n) that generates ``t`` up to leg order."""
    k = t.k
    a, b, c = t.a // k, t.b // k, t.c // k
    odd = a if a % 2 else b
    m = math.isqrt((c + odd) // 2)
    n = math.isqrt((c - odd) // 2)
    return EuclidParams(m, n, k)


def _sort_key(t: Triple) -> tuple[int, int]:
    return (t.c, min(t.a, t.b))


def enumerate_primitives(c_max: int) -> list[Triple]:
    """Every primitive triple with hypotenuse <= c_max, odd leg first, sorted by (c, smaller leg)."""
    if c_max < 5:
        warnings.warn(f"no Pythagorean triple has hypotenuse <= {c_max}", EmptyRange, stacklevel=2)
        return []
    found = []
    m = 2
    while m * m + 1 <= c_max:
        for n in range(1 + m % 2, m, 2):
            if m * m + n * n > c_max:
                break
            if math.gcd(m, n) == 1:
                found.append(euclid_generate(EuclidParams(m, n)))
        m += 1
    return sorted(found, key=_sort_key)


def brute_force_primitives(c_max: int) -> list[Triple]:
    """Scan every a < b < c <= c_max; slow, kept as an independent check."""
    out = []
    squares = {c * c: c for c in range(1, c_max + 1)}
    for a in range(1, c_max + 1):
        for b in range(a + 1, c_max + 1):
            c = squares.get(a * a + b * b)
            if c is not None and math.gcd(a, b) == 1:
                out.append(Triple(a, b, c).normalized())
    return sorted(out, key=_sort_key)


def hypotenuse_triples(c: int) -> list[Triple]:
    """All triples (primitive or not) whose hypotenuse is exactly c."""
    out = []
    m = 2
    while m * m + 1 <= c:
        for n in range(1 + m % 2, m, 2):
            h = m * m + n * n
            if h > c:
                break
            if c % h == 0 and math.gcd(m, n) == 1:
                out.append(euclid_generate(EuclidParams(m, n, c // h)).normalized())
        m += 1
    return sorted(out, key=_sort_key)


def scale(t: Triple, q: Numeric) -> RationalTriple:
    q = as_exact(q)
    if q <= 0:
        raise DomainError(f"scale factor must be positive, got {q}")
    return RationalTriple(t.a * q, t.b * q, t.c * q)


def sides_from_diagonal_constant(dc: Numeric) -> tuple[Fraction, Fraction]:
    """Sides (1, y) of the rectangle whose diagonal is ``dc`` times its length.

    Writing dc = p/q, the scaled rectangle (q, q*y, p) is an integer triple
    with hypotenuse p, so the hypotenuse is split into Euclid triples and the
    one having q as a leg is kept.  For 1;15 = 5/4 this is (3, 4, 5), giving
    sides 1 and 0;45.
    """
    dc = as_exact(dc)
    if dc <= 0:
        raise DomainError(f"diagonal constant must be positive, got {dc}")
    p, q = dc.numerator, dc.denominator
    for t in hypotenuse_triples(p):
        if q in (t.a, t.b):
            other = t.b if t.a == q else t.a
            return Fraction(1), Fraction(other, q)
    raise NoSolution(f"no rectangle with length 1 has diagonal {dc}")
