"""Square roots over the rationals and the historical approximation constants."""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Optional

from .core import Numeric, as_exact, square
from .errors import DomainError, NegativeInput

__all__ = [
    "NamedConstant",
    "isqrt_exact",
    "sqrt_exact",
    "sqrt_heron",
    "heron_iterates",
    "default_seed",
    "euclidean_distance",
    "incommensurable_chain",
]


class NamedConstant(enum.Enum):
    """Approximations of sqrt(2), sqrt(3) and pi attested in the tablets."""

    SQRT2_COARSE = Fraction(3, 2)  # 1;30
    SQRT2_FINE = Fraction(17, 12)  # 1;25
    SQRT3 = Fraction(7, 4)  # 1;45
    PI_COMMON = Fraction(3)
    PI_BRUINS = Fraction(25, 8)  # 3;7,30
    PI_FINE = Fraction(63, 20)  # 3;9

    @property
    def id(self) -> str:
        return self.name


def isqrt_exact(n: int) -> Optional[int]:
    """Integer square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_exact(x: Numeric) -> Optional[Fraction]:
    """Exact rational square root, or ``None`` when x is not a rational square.

    A reduced fraction is a rational square exactly when its numerator and
    denominator are both perfect squares.
    """
    x = as_exact(x)
    if x < 0:
        raise NegativeInput(f"square root of negative value {x}")
    num = isqrt_exact(x.numerator)
    if num is None:
        return None
    den = isqrt_exact(x.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def default_seed(x: Numeric) -> Fraction:
    """(x + 1) / 2, never below sqrt(x)."""
    return (as_exact(x) + 1) / 2


def heron_iterates(x: Numeric, seed: Numeric | None = None, iterations: int = 1) -> list[Fraction]:
    """All averaging iterates r_0 = seed, r_{k+1} = (r_k + x / r_k) / 2."""
    x = as_exact(x)
    seed = default_seed(x) if seed is None else as_exact(seed)
    if x <= 0:
        raise DomainError(f"Heron iteration needs x > 0, got {x}")
    if seed <= 0:
        raise DomainError(f"Heron iteration needs a positive seed, got {seed}")
    if iterations < 0:
        raise DomainError("iterations must be >= 0")
    out = [seed]
    r = seed
    for _ in range(iterations):
        r = (r + x / r) / 2
        out.append(r)
    return out


def sqrt_heron(x: Numeric, seed: Numeric | None = None, iterations: int = 1) -> Fraction:
    return heron_iterates(x, seed, iterations)[-1]


def euclidean_distance(x1: Numeric, y1: Numeric, x2: Numeric, y2: Numeric) -> Optional[Fraction]:
    """Distance between two rational points, or ``None`` when it is irrational."""
    dx = as_exact(x2) - as_exact(x1)
    dy = as_exact(y2) - as_exact(y1)
    return sqrt_exact(square(dx) + square(dy))


def incommensurable_chain(n: int) -> list[Fraction]:
    """Squared hypotenuses 1, 2, ..., n of the spiral of unit-leg right triangles.

    Each entry is the previous squared hypotenuse plus 1^2, the step that
    builds sqrt(k) from sqrt(k - 1) with straightedge and compass.
    """
    if n < 1:
        raise DomainError(f"chain length must be >= 1, got {n}")
    chain = [Fraction(1)]
    for _ in range(n - 1):
        chain.append(chain[-1] + square(1))
    return chain
