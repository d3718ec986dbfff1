"""Exact base-60 arithmetic.

Every value is held as a reduced :class:`fractions.Fraction`; sexagesimal
digits are only a view, produced on demand by :func:`to_digits`.  The
notation follows the modern editorial convention::

    2,36;15   ->  2*60 + 36 + 15/60  ==  625/4
    0;0,45    ->  45/3600            ==  1/80

Integer digits are separated by ``,`` and the fractional part follows ``;``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, MalformedDigit, NotationSyntaxError, ZeroInput

__all__ = [
    "ExactNumber",
    "NotationConfig",
    "DEFAULT_NOTATION",
    "SexDigits",
    "Ordering",
    "as_exact",
    "sign",
    "parse",
    "to_digits",
    "format_sex",
    "significant_places",
    "to_significant",
    "terminating_places",
    "binop",
    "square",
    "divide",
    "is_regular",
    "is_smooth",
    "reciprocal_exact",
    "reciprocal_digits",
    "compare",
]

BASE = 60

# The rational layer is the stdlib Fraction: always reduced, denominator > 0.
ExactNumber = Fraction
Numeric = Union[Fraction, int, str]

_DECIMAL_RE = re.compile(r"\d+(?:\.\d+)?")


@dataclass(frozen=True)
class NotationConfig:
    digit_separator: str = ","
    radix_mark: str = ";"
    allow_decimal_input: bool = True
    rounding: str = "truncate"

    def __post_init__(self):
        for name in ("digit_separator", "radix_mark"):
            ch = getattr(self, name)
            if len(ch) != 1 or ch.isdigit() or ch == "-":
                raise ValueError(f"{name} must be a single non-digit character, got {ch!r}")
        if self.digit_separator == self.radix_mark:
            raise ValueError("digit_separator and radix_mark must differ")
        if self.rounding not in ("truncate", "nearest"):
            raise ValueError(f"unknown rounding mode {self.rounding!r}")


DEFAULT_NOTATION = NotationConfig()


def as_exact(value: Numeric) -> Fraction:
    """Coerce ints, Fractions and notation strings to an exact rational.

    Floats are refused: silently importing binary rounding error would defeat
    the point of the engine.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact number")


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# parsing


def parse(text: str, cfg: NotationConfig = DEFAULT_NOTATION) -> Fraction:
    """Read a sexagesimal (``1,40;30``) or plain decimal (``12.5``) literal.

    Raises :class:`MalformedDigit` for a digit group outside 0..59 and
    :class:`NotationSyntaxError` for empty groups, dangling separators or
    stray characters.  Both carry the character offset of the problem.
    """
    stripped = text.strip()
    base_offset = len(text) - len(text.lstrip())
    if not stripped:
        raise NotationSyntaxError("empty literal", base_offset, text)

    pos = 0
    negative = False
    if stripped[0] == "-":
        negative = True
        pos = 1
        if len(stripped) == 1:
            raise NotationSyntaxError("sign without digits", base_offset + 1, text)
    body = stripped[pos:]

    decimal_ok = cfg.allow_decimal_input and "." not in (cfg.digit_separator, cfg.radix_mark)
    if decimal_ok and _DECIMAL_RE.fullmatch(body):
        value = Fraction(body)
    else:
        value = _parse_groups(body, cfg, base_offset + pos, text)
    return -value if negative else value


def _parse_groups(body: str, cfg: NotationConfig, offset: int, text: str) -> Fraction:
    int_groups: list[tuple[str, int]] = []
    frac_groups: list[tuple[str, int]] = []
    current = int_groups
    seen_radix = False
    start = 0
    i = 0
    for i, ch in enumerate(body):
        if ch.isdigit() and ch.isascii():
            continue
        if ch == cfg.digit_separator or ch == cfg.radix_mark:
            if i == start:
                what = "radix mark" if ch == cfg.radix_mark else "separator"
                raise NotationSyntaxError(f"empty digit group before {what}", offset + i, text)
            current.append((body[start:i], offset + start))
            start = i + 1
            if ch == cfg.radix_mark:
                if seen_radix:
                    raise NotationSyntaxError("second radix mark", offset + i, text)
                seen_radix = True
                current = frac_groups
            continue
        raise NotationSyntaxError(f"unexpected character {ch!r}", offset + i, text)
    if start == len(body):
        raise NotationSyntaxError("dangling separator", offset + len(body), text)
    current.append((body[start:], offset + start))

    value = Fraction(0)
    for group, where in int_groups:
        value = value * BASE + _digit(group, where, text)
    scale = 1
    for group, where in frac_groups:
        scale *= BASE
        value += Fraction(_digit(group, where, text), scale)
    return value


def _digit(group: str, where: int, text: str) -> int:
    if len(group) > 2 or int(group) >= BASE:
        raise MalformedDigit(f"digit {group} is not in 0..59", where, text)
    return int(group)


# ---------------------------------------------------------------------------
# formatting


@dataclass(frozen=True)
class SexDigits:
    """Rendered base-60 form: most-significant integer digit first."""

    sign: int
    int_digits: tuple[int, ...]
    frac_digits: tuple[int, ...]
    exact: bool

    def value(self) -> Fraction:
        """Reassemble the (possibly truncated) digits into a rational."""
        total = Fraction(0)
        for d in self.int_digits:
            total = total * BASE + d
        scale = 1
        for d in self.frac_digits:
            scale *= BASE
            total += Fraction(d, scale)
        return -total if self.sign < 0 else total

    def render(self, cfg: NotationConfig = DEFAULT_NOTATION) -> str:
        out = cfg.digit_separator.join(str(d) for d in self.int_digits)
        if self.frac_digits:
            out += cfg.radix_mark + cfg.digit_separator.join(str(d) for d in self.frac_digits)
        return "-" + out if self.sign < 0 else out

    def __str__(self) -> str:
        return self.render()


def _smooth_exponents(n: int) -> tuple[int, int, int, int]:
    """Split n into 2^a 3^b 5^c * rest."""
    exps = []
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exps.append(e)
    return exps[0], exps[1], exps[2], n


def terminating_places(x: Fraction) -> int | None:
    """Number of fractional base-60 digits of x, or None if the expansion never ends."""
    a, b, c, rest = _smooth_exponents(x.denominator)
    if rest != 1:
        return None
    # 60 = 2^2 * 3 * 5
    return max((a + 1) // 2, b, c)


def _int_digits(n: int) -> tuple[int, ...]:
    if n == 0:
        return (0,)
    out = []
    while n:
        n, d = divmod(n, BASE)
        out.append(d)
    return tuple(reversed(out))


def to_digits(x: Numeric, places: int = 6, cfg: NotationConfig = DEFAULT_NOTATION) -> SexDigits:
    """Base-60 digits of ``x`` with at most ``places`` fractional digits.

    A terminating expansion that fits is returned in full and flagged exact.
    Otherwise exactly ``places`` digits are kept, cut toward zero (or rounded
    half away from zero when ``cfg.rounding == "nearest"``).
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    x = as_exact(x)
    mag = abs(x)
    needed = terminating_places(mag)
    if needed is not None and needed <= places:
        k, exact = needed, True
        scaled = mag.numerator * BASE**k // mag.denominator
    else:
        k, exact = places, False
        num = mag.numerator * BASE**k
        if cfg.rounding == "nearest":
            scaled = (2 * num + mag.denominator) // (2 * mag.denominator)
        else:
            scaled = num // mag.denominator
    whole, frac = divmod(scaled, BASE**k)
    frac_digits = [0] * k
    for i in range(k - 1, -1, -1):
        frac, frac_digits[i] = divmod(frac, BASE)
    return SexDigits(sign(x), _int_digits(whole), tuple(frac_digits), exact)


def format_sex(x: Numeric, places: int = 6, cfg: NotationConfig = DEFAULT_NOTATION) -> str:
    return to_digits(x, places, cfg).render(cfg)


def significant_places(x: Numeric, digits: int) -> int:
    """Fractional places needed to show ``digits`` significant base-60 digits of x.

    Leading zero fractional digits of a value below 1 do not count, so
    ``0;6,32,41,39`` and ``3;7,37,14`` both carry four significant digits.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    mag = abs(as_exact(x))
    if mag == 0:
        return 0
    whole = mag.numerator // mag.denominator
    if whole:
        return max(digits - len(_int_digits(whole)), 0)
    leading = 0
    while mag < Fraction(1, BASE ** (leading + 1)):
        leading += 1
    return leading + digits


def to_significant(x: Numeric, digits: int, cfg: NotationConfig = DEFAULT_NOTATION) -> SexDigits:
    """Like :func:`to_digits` but counting significant digits instead of fractional places."""
    return to_digits(x, significant_places(x, digits), cfg)


# ---------------------------------------------------------------------------
# arithmetic


def binop(op: str, x: Numeric, y: Numeric) -> Fraction:
    x, y = as_exact(x), as_exact(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown operation {op!r}")


def square(x: Numeric) -> Fraction:
    x = as_exact(x)
    return x * x


def divide(x: Numeric, y: Numeric) -> Fraction:
    x, y = as_exact(x), as_exact(y)
    if y == 0:
        raise DivisionByZero("division by zero")
    return x / y


def is_smooth(n: int) -> bool:
    """True when the positive integer n has no prime factor other than 2, 3, 5."""
    return _smooth_exponents(n)[3] == 1


def is_regular(x: Numeric) -> bool:
    """Whether both x and 1/x have terminating base-60 expansions."""
    x = as_exact(x)
    if x == 0:
        raise ZeroInput("0 has no reciprocal")
    return is_smooth(abs(x.numerator)) and is_smooth(x.denominator)


def reciprocal_exact(x: Numeric) -> Fraction:
    x = as_exact(x)
    if x == 0:
        raise ZeroInput("0 has no reciprocal")
    return 1 / x


def reciprocal_digits(x: Numeric, places: int, cfg: NotationConfig = DEFAULT_NOTATION) -> SexDigits:
    if places < 1:
        raise ValueError("places must be >= 1")
    return to_digits(reciprocal_exact(x), places, cfg)


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def compare(x: Numeric, y: Numeric) -> Ordering:
    return Ordering(sign(as_exact(x) - as_exact(y)))
