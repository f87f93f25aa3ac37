"""Exact numbers for cutting lines: rationals and real quadratic surds.

Every comparison is decided with integer arithmetic (``math.isqrt`` plus
``fractions.Fraction``); nothing here ever touches a float.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import SlopeError

Number = Union[int, Fraction, "Surd"]


def squarefree_split(d: int) -> tuple[int, int]:
    """Return (k, r) with d = k*k*r and r square-free."""
    if d <= 0:
        raise SlopeError(f"radicand must be positive, got {d}")
    k, r, f = 1, d, 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            k *= f
        f += 1
    return k, r


@dataclass(frozen=True)
class Surd:
    """The real number a + b*sqrt(d) with rational a, b and square-free d."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0:
            object.__setattr__(self, "d", 1)
        elif self.d == 1:
            object.__setattr__(self, "a", self.a + self.b)
            object.__setattr__(self, "b", Fraction(0))

    @classmethod
    def of(cls, a: Union[int, Fraction], b: Union[int, Fraction] = 0, d: int = 1) -> "Surd":
        k, r = squarefree_split(d)
        return cls(Fraction(a), Fraction(b) * k, r)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def _radicand(self, other: "Surd") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0 or other.d == self.d:
            return self.d
        raise SlopeError(f"cannot mix sqrt({self.d}) with sqrt({other.d})")

    def __add__(self, other: Number) -> "Surd":
        other = lift(other)
        return Surd(self.a + other.a, self.b + other.b, self._radicand(other))

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, self.d)

    def __sub__(self, other: Number) -> "Surd":
        return self + (-lift(other))

    def __rsub__(self, other: Number) -> "Surd":
        return lift(other) - self

    def __mul__(self, other: Number) -> "Surd":
        other = lift(other)
        d = self._radicand(other)
        return Surd(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.d)

    def __truediv__(self, other: Number) -> "Surd":
        other = lift(other)
        norm = other.a * other.a - other.b * other.b * other.d
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        top = self * other.conjugate()
        return Surd(top.a / norm, top.b / norm, top.d)

    def __rtruediv__(self, other: Number) -> "Surd":
        return lift(other) / self

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        if self.b == 0:
            return sa
        sb = (self.b > 0) - (self.b < 0)
        if sa == 0 or sa == sb:
            return sb
        # opposite signs; a^2 == b^2 d is impossible for square-free d > 1
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def floor(self) -> int:
        if self.b == 0:
            return math.floor(self.a)
        num, den = self.b.numerator, self.b.denominator
        root = math.isqrt(num * num * self.d)
        n = math.floor(self.a + Fraction(root if num > 0 else -root, den))
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def ceil(self) -> int:
        return -((-self).floor())

    def __lt__(self, other: Number) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Number) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Number) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Number) -> bool:
        return (self - other).sign() >= 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt({self.d})"


def lift(x: Number) -> Surd:
    if isinstance(x, Surd):
        return x
    if isinstance(x, (int, Fraction)):
        return Surd(Fraction(x))
    raise TypeError(f"cannot use {type(x).__name__} in exact arithmetic")


def count_integers(lo: Surd, hi: Surd, lo_closed: bool, hi_closed: bool) -> int:
    """Number of integers k with lo <(=) k <(=) hi."""
    first = lo.ceil() if lo_closed else lo.floor() + 1
    last = hi.floor() if hi_closed else hi.ceil() - 1
    return max(0, last - first + 1)


# ---------------------------------------------------------------------------
# slopes and intervals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalSlope:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p <= 0 or self.q <= 0:
            raise SlopeError(f"slope {self.p}/{self.q} must be positive")
        g = math.gcd(self.p, self.q)
        object.__setattr__(self, "p", self.p // g)
        object.__setattr__(self, "q", self.q // g)

    @property
    def value(self) -> Surd:
        return Surd(Fraction(self.p, self.q))

    @property
    def is_rational(self) -> bool:
        return True

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class QuadraticSurdSlope:
    """The slope (A + B*sqrt(d)) / C."""

    A: int
    B: int
    C: int
    d: int

    def __post_init__(self) -> None:
        A, B, C, d = self.A, self.B, self.C, self.d
        if C == 0:
            raise SlopeError("denominator C must be non-zero")
        if C < 0:
            A, B, C = -A, -B, -C
        k, d = squarefree_split(d)
        B *= k
        if d == 1 or B == 0:
            raise SlopeError("a quadratic surd slope needs a non-square radicand and B != 0; use p/q")
        g = math.gcd(math.gcd(A, B), C)
        A, B, C = A // g, B // g, C // g
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "d", d)
        if self.value.sign() <= 0:
            raise SlopeError(f"slope {self} must be positive")

    @property
    def value(self) -> Surd:
        return Surd(Fraction(self.A, self.C), Fraction(self.B, self.C), self.d)

    @property
    def is_rational(self) -> bool:
        return False

    def __str__(self) -> str:
        return f"surd:{self.A},{self.B},{self.C},{self.d}"


SlopeSpec = Union[RationalSlope, QuadraticSurdSlope]


def slope_from_value(value: Surd) -> SlopeSpec:
    if value.is_rational:
        return RationalSlope(value.a.numerator, value.a.denominator)
    den = value.a.denominator * value.b.denominator // math.gcd(value.a.denominator, value.b.denominator)
    return QuadraticSurdSlope(int(value.a * den), int(value.b * den), den, value.d)


@dataclass(frozen=True)
class IntervalSpec:
    """An interval of the real line; ``None`` stands for an infinite end."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]
    lo_open: bool = True
    hi_open: bool = True

    def __post_init__(self) -> None:
        if self.lo is not None:
            object.__setattr__(self, "lo", Fraction(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo is None and not self.lo_open or self.hi is None and not self.hi_open:
            raise SlopeError("infinite interval ends must be open")
        if self.lo is not None and self.hi is not None and not self.lo < self.hi:
            raise SlopeError(f"empty interval {self}")

    def contains(self, x: Number) -> bool:
        x = lift(x)
        if self.lo is not None and (x < self.lo or self.lo_open and not x > self.lo):
            return False
        if self.hi is not None and (x > self.hi or self.hi_open and not x < self.hi):
            return False
        return True

    @property
    def bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def negated(self) -> "IntervalSpec":
        return IntervalSpec(
            None if self.hi is None else -self.hi,
            None if self.lo is None else -self.lo,
            self.hi_open,
            self.lo_open,
        )

    def __str__(self) -> str:
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "inf" if self.hi is None else str(self.hi)
        return f"{left}{lo},{hi}{right}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SlopeError(f"not an exact rational: {text!r}") from exc


_SURD_RE = re.compile(r"^surd:\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(\d+)\s*$")


def parse_slope(text: str) -> SlopeSpec:
    """Parse ``p/q``, ``n`` or ``surd:A,B,C,d``."""
    text = text.strip()
    match = _SURD_RE.match(text)
    if match:
        A, B, C, d = (int(g) for g in match.groups())
        return QuadraticSurdSlope(A, B, C, d)
    value = parse_rational(text)
    return RationalSlope(value.numerator, value.denominator)


_INTERVAL_RE = re.compile(r"^([\(\[])\s*([^,]+?)\s*,\s*([^,]+?)\s*([\)\]])$")
_NEG_INF = {"-inf", "-infinity", "-oo"}
_POS_INF = {"inf", "+inf", "infinity", "oo", "+oo"}


def parse_interval(text: str) -> IntervalSpec:
    """Parse interval notation such as ``(0,8)``, ``[0,inf)``, ``(-inf,inf)``."""
    match = _INTERVAL_RE.match(text.strip())
    if not match:
        raise SlopeError(f"not an interval: {text!r}")
    left, lo_raw, hi_raw, right = match.groups()
    lo = None if lo_raw.lower() in _NEG_INF else parse_rational(lo_raw)
    hi = None if hi_raw.lower() in _POS_INF else parse_rational(hi_raw)
    return IntervalSpec(lo, hi, lo_open=left == "(", hi_open=right == ")")
