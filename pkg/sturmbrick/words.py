"""Finite binary words over {a, b} and finite descriptions of infinite ones."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Literal, Optional, Union

from .errors import WordError
from .exact import IntervalSpec, SlopeSpec

ALPHABET = frozenset("ab")

Side = Literal["right", "left", "double"]
Convention = Literal["lower", "upper"]


class Periodicity(str, Enum):
    PERIODIC = "Periodic"
    EVENTUALLY_RIGHT_PERIODIC = "EventuallyRightPeriodic"
    EVENTUALLY_LEFT_PERIODIC = "EventuallyLeftPeriodic"
    APERIODIC = "Aperiodic"


def check_word(w: str) -> str:
    bad = set(w) - ALPHABET
    if bad:
        raise WordError(f"word {w!r} has letters outside {{a, b}}: {sorted(bad)}")
    return w


def primitive_root(w: str) -> str:
    n = len(w)
    for k in range(1, n + 1):
        if n % k == 0 and w[:k] * (n // k) == w:
            return w[:k]
    return w


def least_rotation(w: str) -> str:
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


# ---------------------------------------------------------------------------
# infinite word specifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EventuallyPeriodicRight:
    """head . period . period . ..."""

    head: str
    period: str

    def __post_init__(self) -> None:
        head, period = check_word(self.head), check_word(self.period)
        if not period:
            raise WordError("period must be non-empty")
        period = primitive_root(period)
        while head and head[-1] == period[-1]:
            head, period = head[:-1], period[-1] + period[:-1]
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "period", period)


@dataclass(frozen=True)
class EventuallyPeriodicLeft:
    """... period . period . tail"""

    period: str
    tail: str

    def __post_init__(self) -> None:
        period, tail = check_word(self.period), check_word(self.tail)
        if not period:
            raise WordError("period must be non-empty")
        period = primitive_root(period)
        while tail and tail[0] == period[0]:
            tail, period = tail[1:], period[1:] + period[0]
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "tail", tail)


@dataclass(frozen=True)
class BiPeriodic:
    period: str

    def __post_init__(self) -> None:
        period = check_word(self.period)
        if not period:
            raise WordError("period must be non-empty")
        object.__setattr__(self, "period", least_rotation(primitive_root(period)))


@dataclass(frozen=True)
class CuttingLine:
    """The cutting word of y = slope*x + intercept over an unbounded domain."""

    slope: SlopeSpec
    intercept: Fraction
    domain: IntervalSpec
    convention: Convention = "lower"

    def __post_init__(self) -> None:
        object.__setattr__(self, "intercept", Fraction(self.intercept))
        if self.domain.bounded:
            raise WordError(f"an infinite cutting word needs an unbounded domain, got {self.domain}")
        if self.convention not in ("lower", "upper"):
            raise WordError(f"unknown convention {self.convention!r}")


@dataclass(frozen=True)
class CharacteristicCF:
    """Characteristic word of slope [0; cf_head..., cf_period, cf_period, ...]."""

    cf_head: tuple[int, ...] = ()
    cf_period: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        head, period = tuple(self.cf_head), tuple(self.cf_period)
        if not head and not period:
            raise WordError("continued fraction has no coefficients")
        if any(int(c) != c or c < 1 for c in head + period):
            raise WordError(f"continued fraction coefficients must be positive integers: {head + period}")
        object.__setattr__(self, "cf_head", head)
        object.__setattr__(self, "cf_period", period)

    @property
    def is_irrational(self) -> bool:
        return bool(self.cf_period)

    def coefficient(self, i: int) -> int:
        """The coefficient a_{i+1} (0-based over a_1, a_2, ...)."""
        if i < len(self.cf_head):
            return self.cf_head[i]
        if not self.cf_period:
            raise IndexError(i)
        return self.cf_period[(i - len(self.cf_head)) % len(self.cf_period)]

    def coefficient_count(self) -> Optional[int]:
        return None if self.cf_period else len(self.cf_head)


@dataclass(frozen=True)
class Prefixed:
    """head . rest, for a right-infinite rest."""

    head: str
    rest: "InfiniteWordSpec"

    def __post_init__(self) -> None:
        check_word(self.head)
        if spec_side(self.rest) != "right":
            raise WordError("a prefixed spec wraps a right-infinite word")
        if isinstance(self.rest, Prefixed):
            object.__setattr__(self, "head", self.head + self.rest.head)
            object.__setattr__(self, "rest", self.rest.rest)


@dataclass(frozen=True)
class Suffixed:
    """rest . tail, for a left-infinite rest."""

    rest: "InfiniteWordSpec"
    tail: str

    def __post_init__(self) -> None:
        check_word(self.tail)
        if spec_side(self.rest) != "left":
            raise WordError("a suffixed spec wraps a left-infinite word")
        if isinstance(self.rest, Suffixed):
            object.__setattr__(self, "tail", self.rest.tail + self.tail)
            object.__setattr__(self, "rest", self.rest.rest)


InfiniteWordSpec = Union[
    EventuallyPeriodicRight,
    EventuallyPeriodicLeft,
    BiPeriodic,
    CuttingLine,
    CharacteristicCF,
    Prefixed,
    Suffixed,
]


def prefixed(head: str, rest: InfiniteWordSpec) -> InfiniteWordSpec:
    return Prefixed(head, rest) if head else rest


def suffixed(rest: InfiniteWordSpec, tail: str) -> InfiniteWordSpec:
    return Suffixed(rest, tail) if tail else rest


def spec_side(spec: InfiniteWordSpec) -> Side:
    if isinstance(spec, (EventuallyPeriodicRight, CharacteristicCF, Prefixed)):
        return "right"
    if isinstance(spec, (EventuallyPeriodicLeft, Suffixed)):
        return "left"
    if isinstance(spec, BiPeriodic):
        return "double"
    if isinstance(spec, CuttingLine):
        if spec.domain.lo is None and spec.domain.hi is None:
            return "double"
        return "right" if spec.domain.hi is None else "left"
    raise WordError(f"not an infinite word spec: {spec!r}")


@dataclass(frozen=True)
class WordWindow:
    word: str
    left_closed: bool = True
    right_closed: bool = True

    def __post_init__(self) -> None:
        check_word(self.word)


# ---------------------------------------------------------------------------
# statistics on finite words
# ---------------------------------------------------------------------------


def hamming_weight(w: str) -> int:
    return check_word(w).count("b")


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    witness: Optional[tuple[int, str, str]] = None


def is_balanced(w: str) -> BalanceResult:
    """Balanced iff equal-length subwords differ in weight by at most one.

    The witness uses the smallest offending length n; u1 is the leftmost
    subword of minimal weight and u2 the leftmost of maximal weight.
    """
    check_word(w)
    for n in range(1, len(w) + 1):
        weights = [w[i:i + n].count("b") for i in range(len(w) - n + 1)]
        low, high = min(weights), max(weights)
        if high - low >= 2:
            i, j = weights.index(low), weights.index(high)
            return BalanceResult(False, (n, w[i:i + n], w[j:j + n]))
    return BalanceResult(True)


def complexity(w: str, n: int) -> int:
    check_word(w)
    if n < 1:
        raise WordError(f"complexity needs a positive length, got {n}")
    return len({w[i:i + n] for i in range(len(w) - n + 1)})


def transpose(w: str) -> str:
    return check_word(w)[::-1]


def occurrences(pattern: str, w: str) -> list[int]:
    return [i for i in range(len(w) - len(pattern) + 1) if w.startswith(pattern, i)]


# ---------------------------------------------------------------------------
# operations on specs
# ---------------------------------------------------------------------------


def classify_periodicity(spec: InfiniteWordSpec) -> Periodicity:
    from .sturmian import as_periodic_spec

    if isinstance(spec, Prefixed):
        inner = classify_periodicity(spec.rest)
        if inner is Periodicity.APERIODIC:
            return inner
        return classify_periodicity(_prepend(spec.head, as_periodic_spec(spec.rest)))
    if isinstance(spec, Suffixed):
        inner = classify_periodicity(spec.rest)
        if inner is Periodicity.APERIODIC:
            return inner
        return classify_periodicity(_append(as_periodic_spec(spec.rest), spec.tail))
    if isinstance(spec, (CuttingLine, CharacteristicCF)):
        periodic = as_periodic_spec(spec)
        if periodic is None:
            return Periodicity.APERIODIC
        return classify_periodicity(periodic)
    if isinstance(spec, EventuallyPeriodicRight):
        return Periodicity.PERIODIC if not spec.head else Periodicity.EVENTUALLY_RIGHT_PERIODIC
    if isinstance(spec, EventuallyPeriodicLeft):
        return Periodicity.PERIODIC if not spec.tail else Periodicity.EVENTUALLY_LEFT_PERIODIC
    if isinstance(spec, BiPeriodic):
        return Periodicity.PERIODIC
    raise WordError(f"not an infinite word spec: {spec!r}")


def _prepend(head: str, spec: InfiniteWordSpec) -> EventuallyPeriodicRight:
    assert isinstance(spec, EventuallyPeriodicRight)
    return EventuallyPeriodicRight(head + spec.head, spec.period)


def _append(spec: InfiniteWordSpec, tail: str) -> EventuallyPeriodicLeft:
    assert isinstance(spec, EventuallyPeriodicLeft)
    return EventuallyPeriodicLeft(spec.period, spec.tail + tail)


def transpose_spec(spec: InfiniteWordSpec) -> InfiniteWordSpec:
    """The reversed infinite word."""
    from .sturmian import characteristic_line

    if isinstance(spec, EventuallyPeriodicRight):
        return EventuallyPeriodicLeft(spec.period[::-1], spec.head[::-1])
    if isinstance(spec, EventuallyPeriodicLeft):
        return EventuallyPeriodicRight(spec.tail[::-1], spec.period[::-1])
    if isinstance(spec, BiPeriodic):
        return BiPeriodic(spec.period[::-1])
    if isinstance(spec, CuttingLine):
        flipped: Convention = "upper" if spec.convention == "lower" else "lower"
        return CuttingLine(spec.slope, -spec.intercept, spec.domain.negated(), flipped)
    if isinstance(spec, CharacteristicCF):
        return transpose_spec(characteristic_line(spec))
    if isinstance(spec, Prefixed):
        return suffixed(transpose_spec(spec.rest), spec.head[::-1])
    if isinstance(spec, Suffixed):
        return prefixed(spec.tail[::-1], transpose_spec(spec.rest))
    raise WordError(f"not an infinite word spec: {spec!r}")


def window(spec: InfiniteWordSpec, offset: int, length: int) -> WordWindow:
    """Letters offset .. offset+length-1 of the spec's word.

    Right-infinite words are indexed from 0, left-infinite words end at
    index -1, double-infinite words use every integer.
    """
    from .sturmian import characteristic_word, cutting_word_window

    if length < 0:
        raise WordError(f"window length must be non-negative, got {length}")
    side = spec_side(spec)
    if side == "right" and offset < 0:
        raise WordError(f"offset {offset} is before the start of a right-infinite word")
    if side == "left" and offset + length > 0:
        raise WordError(f"window [{offset}, {offset + length}) passes the end of a left-infinite word")

    if isinstance(spec, EventuallyPeriodicRight):
        word = "".join(_right_letter(spec.head, spec.period, i) for i in range(offset, offset + length))
    elif isinstance(spec, EventuallyPeriodicLeft):
        word = "".join(_left_letter(spec.period, spec.tail, i) for i in range(offset, offset + length))
    elif isinstance(spec, BiPeriodic):
        p = spec.period
        word = "".join(p[i % len(p)] for i in range(offset, offset + length))
    elif isinstance(spec, CharacteristicCF):
        word = characteristic_word(spec, offset + length).word[offset:]
    elif isinstance(spec, CuttingLine):
        word = cutting_word_window(spec, offset, length)
    elif isinstance(spec, Prefixed):
        inner_start = max(0, offset - len(spec.head))
        inner_length = max(0, offset + length - len(spec.head)) - inner_start
        word = spec.head[offset:offset + length] + window(spec.rest, inner_start, inner_length).word
    elif isinstance(spec, Suffixed):
        n = len(spec.tail)
        inner_end = min(0, offset + length + n)
        inner_start = min(inner_end, offset + n)
        lo = max(0, offset + n)
        hi = max(0, offset + length + n)
        word = window(spec.rest, inner_start, inner_end - inner_start).word + spec.tail[lo:hi]
    else:
        raise WordError(f"not an infinite word spec: {spec!r}")

    return WordWindow(
        word,
        left_closed=side == "right" and offset == 0,
        right_closed=side == "left" and offset + length == 0,
    )


def _right_letter(head: str, period: str, i: int) -> str:
    if i < len(head):
        return head[i]
    return period[(i - len(head)) % len(period)]


def _left_letter(period: str, tail: str, i: int) -> str:
    # i <= -1; -1 is the last letter
    j = -i
    if j <= len(tail):
        return tail[len(tail) - j]
    j -= len(tail)
    return period[len(period) - 1 - ((j - 1) % len(period))]
