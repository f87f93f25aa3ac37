"""Cutting words, characteristic words and Christoffel words.

Letters are produced cell by cell: the unit cell (n-1, n] of the x axis
contributes one ``a`` per horizontal grid line crossed strictly inside the
cell, then the crossing at x = n itself (``b``, or ``ba``/``ab`` when the line
passes through a lattice point, for the lower/upper convention).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .config import get_logger
from .errors import WordError
from .exact import (
    IntervalSpec,
    RationalSlope,
    SlopeSpec,
    Surd,
    count_integers,
    slope_from_value,
)
from .words import (
    BiPeriodic,
    CharacteristicCF,
    Convention,
    CuttingLine,
    EventuallyPeriodicLeft,
    EventuallyPeriodicRight,
    InfiniteWordSpec,
    Periodicity,
    Prefixed,
    Suffixed,
    WordWindow,
    check_word,
    classify_periodicity,
    spec_side,
    transpose_spec,
)

logger = get_logger(__name__)

POSITIVE_REALS = IntervalSpec(Fraction(0), None, True, True)


def floor_line(slope: SlopeSpec, intercept: Union[int, Fraction], x: int) -> int:
    """Exact floor of slope*x + intercept."""
    return (slope.value * x + Fraction(intercept)).floor()


# ---------------------------------------------------------------------------
# cell-by-cell generation
# ---------------------------------------------------------------------------


def _cell(m: Surd, c: Fraction, domain: IntervalSpec, n: int, convention: Convention) -> str:
    """Letters emitted over (n-1, n] intersected with the domain."""
    if domain.lo is not None and domain.lo > n - 1:
        left, left_closed = domain.lo, not domain.lo_open
    else:
        left, left_closed = Fraction(n - 1), False
    if domain.hi is not None and domain.hi < n:
        right, right_closed, event = domain.hi, not domain.hi_open, False
    else:
        right, right_closed, event = Fraction(n), False, domain.contains(n)

    letters = "a" * count_integers(m * left + c, m * right + c, left_closed, right_closed)
    if event:
        if (m * n + c).is_integer():
            letters += "ba" if convention == "lower" else "ab"
        else:
            letters += "b"
    return letters


def _cells_forward(m: Surd, c: Fraction, domain: IntervalSpec, convention: Convention, start: int) -> Iterator[str]:
    n = start
    while domain.hi is None or n - 1 < domain.hi:
        yield _cell(m, c, domain, n, convention)
        n += 1


def _cells_backward(m: Surd, c: Fraction, domain: IntervalSpec, convention: Convention, start: int) -> Iterator[str]:
    n = start
    while domain.lo is None or n > domain.lo:
        yield _cell(m, c, domain, n, convention)
        n -= 1


def _take_forward(cells: Iterator[str], count: Optional[int]) -> tuple[str, bool]:
    """First ``count`` letters (all when None); the flag says the word was exhausted."""
    parts: list[str] = []
    total = 0
    for letters in cells:
        parts.append(letters)
        total += len(letters)
        if count is not None and total >= count:
            word = "".join(parts)
            return word[:count], False
    word = "".join(parts)
    return word, True


def _take_backward(cells: Iterator[str], count: int) -> str:
    """Last ``count`` letters of a word produced right to left."""
    parts: list[str] = []
    total = 0
    for letters in cells:
        if total >= count:
            break
        parts.append(letters)
        total += len(letters)
    word = "".join(reversed(parts))
    return word[len(word) - count:] if count else ""


def _cutting_word(
    slope: SlopeSpec,
    intercept: Union[int, Fraction],
    domain: IntervalSpec,
    max_letters: Optional[int],
    convention: Convention,
) -> WordWindow:
    if domain.lo is None:
        raise WordError(f"domain {domain} has no first letter; use cutting_word_window")
    if max_letters is None and domain.hi is None:
        raise WordError("max_letters is required over a right-infinite domain")
    if max_letters is not None and max_letters < 1:
        raise WordError(f"max_letters must be positive, got {max_letters}")
    cells = _cells_forward(slope.value, Fraction(intercept), domain, convention, math.ceil(domain.lo))
    word, exhausted = _take_forward(cells, max_letters)
    return WordWindow(word, left_closed=True, right_closed=exhausted)


def lower_cutting_word(
    slope: SlopeSpec,
    intercept: Union[int, Fraction],
    domain: IntervalSpec,
    max_letters: Optional[int] = None,
) -> WordWindow:
    return _cutting_word(slope, intercept, domain, max_letters, "lower")


def upper_cutting_word(
    slope: SlopeSpec,
    intercept: Union[int, Fraction],
    domain: IntervalSpec,
    max_letters: Optional[int] = None,
) -> WordWindow:
    return _cutting_word(slope, intercept, domain, max_letters, "upper")


def cutting_word_window(spec: CuttingLine, offset: int, length: int) -> str:
    """Letters offset .. offset+length-1 of an infinite cutting word.

    Over the whole line, index 0 is the first letter emitted for x > 0.
    """
    m, c, domain, conv = spec.slope.value, spec.intercept, spec.domain, spec.convention
    side = spec_side(spec)
    if side == "right":
        cells = _cells_forward(m, c, domain, conv, math.ceil(domain.lo))
        word, _ = _take_forward(cells, offset + length)
        return word[offset:]
    if side == "left":
        word = _take_backward(_cells_backward(m, c, domain, conv, math.ceil(domain.hi)), -offset)
        return word[:length]
    right = ""
    if offset + length > 0:
        start = max(0, offset)
        right, _ = _take_forward(_cells_forward(m, c, domain, conv, 1), offset + length)
        right = right[start:]
    left = ""
    if offset < 0:
        left = _take_backward(_cells_backward(m, c, domain, conv, 0), -offset)
        left = left[: min(length, -offset)]
    return left + right


def _cells_word(line: CuttingLine, first: int, last: int) -> str:
    m, c = line.slope.value, line.intercept
    return "".join(_cell(m, c, line.domain, n, line.convention) for n in range(first, last + 1))


def rational_line_as_periodic(line: CuttingLine) -> InfiniteWordSpec:
    """Exact eventually periodic form of a rational-slope cutting word.

    Cells q apart carry the same letters, so one period is q consecutive cells.
    """
    if not isinstance(line.slope, RationalSlope):
        raise WordError(f"slope {line.slope} is irrational")
    q = line.slope.q
    side = spec_side(line)
    if side == "right":
        n = math.ceil(line.domain.lo)
        return EventuallyPeriodicRight(_cells_word(line, n, n), _cells_word(line, n + 1, n + q))
    if side == "left":
        n = math.ceil(line.domain.hi)
        return EventuallyPeriodicLeft(_cells_word(line, n - q, n - 1), _cells_word(line, n, n))
    return BiPeriodic(_cells_word(line, 1, q))


def as_periodic_spec(spec: InfiniteWordSpec) -> Optional[InfiniteWordSpec]:
    """The eventually periodic form of ``spec``, or None when it is aperiodic."""
    if isinstance(spec, (EventuallyPeriodicRight, EventuallyPeriodicLeft, BiPeriodic)):
        return spec
    if isinstance(spec, CuttingLine):
        return rational_line_as_periodic(spec) if isinstance(spec.slope, RationalSlope) else None
    if isinstance(spec, CharacteristicCF):
        return None if spec.is_irrational else as_periodic_spec(characteristic_line(spec))
    if isinstance(spec, Prefixed):
        inner = as_periodic_spec(spec.rest)
        if inner is None:
            return None
        assert isinstance(inner, EventuallyPeriodicRight)
        return EventuallyPeriodicRight(spec.head + inner.head, inner.period)
    if isinstance(spec, Suffixed):
        inner = as_periodic_spec(spec.rest)
        if inner is None:
            return None
        assert isinstance(inner, EventuallyPeriodicLeft)
        return EventuallyPeriodicLeft(inner.period, inner.tail + spec.tail)
    raise WordError(f"not an infinite word spec: {spec!r}")


# ---------------------------------------------------------------------------
# continued fractions
# ---------------------------------------------------------------------------


def slope_of_cf(spec: CharacteristicCF) -> SlopeSpec:
    """The exact number [0; a_1, a_2, ...]."""
    if not spec.is_irrational:
        tail = Fraction(spec.cf_head[-1])
        for a in reversed(spec.cf_head[:-1]):
            tail = a + 1 / tail
        # tail = [a_1; a_2, ...], the slope is its reciprocal
        return RationalSlope(tail.denominator, tail.numerator)

    # purely periodic tail t = [c_1; ..., c_k, t] is a fixed point of a Moebius map
    p, p_prev, q, q_prev = 1, 0, 0, 1
    for a in spec.cf_period:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    # t = (p t + p_prev) / (q t + q_prev)  =>  q t^2 + (q_prev - p) t - p_prev = 0
    disc = (q_prev - p) ** 2 + 4 * q * p_prev
    t = Surd.of(Fraction(p - q_prev, 2 * q), Fraction(1, 2 * q), disc)
    value = t
    for a in reversed(spec.cf_head):
        value = a + 1 / value
    return slope_from_value(1 / value)


def convergents(spec: CharacteristicCF, k: int) -> list[tuple[int, int]]:
    """The first k convergents p_i/q_i of [0; a_1, a_2, ...] as (p_i, q_i)."""
    if k < 1:
        raise WordError(f"need at least one convergent, got k={k}")
    count = spec.coefficient_count()
    if count is not None:
        k = min(k, count)
    result = []
    p_prev, p = 1, 0
    q_prev, q = 0, 1
    for i in range(k):
        a = spec.coefficient(i)
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        result.append((p, q))
    return result


def standard_words(spec: CharacteristicCF, k: int) -> list[str]:
    """s_1 .. s_k with s_{-1} = a, s_0 = b and s_n = s_{n-1}^{a_n} s_{n-2}."""
    count = spec.coefficient_count()
    if count is not None:
        k = min(k, count)
    older, old = "a", "b"
    words = []
    for i in range(k):
        older, old = old, old * spec.coefficient(i) + older
        words.append(old)
    return words


def characteristic_line(spec: CharacteristicCF) -> CuttingLine:
    return CuttingLine(slope_of_cf(spec), Fraction(0), POSITIVE_REALS, "lower")


def characteristic_word(spec: CharacteristicCF, n: int) -> WordWindow:
    """Length-n prefix of the characteristic word of slope [0; a_1, ...]."""
    if n < 0:
        raise WordError(f"length must be non-negative, got {n}")
    if spec.is_irrational:
        older, old = "a", "b"
        i = 0
        while len(old) < n or i == 0:
            older, old = old, old * spec.coefficient(i) + older
            i += 1
        return WordWindow(old[:n], left_closed=True, right_closed=False)

    last = standard_words(spec, len(spec.cf_head))[-1]
    if last.endswith("ab"):
        last = last[:-2] + "ba"
    word = last * (n // len(last) + 1)
    return WordWindow(word[:n], left_closed=True, right_closed=False)


# ---------------------------------------------------------------------------
# Christoffel words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChristoffelWord:
    word: str
    slope: RationalSlope

    def __post_init__(self) -> None:
        check_word(self.word)
        if not (self.word.startswith("b") and self.word.endswith("a")):
            raise WordError(f"Christoffel word {self.word!r} must start with b and end with a")
        p, q = self.slope.p, self.slope.q
        if len(self.word) != p + q or self.word.count("b") != q:
            raise WordError(f"Christoffel word {self.word!r} does not have slope {p}/{q}")

    @property
    def interior(self) -> str:
        return self.word[1:-1]

    def __str__(self) -> str:
        return self.word


def christoffel(p: int, q: int) -> ChristoffelWord:
    """b . (lower cutting word of slope p/q over (0, q)) . a"""
    if p < 1 or q < 1:
        raise WordError(f"Christoffel parameters must be positive, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise WordError(f"Christoffel parameters must be coprime, got ({p}, {q})")
    slope = RationalSlope(p, q)
    interior = lower_cutting_word(slope, 0, IntervalSpec(Fraction(0), Fraction(q), True, True)).word
    return ChristoffelWord("b" + interior + "a", slope)


def christoffel_prefix_tower(spec: CharacteristicCF, k: int) -> list[ChristoffelWord]:
    """Christoffel words of the first k convergents; their interiors are prefixes."""
    if not spec.is_irrational:
        raise WordError("the prefix tower needs an irrational slope")
    tower = [christoffel(p, q) for p, q in convergents(spec, k)]
    logger.debug("prefix tower of %s: %s", spec, [str(c) for c in tower])
    return tower


# ---------------------------------------------------------------------------
# Sturmian decisions
# ---------------------------------------------------------------------------


def sturmian_window_witness(w: Union[WordWindow, str]) -> Optional[str]:
    """Shortest x with both axa and bxb occurring, earliest occurrences first."""
    word = w.word if isinstance(w, WordWindow) else check_word(w)
    for length in range(0, len(word) - 1):
        first_a: dict[str, int] = {}
        first_b: dict[str, int] = {}
        for i in range(len(word) - length - 1):
            outer, last = word[i], word[i + length + 1]
            if outer != last:
                continue
            x = word[i + 1 : i + length + 1]
            table = first_a if outer == "a" else first_b
            table.setdefault(x, i)
        common = set(first_a) & set(first_b)
        if common:
            return min(common, key=lambda x: (max(first_a[x], first_b[x]), min(first_a[x], first_b[x])))
    return None


@dataclass(frozen=True)
class SturmianVerdict:
    sturmian: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.sturmian

    def __str__(self) -> str:
        return "sturmian" if self.sturmian else f"not_sturmian({self.reason})"


def _as_line(spec: InfiniteWordSpec) -> Optional[CuttingLine]:
    if isinstance(spec, CuttingLine):
        return spec
    if isinstance(spec, CharacteristicCF):
        return characteristic_line(spec)
    return None


def left_extensions(line: CuttingLine, length: int) -> set[str]:
    """Words h of the given length that continue the line's word to the left.

    The letters come from the complementary half-line; a lattice point outside
    the domain may be read with either convention.
    """
    if spec_side(line) != "right":
        raise WordError("left extensions are defined for right-infinite cutting words")
    if length == 0:
        return {""}
    complement = IntervalSpec(None, line.domain.lo, True, not line.domain.lo_open)
    conventions = {line.convention}
    if line.intercept.denominator == 1 and not line.domain.contains(0):
        conventions |= {"lower", "upper"}
    found = set()
    for conv in sorted(conventions):
        left = CuttingLine(line.slope, line.intercept, complement, conv)
        found.add(cutting_word_window(left, -length, length))
    return found


def is_sturmian_spec(spec: InfiniteWordSpec) -> SturmianVerdict:
    if isinstance(spec, CuttingLine) and isinstance(spec.slope, RationalSlope):
        return SturmianVerdict(False, "rational slope")
    if classify_periodicity(spec) is not Periodicity.APERIODIC:
        return SturmianVerdict(False, "periodic")
    if isinstance(spec, Suffixed):
        return is_sturmian_spec(transpose_spec(spec))
    if isinstance(spec, Prefixed):
        inner = is_sturmian_spec(spec.rest)
        if not inner:
            return inner
        line = _as_line(spec.rest)
        if line is None:
            return SturmianVerdict(False, "unsupported prefixed body")
        if spec.head not in left_extensions(line, len(spec.head)):
            return SturmianVerdict(False, f"head {spec.head!r} does not extend the line")
        return SturmianVerdict(True)
    if isinstance(spec, (CuttingLine, CharacteristicCF)):
        return SturmianVerdict(True)
    return SturmianVerdict(False, "periodic")


def is_characteristic_spec(spec: InfiniteWordSpec) -> bool:
    """True iff the spec denotes the characteristic word of an irrational slope."""
    if isinstance(spec, CharacteristicCF):
        return spec.is_irrational
    if not isinstance(spec, CuttingLine):
        return False
    if isinstance(spec.slope, RationalSlope) or spec.intercept.denominator != 1:
        return False
    if spec_side(spec) != "right":
        return False
    lo = spec.domain.lo
    if lo < 0 or (lo == 0 and not spec.domain.lo_open):
        return False
    if lo == 0:
        return True
    # with an integer intercept every crossing sits on Z or (1/m)Z
    first = _first_positive_crossing(spec.slope.value)
    if first < lo:
        return False
    return not (first <= lo and spec.domain.lo_open)


def _first_positive_crossing(m: Surd) -> Surd:
    inverse = 1 / m
    one = Surd(Fraction(1))
    return inverse if inverse < one else one
