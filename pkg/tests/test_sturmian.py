from fractions import Fraction

import pytest

from sturmbrick.errors import WordError
from sturmbrick.exact import QuadraticSurdSlope, RationalSlope, parse_interval
from sturmbrick.sturmian import (
    ChristoffelWord,
    as_periodic_spec,
    characteristic_word,
    christoffel,
    christoffel_prefix_tower,
    convergents,
    is_characteristic_spec,
    is_sturmian_spec,
    left_extensions,
    lower_cutting_word,
    slope_of_cf,
    standard_words,
    sturmian_window_witness,
    upper_cutting_word,
)
from sturmbrick.words import (
    CharacteristicCF,
    CuttingLine,
    EventuallyPeriodicRight,
    Periodicity,
    Prefixed,
    classify_periodicity,
    complexity,
    is_balanced,
    transpose,
    window,
)

SQRT2_MINUS_ONE = QuadraticSurdSlope(-1, 1, 1, 2)


def test_christoffel_words():
    assert christoffel(5, 8).word == "bbabbababbaba"
    assert christoffel(2, 1).word == "baa"
    assert christoffel(1, 2).word == "bba"
    assert christoffel(1, 1).word == "ba"
    assert christoffel(5, 8).interior == "babbababbab"


def test_christoffel_parameter_errors():
    with pytest.raises(WordError):
        christoffel(2, 4)
    with pytest.raises(WordError):
        christoffel(0, 1)


def test_christoffel_word_must_match_its_slope():
    assert ChristoffelWord("bba", RationalSlope(1, 2)).word == "bba"
    with pytest.raises(WordError):
        ChristoffelWord("bbba", RationalSlope(1, 2))
    with pytest.raises(WordError):
        ChristoffelWord("baa", RationalSlope(1, 2))
    with pytest.raises(WordError):
        ChristoffelWord("ba", RationalSlope(2, 1))


def test_finite_cutting_word():
    w = lower_cutting_word(RationalSlope(5, 8), 0, parse_interval("(0,8)"))
    assert w.word == "babbababbab"
    assert w.left_closed and w.right_closed


def test_golden_cutting_words(golden_slope):
    assert lower_cutting_word(golden_slope, 0, parse_interval("(0,inf)"), 12).word == "babbababbabb"
    assert lower_cutting_word(golden_slope, 0, parse_interval("[0,inf)"), 14).word == "bababbababbabb"
    assert upper_cutting_word(golden_slope, 0, parse_interval("[0,inf)"), 14).word == "abbabbababbabb"


def test_closed_endpoints_emit_lattice_points():
    one = RationalSlope(1, 1)
    assert upper_cutting_word(one, 0, parse_interval("[0,2]")).word == "ababab"
    assert upper_cutting_word(one, 0, parse_interval("[0,2)")).word == "abab"


def test_cutting_word_needs_a_bound():
    with pytest.raises(WordError):
        lower_cutting_word(RationalSlope(1, 2), 0, parse_interval("(0,inf)"))
    with pytest.raises(WordError):
        lower_cutting_word(RationalSlope(1, 2), 0, parse_interval("(-inf,0)"), 5)


def test_slope_of_cf():
    assert slope_of_cf(CharacteristicCF((), (1,))) == QuadraticSurdSlope(-1, 1, 2, 5)
    assert slope_of_cf(CharacteristicCF((), (2,))) == SQRT2_MINUS_ONE
    assert slope_of_cf(CharacteristicCF((1, 1), ())) == RationalSlope(1, 2)
    assert slope_of_cf(CharacteristicCF((1, 1, 2), ())) == RationalSlope(3, 5)


def test_convergents_and_standard_words(golden):
    assert convergents(golden, 4) == [(1, 1), (1, 2), (2, 3), (3, 5)]
    assert standard_words(golden, 4) == ["ba", "bab", "babba", "babbabab"]


def test_prefix_tower_interiors_are_prefixes(golden):
    prefix = characteristic_word(golden, 100).word
    tower = christoffel_prefix_tower(golden, 8)
    assert [c.word for c in tower[:3]] == ["ba", "bba", "bbaba"]
    for c in tower:
        assert prefix.startswith(c.interior)


@pytest.mark.acceptance
@pytest.mark.parametrize("cf,slope", [((1,), QuadraticSurdSlope(-1, 1, 2, 5)), ((2,), SQRT2_MINUS_ONE)])
def test_recurrence_agrees_with_cutting_line(cf, slope):
    spec = CharacteristicCF((), cf)
    from_recurrence = characteristic_word(spec, 500).word
    from_line = lower_cutting_word(slope, 0, parse_interval("(0,inf)"), 500).word
    assert from_recurrence == from_line


def test_rational_characteristic_word_matches_its_line():
    spec = CharacteristicCF((1, 1), ())
    assert characteristic_word(spec, 9).word == "bbabbabba"
    line = lower_cutting_word(RationalSlope(1, 2), 0, parse_interval("(0,inf)"), 9).word
    assert line == "bbabbabba"


def test_rational_line_is_eventually_periodic():
    line = CuttingLine(RationalSlope(5, 8), Fraction(0), parse_interval("(0,inf)"))
    periodic = as_periodic_spec(line)
    assert isinstance(periodic, EventuallyPeriodicRight)
    assert len(periodic.period) == 13
    assert window(periodic, 0, 100).word == window(line, 0, 100).word
    assert classify_periodicity(line) is not Periodicity.APERIODIC


def test_cutting_line_over_the_whole_line(golden_slope):
    line = CuttingLine(golden_slope, Fraction(0), parse_interval("(-inf,inf)"))
    assert window(line, 0, 12).word == "babbababbabb"
    assert window(line, -2, 2).word == "ba"
    assert window(line, -30, 60).word[30:] == "babbababbabb" + window(line, 12, 18).word


@pytest.mark.acceptance
def test_golden_prefix_complexity_and_balance(golden):
    prefix = characteristic_word(golden, 200).word
    for n in range(1, 21):
        assert complexity(prefix, n) == n + 1
    assert is_balanced(prefix).balanced
    assert sturmian_window_witness(prefix) is None


def test_sturmian_window_witness():
    assert sturmian_window_witness("babbababaa") == ""
    assert sturmian_window_witness("abababbb") == "b"
    assert sturmian_window_witness("ab") is None


def test_left_extensions_of_the_characteristic_line(golden):
    line = CuttingLine(slope_of_cf(golden), Fraction(0), parse_interval("(0,inf)"))
    assert left_extensions(line, 1) == {"a", "b"}
    assert left_extensions(line, 2) == {"ba", "ab"}
    shifted = CuttingLine(slope_of_cf(golden), Fraction(1, 2), parse_interval("(0,inf)"))
    assert len(left_extensions(shifted, 3)) == 1


def test_is_sturmian_spec(golden, golden_slope):
    assert is_sturmian_spec(golden)
    assert is_sturmian_spec(Prefixed("a", golden))
    assert is_sturmian_spec(Prefixed("ab", golden))
    assert not is_sturmian_spec(Prefixed("aa", golden))
    rational = CuttingLine(RationalSlope(2, 3), Fraction(0), parse_interval("(-inf,inf)"))
    assert is_sturmian_spec(rational).reason == "rational slope"
    assert is_sturmian_spec(EventuallyPeriodicRight("", "ab")).reason == "periodic"
    assert is_sturmian_spec(CuttingLine(golden_slope, Fraction(1, 3), parse_interval("(-inf,inf)")))


def test_is_characteristic_spec(golden, golden_slope):
    assert is_characteristic_spec(golden)
    assert not is_characteristic_spec(CharacteristicCF((1, 1), ()))
    assert is_characteristic_spec(CuttingLine(golden_slope, Fraction(0), parse_interval("(0,inf)")))
    assert is_characteristic_spec(CuttingLine(golden_slope, Fraction(0), parse_interval("(0,inf)"), "upper"))
    assert not is_characteristic_spec(CuttingLine(golden_slope, Fraction(1, 2), parse_interval("(0,inf)")))
    assert not is_characteristic_spec(CuttingLine(golden_slope, Fraction(0), parse_interval("[0,inf)")))
    assert not is_characteristic_spec(Prefixed("b", golden))


@pytest.mark.acceptance
def test_right_special_factors_reverse_to_prefixes(golden):
    prefix = characteristic_word(golden, 300).word
    factors = {prefix[i:i + n] for n in range(0, 40) for i in range(len(prefix) - n)}
    violations = [
        s for s in factors
        if s + "a" in prefix and s + "b" in prefix and not prefix.startswith(transpose(s))
    ]
    assert violations == []


def test_window_witness_agrees_with_spec_verdict(golden, golden_slope):
    sturmian = [
        golden,
        Prefixed("a", golden),
        Prefixed("b", golden),
        Prefixed("ba", golden),
        CuttingLine(golden_slope, Fraction(1, 3), parse_interval("(0,inf)")),
    ]
    unbalanced = [Prefixed("aa", golden), Prefixed("bb", golden), Prefixed("aab", golden)]
    for spec in sturmian:
        assert is_sturmian_spec(spec)
        assert sturmian_window_witness(window(spec, 0, 300)) is None
    for spec in unbalanced:
        assert classify_periodicity(spec) is Periodicity.APERIODIC
        assert not is_sturmian_spec(spec)
        assert sturmian_window_witness(window(spec, 0, 300)) is not None
    assert sturmian_window_witness(window(Prefixed("bb", golden), 0, 300)) == "b"


def test_characteristic_words_extend_both_ways(golden, golden_slope):
    c = characteristic_word(golden, 300).word
    assert sturmian_window_witness("a" + c) is None
    assert sturmian_window_witness("b" + c) is None

    shifted = CuttingLine(golden_slope, Fraction(1, 2), parse_interval("(0,inf)"))
    w = window(shifted, 0, 300).word
    (h,) = left_extensions(shifted, 1)
    other = "a" if h == "b" else "b"
    assert is_sturmian_spec(Prefixed(h, shifted))
    assert not is_sturmian_spec(Prefixed(other, shifted))
    assert sturmian_window_witness(h + w) is None
    assert sturmian_window_witness(other + w) is not None
