import dataclasses
import itertools
import json

import pytest

from sturmbrick.bridge import (
    ABWord,
    InfiniteDKSpec,
    InfiniteGraphMap,
    ab_envelopes,
    classify_infinite,
    cyclic_kisses,
    decode_ab,
    dk_config,
    encode_ab,
    encode_prefixed,
    falsify,
    generalized_classify,
    in_christoffel_class,
    infinite_graph_map,
    inner_witness_ab,
    is_christoffel_word,
    lyndon_words,
    prefix_condition_witness,
    shared_suffix_check,
    strong_inner_witness_ab,
    strong_inner_witness_generic,
    verify_brick_band_christoffel,
    verify_single_kissing,
)
from sturmbrick.errors import SpecError
from sturmbrick.gentle import GentleAlgebra, enumerate_strings, format_string, is_string, lazy, parse_string
from sturmbrick.modules import is_brick_finite, is_inner_brick, is_strong_inner_brick
from sturmbrick.schemas import InfiniteDKSpecFile
from sturmbrick.sturmian import as_periodic_spec
from sturmbrick.words import (
    BiPeriodic,
    EventuallyPeriodicLeft,
    EventuallyPeriodicRight,
    Prefixed,
)

WINDOW = 200
FLAGS = [(False, False), (True, False), (False, True), (True, True)]


def _panel(data_dir):
    items = json.loads((data_dir / "specs" / "panel.json").read_text(encoding="utf-8"))
    return [InfiniteDKSpecFile.model_validate(item) for item in items]


def _words(max_len):
    for n in range(1, max_len + 1):
        for letters in itertools.product("ab", repeat=n):
            yield "".join(letters)


# ---------------------------------------------------------------------------
# encoding
# ---------------------------------------------------------------------------


def test_encode_letters(dk):
    assert format_string(encode_ab("ab", dk)) == "alpha1- alpha2 beta1 beta2-"
    assert format_string(encode_ab(ABWord("ab", "inverted"), dk)) == "alpha2- alpha1 beta2 beta1-"
    assert encode_ab("", dk) == lazy("2")


def test_decode(dk):
    A = dk.algebra
    assert decode_ab(parse_string("beta1 beta2- alpha1- alpha2", A), dk) == ABWord("ba", "forward")
    assert decode_ab(parse_string("alpha2- alpha1 beta2 beta1-", A), dk) == ABWord("ab", "inverted")
    assert decode_ab(lazy("2"), dk) == ABWord("")
    assert decode_ab(lazy("1"), dk) is None
    assert decode_ab(parse_string("alpha1- alpha2 beta1", A), dk) is None
    assert decode_ab(parse_string("alpha2 beta1 beta2-", A), dk) is None


@pytest.mark.acceptance
def test_encoded_words_are_strings_and_decode_back(dk, rng):
    for _ in range(1000):
        n = rng.randint(1, 30)
        word = "".join(rng.choice("ab") for _ in range(n))
        direction = rng.choice(["forward", "inverted"])
        s = encode_ab(ABWord(word, direction), dk)
        assert is_string(s.steps, dk.algebra), word
        assert s.x_count("2") == n + 1
        assert decode_ab(s, dk) == ABWord(word, direction)


# ---------------------------------------------------------------------------
# finite witnesses
# ---------------------------------------------------------------------------


def test_ab_envelopes():
    assert ab_envelopes("aba", "b") == {"axa"}
    assert ab_envelopes("bab", "") == {"xb", "bxa", "axb", "bx"}
    assert ab_envelopes("bab", "", right_open=True) == {"xb", "bxa", "axb"}
    assert ab_envelopes("bab", "b", left_open=True, left_letter="a") == {"axa", "ax"}


def test_strong_inner_witness_ab():
    assert strong_inner_witness_ab("ba") == ""
    assert strong_inner_witness_ab("ba", right_open=True) is None
    assert strong_inner_witness_ab("ba", z_positive=True) is None
    assert strong_inner_witness_ab("bbabab", left_open=True, right_open=True) is None
    assert strong_inner_witness_ab("abab", left_open=True, right_open=True) is None
    assert strong_inner_witness_ab("abaabb", left_open=True, right_open=True) == ""


def test_inner_witness_ab():
    assert inner_witness_ab("aabaabb") == ""
    assert inner_witness_ab("abababbb") == "b"
    assert inner_witness_ab("babbababbabb") is None


def test_prefix_condition_witness():
    assert prefix_condition_witness("abab") == ""
    assert prefix_condition_witness("aaa") is None
    assert prefix_condition_witness("bbabba", lead="a") is None
    assert prefix_condition_witness("babab", lead="b") == ""
    assert prefix_condition_witness("abbaab", lead="b") == "a"


@pytest.mark.parametrize("left_open,right_open", FLAGS)
def test_ab_witness_agrees_with_graph_maps(dk, left_open, right_open):
    for word in _words(7):
        x = strong_inner_witness_ab(word, left_open, right_open)
        gm = strong_inner_witness_generic(word, dk, left_open, right_open)
        assert (x is None) == (gm is None), word


@pytest.mark.slow
def test_ab_witness_matches_generic_witness_on_random_words(dk, rng):
    for _ in range(50):
        word = "".join(rng.choice("ab") for _ in range(rng.randint(1, 30)))
        for left_open, right_open in FLAGS:
            x = strong_inner_witness_ab(word, left_open, right_open)
            gm = strong_inner_witness_generic(word, dk, left_open, right_open)
            assert (x is None) == (gm is None), (word, left_open, right_open)
            if gm is not None:
                assert len(gm.pattern) == 2 * len(x), word


@pytest.mark.slow
def test_bricks_are_strong_inner_and_inner_bricks(dk):
    for w in enumerate_strings(dk.algebra, 10):
        strong = [is_strong_inner_brick(w, left_open, right_open).brick for left_open, right_open in FLAGS]
        if is_brick_finite(w):
            assert all(strong), format_string(w)
        if any(strong):
            assert is_inner_brick(w), format_string(w)


# ---------------------------------------------------------------------------
# infinite strings
# ---------------------------------------------------------------------------


def test_spec_validation(golden):
    with pytest.raises(SpecError):
        InfiniteDKSpec("double", BiPeriodic("ab"), "alpha2")
    with pytest.raises(SpecError):
        InfiniteDKSpec("right", Prefixed("b", golden), "alpha2", "inverted")
    with pytest.raises(SpecError):
        InfiniteDKSpec("right", Prefixed("a", golden), "alpha2")
    with pytest.raises(SpecError):
        InfiniteDKSpec("left", golden)
    spec = InfiniteDKSpec("right", Prefixed("b", golden), "alpha2")
    assert spec.left_letter == "a"


def test_classify_panel(data_dir):
    for record in _panel(data_dir):
        verdict = classify_infinite(record.to_spec())
        assert ("Brick" if verdict.brick else "NotBrick") == record.expected, record.name
        assert verdict.case == record.expected_case, record.name


def test_classify_reasons(golden, golden_slope):
    assert classify_infinite(InfiniteDKSpec("right", EventuallyPeriodicRight("", "b"))).reason == "not aperiodic"
    shifted = InfiniteDKSpec("right", Prefixed("a", golden))
    assert classify_infinite(shifted).reason == "not characteristic"


def test_infinite_graph_maps(golden):
    assert infinite_graph_map(golden) is None
    gm = infinite_graph_map(EventuallyPeriodicRight("", "b"))
    assert gm == InfiniteGraphMap(1, 0, 1)
    assert gm.holds_on("bb")
    assert gm.describe() == "suffix map: quotient at 1 -> submodule at 0"
    half = infinite_graph_map(EventuallyPeriodicRight("", "ba"), "a")
    assert half == InfiniteGraphMap(2, 0, 2, half_letter="a")
    assert half.holds_on("baba", "a")
    assert infinite_graph_map(BiPeriodic("ab")) == InfiniteGraphMap(2, 0, 2, shift=True)
    assert infinite_graph_map(EventuallyPeriodicRight("bba", "ab")) == InfiniteGraphMap(5, 3, 2)
    with pytest.raises(SpecError):
        infinite_graph_map(EventuallyPeriodicLeft("ab", ""))


def test_falsify_panel(data_dir):
    for record in _panel(data_dir):
        spec = record.to_spec()
        refutation = falsify(spec, WINDOW)
        if record.expected == "Brick":
            assert refutation is None, (record.name, str(refutation))
            continue
        assert refutation is not None, record.name
        periodic = as_periodic_spec(spec.oriented_body())
        if periodic is None:
            continue
        assert refutation.kind == "infinite-graph-map", record.name
        h = len(getattr(periodic, "head", ""))
        p = len(periodic.period)
        assert refutation.window_length <= 4 * (p + h), record.name


def test_encode_prefixed(data_dir, dk):
    for record in _panel(data_dir):
        spec = record.to_spec()
        if spec.side == "double":
            continue
        s = encode_prefixed(spec, 20, dk)
        assert is_string(s.steps, dk.algebra), record.name
        if spec.prefix != "none":
            assert len(s) == 41


# ---------------------------------------------------------------------------
# bands and Christoffel words
# ---------------------------------------------------------------------------


def test_lyndon_words():
    assert lyndon_words(3) == ["a", "aab", "ab", "abb", "b"]
    assert len(lyndon_words(6)) == 23


def test_christoffel_classes():
    assert in_christoffel_class("a")
    assert in_christoffel_class("ab")
    assert in_christoffel_class("aab")
    assert not in_christoffel_class("aabb")
    assert not in_christoffel_class("aababbb")
    assert is_christoffel_word("baa")
    assert not is_christoffel_word("aba")


@pytest.mark.acceptance
def test_brick_bands_are_christoffel():
    report = verify_brick_band_christoffel(10)
    assert report.mismatches == []
    rows = {row.word: row for row in report.rows}
    assert rows["ab"].end_dim == 1
    assert rows["aabb"].end_dim >= 2
    assert rows["a"].christoffel_class and rows["b"].christoffel_class


# ---------------------------------------------------------------------------
# single-kissing configurations
# ---------------------------------------------------------------------------


def test_double_kronecker_configuration(dk):
    check = verify_single_kissing(dk.algebra, dk.a, dk.b)
    assert check.ok, check.violations
    assert check.config.x == "2"
    assert check.config.z.is_lazy
    assert [k.pattern for k in cyclic_kisses(dk.a, dk.b)] == [("@2",)]
    assert dk_config().verified


def test_zeta_configuration(zeta_algebra):
    a = parse_string("zeta alpha1- alpha2", zeta_algebra)
    b = parse_string("zeta beta1 beta2-", zeta_algebra)
    check = verify_single_kissing(zeta_algebra, a, b)
    assert check.ok, check.violations
    assert check.config.x == "x"
    assert format_string(check.config.z) == "zeta"
    assert [k.pattern for k in cyclic_kisses(a, b)] == [("zeta",)]


def test_configuration_failures(data_dir, dk):
    free = GentleAlgebra.from_file(data_dir / "double_kronecker_free.json", check=False)
    a = parse_string("alpha1- alpha2", free)
    b = parse_string("beta1 beta2-", free)
    check = verify_single_kissing(free, a, b)
    assert not check.ok
    assert all(v.startswith("gentle:") for v in check.violations)

    same = verify_single_kissing(dk.algebra, dk.a, dk.a)
    assert [v.split(":")[0] for v in same.violations] == ["distinct"]

    not_band = verify_single_kissing(dk.algebra, parse_string("alpha1", dk.algebra), dk.b)
    assert not_band.violations[0].startswith("band:")


def test_shared_suffix_in_double_kronecker():
    config = dk_config()
    report = shared_suffix_check(config, "ba")
    assert report.ok
    assert report.double_role == ["e:2"]
    for host in _words(8):
        assert shared_suffix_check(config, host).ok, host


def test_shared_suffix_in_zeta_configuration(zeta_algebra):
    a = parse_string("zeta alpha1- alpha2", zeta_algebra)
    b = parse_string("zeta beta1 beta2-", zeta_algebra)
    zeta = verify_single_kissing(zeta_algebra, a, b).config
    assert shared_suffix_check(zeta, "abb").double_role == ["zeta"]
    assert strong_inner_witness_ab("abb", right_open=True, z_positive=True) == ""
    for host in _words(6):
        report = shared_suffix_check(zeta, host)
        assert report.ok, (host, report.failures)
        assert all(s.endswith("zeta") for s in report.double_role), host
        x = strong_inner_witness_ab(host, right_open=True, z_positive=True)
        gm = strong_inner_witness_generic(host, zeta, right_open=True)
        assert (x is None) == (gm is None), host
        if gm is not None:
            assert len(gm.pattern) == 3 * len(x) + 1, host


def test_generalized_classify_matches_double_kronecker(data_dir, zeta_algebra):
    config = dk_config()
    for record in _panel(data_dir):
        spec = record.to_spec()
        if spec.prefix != "none":
            continue
        expected = classify_infinite(spec)
        verdict = generalized_classify(config, spec.body, spec.side)
        assert (verdict.brick, verdict.case) == (expected.brick, expected.case), record.name

    a = parse_string("zeta alpha1- alpha2", zeta_algebra)
    b = parse_string("zeta beta1 beta2-", zeta_algebra)
    zeta = verify_single_kissing(zeta_algebra, a, b).config
    golden = _panel(data_dir)[0].to_spec().body
    assert generalized_classify(zeta, golden, "right").brick


def test_generalized_classify_needs_a_verified_configuration(golden):
    unverified = dataclasses.replace(dk_config(), verified=False)
    with pytest.raises(SpecError):
        generalized_classify(unverified, golden, "right")
    with pytest.raises(SpecError):
        generalized_classify(dk_config(), golden, "left")
