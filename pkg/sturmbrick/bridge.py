"""Strings over the double Kronecker algebra as words in a and b.

Also covers the single-kissing setting, where a = z a' and b = z b' are two
brick bands at a vertex x that kiss once, along z.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Optional, Union

from .config import get_logger
from .errors import SpecError
from .gentle import (
    ArrowStep,
    Band,
    GentleAlgebra,
    StringWord,
    format_string,
    is_band,
    validate_gentle,
)
from .modules import (
    GraphMap,
    _factor_key,
    _factors,
    _inverse_key,
    band_module_end_dim,
    envelope,
    graph_map_witnesses_window,
)
from .sturmian import (
    as_periodic_spec,
    christoffel,
    is_characteristic_spec,
    is_sturmian_spec,
)
from .words import (
    BiPeriodic,
    EventuallyPeriodicRight,
    InfiniteWordSpec,
    Periodicity,
    Prefixed,
    Side,
    classify_periodicity,
    prefixed,
    spec_side,
    transpose_spec,
    window,
)

logger = get_logger(__name__)

Direction = Literal["forward", "inverted"]
Prefix = Literal["none", "alpha2", "alpha1", "beta2inv", "beta1inv"]

SUBMODULE_SHAPES = frozenset({"axa", "ax", "xa"})
QUOTIENT_SHAPES = frozenset({"bxb", "bx", "xb"})

# the arrow before the body ends the letter it is named after
PREFIX_LETTER = {"alpha2": "a", "alpha1": "a", "beta2inv": "b", "beta1inv": "b"}
PREFIX_DIRECTION = {"alpha2": "forward", "beta2inv": "forward", "alpha1": "inverted", "beta1inv": "inverted"}
PREFIX_BODY_START = {"alpha2": "b", "alpha1": "b", "beta2inv": "a", "beta1inv": "a"}
PREFIX_STEP = {
    "alpha2": ArrowStep("alpha2", 1),
    "alpha1": ArrowStep("alpha1", 1),
    "beta2inv": ArrowStep("beta2", -1),
    "beta1inv": ArrowStep("beta1", -1),
}


# ---------------------------------------------------------------------------
# the double Kronecker algebra and single-kissing configurations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DKAlgebra:
    algebra: GentleAlgebra = field(compare=False)
    a: StringWord
    b: StringWord
    x: str = "2"


def double_kronecker() -> DKAlgebra:
    A = GentleAlgebra.build(
        ["1", "2", "3"],
        [("alpha1", "1", "2"), ("alpha2", "1", "2"), ("beta1", "2", "3"), ("beta2", "2", "3")],
        [("alpha1", "beta1"), ("alpha2", "beta2")],
        name="double-kronecker",
    )
    a = StringWord((ArrowStep("alpha1", -1), ArrowStep("alpha2", 1)), ("2", "1", "2"))
    b = StringWord((ArrowStep("beta1", 1), ArrowStep("beta2", -1)), ("2", "3", "2"))
    return DKAlgebra(A, a, b)


@dataclass(frozen=True)
class SingleKissConfig:
    algebra: GentleAlgebra = field(compare=False)
    x: str
    a: StringWord
    b: StringWord
    z: StringWord
    alpha1: str
    alpha2: str
    beta1: str
    beta2: str
    verified: bool = False


LetterSource = Union[DKAlgebra, SingleKissConfig]


@dataclass(frozen=True)
class ABWord:
    word: str
    direction: Direction = "forward"


def encode_ab(w: Union[ABWord, str], source: LetterSource) -> StringWord:
    """Substitute the strings a, b (or their inverses) letter by letter."""
    if isinstance(w, str):
        w = ABWord(w)
    letters = {"a": source.a, "b": source.b}
    if w.direction == "inverted":
        letters = {k: v.inverse() for k, v in letters.items()}
    steps: list[ArrowStep] = []
    walk = [source.x]
    for ch in w.word:
        piece = letters[ch]
        steps.extend(piece.steps)
        walk.extend(piece.vertices[1:])
    return StringWord(tuple(steps), tuple(walk))


def _parse_forward(tokens: tuple[str, ...], source: LetterSource) -> Optional[str]:
    a, b = source.a.tokens, source.b.tokens
    out = []
    i = 0
    while i < len(tokens):
        if tokens[i : i + len(a)] == a:
            out.append("a")
            i += len(a)
        elif tokens[i : i + len(b)] == b:
            out.append("b")
            i += len(b)
        else:
            return None
    return "".join(out)


def decode_ab(s: StringWord, source: LetterSource) -> Optional[ABWord]:
    """The a,b-word of s, or None when s is not in Str(a, b)."""
    if s.is_lazy:
        return ABWord("") if s.source == source.x else None
    if s.source != source.x:
        return None
    word = _parse_forward(s.tokens, source)
    if word is not None:
        return ABWord(word, "forward")
    word = _parse_forward(s.inverse().tokens, source)
    if word is not None:
        return ABWord(word[::-1], "inverted")
    return None


# ---------------------------------------------------------------------------
# a,b envelopes and witnesses on finite windows
# ---------------------------------------------------------------------------


def _shape(pre: Optional[str], post: Optional[str]) -> str:
    return f"{pre or ''}x{post or ''}" if (pre or post) else "bare"


def _factor_positions(host: str, length: int) -> dict[str, list[int]]:
    table: dict[str, list[int]] = {}
    for i in range(len(host) - length + 1):
        table.setdefault(host[i : i + length], []).append(i)
    return table


def _shapes(
    host: str,
    length: int,
    positions: list[int],
    left_open: bool,
    right_open: bool,
    left_letter: Optional[str],
) -> set[str]:
    n = len(host)
    found = set()
    for i in positions:
        end = i + length
        if i == 0 and left_open and left_letter is None:
            continue
        if end == n and right_open:
            continue
        pre = host[i - 1] if i > 0 else left_letter
        post = host[end] if end < n else None
        found.add(_shape(pre, post))
    return found


def ab_envelopes(
    host: str,
    pattern: str,
    left_open: bool = False,
    right_open: bool = False,
    left_letter: Optional[str] = None,
) -> set[str]:
    """Shapes of the a,b envelopes of ``pattern`` in ``host``.

    ``left_letter`` stands for an arrow before the first letter that behaves
    like the end of an ``a`` (direct) or a ``b`` (inverse).
    """
    positions = [i for i in range(len(host) - len(pattern) + 1) if host.startswith(pattern, i)]
    return _shapes(host, len(pattern), positions, left_open, right_open, left_letter)


def _search(
    host: str,
    sub: frozenset[str],
    quo: frozenset[str],
    left_open: bool,
    right_open: bool,
    left_letter: Optional[str],
) -> Optional[str]:
    for length in range(len(host) + 1):
        candidates = []
        for x, positions in _factor_positions(host, length).items():
            if x == host and left_letter is None:
                continue
            shapes = _shapes(host, length, positions, left_open, right_open, left_letter)
            if shapes & sub and shapes & quo:
                candidates.append((positions[0], x))
        if candidates:
            return min(candidates)[1]
    return None


def strong_inner_witness_ab(
    host: str,
    left_open: bool = False,
    right_open: bool = False,
    left_letter: Optional[str] = None,
    z_positive: bool = False,
) -> Optional[str]:
    """Shortest x (leftmost first) with both a submodule and a quotient a,b-envelope."""
    sub, quo = SUBMODULE_SHAPES, QUOTIENT_SHAPES
    if z_positive:
        sub, quo = sub - {"ax"}, quo - {"bx"}
    return _search(host, sub, quo, left_open, right_open, left_letter)


def inner_witness_ab(host: str, left_letter: Optional[str] = None) -> Optional[str]:
    """Shortest x with both axa and bxb envelopes."""
    return _search(host, frozenset({"axa"}), frozenset({"bxb"}), False, False, left_letter)


def strong_inner_witness_generic(
    host: str,
    source: LetterSource,
    left_open: bool = False,
    right_open: bool = False,
) -> Optional[GraphMap]:
    """The same question answered by graph maps on the encoded string."""
    witnesses = graph_map_witnesses_window(encode_ab(host, source), left_open, right_open)
    return witnesses[0] if witnesses else None


def prefix_condition_witness(window_word: str, lead: str = "a") -> Optional[str]:
    """Shortest s with s+lead a prefix of the window and s+other occurring in it."""
    other = "b" if lead == "a" else "a"
    for length in range(len(window_word)):
        if window_word[length] != lead:
            continue
        s = window_word[:length]
        if s + other in window_word:
            return s
    return None


# ---------------------------------------------------------------------------
# infinite strings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InfiniteDKSpec:
    side: Side
    body: InfiniteWordSpec
    prefix: Prefix = "none"
    direction: Direction = "forward"

    def __post_init__(self) -> None:
        actual = spec_side(self.body)
        if actual != self.side:
            raise SpecError(f"side {self.side!r} does not match a {actual}-infinite body")
        if self.prefix not in ("none", *PREFIX_LETTER):
            raise SpecError(f"unknown prefix {self.prefix!r}")
        if self.direction not in ("forward", "inverted"):
            raise SpecError(f"unknown direction {self.direction!r}")
        if self.prefix == "none":
            return
        if self.side == "double":
            raise SpecError("a double-infinite string has no finite end for a prefix arrow")
        if PREFIX_DIRECTION[self.prefix] != self.direction:
            raise SpecError(f"prefix {self.prefix} needs the {PREFIX_DIRECTION[self.prefix]} direction")
        first = _first_letter(self.oriented_body())
        if first != PREFIX_BODY_START[self.prefix]:
            raise SpecError(f"prefix {self.prefix} must be followed by the letter {PREFIX_BODY_START[self.prefix]}")

    def oriented_body(self) -> InfiniteWordSpec:
        """The body read away from the finite end."""
        return transpose_spec(self.body) if self.side == "left" else self.body

    @property
    def left_letter(self) -> Optional[str]:
        return PREFIX_LETTER.get(self.prefix)


def _first_letter(spec: InfiniteWordSpec) -> str:
    return window(spec, 0, 1).word


@dataclass(frozen=True)
class ClassifyVerdict:
    brick: bool
    case: int
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.brick

    def __str__(self) -> str:
        return f"Brick(case {self.case})" if self.brick else f"NotBrick(case {self.case}: {self.reason})"


def _drop_first(spec: InfiniteWordSpec) -> Optional[InfiniteWordSpec]:
    if isinstance(spec, Prefixed):
        return prefixed(spec.head[1:], spec.rest)
    return None


def _classify_one_sided(body: InfiniteWordSpec, prefix: Prefix) -> ClassifyVerdict:
    if prefix == "none":
        if classify_periodicity(body) is not Periodicity.APERIODIC:
            return ClassifyVerdict(False, 2, "not aperiodic")
        if not is_characteristic_spec(body):
            return ClassifyVerdict(False, 2, "not characteristic")
        return ClassifyVerdict(True, 2)

    case = 1 if prefix in ("alpha2", "alpha1") else 3
    if classify_periodicity(body) is not Periodicity.APERIODIC:
        return ClassifyVerdict(False, case, "not aperiodic")
    rest = _drop_first(body)
    letter = PREFIX_BODY_START[prefix]
    if rest is None or not is_characteristic_spec(rest):
        return ClassifyVerdict(False, case, f"not {letter} followed by a characteristic word")
    return ClassifyVerdict(True, case)


def classify_infinite(spec: InfiniteDKSpec) -> ClassifyVerdict:
    """Brick or not, decided from the finite description alone."""
    if spec.side == "double":
        verdict = is_sturmian_spec(spec.body)
        return ClassifyVerdict(verdict.sturmian, 5, verdict.reason)
    if spec.side == "left":
        inner = _classify_one_sided(spec.oriented_body(), spec.prefix)
        return ClassifyVerdict(inner.brick, 4, inner.reason)
    return _classify_one_sided(spec.body, spec.prefix)


@dataclass(frozen=True)
class InfiniteGraphMap:
    """A non-invertible map between two infinite suffixes of the same tail.

    Offsets are body positions; ``half_letter`` marks a pattern that starts
    inside a letter, with the prefix arrow as the other end of it.
    """

    quotient: int
    submodule: int
    period: int
    half_letter: Optional[str] = None
    shift: bool = False

    @property
    def window_needed(self) -> int:
        return max(self.quotient, self.submodule) + self.period

    def holds_on(self, word: str, left_letter: Optional[str] = None) -> bool:
        """Both suffixes agree on the window and sit in the right envelopes."""
        n = len(word)
        if n < self.window_needed:
            return False
        span = n - max(self.quotient, self.submodule)
        if word[self.quotient : self.quotient + span] != word[self.submodule : self.submodule + span]:
            return False
        if self.shift:
            return True

        def before(k: int) -> Optional[str]:
            return word[k - 1] if k > 0 else left_letter

        if self.half_letter is not None:
            inner = self.quotient if self.half_letter == "a" else self.submodule
            return before(inner) == self.half_letter
        return before(self.quotient) in (None, "b") and before(self.submodule) in (None, "a")

    def describe(self) -> str:
        kind = "shift" if self.shift else "suffix"
        half = f" starting inside {self.half_letter}" if self.half_letter else ""
        return f"{kind} map{half}: quotient at {self.quotient} -> submodule at {self.submodule}"


def infinite_graph_map(spec: InfiniteWordSpec, left_letter: Optional[str] = None) -> Optional[InfiniteGraphMap]:
    """The non-identity infinite graph map of an eventually periodic body read rightwards."""
    periodic = as_periodic_spec(spec)
    if periodic is None:
        return None
    if isinstance(periodic, BiPeriodic):
        p = len(periodic.period)
        return InfiniteGraphMap(p, 0, p, shift=True)
    if not isinstance(periodic, EventuallyPeriodicRight):
        raise SpecError("read a left-infinite body from its finite end first")
    h, p = len(periodic.head), len(periodic.period)

    def before(k: int) -> Optional[str]:
        if k > 0:
            return periodic.head[k - 1] if k <= h else periodic.period[(k - h - 1) % p]
        return left_letter

    roles = {k: before(k) for k in (h, h + p)}
    quotients = [k for k, letter in roles.items() if letter in (None, "b")]
    submodules = [k for k, letter in roles.items() if letter in (None, "a")]
    for q in quotients:
        for s in submodules:
            if q != s:
                return InfiniteGraphMap(q, s, p)
    # same letter before both: the prefix arrow closes a half letter at the start
    if h == 0 and left_letter is not None and roles[p] == left_letter:
        if left_letter == "a":
            return InfiniteGraphMap(p, 0, p, half_letter="a")
        return InfiniteGraphMap(0, p, p, half_letter="b")
    return None


@dataclass(frozen=True)
class Falsification:
    kind: str
    witness: str
    window_length: int

    def __str__(self) -> str:
        return f"{self.kind}: {self.witness} (window {self.window_length})"


def falsify(spec: InfiniteDKSpec, window_length: int) -> Optional[Falsification]:
    """Window-level evidence that the string is not a brick, if any is visible."""
    body = spec.oriented_body()
    letter = spec.left_letter
    gm = infinite_graph_map(body, letter)
    if gm is not None:
        word = window(body, 0, gm.window_needed).word
        if gm.holds_on(word, letter):
            return Falsification("infinite-graph-map", gm.describe(), gm.window_needed)
        logger.warning("graph map %s does not hold on window %r", gm.describe(), word)

    if spec.side == "double":
        half = window_length // 2
        word = window(body, -half, window_length).word
        x = strong_inner_witness_ab(word, left_open=True, right_open=True)
        return Falsification("strong-inner", repr(x), window_length) if x is not None else None

    word = window(body, 0, window_length).word
    if letter is not None:
        s = prefix_condition_witness(word, lead=letter)
        if s is not None:
            return Falsification("prefix-condition", repr(s), window_length)
    x = strong_inner_witness_ab(word, left_open=False, right_open=True, left_letter=letter)
    if x is not None:
        return Falsification("strong-inner", repr(x), window_length)
    return None


def encode_prefixed(spec: InfiniteDKSpec, length: int, source: Optional[DKAlgebra] = None) -> StringWord:
    """The prefix arrow followed by the first ``length`` letters of the body, as a string."""
    dk = source or double_kronecker()
    word = window(spec.oriented_body(), 0, length).word
    body = encode_ab(ABWord(word, spec.direction), dk)
    if spec.prefix == "none":
        return body
    step = PREFIX_STEP[spec.prefix]
    arrow = dk.algebra.arrow(step.arrow)
    start = arrow.source if step.direct else arrow.target
    return StringWord((step, *body.steps), (start, *body.vertices))


# ---------------------------------------------------------------------------
# bands and Christoffel words
# ---------------------------------------------------------------------------


def lyndon_words(max_len: int) -> list[str]:
    """Lyndon words over a < b of length 1..max_len, in lexicographic order."""
    words = []
    w = [-1]
    while w:
        w[-1] += 1
        words.append("".join("ab"[i] for i in w))
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()
    return [u for u in words if len(u) <= max_len and _is_lyndon(u)]


def _is_lyndon(u: str) -> bool:
    return all(u < u[i:] + u[:i] for i in range(1, len(u)))


def in_christoffel_class(word: str) -> bool:
    """True for a, b and every conjugate of a Christoffel word."""
    if word in ("a", "b"):
        return True
    p, q = word.count("a"), word.count("b")
    if p == 0 or q == 0 or math.gcd(p, q) != 1:
        return False
    c = christoffel(p, q).word
    return c in word + word


def is_christoffel_word(word: str) -> bool:
    p, q = word.count("a"), word.count("b")
    if p == 0 or q == 0 or math.gcd(p, q) != 1:
        return False
    return christoffel(p, q).word == word


@dataclass(frozen=True)
class BandRow:
    word: str
    end_dim: int
    christoffel_class: bool
    bwa_christoffel: bool

    @property
    def consistent(self) -> bool:
        return (self.end_dim == 1) == self.christoffel_class


@dataclass
class ChristoffelReport:
    max_total: int
    rows: list[BandRow] = field(default_factory=list)

    @property
    def mismatches(self) -> list[BandRow]:
        return [r for r in self.rows if not r.consistent]


def verify_brick_band_christoffel(max_total: int, progress: bool = False) -> ChristoffelReport:
    """End dimension of every Str(a,b) band against its Christoffel class."""
    from tqdm import tqdm

    dk = double_kronecker()
    report = ChristoffelReport(max_total)
    words = lyndon_words(max_total)
    for word in tqdm(words, desc="bands", unit="band", disable=not progress):
        band = Band.of(encode_ab(word, dk), dk.algebra)
        row = BandRow(
            word,
            band_module_end_dim(band, dk.algebra),
            in_christoffel_class(word),
            is_christoffel_word("b" + word + "a"),
        )
        if not row.consistent:
            logger.warning("band %s: End dimension %d but christoffel class %s", word, row.end_dim, row.christoffel_class)
        report.rows.append(row)
    logger.info("checked %d bands up to %d letters, %d mismatches", len(report.rows), max_total, len(report.mismatches))
    return report


# ---------------------------------------------------------------------------
# single-kissing configurations
# ---------------------------------------------------------------------------


@dataclass
class KissCheck:
    config: Optional[SingleKissConfig] = None
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _common_prefix(a: StringWord, b: StringWord) -> StringWord:
    k = 0
    while k < min(len(a), len(b)) and a.steps[k] == b.steps[k]:
        k += 1
    return a.substring(0, k)


@dataclass(frozen=True)
class CyclicKiss:
    pattern: tuple[str, ...]
    b_position: int
    a_position: int
    inverted: bool


def _cyclic_factors(w: StringWord, want_quotient: bool):
    """(key, start) for factors of the cyclic word with both boundary letters inside one period."""
    n = len(w)
    doubled = w.steps * 3
    walk = w.vertices[:-1] * 3
    for start in range(n):
        for length in range(0, n - 1):
            mu = doubled[n + start - 1]
            nu = doubled[n + start + length]
            if want_quotient:
                good = not mu.direct and nu.direct
            else:
                good = mu.direct and not nu.direct
            if not good:
                continue
            if length == 0:
                key = (f"@{walk[n + start]}",)
            else:
                key = tuple(str(s) for s in doubled[n + start : n + start + length])
            yield key, start


def cyclic_kisses(a: StringWord, b: StringWord) -> list[CyclicKiss]:
    """Kisses from a rotation of b to a rotation of a."""
    subs: dict[tuple[str, ...], list[int]] = {}
    for key, start in _cyclic_factors(a, want_quotient=False):
        subs.setdefault(key, []).append(start)
    found = []
    for key, start in _cyclic_factors(b, want_quotient=True):
        for pos in subs.get(key, ()):
            found.append(CyclicKiss(key, start, pos, False))
        inv = key if key[0].startswith("@") else tuple(t[:-1] if t.endswith("-") else f"{t}-" for t in reversed(key))
        if inv != key:
            for pos in subs.get(inv, ()):
                found.append(CyclicKiss(key, start, pos, True))
    return found


def verify_single_kissing(A: GentleAlgebra, a: StringWord, b: StringWord) -> KissCheck:
    """Check every hypothesis of the single-kissing setting, stopping at the first broken layer."""
    check = KissCheck()
    gentle = validate_gentle(A.quiver, A.relations)
    if gentle:
        check.violations.extend(f"gentle: {v}" for v in gentle)
        return check

    for name, w in (("a", a), ("b", b)):
        if not is_band(w, A):
            check.violations.append(f"band: {name} = {format_string(w)} is not a band")
    if check.violations:
        return check
    if Band.of(a, A) == Band.of(b, A):
        check.violations.append("distinct: a and b give the same band")
        return check

    x = a.source
    if b.source != x:
        check.violations.append(f"vertex: a starts at {a.source} but b starts at {b.source}")
    for name, w in (("a", a), ("b", b)):
        if w.x_count(x) != 2:
            check.violations.append(f"vertex: {name} passes through {x} in between")
    if A.composable(a.steps[-1], b.steps[0]) is not None:
        check.violations.append("strings: ab is not a string")
    if A.composable(b.steps[-1], a.steps[0]) is not None:
        check.violations.append("strings: ba is not a string")
    if check.violations:
        return check

    for name, w in (("a", a), ("b", b)):
        dim = band_module_end_dim(Band.of(w, A), A)
        if dim != 1:
            check.violations.append(f"brick band: End of band {name} has dimension {dim}")

    z = _common_prefix(a, b)
    kisses = cyclic_kisses(a, b)
    if len(kisses) != 1:
        check.violations.append(f"kiss: expected exactly one kiss from b to a, found {len(kisses)}")
    elif kisses[0].pattern != z.tokens or kisses[0].inverted:
        check.violations.append(f"kiss: the kiss is along {' '.join(kisses[0].pattern)}, not along z = {format_string(z)}")

    a_rest, b_rest = a.steps[len(z):], b.steps[len(z):]
    alpha1, alpha2 = a_rest[0], a_rest[-1]
    beta1, beta2 = b_rest[0], b_rest[-1]
    if alpha1.direct or not alpha2.direct:
        check.violations.append("arrows: a' must start with an inverse arrow and end with a direct arrow")
    if not beta1.direct or beta2.direct:
        check.violations.append("arrows: b' must start with a direct arrow and end with an inverse arrow")
    names = (alpha1.arrow, alpha2.arrow, beta1.arrow, beta2.arrow)
    if len(set(names)) != 4:
        check.violations.append(f"arrows: boundary arrows {names} are not pairwise distinct")
    if (alpha2.arrow, beta2.arrow) not in A.relations:
        check.violations.append(f"arrows: {alpha2.arrow}{beta2.arrow} is not a relation")
    if (alpha1.arrow, beta1.arrow) not in A.relations:
        check.violations.append(f"arrows: {alpha1.arrow}{beta1.arrow} is not a relation")

    if not check.violations:
        check.config = SingleKissConfig(A, x, a, b, z, *names, verified=True)
    return check


def dk_config() -> SingleKissConfig:
    """The double Kronecker algebra as a single-kissing configuration (z lazy)."""
    dk = double_kronecker()
    check = verify_single_kissing(dk.algebra, dk.a, dk.b)
    if not check.ok:
        raise SpecError("; ".join(check.violations))
    return check.config


@dataclass
class SharedSuffixReport:
    host: str
    double_role: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def shared_suffix_check(config: SingleKissConfig, host: str, right_open: Optional[bool] = None) -> SharedSuffixReport:
    """Every substring that is both a submodule and a quotient substring ends with z."""
    if right_open is None:
        right_open = len(config.z) > 0
    s_host = encode_ab(host, config)
    quotient: dict[tuple[str, ...], StringWord] = {}
    submodule: set[tuple[str, ...]] = set()
    for occ in _factors(s_host, False, right_open):
        if occ.is_whole:
            continue
        env = envelope(occ)
        key = _factor_key(s_host, occ.position, occ.length)
        if env.quotient:
            quotient.setdefault(key, occ.pattern)
        if env.submodule:
            submodule.add(key)
            submodule.add(_inverse_key(key))

    report = SharedSuffixReport(host)
    for key, s in sorted(quotient.items(), key=lambda kv: (len(kv[1]), kv[0])):
        if key not in submodule:
            continue
        report.double_role.append(format_string(s))
        if not _ends_with(s, config.z):
            report.failures.append(f"{format_string(s)} does not end with z = {format_string(config.z)}")
            continue
        residue = s.substring(0, len(s) - len(config.z))
        if decode_ab(residue, config) is None:
            report.failures.append(f"{format_string(s)}: residue {format_string(residue)} is not in Str(a,b)")
    return report


def _ends_with(s: StringWord, z: StringWord) -> bool:
    if z.is_lazy:
        return s.target == z.source
    return len(s) >= len(z) and s.tokens[len(s) - len(z):] == z.tokens


def generalized_classify(config: SingleKissConfig, spec: InfiniteWordSpec, side: Side) -> ClassifyVerdict:
    """Brick classification of w in Str(a,b) for a verified configuration."""
    if not config.verified:
        raise SpecError("the single-kissing configuration has not been verified")
    actual = spec_side(spec)
    if actual != side:
        raise SpecError(f"side {side!r} does not match a {actual}-infinite word")
    if side == "double":
        verdict = is_sturmian_spec(spec)
        return ClassifyVerdict(verdict.sturmian, 5, verdict.reason)
    oriented = transpose_spec(spec) if side == "left" else spec
    inner = _classify_one_sided(oriented, "none")
    return ClassifyVerdict(inner.brick, 4 if side == "left" else 2, inner.reason)
