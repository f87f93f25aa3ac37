"""Quivers with quadratic monomial relations, strings and bands."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .config import get_logger
from .errors import AlgebraError, StringError

logger = get_logger(__name__)

DIRECT = 1
INVERSE = -1


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError(f"duplicate vertex names in {self.vertices}")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError(f"duplicate arrow names in {names}")
        for arrow in self.arrows:
            for end in (arrow.source, arrow.target):
                if end not in self.vertices:
                    raise AlgebraError(f"arrow {arrow.name} uses undeclared vertex {end!r}")
            if arrow.name.startswith("e:") or arrow.name.endswith("-") or not arrow.name.strip():
                raise AlgebraError(f"arrow name {arrow.name!r} clashes with the string literal syntax")
        if self.vertices and not self._connected():
            raise AlgebraError("the underlying graph of the quiver is not connected")

    def _connected(self) -> bool:
        neighbours: dict[str, set[str]] = {v: set() for v in self.vertices}
        for arrow in self.arrows:
            neighbours[arrow.source].add(arrow.target)
            neighbours[arrow.target].add(arrow.source)
        seen = {self.vertices[0]}
        queue = deque(seen)
        while queue:
            for nxt in neighbours[queue.popleft()]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return len(seen) == len(self.vertices)

    def arrow(self, name: str) -> Arrow:
        for arrow in self.arrows:
            if arrow.name == name:
                return arrow
        raise StringError(f"unknown arrow {name!r}")

    def outgoing(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def incoming(self, vertex: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == vertex]


@dataclass(frozen=True)
class Violation:
    clause: str
    subject: str
    message: str

    def __str__(self) -> str:
        return f"[{self.clause}] {self.subject}: {self.message}"


Relation = tuple[str, str]


def validate_gentle(quiver: Quiver, relations: Iterable[Relation]) -> list[Violation]:
    """All violated gentleness conditions; an empty list means the data is gentle."""
    relations = {tuple(r) for r in relations}
    names = {a.name for a in quiver.arrows}
    violations: list[Violation] = []

    for vertex in quiver.vertices:
        if len(quiver.outgoing(vertex)) > 2:
            violations.append(Violation("arrows", vertex, "more than two outgoing arrows"))
        if len(quiver.incoming(vertex)) > 2:
            violations.append(Violation("arrows", vertex, "more than two incoming arrows"))

    for first, second in sorted(relations):
        if first not in names or second not in names:
            violations.append(Violation("relations", f"{first}{second}", "relation uses an unknown arrow"))
            continue
        if quiver.arrow(first).target != quiver.arrow(second).source:
            violations.append(Violation("relations", f"{first}{second}", "relation is not a composable path of length two"))

    for arrow in quiver.arrows:
        after = quiver.outgoing(arrow.target)
        killed = [b.name for b in after if (arrow.name, b.name) in relations]
        kept = [b.name for b in after if (arrow.name, b.name) not in relations]
        if len(killed) > 1:
            violations.append(Violation("continuation", arrow.name, f"composes to zero with several arrows {killed}"))
        if len(kept) > 1:
            violations.append(Violation("continuation", arrow.name, f"composes non-trivially with several arrows {kept}"))
        before = quiver.incoming(arrow.source)
        killed = [g.name for g in before if (g.name, arrow.name) in relations]
        kept = [g.name for g in before if (g.name, arrow.name) not in relations]
        if len(killed) > 1:
            violations.append(Violation("continuation", arrow.name, f"is killed by several arrows {killed}"))
        if len(kept) > 1:
            violations.append(Violation("continuation", arrow.name, f"is continued by several arrows {kept}"))
        if arrow.is_loop and (arrow.name, arrow.name) not in relations:
            violations.append(Violation("loops", arrow.name, "a loop must square to zero"))
    return violations


@dataclass(frozen=True, order=False)
class ArrowStep:
    arrow: str
    sign: int = DIRECT

    def __post_init__(self) -> None:
        if self.sign not in (DIRECT, INVERSE):
            raise StringError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def direct(self) -> bool:
        return self.sign == DIRECT

    @property
    def sort_key(self) -> tuple[str, int]:
        # + sorts before -
        return (self.arrow, -self.sign)

    def inverse(self) -> "ArrowStep":
        return ArrowStep(self.arrow, -self.sign)

    def __str__(self) -> str:
        return self.arrow if self.direct else f"{self.arrow}-"


class GentleAlgebra:
    """A gentle bound quiver algebra kQ/I given by its quiver and relation pairs."""

    def __init__(self, quiver: Quiver, relations: Iterable[Relation] = (), name: str = "", check: bool = True):
        self.quiver = quiver
        self.relations: frozenset[Relation] = frozenset(tuple(r) for r in relations)
        self.name = name
        if check:
            violations = validate_gentle(quiver, self.relations)
            if violations:
                raise AlgebraError(
                    f"algebra {name or '<unnamed>'} is not gentle: " + "; ".join(str(v) for v in violations),
                    violations,
                )
        self._arrows = {a.name: a for a in quiver.arrows}

    @classmethod
    def build(
        cls,
        vertices: Sequence[str],
        arrows: Sequence[tuple[str, str, str]],
        relations: Iterable[Relation] = (),
        name: str = "",
        check: bool = True,
    ) -> "GentleAlgebra":
        quiver = Quiver(tuple(vertices), tuple(Arrow(n, str(s), str(t)) for n, s, t in arrows))
        return cls(quiver, relations, name=name, check=check)

    @classmethod
    def from_file(cls, path: Union[str, Path], check: bool = True) -> "GentleAlgebra":
        from .schemas import AlgebraFile

        path = Path(path)
        data = AlgebraFile.model_validate_json(path.read_text(encoding="utf-8"))
        return data.to_algebra(name=data.name or path.stem, check=check)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrows[name]
        except KeyError:
            raise StringError(f"unknown arrow {name!r} in algebra {self.name or '<unnamed>'}") from None

    def steps(self) -> list[ArrowStep]:
        """Every arrow and formal inverse, in the fixed step order."""
        steps = [ArrowStep(a.name, s) for a in self.quiver.arrows for s in (DIRECT, INVERSE)]
        return sorted(steps, key=lambda st: st.sort_key)

    def step_source(self, step: ArrowStep) -> str:
        arrow = self.arrow(step.arrow)
        return arrow.source if step.direct else arrow.target

    def step_target(self, step: ArrowStep) -> str:
        arrow = self.arrow(step.arrow)
        return arrow.target if step.direct else arrow.source

    def composable(self, prev: ArrowStep, nxt: ArrowStep) -> Optional[str]:
        """None when ``prev nxt`` may occur inside a string, else the failed clause."""
        if self.step_target(prev) != self.step_source(nxt):
            return "P1: steps are not composable"
        if prev.arrow == nxt.arrow and prev.sign == -nxt.sign:
            return "P1: step is immediately undone"
        if prev.direct and nxt.direct and (prev.arrow, nxt.arrow) in self.relations:
            return f"P2: {prev.arrow}{nxt.arrow} is a relation"
        if not prev.direct and not nxt.direct and (nxt.arrow, prev.arrow) in self.relations:
            return f"P2: the inverse contains the relation {nxt.arrow}{prev.arrow}"
        return None

    def __repr__(self) -> str:
        return f"GentleAlgebra({self.name or '<unnamed>'}: {len(self.vertices)} vertices, {len(self.quiver.arrows)} arrows, {len(self.relations)} relations)"


@dataclass(frozen=True)
class StringWord:
    """A string: its steps and the walk x_1 .. x_{d+1} they trace.

    A lazy string has no steps and a one-vertex walk.
    """

    steps: tuple[ArrowStep, ...]
    vertices: tuple[str, ...]
    tokens: tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.steps) + 1:
            raise StringError("a string visits exactly one more vertex than it has steps")
        tokens = tuple(str(s) for s in self.steps) if self.steps else (f"@{self.vertices[0]}",)
        object.__setattr__(self, "tokens", tokens)

    @property
    def is_lazy(self) -> bool:
        return not self.steps

    @property
    def source(self) -> str:
        return self.vertices[0]

    @property
    def target(self) -> str:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.steps)

    def inverse(self) -> "StringWord":
        return StringWord(tuple(s.inverse() for s in reversed(self.steps)), tuple(reversed(self.vertices)))

    def substring(self, start: int, length: int) -> "StringWord":
        return StringWord(self.steps[start : start + length], self.vertices[start : start + length + 1])

    def x_count(self, x: str) -> int:
        return sum(1 for v in self.vertices if v == x)

    @property
    def sort_key(self) -> tuple:
        return (len(self.steps), tuple(s.sort_key for s in self.steps), self.vertices[0])

    def __str__(self) -> str:
        return format_string(self)


@dataclass(frozen=True)
class StringCheck:
    ok: bool
    string: Optional[StringWord] = None
    index: Optional[int] = None
    clause: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def is_string(word: Sequence[ArrowStep], A: GentleAlgebra) -> StringCheck:
    """Check P1 and P2; ``index`` is the position of the second offending step."""
    steps = tuple(word)
    if not steps:
        return StringCheck(False, index=0, clause="empty step sequence; use lazy(vertex)")
    for step in steps:
        A.arrow(step.arrow)
    for i in range(1, len(steps)):
        failure = A.composable(steps[i - 1], steps[i])
        if failure:
            return StringCheck(False, index=i, clause=failure)
    walk = (A.step_source(steps[0]),) + tuple(A.step_target(s) for s in steps)
    return StringCheck(True, StringWord(steps, walk))


def make_string(word: Sequence[ArrowStep], A: GentleAlgebra) -> StringWord:
    check = is_string(word, A)
    if not check.ok:
        raise StringError(f"not a string at step {check.index}: {check.clause}")
    return check.string


def lazy(vertex: str, A: Optional[GentleAlgebra] = None) -> StringWord:
    if A is not None and vertex not in A.vertices:
        raise StringError(f"unknown vertex {vertex!r}")
    return StringWord((), (vertex,))


def inverse(w: StringWord) -> StringWord:
    return w.inverse()


def x_count(w: StringWord, x: str) -> int:
    return w.x_count(x)


def concat(u: StringWord, v: StringWord, A: GentleAlgebra) -> StringWord:
    """u followed by v; lazy factors are units at their vertex."""
    if u.target != v.source:
        raise StringError(f"cannot join a string ending at {u.target} to one starting at {v.source}")
    if u.is_lazy:
        return v
    if v.is_lazy:
        return u
    failure = A.composable(u.steps[-1], v.steps[0])
    if failure:
        raise StringError(f"{u} . {v} is not a string: {failure}")
    return StringWord(u.steps + v.steps, u.vertices + v.vertices[1:])


def power(w: StringWord, k: int, A: GentleAlgebra) -> StringWord:
    result = lazy(w.source)
    for _ in range(k):
        result = concat(result, w, A)
    return result


# ---------------------------------------------------------------------------
# literal syntax
# ---------------------------------------------------------------------------


def parse_step(token: str, A: GentleAlgebra) -> ArrowStep:
    step = ArrowStep(token[:-1], INVERSE) if token.endswith("-") else ArrowStep(token, DIRECT)
    A.arrow(step.arrow)
    return step


def parse_string(literal: str, A: GentleAlgebra) -> StringWord:
    """Parse ``"beta delta- epsilon"`` or ``"e:2"``."""
    tokens = literal.split()
    if not tokens:
        raise StringError("empty string literal")
    if len(tokens) == 1 and tokens[0].startswith("e:"):
        return lazy(tokens[0][2:], A)
    return make_string([parse_step(t, A) for t in tokens], A)


def format_string(w: StringWord) -> str:
    if w.is_lazy:
        return f"e:{w.source}"
    return " ".join(str(s) for s in w.steps)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _extensions(w: StringWord, A: GentleAlgebra) -> list[StringWord]:
    result = []
    for step in A.steps():
        if w.is_lazy:
            if A.step_source(step) == w.source:
                result.append(StringWord((step,), (w.source, A.step_target(step))))
        elif A.composable(w.steps[-1], step) is None:
            result.append(StringWord(w.steps + (step,), w.vertices + (A.step_target(step),)))
    return result


def enumerate_strings(A: GentleAlgebra, max_len: int) -> list[StringWord]:
    """Every string of length <= max_len, lazy strings first, then by length.

    Strings are grown one layer per length; within a layer the order is the
    step order of ``StringWord.sort_key``, so the output does not depend on
    the order arrows are listed in.
    """
    if max_len < 0:
        raise StringError(f"max_len must be non-negative, got {max_len}")
    layer = [lazy(v) for v in A.vertices]
    found = list(layer)
    for _ in range(max_len):
        layer = [ext for w in layer for ext in _extensions(w, A)]
        if not layer:
            break
        found.extend(sorted(layer, key=lambda s: s.sort_key))
    return found


def stabilization_bound(A: GentleAlgebra) -> int:
    """Number of steps times number of vertices; no string of a band-free algebra is longer."""
    return len(A.steps()) * len(A.vertices)


def enumerate_all_strings(A: GentleAlgebra) -> list[StringWord]:
    """Every string of a band-free algebra, in the order of ``enumerate_strings``.

    Raises AlgebraError as soon as a band appears, and when strings outlive
    ``stabilization_bound(A)``.
    """
    bound = stabilization_bound(A)
    layer = [lazy(v) for v in A.vertices]
    found = list(layer)
    for length in range(1, bound + 2):
        layer = sorted((ext for w in layer for ext in _extensions(w, A)), key=lambda s: s.sort_key)
        if not layer:
            logger.info("strings of %s stabilize at length %d", A.name or "<unnamed>", length - 1)
            return found
        band = next((w for w in layer if is_band(w, A)), None)
        if band is not None:
            raise AlgebraError(f"band {format_string(band)} of length {length}: the strings never stabilize")
        found.extend(layer)
    raise AlgebraError(f"strings do not stabilize within length {bound}")


def _is_proper_power(steps: tuple[ArrowStep, ...]) -> bool:
    n = len(steps)
    return any(n % k == 0 and steps[:k] * (n // k) == steps for k in range(1, n))


def is_band(w: StringWord, A: GentleAlgebra) -> bool:
    """Closed, primitive, of mixed orientation, and w.w is again a string."""
    if w.is_lazy or w.source != w.target:
        return False
    if A.composable(w.steps[-1], w.steps[0]) is not None:
        return False
    if _is_proper_power(w.steps):
        return False
    return any(s.direct for s in w.steps) and any(not s.direct for s in w.steps)


def _rotations(w: StringWord) -> list[StringWord]:
    n = len(w.steps)
    out = []
    for i in range(n):
        steps = w.steps[i:] + w.steps[:i]
        walk = w.vertices[i:-1] + w.vertices[:i] + (w.vertices[i],)
        out.append(StringWord(steps, walk))
    return out


@dataclass(frozen=True)
class Band:
    """A band, kept as the least representative over rotations and inversion."""

    representative: StringWord

    @classmethod
    def of(cls, w: StringWord, A: GentleAlgebra) -> "Band":
        if not is_band(w, A):
            raise StringError(f"{w} is not a band")
        candidates = _rotations(w) + _rotations(w.inverse())
        return cls(min(candidates, key=lambda s: tuple(st.sort_key for st in s.steps)))

    def __len__(self) -> int:
        return len(self.representative)

    def __str__(self) -> str:
        return format_string(self.representative)


def band_rotations(band: Band) -> list[StringWord]:
    """Rotations of the band and of its inverse, each once."""
    seen: dict[tuple[str, ...], StringWord] = {}
    rep = band.representative
    for w in _rotations(rep) + _rotations(rep.inverse()):
        seen.setdefault(w.tokens, w)
    return list(seen.values())


def enumerate_bands(A: GentleAlgebra, max_len: int) -> list[Band]:
    if max_len < 1:
        raise StringError(f"max_len must be positive, got {max_len}")
    bands: dict[tuple[str, ...], Band] = {}
    for w in enumerate_strings(A, max_len):
        if is_band(w, A):
            band = Band.of(w, A)
            bands.setdefault(band.representative.tokens, band)
    result = sorted(bands.values(), key=lambda b: b.representative.sort_key)
    logger.info("found %d band classes of length <= %d", len(result), max_len)
    return result


def direct_strings(A: GentleAlgebra) -> list[StringWord]:
    """Every non-lazy string made of direct steps only."""
    bound = len(A.quiver.arrows)
    layer = [StringWord((ArrowStep(a.name),), (a.source, a.target)) for a in A.quiver.arrows]
    found: list[StringWord] = []
    while layer:
        found.extend(layer)
        nxt = []
        for w in layer:
            for arrow in A.quiver.outgoing(w.target):
                step = ArrowStep(arrow.name)
                if A.composable(w.steps[-1], step) is None:
                    nxt.append(StringWord(w.steps + (step,), w.vertices + (arrow.target,)))
        if nxt and len(nxt[0]) > bound:
            raise AlgebraError("an oriented cycle without relations gives infinitely many direct strings")
        layer = nxt
    return sorted(found, key=lambda s: s.sort_key)


def _is_maximal_direct(w: StringWord, A: GentleAlgebra) -> bool:
    for arrow in A.quiver.outgoing(w.target):
        if A.composable(w.steps[-1], ArrowStep(arrow.name)) is None:
            return False
    for arrow in A.quiver.incoming(w.source):
        if A.composable(ArrowStep(arrow.name), w.steps[0]) is None:
            return False
    return True


def maximal_direct_strings(A: GentleAlgebra) -> list[StringWord]:
    return [w for w in direct_strings(A) if _is_maximal_direct(w, A)]


def inverse_strings(A: GentleAlgebra) -> list[StringWord]:
    return sorted((w.inverse() for w in direct_strings(A)), key=lambda s: s.sort_key)


def maximal_inverse_strings(A: GentleAlgebra) -> list[StringWord]:
    return sorted((w.inverse() for w in maximal_direct_strings(A)), key=lambda s: s.sort_key)


def random_string(A: GentleAlgebra, max_len: int, rng: random.Random) -> StringWord:
    """Random walk of a random length <= max_len; stops early when stuck."""
    w = lazy(rng.choice(A.vertices))
    target = rng.randint(0, max_len)
    while len(w) < target:
        options = _extensions(w, A)
        if not options:
            break
        w = rng.choice(options)
    return w
