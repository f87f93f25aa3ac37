"""String and band modules, envelopes, kisses and graph maps.

Basis vectors are the walk slots x_0 .. x_d of a string.  A direct step k
sends x_k to x_{k+1}; an inverse step k sends x_{k+1} to x_k.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

import sympy as sp

from .config import get_logger
from .gentle import ArrowStep, Band, GentleAlgebra, StringWord, format_string

logger = get_logger(__name__)


# ---------------------------------------------------------------------------
# thin modules
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StringModule:
    """A representation with one basis vector per walk slot and 0/1 arrow actions.

    ``actions[arrow]`` lists the (source slot, target slot) pairs of the arrow.
    """

    algebra: GentleAlgebra = field(compare=False, repr=False)
    slots: tuple[str, ...]
    actions: dict[str, tuple[tuple[int, int], ...]] = field(compare=False)
    label: str = ""

    def dimension_vector(self) -> dict[str, int]:
        dims = {v: 0 for v in self.algebra.vertices}
        for v in self.slots:
            dims[v] += 1
        return dims

    @property
    def dimension(self) -> int:
        return len(self.slots)

    def basis(self, vertex: str) -> list[int]:
        return [k for k, v in enumerate(self.slots) if v == vertex]

    def matrix(self, arrow: str) -> list[list[int]]:
        """Dense matrix of the arrow action, rows indexed by the target basis."""
        a = self.algebra.arrow(arrow)
        rows, cols = self.basis(a.target), self.basis(a.source)
        grid = [[0] * len(cols) for _ in rows]
        for src, dst in self.actions.get(arrow, ()):
            grid[rows.index(dst)][cols.index(src)] = 1
        return grid

    def relations_vanish(self) -> bool:
        for first, second in self.algebra.relations:
            seconds = dict(self.actions.get(second, ()))
            if any(mid in seconds for _, mid in self.actions.get(first, ())):
                return False
        return True


def format_matrix(grid: list[list[int]]) -> str:
    if not grid or not grid[0]:
        return "0"
    return "\n".join(" ".join(str(x) for x in row) for row in grid)


def _actions_of_steps(steps: tuple[ArrowStep, ...], n_slots: int, cyclic: bool) -> dict[str, tuple[tuple[int, int], ...]]:
    actions: dict[str, list[tuple[int, int]]] = defaultdict(list)
    for k, step in enumerate(steps):
        left, right = k, (k + 1) % n_slots if cyclic else k + 1
        actions[step.arrow].append((left, right) if step.direct else (right, left))
    return {arrow: tuple(pairs) for arrow, pairs in actions.items()}


def string_module(w: StringWord, A: GentleAlgebra) -> StringModule:
    return StringModule(A, w.vertices, _actions_of_steps(w.steps, len(w.vertices), False), format_string(w))


def band_module(band: Band, A: GentleAlgebra) -> StringModule:
    """Degree one band module at parameter 1: the closing step acts as the identity."""
    rep = band.representative
    slots = rep.vertices[:-1]
    return StringModule(A, slots, _actions_of_steps(rep.steps, len(slots), True), f"band {band}")


# ---------------------------------------------------------------------------
# Hom spaces by exact elimination
# ---------------------------------------------------------------------------


def _rank(rows: list[dict[int, int]], n_vars: int) -> int:
    """Rank over Q of the constraint rows, one sparse dict per row."""
    if not rows:
        return 0
    entries = {(r, k): sp.Integer(v) for r, row in enumerate(rows) for k, v in row.items() if v}
    return sp.SparseMatrix(len(rows), n_vars, entries).rank()


def hom_dim(M: StringModule, N: StringModule) -> int:
    """dim Hom(M, N): vertex-wise maps f with f . phi_M = phi_N . f for every arrow.

    The unknown f[j, i] sends slot i of M to slot j of N (same vertex).
    """
    var: dict[tuple[int, int], int] = {}
    for i, vi in enumerate(M.slots):
        for j, vj in enumerate(N.slots):
            if vi == vj:
                var[(j, i)] = len(var)
    if not var:
        return 0

    rows: list[dict[int, int]] = []
    for arrow in M.algebra.quiver.arrows:
        m_image = dict(M.actions.get(arrow.name, ()))
        n_preimage = {dst: src for src, dst in N.actions.get(arrow.name, ())}
        for i in M.basis(arrow.source):
            for j_out in N.basis(arrow.target):
                # (phi_N f)(x_i) and (f phi_M)(x_i), read off at slot j_out of N
                row: dict[int, int] = defaultdict(int)
                j = n_preimage.get(j_out)
                if j is not None:
                    row[var[(j, i)]] += 1
                i_out = m_image.get(i)
                if i_out is not None:
                    row[var[(j_out, i_out)]] -= 1
                if any(row.values()):
                    rows.append(dict(row))
    dim = len(var) - _rank(rows, len(var))
    logger.debug("hom_dim(%s, %s) = %d from %d unknowns", M.label, N.label, dim, len(var))
    return dim


def hom_dim_oracle(u: StringWord, v: StringWord, A: GentleAlgebra) -> int:
    return hom_dim(string_module(u, A), string_module(v, A))


def band_module_end_dim(band: Band, A: GentleAlgebra) -> int:
    M = band_module(band, A)
    return hom_dim(M, M)


# ---------------------------------------------------------------------------
# occurrences and envelopes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Occurrence:
    """``pattern`` (or its inverse when ``inverted``) read at ``position`` of ``host``."""

    host: StringWord = field(compare=False, repr=False)
    position: int
    length: int
    inverted: bool = False

    @property
    def end(self) -> int:
        return self.position + self.length

    @property
    def pattern(self) -> StringWord:
        s = self.host.substring(self.position, self.length)
        return s.inverse() if self.inverted else s

    @property
    def is_whole(self) -> bool:
        return self.position == 0 and self.length == len(self.host)

    def touches_left(self) -> bool:
        return self.position == 0

    def touches_right(self) -> bool:
        return self.end == len(self.host)


@dataclass(frozen=True)
class Envelope:
    occurrence: Occurrence
    mu: Optional[ArrowStep]
    nu: Optional[ArrowStep]

    @property
    def submodule(self) -> bool:
        return (self.mu is None or self.mu.direct) and (self.nu is None or not self.nu.direct)

    @property
    def quotient(self) -> bool:
        return (self.mu is None or not self.mu.direct) and (self.nu is None or self.nu.direct)

    @property
    def kind(self) -> str:
        if self.submodule and self.quotient:
            return "Both"
        if self.submodule:
            return "Submodule"
        if self.quotient:
            return "Quotient"
        return "Neither"

    @property
    def closed(self) -> bool:
        """Both boundary letters are present."""
        return self.mu is not None and self.nu is not None


def envelope(occ: Occurrence) -> Envelope:
    host = occ.host
    mu = host.steps[occ.position - 1] if occ.position > 0 else None
    nu = host.steps[occ.end] if occ.end < len(host) else None
    return Envelope(occ, mu, nu)


def find_occurrences(host: StringWord, pattern: StringWord) -> list[Occurrence]:
    """Occurrences of the pattern as written (no inversion)."""
    n = len(pattern)
    if pattern.is_lazy:
        return [Occurrence(host, k, 0) for k, v in enumerate(host.vertices) if v == pattern.source]
    tokens = host.tokens if not host.is_lazy else ()
    return [
        Occurrence(host, k, n)
        for k in range(len(host) - n + 1)
        if tokens[k : k + n] == pattern.tokens
    ]


def envelopes(host: StringWord, pattern: StringWord) -> list[Envelope]:
    return [envelope(occ) for occ in find_occurrences(host, pattern)]


def _factor_key(host: StringWord, position: int, length: int) -> tuple[str, ...]:
    if length == 0:
        return (f"@{host.vertices[position]}",)
    return host.tokens[position : position + length]


def _inverse_key(key: tuple[str, ...]) -> tuple[str, ...]:
    if key[0].startswith("@"):
        return key
    return tuple(t[:-1] if t.endswith("-") else f"{t}-" for t in reversed(key))


def _factors(host: StringWord, left_open: bool = False, right_open: bool = False):
    """Every factor occurrence of the host whose envelope is fully visible."""
    d = len(host)
    for length in range(d + 1):
        for position in range(d - length + 1):
            if left_open and position == 0:
                continue
            if right_open and position + length == d:
                continue
            yield Occurrence(host, position, length)


@dataclass(frozen=True)
class GraphMap:
    source: Occurrence
    target: Occurrence

    @property
    def pattern(self) -> StringWord:
        return self.source.pattern

    def is_identity(self) -> bool:
        return (
            self.source.host == self.target.host
            and self.source.is_whole
            and self.target.is_whole
            and not self.target.inverted
        )

    def describe(self) -> str:
        side = "inverted " if self.target.inverted else ""
        return (
            f"{format_string(self.pattern)}: quotient at {self.source.position} -> "
            f"{side}submodule at {self.target.position}"
        )


def _submodule_index(v: StringWord, left_open: bool, right_open: bool) -> dict[tuple[str, ...], list[Occurrence]]:
    index: dict[tuple[str, ...], list[Occurrence]] = defaultdict(list)
    for occ in _factors(v, left_open, right_open):
        if envelope(occ).submodule:
            index[_factor_key(v, occ.position, occ.length)].append(occ)
    return index


def _graph_maps(
    u: StringWord,
    v: StringWord,
    left_open: bool = False,
    right_open: bool = False,
) -> list[GraphMap]:
    sub_index = _submodule_index(v, left_open, right_open)
    maps = []
    for occ in _factors(u, left_open, right_open):
        if not envelope(occ).quotient:
            continue
        key = _factor_key(u, occ.position, occ.length)
        for target in sub_index.get(key, ()):
            maps.append(GraphMap(occ, target))
        inv = _inverse_key(key)
        if inv != key:
            for target in sub_index.get(inv, ()):
                maps.append(GraphMap(occ, Occurrence(v, target.position, target.length, inverted=True)))
    return maps


def graph_maps(u: StringWord, v: StringWord) -> list[GraphMap]:
    """All graph maps M(u) -> M(v); for finite strings they form a basis of Hom."""
    return _graph_maps(u, v)


@dataclass(frozen=True)
class Kiss:
    pattern: StringWord
    source: Occurrence
    target: Occurrence


def kisses(w: StringWord, v: StringWord) -> list[Kiss]:
    """Graph maps w -> v whose four boundary letters all exist."""
    found = []
    for gm in graph_maps(w, v):
        if envelope(gm.source).closed and envelope(gm.target).closed:
            found.append(Kiss(gm.pattern, gm.source, gm.target))
    return found


def _witness_order(gm: GraphMap) -> tuple[int, int, int, bool]:
    return (gm.source.length, gm.source.position, gm.target.position, gm.target.inverted)


def graph_map_witnesses_window(w: StringWord, left_open: bool = False, right_open: bool = False) -> list[GraphMap]:
    """Non-identity finite graph maps of a window, ignoring occurrences at open ends."""
    maps = [gm for gm in _graph_maps(w, w, left_open, right_open) if not gm.is_identity()]
    return sorted(maps, key=_witness_order)


@dataclass(frozen=True)
class BrickResult:
    brick: bool
    witness: Optional[GraphMap] = None

    def __bool__(self) -> bool:
        return self.brick


def is_brick_finite(w: StringWord) -> BrickResult:
    witnesses = graph_map_witnesses_window(w)
    return BrickResult(not witnesses, witnesses[0] if witnesses else None)


def is_inner_brick(w: StringWord) -> bool:
    return not kisses(w, w)


def is_strong_inner_brick(w: StringWord, left_open: bool = False, right_open: bool = False) -> BrickResult:
    witnesses = graph_map_witnesses_window(w, left_open, right_open)
    return BrickResult(not witnesses, witnesses[0] if witnesses else None)
