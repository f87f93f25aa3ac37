import pytest

from sturmbrick.gentle import Band, band_rotations, format_string, lazy, parse_string, random_string
from sturmbrick.modules import (
    GraphMap,
    band_module,
    band_module_end_dim,
    envelopes,
    find_occurrences,
    format_matrix,
    graph_maps,
    hom_dim,
    hom_dim_oracle,
    is_brick_finite,
    is_inner_brick,
    is_strong_inner_brick,
    kisses,
    string_module,
)


def test_dimension_vector(fig1):
    M = string_module(parse_string("β δ- ε θ α-", fig1), fig1)
    dims = M.dimension_vector()
    assert [dims[v] for v in fig1.vertices] == [1, 2, 1, 0, 1, 1]
    assert M.dimension == 6
    assert M.relations_vanish()


def test_arrow_matrices(fig1):
    M = string_module(parse_string("β δ- ε θ α-", fig1), fig1)
    # beta: vertex 2 (slots 0 and 4) -> vertex 3 (slot 1)
    assert M.matrix("β") == [[1, 0]]
    # alpha: vertex 1 (slot 5) -> vertex 2, hitting slot 4
    assert M.matrix("α") == [[0], [1]]
    assert format_matrix(M.matrix("γ")) == "0"


def test_simple_modules(fig1):
    S = string_module(lazy("3"), fig1)
    assert hom_dim(S, S) == 1
    assert hom_dim(S, string_module(lazy("4"), fig1)) == 0


def test_hom_from_projective_like_string(dk):
    A = dk.algebra
    u = parse_string("alpha1", A)
    top = string_module(lazy("1"), A)
    socle = string_module(lazy("2"), A)
    assert hom_dim(string_module(u, A), top) == 1
    assert hom_dim(socle, string_module(u, A)) == 1
    assert hom_dim(top, string_module(u, A)) == 0


@pytest.mark.acceptance
@pytest.mark.parametrize("name", ["fig1", "dk", "kronecker"])
def test_graph_maps_span_hom(name, request, rng):
    A = request.getfixturevalue(name)
    A = getattr(A, "algebra", A)
    for _ in range(150):
        u = random_string(A, 6, rng)
        v = random_string(A, 6, rng)
        assert len(graph_maps(u, v)) == hom_dim_oracle(u, v, A), (str(u), str(v))


def test_lazy_envelopes_in_a(dk):
    found = envelopes(dk.a, lazy("2"))
    assert [e.occurrence.position for e in found] == [0, 2]
    assert [e.kind for e in found] == ["Submodule", "Submodule"]
    assert [e.kind for e in envelopes(dk.a, lazy("1"))] == ["Quotient"]


def test_find_occurrences(dk):
    host = parse_string("beta1 beta2- beta1 beta2-", dk.algebra)
    assert [o.position for o in find_occurrences(host, dk.b)] == [0, 2]
    assert find_occurrences(host, dk.a) == []
    kinds = [e.kind for e in envelopes(host, parse_string("beta1", dk.algebra))]
    assert kinds == ["Submodule", "Neither"]


def test_finite_bricks(dk):
    A = dk.algebra
    assert is_brick_finite(dk.a)
    assert is_brick_finite(parse_string("beta1 beta2- beta1 beta2-", A))
    ab = is_brick_finite(parse_string("alpha1- alpha2 beta1 beta2-", A))
    assert not ab
    assert ab.witness.pattern.is_lazy
    assert not is_brick_finite(parse_string("beta1 beta2- alpha1- alpha2", A))


def test_kisses_and_inner_bricks(dk):
    A = dk.algebra
    ba = parse_string("beta1 beta2- alpha1- alpha2", A)
    bab = parse_string("beta1 beta2- alpha1- alpha2 beta1 beta2-", A)
    assert is_inner_brick(ba)
    assert kisses(bab, bab) == []
    assert is_strong_inner_brick(ba, right_open=True)
    assert not is_strong_inner_brick(ba)


def test_band_end_dimensions(dk):
    A = dk.algebra
    assert band_module_end_dim(Band.of(dk.a, A), A) == 1
    ab = Band.of(parse_string("alpha1- alpha2 beta1 beta2-", A), A)
    assert band_module_end_dim(ab, A) == 1
    aabb = Band.of(parse_string("alpha1- alpha2 alpha1- alpha2 beta1 beta2- beta1 beta2-", A), A)
    assert band_module_end_dim(aabb, A) >= 2
    M = band_module(ab, A)
    assert M.dimension == 4
    assert M.relations_vanish()


def test_lazy_envelopes_in_b(dk):
    assert [e.kind for e in envelopes(dk.b, lazy("2"))] == ["Quotient", "Quotient"]
    assert [e.kind for e in envelopes(dk.b, lazy("3"))] == ["Submodule"]


@pytest.mark.slow
@pytest.mark.acceptance
@pytest.mark.parametrize("name", ["fig1", "dk", "kronecker"])
def test_graph_maps_span_hom_long_strings(name, request, rng):
    A = request.getfixturevalue(name)
    A = getattr(A, "algebra", A)
    for _ in range(40):
        u = random_string(A, 12, rng)
        v = random_string(A, 12, rng)
        assert len(graph_maps(u, v)) == hom_dim_oracle(u, v, A), (str(u), str(v))


def test_kisses_are_non_identity_graph_maps(dk, rng):
    A = dk.algebra
    pairs = [
        (parse_string("beta1 beta2- beta1 beta2-", A), parse_string("alpha1- alpha2 alpha1- alpha2", A)),
        (parse_string("beta1 beta2- alpha1- alpha2", A), parse_string("beta1 beta2- alpha1- alpha2", A)),
    ]
    for _ in range(60):
        w = random_string(A, 10, rng)
        pairs.append((w, w))
        pairs.append((w, random_string(A, 10, rng)))
    seen = 0
    for w, v in pairs:
        maps = graph_maps(w, v)
        for k in kisses(w, v):
            gm = GraphMap(k.source, k.target)
            assert gm in maps
            assert not gm.is_identity()
            assert format_string(k.pattern) == format_string(gm.pattern)
            seen += 1
    assert seen > 0


@pytest.mark.parametrize(
    "name,band",
    [
        ("fig1", "β δ- ε θ"),
        ("dk", "alpha1- alpha2 beta1 beta2-"),
        ("dk", "alpha1- alpha2 alpha1- alpha2 beta1 beta2- beta1 beta2-"),
    ],
)
def test_band_end_dim_is_rotation_invariant(name, band, request):
    A = request.getfixturevalue(name)
    A = getattr(A, "algebra", A)
    b = Band.of(parse_string(band, A), A)
    rotations = band_rotations(b)
    assert len(rotations) == 2 * len(b)
    dims = {band_module_end_dim(Band(rep), A) for rep in rotations}
    assert dims == {band_module_end_dim(b, A)}
    assert all(Band.of(rep, A) == b for rep in rotations)
