"""Randomised invariants over permutations, constructed graph families,
their covers and surfaces, and the embedding families."""

import math

import numpy as np
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from symsurf.cdc import cdc_from_colouring, family_cdc, verify_cdc
from symsurf.construct import (cayley_graph, frucht_graph, frucht_lift, gamma_cn, gamma_dn,
                               left_multiplication_lift)
from symsurf.embed import (FamilyParams, barycentre_residual, build_x_family, build_y_family,
                           induced_permutation, rotation, tutte_embedding, valid_twists,
                           verify_unit_edges)
from symsurf.permgroup import PermGroup, Permutation, parse_cycles, print_cycles
from symsurf.surface import (euler_characteristic, face_graph, surface_from_cdc,
                             validate_surface)

from .oracles import closure, compose, edge_count

SETTINGS = settings(max_examples=40, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


@st.composite
def permutations(draw, n=None):
    n = draw(st.integers(1, 7)) if n is None else n
    return Permutation(tuple(draw(st.permutations(range(n)))))


@st.composite
def two_generator_groups(draw):
    """A group given by two random permutations of degree 3..5, with the
    generators in the order they were drawn."""
    n = draw(st.integers(3, 5))
    a, b = draw(permutations(n)), draw(permutations(n))
    assume(not a.is_identity() and not b.is_identity())
    return PermGroup([a, b]), [a, b]


@st.composite
def family_graphs(draw):
    """A constructed cubic graph together with a cycle double cover."""
    kind = draw(st.sampled_from(["cyclic", "dihedral", "frucht"]))
    if kind == "cyclic":
        n = draw(st.integers(3, 9))
        return gamma_cn(n), family_cdc("cyclic", n=n)
    if kind == "dihedral":
        n = draw(st.integers(4, 9))
        return gamma_dn(n), family_cdc("dihedral", n=n)
    G, gens = draw(two_generator_groups())
    assume(G.order <= 60)
    g, col = frucht_graph(G, gens, "simplified")
    return g, cdc_from_colouring(g, col)


# permutations and groups

@SETTINGS
@given(st.data())
def test_composition_matches_naive_composition(data):
    n = data.draw(st.integers(1, 7))
    a, b = data.draw(permutations(n)), data.draw(permutations(n))
    assert (a * b).array == compose(a.array, b.array)


@SETTINGS
@given(permutations())
def test_cycle_text_round_trip(p):
    assert parse_cycles(print_cycles(p), p.degree) == p


@SETTINGS
@given(st.data())
def test_group_axioms(data):
    n = data.draw(st.integers(2, 5))
    gens = data.draw(st.lists(permutations(n), min_size=1, max_size=3))
    G = PermGroup(gens)
    elems = G.elements
    assert {g.array for g in elems} == closure([g.array for g in gens])
    ident = Permutation.identity(n)
    for g in elems:
        assert g * g.inverse() == ident and g * ident == g
        assert G.index(g * elems[-1]) >= 0
    x, y, z = (data.draw(st.sampled_from(elems)) for _ in range(3))
    assert (x * y) * z == x * (y * z)


# covers and surfaces of constructed graphs

@SETTINGS
@given(family_graphs())
def test_every_edge_is_covered_twice(graph_and_cover):
    g, cover = graph_and_cover
    rep = verify_cdc(g, cover)
    assert rep.valid and set(rep.edge_counts) == {2}
    assert set(edge_count(cover.cycles, g.edges).values()) == {2}


@SETTINGS
@given(family_graphs())
def test_cycle_lengths_sum_to_twice_the_edges(graph_and_cover):
    g, cover = graph_and_cover
    assert sum(cover.lengths()) == 2 * g.m


@SETTINGS
@given(family_graphs())
def test_face_graph_recovers_the_graph(graph_and_cover):
    g, cover = graph_and_cover
    fg = face_graph(surface_from_cdc(g, cover))
    assert fg.nodes == g.nodes
    assert sorted(tuple(sorted(e)) for e in fg.edges) == sorted(tuple(sorted(e)) for e in g.edges)


@SETTINGS
@given(family_graphs())
def test_euler_characteristic_from_counts(graph_and_cover):
    g, cover = graph_and_cover
    s = surface_from_cdc(g, cover)
    assert validate_surface(s).ok
    assert euler_characteristic(s) == len(cover) - g.m + g.n


# group actions on constructed graphs

@SETTINGS
@given(two_generator_groups(), st.sampled_from(["original", "simplified"]), st.data())
def test_frucht_lifts_are_automorphisms(group_and_gens, variant, data):
    G, gens = group_and_gens
    assume(G.order <= 60)
    g, _ = frucht_graph(G, gens, variant)
    lift = frucht_lift(g, G, variant)
    x, y = data.draw(st.sampled_from(G.elements)), data.draw(st.sampled_from(G.elements))
    assert g.is_automorphism(lift(x).array)
    assert lift(x * y) == lift(x) * lift(y)


@SETTINGS
@given(st.data())
def test_left_multiplication_lifts_are_automorphisms(data):
    n = data.draw(st.integers(3, 5))
    # an involution: a random conjugate of (1,2) or (1,2)(3,4)
    base = parse_cycles(data.draw(st.sampled_from(["(1,2)", "(1,2)(3,4)"])), n)
    sigma, x = data.draw(permutations(n)), data.draw(permutations(n))
    t = sigma * base * sigma.inverse()
    assume(x.order() >= 3)
    G = PermGroup([t, x])
    assume(G.order <= 120)
    g = cayley_graph(G, [t, x])
    lift = left_multiplication_lift(g, G)
    h = data.draw(st.sampled_from(G.elements))
    assert g.is_automorphism(lift(h).array)


# embeddings

@st.composite
def family_params(draw):
    n = draw(st.sampled_from([n for n in range(3, 16) if valid_twists(n)]))
    l = draw(st.sampled_from(valid_twists(n)))
    return FamilyParams(n, draw(st.integers(0, 3)), l)


@SETTINGS
@given(family_params(), st.sampled_from(["x", "y"]))
def test_builds_have_unit_edges_and_rotation_symmetry(p, kind):
    assume(kind == "x" or p.n >= 4)
    s, coords = (build_x_family if kind == "x" else build_y_family)(p)
    assert verify_unit_edges(s, coords).ok
    assert euler_characteristic(s) == 2
    perm = induced_permutation(s, coords, rotation(p.alpha))
    assert perm is not None
    faces = {frozenset(s.face_vertices(f)) for f in range(s.n_faces)}
    assert {frozenset(perm.array[v] for v in t) for t in faces} == faces


@SETTINGS
@given(st.sampled_from(["cyclic", "dihedral"]), st.integers(4, 12))
def test_tutte_residual(kind, n):
    g = gamma_cn(n) if kind == "cyclic" else gamma_dn(n)
    outer = [g.index(f"d{i}") for i in range(1, n + 1)]
    polygon = [(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)]
    pos = tutte_embedding(g, outer, polygon)
    assert barycentre_residual(g, pos, outer) < 1e-10
    assert np.abs(pos[outer] - np.array(polygon)).max() == 0
