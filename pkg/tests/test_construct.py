import networkx as nx
import pytest

from symsurf.autgrp import automorphism_group, certify_isomorphism
from symsurf.construct import (cayley_colouring, cayley_graph, dihedral_reflection,
                               frucht_gadget, frucht_graph, frucht_lift, gamma_cn, gamma_dn,
                               left_multiplication_lift, orbital_graph, orbital_lift,
                               parse_frucht_label, rotation_lift)
from symsurf.cubicgraph import contract_three_cycles, structural_report
from symsurf.errors import (ArityMismatch, DoesNotGenerate, GeneratorsDoNotGenerate,
                            NotCubicConnectionSet, NotCubicResult, NTooSmall)
from symsurf.fixtures import a5_orbital_graph
from symsurf.permgroup import PermGroup, named_generators, parse_cycles

from .oracles import to_networkx

A5_GENS = ("(1,2)(4,5)", "(1,5)(3,4)", "(1,5)(2,4)")


def _group(*cycles, degree=None):
    gens = [parse_cycles(c, degree or 0) for c in cycles]
    n = max(g.degree for g in gens)
    gens = [g.extend(n) for g in gens]
    return PermGroup(gens), gens


def test_q8_node_counts():
    G = PermGroup(named_generators("Q8"))
    assert frucht_graph(G, G.generators, "original")[0].n == 64
    simplified = frucht_graph(G, G.generators, "simplified")[0]
    assert simplified.n == 48
    assert contract_three_cycles(simplified).n == 32


@pytest.mark.parametrize("variant", ["original", "simplified", "modified"])
def test_frucht_colouring_is_proper(variant):
    if variant == "modified":
        G, gens = _group(*A5_GENS, degree=5)
    else:
        G = PermGroup(named_generators("S3"))
        gens = G.generators
    g, col = frucht_graph(G, gens, variant)
    assert g.is_cubic() and col.is_proper(g)


def test_gadget_arity():
    with pytest.raises(ArityMismatch):
        frucht_gadget("simplified", 3)
    with pytest.raises(ArityMismatch):
        frucht_gadget("modified", 2)
    with pytest.raises(ArityMismatch):
        frucht_gadget("original", 1)
    assert frucht_gadget("modified", 3)[0] == 12
    assert frucht_gadget("original", 3)[0] == 10


def test_frucht_rejects_non_generating_set():
    G = PermGroup(named_generators("S3"))
    with pytest.raises(GeneratorsDoNotGenerate):
        frucht_graph(G, [parse_cycles("(1,2,3)"), parse_cycles("(1,3,2)")], "simplified")


def test_frucht_labels_round_trip():
    G = PermGroup(named_generators("S3"))
    g, _ = frucht_graph(G, G.generators, "simplified")
    assert parse_frucht_label(g.nodes[0]) == (1, 0)
    assert {parse_frucht_label(lab)[0] for lab in g.nodes} == set(range(1, 7))


@pytest.mark.parametrize("variant", ["original", "simplified"])
def test_frucht_lift_is_an_action_by_automorphisms(variant):
    G = PermGroup(named_generators("S3"))
    g, _ = frucht_graph(G, G.generators, variant)
    cert = certify_isomorphism(g, G, frucht_lift(g, G, variant))
    assert cert.lifts_are_automorphisms and cert.homomorphism_injective


def test_simplified_frucht_of_c3_with_mutually_inverse_generators():
    # g2 = g1^-1 makes the gadget symmetric and doubles the automorphism group
    G, gens = _group("(1,2,3)", "(1,3,2)")
    g, _ = frucht_graph(G, gens, "simplified")
    assert automorphism_group(g).order == 6
    G, gens = _group("(1,2,3)", "(1,2,3)")
    g, _ = frucht_graph(G, gens, "simplified")
    assert automorphism_group(g).order == 3


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cyclic_family(n):
    g = gamma_cn(n)
    assert g.n == 6 * n and g.is_cubic()
    rot = rotation_lift(g, n)
    assert g.is_automorphism(rot.array) and rot.order() == n
    assert automorphism_group(g).order == n


@pytest.mark.parametrize("n", [4, 5, 6])
def test_dihedral_family(n):
    g = gamma_dn(n)
    assert g.n == 4 * n and g.is_cubic()
    rot, ref = rotation_lift(g, n), dihedral_reflection(g, n)
    assert g.is_automorphism(rot.array) and g.is_automorphism(ref.array)
    assert ref.order() == 2 and ref * rot * ref == rot.inverse()
    assert automorphism_group(g).order == 2 * n


def test_family_lower_bounds():
    with pytest.raises(NTooSmall):
        gamma_cn(2)
    with pytest.raises(NTooSmall):
        gamma_dn(3)


def test_cayley_a5_three_involutions():
    G, s = _group(*A5_GENS, degree=5)
    g = cayley_graph(G, s)
    assert (g.n, g.m) == (60, 90)
    assert structural_report(g).is_connected
    assert cayley_colouring(G, s, g).is_proper(g)
    assert certify_isomorphism(g, G, left_multiplication_lift(g, G)).certified


def test_cayley_involution_and_even_order_element():
    G = PermGroup(named_generators("S4"))
    s = [parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)")]
    g = cayley_graph(G, s)
    assert g.n == 24 and g.is_cubic()
    assert cayley_colouring(G, s, g).is_proper(g)
    lift = left_multiplication_lift(g, G)
    assert all(g.is_automorphism(lift(x).array) for x in G)


def test_cayley_rejects_bad_connection_sets():
    G = PermGroup(named_generators("S3"))
    with pytest.raises(NotCubicConnectionSet):
        cayley_graph(G, [parse_cycles("(1,2,3)")])
    with pytest.raises(NotCubicConnectionSet):
        cayley_graph(G, [parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)"),
                         parse_cycles("(2,3)")])
    klein = [parse_cycles(c) for c in ("(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)")]
    with pytest.raises(DoesNotGenerate):
        cayley_graph(PermGroup(named_generators("S4")), klein)


def test_orbital_a5_matches_fixture():
    G = PermGroup(named_generators("A5"))
    H = PermGroup([parse_cycles("(2,3)(4,5)", 5)])
    g = orbital_graph(G, H, [parse_cycles("(1,3,4,5,2)"), parse_cycles("(2,4)(3,5)")])
    assert (g.n, g.m) == (30, 45)
    assert nx.is_isomorphic(to_networkx(g), to_networkx(a5_orbital_graph()))
    assert certify_isomorphism(g, G, orbital_lift(g, G, H)).certified


def test_orbital_listed_set_is_not_cubic():
    G = PermGroup(named_generators("A5"))
    H = PermGroup([parse_cycles("(2,3)(4,5)", 5)])
    with pytest.raises(NotCubicResult):
        orbital_graph(G, H, [parse_cycles("(1,5)(3,4)"), parse_cycles("(1,4,2,3,5)")])
