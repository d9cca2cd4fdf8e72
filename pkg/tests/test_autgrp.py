import pytest

from symsurf.autgrp import (automorphism_group, automorphism_order_by_closure,
                            certify_isomorphism)
from symsurf.construct import frucht_graph, frucht_lift, gamma_cn
from symsurf.cubicgraph import CubicGraph
from symsurf.errors import BudgetExceeded
from symsurf.fixtures import a5_snark_graph, k4_graph, k33_graph, petersen_graph
from symsurf.permgroup import PermGroup, Permutation, named_generators, parse_cycles

from .oracles import MULTIGRAPHS, brute_force_automorphisms, cubic_multigraphs


def _graph(n, edges):
    return CubicGraph(tuple(str(i) for i in range(n)), tuple(edges))


def _check_against_oracle(n, edges):
    g = _graph(n, edges)
    res = automorphism_group(g)
    brute = brute_force_automorphisms(n, edges)
    assert res.order == len(brute)
    assert all(g.is_automorphism(p.array) for p in res.generators)
    # the generators produce exactly the brute-force set
    generated = {p.array for p in res.group(n).elements} if res.generators else {tuple(range(n))}
    assert generated == set(brute)
    assert automorphism_order_by_closure(res, n) == res.order


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_all_small_cubic_multigraphs_match_exhaustive_search(n):
    for edges in cubic_multigraphs(n):
        _check_against_oracle(n, edges)


@pytest.mark.parametrize("name", sorted(MULTIGRAPHS))
def test_multigraphs_match_exhaustive_search(name):
    _check_against_oracle(*MULTIGRAPHS[name])


@pytest.mark.parametrize("fixture,order", [(k4_graph, 24), (k33_graph, 72),
                                           (petersen_graph, 120)])
def test_known_orders(fixture, order):
    res = automorphism_group(fixture())
    assert res.order == order and res.orbit_count == 1


def test_seeding_does_not_change_the_result():
    g = a5_snark_graph()
    assert automorphism_group(g, seed_triplets=False).order == automorphism_group(g).order


def test_orbits_of_cyclic_family():
    res = automorphism_group(gamma_cn(5))
    assert res.order == 5 and res.orbit_count == 6
    assert all(len(o) == 5 for o in res.orbits)


def test_node_cap():
    with pytest.raises(BudgetExceeded):
        automorphism_group(petersen_graph(), node_cap=5)


def test_certificate_for_simplified_frucht_graph():
    G = PermGroup(named_generators("Q8"))
    g, _ = frucht_graph(G, G.generators, "simplified")
    cert = certify_isomorphism(g, G, frucht_lift(g, G, "simplified"))
    assert cert.certified and cert.aut_order == 8 and cert.witness is None


def test_certificate_reports_bad_lift():
    G = PermGroup(named_generators("S3"))
    g, _ = frucht_graph(G, G.generators, "simplified")
    swap = Permutation((1, 0) + tuple(range(2, g.n)))
    cert = certify_isomorphism(g, G, lambda x: swap)
    assert not cert.lifts_are_automorphisms and not cert.certified
    assert cert.witness


def test_certificate_reports_trivial_lift():
    G = PermGroup(named_generators("S3"))
    g, _ = frucht_graph(G, G.generators, "simplified")
    cert = certify_isomorphism(g, G, lambda x: Permutation.identity(g.n))
    assert cert.lifts_are_automorphisms and not cert.homomorphism_injective


def test_certificate_reports_order_mismatch():
    # C3 acting on K4 by rotating three nodes: a faithful action, but Aut(K4) is larger
    G = PermGroup([parse_cycles("(1,2,3)")])
    g = k4_graph()
    cert = certify_isomorphism(g, G, lambda x: x.extend(4))
    assert cert.lifts_are_automorphisms and cert.homomorphism_injective
    assert not cert.order_matches and cert.aut_order == 24
