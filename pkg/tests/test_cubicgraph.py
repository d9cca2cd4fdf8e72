import itertools
import math
import time

import networkx as nx
import pytest

from symsurf.construct import gamma_dn
from symsurf.cubicgraph import (CubicGraph, EdgeColouring, bridges, contract_three_cycles,
                                cycle_triplet, cycle_triplets, find_tait_colouring,
                                from_quadratic_form, parse_quadratic_form, structural_report,
                                triangles)
from symsurf.errors import NotDegreeThree, OverlappingTriangles, SelfLoop
from symsurf.fixtures import k4_graph, k33_graph, petersen_graph

from .oracles import MULTIGRAPHS, simple_cubic_graphs, to_networkx


def _graph(n, edges):
    return CubicGraph(tuple(str(i) for i in range(n)), tuple(edges))


def _has_tait_colouring(n, edges):
    """A cubic graph is 3-edge-colourable iff some perfect matching leaves
    only even cycles behind."""
    for match in itertools.combinations(range(len(edges)), n // 2):
        ends = [v for e in match for v in edges[e]]
        if len(set(ends)) != n:
            continue
        rest = nx.MultiGraph()
        rest.add_nodes_from(range(n))
        rest.add_edges_from(edges[e] for e in range(len(edges)) if e not in match)
        if all(len(c) % 2 == 0 for c in nx.connected_components(rest)):
            return True
    return False


def test_triangle_from_quadratic_form():
    g = from_quadratic_form(parse_quadratic_form("a*b + b*c + c*a"))
    assert g.nodes == ("a", "b", "c") and g.m == 3


def test_quadratic_form_rejects_square():
    with pytest.raises(SelfLoop):
        from_quadratic_form([("a", "a")])


def test_dihedral_form_counts():
    g = gamma_dn(4)
    assert (g.n, g.m) == (16, 24)


def test_petersen_structure():
    rep = structural_report(petersen_graph())
    assert (rep.is_cubic, rep.is_connected, rep.is_bridgeless, rep.girth) == (True, True, True, 5)


def test_structure_matches_networkx_on_all_small_cubic_graphs():
    for n in (4, 6, 8):
        for edges in simple_cubic_graphs(n):
            g = _graph(n, edges)
            G = nx.Graph(edges)
            rep = structural_report(g)
            assert rep.is_connected == nx.is_connected(G)
            assert rep.is_bridgeless == (not any(True for _ in nx.bridges(G)))
            assert rep.girth == nx.girth(G)


def test_bridge_detection():
    # two K4s with one edge subdivided each, joined by a bridge
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (3, 4),
             (5, 6), (5, 7), (6, 7), (6, 8), (7, 8), (5, 9), (8, 9), (4, 9)]
    g = _graph(10, edges)
    assert [g.edges[e] for e in bridges(g)] == [(4, 9)]
    assert not structural_report(g).is_bridgeless


def test_parallel_edges_are_not_bridges():
    n, edges = MULTIGRAPHS["double_square"]
    g = _graph(n, edges)
    assert g.has_parallel_edges() and not bridges(g)
    assert structural_report(g).girth == 2


def _brute_triplet(g, v):
    G = nx.MultiGraph(to_networkx(g))
    inc = g.incidence[v]
    best = {}
    simple = nx.Graph(to_networkx(g))
    for cyc in nx.simple_cycles(simple):
        if v not in cyc or len(cyc) < 3:
            continue
        i = cyc.index(v)
        a, b = cyc[i - 1], cyc[(i + 1) % len(cyc)]
        key = frozenset((a, b))
        best[key] = min(best.get(key, math.inf), len(cyc))
    out = []
    for e, f in itertools.combinations(inc, 2):
        a, b = g.other(e, v), g.other(f, v)
        out.append(2 if a == b else best.get(frozenset((a, b)), math.inf))
    del G
    return tuple(sorted(out))


def test_cycle_triplets_match_cycle_enumeration():
    for g in (petersen_graph(), k33_graph(), k4_graph(), gamma_dn(4)):
        for v in range(g.n):
            assert cycle_triplet(g, v) == _brute_triplet(g, v)
    assert set(cycle_triplets(petersen_graph())) == {(5, 5, 5)}


def test_cycle_triplet_of_parallel_pair():
    n, edges = MULTIGRAPHS["double_square"]
    assert cycle_triplet(_graph(n, edges), 0)[0] == 2


def test_cycle_triplet_needs_degree_three():
    g = _graph(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(NotDegreeThree):
        cycle_triplet(g, 0)


def test_k4_colouring_is_proper():
    g = k4_graph()
    col = find_tait_colouring(g)
    assert col is not None and col.is_proper(g)


def test_petersen_has_no_colouring_quickly():
    start = time.perf_counter()
    assert find_tait_colouring(petersen_graph()) is None
    assert time.perf_counter() - start < 5.0


def test_colouring_search_agrees_with_matching_oracle():
    for n in (4, 6, 8):
        for edges in simple_cubic_graphs(n):
            g = _graph(n, edges)
            col = find_tait_colouring(g)
            assert (col is not None) == _has_tait_colouring(n, edges)
            if col is not None:
                assert col.is_proper(g)
    for n, edges in MULTIGRAPHS.values():
        g = _graph(n, edges)
        col = find_tait_colouring(g)
        assert (col is not None) == _has_tait_colouring(n, edges)


def test_improper_colouring_detected():
    g = k4_graph()
    assert not EdgeColouring(("r",) * 6).is_proper(g)


def test_contracting_triangles():
    # prism: two triangles joined by a perfect matching
    g = _graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    assert len(triangles(g)) == 2
    h = contract_three_cycles(g)
    assert h.n == 2 and h.m == 3 and h.has_parallel_edges()


def test_overlapping_triangles_rejected():
    with pytest.raises(OverlappingTriangles):
        contract_three_cycles(k4_graph())


def test_automorphism_check():
    g = k4_graph()
    assert g.is_automorphism((1, 0, 3, 2))
    p = petersen_graph()
    assert not p.is_automorphism((1, 0) + tuple(range(2, 10)))
