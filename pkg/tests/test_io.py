import json

import networkx as nx
import numpy as np
import pytest

from symsurf import io
from symsurf.cdc import family_cdc
from symsurf.construct import frucht_graph, gamma_dn
from symsurf.embed import FamilyParams, build_x_family
from symsurf.errors import MalformedFile
from symsurf.fixtures import a5_orbital_graph, k4_graph, petersen_graph, surface_fixture
from symsurf.permgroup import PermGroup, named_generators
from symsurf.surface import surface_from_cdc

from .oracles import MULTIGRAPHS


def test_json_layout_is_one_key_per_line():
    text = io.dumps({"a": [1, 2], "b": {"c": 3}})
    assert text == '{\n  "a": [1,2],\n  "b": {"c":3}\n}\n'
    assert json.loads(text) == {"a": [1, 2], "b": {"c": 3}}


def test_malformed_json_reports_line():
    with pytest.raises(MalformedFile) as info:
        io.loads('{\n  "a": 1,\n  "b": \n}')
    assert info.value.line == 4
    with pytest.raises(MalformedFile):
        io.loads("[1, 2]")


def test_group_round_trip():
    G = PermGroup(named_generators("D5"))
    text = io.group_to_json(G)
    H = io.group_from_json(text)
    assert H.order == 10 and io.group_to_json(H) == text


def test_graph_round_trip_is_byte_stable():
    G = PermGroup(named_generators("S3"))
    g, col = frucht_graph(G, G.generators, "simplified")
    text = io.graph_to_json(g, col)
    g2, col2 = io.graph_from_json(text)
    assert g2 == g and col2 == col
    assert io.graph_to_json(g2, col2) == text


def test_graph_with_parallel_edges_round_trips():
    n, edges = MULTIGRAPHS["double_square"]
    from symsurf.cubicgraph import CubicGraph
    g = CubicGraph(tuple(str(i) for i in range(n)), tuple(edges))
    g2, col = io.graph_from_json(io.graph_to_json(g))
    assert g2 == g and col is None


def test_malformed_graph_json():
    with pytest.raises(MalformedFile):
        io.graph_from_json('{"nodes": ["a", "b"]}')
    with pytest.raises(MalformedFile):
        io.graph_from_json('{"nodes": ["a", "b"], "edges": [[0, "x"]]}')


def test_cdc_round_trip():
    cover = family_cdc("dihedral", n=5)
    text = io.cdc_to_json(cover)
    assert io.cdc_from_json(text) == cover
    assert io.cdc_to_json(io.cdc_from_json(text)) == text


def test_surface_round_trip():
    s = surface_from_cdc(gamma_dn(4), family_cdc("dihedral", n=4))
    text = io.surface_to_json(s)
    s2 = io.surface_from_json(text)
    assert s2 == s and io.surface_to_json(s2) == text


@pytest.mark.parametrize("make", [k4_graph, petersen_graph, a5_orbital_graph])
def test_graph6_matches_networkx(make):
    g = make()
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    expected = nx.to_graph6_bytes(G, header=False).decode().strip()
    assert io.graph_to_graph6(g) == expected
    back = io.graph_from_graph6(expected)
    assert sorted(map(sorted, back.edges)) == sorted(map(sorted, g.edges))


def test_graph6_rejects_bad_input():
    with pytest.raises(MalformedFile):
        io.graph_from_graph6("C~~")
    with pytest.raises(MalformedFile):
        io.graph_from_graph6("C\x01")
    n, edges = MULTIGRAPHS["theta"]
    from symsurf.cubicgraph import CubicGraph
    with pytest.raises(ValueError):
        io.graph_to_graph6(CubicGraph(("a", "b"), tuple(edges)))


def test_off_counts_and_round_trip():
    s, coords = build_x_family(FamilyParams(5, 1, 1))
    text = io.write_off(s, coords)
    lines = text.splitlines()
    assert lines[0] == "OFF"
    assert lines[1] == f"{s.n_vertices} {s.n_faces} {s.n_edges}"
    pts, faces = io.read_off(text)
    assert np.abs(pts - coords).max() < 1e-10
    assert {frozenset(f) for f in faces} == {frozenset(s.face_vertices(f)) for f in range(s.n_faces)}


def test_off_faces_point_outward():
    s, coords = build_x_family(FamilyParams(4, 0, 1))
    pts, faces = io.read_off(io.write_off(s, coords))
    centre = pts.mean(axis=0)
    volume = sum(np.dot(pts[a] - centre, np.cross(pts[b] - centre, pts[c] - centre))
                 for a, b, c in faces)
    assert volume > 0


def test_obj_is_one_based():
    s = surface_fixture("tetrahedron")
    from .oracles import regular_tetrahedron
    text = io.write_obj(s, regular_tetrahedron())
    face_lines = [ln for ln in text.splitlines() if ln.startswith("f ")]
    assert len(face_lines) == 4
    assert min(int(x) for ln in face_lines for x in ln.split()[1:]) == 1


def test_read_off_errors():
    with pytest.raises(MalformedFile):
        io.read_off("NOFF\n")
    with pytest.raises(MalformedFile) as info:
        io.read_off("OFF\n1 1 0\n0 0 0\n3 0 1 2\n")
    assert info.value.line == 4


def test_svg_and_dot():
    g = k4_graph()
    svg = io.write_svg(g, np.array([[0, 0], [1, 0], [1, 1], [0, 1]], float))
    assert svg.count("<line") == 6 and svg.count("<circle") == 4
    assert io.graph_to_dot(g).count("--") == 6
