"""Small named graphs, covers and surfaces used as worked examples.

Graph node labels are the 1-based numbers of the original drawings.
"""

from __future__ import annotations

from .cubicgraph import CubicGraph, from_edge_list

_PETERSEN_EDGES = "1-2 1-5 1-6 2-3 2-7 3-4 3-8 4-5 4-9 5-10 6-8 6-9 7-9 7-10 8-10"

_PETERSEN_COVERS = (
    ((1, 5, 4, 3, 2), (1, 6, 9, 7, 2), (1, 6, 8, 3, 2, 7, 10, 5),
     (4, 9, 6, 8, 10, 5), (3, 8, 10, 7, 9, 4)),
    ((1, 5, 4, 3, 2), (1, 6, 9, 7, 2), (2, 7, 10, 5, 4, 9, 6, 8, 3),
     (1, 6, 8, 10, 5), (3, 8, 10, 7, 9, 4)),
    ((1, 5, 4, 3, 2), (1, 6, 9, 7, 2), (4, 9, 7, 10, 5), (3, 8, 6, 9, 4),
     (1, 6, 8, 10, 5), (2, 7, 10, 8, 3)),
)

# 30-node vertex-transitive graph of A5 (orbital graph on cosets of an involution)
_A5_ORBITAL_EDGES = (
    "1-6 1-9 1-16 2-5 2-11 2-25 3-4 3-13 3-28 4-7 4-20 5-14 5-22 6-19 6-26 "
    "7-12 7-15 8-11 8-17 8-26 9-10 9-30 10-13 10-24 11-23 12-22 12-27 13-18 "
    "14-17 14-27 15-16 15-29 16-21 17-19 18-23 18-25 19-24 20-23 20-29 21-22 "
    "21-30 24-28 25-30 26-29 27-28")

_A5_ORBITAL_COVER = (
    (14, 27, 28, 24, 19, 17), (9, 30, 25, 18, 13, 10), (8, 26, 29, 20, 23, 11),
    (7, 15, 16, 21, 22, 12), (3, 28, 27, 12, 7, 4), (3, 13, 18, 23, 20, 4),
    (2, 11, 8, 17, 14, 5), (2, 25, 30, 21, 22, 5), (1, 9, 10, 24, 19, 6),
    (1, 16, 15, 29, 26, 6), (3, 28, 24, 10, 13), (2, 25, 18, 23, 11),
    (1, 16, 21, 30, 9), (6, 26, 8, 17, 19), (5, 22, 12, 27, 14), (4, 20, 29, 15, 7),
)

# 30-node snark: ten disjoint triangles, contracting them gives the Petersen graph
_A5_SNARK_EDGES = (
    "1-6 1-7 1-13 2-5 2-9 2-26 3-4 3-14 3-25 4-11 4-22 5-16 5-19 6-20 6-28 "
    "7-12 7-13 8-11 8-15 8-27 9-10 9-26 10-17 10-23 11-22 12-24 12-30 13-18 "
    "14-17 14-25 15-16 15-27 16-19 17-23 18-21 18-29 19-24 20-23 20-28 21-22 "
    "21-29 24-30 25-30 26-29 27-28")

# face graph of the octahedron (a cube), numbered for the square-outer-face drawing
_OCTAHEDRON_FACE_GRAPH = "1-2 1-4 1-5 2-3 2-6 3-4 3-7 4-8 5-6 5-8 6-7 7-8"

TORUS7_FACES = (
    (2, 3, 1), (3, 4, 1), (6, 4, 2), (2, 5, 3), (5, 6, 3), (3, 7, 4), (6, 7, 3),
    (4, 7, 2), (2, 7, 5), (1, 6, 2), (5, 7, 1), (4, 5, 1), (4, 6, 5), (1, 7, 6),
)

OCTAHEDRON_FACES = ((1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 2, 5),
                    (2, 3, 6), (3, 4, 6), (4, 5, 6), (2, 5, 6))

TETRAHEDRON_FACES = ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))


def _numbered_graph(n: int, spec: str) -> CubicGraph:
    pairs = [tuple(e.split("-")) for e in spec.split()]
    return from_edge_list([str(i) for i in range(1, n + 1)], pairs)


def petersen_graph() -> CubicGraph:
    return _numbered_graph(10, _PETERSEN_EDGES)


def petersen_covers() -> list[list[list[str]]]:
    """The three stored covers, as label cycles."""
    return [[[str(v) for v in c] for c in cover] for cover in _PETERSEN_COVERS]


def a5_orbital_graph() -> CubicGraph:
    return _numbered_graph(30, _A5_ORBITAL_EDGES)


def a5_orbital_cover() -> list[list[str]]:
    """Ten hexagons and six pentagons, invariant under the graph's A5."""
    return [[str(v) for v in c] for c in _A5_ORBITAL_COVER]


def a5_snark_graph() -> CubicGraph:
    return _numbered_graph(30, _A5_SNARK_EDGES)


def octahedron_face_graph() -> CubicGraph:
    return _numbered_graph(8, _OCTAHEDRON_FACE_GRAPH)


def k4_graph() -> CubicGraph:
    return _numbered_graph(4, "1-2 1-3 1-4 2-3 2-4 3-4")


def k33_graph() -> CubicGraph:
    return _numbered_graph(6, "1-4 1-5 1-6 2-4 2-5 2-6 3-4 3-5 3-6")


GRAPH_FIXTURES = {
    "petersen": petersen_graph,
    "a5_orbital": a5_orbital_graph,
    "a5_snark": a5_snark_graph,
    "octahedron_face_graph": octahedron_face_graph,
    "k4": k4_graph,
    "k33": k33_graph,
}


def surface_fixture(name: str):
    from .surface import SimplicialSurface
    faces = {"torus7": TORUS7_FACES, "octahedron": OCTAHEDRON_FACES,
             "tetrahedron": TETRAHEDRON_FACES}.get(name)
    if faces is None:
        raise KeyError(f"no surface fixture named {name!r}")
    return SimplicialSurface.from_vertex_faces(faces)


SURFACE_FIXTURES = ("torus7", "octahedron", "tetrahedron")
