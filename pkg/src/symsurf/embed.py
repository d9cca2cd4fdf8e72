"""Equilateral 3D realisations and planar drawings.

Two families of spheres are built from rings of vertices, strips of
triangles between consecutive rings, pyramids closing the ends and small
tetrahedral decorations that break the mirror symmetry:

* ``X(n, k, l)`` has rotational symmetry of order ``n`` only;
* ``Y(n, k, l)`` keeps a mirror as well, giving a dihedral group of order ``2n``.

``n`` is the ring size, ``k`` the number of strips and ``l`` the twist: ring
vertices step by the angle ``alpha = 2*pi*l/n``, so ``l > 1`` gives
star-polygon rings. Every coordinate is solved from the unit-edge
constraints and checked numerically; vertex ids are the 1-based vertex
labels minus one.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .autgrp import AutResult, _orbits
from .cubicgraph import CubicGraph
from .errors import DegenerateGeometry, InvalidParams, NotVertexFaithful, SingularSystem
from .permgroup import Permutation
from .surface import SimplicialSurface, _minimal_generators, is_vertex_faithful, vertex_graph

UNIT_EDGE_TOL = 1e-9
SYMMETRY_TOL = 1e-7
_COS_EPS = 1e-12


# parameters

@dataclass(frozen=True)
class FamilyParams:
    n: int
    k: int = 0
    l: int = 1

    @property
    def alpha(self) -> float:
        return 2 * math.pi * self.l / self.n

    def check(self, min_n: int = 3) -> None:
        if self.n < min_n:
            raise InvalidParams(f"n must be at least {min_n}, got {self.n}")
        if self.k < 0:
            raise InvalidParams(f"k must be non-negative, got {self.k}")
        if not 1 <= self.l <= self.n / 2:
            raise InvalidParams(f"l must lie in 1..n/2, got {self.l}")
        if math.gcd(self.n, self.l) != 1:
            raise InvalidParams(f"gcd(n, l) must be 1, got gcd({self.n}, {self.l})")
        c = math.cos(self.alpha)
        if abs(c - 0.5) <= _COS_EPS:
            raise DegenerateGeometry("cos(alpha) = 1/2: the end pyramids would be flat")
        if c > 0.5:
            raise InvalidParams(f"cos(alpha) = {c:.6f} exceeds 1/2: rings are too wide for unit edges")


def valid_twists(n: int, strict: bool = True) -> list[int]:
    """Twists ``l`` giving inequivalent embeddings for ring size ``n``.

    ``strict`` drops the boundary ``cos(alpha) = 1/2``, where the end
    pyramids degenerate to flat caps.
    """
    out = []
    for l in range(1, n // 2 + 1):
        if math.gcd(n, l) != 1:
            continue
        c = math.cos(2 * math.pi * l / n)
        if c < 0.5 - _COS_EPS or (not strict and c <= 0.5 + _COS_EPS):
            out.append(l)
    return out


# geometry helpers

def rotation(alpha: float) -> np.ndarray:
    """Rotation by ``alpha`` about the z-axis."""
    c, s = math.cos(alpha), math.sin(alpha)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


MIRROR_XZ = np.diag([1.0, -1.0, 1.0])


def _ring_radius(alpha: float) -> float:
    return 1.0 / (2.0 * math.sin(alpha / 2))


def _strip_drop(alpha: float) -> float:
    return math.sqrt(1.0 - 1.0 / (4.0 * math.cos(alpha / 4) ** 2))


def _apex_height(alpha: float) -> float:
    r = _ring_radius(alpha)
    return math.sqrt(1.0 - r * r)


def _tetra_apex(a, b, c, away_from) -> np.ndarray:
    """Fourth vertex of the regular tetrahedron on unit triangle ``abc``,
    on the side of its plane away from the point ``away_from``."""
    a, b, c = (np.asarray(x, float) for x in (a, b, c))
    centroid = (a + b + c) / 3
    normal = np.cross(b - a, c - a)
    norm = np.linalg.norm(normal)
    if norm < 1e-12:
        raise DegenerateGeometry("decoration triangle is degenerate")
    normal /= norm
    if np.dot(normal, centroid - np.asarray(away_from, float)) < 0:
        normal = -normal
    return centroid + math.sqrt(2.0 / 3.0) * normal


def _shift(v: int, i: int, n: int, cycled: int) -> int:
    """Image of 1-based vertex ``v`` under the i-th power of the rotation
    that cycles each block of ``n`` consecutive labels up to ``cycled``."""
    if v > cycled:
        return v
    block, pos = divmod(v - 1, n)
    return block * n + (pos + i) % n + 1


def _orbit_faces(base: Sequence[tuple[int, int, int]], n: int, cycled: int):
    return [tuple(_shift(v, i, n, cycled) for v in f) for f in base for i in range(n)]


def _ring_coords(p: FamilyParams, coords: dict[int, np.ndarray]) -> None:
    n, k, alpha = p.n, p.k, p.alpha
    r, h = _ring_radius(alpha), _strip_drop(alpha)
    for j in range(k + 1):
        for i in range(n):
            theta = j * alpha / 2 + i * alpha
            coords[j * n + i + 1] = np.array([r * math.cos(theta), r * math.sin(theta), -j * h])


def _strip_faces(n: int, k: int) -> list[tuple[int, int, int]]:
    base = []
    for j in range(1, k + 1):
        base.append(((j - 1) * n + 1, (j - 1) * n + 2, j * n + 1))
        base.append(((j - 1) * n + 2, j * n + 1, j * n + 2))
    return base


def _finish(faces, coords: dict[int, np.ndarray]):
    s = SimplicialSurface.from_vertex_faces(faces)
    arr = np.array([coords[int(lbl)] for lbl in s.vertex_labels])
    return s, arr


def build_x_family(p: FamilyParams) -> tuple[SimplicialSurface, np.ndarray]:
    """The chiral family: ``6n + 2kn`` faces, rotation group of order ``n``."""
    p.check(3)
    n, k, alpha = p.n, p.k, p.alpha
    top, bottom = (k + 3) * n + 1, (k + 3) * n + 2
    d1, e1 = (k + 1) * n + 1, (k + 2) * n + 1
    base = [
        (d1, e1, bottom),
        (k * n + 1, e1, bottom),
        (k * n + 1, k * n + 2, d1),
        (1, 2, top),
        (k * n + 2, d1, bottom),
        (k * n + 1, d1, e1),
    ] + _strip_faces(n, k)
    faces = _orbit_faces(base, n, (k + 3) * n)

    coords: dict[int, np.ndarray] = {}
    _ring_coords(p, coords)
    a = _apex_height(alpha)
    coords[top] = np.array([0.0, 0.0, a])
    coords[bottom] = np.array([0.0, 0.0, -k * p_drop(p) - a])
    axis_pt = np.array([0.0, 0.0, coords[k * n + 1][2]])
    coords[d1] = _tetra_apex(coords[k * n + 1], coords[k * n + 2], coords[bottom], axis_pt)
    coords[e1] = _tetra_apex(coords[k * n + 1], coords[d1], coords[bottom], coords[k * n + 2])
    M = rotation(alpha)
    for first in (d1, e1):
        for i in range(1, n):
            coords[first + i] = np.linalg.matrix_power(M, i) @ coords[first]
    return _finish(faces, coords)


def build_y_family(p: FamilyParams) -> tuple[SimplicialSurface, np.ndarray]:
    """The mirror-symmetric family: ``4n + 2kn`` faces, dihedral group of order ``2n``."""
    p.check(4)
    n, k, alpha = p.n, p.k, p.alpha
    top, bottom = (k + 2) * n + 1, (k + 2) * n + 2
    d1 = (k + 1) * n + 1
    base = [
        (k * n + 1, d1, bottom),
        (k * n + 2, d1, bottom),
        (k * n + 1, k * n + 2, d1),
        (1, 2, top),
    ] + _strip_faces(n, k)
    faces = _orbit_faces(base, n, (k + 2) * n)

    coords: dict[int, np.ndarray] = {}
    _ring_coords(p, coords)
    a = _apex_height(alpha)
    coords[top] = np.array([0.0, 0.0, a])
    coords[bottom] = np.array([0.0, 0.0, -k * p_drop(p) - a])
    axis_pt = np.array([0.0, 0.0, coords[k * n + 1][2]])
    coords[d1] = _tetra_apex(coords[k * n + 1], coords[k * n + 2], coords[bottom], axis_pt)
    M = rotation(alpha)
    for i in range(1, n):
        coords[d1 + i] = np.linalg.matrix_power(M, i) @ coords[d1]
    return _finish(faces, coords)


def p_drop(p: FamilyParams) -> float:
    """Height between consecutive rings."""
    return _strip_drop(p.alpha)


def build_family(kind: str, p: FamilyParams):
    if kind in ("cyclic", "x"):
        return build_x_family(p)
    if kind in ("dihedral", "y"):
        return build_y_family(p)
    raise InvalidParams(f"unknown family {kind!r}; expected 'cyclic' or 'dihedral'")


# verification

@dataclass(frozen=True)
class UnitEdgeReport:
    max_error: float
    violators: tuple[int, ...]
    tol: float

    @property
    def ok(self) -> bool:
        return not self.violators

    def as_dict(self) -> dict:
        return {"ok": self.ok, "max_error": self.max_error, "tol": self.tol,
                "violators": list(self.violators)}


def verify_unit_edges(s: SimplicialSurface, coords: np.ndarray, tol: float = UNIT_EDGE_TOL) -> UnitEdgeReport:
    """Largest deviation of an edge length from 1, and the edges beyond ``tol``."""
    coords = np.asarray(coords, float)
    if len(coords) != s.n_vertices:
        raise InvalidParams(f"{len(coords)} coordinates for {s.n_vertices} vertices")
    if not s.edges:
        return UnitEdgeReport(0.0, (), tol)
    e = np.array(s.edges)
    err = np.abs(np.linalg.norm(coords[e[:, 0]] - coords[e[:, 1]], axis=1) - 1.0)
    bad = tuple(int(i) for i in np.flatnonzero(err > tol))
    return UnitEdgeReport(float(err.max()), bad, tol)


def _match_points(mapped: np.ndarray, coords: np.ndarray, tol: float) -> list[int] | None:
    d = np.linalg.norm(mapped[:, None, :] - coords[None, :, :], axis=2)
    perm = d.argmin(axis=1)
    if np.any(d[np.arange(len(perm)), perm] > tol) or len(set(perm.tolist())) != len(perm):
        return None
    return perm.tolist()


def _is_surface_map(s: SimplicialSurface, perm: Sequence[int]) -> bool:
    triples = {frozenset(s.face_vertices(f)) for f in range(s.n_faces)}
    return all(frozenset(perm[v] for v in t) in triples for t in triples)


def embedding_symmetries(s: SimplicialSurface, coords: np.ndarray,
                         tol: float = SYMMETRY_TOL) -> AutResult:
    """Orthogonal maps that permute the vertex positions and the faces.

    Every symmetry fixes the centroid of the vertices. A base face is sent
    to every face in every vertex order; each candidate map is fixed by the
    images of two centred vertices and their cross product (with both
    signs, for proper and improper maps) and then checked on all vertices.
    Returns the induced vertex permutations.
    """
    coords = np.asarray(coords, float)
    X = coords - coords.mean(axis=0)
    degree = [len(es) for es in s.vertex_edges]
    triples = [s.face_vertices(f) for f in range(s.n_faces)]

    # a base face whose two centred vertices span a plane through the centre
    base = None
    for t in triples:
        for a, b, c in itertools.permutations(t):
            if np.linalg.norm(np.cross(X[a], X[b])) > 1e-6:
                base = (a, b, c)
                break
        if base:
            break
    if base is None:
        raise DegenerateGeometry("all faces are collinear with the centre")
    a, b, c = base
    A = np.column_stack([X[a], X[b], np.cross(X[a], X[b])])
    A_inv = np.linalg.inv(A)

    found: dict[tuple[int, ...], Permutation] = {}
    for t in triples:
        for a2, b2, c2 in itertools.permutations(t):
            if (degree[a2], degree[b2], degree[c2]) != (degree[a], degree[b], degree[c]):
                continue
            for sign in (1.0, -1.0):
                B = np.column_stack([X[a2], X[b2], sign * np.cross(X[a2], X[b2])])
                Q = B @ A_inv
                if not np.allclose(Q.T @ Q, np.eye(3), atol=tol * 10):
                    continue
                if np.linalg.norm(Q @ X[c] - X[c2]) > tol:
                    continue
                perm = _match_points(X @ Q.T, X, tol)
                if perm is None or not _is_surface_map(s, perm):
                    continue
                found.setdefault(tuple(perm), Permutation(tuple(perm)))
    elements = sorted(found.values(), key=lambda p: (p.is_identity() is False, p.array))
    gens = _minimal_generators(elements, s.n_vertices)
    orbits = _orbits(s.n_vertices, [g.array for g in gens])
    return AutResult(tuple(gens), len(elements), len(orbits), tuple(orbits))


def induced_permutation(s: SimplicialSurface, coords: np.ndarray, matrix: np.ndarray,
                        tol: float = SYMMETRY_TOL) -> Permutation | None:
    """Vertex permutation induced by ``matrix`` (about the origin), if any."""
    coords = np.asarray(coords, float)
    perm = _match_points(coords @ np.asarray(matrix).T, coords, tol)
    return None if perm is None else Permutation(tuple(perm))


# self-intersection

def _segment_hits_triangle(p, q, tri, eps=1e-9) -> bool:
    """Does the open segment pq cross the interior of triangle ``tri``?"""
    a, b, c = tri
    d = q - p
    e1, e2 = b - a, c - a
    h = np.cross(d, e2)
    det = np.dot(e1, h)
    if abs(det) < eps:
        return False  # parallel or coplanar: not a transversal crossing
    inv = 1.0 / det
    sv = p - a
    u = np.dot(sv, h) * inv
    if u <= eps or u >= 1 - eps:
        return False
    qv = np.cross(sv, e1)
    v = np.dot(d, qv) * inv
    if v <= eps or u + v >= 1 - eps:
        return False
    t = np.dot(e2, qv) * inv
    return eps < t < 1 - eps


def self_intersections(s: SimplicialSurface, coords: np.ndarray) -> list[tuple[int, int]]:
    """Pairs of faces that cross each other.

    Faces sharing an edge are skipped. For faces sharing one vertex only
    the edges away from that vertex are tested; disjoint faces are tested
    edge against triangle in both directions. Coplanar overlaps are not
    detected.
    """
    coords = np.asarray(coords, float)
    tris = [s.face_vertices(f) for f in range(s.n_faces)]
    pts = [coords[list(t)] for t in tris]
    lo = np.array([p.min(axis=0) for p in pts])
    hi = np.array([p.max(axis=0) for p in pts])
    out = []
    for f, g in itertools.combinations(range(len(tris)), 2):
        if np.any(lo[f] > hi[g] + 1e-9) or np.any(lo[g] > hi[f] + 1e-9):
            continue
        shared = set(tris[f]) & set(tris[g])
        if len(shared) >= 2:
            continue
        hit = False
        for x, y in ((f, g), (g, f)):
            for u, v in itertools.combinations(tris[x], 2):
                if u in shared or v in shared:
                    continue
                if _segment_hits_triangle(coords[u], coords[v], pts[y]):
                    hit = True
                    break
            if hit:
                break
        if hit:
            out.append((f, g))
    return out


# planar drawings

def planar_family_layout(kind: str, n: int) -> np.ndarray:
    """Closed-form straight-line drawing of the cyclic or dihedral graph
    family, indexed like the nodes of ``gamma_cn(n)`` / ``gamma_dn(n)``.

    With ``alpha = 2*pi/n``, ``v = (1,0)``, ``w1 = (cos a - 1, sin a)`` and
    ``w2 = (sin a, 1 - cos a)``, the nodes with index 1 are placed at fixed
    combinations of these vectors and the others by rotating by ``alpha``.
    """
    from .construct import gamma_cn, gamma_dn

    alpha = 2 * math.pi / n
    v = np.array([1.0, 0.0])
    w1 = np.array([math.cos(alpha) - 1, math.sin(alpha)])
    w2 = np.array([math.sin(alpha), 1 - math.cos(alpha)])
    if kind == "cyclic":
        g = gamma_cn(n)
        first = {"a": v + w1 / 2, "b": v + w1 / 4, "c": v + w1 / 2 + 2 * w2,
                 "d": v + w1 / 2 + 3 * w2, "e": v + 3 * w1 / 4, "f": v + w1 / 2 + w2}
    elif kind == "dihedral":
        g = gamma_dn(n)
        first = {"a": v + 3 * w1 / 4, "b": v + w1 / 4, "c": v + w1 / 2 + w2,
                 "d": v + w1 / 2 + 2 * w2}
    else:
        raise InvalidParams(f"unknown family {kind!r}; expected 'cyclic' or 'dihedral'")
    M = rotation(alpha)[:2, :2]
    out = np.zeros((g.n, 2))
    for idx, label in enumerate(g.nodes):
        letter, i = label[0], int(label[1:])
        out[idx] = np.linalg.matrix_power(M, i - 1) @ first[letter]
    return out


def _orient(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _segments_cross(p1, p2, q1, q2, eps=1e-12) -> bool:
    d1, d2 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    d3, d4 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
       ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)):
        return True

    def on_seg(a, b, c):  # c on segment ab, given collinear
        return (min(a[0], b[0]) - eps <= c[0] <= max(a[0], b[0]) + eps and
                min(a[1], b[1]) - eps <= c[1] <= max(a[1], b[1]) + eps)
    return ((abs(d1) <= eps and on_seg(q1, q2, p1)) or (abs(d2) <= eps and on_seg(q1, q2, p2)) or
            (abs(d3) <= eps and on_seg(p1, p2, q1)) or (abs(d4) <= eps and on_seg(p1, p2, q2)))


def edge_crossings(g: CubicGraph, coords: np.ndarray) -> list[tuple[int, int]]:
    """Pairs of edges (without a common end) whose segments meet."""
    coords = np.asarray(coords, float)
    out = []
    for i, j in itertools.combinations(range(len(g.edges)), 2):
        (a, b), (c, d) = g.edges[i], g.edges[j]
        if {a, b} & {c, d}:
            continue
        if _segments_cross(coords[a], coords[b], coords[c], coords[d]):
            out.append((i, j))
    return out


def tutte_embedding(g: CubicGraph, outer: Sequence[int], polygon: Sequence[Sequence[float]]) -> np.ndarray:
    """Fix ``outer`` nodes at ``polygon`` and put every other node at the
    mean of its neighbours (parallel edges count with multiplicity)."""
    outer = list(outer)
    if len(outer) != len(polygon):
        raise InvalidParams(f"{len(outer)} outer nodes but {len(polygon)} polygon points")
    if len(set(outer)) != len(outer) or any(not 0 <= v < g.n for v in outer):
        raise InvalidParams("outer nodes must be distinct node indices")
    pos = np.zeros((g.n, 2))
    pos[outer] = np.asarray(polygon, float)
    inner = [v for v in range(g.n) if v not in set(outer)]
    if not inner:
        return pos
    where = {v: i for i, v in enumerate(inner)}
    L = np.zeros((len(inner), len(inner)))
    rhs = np.zeros((len(inner), 2))
    for v in inner:
        i = where[v]
        for u in g.adjacency[v]:
            L[i, i] += 1
            if u in where:
                L[i, where[u]] -= 1
            else:
                rhs[i] += pos[u]
    try:
        sol = np.linalg.solve(L, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(f"barycentre system is singular: {exc}") from exc
    if not np.all(np.isfinite(sol)) or np.abs(L @ sol - rhs).max() > 1e-8:
        raise SingularSystem("barycentre system has no accurate solution")
    pos[inner] = sol
    return pos


def barycentre_residual(g: CubicGraph, coords: np.ndarray, outer: Sequence[int]) -> float:
    """Largest distance from an inner node to the mean of its neighbours."""
    coords = np.asarray(coords, float)
    fixed = set(outer)
    worst = 0.0
    for v in range(g.n):
        if v in fixed or not g.adjacency[v]:
            continue
        mean = coords[list(g.adjacency[v])].mean(axis=0)
        worst = max(worst, float(np.linalg.norm(coords[v] - mean)))
    return worst


# K5 obstruction

@dataclass(frozen=True)
class Obstruction:
    obstructed: bool
    witness: tuple[int, ...] | None

    def as_dict(self) -> dict:
        return {"obstructed": self.obstructed,
                "witness": list(self.witness) if self.witness else None}


def k5_obstruction(s: SimplicialSurface) -> Obstruction:
    """Does the vertex graph contain five mutually adjacent vertices?

    Such a clique cannot be realised with unit edges: the last two
    vertices would both be unit distance from a unit triangle yet distinct,
    putting them ``2*sqrt(2/3)`` apart instead of 1.
    """
    if not is_vertex_faithful(s):
        raise NotVertexFaithful("the clique test needs a vertex-faithful surface")
    g = vertex_graph(s)
    nbrs = [set(a) for a in g.adjacency]
    order = sorted(range(g.n), key=lambda v: len(nbrs[v]))

    def extend(clique: list[int], cands: set[int]):
        if len(clique) == 5:
            return tuple(sorted(clique))
        for u in sorted(cands):
            if len(nbrs[u]) < 4:
                continue
            found = extend(clique + [u], {w for w in cands & nbrs[u] if w > u})
            if found:
                return found
        return None

    for v in order:
        if len(nbrs[v]) < 4:
            continue
        found = extend([v], {w for w in nbrs[v] if w > v})
        if found:
            return Obstruction(True, found)
    return Obstruction(False, None)
