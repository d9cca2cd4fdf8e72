"""Simplicial surfaces stored as raw incidence data.

A surface has vertices ``0..n_vertices-1``, edges given by their two
vertices, and faces given by their three edges. Nothing here assumes the
surface is vertex-faithful: two edges may join the same pair of vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .autgrp import AutResult, _orbits, automorphism_group
from .cdc import CycleDoubleCover, _canonical, verify_cdc
from .cubicgraph import CubicGraph
from .errors import InvalidCover
from .permgroup import PermGroup, Permutation


class VertexCounter(Counter):
    """Multiset of vertex degrees, printed as ``v3^4 v5^2 v10``."""

    def __str__(self) -> str:
        return " ".join(f"v{d}^{m}" if m > 1 else f"v{d}"
                        for d, m in sorted(self.items()) if m)

    def as_dict(self) -> dict[str, int]:
        return {str(d): m for d, m in sorted(self.items()) if m}


@dataclass(frozen=True)
class SimplicialSurface:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]
    vertex_labels: tuple[str, ...] | None = field(default=None, compare=False)
    face_labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(int(v) for v in e) for e in self.edges))
        object.__setattr__(self, "faces", tuple(tuple(int(e) for e in f) for f in self.faces))

    @classmethod
    def from_vertex_faces(cls, faces: Iterable[Sequence[Hashable]]) -> "SimplicialSurface":
        """Vertex-faithful surface from vertex triples.

        Vertices are numbered in sorted order of their names (first
        appearance if names do not sort); edges in order of first appearance.
        """
        faces = [tuple(f) for f in faces]
        names = {v for f in faces for v in f}
        try:
            order = sorted(names)
        except TypeError:
            order = list(dict.fromkeys(v for f in faces for v in f))
        vid = {v: i for i, v in enumerate(order)}
        edge_id: dict[frozenset, int] = {}
        edges = []
        face_edges = []
        for f in faces:
            ids = []
            for a, b in ((f[0], f[1]), (f[1], f[2]), (f[0], f[2])):
                key = frozenset((vid[a], vid[b]))
                if key not in edge_id:
                    edge_id[key] = len(edges)
                    edges.append(tuple(sorted(key)))
                ids.append(edge_id[key])
            face_edges.append(tuple(ids))
        return cls(len(order), tuple(edges), tuple(face_edges),
                   vertex_labels=tuple(str(v) for v in order))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def face_vertices(self, f: int) -> tuple[int, ...]:
        return tuple(sorted({v for e in self.faces[f] for v in self.edges[e]}))

    @cached_property
    def edge_faces(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in self.edges]
        for f, es in enumerate(self.faces):
            for e in es:
                out[e].append(f)
        return tuple(tuple(x) for x in out)

    @cached_property
    def vertex_edges(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n_vertices)]
        for e, (a, b) in enumerate(self.edges):
            out[a].append(e)
            if b != a:
                out[b].append(e)
        return tuple(tuple(x) for x in out)

    @cached_property
    def vertex_faces(self) -> tuple[tuple[int, ...], ...]:
        out = [set() for _ in range(self.n_vertices)]
        for f, es in enumerate(self.faces):
            for e in es:
                for v in self.edges[e]:
                    out[v].add(f)
        return tuple(tuple(sorted(x)) for x in out)

    def vertex_label(self, v: int) -> str:
        return self.vertex_labels[v] if self.vertex_labels else str(v + 1)

    def face_label(self, f: int) -> str:
        return self.face_labels[f] if self.face_labels else str(f + 1)

    def vertex_triples(self) -> list[tuple[int, ...]]:
        return [self.face_vertices(f) for f in range(self.n_faces)]

    def umbrella(self, v: int) -> tuple[int, ...]:
        """Faces around ``v`` in cyclic order (assumes a valid surface)."""
        edges_here = set(self.vertex_edges[v])
        faces = self.vertex_faces[v]
        if not faces:
            return ()
        start = faces[0]
        walk = [start]
        prev_edge = None
        cur = start
        while True:
            nxt_edge = next(e for e in self.faces[cur] if e in edges_here and e != prev_edge)
            others = [f for f in self.edge_faces[nxt_edge] if f != cur]
            if not others:
                break
            cur = others[0]
            if cur == start:
                break
            walk.append(cur)
            prev_edge = nxt_edge
            if len(walk) > len(faces):
                break
        return tuple(walk)


@dataclass(frozen=True)
class Violation:
    condition: int
    cell: str
    message: str


@dataclass(frozen=True)
class SurfaceReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def failed(self, condition: int) -> bool:
        return any(v.condition == condition for v in self.violations)

    def as_dict(self) -> dict:
        return {"ok": self.ok, "conditions": {
            str(c): not self.failed(c) for c in (1, 2, 3, 4)},
            "violations": [{"condition": v.condition, "cell": v.cell, "message": v.message}
                           for v in self.violations]}


def validate_surface(s: SimplicialSurface) -> SurfaceReport:
    """Check the four defining conditions and list every failure.

    1. every edge has two distinct vertices;
    2. every face has three edges and three vertices, each vertex on two
       of the face's edges;
    3. every edge lies in exactly two faces;
    4. the faces around each vertex form a single cycle (umbrella).
    """
    out: list[Violation] = []
    for e, (a, b) in enumerate(s.edges):
        if not (0 <= a < s.n_vertices and 0 <= b < s.n_vertices):
            out.append(Violation(1, f"edge {e}", "refers to a missing vertex"))
        elif a == b:
            out.append(Violation(1, f"edge {e}", "both ends are the same vertex"))
    for f, es in enumerate(s.faces):
        if len(es) != 3 or len(set(es)) != 3:
            out.append(Violation(2, f"face {f}", f"has {len(set(es))} distinct edges, not 3"))
            continue
        if any(not 0 <= e < s.n_edges for e in es):
            out.append(Violation(2, f"face {f}", "refers to a missing edge"))
            continue
        counts = Counter(v for e in es for v in s.edges[e])
        if len(counts) != 3 or set(counts.values()) != {2}:
            out.append(Violation(2, f"face {f}", "edges do not close up a triangle"))
    for e, fs in enumerate(s.edge_faces):
        if len(fs) != 2:
            out.append(Violation(3, f"edge {e}", f"lies in {len(fs)} faces"))
    bad_edges = {e for e, fs in enumerate(s.edge_faces) if len(fs) != 2}
    for v in range(s.n_vertices):
        faces = s.vertex_faces[v]
        if not faces:
            out.append(Violation(4, f"vertex {v}", "lies in no face"))
            continue
        if any(e in bad_edges for e in s.vertex_edges[v]):
            out.append(Violation(4, f"vertex {v}", "umbrella is not closed"))
            continue
        # faces around v, joined through the edges at v, must form one cycle
        edges_here = set(s.vertex_edges[v])
        adj = {f: [] for f in faces}
        for e in edges_here:
            fs = s.edge_faces[e]
            adj[fs[0]].append(fs[1])
            adj[fs[1]].append(fs[0])
        if any(len(x) != 2 for x in adj.values()):
            out.append(Violation(4, f"vertex {v}", "faces around it do not form a cycle"))
            continue
        seen = {faces[0]}
        stack = [faces[0]]
        while stack:
            for g in adj[stack.pop()]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        if len(seen) != len(faces):
            out.append(Violation(4, f"vertex {v}", "faces around it split into several cycles"))
    return SurfaceReport(tuple(out))


def euler_characteristic(s: SimplicialSurface) -> int:
    return s.n_vertices - s.n_edges + s.n_faces


def vertex_counter(s: SimplicialSurface) -> VertexCounter:
    """Number of vertices of each degree (edges at the vertex)."""
    return VertexCounter(len(es) for es in s.vertex_edges)


def is_vertex_faithful(s: SimplicialSurface) -> bool:
    """Is every edge and face determined by its set of vertices?"""
    edge_sets = [frozenset(e) for e in s.edges]
    if any(len(x) != 2 for x in edge_sets) or len(set(edge_sets)) != len(edge_sets):
        return False
    face_sets = [frozenset(s.face_vertices(f)) for f in range(s.n_faces)]
    return all(len(x) == 3 for x in face_sets) and len(set(face_sets)) == len(face_sets)


def face_graph(s: SimplicialSurface) -> CubicGraph:
    """Faces as nodes, joined once per shared edge."""
    edges = []
    for e, fs in enumerate(s.edge_faces):
        if len(fs) != 2:
            raise InvalidCover(f"edge {e} lies in {len(fs)} faces")
        edges.append((fs[0], fs[1]))
    labels = tuple(s.face_label(f) for f in range(s.n_faces))
    return CubicGraph(labels, tuple(edges))


def vertex_graph(s: SimplicialSurface) -> CubicGraph:
    """Vertices as nodes, the surface's edges as edges."""
    labels = tuple(s.vertex_label(v) for v in range(s.n_vertices))
    return CubicGraph(labels, s.edges)


def surface_from_cdc(g: CubicGraph, cover: CycleDoubleCover, strict: bool = True) -> SimplicialSurface:
    """Cycles become vertices, graph edges become edges, nodes become faces.

    Edge ``e`` joins the two cycles that traverse it; node ``v`` is the face
    bounded by its three incident edges. With ``strict`` an invalid cover
    raises :class:`InvalidCover`; otherwise the (possibly broken) incidence
    is returned for inspection with :func:`validate_surface`.
    """
    report = verify_cdc(g, cover)
    if strict and not (report.valid and report.simple):
        raise InvalidCover("; ".join(report.violations[:3]) or "not a cycle double cover")
    # hand traversals of each node pair to its parallel edges in order
    slots: dict[tuple[int, int], list[int]] = {}
    for e, (u, v) in enumerate(g.edges):
        slots.setdefault((min(u, v), max(u, v)), []).append(e)
    holders: list[list[int]] = [[] for _ in g.edges]
    fill: Counter = Counter()
    for ci, c in enumerate(cover.cycles):
        for i in range(len(c)):
            a, b = c[i], c[(i + 1) % len(c)]
            key = (min(a, b), max(a, b))
            options = slots.get(key, [])
            if not options:
                continue
            e = options[min(fill[key] // 2, len(options) - 1)]
            fill[key] += 1
            holders[e].append(ci)
    edges = []
    for e, hs in enumerate(holders):
        if len(hs) != 2:
            if strict:
                raise InvalidCover(f"edge {e} lies on {len(hs)} cycles")
            hs = (hs + hs + [0, 0])[:2]
        edges.append((hs[0], hs[1]))
    faces = tuple(tuple(g.incidence[v]) for v in range(g.n))
    labels = tuple(f"c{i + 1}" for i in range(len(cover.cycles)))
    return SimplicialSurface(len(cover.cycles), tuple(edges), faces,
                             vertex_labels=labels, face_labels=g.nodes)


def umbrella_cover(s: SimplicialSurface) -> CycleDoubleCover:
    """The umbrellas as a cycle double cover of the face graph."""
    return CycleDoubleCover(tuple(s.umbrella(v) for v in range(s.n_vertices)))


def _minimal_generators(elements: list[Permutation], degree: int) -> list[Permutation]:
    gens: list[Permutation] = []
    span = {Permutation.identity(degree).array}
    for p in elements:
        if p.array not in span:
            gens.append(p)
            span = {q.array for q in PermGroup(gens, degree).elements}
            if len(span) == len(elements):
                break
    return gens


def surface_automorphisms(s: SimplicialSurface) -> AutResult:
    """Automorphisms of the surface, acting on faces.

    Found as the face-graph automorphisms that map every umbrella onto an
    umbrella.
    """
    fg = face_graph(s)
    aut = automorphism_group(fg)
    group = PermGroup(aut.generators, fg.n)
    keys = {_canonical(s.umbrella(v)) for v in range(s.n_vertices)}
    umbrellas = [s.umbrella(v) for v in range(s.n_vertices)]
    keep = []
    for p in group.elements:
        arr = p.array
        if all(_canonical([arr[f] for f in u]) in keys for u in umbrellas):
            keep.append(p)
    gens = _minimal_generators(keep, fg.n)
    orbits = _orbits(fg.n, [g.array for g in gens])
    return AutResult(tuple(gens), len(keep), len(orbits), tuple(orbits))


def vertex_action(s: SimplicialSurface, face_perm: Permutation) -> Permutation:
    """The vertex permutation induced by a face automorphism."""
    where = {_canonical(s.umbrella(v)): v for v in range(s.n_vertices)}
    arr = face_perm.array
    return Permutation(tuple(where[_canonical([arr[f] for f in s.umbrella(v)])]
                             for v in range(s.n_vertices)))


# predicted vertex counters

def predicted_vertex_counter_frucht(group: PermGroup, gens: Sequence[Permutation]) -> VertexCounter:
    """Vertex degrees of the surface from the built-in Frucht colouring.

    Two generators use the simplified graph: ``v6^|G|``, ``v_{6|g1g2|}``,
    ``v_{4|g1|}`` and ``v_{2|g2|}`` (exponents ``|G|/order``). With n >= 3
    generators the modified graph gives ``v_{2n+6}^|G|``,
    ``v_{(2n+6)|g1...gn|}``, ``v_{8|g1|}`` and ``v_{2|gj|}`` for j >= 2.
    """
    G = group.order
    n = len(gens)
    prod = gens[0]
    for x in gens[1:]:
        prod = prod * x
    c = VertexCounter()
    if n == 2:
        g1, g2 = gens
        c[6] += G
        c[6 * prod.order()] += G // prod.order()
        c[4 * g1.order()] += G // g1.order()
        c[2 * g2.order()] += G // g2.order()
        return c
    if n < 2:
        raise ValueError("need at least two generators")
    c[2 * n + 6] += G
    c[(2 * n + 6) * prod.order()] += G // prod.order()
    c[8 * gens[0].order()] += G // gens[0].order()
    for x in gens[1:]:
        c[2 * x.order()] += G // x.order()
    return c


def predicted_vertex_counter_faithful(group: PermGroup, gens: Sequence[Permutation]) -> VertexCounter:
    """Vertex degrees for the vertex-faithful Frucht covers."""
    G = group.order
    n = len(gens)
    prod = gens[0]
    for x in gens[1:]:
        prod = prod * x
    c = VertexCounter()
    if n == 2:
        g1, g2 = gens
        c[3] += G
        c[5] += G
        c[2 * g2.order()] += G // g2.order()
        c[3 * g1.order()] += G // g1.order()
        c[5 * prod.order()] += G // prod.order()
        return c
    c[3] += G
    c[5] += G
    c[4] += G
    c[2 * n + 2] += G
    c[3 * gens[0].order()] += G // gens[0].order()
    for x in gens[1:]:
        c[2 * x.order()] += G // x.order()
    c[(2 * n + 3) * prod.order()] += G // prod.order()
    return c


def orient_faces(s: SimplicialSurface) -> tuple[list[tuple[int, int, int]], bool]:
    """Vertex triples with a coherent orientation, if the surface has one.

    Faces are oriented one connected piece at a time by spreading across
    edges; each edge must then be traversed in opposite directions by its
    two faces. Returns the triples and whether this succeeded everywhere.
    """
    def cyclic(f):
        a, b, c = s.faces[f]
        ea, eb = s.edges[a], s.edges[b]
        shared = (set(ea) & set(eb)).pop()
        return (ea[0] if ea[1] == shared else ea[1], shared, eb[0] if eb[1] == shared else eb[1])

    def direction(tri, e):
        u, v = s.edges[e]
        for i in range(3):
            if (tri[i], tri[(i + 1) % 3]) == (u, v):
                return 1
            if (tri[i], tri[(i + 1) % 3]) == (v, u):
                return -1
        raise InvalidCover(f"edge {e} is not a side of its face")

    out: list[tuple[int, int, int] | None] = [None] * s.n_faces
    orientable = True
    for root in range(s.n_faces):
        if out[root] is not None:
            continue
        out[root] = cyclic(root)
        stack = [root]
        while stack:
            f = stack.pop()
            for e in s.faces[f]:
                for g in s.edge_faces[e]:
                    if g == f:
                        continue
                    want = -direction(out[f], e)
                    if out[g] is None:
                        tri = cyclic(g)
                        out[g] = tri if direction(tri, e) == want else tri[::-1]
                        stack.append(g)
                    elif direction(out[g], e) != want:
                        orientable = False
    return [t for t in out], orientable
