"""Finite undirected multigraphs, with the checks needed for cubic ones.

Nodes carry string labels but are addressed by their index; edges are
index pairs and may repeat (parallel edges), loops are rejected.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotCubic, NotDegreeThree, OverlappingTriangles, SelfLoop

COLOURS = ("r", "g", "b")


@dataclass(frozen=True)
class CubicGraph:
    """A multigraph on labelled nodes.

    Most functions here expect every node to have degree three, but the
    class itself also holds non-cubic graphs (vertex graphs of surfaces).
    """

    nodes: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        nodes = tuple(str(x) for x in self.nodes)
        n = len(nodes)
        edges = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) refers to a missing node")
            if u == v:
                raise SelfLoop(f"loop at node {nodes[u]!r}")
            edges.append((u, v))
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", tuple(edges))

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at each node, in edge order."""
        inc = [[] for _ in self.nodes]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbours of each node, repeated for parallel edges."""
        return tuple(tuple(self.other(e, v) for e in inc)
                     for v, inc in enumerate(self.incidence))

    @cached_property
    def edge_multiset(self) -> Counter:
        return Counter(frozenset(e) if e[0] != e[1] else e for e in self.edges)

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.nodes)}

    def index(self, label: str) -> int:
        return self.label_index[label]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def is_cubic(self) -> bool:
        return all(len(i) == 3 for i in self.incidence)

    def has_parallel_edges(self) -> bool:
        return any(c > 1 for c in self.edge_multiset.values())

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self.incidence[u] if self.other(e, u) == v]

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        """Does the node map ``i -> perm[i]`` preserve the edge multiset?"""
        if sorted(perm) != list(range(self.n)):
            return False
        mapped = Counter(frozenset((perm[u], perm[v])) for u, v in self.edges)
        return mapped == self.edge_multiset

    def relabel(self, labels: Sequence[str]) -> "CubicGraph":
        return CubicGraph(tuple(labels), self.edges)


def from_edge_list(labels: Sequence[str], pairs: Iterable[tuple[str, str]]) -> CubicGraph:
    idx = {lab: i for i, lab in enumerate(labels)}
    return CubicGraph(tuple(labels), tuple((idx[a], idx[b]) for a, b in pairs))


def from_quadratic_form(monomials: Iterable[Sequence[str]]) -> CubicGraph:
    """One node per variable, one edge per monomial ``x*y``.

    Nodes are numbered in order of first appearance.
    """
    labels: dict[str, int] = {}
    edges = []
    for mono in monomials:
        a, b = mono
        if a == b:
            raise SelfLoop(f"monomial {a}*{b} is a square")
        for x in (a, b):
            if x not in labels:
                labels[x] = len(labels)
        edges.append((labels[a], labels[b]))
    return CubicGraph(tuple(labels), tuple(edges))


def parse_quadratic_form(text: str) -> list[tuple[str, str]]:
    """Split ``"a*b + b*c + c*a"`` into monomials."""
    out = []
    for term in text.split("+"):
        term = term.strip()
        if not term:
            continue
        parts = [p.strip() for p in term.split("*")]
        if len(parts) != 2 or not all(parts):
            raise ValueError(f"not a quadratic monomial: {term!r}")
        out.append((parts[0], parts[1]))
    return out


# structure

@dataclass(frozen=True)
class StructuralReport:
    is_cubic: bool
    is_connected: bool
    is_bridgeless: bool
    girth: float  # math.inf for forests

    def as_dict(self) -> dict:
        return {"is_cubic": self.is_cubic, "is_connected": self.is_connected,
                "is_bridgeless": self.is_bridgeless,
                "girth": None if math.isinf(self.girth) else int(self.girth)}


def components(g: CubicGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(comp)
    return comps


def bridges(g: CubicGraph) -> list[int]:
    """Edge ids whose removal disconnects their component."""
    disc = [-1] * g.n
    low = [0] * g.n
    out = []
    t = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        # stack of (node, edge used to enter, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            inc = g.incidence[v]
            if i < len(inc):
                stack[-1] = (v, pe, i + 1)
                e = inc[i]
                if e == pe:
                    continue
                u = g.other(e, v)
                if disc[u] < 0:
                    disc[u] = low[u] = t
                    t += 1
                    stack.append((u, e, 0))
                else:
                    low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        out.append(pe)
    return sorted(out)


def girth(g: CubicGraph) -> float:
    if g.has_parallel_edges():
        return 2
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent_edge = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for e in g.incidence[v]:
                if e == parent_edge[v]:
                    continue
                u = g.other(e, v)
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent_edge[u] = e
                    queue.append(u)
                else:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def structural_report(g: CubicGraph) -> StructuralReport:
    return StructuralReport(
        is_cubic=g.is_cubic(),
        is_connected=g.n > 0 and len(components(g)) == 1,
        is_bridgeless=not bridges(g),
        girth=girth(g),
    )


def _distance_avoiding(g: CubicGraph, src: int, targets: set[int], banned: int) -> dict[int, int]:
    """BFS distances from ``src`` to ``targets`` in ``g`` minus ``banned``."""
    found = {}
    if src in targets:
        found[src] = 0
    dist = {src: 0}
    queue = deque([src])
    while queue and len(found) < len(targets):
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u == banned or u in dist:
                continue
            dist[u] = dist[v] + 1
            if u in targets:
                found[u] = dist[u]
            queue.append(u)
    return found


def cycle_triplet(g: CubicGraph, v: int) -> tuple:
    """Sorted lengths of the shortest cycles through each pair of edges at ``v``.

    A pair with no common cycle contributes ``math.inf``.
    """
    inc = g.incidence[v]
    if len(inc) != 3:
        raise NotDegreeThree(f"node {g.nodes[v]!r} has degree {len(inc)}")
    ends = [g.other(e, v) for e in inc]
    lengths = []
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = ends[i], ends[j]
            if a == b:
                lengths.append(2)
                continue
            d = _distance_avoiding(g, a, {b}, v)
            lengths.append(d[b] + 2 if b in d else math.inf)
    return tuple(sorted(lengths))


def cycle_triplets(g: CubicGraph) -> list[tuple]:
    return [cycle_triplet(g, v) for v in range(g.n)]


# edge colourings

@dataclass(frozen=True)
class EdgeColouring:
    """One of ``"r"``, ``"g"``, ``"b"`` per edge id."""

    colours: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(self.colours))
        bad = set(self.colours) - set(COLOURS)
        if bad:
            raise ValueError(f"unknown colours {sorted(bad)}")

    def is_proper(self, g: CubicGraph) -> bool:
        if len(self.colours) != g.m:
            return False
        for inc in g.incidence:
            cols = [self.colours[e] for e in inc]
            if len(set(cols)) != len(cols):
                return False
        return True

    def edges_of(self, colour: str) -> list[int]:
        return [e for e, c in enumerate(self.colours) if c == colour]


def bfs_edge_order(g: CubicGraph, root: int = 0) -> list[int]:
    order, seen_e = [], set()
    seen_v = [False] * g.n
    for start in [root] + list(range(g.n)):
        if seen_v[start]:
            continue
        seen_v[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for e in g.incidence[v]:
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                u = g.other(e, v)
                if not seen_v[u]:
                    seen_v[u] = True
                    queue.append(u)
    return order


def find_tait_colouring(g: CubicGraph) -> EdgeColouring | None:
    """First proper 3-edge-colouring in a fixed search order, or None.

    Edges are coloured in breadth-first order from node 0, trying r, g, b
    in turn. Forward checking only discards branches that cannot be
    completed, so the colouring returned is the same one plain
    backtracking would reach first.
    """
    if not g.is_cubic():
        raise NotCubic("Tait colourings need a cubic graph")
    order = bfs_edge_order(g)
    m = len(order)
    used = [0] * g.n  # bitmask of colours present at each node
    colour = [-1] * g.m

    def free(e: int) -> int:
        a, b = g.edges[e]
        return 7 & ~(used[a] | used[b])

    def assign(e: int, c: int) -> bool:
        a, b = g.edges[e]
        used[a] |= 1 << c
        used[b] |= 1 << c
        colour[e] = c
        for x in (a, b):
            for f in g.incidence[x]:
                if colour[f] < 0 and not free(f):
                    return False
        return True

    def unassign(e: int, c: int):
        a, b = g.edges[e]
        used[a] &= ~(1 << c)
        used[b] &= ~(1 << c)
        colour[e] = -1

    pos = 0
    tried = [-1] * m  # last colour tried at each depth
    while 0 <= pos < m:
        e = order[pos]
        if colour[e] >= 0:
            unassign(e, colour[e])
        c = tried[pos] + 1
        while c < 3 and not free(e) >> c & 1:
            c += 1
        if c == 3:
            tried[pos] = -1
            pos -= 1
            continue
        tried[pos] = c
        if assign(e, c):
            pos += 1
    if pos < 0:
        return None
    return EdgeColouring(tuple(COLOURS[c] for c in colour))


# triangle contraction

def triangles(g: CubicGraph) -> list[tuple[int, int, int]]:
    found = set()
    for u, v in g.edges:
        common = set(g.adjacency[u]) & set(g.adjacency[v])
        for w in common:
            found.add(tuple(sorted((u, v, w))))
    return sorted(found)


def contract_three_cycles(g: CubicGraph) -> CubicGraph:
    """Collapse every triangle to a single node.

    The new node takes the position of the triangle's first member and the
    labels joined with ``+``; triangles must be pairwise node-disjoint.
    """
    tris = triangles(g)
    owner: dict[int, int] = {}
    for t, tri in enumerate(tris):
        for v in tri:
            if v in owner:
                raise OverlappingTriangles(
                    f"node {g.nodes[v]!r} lies on more than one triangle")
            owner[v] = t
    new_index: dict[int, int] = {}
    labels = []
    tri_node: dict[int, int] = {}
    for v in range(g.n):
        if v in owner:
            t = owner[v]
            if t not in tri_node:
                tri_node[t] = len(labels)
                labels.append("+".join(g.nodes[x] for x in tris[t]))
            new_index[v] = tri_node[t]
        else:
            new_index[v] = len(labels)
            labels.append(g.nodes[v])
    edges = []
    for u, v in g.edges:
        if u in owner and v in owner and owner[u] == owner[v]:
            continue
        edges.append((new_index[u], new_index[v]))
    return CubicGraph(tuple(labels), tuple(edges))
