"""Independent reference computations used to check the library.

Nothing here imports symsurf's algorithms: groups are closed by naive
repeated multiplication, automorphisms are found by trying every
permutation, isomorphism is decided by networkx.
"""

from __future__ import annotations

import itertools
from collections import Counter

import networkx as nx
import numpy as np


def compose(g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
    """(g*h)(x) = g(h(x)) on 0-based image tuples."""
    return tuple(g[h[x]] for x in range(len(h)))


def closure(gens: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    n = len(gens[0])
    out = {tuple(range(n))}
    while True:
        new = {compose(a, b) for a in out for b in gens} | out
        if new == out:
            return out
        out = new


def brute_force_automorphisms(n: int, edges) -> list[tuple[int, ...]]:
    """All node permutations preserving the edge multiset."""
    A = np.zeros((n, n), dtype=int)
    for u, v in edges:
        A[u, v] += 1
        A[v, u] += 1
    P = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
    # p is an automorphism iff A[p[u], p[v]] == A[u, v] for all u, v
    keep = (A[P[:, :, None], P[:, None, :]] == A).all(axis=(1, 2))
    return [tuple(int(x) for x in p) for p in P[keep]]


def to_networkx(graph) -> nx.MultiGraph:
    G = nx.MultiGraph()
    G.add_nodes_from(range(graph.n))
    G.add_edges_from(graph.edges)
    return G


def isomorphic(g1, g2) -> bool:
    return nx.is_isomorphic(to_networkx(g1), to_networkx(g2))


def _spectrum_key(n: int, edges) -> tuple:
    A = np.zeros((n, n))
    for u, v in edges:
        A[u, v] += 1
        A[v, u] += 1
    return tuple(np.round(np.linalg.eigvalsh(A), 6))


def _cubic_graphs(n: int, max_multiplicity: int) -> list[list[tuple[int, int]]]:
    """Every loopless 3-regular graph on ``n`` nodes with at most
    ``max_multiplicity`` parallel edges per pair, up to isomorphism
    (disconnected ones included), by exhaustive labelled search."""
    found: list[nx.MultiGraph] = []
    buckets: dict[tuple, list[int]] = {}

    def add(edges):
        G = nx.MultiGraph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        key = _spectrum_key(n, edges)
        for i in buckets.get(key, []):
            if nx.is_isomorphic(found[i], G):
                return
        buckets.setdefault(key, []).append(len(found))
        found.append(G)

    deg = [0] * n
    edges: list[tuple[int, int]] = []

    def rec(v):
        # complete the first node that still lacks neighbours, choosing its
        # missing neighbours among later nodes in one step
        while v < n and deg[v] == 3:
            v += 1
        if v == n:
            add(list(edges))
            return
        need = 3 - deg[v]
        later = [u for u in range(v + 1, n) if deg[u] < 3]
        for targets in itertools.combinations_with_replacement(later, need):
            c = Counter(targets)
            if any(c[u] > max_multiplicity or deg[u] + c[u] > 3 for u in c):
                continue
            if any(edges.count((v, u)) + c[u] > max_multiplicity for u in c):
                continue
            # untouched nodes are interchangeable: only use a prefix of them
            fresh = [u for u in later if deg[u] == 0]
            used = [u for u in fresh if c[u]]
            if used != fresh[:len(used)]:
                continue
            for u in targets:
                edges.append((v, u))
                deg[u] += 1
            deg[v] = 3
            rec(v + 1)
            deg[v] = 3 - need
            for u in targets:
                edges.pop()
                deg[u] -= 1

    rec(0)
    return [sorted(tuple(sorted(e)) for e in G.edges()) for G in found]


def simple_cubic_graphs(n: int) -> list[list[tuple[int, int]]]:
    """Every simple 3-regular graph on ``n`` nodes up to isomorphism."""
    return _cubic_graphs(n, 1)


def cubic_multigraphs(n: int) -> list[list[tuple[int, int]]]:
    """Every loopless 3-regular multigraph on ``n`` nodes up to isomorphism,
    simple graphs included."""
    return _cubic_graphs(n, 3)


# small cubic multigraphs (loopless) that the simple enumeration misses
MULTIGRAPHS = {
    "theta": (2, [(0, 1), (0, 1), (0, 1)]),
    "double_square": (4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]),
    "double_k4_minus_edge": (6, [(0, 1), (0, 1), (0, 2), (1, 3), (2, 4), (2, 5),
                                 (3, 4), (3, 5), (4, 5)]),
    "two_theta_chain": (8, [(0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 5),
                            (4, 5), (4, 6), (5, 7), (6, 7), (6, 7)]),
}


def edge_count(cycles, edges) -> Counter:
    """How often each node pair is traversed by the cycles."""
    c = Counter()
    for cyc in cycles:
        for i in range(len(cyc)):
            c[frozenset((cyc[i], cyc[(i + 1) % len(cyc)]))] += 1
    return c


def regular_tetrahedron() -> np.ndarray:
    return np.array([[0, 0, 0], [1, 0, 0], [0.5, np.sqrt(3) / 2, 0],
                     [0.5, np.sqrt(3) / 6, np.sqrt(2.0 / 3.0)]])


def count_automorphisms_by_extension(n: int, edges) -> int:
    """Automorphism count of a connected simple graph by plain backtracking:
    nodes are mapped in breadth-first order, each to a neighbour of its
    parent's image, checking adjacency with every node already mapped.
    Candidate images must agree in their numbers of closed walks of
    length up to 12, which any automorphism preserves."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    A = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        A[v, list(adj[v])] = 1
    walks, M = [], np.eye(n, dtype=np.int64)
    for _ in range(12):
        M = M @ A
        walks.append(np.diag(M).copy())
    sig = [tuple(int(w[v]) for w in walks) for v in range(n)]
    order, parent, seen = [0], {0: None}, {0}
    for v in order:
        for u in sorted(adj[v]):
            if u not in seen:
                seen.add(u)
                parent[u] = v
                order.append(u)
    if len(order) != n:
        raise ValueError("graph is not connected")
    rank = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in adj[v] if rank[u] < i] for i, v in enumerate(order)]
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return 1
        v = order[i]
        cands = range(n) if parent[v] is None else adj[image[parent[v]]]
        total = 0
        for w in cands:
            if used[w] or sig[w] != sig[v]:
                continue
            if any(image[u] not in adj[w] for u in earlier[i]):
                continue
            image[v], used[w] = w, True
            total += extend(i + 1)
            image[v], used[w] = -1, False
        return total

    import sys
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))
    return extend(0)
