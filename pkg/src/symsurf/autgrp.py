"""Automorphism groups of cubic graphs by individualisation and refinement.

The search follows the usual scheme: the initial colouring (degree plus
cycle triplet) is refined to an equitable ordered partition, one vertex of
the first smallest non-singleton cell is individualised, and so on until
the partition is discrete. This fixes a first leaf. Working upwards from
the deepest level, every sibling of the first path that is not already in
the known orbit is explored until a leaf equivalent to the first one is
found; each such leaf gives a generator. The group order is the product of
the orbit lengths met at each level.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .cubicgraph import CubicGraph, cycle_triplets
from .errors import BudgetExceeded
from .permgroup import PermGroup, Permutation, budget

DEFAULT_NODE_CAP = 1000


@dataclass(frozen=True)
class AutResult:
    """Generators (permutations of node indices), order and orbit count."""

    generators: tuple[Permutation, ...]
    order: int
    orbit_count: int
    orbits: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def group(self, degree: int) -> PermGroup:
        return PermGroup(self.generators, degree)


class _Partition:
    """Ordered partition of ``range(n)`` stored as a vertex list ``lab``,
    the start position of each vertex's cell and the length of each cell
    keyed by start position."""

    __slots__ = ("lab", "start", "length")

    def __init__(self, lab, start, length):
        self.lab = lab
        self.start = start
        self.length = length

    def copy(self) -> "_Partition":
        return _Partition(self.lab[:], self.start[:], dict(self.length))

    def cells(self) -> list[int]:
        return sorted(self.length)

    def is_discrete(self) -> bool:
        return len(self.length) == len(self.lab)

    def target_cell(self) -> int | None:
        """Start of the first smallest non-singleton cell."""
        best = None
        for s in sorted(self.length):
            size = self.length[s]
            if size > 1 and (best is None or size < self.length[best]):
                best = s
        return best


class _Searcher:
    def __init__(self, g: CubicGraph, seed: Sequence | None):
        self.g = g
        self.n = g.n
        self.adj = g.adjacency
        self.edges = g.edge_multiset
        self.seed = seed

    def initial(self) -> tuple[_Partition, list]:
        n = self.n
        keys = [(self.g.degree(v), self.seed[v] if self.seed else 0) for v in range(n)]
        distinct = sorted(set(keys), key=lambda k: (k[0], _sort_key(k[1])))
        rank = {k: i for i, k in enumerate(distinct)}
        lab = sorted(range(n), key=lambda v: rank[keys[v]])
        start = [0] * n
        length = {}
        pos = 0
        while pos < n:
            k = keys[lab[pos]]
            end = pos
            while end < n and keys[lab[end]] == k:
                end += 1
            for p in range(pos, end):
                start[lab[p]] = pos
            length[pos] = end - pos
            pos = end
        part = _Partition(lab, start, length)
        trace = self.refine(part, deque(sorted(length)))
        return part, trace

    def refine(self, part: _Partition, queue: deque) -> list:
        """Refine to the coarsest equitable partition below ``part``.

        Returns a trace of the splits, which depends only on the isomorphism
        class of the (graph, partition) pair.
        """
        lab, start, length, adj = part.lab, part.start, part.length, self.adj
        queued = set(queue)
        trace = []
        while queue:
            s = queue.popleft()
            queued.discard(s)
            if s not in length:
                continue
            cnt: dict[int, int] = {}
            for p in range(s, s + length[s]):
                for u in adj[lab[p]]:
                    cnt[u] = cnt.get(u, 0) + 1
            touched = sorted({start[u] for u in cnt})
            for t in touched:
                size = length[t]
                if size == 1:
                    continue
                members = lab[t:t + size]
                keyed = sorted(members, key=lambda v: cnt.get(v, 0))
                values = [cnt.get(v, 0) for v in keyed]
                if values[0] == values[-1]:
                    continue
                lab[t:t + size] = keyed
                pieces = []
                p = t
                while p < t + size:
                    q = p
                    while q < t + size and values[q - t] == values[p - t]:
                        q += 1
                    pieces.append((p, q - p))
                    p = q
                for ps, pl in pieces:
                    length[ps] = pl
                    for v in lab[ps:ps + pl]:
                        start[v] = ps
                trace.append((s, t, tuple(values[ps - t] for ps, _ in pieces),
                              tuple(pl for _, pl in pieces)))
                if t in queued:
                    skip = None
                else:
                    skip = max(pieces, key=lambda x: (x[1], -x[0]))[0]
                for ps, _ in pieces:
                    if ps != skip and ps not in queued:
                        queued.add(ps)
                        queue.append(ps)
        return trace

    def individualise(self, part: _Partition, cell: int, v: int) -> tuple[_Partition, list]:
        new = part.copy()
        lab, start, length = new.lab, new.start, new.length
        size = length[cell]
        i = lab.index(v, cell, cell + size)
        lab[cell], lab[i] = lab[i], lab[cell]
        length[cell] = 1
        length[cell + 1] = size - 1
        for p in range(cell + 1, cell + size):
            start[lab[p]] = cell + 1
        trace = self.refine(new, deque([cell]))
        return new, trace

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        mapped = Counter(frozenset((perm[u], perm[v])) for u, v in self.g.edges)
        return mapped == self.edges


def _sort_key(x):
    # cycle triplets may contain math.inf; tuples of numbers sort fine
    return x if isinstance(x, tuple) else (x,)


def _orbit(point: int, gens: list[tuple[int, ...]]) -> set[int]:
    orbit = {point}
    queue = [point]
    while queue:
        x = queue.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                queue.append(y)
    return orbit


def _orbits(n: int, gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    seen = [False] * n
    out = []
    for v in range(n):
        if not seen[v]:
            orb = sorted(_orbit(v, gens))
            for x in orb:
                seen[x] = True
            out.append(tuple(orb))
    return out


def automorphism_group(g: CubicGraph, seed_triplets: bool = True,
                       node_cap: int | None = None) -> AutResult:
    """Automorphism group of a (multi)graph.

    ``seed_triplets`` colours nodes by their cycle triplet before refining;
    this only speeds up the search and is skipped for non-cubic graphs.
    """
    cap = budget("nodes", DEFAULT_NODE_CAP) if node_cap is None else node_cap
    if g.n > cap:
        raise BudgetExceeded(f"graph has {g.n} nodes, cap is {cap}")
    if g.n == 0:
        return AutResult((), 1, 0, ())
    seed = cycle_triplets(g) if seed_triplets and g.is_cubic() else None
    S = _Searcher(g, seed)
    root, _ = S.initial()

    # first path down to a leaf
    path = []  # (partition before individualising, target cell, chosen vertex, trace)
    part = root
    while not part.is_discrete():
        cell = part.target_cell()
        v = part.lab[cell]
        child, trace = S.individualise(part, cell, v)
        path.append((part, cell, v, trace))
        part = child
    first_leaf = part.lab
    depth = len(path)

    def dfs(part: _Partition, level: int):
        if level == depth:
            if not part.is_discrete():
                return None
            perm = [0] * S.n
            for a, b in zip(first_leaf, part.lab):
                perm[a] = b
            return tuple(perm) if S.is_automorphism(perm) else None
        cell = part.target_cell()
        _, ref_cell, _, ref_trace = path[level]
        if cell != ref_cell or part.length[cell] != path[level][0].length[ref_cell]:
            return None
        for w in part.lab[cell:cell + part.length[cell]]:
            child, trace = S.individualise(part, cell, w)
            if trace != ref_trace:
                continue
            found = dfs(child, level + 1)
            if found is not None:
                return found
        return None

    gens: list[tuple[int, ...]] = []
    order = 1
    for level in range(depth - 1, -1, -1):
        part, cell, v, ref_trace = path[level]
        orbit = _orbit(v, gens)
        for w in part.lab[cell:cell + part.length[cell]]:
            if w in orbit:
                continue
            child, trace = S.individualise(part, cell, w)
            if trace != ref_trace:
                continue
            found = dfs(child, level + 1)
            if found is not None:
                gens.append(found)
                orbit = _orbit(v, gens)
        order *= len(orbit)
    orbits = _orbits(S.n, gens)
    return AutResult(tuple(Permutation(p) for p in gens), order, len(orbits), tuple(orbits))


def automorphism_order_by_closure(result: AutResult, n: int) -> int:
    """Re-derive the order by listing the group the generators produce."""
    if not result.generators:
        return 1
    return PermGroup(result.generators, n).order


# certificates

@dataclass(frozen=True)
class Certificate:
    """Outcome of checking that a lifted group action is the full
    automorphism group of a graph."""

    lifts_are_automorphisms: bool
    homomorphism_injective: bool
    order_matches: bool
    group_order: int
    aut_order: int
    witness: str | None = None

    @property
    def certified(self) -> bool:
        return self.lifts_are_automorphisms and self.homomorphism_injective and self.order_matches

    def as_dict(self) -> dict:
        return {"lifts_are_automorphisms": self.lifts_are_automorphisms,
                "homomorphism_injective": self.homomorphism_injective,
                "order_matches": self.order_matches,
                "group_order": self.group_order, "aut_order": self.aut_order,
                "certified": self.certified, "witness": self.witness}


def certify_isomorphism(g: CubicGraph, group: PermGroup,
                        lift: Callable[[Permutation], Permutation],
                        aut: AutResult | None = None) -> Certificate:
    """Check (a) every lifted element is an automorphism, (b) the lift is an
    injective homomorphism and (c) ``|Aut(g)| == |group|``."""
    elems = group.elements
    lifted = [lift(x) for x in elems]
    witness = None

    lifts_ok = True
    for x, p in zip(elems, lifted):
        if not g.is_automorphism(p.array):
            lifts_ok = False
            witness = f"lift of {x} is not an automorphism"
            break

    hom_ok = True
    ident = Permutation.identity(g.n)
    for x, p in zip(elems[1:], lifted[1:]):
        if p == ident:
            hom_ok = False
            witness = witness or f"non-identity element {x} lifts to the identity"
            break
    if hom_ok:
        # checking products with generators suffices once every element is lifted
        gens = [group.index(s) for s in group.generators]
        for i, x in enumerate(elems):
            for j in gens:
                k = group.index(x * elems[j])
                if lifted[k] != lifted[i] * lifted[j]:
                    hom_ok = False
                    witness = witness or f"lift(g*h) != lift(g)*lift(h) for g={x}, h={elems[j]}"
                    break
            if not hom_ok:
                break

    if aut is None:
        aut = automorphism_group(g)
    order_ok = aut.order == group.order
    if not order_ok and witness is None:
        witness = f"automorphism group has order {aut.order}, group has order {group.order}"
    return Certificate(lifts_ok, hom_ok, order_ok, group.order, aut.order, witness)
