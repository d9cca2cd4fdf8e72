"""Cycle double covers: verification, covers from 3-edge-colourings, and
closed-form covers for the graph families in :mod:`symsurf.construct`.

A cover is a tuple of cycles, each a tuple of node indices listed in
traversal order. Cycles are normalised to start at their least node and
continue towards the smaller of its two cycle neighbours.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import construct
from .cubicgraph import CubicGraph, EdgeColouring
from .errors import (ImproperColouring, NotAutomorphism, ParamMismatch,
                     TranscribedCoverInvalid, UnknownNode)
from .permgroup import PermGroup, Permutation


def normalize_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    c = list(cycle)
    if len(c) <= 2:
        return tuple(sorted(c)) if len(c) == 2 else tuple(c)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if c[-1] < c[1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


@dataclass(frozen=True)
class CycleDoubleCover:
    cycles: tuple[tuple[int, ...], ...]
    note: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(int(v) for v in c) for c in self.cycles))

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def normalized(self) -> "CycleDoubleCover":
        return CycleDoubleCover(tuple(normalize_cycle(c) for c in self.cycles), self.note)

    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def labelled(self, g: CubicGraph) -> list[list[str]]:
        return [[g.nodes[v] for v in c] for c in self.cycles]


def cover_from_labels(g: CubicGraph, cycles: Iterable[Sequence[str]], note: str = "") -> CycleDoubleCover:
    out = []
    for c in cycles:
        try:
            out.append(tuple(g.index(lab) for lab in c))
        except KeyError as exc:
            raise UnknownNode(f"no node labelled {exc.args[0]!r}") from None
    return CycleDoubleCover(tuple(out), note)


@dataclass(frozen=True)
class CDCReport:
    valid: bool
    simple: bool  # no cycle repeats a node
    edge_counts: tuple[int, ...]
    violations: tuple[str, ...]

    def as_dict(self) -> dict:
        return {"valid": self.valid, "simple": self.simple,
                "edge_counts": list(self.edge_counts), "violations": list(self.violations)}


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def cycle_edge_pairs(cycle: Sequence[int]) -> list[tuple[int, int]]:
    return [_pair(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def verify_cdc(g: CubicGraph, cover: CycleDoubleCover) -> CDCReport:
    """Every edge must lie on exactly two cycles (with multiplicity)."""
    violations = []
    simple = True
    traversed: Counter = Counter()
    multiplicity = Counter(_pair(u, v) for u, v in g.edges)
    for ci, c in enumerate(cover.cycles):
        for v in c:
            if not 0 <= v < g.n:
                raise UnknownNode(f"cycle {ci} refers to node {v}")
        if len(set(c)) != len(c):
            simple = False
            violations.append(f"cycle {ci} repeats a node")
        if len(c) < 2:
            violations.append(f"cycle {ci} has fewer than two nodes")
            continue
        for p in cycle_edge_pairs(c):
            if p not in multiplicity:
                violations.append(f"cycle {ci} steps between non-adjacent nodes "
                                  f"{g.nodes[p[0]]} and {g.nodes[p[1]]}")
            traversed[p] += 1
    # spread traversals of a node pair over its parallel edges, two each
    left = dict(traversed)
    counts = []
    for u, v in g.edges:
        p = _pair(u, v)
        take = min(2, left.get(p, 0)) if multiplicity[p] > 1 else left.get(p, 0)
        left[p] = left.get(p, 0) - take
        counts.append(take)
    for p, mult in multiplicity.items():
        if traversed[p] != 2 * mult:
            violations.append(f"edge {g.nodes[p[0]]}-{g.nodes[p[1]]} covered "
                              f"{traversed[p]} times, expected {2 * mult}")
    return CDCReport(not violations, simple, tuple(counts), tuple(violations))


def cdc_from_colouring(g: CubicGraph, colouring: EdgeColouring) -> CycleDoubleCover:
    """Bicoloured cycles for the colour pairs rg, rb and gb."""
    if not colouring.is_proper(g):
        raise ImproperColouring("colouring is not a proper 3-edge-colouring")
    cycles = []
    for pair in (("r", "g"), ("r", "b"), ("g", "b")):
        seen = [False] * g.n
        for start in range(g.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            prev_edge = -1
            v = start
            while True:
                nxt = [e for e in g.incidence[v]
                       if colouring.colours[e] in pair and e != prev_edge]
                e = nxt[0]
                u = g.other(e, v)
                if u == start:
                    break
                cyc.append(u)
                seen[u] = True
                prev_edge, v = e, u
            cycles.append(normalize_cycle(cyc))
    return CycleDoubleCover(tuple(cycles))


def _canonical(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotation and reflection invariant key for a cyclic sequence."""
    c = list(cycle)
    n = len(c)
    best = None
    for seq in (c, c[::-1]):
        for i in range(n):
            rot = tuple(seq[i:] + seq[:i])
            if best is None or rot < best:
                best = rot
    return best


def is_invariant(g: CubicGraph, cover: CycleDoubleCover,
                 perms: Iterable[Permutation | Sequence[int]]) -> bool:
    """Does every permutation map each cycle onto a cycle of the cover?"""
    keys = {_canonical(c) for c in cover.cycles}
    for p in perms:
        arr = p.array if isinstance(p, Permutation) else tuple(p)
        if not g.is_automorphism(arr):
            raise NotAutomorphism("permutation does not preserve the graph")
        for c in cover.cycles:
            if _canonical([arr[v] for v in c]) not in keys:
                return False
    return True


def dedupe_cycles(cycles: Iterable[Sequence]) -> list:
    """Drop cycles equal to an earlier one up to rotation and reversal."""
    seen = set()
    out = []
    for c in cycles:
        key = _canonical(c)
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


# closed-form covers

def _finish(g: CubicGraph, label_cycles, repaired=None, note="") -> CycleDoubleCover:
    """Resolve labels and verify; fall back to ``repaired`` on failure."""
    problem = None
    try:
        cover = cover_from_labels(g, label_cycles, note)
        report = verify_cdc(g, cover)
        if not report.valid or not report.simple:
            problem = "; ".join(report.violations[:3])
    except UnknownNode as exc:
        problem = str(exc)
    if problem is None:
        return CycleDoubleCover(tuple(normalize_cycle(c) for c in cover.cycles), note)
    if repaired is None:
        raise TranscribedCoverInvalid(problem)
    fixed = cover_from_labels(g, repaired, note)
    report = verify_cdc(g, fixed)
    if not report.valid:
        raise TranscribedCoverInvalid("repaired cover also fails: " + "; ".join(report.violations[:3]))
    return CycleDoubleCover(tuple(normalize_cycle(c) for c in fixed.cycles),
                            f"repaired ({problem})")


def cyclic_family_cdc(n: int, g: CubicGraph | None = None) -> CycleDoubleCover:
    g = g or construct.gamma_cn(n)
    nxt = lambda i: i % n + 1  # noqa: E731
    cycles = []
    for i in range(1, n + 1):
        j = nxt(i)
        cycles.append([f"a{i}", f"b{i}", f"f{i}"])
        cycles.append([f"a{i}", f"f{i}", f"c{i}", f"e{i}"])
        cycles.append([f"e{i}", f"c{i}", f"d{i}", f"d{j}", f"c{j}", f"f{j}", f"b{j}"])
    cycles.append([f"d{i}" for i in range(1, n + 1)])
    cycles.append([x for i in range(1, n + 1) for x in (f"b{i}", f"a{i}", f"e{i}")])
    return _finish(g, cycles)


def dihedral_family_cdc(n: int, g: CubicGraph | None = None, repair: bool = True) -> CycleDoubleCover:
    """Cover with cycle lengths 3 (n times), 6 (n times), n and 2n.

    The closed form, as printed, routes the long cycles through nodes
    ``f_i`` that do not exist in this family and steps from ``b_i`` to
    ``a_{i+1}``, which are not adjacent. The repair drops ``f_{i+1}`` and
    walks the outer cycle as ``a_1, b_2, a_2, b_3, ..., a_n, b_1``.
    """
    g = g or construct.gamma_dn(n)
    nxt = lambda i: i % n + 1  # noqa: E731
    printed, fixed = [], []
    for i in range(1, n + 1):
        j = nxt(i)
        printed.append([f"a{i}", f"b{i}", f"c{i}"])
        fixed.append([f"a{i}", f"b{i}", f"c{i}"])
        printed.append([f"a{i}", f"c{i}", f"d{i}", f"d{j}", f"c{j}", f"f{j}", f"b{j}"])
        fixed.append([f"a{i}", f"c{i}", f"d{i}", f"d{j}", f"c{j}", f"b{j}"])
    printed.append([f"d{i}" for i in range(1, n + 1)])
    fixed.append([f"d{i}" for i in range(1, n + 1)])
    printed.append([x for i in range(1, n + 1) for x in (f"a{i}", f"b{i}")])
    fixed.append([x for i in range(1, n + 1) for x in (f"a{i}", f"b{nxt(i)}")])
    return _finish(g, printed, fixed if repair else None)


def _frucht_names(group: PermGroup):
    return lambda i, h: construct.frucht_label(i, group.index(h))


def frucht_rank2_cdc(group: PermGroup, gens: Sequence[Permutation],
                     g: CubicGraph | None = None) -> CycleDoubleCover:
    """Vertex-faithful cover of the simplified two-generator Frucht graph.

    Per group element: the triangle (1,2,3) and pentagon (1,2,6,5,4).
    Per coset of <g2>: (6,5) repeated along ``h -> h*g2``.
    Per coset of <g1>: (4,1,3) repeated along ``h -> h*g1``.
    Per coset of <g1 g2>: (6,2,3) then (4,5) in ``h*g1``, repeating along
    ``h -> h*g1*g2``.
    """
    if len(gens) != 2:
        raise ParamMismatch("the rank-2 cover needs exactly two generators")
    g1, g2 = gens
    g = g or construct.frucht_graph(group, gens, "simplified")[0]
    x = _frucht_names(group)
    cycles = []
    for h in group.elements:
        cycles.append([x(1, h), x(2, h), x(3, h)])
        cycles.append([x(1, h), x(2, h), x(6, h), x(5, h), x(4, h)])
    cycles += _coset_walks(group, g2, lambda h: [x(6, h), x(5, h)])
    cycles += _coset_walks(group, g1, lambda h: [x(4, h), x(1, h), x(3, h)])
    cycles += _coset_walks(group, g1 * g2,
                           lambda h: [x(6, h), x(2, h), x(3, h), x(4, h * g1), x(5, h * g1)])
    return _finish(g, cycles)


def frucht_vertex_faithful_cdc(group: PermGroup, gens: Sequence[Permutation],
                               g: CubicGraph | None = None) -> CycleDoubleCover:
    """Experimental vertex-faithful cover of the modified Frucht graph (n >= 3).

    The gadget is drawn in the plane with outer boundary
    7, 5, 8, 9, ..., 2n+6, 6, 1, 3, so its inner faces are
    (1,2,3), (3,2,4,5,7), (2,1,6,4) and (4,6,2n+6,...,8,5). Consecutive
    generator links along the boundary give one cycle per coset of
    <g_1> (through 7, 8, 5), of <g_j> for j >= 2 (through 2j+5, 2j+6) and
    of <g_1...g_n> (through 7, 8, ..., 2n+6, 6, 1, 3).
    """
    n = len(gens)
    if n < 3:
        raise ParamMismatch("the modified construction needs at least three generators")
    g = g or construct.frucht_graph(group, gens, "modified")[0]
    x = _frucht_names(group)
    top = 2 * n + 6
    cycles = []
    for h in group.elements:
        cycles.append([x(1, h), x(2, h), x(3, h)])
        cycles.append([x(3, h), x(2, h), x(4, h), x(5, h), x(7, h)])
        cycles.append([x(2, h), x(1, h), x(6, h), x(4, h)])
        cycles.append([x(4, h), x(6, h)] + [x(i, h) for i in range(top, 7, -1)] + [x(5, h)])
    cycles += _coset_walks(group, gens[0], lambda h: [x(8, h), x(5, h), x(7, h)])
    for j in range(2, n + 1):
        cycles += _coset_walks(group, gens[j - 1],
                               lambda h, j=j: [x(2 * j + 6, h), x(2 * j + 5, h)])
    prod = gens[0]
    for s in gens[1:]:
        prod = prod * s

    def product_segment(h):
        # leave gadget h at 7, pass 2j+6 -> 2j+7 in h*g_1...g_j, then
        # return through 6, 1, 3 of h*g_1...g_n towards its node 7
        walk = [x(7, h)]
        cur = h
        for j in range(1, n + 1):
            cur = cur * gens[j - 1]
            walk.append(x(2 * j + 6, cur))
            if j < n:
                walk.append(x(2 * j + 7, cur))
        return walk + [x(6, cur), x(1, cur), x(3, cur)]

    cycles += _coset_walks(group, prod, product_segment)
    return _finish(g, cycles, note="experimental")


def _coset_walks(group: PermGroup, step: Permutation, segment):
    """Concatenate ``segment(h), segment(h*s), ...`` around each coset
    ``h<s>``; cosets are taken in element order."""
    k = step.order()
    seen = set()
    out = []
    for h in group.elements:
        i = group.index(h)
        if i in seen:
            continue
        walk = []
        cur = h
        for _ in range(k):
            seen.add(group.index(cur))
            walk += segment(cur)
            cur = cur * step
        out.append(walk)
    return out


def q8_cdc(group: PermGroup, gens: Sequence[Permutation],
           g: CubicGraph | None = None) -> CycleDoubleCover:
    """Vertex-faithful cover of the simplified Frucht graph of Q8 = <i, j>
    with cycle lengths 3, 5 and 10 (Euler characteristic 0)."""
    if group.order != 8 or len(gens) != 2:
        raise ParamMismatch("the Q8 cover needs the quaternion group with two generators")
    i_, j_ = gens
    ii, jj = i_.inverse(), j_.inverse()
    g = g or construct.frucht_graph(group, gens, "simplified")[0]
    x = _frucht_names(group)
    cycles = []
    for h in group.elements:
        cycles.append([x(1, h), x(2, h), x(3, h)])
        cycles.append([x(1, h), x(2, h), x(6, h), x(5, h), x(4, h)])
    for h in group.elements:
        a = h * ii
        b = a * jj
        c = b * jj
        cycles.append([x(3, h), x(1, h), x(4, h), x(3, a), x(2, a), x(6, a),
                       x(5, b), x(6, b), x(5, c), x(4, c)])
    return _finish(g, dedupe_cycles(cycles))


def cayley_cdc(group: PermGroup, s: Sequence[Permutation],
               g: CubicGraph | None = None) -> CycleDoubleCover:
    """Cover of a cubic Cayley graph.

    Three involutions: the bicoloured cycles of the colouring by
    connection-set element. ``{s, x, x^-1}``: the ``<x>``-cosets
    ``(h, hx, hx^2, ...)`` together with the walks ``(h, hs, hsx, hsxs, ...)``.
    """
    g = g or construct.cayley_graph(group, s)
    conn = construct.connection_set(group, s)
    invols = [y for y in conn if (y * y).is_identity()]
    if len(invols) == 3:
        return cdc_from_colouring(g, construct.cayley_colouring(group, s, g))
    if len(invols) != 1:
        raise ParamMismatch("need three involutions or {s, x, x^-1}")
    inv = invols[0]
    xx = next(y for y in conn if y.array != inv.array)
    name = lambda h: f"g[{group.index(h)}]"  # noqa: E731
    cycles = _coset_walks(group, xx, lambda h: [name(h)])
    cycles += _coset_walks(group, inv * xx, lambda h: [name(h), name(h * inv)])
    return _finish(g, dedupe_cycles(cycles))


def family_cdc(kind: str, graph: CubicGraph | None = None, **params) -> CycleDoubleCover:
    """Closed-form cover by family name.

    ``cyclic`` and ``dihedral`` take ``n``; ``frucht_vertex_faithful_rank2``,
    ``frucht_vertex_faithful`` and ``q8`` take ``group`` and ``gens``;
    ``cayley`` takes ``group`` and ``s``; ``orbital_a5`` and ``petersen``
    (with ``which`` in 1..3) use the stored fixtures.
    """
    try:
        if kind == "cyclic":
            return cyclic_family_cdc(params["n"], graph)
        if kind == "dihedral":
            return dihedral_family_cdc(params["n"], graph, params.get("repair", True))
        if kind == "frucht_vertex_faithful_rank2":
            return frucht_rank2_cdc(params["group"], params["gens"], graph)
        if kind == "frucht_vertex_faithful":
            return frucht_vertex_faithful_cdc(params["group"], params["gens"], graph)
        if kind == "q8":
            return q8_cdc(params["group"], params["gens"], graph)
        if kind == "cayley":
            return cayley_cdc(params["group"], params["s"], graph)
    except KeyError as exc:
        raise ParamMismatch(f"cover kind {kind!r} needs parameter {exc.args[0]!r}") from None
    if kind == "orbital_a5":
        from .fixtures import a5_orbital_cover, a5_orbital_graph
        return _finish(graph or a5_orbital_graph(), a5_orbital_cover())
    if kind == "petersen":
        from .fixtures import petersen_covers, petersen_graph
        which = params.get("which", 3)
        return _finish(graph or petersen_graph(), petersen_covers()[which - 1])
    raise ParamMismatch(f"unknown cover kind {kind!r}")


FAMILY_KINDS = ("cyclic", "dihedral", "frucht_vertex_faithful_rank2",
                "frucht_vertex_faithful", "q8", "cayley", "orbital_a5", "petersen")
