"""Cubic graphs built from groups: Frucht graphs, small families, Cayley
graphs and orbital graphs, together with the group actions lifted to them.

Frucht graph nodes are labelled ``x[i,k]``: ``i`` is the 1-based position
inside one gadget and ``k`` the index of a group element in the group's
canonical element list. Generator ``g_j`` links gadget ``h`` to gadget
``g_j * h`` in the original construction and to ``h * g_j`` in the
simplified and modified ones. The group therefore acts on the original
graph by right multiplication (``x[i,h] -> x[i, h * g^-1]``) and on the
other two by left multiplication (``x[i,h] -> x[i, g * h]``).
"""

from __future__ import annotations

import re
from typing import Callable, Sequence

from .cubicgraph import CubicGraph, EdgeColouring
from .errors import (ArityMismatch, DoesNotGenerate, GeneratorsDoNotGenerate,
                     NotCubicConnectionSet, NotCubicResult, NTooSmall, SelfLoop)
from .permgroup import PermGroup, Permutation, cosets

VARIANTS = ("original", "simplified", "modified")

# (i, j, colour) gadget edges; "R" edges are added separately.
Monomials = list[tuple[int, int, str]]


def frucht_label(i: int, k: int) -> str:
    return f"x[{i},{k}]"


_LABEL = re.compile(r"^x\[(\d+),(\d+)\]$")


def parse_frucht_label(label: str) -> tuple[int, int]:
    m = _LABEL.match(label)
    if not m:
        raise ValueError(f"not a Frucht node label: {label!r}")
    return int(m.group(1)), int(m.group(2))


def _original_gadget(n: int) -> tuple[int, Monomials, list[tuple[int, int]]]:
    size = 2 * n + 4
    edges = [(1, 2, "b"), (1, 4, "r"), (1, 5, "g"), (2, 3, "r"), (2, 4, "g"),
             (3, 5, "b"), (3, 6, "g"), (4, size, "b")]
    edges += [(2 * i + 3, 2 * i + 4, "g") for i in range(2, n + 1)]
    edges += [(2 * i + 2, 2 * i + 3, "b") for i in range(2, n + 1)]
    # generator j joins x[2j+3, h] to x[2j+4, g_j*h]
    links = [(2 * j + 3, 2 * j + 4) for j in range(1, n + 1)]
    return size, edges, links


def _simplified_gadget() -> tuple[int, Monomials, list[tuple[int, int]]]:
    edges = [(2, 1, "r"), (2, 3, "g"), (1, 3, "b"), (1, 4, "g"),
             (2, 6, "b"), (5, 6, "g"), (4, 5, "b")]
    return 6, edges, [(3, 4), (5, 6)]


def _modified_gadget(n: int) -> tuple[int, Monomials, list[tuple[int, int]]]:
    size = 2 * n + 6
    edges = [(1, 6, "r"), (1, 2, "g"), (1, 3, "b"), (2, 3, "r"), (3, 7, "g"),
             (2, 4, "b"), (4, 5, "r"), (4, 6, "g"), (5, 7, "b"), (5, 8, "g"),
             (6, size, "b")]
    edges += [(2 * i + 5, 2 * i + 6, "g") for i in range(2, n + 1)]
    edges += [(2 * i + 4, 2 * i + 5, "b") for i in range(2, n + 1)]
    links = [(2 * j + 5, 2 * j + 6) for j in range(1, n + 1)]
    return size, edges, links


def frucht_gadget(variant: str, n: int):
    """Gadget size, internal edges with colours, and the generator links."""
    if variant == "original":
        if n < 2:
            raise ArityMismatch("the original construction needs at least 2 generators")
        return _original_gadget(n)
    if variant == "simplified":
        if n != 2:
            raise ArityMismatch("the simplified construction needs exactly 2 generators")
        return _simplified_gadget()
    if variant == "modified":
        if n < 3:
            raise ArityMismatch("the modified construction needs at least 3 generators")
        return _modified_gadget(n)
    raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")


def check_generates(group: PermGroup, gens: Sequence[Permutation]):
    if not all(g in group for g in gens) or PermGroup(gens, group.degree).order != group.order:
        raise GeneratorsDoNotGenerate("generators do not generate the group")


def frucht_graph(group: PermGroup, gens: Sequence[Permutation],
                 variant: str = "original") -> tuple[CubicGraph, EdgeColouring]:
    """Cubic graph whose automorphisms contain a copy of ``group``.

    Returns the graph and its built-in 3-edge-colouring: every edge
    between gadgets is red, gadget edges carry the colours fixed in the
    gadget tables.
    """
    gens = list(gens)
    size, internal, links = frucht_gadget(variant, len(gens))
    check_generates(group, gens)
    order = group.order
    labels = tuple(frucht_label(i, k) for i in range(1, size + 1) for k in range(order))

    def node(i: int, k: int) -> int:
        return (i - 1) * order + k

    edges, colours = [], []
    for a, b, col in internal:
        for k in range(order):
            edges.append((node(a, k), node(b, k)))
            colours.append(col)
    elems = group.elements
    left = variant == "original"
    for j, (a, b) in enumerate(links):
        g = gens[j]
        for k in range(order):
            h = g * elems[k] if left else elems[k] * g
            edges.append((node(a, k), node(b, group.index(h))))
            colours.append("r")
    return CubicGraph(labels, tuple(edges)), EdgeColouring(tuple(colours))


def frucht_lift(graph: CubicGraph, group: PermGroup,
                variant: str = "original") -> Callable[[Permutation], Permutation]:
    """Map a group element to the node permutation it induces."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {VARIANTS}")
    parsed = [parse_frucht_label(lab) for lab in graph.nodes]
    where = {p: v for v, p in enumerate(parsed)}
    elems = group.elements

    def lift(g: Permutation) -> Permutation:
        if variant == "original":
            g_inv = g.inverse()
            moved = [group.index(e * g_inv) for e in elems]
        else:
            moved = [group.index(g * e) for e in elems]
        return Permutation(tuple(where[(i, moved[k])] for i, k in parsed))

    return lift


# small families with cyclic and dihedral symmetry

def gamma_cn(n: int) -> CubicGraph:
    """6n-node cubic graph whose automorphism group is cyclic of order n."""
    if n < 3:
        raise NTooSmall("the cyclic family starts at n = 3")
    labels = tuple(f"{c}{i}" for i in range(1, n + 1) for c in "abcdef")
    mono = []
    for i in range(1, n + 1):
        mono += [(f"a{i}", f"b{i}"), (f"a{i}", f"e{i}"), (f"a{i}", f"f{i}"),
                 (f"b{i}", f"f{i}"), (f"c{i}", f"d{i}"), (f"c{i}", f"f{i}"),
                 (f"c{i}", f"e{i}")]
    for j in range(1, n):
        mono += [(f"b{j + 1}", f"e{j}"), (f"d{j}", f"d{j + 1}")]
    mono += [(f"b1", f"e{n}"), ("d1", f"d{n}")]
    idx = {lab: k for k, lab in enumerate(labels)}
    return CubicGraph(labels, tuple((idx[a], idx[b]) for a, b in mono))


def gamma_dn(n: int) -> CubicGraph:
    """4n-node cubic graph whose automorphism group is dihedral of order 2n."""
    if n < 4:
        raise NTooSmall("the dihedral family starts at n = 4")
    labels = tuple(f"{c}{i}" for i in range(1, n + 1) for c in "abcd")
    mono = []
    for i in range(1, n + 1):
        mono += [(f"a{i}", f"b{i}"), (f"a{i}", f"c{i}"), (f"c{i}", f"d{i}"),
                 (f"b{i}", f"c{i}")]
    for j in range(1, n):
        mono += [(f"a{j}", f"b{j + 1}"), (f"d{j}", f"d{j + 1}")]
    mono += [(f"a{n}", "b1"), ("d1", f"d{n}")]
    idx = {lab: k for k, lab in enumerate(labels)}
    return CubicGraph(labels, tuple((idx[a], idx[b]) for a, b in mono))


_FAMILY_LABEL = re.compile(r"^([a-f])(\d+)$")


def rotation_lift(graph: CubicGraph, n: int, step: int = 1) -> Permutation:
    """Node permutation ``c_i -> c_{i+step}`` (indices mod n)."""
    out = []
    for lab in graph.nodes:
        c, i = _FAMILY_LABEL.match(lab).groups()
        out.append(graph.index(f"{c}{(int(i) - 1 + step) % n + 1}"))
    return Permutation(tuple(out))


def dihedral_reflection(graph: CubicGraph, n: int) -> Permutation:
    """Reflection of the dihedral family: ``a_i <-> b_{n+2-i}``,
    ``c_i -> c_{n+2-i}``, ``d_i -> d_{n+2-i}`` (indices mod n)."""
    swap = {"a": "b", "b": "a", "c": "c", "d": "d"}
    out = []
    for lab in graph.nodes:
        c, i = _FAMILY_LABEL.match(lab).groups()
        j = (n + 1 - int(i)) % n + 1
        out.append(graph.index(f"{swap[c]}{j}"))
    return Permutation(tuple(out))


# Cayley and orbital graphs

def connection_set(group: PermGroup, s: Sequence[Permutation]) -> list[Permutation]:
    """``s`` closed under inverses, keeping first occurrences in order."""
    out: list[Permutation] = []
    keys = set()
    for x in list(s) + [x.inverse() for x in s]:
        x = x.extend(group.degree)
        if x.array not in keys:
            keys.add(x.array)
            out.append(x)
    return out


def cayley_graph(group: PermGroup, s: Sequence[Permutation]) -> CubicGraph:
    """Nodes are group elements ``g[k]``, edges ``{g, g*s}``."""
    conn = connection_set(group, s)
    if any(x.is_identity() for x in conn):
        raise NotCubicConnectionSet("the connection set contains the identity")
    if len(conn) != 3:
        raise NotCubicConnectionSet(
            f"closing the connection set under inverses gives {len(conn)} elements, not 3")
    if not all(x in group for x in conn):
        raise DoesNotGenerate("connection set is not contained in the group")
    if PermGroup(conn, group.degree).order != group.order:
        raise DoesNotGenerate("the connection set does not generate the group")
    elems = group.elements
    seen = set()
    edges = []
    for k, g in enumerate(elems):
        for x in conn:
            j = group.index(g * x)
            key = (min(k, j), max(k, j))
            if key not in seen:
                seen.add(key)
                edges.append(key)
    return CubicGraph(tuple(f"g[{k}]" for k in range(len(elems))), tuple(edges))


def cayley_colouring(group: PermGroup, s: Sequence[Permutation],
                     graph: CubicGraph) -> EdgeColouring:
    """Colour edges by connection-set element.

    Three involutions get r, g, b in order. For ``{s, x, x^-1}`` with
    ``x`` of even order, ``s``-edges are red and the ``x``-cycles
    alternate green and blue.
    """
    conn = connection_set(group, s)
    invols = [x for x in conn if (x * x).is_identity()]
    elems = group.elements
    colours = []
    if len(invols) == 3:
        for u, v in graph.edges:
            d = elems[u].inverse() * elems[v]
            colours.append("rgb"[[x.array for x in conn].index(d.array)])
        return EdgeColouring(tuple(colours))
    if len(invols) != 1:
        raise ValueError("need three involutions or one involution and x, x^-1")
    inv = invols[0]
    x = next(y for y in conn if y.array != inv.array)
    k = x.order()
    if k % 2:
        raise ValueError("x must have even order for the alternating colouring")
    # position of each element along its <x>-coset, counted from the least index
    pos = [-1] * len(elems)
    for start in range(len(elems)):
        if pos[start] >= 0:
            continue
        h = elems[start]
        for p in range(k):
            pos[group.index(h)] = p
            h = h * x
    for u, v in graph.edges:
        d = elems[u].inverse() * elems[v]
        if d.array == inv.array:
            colours.append("r")
        else:
            tail = u if d.array == x.array else v
            colours.append("g" if pos[tail] % 2 == 0 else "b")
    return EdgeColouring(tuple(colours))


def left_multiplication_lift(graph: CubicGraph, group: PermGroup) -> Callable[[Permutation], Permutation]:
    """Lift for graphs whose node ``k`` is group element ``k``."""
    elems = group.elements

    def lift(g: Permutation) -> Permutation:
        return Permutation(tuple(group.index(g * e) for e in elems))

    return lift


def orbital_graph(group: PermGroup, sub: PermGroup,
                  s: Sequence[Permutation]) -> CubicGraph:
    """Nodes are the left cosets ``gH``; edges form the orbits of
    ``{H, s H}`` under left multiplication."""
    cs = cosets(group, sub)
    coset_of = [0] * group.order
    for c, (_, members) in enumerate(cs):
        for k in members:
            coset_of[k] = c
    seen = set()
    edges = []
    for a in group.elements:
        ca = coset_of[group.index(a)]
        for x in s:
            cb = coset_of[group.index(a * x)]
            if ca == cb:
                raise SelfLoop("an orbital element lies in the subgroup")
            key = (min(ca, cb), max(ca, cb))
            if key not in seen:
                seen.add(key)
                edges.append(key)
    graph = CubicGraph(tuple(f"c[{c}]" for c in range(len(cs))), tuple(edges))
    if not graph.is_cubic():
        degrees = sorted({graph.degree(v) for v in range(graph.n)})
        raise NotCubicResult(f"orbital graph has degrees {degrees}")
    return graph


def orbital_lift(graph: CubicGraph, group: PermGroup,
                 sub: PermGroup) -> Callable[[Permutation], Permutation]:
    cs = cosets(group, sub)
    coset_of = [0] * group.order
    for c, (_, members) in enumerate(cs):
        for k in members:
            coset_of[k] = c
    elems = group.elements

    def lift(g: Permutation) -> Permutation:
        return Permutation(tuple(coset_of[group.index(g * elems[rep])] for rep, _ in cs))

    return lift
