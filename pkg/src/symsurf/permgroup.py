"""Permutations and small permutation groups.

Points are written 1-based in cycle notation (``(1,2,3)``) but stored
0-based: ``Permutation((1, 2, 0))`` sends index 0 to 1, 1 to 2 and 2 to 0,
which prints as ``(1,2,3)``.

Products compose right to left, ``(g * h)(x) == g(h(x))``.
"""

from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence

from .errors import (BudgetExceeded, CycleSyntaxError, NotAnElement,
                     NotASubgroup, RepeatedPoint)

DEFAULT_GROUP_CAP = 20000


def budget(kind: str, default: int) -> int:
    """Search cap for ``kind`` ("order" or "nodes"), honouring SYMSURF_BUDGET.

    The variable holds either a bare integer (applied to every cap) or
    comma separated ``kind:value`` pairs such as ``order:50000,nodes:2000``.
    """
    raw = os.environ.get("SYMSURF_BUDGET", "").strip()
    if not raw:
        return default
    if raw.isdigit():
        return int(raw)
    for part in raw.split(","):
        key, _, value = part.partition(":")
        if key.strip() == kind and value.strip().isdigit():
            return int(value)
    return default


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``range(degree)`` given by its image list."""

    array: tuple[int, ...]

    def __post_init__(self):
        arr = tuple(int(x) for x in self.array)
        if sorted(arr) != list(range(len(arr))):
            raise ValueError(f"not a permutation image list: {arr}")
        object.__setattr__(self, "array", arr)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int = 0) -> "Permutation":
        """Build from 0-based cycles; ``degree`` may be raised to fit."""
        cycles = [tuple(c) for c in cycles]
        top = max((max(c) + 1 for c in cycles if c), default=0)
        arr = list(range(max(degree, top)))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                arr[a] = b
        return cls(tuple(arr))

    @property
    def degree(self) -> int:
        return len(self.array)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based images of the points ``1..degree``."""
        return tuple(x + 1 for x in self.array)

    def __call__(self, point: int) -> int:
        return self.array[point] if point < len(self.array) else point

    def extend(self, degree: int) -> "Permutation":
        if degree <= self.degree:
            return self
        return Permutation(self.array + tuple(range(self.degree, degree)))

    def __mul__(self, other: "Permutation") -> "Permutation":
        n = max(self.degree, other.degree)
        a, b = self.extend(n).array, other.extend(n).array
        return Permutation(tuple(a[b[i]] for i in range(n)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.array):
            inv[x] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.array))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point (0-based)."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.array[start] == start:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.array[x]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        result = 1
        for c in self.cycles():
            result = result * len(c) // gcd(result, len(c))
        return result

    def same_action(self, other: "Permutation") -> bool:
        """Equality up to trailing fixed points."""
        n = max(self.degree, other.degree)
        return self.extend(n) == other.extend(n)

    def __str__(self) -> str:
        return print_cycles(self)


_CYCLE_RE = re.compile(r"\(\s*(\d+)\s*((?:,\s*\d+\s*)+)\)")


def parse_cycles(text: str, degree: int = 0) -> Permutation:
    """Parse 1-based cycle notation such as ``(1,2)(4,5)`` or ``()``.

    The result's degree is the largest point mentioned, or ``degree`` if
    that is larger.
    """
    s = "".join(text.split())
    if s == "()":
        return Permutation.identity(max(degree, 1))
    if not s:
        raise CycleSyntaxError("empty permutation (write () for the identity)")
    pos = 0
    cycles = []
    seen = set()
    while pos < len(s):
        m = _CYCLE_RE.match(s, pos)
        if m is None:
            raise CycleSyntaxError(f"bad cycle notation at offset {pos}: {text!r}")
        pts = [int(m.group(1))] + [int(x) for x in m.group(2).split(",") if x]
        for p in pts:
            if p < 1:
                raise CycleSyntaxError(f"points are positive integers, got {p}")
            if p in seen:
                raise RepeatedPoint(f"point {p} repeated in {text!r}")
            seen.add(p)
        cycles.append([p - 1 for p in pts])
        pos = m.end()
    return Permutation.from_cycles(cycles, degree)


def print_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cyc)


def _common_degree(perms: Iterable[Permutation]) -> int:
    return max((p.degree for p in perms), default=1)


class PermGroup:
    """A permutation group stored as its full, ordered element list.

    Elements are produced breadth-first from the identity, multiplying on
    the right by the generators in the order given, so the ordering (and
    every index derived from it) is reproducible.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int = 0,
                 cap: int | None = None):
        gens = list(generators)
        n = max(_common_degree(gens), degree, 1)
        self.generators: tuple[Permutation, ...] = tuple(g.extend(n) for g in gens)
        self.degree = n
        self._cap = budget("order", DEFAULT_GROUP_CAP) if cap is None else cap
        self._elements: tuple[Permutation, ...] | None = None
        self._index: dict[tuple[int, ...], int] | None = None

    def _enumerate(self):
        ident = Permutation.identity(self.degree)
        elements = [ident]
        index = {ident.array: 0}
        queue = deque([ident])
        while queue:
            g = queue.popleft()
            for s in self.generators:
                h = g * s
                if h.array not in index:
                    if len(elements) >= self._cap:
                        raise BudgetExceeded(
                            f"group has more than {self._cap} elements")
                    index[h.array] = len(elements)
                    elements.append(h)
                    queue.append(h)
        self._elements = tuple(elements)
        self._index = index

    @property
    def elements(self) -> tuple[Permutation, ...]:
        if self._elements is None:
            self._enumerate()
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def index(self, g: Permutation) -> int:
        """Position of ``g`` in the element list."""
        if self._index is None:
            self._enumerate()
        if g.degree <= self.degree:
            key = g.extend(self.degree).array
        elif all(g.array[i] == i for i in range(self.degree, g.degree)):
            key = g.array[:self.degree]
        else:
            key = None
        if key not in self._index:
            raise NotAnElement(f"{g} is not in the group")
        return self._index[key]

    def __contains__(self, g: Permutation) -> bool:
        try:
            self.index(g)
        except NotAnElement:
            return False
        return True

    def element(self, i: int) -> Permutation:
        return self.elements[i]

    def multiply(self, i: int, j: int) -> int:
        """Index of ``elements[i] * elements[j]``."""
        return self.index(self.elements[i] * self.elements[j])

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(g in other for g in self.generators)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup([{gens}])"


def enumerate_elements(gens: Sequence[Permutation], cap: int | None = None) -> list[Permutation]:
    """All elements of the group generated by ``gens``, in canonical order."""
    return list(PermGroup(gens, cap=cap).elements)


def left_regular_representation(g: Permutation, group: PermGroup) -> Permutation:
    """The permutation ``i -> index(g * elements[i])`` of element indices."""
    if g not in group:
        raise NotAnElement(f"{g} is not in the group")
    elems = group.elements
    return Permutation(tuple(group.index(g * e) for e in elems))


class Coset(NamedTuple):
    representative: int
    members: tuple[int, ...]


def cosets(group: PermGroup, sub: PermGroup) -> list[Coset]:
    """Left cosets ``gH`` as sorted tuples of element indices.

    Cosets are listed by their least-index member, which is also the
    representative.
    """
    if not sub.is_subgroup_of(group):
        raise NotASubgroup("subgroup generators are not all in the group")
    sub_elems = [h.extend(group.degree) for h in sub.elements]
    assigned = [False] * group.order
    out = []
    for i, g in enumerate(group.elements):
        if assigned[i]:
            continue
        members = sorted(group.index(g * h) for h in sub_elems)
        for j in members:
            assigned[j] = True
        out.append(Coset(i, tuple(members)))
    return out


class GroupClass(NamedTuple):
    kind: str  # "cyclic", "dihedral" or "other"
    n: int

    def __str__(self) -> str:
        return f"{self.kind}({self.n})"


def classify_group(group: PermGroup) -> GroupClass:
    """Recognise cyclic and dihedral groups; everything else is "other"."""
    order = group.order
    if order <= 2:
        return GroupClass("cyclic", order)
    elems = group.elements
    orders = [g.order() for g in elems]
    if order in orders:
        return GroupClass("cyclic", order)
    if order % 2 == 0 and order >= 6:
        n = order // 2
        for r, o in zip(elems, orders):
            if o != n:
                continue
            r_inv = r.inverse()
            rotations = {(r ** k).array for k in range(n)}
            for s, os_ in zip(elems, orders):
                if os_ == 2 and s.array not in rotations and s * r * s == r_inv:
                    return GroupClass("dihedral", n)
    return GroupClass("other", order)


# named groups

def _cycle(points: Sequence[int]) -> Permutation:
    return Permutation.from_cycles([[p - 1 for p in points]])


def cyclic_generators(n: int) -> list[Permutation]:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return [Permutation.identity(1)]
    return [_cycle(range(1, n + 1))]


def dihedral_generators(n: int) -> list[Permutation]:
    """Rotation ``(1,...,n)`` and the reflection fixing point 1."""
    if n < 3:
        raise ValueError("dihedral groups here need n >= 3")
    rot = _cycle(range(1, n + 1))
    pairs = [[i - 1, n + 1 - i] for i in range(2, n // 2 + 2) if i < n + 2 - i]
    return [rot, Permutation.from_cycles(pairs, n)]


def symmetric_generators(n: int) -> list[Permutation]:
    if n < 2:
        return [Permutation.identity(1)]
    if n == 2:
        return [_cycle([1, 2])]
    return [_cycle([1, 2]), _cycle(range(1, n + 1))]


def alternating_generators(n: int) -> list[Permutation]:
    if n < 3:
        return [Permutation.identity(max(n, 1))]
    three = _cycle([1, 2, 3])
    if n == 3:
        return [three]
    long = _cycle(range(1, n + 1)) if n % 2 else _cycle(range(2, n + 1))
    return [three, long]


# quaternion units as (sign, unit) with unit in "1ijk"
_Q_UNITS = [(1, "1"), (1, "i"), (1, "j"), (1, "k"),
            (-1, "1"), (-1, "i"), (-1, "j"), (-1, "k")]
_Q_TABLE = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _quat_left(unit: str) -> Permutation:
    imgs = []
    for sign, u in _Q_UNITS:
        s2, w = _Q_TABLE[(unit, u)]
        imgs.append(_Q_UNITS.index((sign * s2, w)))
    return Permutation(tuple(imgs))


def quaternion_generators() -> list[Permutation]:
    """Left multiplication by ``i`` and ``j`` on the eight units.

    Points 1..8 stand for 1, i, j, k, -1, -i, -j, -k.
    """
    return [_quat_left("i"), _quat_left("j")]


_NAMED = re.compile(r"^(C|D|S|A|Q)(\d+)$")


def named_generators(name: str) -> list[Permutation]:
    """Generators for ``Cn``, ``Dn``, ``Sn``, ``An`` or ``Q8``."""
    m = _NAMED.match(name.strip())
    if not m:
        raise ValueError(f"unknown group name {name!r}")
    family, n = m.group(1), int(m.group(2))
    if family == "C":
        return cyclic_generators(n)
    if family == "D":
        return dihedral_generators(n)
    if family == "S":
        return symmetric_generators(n)
    if family == "A":
        return alternating_generators(n)
    if n != 8:
        raise ValueError("only Q8 is available among quaternion groups")
    return quaternion_generators()


def parse_generators(text: str) -> list[Permutation]:
    """Generators separated by ``;``, e.g. ``(1,2)(4,5);(1,5)(3,4)``."""
    parts = [p for p in text.split(";") if p.strip()]
    if not parts:
        raise CycleSyntaxError("no generators given")
    perms = [parse_cycles(p) for p in parts]
    n = _common_degree(perms)
    return [p.extend(n) for p in perms]


def parse_group_spec(text: str) -> list[Permutation]:
    """Generators from ``named:D5``, a bare name like ``A5``, or cycles."""
    text = text.strip()
    if text.startswith("named:"):
        return named_generators(text[len("named:"):])
    if text.startswith("explicit:"):
        return parse_generators(text[len("explicit:"):])
    if _NAMED.match(text):
        return named_generators(text)
    return parse_generators(text)
