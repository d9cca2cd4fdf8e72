"""Readers and writers: JSON for groups, graphs, covers and surfaces; DOT,
graph6, OFF, OBJ and SVG.

JSON output is deterministic (fixed key order, one top-level key per line,
compact values), so writing what was read reproduces the file byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .cdc import CycleDoubleCover
from .cubicgraph import CubicGraph, EdgeColouring
from .errors import MalformedFile, SymsurfError
from .permgroup import PermGroup, parse_cycles, print_cycles
from .surface import SimplicialSurface, orient_faces


# JSON plumbing

def dumps(obj: dict) -> str:
    """One top-level key per line, values compact; keys in insertion order."""
    lines = [f"  {json.dumps(k)}: {json.dumps(v, separators=(',', ':'))}" for k, v in obj.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFile(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(obj, dict):
        raise MalformedFile("expected a JSON object at top level", line=1)
    return obj


def _need(obj: dict, key: str, kind: type | tuple):
    if key not in obj:
        raise MalformedFile(f"missing key {key!r}")
    if not isinstance(obj[key], kind):
        raise MalformedFile(f"key {key!r} has the wrong type")
    return obj[key]


def _int_rows(rows, width: int | None, what: str) -> list[tuple[int, ...]]:
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise MalformedFile(f"{what} {i} is not a list of integers")
        if width is not None and len(row) != width:
            raise MalformedFile(f"{what} {i} has {len(row)} entries, expected {width}")
        out.append(tuple(row))
    return out


# groups

def group_to_json(G: PermGroup) -> str:
    return dumps({"degree": G.degree, "generators": [print_cycles(g) for g in G.generators]})


def group_from_json(text: str) -> PermGroup:
    obj = loads(text)
    degree = _need(obj, "degree", int)
    gens = _need(obj, "generators", list)
    if not gens:
        raise MalformedFile("a group needs at least one generator")
    try:
        perms = [parse_cycles(str(t), degree) for t in gens]
    except SymsurfError as exc:
        raise MalformedFile(f"bad generator: {exc}") from exc
    return PermGroup(perms, degree)


# graphs

def graph_to_json(g: CubicGraph, colouring: EdgeColouring | None = None) -> str:
    obj: dict[str, Any] = {"nodes": list(g.nodes), "edges": [list(e) for e in g.edges]}
    if colouring is not None:
        obj["colouring"] = "".join(colouring.colours)
    return dumps(obj)


def graph_from_json(text: str) -> tuple[CubicGraph, EdgeColouring | None]:
    obj = loads(text)
    nodes = _need(obj, "nodes", list)
    edges = _int_rows(_need(obj, "edges", list), 2, "edge")
    for i, (u, v) in enumerate(edges):
        if not (0 <= u < len(nodes) and 0 <= v < len(nodes)):
            raise MalformedFile(f"edge {i} refers to a missing node")
    try:
        g = CubicGraph(tuple(str(x) for x in nodes), tuple(edges))
    except SymsurfError as exc:
        raise MalformedFile(str(exc)) from exc
    colouring = None
    if "colouring" in obj:
        text_c = _need(obj, "colouring", str)
        if len(text_c) != len(edges) or set(text_c) - set("rgb"):
            raise MalformedFile("colouring must give one of r, g, b per edge")
        colouring = EdgeColouring(tuple(text_c))
    return g, colouring


# cycle double covers

def cdc_to_json(cover: CycleDoubleCover) -> str:
    obj: dict[str, Any] = {"cycles": [list(c) for c in cover.cycles]}
    if cover.note:
        obj["note"] = cover.note
    return dumps(obj)


def cdc_from_json(text: str) -> CycleDoubleCover:
    obj = loads(text)
    cycles = _int_rows(_need(obj, "cycles", list), None, "cycle")
    return CycleDoubleCover(tuple(cycles), str(obj.get("note", "")))


# surfaces

def surface_to_json(s: SimplicialSurface) -> str:
    obj: dict[str, Any] = {"vertices": s.n_vertices,
                           "edges": [list(e) for e in s.edges],
                           "faces": [list(f) for f in s.faces]}
    if s.vertex_labels:
        obj["vertex_labels"] = list(s.vertex_labels)
    if s.face_labels:
        obj["face_labels"] = list(s.face_labels)
    return dumps(obj)


def surface_from_json(text: str) -> SimplicialSurface:
    obj = loads(text)
    n = _need(obj, "vertices", int)
    edges = _int_rows(_need(obj, "edges", list), 2, "edge")
    faces = _int_rows(_need(obj, "faces", list), 3, "face")
    vl = obj.get("vertex_labels")
    fl = obj.get("face_labels")
    if vl is not None and (not isinstance(vl, list) or len(vl) != n):
        raise MalformedFile("vertex_labels must list one label per vertex")
    if fl is not None and (not isinstance(fl, list) or len(fl) != len(faces)):
        raise MalformedFile("face_labels must list one label per face")
    return SimplicialSurface(n, tuple(edges), tuple(faces),
                             vertex_labels=tuple(map(str, vl)) if vl else None,
                             face_labels=tuple(map(str, fl)) if fl else None)


# DOT

def graph_to_dot(g: CubicGraph, colouring: EdgeColouring | None = None) -> str:
    names = {"r": "red", "g": "green", "b": "blue"}
    lines = ["graph G {"]
    for i, label in enumerate(g.nodes):
        lines.append(f"  {i} [label={json.dumps(label)}];")
    for e, (u, v) in enumerate(g.edges):
        attr = f" [color={names[colouring.colours[e]]}]" if colouring else ""
        lines.append(f"  {u} -- {v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# graph6

def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError("graph too large for graph6")


def graph_to_graph6(g: CubicGraph) -> str:
    """graph6 text (simple graphs only), without header."""
    if g.has_parallel_edges():
        raise ValueError("graph6 cannot store parallel edges")
    adj = {frozenset(e) for e in g.edges}
    bits = [1 if frozenset((i, j)) in adj else 0 for j in range(g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(int("".join(map(str, bits[k:k + 6])), 2) + 63) for k in range(0, len(bits), 6))
    return _g6_size(g.n) + body


def graph_from_graph6(text: str) -> CubicGraph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text or any(not 63 <= ord(ch) <= 126 for ch in text):
        raise MalformedFile("graph6 text has characters outside 63..126", line=1)
    data = [ord(ch) - 63 for ch in text]
    if data[0] < 63:
        n, data = data[0], data[1:]
    else:
        if len(data) < 4:
            raise MalformedFile("truncated graph6 size", line=1)
        n, data = (data[1] << 12) | (data[2] << 6) | data[3], data[4:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) != need:
        raise MalformedFile(f"graph6 body has {len(data)} bytes, expected {need}", line=1)
    bits = [(x >> s) & 1 for x in data for s in range(5, -1, -1)]
    edges = []
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return CubicGraph(tuple(str(i + 1) for i in range(n)), tuple(edges))


# meshes

def _outward(s: SimplicialSurface, coords: np.ndarray) -> list[tuple[int, int, int]]:
    tris, orientable = orient_faces(s)
    if orientable:
        vol = sum(np.dot(coords[a], np.cross(coords[b], coords[c])) for a, b, c in tris)
        if vol < 0:
            tris = [t[::-1] for t in tris]
    return tris


def _fmt(x: float) -> str:
    return f"{x:.12g}" if abs(x) > 1e-15 else "0"


def write_off(s: SimplicialSurface, coords: np.ndarray) -> str:
    """ASCII OFF; faces oriented outward when the surface is orientable."""
    coords = np.asarray(coords, float)
    lines = ["OFF", f"{s.n_vertices} {s.n_faces} {s.n_edges}"]
    lines += [" ".join(_fmt(x) for x in p) for p in coords]
    lines += [f"3 {a} {b} {c}" for a, b, c in _outward(s, coords)]
    return "\n".join(lines) + "\n"


def write_obj(s: SimplicialSurface, coords: np.ndarray) -> str:
    coords = np.asarray(coords, float)
    lines = [f"v {' '.join(_fmt(x) for x in p)}" for p in coords]
    lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in _outward(s, coords)]
    return "\n".join(lines) + "\n"


def read_off(text: str) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    """Vertex coordinates and face index lists from ASCII OFF."""
    rows = [(i + 1, ln.split("#", 1)[0].split()) for i, ln in enumerate(text.splitlines())]
    rows = [(i, r) for i, r in rows if r]
    if not rows or rows[0][1][0] != "OFF":
        raise MalformedFile("OFF header missing", line=rows[0][0] if rows else 1)
    head = rows[0][1][1:]
    rest = rows[1:]
    if not head:
        if not rest:
            raise MalformedFile("OFF counts missing", line=1)
        (line, head), rest = rest[0], rest[1:]
    try:
        nv, nf = int(head[0]), int(head[1])
    except (ValueError, IndexError):
        raise MalformedFile("OFF counts must be integers", line=rows[0][0]) from None
    if len(rest) < nv + nf:
        raise MalformedFile(f"expected {nv} vertices and {nf} faces", line=rest[-1][0] if rest else 1)
    coords = []
    for line, r in rest[:nv]:
        try:
            coords.append([float(x) for x in r[:3]])
        except ValueError:
            raise MalformedFile("bad vertex coordinates", line=line) from None
        if len(r) < 3:
            raise MalformedFile("vertex needs three coordinates", line=line)
    faces = []
    for line, r in rest[nv:nv + nf]:
        try:
            k = int(r[0])
            idx = tuple(int(x) for x in r[1:1 + k])
        except ValueError:
            raise MalformedFile("bad face line", line=line) from None
        if len(idx) != k or any(not 0 <= v < nv for v in idx):
            raise MalformedFile("face refers to a missing vertex", line=line)
        faces.append(idx)
    return np.array(coords, float).reshape(-1, 3), faces


def write_svg(g: CubicGraph, coords: np.ndarray, colouring: EdgeColouring | None = None,
              size: int = 400, margin: int = 20) -> str:
    """Straight-line drawing scaled into a square canvas."""
    coords = np.asarray(coords, float)
    lo = coords.min(axis=0)
    span = float((coords.max(axis=0) - lo).max()) or 1.0
    scale = (size - 2 * margin) / span

    def xy(p):
        x = margin + (p[0] - lo[0]) * scale
        y = size - margin - (p[1] - lo[1]) * scale  # y axis points up
        return f"{x:.3f}", f"{y:.3f}"

    names = {"r": "red", "g": "green", "b": "blue"}
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">']
    for e, (u, v) in enumerate(g.edges):
        (x1, y1), (x2, y2) = xy(coords[u]), xy(coords[v])
        colour = names[colouring.colours[e]] if colouring else "black"
        cls = f' class="colour-{colouring.colours[e]}"' if colouring else ""
        out.append(f'  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{colour}"{cls}/>')
    for i, p in enumerate(coords):
        x, y = xy(p)
        out.append(f'  <circle cx="{x}" cy="{y}" r="3"><title>{g.nodes[i]}</title></circle>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# files

def read_text(path: str | Path) -> str:
    return Path(path).read_text()


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text)
