"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails (a JSON report is
printed), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .autgrp import automorphism_group, certify_isomorphism
from .cdc import (FAMILY_KINDS, cdc_from_colouring, family_cdc, is_invariant, verify_cdc)
from .construct import (cayley_colouring, cayley_graph, frucht_graph, frucht_lift, gamma_cn,
                        gamma_dn, left_multiplication_lift, orbital_graph)
from .cubicgraph import find_tait_colouring, structural_report
from .embed import (FamilyParams, build_family, embedding_symmetries, self_intersections,
                    tutte_embedding, valid_twists, verify_unit_edges)
from .errors import (ImproperColouring, InvalidCover, NotAutomorphism, SymsurfError,
                     TranscribedCoverInvalid)
from .fixtures import GRAPH_FIXTURES, SURFACE_FIXTURES, surface_fixture
from .permgroup import PermGroup, classify_group, parse_generators, parse_group_spec
from .surface import (euler_characteristic, is_vertex_faithful, surface_automorphisms,
                      surface_from_cdc, validate_surface, vertex_counter)

FRUCHT_VARIANTS = ("original", "simplified", "modified")
CONSTRUCTIONS = FRUCHT_VARIANTS + ("cyclic", "dihedral", "cayley", "orbital")

_VERIFICATION_ERRORS = (ImproperColouring, InvalidCover, NotAutomorphism, TranscribedCoverInvalid)


class VerificationFailed(Exception):
    def __init__(self, report: dict):
        super().__init__(report.get("error", "verification failed"))
        self.report = report


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2, default=str))


# input helpers

def load_graph(arg: str):
    if arg.startswith("fixture:"):
        name = arg[len("fixture:"):]
        if name not in GRAPH_FIXTURES:
            raise SymsurfError(f"no graph fixture {name!r}; choose from {sorted(GRAPH_FIXTURES)}")
        return GRAPH_FIXTURES[name](), None
    text = io.read_text(arg)
    if text.lstrip().startswith("{"):
        return io.graph_from_json(text)
    return io.graph_from_graph6(text), None


def load_surface(arg: str):
    if arg.startswith("fixture:"):
        name = arg[len("fixture:"):]
        if name not in SURFACE_FIXTURES:
            raise SymsurfError(f"no surface fixture {name!r}; choose from {list(SURFACE_FIXTURES)}")
        return surface_fixture(name)
    return io.surface_from_json(io.read_text(arg))


def _group(text: str) -> PermGroup:
    return PermGroup(parse_group_spec(text))


def _family_n(args, group: PermGroup | None, kind: str) -> int:
    if args.n is not None:
        return args.n
    if group is None:
        raise SymsurfError(f"--n or --group is needed for the {kind} construction")
    tag = classify_group(group)
    want = "cyclic" if kind == "cyclic" else "dihedral"
    if tag.kind != want:
        raise SymsurfError(f"group is {tag}, not {want}")
    return tag.n


def build_graph(args):
    """Graph, optional colouring and (group, lift) for certification."""
    group = _group(args.group) if args.group else None
    c = args.construction
    if c in FRUCHT_VARIANTS:
        if group is None:
            raise SymsurfError("--group is needed for Frucht constructions")
        g, col = frucht_graph(group, group.generators, c)
        return g, col, group, frucht_lift(g, group, c)
    if c == "cyclic":
        return gamma_cn(_family_n(args, group, c)), None, None, None
    if c == "dihedral":
        return gamma_dn(_family_n(args, group, c)), None, None, None
    if group is None or not args.s:
        raise SymsurfError(f"--group and --s are needed for the {c} construction")
    s = parse_generators(args.s)
    if c == "cayley":
        g = cayley_graph(group, s)
        try:
            col = cayley_colouring(group, s, g)
        except SymsurfError:
            col = None
        return g, col, group, left_multiplication_lift(g, group)
    if not args.subgroup:
        raise SymsurfError("--subgroup is needed for the orbital construction")
    sub = PermGroup(parse_generators(args.subgroup), group.degree)
    return orbital_graph(group, sub, s), None, None, None


# subcommands

def cmd_build_graph(args) -> int:
    g, col, _, _ = build_graph(args)
    io.write_text(args.output, io.graph_to_json(g, col))
    _emit({"nodes": g.n, "edges": g.m, "coloured": col is not None,
           **structural_report(g).as_dict(), "output": args.output})
    return 0


def cmd_aut(args) -> int:
    g, _ = load_graph(args.graph)
    aut = automorphism_group(g)
    report = {"order": aut.order, "orbits": aut.orbit_count,
              "generators": [str(p) for p in aut.generators]}
    if args.group:
        group = _group(args.group)
        if args.construction not in FRUCHT_VARIANTS + ("cayley",):
            raise SymsurfError("--construction must be a Frucht variant or cayley to certify")
        lift = (frucht_lift(g, group, args.construction) if args.construction != "cayley"
                else left_multiplication_lift(g, group))
        cert = certify_isomorphism(g, group, lift, aut)
        report["certificate"] = cert.as_dict()
        if not cert.certified:
            raise VerificationFailed(report)
    _emit(report)
    return 0


def cmd_colour(args) -> int:
    g, _ = load_graph(args.graph)
    col = find_tait_colouring(g)
    if col is None:
        raise VerificationFailed({"result": "NoColouring", "nodes": g.n})
    if args.output:
        io.write_text(args.output, io.graph_to_json(g, col))
    _emit({"result": "Colouring", "colours": "".join(col.colours)})
    return 0


def _cover_for(g, col, args):
    if args.from_colouring:
        col = col or find_tait_colouring(g)
        if col is None:
            raise VerificationFailed({"result": "NoColouring"})
        return cdc_from_colouring(g, col)
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.which is not None:
        params["which"] = args.which
    if args.group:
        group = _group(args.group)
        params["group"] = group
        params["gens"] = list(group.generators)
    if args.s:
        params["s"] = parse_generators(args.s)
    return family_cdc(args.family, g, **params)


def cmd_cdc(args) -> int:
    g, col = load_graph(args.graph)
    cover = _cover_for(g, col, args)
    report = verify_cdc(g, cover)
    out = {"cycles": len(cover), "lengths": sorted(cover.lengths()), **report.as_dict()}
    if cover.note:
        out["note"] = cover.note
    if not report.valid:
        raise VerificationFailed(out)
    if args.output:
        io.write_text(args.output, io.cdc_to_json(cover))
    _emit(out)
    return 0


def _surface_summary(s) -> dict:
    aut = surface_automorphisms(s)
    return {"vertices": s.n_vertices, "edges": s.n_edges, "faces": s.n_faces,
            "euler_characteristic": euler_characteristic(s),
            "vertex_counter": str(vertex_counter(s)),
            "vertex_faithful": is_vertex_faithful(s),
            "aut_order": aut.order}


def cmd_surface(args) -> int:
    g, _ = load_graph(args.graph)
    cover = io.cdc_from_json(io.read_text(args.cdc))
    s = surface_from_cdc(g, cover)
    report = validate_surface(s)
    if not report.ok:
        raise VerificationFailed(report.as_dict())
    if args.output:
        io.write_text(args.output, io.surface_to_json(s))
    _emit(_surface_summary(s))
    return 0


def cmd_embed(args) -> int:
    p = FamilyParams(args.n, args.k, args.l)
    s, coords = build_family(args.family, p)
    check = verify_unit_edges(s, coords)
    writer = io.write_obj if str(args.output).endswith(".obj") else io.write_off
    io.write_text(args.output, writer(s, coords))
    if args.surface_output:
        io.write_text(args.surface_output, io.surface_to_json(s))
    report = {"family": args.family, "n": p.n, "k": p.k, "l": p.l,
              "vertices": s.n_vertices, "edges": s.n_edges, "faces": s.n_faces,
              "euler_characteristic": euler_characteristic(s),
              "unit_edges": check.as_dict(),
              "symmetry_order": embedding_symmetries(s, coords).order,
              "self_intersections": len(self_intersections(s, coords)),
              "valid_twists": valid_twists(p.n), "output": args.output}
    if not check.ok:
        raise VerificationFailed(report)
    _emit(report)
    return 0


def _parse_points(text: str) -> list[tuple[float, float]]:
    pts = []
    for part in text.split(";"):
        x, y = part.split(",")
        pts.append((float(x), float(y)))
    return pts


def cmd_tutte(args) -> int:
    g, col = load_graph(args.graph)
    outer = []
    for tok in args.outer.split(","):
        tok = tok.strip()
        outer.append(g.index(tok) if tok in g.label_index else int(tok))
    if args.polygon:
        polygon = _parse_points(args.polygon)
    else:
        t = 2 * np.pi * np.arange(len(outer)) / len(outer)
        polygon = list(zip(np.cos(t), np.sin(t)))
    coords = tutte_embedding(g, outer, polygon)
    if args.output:
        io.write_text(args.output, io.write_svg(g, coords, col))
    _emit({"coordinates": {g.nodes[i]: [round(float(x), 12) for x in coords[i]]
                           for i in range(g.n)}, "output": args.output})
    return 0


def cmd_verify(args) -> int:
    text = None if args.file.startswith("fixture:") else io.read_text(args.file)
    if text is not None and '"faces"' not in text:
        # a graph, optionally with a cover
        g, _ = io.graph_from_json(text)
        report = {"structure": structural_report(g).as_dict()}
        ok = True
        if args.cdc:
            cdc_report = verify_cdc(g, io.cdc_from_json(io.read_text(args.cdc)))
            report["cdc"] = cdc_report.as_dict()
            ok = cdc_report.valid
        if not ok:
            raise VerificationFailed(report)
        _emit(report)
        return 0
    s = load_surface(args.file)
    report = {"surface": validate_surface(s).as_dict(),
              "euler_characteristic": euler_characteristic(s)}
    ok = report["surface"]["ok"]
    if args.embedding:
        coords, faces = io.read_off(io.read_text(args.embedding))
        unit = verify_unit_edges(s, coords, args.tol)
        report["unit_edges"] = unit.as_dict()
        same = sorted(tuple(sorted(f)) for f in faces) == sorted(s.vertex_triples())
        report["faces_match"] = same
        ok = ok and unit.ok and same
    if not ok:
        raise VerificationFailed(report)
    _emit(report)
    return 0


def cmd_pipeline(args) -> int:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    g, col, group, lift = build_graph(args)
    if args.construction in ("cyclic", "dihedral"):
        n = g.n // (6 if args.construction == "cyclic" else 4)
        cover = family_cdc(args.construction, g, n=n)
    elif args.construction == "cayley":
        cover = family_cdc("cayley", g, group=group, s=parse_generators(args.s))
    elif col is not None:
        cover = cdc_from_colouring(g, col)
    else:
        raise SymsurfError(f"no cover is available for the {args.construction} construction")
    s = surface_from_cdc(g, cover)
    files = {"graph": out / "graph.json", "cdc": out / "cdc.json", "surface": out / "surface.json"}
    io.write_text(files["graph"], io.graph_to_json(g, col))
    io.write_text(files["cdc"], io.cdc_to_json(cover))
    io.write_text(files["surface"], io.surface_to_json(s))

    graph_aut = automorphism_group(g)
    summary = {"graph_nodes": g.n, "graph_edges": g.m, "graph_aut_order": graph_aut.order,
               "cdc_valid": verify_cdc(g, cover).valid,
               "surface_valid": validate_surface(s).ok, **_surface_summary(s)}
    if lift is not None:
        cert = certify_isomorphism(g, group, lift, graph_aut)
        summary["certified"] = cert.certified
        summary["cover_invariant"] = is_invariant(g, cover, [lift(x) for x in group.generators])
    if args.construction in ("cyclic", "dihedral"):
        twists = valid_twists(n)
        if twists and (args.construction == "cyclic" or n >= 4):
            fs, coords = build_family(args.construction, FamilyParams(n, 0, twists[0]))
            files["mesh"] = out / "mesh.off"
            files["mesh_surface"] = out / "mesh_surface.json"
            io.write_text(files["mesh"], io.write_off(fs, coords))
            io.write_text(files["mesh_surface"], io.surface_to_json(fs))
            summary["mesh_unit_edges"] = verify_unit_edges(fs, coords).ok
            summary["mesh_symmetry_order"] = embedding_symmetries(fs, coords).order

    manifest = {"input": {"group": args.group, "construction": args.construction, "n": args.n},
                "outputs": {k: str(v) for k, v in files.items()}, "summary": summary}
    io.write_text(out / "manifest.json", io.dumps(manifest))
    _emit(manifest)
    checks = [v for k, v in summary.items() if isinstance(v, bool) and k != "vertex_faithful"]
    if not all(checks):
        raise VerificationFailed(manifest)
    return 0


# argument parsing

def _add_construction(p, required=True):
    p.add_argument("--group", help='group, e.g. "named:D5", "A5" or "(1,2);(1,2,3)"')
    p.add_argument("--construction", choices=CONSTRUCTIONS, required=required)
    p.add_argument("--n", type=int, help="family size for cyclic/dihedral")
    p.add_argument("--s", help="connection set, ';'-separated cycles")
    p.add_argument("--subgroup", help="point stabiliser for the orbital construction")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symsurf", description=(
        "Groups to cubic graphs, cycle double covers, surfaces and equilateral embeddings."))
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-graph", help="build a cubic graph from a group or family")
    _add_construction(p)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_build_graph)

    p = sub.add_parser("aut", help="automorphism group of a graph")
    p.add_argument("graph", help="graph JSON, graph6 file or fixture:NAME")
    p.add_argument("--group", help="certify against this group")
    p.add_argument("--construction", choices=FRUCHT_VARIANTS + ("cayley",), default="simplified")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("colour", help="search for a 3-edge-colouring")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("cdc", help="cycle double cover of a graph")
    p.add_argument("graph")
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--from-colouring", action="store_true")
    how.add_argument("--family", choices=FAMILY_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--which", type=int, help="stored Petersen cover, 1..3")
    p.add_argument("--group")
    p.add_argument("--s")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cdc)

    p = sub.add_parser("surface", help="surface from a graph and a cover")
    p.add_argument("graph")
    p.add_argument("cdc")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("embed", help="equilateral embedding of a surface family")
    p.add_argument("--family", choices=("cyclic", "dihedral"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("-o", "--output", required=True, help=".off or .obj")
    p.add_argument("--surface-output")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("tutte", help="barycentric drawing with a fixed outer face")
    p.add_argument("graph")
    p.add_argument("--outer", required=True, help="comma-separated node labels")
    p.add_argument("--polygon", help='outer positions "x,y;x,y;..." (default: regular polygon)')
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("verify", help="check a graph, cover, surface or mesh")
    p.add_argument("file", help="graph JSON, surface JSON or fixture:NAME")
    p.add_argument("--cdc")
    p.add_argument("--embedding", help="OFF mesh of the surface")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pipeline", help="group to graph, cover, surface and mesh")
    _add_construction(p)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_pipeline)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except VerificationFailed as exc:
        _emit(exc.report)
        return 1
    except _VERIFICATION_ERRORS as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 1
    except (SymsurfError, ValueError, OSError) as exc:
        print(f"symsurf {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
