"""Walk one group all the way to a surface.

Start from the quaternion group Q8, build its cubic Frucht graph, check that
the graph's symmetries are exactly Q8, read off a cycle double cover from the
3-edge-colouring, and glue its cycles into a closed surface.
"""

from symsurf.autgrp import certify_isomorphism
from symsurf.cdc import cdc_from_colouring
from symsurf.construct import frucht_graph, frucht_lift
from symsurf.cubicgraph import structural_report
from symsurf.permgroup import PermGroup, named_generators
from symsurf.surface import (euler_characteristic, orient_faces, surface_automorphisms,
                             surface_from_cdc, vertex_counter)

G = PermGroup(named_generators("Q8"))
print(f"group of order {G.order} with {len(G.generators)} generators")

g, colouring = frucht_graph(G, G.generators, "simplified")
rep = structural_report(g)
print(f"graph: {g.n} nodes, {g.m} edges, cubic={rep.is_cubic}, bridgeless={rep.is_bridgeless}")

cert = certify_isomorphism(g, G, frucht_lift(g, G, "simplified"))
print(f"symmetry group order {cert.aut_order}, certified={cert.certified}")

cover = cdc_from_colouring(g, colouring)
s = surface_from_cdc(g, cover)
print(f"surface: {s.n_vertices} vertices, {s.n_edges} edges, {s.n_faces} faces")
print(f"euler characteristic {euler_characteristic(s)}, orientable={orient_faces(s)[1]}")
print(f"vertex degrees {vertex_counter(s)}")
print(f"surface symmetries {surface_automorphisms(s).order}")
