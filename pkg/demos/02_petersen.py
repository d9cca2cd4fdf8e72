"""The Petersen graph: no 3-edge-colouring, but three cycle double covers.

One of them glues into the hemi-icosahedron, a projective plane with
60 symmetries.
"""

import time

from symsurf.cdc import family_cdc, verify_cdc
from symsurf.cubicgraph import find_tait_colouring
from symsurf.fixtures import petersen_graph
from symsurf.surface import (euler_characteristic, orient_faces, surface_automorphisms,
                             surface_from_cdc, vertex_counter)

g = petersen_graph()
start = time.perf_counter()
print("3-edge-colouring:", find_tait_colouring(g),
      f"(search took {time.perf_counter() - start:.2f} s)")

for which in (1, 2, 3):
    cover = family_cdc("petersen", which=which)
    s = surface_from_cdc(g, cover)
    print(f"cover {which}: valid={verify_cdc(g, cover).valid}, lengths={sorted(cover.lengths())}, "
          f"chi={euler_characteristic(s)}, orientable={orient_faces(s)[1]}, "
          f"degrees={vertex_counter(s)}, symmetries={surface_automorphisms(s).order}")
