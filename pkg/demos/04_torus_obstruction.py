"""The 7-vertex torus cannot be built from unit triangles in space.

Its vertex graph is K7, so any equilateral realisation would contain K5 with
all edges of length 1, which does not fit in three dimensions.
"""

from symsurf.embed import k5_obstruction
from symsurf.fixtures import surface_fixture
from symsurf.surface import euler_characteristic, vertex_graph

for name in ("torus7", "octahedron"):
    s = surface_fixture(name)
    vg = vertex_graph(s)
    print(f"{name}: chi={euler_characteristic(s)}, vertex graph {vg.n} nodes / {vg.m} edges, "
          f"obstructed={k5_obstruction(s).obstructed}")
