"""Build an equilateral triangulated sphere and write it as an OFF mesh.

Every edge has length 1; the mesh keeps an n-fold (X family) or
2n-fold (Y family) symmetry.
"""

import sys

from symsurf import io
from symsurf.embed import (FamilyParams, build_x_family, build_y_family, embedding_symmetries,
                           valid_twists, verify_unit_edges)
from symsurf.surface import euler_characteristic

n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
l = valid_twists(n)[0]
p = FamilyParams(n, 1, l)
print(f"n={n}: allowed twists {valid_twists(n)}, using l={l}")

for name, build in (("X", build_x_family), ("Y", build_y_family)):
    s, coords = build(p)
    rep = verify_unit_edges(s, coords)
    print(f"{name}: {s.n_vertices} vertices, {s.n_faces} faces, chi={euler_characteristic(s)}, "
          f"max edge error {rep.max_error:.1e}, symmetries {embedding_symmetries(s, coords).order}")
    path = f"sphere_{name.lower()}_{n}.off"
    with open(path, "w") as fh:
        fh.write(io.write_off(s, coords))
    print(f"   wrote {path}")
