"""
Counting spanning trees three ways
==================================

Kirchhoff's determinant, the biregular spectral route (read off
``Q_G(x) / x`` at 0), and closed forms for the middle layers of the
Boolean lattice and of the subspace lattice.
"""

from biregular.graphcore import make_named
from biregular.trees import (spanning_trees_biregular_spectral,
                             spanning_trees_matrixtree, trees_cube_layer,
                             trees_subspace_layer)

print("layers k-1, k of the n-cube")
for n in range(2, 7):
    for k in range(1, n // 2 + 1):
        g = make_named("cube_layer", n, k)
        print(f"  n={n} k={k}: {spanning_trees_matrixtree(g):>12} "
              f"{spanning_trees_biregular_spectral(g):>12} {trees_cube_layer(n, k):>12}")

print("lines and planes of GF(2)^4 (50 vertices)")
g = make_named("subspace_layer", 4, 2, 2)
print(f"  Kirchhoff   {spanning_trees_matrixtree(g)}")
print(f"  closed form {trees_subspace_layer(4, 2, 2)}")
