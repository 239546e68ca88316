"""
Signless Laplacian spectrum from the adjacency spectrum
=======================================================

For a connected biregular graph with degrees d1 on the larger part,
``charpoly(A)(x) = x^(n1-n2) psi(x^2)`` and then
``charpoly(Q)(x) = (x-d1)^(n1-n2) psi((x-d1)(x-d2))``.

The transport below is done purely with polynomial arithmetic; no
eigenvalue is ever approximated.
"""

from biregular.exact import charpoly
from biregular.graphcore import classify, make_named
from biregular.spectral import (build_matrices, even_part, q_charpoly_from_a,
                                verify_biregular_identity, zero_multiplicities)

for family, params in [("star", (3,)), ("complete_bipartite", (2, 3)), ("cube_layer", (4, 2))]:
    g = make_named(family, *params)
    c = classify(g)
    phi = charpoly(build_matrices(g).A)
    psi, shift = even_part(g)
    qg = q_charpoly_from_a(g)
    print(f"{family}{params}: {c.describe()}")
    print(f"  charpoly(A)          = {phi}")
    print(f"  psi(y), shift        = {psi.format('y')}, {shift}")
    print(f"  transported Q_G      = {qg}")
    print(f"  matches charpoly(Q)  = {qg == charpoly(build_matrices(g).Q)}")
    print(f"  matrix identities    = {verify_biregular_identity(g)}")
    print(f"  mult. of d1, d2 in Q = {zero_multiplicities(g)}")
