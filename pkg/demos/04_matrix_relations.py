"""
Polynomial relations between graph matrices
===========================================

Search for ``f(X) = g(Y)`` among the adjacency matrix A, the signless
Laplacian Q and the Laplacian L, and for power relations ``X^r = f(Y)``
which may also involve the normalized Laplacian NL.
"""

from biregular.exact import Poly
from biregular.graphcore import make_named
from biregular.relations import (eigen_transport_check, find_relation,
                                 power_relation_exists,
                                 verify_polynomial_identity)

# The path on four vertices carries a cubic relation between A and Q.
p4 = make_named("path", 4)
rep = find_relation(p4, "A", "Q")
for f, g in rep.pairs:
    print(f"P4: {f} = {g.format('y')}   (x = A, y = Q)")
    print("    eigenvalue multisets agree:", eigen_transport_check(f, "A", g, "Q", p4))

# A five-vertex graph for which the seven matrices I, A, A^2, A^3, Q, Q^2, Q^3
# are linearly independent: no relation at all.
print("A_G kernel dimension:", find_relation(make_named("paper_A_G"), "A", "Q").kernel_dim)

# A non-biregular graph with relations whose coefficients have mixed signs.
gp = make_named("paper_G_prime")
print("G' 3A^2-3A = -L^3+9L^2-20L+12I:",
      verify_polynomial_identity(Poly([0, -3, 3]), "A", Poly([12, -20, 9, -1]), "L", gp))

# Power relations; the NL case returns coefficients in a radical field.
print("K23: A^2 =", power_relation_exists(make_named("complete_bipartite", 2, 3), "A", "Q", 2), "at Q")
print("K13: NL =", power_relation_exists(make_named("star", 3), "NL", "A", 1), "at A")
print("paw: A^r = f(Q) for r<=4:",
      [power_relation_exists(make_named("paw"), "A", "Q", r) for r in range(1, 5)])
