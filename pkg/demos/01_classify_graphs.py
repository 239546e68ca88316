"""
Regular, biregular, or neither
==============================

Read a few graphs, classify them, and test whether ``D^{1/2} 1`` is an
eigenvector of the adjacency matrix.  That eigenvector condition holds
exactly for the regular and biregular graphs.
"""

from biregular.graphcore import classify, make_named, neighbor_degree_sums, parse_graph
from biregular.radical import check_eigen_condition

# graph6 strings, edge lists and named families all produce the same Graph type
graphs = {
    "K4 (graph6 'C~')": parse_graph("C~"),
    "path 0-1-2-3": parse_graph("0-1,1-2,2-3"),
    "star K_{1,3}": make_named("star", 3),
    "K_{2,3}": make_named("complete_bipartite", 2, 3),
    "paw": make_named("paw"),
}

for name, g in graphs.items():
    cls = classify(g)
    eig = check_eigen_condition(g, "DSQRT1_A")
    print(f"{name:18s} {cls.describe():22s} neighbour-degree sums {neighbor_degree_sums(g)}")
    # the eigenvalue is exact; for K_{1,3} it is sqrt(3), not 1.732...
    print(f"{'':18s} D^(1/2)1 eigenvalue of A: {eig}")
