"""
When is the all-ones matrix a polynomial in A?
==============================================

Exactly for connected regular graphs, and then the minimum-degree
polynomial is ``m_A(x) / (x - k)`` up to scale.  Graphs with three
distinct eigenvalues are strongly regular and their parameters drop out.
"""

from biregular.graphcore import classify, make_named
from biregular.harness import enumerate_connected
from biregular.relations import j_relation, solve_f_equals_J

for name in ["complete", "cycle", "petersen"]:
    g = make_named(name, 5) if name != "petersen" else make_named("petersen")
    rep = j_relation(g)
    print(f"{name:9s} k={rep.k} m'_A={rep.m_prime} c={rep.c} srg={rep.srg_params}")

regular = other = 0
for n in range(2, 7):
    for g in enumerate_connected(n, dedup=True):
        has = solve_f_equals_J(g) is not None
        assert has == (classify(g).kind == "regular")
        regular += has
        other += not has
print(f"connected graphs n<=6: {regular} regular (f exists), {other} others (no f)")
