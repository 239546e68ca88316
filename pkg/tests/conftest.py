from itertools import combinations, permutations

import pytest

from biregular.graphcore import Graph, make_named


def leibniz_det(rows):
    """Determinant by the permutation expansion; independent oracle."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, p in enumerate(perm):
            term *= rows[i][p]
            if term == 0:
                break
        total += term
    return total


def brute_force_spanning_trees(g: Graph) -> int:
    """Count (n-1)-edge subsets that are acyclic and hence spanning."""
    edges = g.edges()
    count = 0
    for subset in combinations(edges, g.n - 1):
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        count += ok
    return count


@pytest.fixture(scope="session")
def named():
    return {
        "K13": make_named("star", 3),
        "K23": make_named("complete_bipartite", 2, 3),
        "K33": make_named("complete_bipartite", 3, 3),
        "K4": make_named("complete", 4),
        "C4": make_named("cycle", 4),
        "C5": make_named("cycle", 5),
        "P3": make_named("path", 3),
        "P4": make_named("path", 4),
        "paw": make_named("paw"),
        "petersen": make_named("petersen"),
        "A_G": make_named("paper_A_G"),
        "G_prime": make_named("paper_G_prime"),
        "cube42": make_named("cube_layer", 4, 2),
        "sub212": make_named("subspace_layer", 2, 1, 2),
    }


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
