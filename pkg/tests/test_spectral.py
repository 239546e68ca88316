from fractions import Fraction
from math import comb

import pytest

from biregular.errors import NotBiregular, NotConnected
from biregular.exact import ExactMatrix, Poly, charpoly
from biregular.graphcore import classify, make_named
from biregular.harness import enumerate_connected
from biregular.spectral import (build_matrices, charpoly_NL, even_part,
                                q_charpoly_from_a, verify_biregular_identity,
                                zero_multiplicities)

x = Poly.x()
BIREGULAR_FIXTURES = ["K13", "K23", "cube42", "sub212"]


def biregular_sweep(n_max):
    for n in range(2, n_max + 1):
        for g in enumerate_connected(n, dedup=True):
            if classify(g).kind == "biregular":
                yield g


def test_transport_known_values(named):
    assert q_charpoly_from_a(named["K13"]) == x * (x - 4) * (x - 1) ** 2
    assert q_charpoly_from_a(named["K23"]) == x * (x - 5) * (x - 2) ** 2 * (x - 3)
    psi, shift = even_part(named["K13"])
    assert psi == x - 3 and shift == 2


def test_transport_sweep(named):
    graphs = list(biregular_sweep(7)) + [named[k] for k in BIREGULAR_FIXTURES]
    assert len(graphs) > 10
    for g in graphs:
        c = classify(g)
        qg = q_charpoly_from_a(g)
        cq = charpoly(build_matrices(g).Q)
        assert qg == cq
        assert verify_biregular_identity(g).all()
        m1, m2 = zero_multiplicities(g)
        assert (m1, m2) == (cq.root_multiplicity(c.d1), cq.root_multiplicity(c.d2))
        # largest eigenvalue d1 + d2 and smallest 0
        assert (x * (x - c.d1 - c.d2)).divides(cq)


def test_regular_bipartite_accepted(named):
    # K_{3,3}: d1 = d2 = 3
    g = named["K33"]
    assert verify_biregular_identity(g).all()
    assert q_charpoly_from_a(g) == charpoly(build_matrices(g).Q)


def test_bipartite_spectrum_symmetry(named):
    for key in ["K13", "K23", "K33", "C4", "P4", "cube42", "sub212"]:
        phi = charpoly(build_matrices(named[key]).A)
        n = named[key].n
        flipped = Poly([c * (-1) ** i for i, c in enumerate(phi.coeffs)])
        assert phi == flipped * (-1) ** n


def test_transport_rejects(named):
    with pytest.raises(NotBiregular):
        q_charpoly_from_a(named["paw"])
    with pytest.raises(NotBiregular):
        q_charpoly_from_a(named["C5"])  # regular but odd cycle
    from biregular.graphcore import Graph
    with pytest.raises(NotConnected):
        q_charpoly_from_a(Graph.from_edges(6, [(0, 1), (0, 2), (3, 5), (4, 5)]))


def test_identity_rejects_off_class(named):
    with pytest.raises(NotBiregular):
        verify_biregular_identity(named["P4"])


def test_charpoly_nl(named):
    # K_{1,3}: normalized Laplacian eigenvalues 0, 1, 1, 2
    assert charpoly_NL(named["K13"]) == Poly.from_roots([0, 1, 1, 2])
    # K_4: 0 and 4/3 (three times)
    assert charpoly_NL(named["K4"]) == Poly.from_roots([0] + [Fraction(4, 3)] * 3)
    for g in named.values():
        b = build_matrices(g)
        assert charpoly_NL(g) == charpoly(b.nl_similar())


def stanley_psi(n, k):
    y = Poly.x()
    psi = Poly([1])
    for i in range(1, k + 1):
        mult = comb(n, k - i) - (comb(n, k - i - 1) if k - i - 1 >= 0 else 0)
        psi = psi * (y - i * (n - 2 * k + i + 1)) ** mult
    return psi


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 7) for k in range(1, n // 2 + 1)])
def test_cube_layer_squared_spectrum(n, k):
    psi, shift = even_part(make_named("cube_layer", n, k))
    assert psi == stanley_psi(n, k)
    assert shift == comb(n, k) - comb(n, k - 1)
