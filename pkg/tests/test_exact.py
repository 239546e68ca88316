from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from biregular.errors import InexactDivision
from biregular.exact import (ExactMatrix, Poly, bareiss_determinant, charpoly,
                             determinant, gauss_determinant, minpoly,
                             null_space, rank, rref, solve_columns,
                             solve_kernel)

from conftest import leibniz_det

small_int = st.integers(-6, 6)


def int_matrix(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(small_int, min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=150, deadline=None)
@given(int_matrix())
def test_determinants_agree_with_leibniz(rows):
    expected = leibniz_det(rows)
    assert bareiss_determinant(rows) == expected
    assert gauss_determinant([[Fraction(x) for x in r] for r in rows]) == expected
    assert determinant(ExactMatrix(rows)) == expected


@settings(max_examples=100, deadline=None)
@given(int_matrix())
def test_charpoly_cayley_hamilton_and_minpoly(rows):
    m = ExactMatrix(rows)
    n = len(rows)
    cp = charpoly(m)
    assert cp.degree == n and cp.lead == 1 and cp.is_integer
    assert cp(m).is_zero()
    # constant term is (-1)^n det
    assert cp[0] == (-1) ** n * leibniz_det(rows)
    mp = minpoly(m)
    assert mp.lead == 1 and mp(m).is_zero()
    assert mp.divides(cp)
    # no proper monic divisor of lower degree annihilates: check via the
    # independence of I, M, ..., M^(deg-1)
    powers = [ExactMatrix.identity(n)]
    for _ in range(mp.degree - 1):
        powers.append(powers[-1] @ m)
    assert rank([p.flatten() for p in powers]) == mp.degree


def test_charpoly_known():
    p4 = ExactMatrix([[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]])
    assert charpoly(p4) == Poly([1, 0, -3, 0, 1])
    assert minpoly(p4) == Poly([1, 0, -3, 0, 1])
    k3 = ExactMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert charpoly(k3) == Poly.from_roots([2, -1, -1])
    assert minpoly(k3) == Poly([-2, -1, 1])


def test_rational_matrix_charpoly():
    m = ExactMatrix([[Fraction(1, 2), 1], [0, Fraction(1, 3)]])
    assert charpoly(m) == Poly.from_roots([Fraction(1, 2), Fraction(1, 3)])


def test_rref_rank_nullspace():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank(rows) == 2
    ns = null_space(rows, 3)
    assert len(ns) == 1
    for r in rows:
        assert sum(a * b for a, b in zip(r, ns[0])) == 0
    red, pivots = rref(rows)
    assert list(pivots) == [0, 1]


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_null_space_property(nr, nc, data):
    rows = [data.draw(st.lists(small_int, min_size=nc, max_size=nc)) for _ in range(nr)]
    ns = null_space(rows, nc)
    assert len(ns) == nc - rank(rows)
    for v in ns:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) == 0


def test_solve_kernel_and_columns():
    i2 = ExactMatrix.identity(2)
    a = ExactMatrix([[0, 1], [1, 0]])
    assert solve_kernel([i2, a, a @ a]) != []
    assert solve_kernel([i2, a]) == []
    cols = [[1, 0], [0, 1]]
    assert solve_columns(cols, [[3, 4]]) == [[3, 4]]
    assert solve_columns([[1, 1]], [[1, 2]]) is None


def test_poly_arithmetic():
    x = Poly.x()
    p = (x - 1) * (x + 2)
    q, r = p.divmod(x - 1)
    assert q == x + 2 and r.is_zero()
    assert p.exact_div(x + 2) == x - 1
    with pytest.raises(InexactDivision):
        p.exact_div(x - 3)
    assert (x ** 2).compose(x + 1) == x * x + 2 * x + 1
    assert Poly([0, 0, 2, 0, 1]).is_even()
    assert Poly([5, 0, 2, 0, 1]).deinterleave_even() == Poly([5, 2, 1])
    assert Poly.from_roots([2, 2, 3]).root_multiplicity(2) == 2
    assert Poly([2, 4]).primitive() == Poly([1, 2])
    assert Poly([2, 4]).monic() == Poly([Fraction(1, 2), 1])
    assert str(Poly([0, -2, 0, 1])) == "x^3 - 2*x"


@settings(max_examples=100, deadline=None)
@given(st.lists(small_int, max_size=5), st.lists(small_int, min_size=1, max_size=4))
def test_poly_division_identity(a, b):
    p, d = Poly(a), Poly(b)
    if d.is_zero():
        return
    q, r = p.divmod(d)
    assert q * d + r == p
    assert r.is_zero() or r.degree < d.degree


@settings(max_examples=60, deadline=None)
@given(st.lists(small_int, max_size=4), int_matrix(3))
def test_poly_matrix_evaluation_is_homomorphic(c, rows):
    p, m = Poly(c), ExactMatrix(rows)
    q = p * p + Poly([1, 1])
    assert q(m) == p(m) @ p(m) + m + ExactMatrix.identity(len(rows))
