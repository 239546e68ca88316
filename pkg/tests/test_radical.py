from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from biregular.errors import IsolatedVertex
from biregular.graphcore import Graph, make_named
from biregular.radical import (RadicalScalar, check_eigen_condition,
                               radical_from_json, sqfree_decompose)

S = RadicalScalar.sqrt


def test_sqfree_decompose():
    assert sqfree_decompose(12) == (2, 3)
    assert sqfree_decompose(1) == (1, 1)
    assert sqfree_decompose(72) == (6, 2)


def test_basic_identities():
    assert S(4) == 2
    assert S(2) * S(2) == 2
    assert S(6) == S(2) * S(3)
    assert S(8) == 2 * S(2)
    assert (S(2) + S(3)).inverse() == S(3) - S(2)
    assert S(3) / 3 == RadicalScalar({3: Fraction(1, 3)})
    assert not S(2).is_rational() and S(9).is_rational()
    assert S(2) != 1


radicals = st.dictionaries(st.sampled_from([1, 2, 3, 5, 6, 7, 10]),
                           st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7)),
                           max_size=4).map(RadicalScalar)


@settings(max_examples=200, deadline=None)
@given(radicals, radicals, radicals)
def test_field_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b - b == a
    assert abs(float(a * b) - float(a) * float(b)) < 1e-6 * (1 + abs(float(a) * float(b)))


@settings(max_examples=200, deadline=None)
@given(radicals)
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
        return
    assert a * a.inverse() == 1


@settings(max_examples=100, deadline=None)
@given(radicals)
def test_json_roundtrip(a):
    assert radical_from_json(a.to_json()) == a


def test_eigen_conditions(named):
    assert check_eigen_condition(named["K13"], "DSQRT1_A") == S(3)
    assert check_eigen_condition(named["K13"], "DSQRT1_A2") == 3
    assert check_eigen_condition(named["paw"], "DSQRT1_A") is None
    assert check_eigen_condition(named["K4"], "ONE_NL") == 0
    assert check_eigen_condition(named["K13"], "ONE_NL") is None
    assert check_eigen_condition(named["K4"], "DSQRT1_Q") == 6
    with pytest.raises(IsolatedVertex):
        check_eigen_condition(Graph.from_edges(3, [(0, 1)]), "DSQRT1_A")
