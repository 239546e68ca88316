"""Spanning-tree counts: Kirchhoff determinant, the biregular spectral
route, and closed forms for the cube and subspace layers."""

from __future__ import annotations

from math import comb

from .errors import BadParams, InexactDivision, NotBiregular
from .exact import Poly, bareiss_determinant
from .graphcore import Graph, classify, is_prime
from .spectral import bipartite_parts, build_matrices, q_charpoly_from_a


def spanning_trees_matrixtree(g: Graph) -> int:
    if g.n == 1:
        return 1
    L = build_matrices(g).L
    return bareiss_determinant(L.minor(0, 0).rows)


def spanning_trees_biregular_spectral(g: Graph) -> int:
    """Tree count read off ``Q_G(x) / ((n1 + n2) x)`` at ``x = 0``.

    ``Q_G`` comes from the adjacency characteristic polynomial by transport,
    so this never touches the Laplacian.
    """
    cls = classify(g)
    if cls.kind not in ("biregular", "regular"):
        raise NotBiregular(f"graph is {cls.describe()}")
    bipartite_parts(g, cls)
    qg = q_charpoly_from_a(g)
    value = abs(qg.exact_div(Poly.x())(0))
    if value % g.n:
        raise InexactDivision(f"{value} is not divisible by {g.n}")
    return value // g.n


def _exact(num: int, den: int) -> int:
    if num % den:
        raise InexactDivision(f"{num} is not divisible by {den}")
    return num // den


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def trees_cube_layer(n: int, k: int) -> int:
    if not 1 <= k or 2 * k > n:
        raise BadParams("closed form needs 1 <= k <= n/2")
    num = (n + 1) * k ** (_binom(n, k) - _binom(n, k - 1))
    for i in range(1, k):
        num *= ((k - i) * (i + n - k + 1)) ** (_binom(n, k - i) - _binom(n, k - i - 1))
    return _exact(num, _binom(n, k) + _binom(n, k - 1))


def q_int(n: int, q: int) -> int:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    if n < 0:
        raise BadParams("q-integer needs n >= 0")
    return sum(q ** i for i in range(n))


def gauss_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return _exact(num, den)


def r_i(n: int, i: int, q: int) -> int:
    """``[n-i] - [i]``; equals ``q^i [n-2i]`` for ``2i <= n``."""
    if not 0 <= i <= n:
        raise BadParams("r_i needs 0 <= i <= n")
    return q_int(n - i, q) - q_int(i, q)


def gamma_i(n: int, k: int, q: int, i: int) -> int:
    if not (1 <= k and 2 * k <= n and 1 <= i <= k):
        raise BadParams("gamma_i needs 1 <= i <= k <= n/2")
    return q_int(i, q) * (q ** (k - i) * q_int(n - 2 * k, q) + q ** (n - k - i) * q_int(i + 1, q))


def trees_subspace_layer(n: int, k: int, q: int) -> int:
    if not is_prime(q):
        raise BadParams(f"q={q} is not prime")
    if not 1 <= k or 2 * k > n:
        raise BadParams("closed form needs 1 <= k <= n/2")
    qk, qnk = q_int(k, q), q_int(n - k + 1, q)
    num = (qk + qnk) * qk ** (gauss_binomial(n, k, q) - gauss_binomial(n, k - 1, q))
    for i in range(1, k):
        e = gauss_binomial(n, k - i, q) - gauss_binomial(n, k - i - 1, q)
        num *= (qk * qnk - gamma_i(n, k, q, i)) ** e
    return _exact(num, gauss_binomial(n, k, q) + gauss_binomial(n, k - 1, q))
