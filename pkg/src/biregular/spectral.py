"""Graph matrices, their characteristic polynomials, and the biregular
identities linking A with Q, L and the normalized Laplacian.

The normalized Laplacian is never built with irrational entries here.  Its
spectral data goes through the rational matrix ``D^{-1} L`` (similar to it)
or through ``det(xD - L) / det(D)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (InternalParityError, IsolatedVertex, NotBiregular,
                     NotConnected)
from .exact import ExactMatrix, Poly, bareiss_determinant, charpoly, rank
from .graphcore import Classification, Graph, classify


@dataclass(frozen=True)
class MatrixBundle:
    A: ExactMatrix
    D: ExactMatrix
    Q: ExactMatrix
    L: ExactMatrix
    degrees: tuple[int, ...]

    @property
    def has_isolated(self) -> bool:
        return 0 in self.degrees

    def _need_nl(self):
        if self.has_isolated:
            raise IsolatedVertex("normalized Laplacian needs every vertex to have positive degree")

    def nl_core(self) -> tuple[ExactMatrix, ExactMatrix]:
        """``(D, L)``; the normalized Laplacian is ``D^{-1/2} L D^{-1/2}``."""
        self._need_nl()
        return self.D, self.L

    def nl_similar(self) -> ExactMatrix:
        """``D^{-1} L``, similar to the normalized Laplacian."""
        self._need_nl()
        return ExactMatrix([[Fraction(x, self.degrees[i]) for x in row]
                            for i, row in enumerate(self.L.rows)])

    def nl_conjugated_power(self, j: int) -> ExactMatrix:
        """Rational ``M_j`` with ``NL^j = D^{-1/2} M_j D^{-1/2}``."""
        self._need_nl()
        if j == 0:
            return self.D
        return self.L @ (self.nl_similar() ** (j - 1))

    def matrix(self, ident: str) -> ExactMatrix:
        try:
            return {"A": self.A, "D": self.D, "Q": self.Q, "L": self.L}[ident]
        except KeyError:
            raise ValueError(f"no rational matrix named {ident!r}") from None


@lru_cache(maxsize=4096)
def build_matrices(g: Graph) -> MatrixBundle:
    A = ExactMatrix(g.adjacency())
    D = ExactMatrix.diagonal(g.degrees)
    return MatrixBundle(A, D, D + A, D - A, g.degrees)


def charpoly_NL(g: Graph) -> Poly:
    """Characteristic polynomial of the normalized Laplacian.

    Uses ``det(xI - NL) = det(xD - L) / det(D)``: the numerator is an
    integer polynomial of degree n, recovered by interpolating integer
    determinants at ``x = 0..n``.
    """
    b = build_matrices(g)
    D, L = b.nl_core()
    n = g.n
    points = list(range(n + 1))
    values = [bareiss_determinant((D.scale(t) - L).rows) for t in points]
    numer = _interpolate(points, values)
    det_d = 1
    for d in g.degrees:
        det_d *= d
    return Poly(Fraction(c, det_d) for c in numer.coeffs)


def _interpolate(xs, ys) -> Poly:
    # Newton divided differences, exact
    coef = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = Poly([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * Poly([-xs[i], 1]) + coef[i]
    return p


def bipartite_parts(g: Graph, cls: Classification | None = None):
    """``(d1, d2, part1, part2)`` for a biregular or regular bipartite graph."""
    cls = cls or classify(g)
    if cls.kind == "biregular" or (cls.kind == "regular" and cls.bipartition is not None):
        return cls.d1, cls.d2, cls.part1, cls.part2
    raise NotBiregular(f"graph is {cls.describe()}, not biregular")


@dataclass(frozen=True)
class BiregularIdentityReport:
    q_identity: bool
    l_identity: bool
    nl_identity: bool

    def all(self) -> bool:
        return self.q_identity and self.l_identity and self.nl_identity


def verify_biregular_identity(g: Graph) -> BiregularIdentityReport:
    """Check ``A^2 = (Q-d1 I)(Q-d2 I)``, the L analogue, and
    ``NL = I - A/sqrt(d1 d2)``.

    Regular graphs are accepted with ``d1 = d2 = d``.
    """
    cls = classify(g)
    if cls.kind == "regular":
        d1 = d2 = cls.d1
    elif cls.kind == "biregular":
        d1, d2 = cls.d1, cls.d2
    else:
        raise NotBiregular(f"graph is {cls.describe()}")
    b = build_matrices(g)
    n = g.n
    a2 = b.A @ b.A
    q_id = (b.Q - ExactMatrix.identity(n, d1)) @ (b.Q - ExactMatrix.identity(n, d2)) == a2
    l_id = (b.L - ExactMatrix.identity(n, d1)) @ (b.L - ExactMatrix.identity(n, d2)) == a2
    # NL_uv = -1/sqrt(d_u d_v) on edges and 1 on the diagonal, so the
    # identity is exactly: no isolated vertex and d_u d_v = d1 d2 on edges
    nl_id = not b.has_isolated and all(
        g.degrees[u] * g.degrees[v] == d1 * d2 for u, v in g.edges())
    if nl_id:
        support_l = {(u, v) for u in range(n) for v in range(n) if u != v and b.L[u, v] != 0}
        support_a = {(u, v) for u in range(n) for v in range(n) if b.A[u, v] != 0}
        nl_id = support_l == support_a
    return BiregularIdentityReport(q_id, l_id, nl_id)


def even_part(g: Graph) -> tuple[Poly, int]:
    """``(psi, n1 - n2)`` with ``charpoly(A)(x) = x^(n1-n2) * psi(x^2)``."""
    d1, d2, p1, p2 = bipartite_parts(g)
    shift = len(p1) - len(p2)
    phi = charpoly(build_matrices(g).A)
    reduced = phi.exact_div(Poly.x() ** shift)
    if not reduced.is_even():
        raise InternalParityError("quotient of the adjacency characteristic polynomial is not even")
    return reduced.deinterleave_even(), shift


def q_charpoly_from_a(g: Graph) -> Poly:
    """Characteristic polynomial of Q obtained from that of A alone.

    ``Q_G(x) = (x - d1)^(n1-n2) * psi((x - d1)(x - d2))`` where
    ``charpoly(A)(x) = x^(n1-n2) * psi(x^2)``.
    """
    if not g.is_connected():
        raise NotConnected("transport requires a connected graph")
    d1, d2, _, _ = bipartite_parts(g)
    psi, shift = even_part(g)
    inner = Poly([-d1, 1]) * Poly([-d2, 1])
    return Poly([-d1, 1]) ** shift * psi.compose(inner)


def zero_multiplicities(g: Graph) -> tuple[int, int]:
    """Multiplicities of ``d1`` and ``d2`` as eigenvalues of Q.

    Both equal ``n_i - rank(B)`` where ``B`` is the part1 x part2 block of
    A.  For a regular bipartite graph the two numbers add up to the
    multiplicity of ``d``.
    """
    d1, d2, p1, p2 = bipartite_parts(g)
    if not p2:
        return len(p1), 0
    A = build_matrices(g).A
    block = [[A[u, v] for v in p2] for u in p1]
    r = rank(block)
    return len(p1) - r, len(p2) - r
