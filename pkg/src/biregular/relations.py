"""Polynomial relations between graph matrices.

Matrices are named ``"A"``, ``"Q"``, ``"L"`` and ``"NL"`` (normalized
Laplacian).  Relations involving NL are solved in the conjugated frame
``D^{1/2} (.) D^{1/2}`` or the plain frame, whichever makes the unknowns'
coefficient matrix rational.  The right-hand side then lives in the field
generated by the ``sqrt(d_u d_v)``; decomposing it over the squarefree
radical basis splits one system over that field into independent rational
systems.  A linear system whose coefficients lie in a subfield of the reals
is solvable over the reals iff it is solvable over that subfield, so this
decides existence of real coefficients exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import NotConnected, NotRegular, PrereqFailed
from .exact import (ExactMatrix, Poly, charpoly, minpoly, null_space, rank,
                    solve_columns, solve_kernel)
from .graphcore import Graph, classify
from .radical import RadicalScalar, sqfree_decompose
from .spectral import build_matrices

MATRIX_IDS = ("A", "Q", "L", "NL")
RATIONAL_IDS = ("A", "Q", "L")


def _check_id(ident):
    if ident not in MATRIX_IDS:
        raise ValueError(f"unknown matrix {ident!r}; expected one of {MATRIX_IDS}")


@lru_cache(maxsize=8192)
def matrix_minpoly(g: Graph, ident: str) -> Poly:
    _check_id(ident)
    b = build_matrices(g)
    if ident == "NL":
        return minpoly(b.nl_similar())
    return minpoly(b.matrix(ident))


@lru_cache(maxsize=8192)
def _powers(g: Graph, ident: str, count: int) -> tuple[ExactMatrix, ...]:
    """``Y^0..Y^(count-1)``; for NL the conjugated ``M_j`` instead."""
    b = build_matrices(g)
    if ident == "NL":
        return tuple(b.nl_conjugated_power(j) for j in range(count))
    m = b.matrix(ident)
    out = [ExactMatrix.identity(g.n)]
    for _ in range(count - 1):
        out.append(out[-1] @ m)
    return tuple(out)


def _conjugated(g: Graph, f: Poly, ident: str) -> list[list]:
    """Entries of ``D^{1/2} f(X) D^{1/2}`` (RadicalScalar or rational)."""
    b = build_matrices(g)
    n = g.n
    if ident == "NL":
        acc = [[0] * n for _ in range(n)]
        for j, c in enumerate(f.coeffs):
            if c == 0:
                continue
            mj = b.nl_conjugated_power(j)
            for u in range(n):
                for v in range(n):
                    if mj[u, v] != 0:
                        acc[u][v] = acc[u][v] + c * mj[u, v]
        return acc
    fx = f(b.matrix(ident))
    deg = g.degrees
    return [[fx[u, v] * RadicalScalar.sqrt(deg[u] * deg[v]) if fx[u, v] != 0 else 0
             for v in range(n)] for u in range(n)]


def _radical_entries(values):
    return [RadicalScalar.coerce(x) for x in values]


# ---------------------------------------------------------------- reports

def _normalize_pair(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    joint = Poly(list(f.coeffs) + [0] * (max(f.degree, g.degree) + 1 - len(f.coeffs)) + list(g.coeffs))
    scale = Fraction(joint.primitive().lead, 1) / Fraction(joint.lead)
    f2, g2 = f * scale, g * scale
    if f2.lead < 0 or (f2.is_zero() and g2.lead < 0):
        f2, g2 = -f2, -g2
    return f2, g2


@dataclass(frozen=True)
class RelationReport:
    """All relations ``f(X) = g(Y)`` with ``deg f < deg m_X``, ``deg g < deg m_Y``.

    ``pairs`` spans them.  ``f`` has no constant term (the shared identity
    column goes to ``g``), and each pair is scaled to primitive integers
    with ``f`` leading positive.
    """

    x_id: str
    y_id: str
    minpoly_x: Poly
    minpoly_y: Poly
    pairs: tuple[tuple[Poly, Poly], ...]
    column_count: int
    column_rank: int

    @property
    def nontrivial(self) -> bool:
        return any(f.degree >= 1 for f, _ in self.pairs)

    @property
    def kernel_dim(self) -> int:
        return len(self.pairs)

    def _vector(self, f: Poly, g: Poly) -> list:
        p, q = self.minpoly_x.degree, self.minpoly_y.degree
        fr = f % self.minpoly_x
        gr = g % self.minpoly_y
        a = [fr[i] for i in range(p)]
        a[0] = a[0] - gr[0]
        return a + [-gr[j] for j in range(1, q)]

    def contains(self, f: Poly, g: Poly) -> bool:
        """Whether ``(f, g)``, reduced modulo the minimal polynomials, lies in
        the span of ``pairs``."""
        vec = self._vector(f, g)
        if all(x == 0 for x in vec):
            return True
        basis = [self._vector(a, b) for a, b in self.pairs]
        if not basis:
            return False
        return rank(basis + [vec]) == rank(basis)


def find_relation(g: Graph, x_id: str, y_id: str) -> RelationReport:
    for ident in (x_id, y_id):
        if ident not in RATIONAL_IDS:
            raise ValueError(f"find_relation works on {RATIONAL_IDS}, got {ident!r}")
    mx, my = matrix_minpoly(g, x_id), matrix_minpoly(g, y_id)
    p, q = mx.degree, my.degree
    xs = _powers(g, x_id, p)
    ys = _powers(g, y_id, q)[1:]
    columns = list(xs) + list(ys)
    kernel = solve_kernel(columns)
    pairs = []
    for vec in kernel:
        f = Poly([0] + list(vec[1:p]))
        gp = Poly([-vec[0]] + [-c for c in vec[p:]])
        pairs.append(_normalize_pair(f, gp))
    col_rank = len(columns) - len(kernel)
    return RelationReport(x_id, y_id, mx, my, tuple(pairs), len(columns), col_rank)


def verify_polynomial_identity(f: Poly, x_id: str, g: Poly, y_id: str, graph: Graph) -> bool:
    """Exact test of ``f(X) == g(Y)``."""
    _check_id(x_id)
    _check_id(y_id)
    f, g = _as_poly(f), _as_poly(g)
    if "NL" not in (x_id, y_id) and _rational_coeffs(f) and _rational_coeffs(g):
        b = build_matrices(graph)
        return f(b.matrix(x_id)) == g(b.matrix(y_id))
    # conjugating by D^{1/2} is invertible, so compare in that frame
    left = _conjugated(graph, f, x_id)
    right = _conjugated(graph, g, y_id)
    n = graph.n
    return all(RadicalScalar.coerce(left[u][v]) == RadicalScalar.coerce(right[u][v])
               for u in range(n) for v in range(n))


def _as_poly(p):
    return p if isinstance(p, Poly) else Poly(p)


def _rational_coeffs(p: Poly) -> bool:
    return all(isinstance(c, (int, Fraction)) for c in p.coeffs)


def _split_components(entries) -> dict[int, list[Fraction]]:
    """Coordinates of a vector of field elements over the sqrt(s) basis."""
    size = len(entries)
    out: dict[int, list] = {}
    for i, x in enumerate(entries):
        if isinstance(x, RadicalScalar):
            items = x.terms.items()
        elif x != 0:
            items = [(1, Fraction(x))]
        else:
            continue
        for s, c in items:
            out.setdefault(s, [0] * size)[i] = c
    return out


def power_relation_exists(g: Graph, x_id: str, y_id: str, r: int) -> Poly | None:
    """Polynomial ``f`` with ``X^r = f(Y)`` and ``deg f < deg m_Y``, or None.

    Coefficients are rational, or ``RadicalScalar`` when NL forces them.
    """
    _check_id(x_id)
    _check_id(y_id)
    if r < 1:
        raise ValueError("r must be positive")
    b = build_matrices(g)
    if "NL" in (x_id, y_id):
        b.nl_core()
    n = g.n
    deg = g.degrees
    my = matrix_minpoly(g, y_id)
    columns = [m.flatten() for m in _powers(g, y_id, my.degree)]
    if y_id == "NL":
        if x_id == "NL":
            target = b.nl_conjugated_power(r).flatten()
        else:
            xr = b.matrix(x_id) ** r
            target = [xr[u, v] * RadicalScalar.sqrt(deg[u] * deg[v]) if xr[u, v] else 0
                      for u in range(n) for v in range(n)]
    elif x_id == "NL":
        mr = b.nl_conjugated_power(r)
        target = []
        for u in range(n):
            for v in range(n):
                p = deg[u] * deg[v]
                target.append(mr[u, v] * RadicalScalar.sqrt(p) * Fraction(1, p) if mr[u, v] else 0)
    else:
        target = (b.matrix(x_id) ** r).flatten()
    comps = _split_components(target)
    if not comps:
        return Poly()
    keys = sorted(comps)
    sols = solve_columns(columns, [comps[s] for s in keys])
    if sols is None:
        return None
    if keys == [1]:
        return Poly(sols[0])
    coeffs = []
    for j in range(len(columns)):
        coeffs.append(RadicalScalar({s: sol[j] for s, sol in zip(keys, sols)}))
    return Poly(coeffs)


def _similar_rational(g: Graph, ident: str) -> ExactMatrix:
    b = build_matrices(g)
    return b.nl_similar() if ident == "NL" else b.matrix(ident)


def eigen_transport_check(f: Poly, x_id: str, g: Poly, y_id: str, graph: Graph) -> bool:
    """Equal eigenvalue multisets of ``f(X)`` and ``g(Y)``, compared as
    characteristic polynomials.  NL is replaced by the similar ``D^{-1} L``."""
    if not verify_polynomial_identity(f, x_id, g, y_id, graph):
        raise PrereqFailed(f"{f} on {x_id} does not equal {g} on {y_id}")
    fx = _as_poly(f)(_similar_rational(graph, x_id))
    gy = _as_poly(g)(_similar_rational(graph, y_id))
    return charpoly(fx) == charpoly(gy)


# ------------------------------------------------------------- J relation

@dataclass(frozen=True)
class JReport:
    k: int
    m_prime: Poly
    c: Fraction
    distinct_eigenvalue_count: int
    srg_params: tuple[int, int, int, int] | None = None

    @property
    def f(self) -> Poly:
        """Minimum-degree ``f`` with ``f(A) = J``."""
        return self.m_prime * (1 / Fraction(self.c))


def j_relation(g: Graph) -> JReport:
    cls = classify(g)
    if not cls.connected:
        raise NotConnected("f(A) = J requires a connected graph")
    if cls.kind != "regular":
        raise NotRegular(f"graph is {cls.describe()}")
    k = cls.d1
    A = build_matrices(g).A
    m = matrix_minpoly(g, "A")
    mp = m.exact_div(Poly([-k, 1]))
    value = mp(A)
    c = value[0, 0]
    if c == 0 or value != ExactMatrix.ones(g.n).scale(c):
        raise AssertionError("m'_A(A) is not a nonzero multiple of J")
    count = m.degree
    srg = None
    if count == 3:
        srg = _srg_params(g, A, k)
    return JReport(k, mp, Fraction(c), count, srg)


def _srg_params(g: Graph, A: ExactMatrix, k: int):
    a2 = A @ A
    n = g.n
    lam = next(a2[u, v] for u in range(n) for v in range(n) if u != v and A[u, v])
    mu = next(a2[u, v] for u in range(n) for v in range(n) if u != v and not A[u, v])
    ident = ExactMatrix.identity(n)
    rhs = ident.scale(k) + A.scale(lam) + (ExactMatrix.ones(n) - ident - A).scale(mu)
    if a2 != rhs:
        raise AssertionError("three distinct eigenvalues but not strongly regular")
    return (n, k, lam, mu)


def solve_f_equals_J(g: Graph, max_degree: int | None = None) -> Poly | None:
    """Direct solve for ``f`` with ``f(A) = J`` and ``deg f <= max_degree``.

    The default bound ``deg m_A - 1`` covers every polynomial in A.
    """
    m = matrix_minpoly(g, "A")
    top = m.degree - 1 if max_degree is None else min(max_degree, m.degree - 1)
    if top < 0:
        return None
    columns = [p.flatten() for p in _powers(g, "A", top + 1)]
    sol = solve_columns(columns, [[1] * (g.n * g.n)])
    return None if sol is None else Poly(sol[0])


# ------------------------------------------------- theorem comparison

ORDERED_PAIRS = tuple((x, y) for x, y in permutations(MATRIX_IDS, 2))


@dataclass
class TheoremComparison:
    kind: str
    r_max: int
    predicted: dict = field(default_factory=dict)
    found: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    con_full_candidates: list = field(default_factory=list)


def predicted_table(kind: str, r_max: int) -> dict:
    """Existence of ``X^r = f(Y)`` for some ``r <= r_max`` as the
    classification theorem predicts.  ``None`` marks the open case."""
    table = {}
    for x, y in ORDERED_PAIRS:
        if kind == "regular":
            table[(x, y)] = True
        elif kind == "biregular":
            if (x, y) in (("A", "Q"), ("A", "L")):
                table[(x, y)] = r_max >= 2
            else:
                table[(x, y)] = (x, y) in (("A", "NL"), ("NL", "A"))
        else:
            table[(x, y)] = None if (x, y) == ("A", "NL") else False
    return table


def classify_vs_theorem(g: Graph, r_max: int = 4) -> TheoremComparison:
    cls = classify(g)
    if not cls.connected:
        raise NotConnected("the classification theorem concerns connected graphs")
    out = TheoremComparison(cls.kind, r_max, predicted_table(cls.kind, r_max))
    for pair in ORDERED_PAIRS:
        found = None
        for r in range(1, r_max + 1):
            if power_relation_exists(g, pair[0], pair[1], r) is not None:
                found = r
                break
        out.found[pair] = found
        expect = out.predicted[pair]
        if expect is None:
            if found is not None:
                out.con_full_candidates.append(found)
        elif expect != (found is not None):
            out.mismatches.append((pair, expect, found))
    return out
