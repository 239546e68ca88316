"""Exact dense linear algebra and polynomial arithmetic.

Entries are Python ``int`` or ``fractions.Fraction`` (any exact field
element with the usual operators works, e.g. ``RadicalScalar``).  Integer
matrices take fraction-free paths where it matters.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from operator import mul
from typing import Iterable, Sequence

from .errors import InexactDivision


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _is_zero(x) -> bool:
    return x == 0


# ------------------------------------------------------------------ matrices

class ExactMatrix:
    """Square matrix with exact entries.  Treat as immutable."""

    __slots__ = ("rows", "dim", "_is_int")

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(_norm(x) for x in row) for row in rows)
        self.dim = len(self.rows)
        if any(len(r) != self.dim for r in self.rows):
            raise ValueError("matrix must be square")
        self._is_int = None

    @classmethod
    def identity(cls, n: int, scale=1) -> "ExactMatrix":
        return cls([[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def ones(cls, n: int) -> "ExactMatrix":
        return cls([[1] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def is_integer(self) -> bool:
        if self._is_int is None:
            self._is_int = all(type(x) is int for r in self.rows for x in r)
        return self._is_int

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ExactMatrix({[list(r) for r in self.rows]})"

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return ExactMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        cols = list(zip(*other.rows))
        return ExactMatrix([[sum(map(mul, r, c)) for c in cols] for r in self.rows])

    def __pow__(self, k: int) -> "ExactMatrix":
        result = ExactMatrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self.rows))

    def trace(self):
        return sum(self.rows[i][i] for i in range(self.dim))

    def flatten(self) -> list:
        return [x for r in self.rows for x in r]

    def is_zero(self) -> bool:
        return all(_is_zero(x) for r in self.rows for x in r)

    def minor(self, i: int, j: int) -> "ExactMatrix":
        """Delete row ``i`` and column ``j``."""
        return ExactMatrix([r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i])

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]


# ---------------------------------------------------------------- elimination

def bareiss_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri = a[i]
            rk = a[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def gauss_determinant(rows: Sequence[Sequence]):
    """Determinant by ordinary elimination over the entries' field."""
    a = [[Fraction(x) if type(x) is int else x for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if not _is_zero(a[i][k])), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        pk = a[k][k]
        det = det * pk
        inv = 1 / pk
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if _is_zero(f):
                continue
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                ri[j] = ri[j] - f * rk[j]
    return _norm(det)


def determinant(m: ExactMatrix):
    if m.is_integer:
        return bareiss_determinant(m.rows)
    return gauss_determinant(m.rows)


def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row-echelon form over Q.

    Returns ``(matrix, pivot_columns)``; pivots are searched only among the
    first ``ncols`` columns (all columns by default).
    """
    a = [[Fraction(x) if type(x) is int else x for x in r] for r in rows]
    if not a:
        return [], []
    width = len(a[0])
    ncols = width if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if not _is_zero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        pr = a[r]
        for i in range(len(a)):
            if i != r and not _is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    return len(rref(rows)[1])


def null_space(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of ``{x : rows @ x = 0}`` (one vector per free column)."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append([_norm(x) for x in v])
    return basis


def solve_kernel(columns: Sequence[ExactMatrix]) -> list[list]:
    """All coefficient vectors ``c`` with ``sum(c_i * columns[i]) == 0``.

    Each matrix is flattened to a vector of length ``dim**2``.
    """
    if not columns:
        return []
    dims = {c.dim for c in columns}
    if len(dims) != 1:
        raise ValueError("all matrices must share one dimension")
    vecs = [c.flatten() for c in columns]
    system = [list(row) for row in zip(*vecs)]
    return null_space(system, len(columns))


def solve_columns(columns: Sequence[Sequence], rhs_list: Sequence[Sequence]):
    """Solve ``sum_j c_j * columns[j] = rhs`` for each right-hand side.

    ``columns`` are equal-length vectors assumed linearly independent.
    Returns one coefficient list per rhs, or None if any rhs is outside the
    span.
    """
    k = len(columns)
    height = len(columns[0]) if columns else len(rhs_list[0])
    aug = [[columns[j][i] for j in range(k)] + [rhs[i] for rhs in rhs_list] for i in range(height)]
    red, pivots = rref(aug, ncols=k)
    if len(pivots) < k:
        raise ValueError("columns are linearly dependent")
    solutions = []
    for t in range(len(rhs_list)):
        col = k + t
        # any nonzero in rows below the pivot block means inconsistency
        if any(not _is_zero(red[r][col]) for r in range(k, len(red))):
            return None
        solutions.append([_norm(red[r][col]) for r in range(k)])
    return solutions


# ---------------------------------------------------------------- polynomials

class Poly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_norm(x) for x in coeffs]
        while c and _is_zero(c[-1]):
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls([1])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_integer(self) -> bool:
        return all(type(c) is int for c in self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if _is_zero(c):
                continue
            if hasattr(c, "is_rational") and c.is_rational():
                c = c.rational_part()
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            simple = isinstance(c, (int, Fraction))
            if simple:
                neg = c < 0
                mag = -c if neg else c
                body = str(mag) if (mag != 1 or not mono) else ""
                if body and mono:
                    body += "*"
                terms.append(("-" if neg else "+", body + mono))
            else:
                body = f"({c})"
                terms.append(("+", body + ("*" + mono if mono else "")))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for s, t in terms[1:]:
            out += f" {s} {t}"
        return out

    def __add__(self, other):
        other = _as_poly(other)
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, divisor: "Poly"):
        divisor = _as_poly(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.lead
        if dd > len(rem) - 1:
            return Poly(), Poly(rem)
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1 - dd, -1, -1):
            c = rem[i + dd]
            if _is_zero(c):
                continue
            if type(c) is int and type(lead) is int and c % lead == 0:
                c = c // lead
            else:
                c = (Fraction(c) if type(c) is int else c) / lead
            quot[i] = c
            for j, b in enumerate(divisor.coeffs):
                rem[i + j] = rem[i + j] - c * b
        return Poly(quot), Poly(rem[:dd])

    def __floordiv__(self, divisor):
        return self.divmod(divisor)[0]

    def __mod__(self, divisor):
        return self.divmod(divisor)[1]

    def exact_div(self, divisor) -> "Poly":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InexactDivision(f"{self} is not divisible by {_as_poly(divisor)}")
        return q

    def divides(self, other: "Poly") -> bool:
        return (_as_poly(other) % self).is_zero()

    def __call__(self, x):
        """Evaluate at a scalar or an ``ExactMatrix`` (Horner)."""
        if isinstance(x, ExactMatrix):
            return self.eval_matrix(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc)

    def eval_matrix(self, m: ExactMatrix) -> ExactMatrix:
        n = m.dim
        if not self.coeffs:
            return ExactMatrix.zeros(n)
        acc = ExactMatrix.identity(n, self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc @ m
            if not _is_zero(c):
                acc = ExactMatrix([[a + c if i == j else a for j, a in enumerate(r)]
                                   for i, r in enumerate(acc.rows)])
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """``self(inner(x))``."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def monic(self) -> "Poly":
        lead = self.lead
        if type(lead) is int:
            lead = Fraction(lead)
        return Poly(c / lead for c in self.coeffs)

    def primitive(self) -> "Poly":
        """Scale rational coefficients to coprime integers, positive lead."""
        from math import gcd, lcm
        if not self.coeffs:
            return self
        den = 1
        for c in self.coeffs:
            den = lcm(den, Fraction(c).denominator)
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        ints = [c // g for c in ints]
        if ints[-1] < 0:
            ints = [-c for c in ints]
        return Poly(ints)

    def is_even(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs[1::2])

    def deinterleave_even(self) -> "Poly":
        """``psi`` with ``self(x) == psi(x**2)``; requires an even polynomial."""
        if not self.is_even():
            raise ValueError("polynomial has odd-degree terms")
        return Poly(self.coeffs[0::2])

    def root_multiplicity(self, r) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial")
        k = 0
        p = self
        lin = Poly([-r, 1])
        while True:
            q, rem = p.divmod(lin)
            if not rem.is_zero():
                return k
            p = q
            k += 1


def _as_poly(p) -> Poly:
    return p if isinstance(p, Poly) else Poly([p])


# ------------------------------------------------------- charpoly / minpoly

def charpoly(m: ExactMatrix) -> Poly:
    """det(xI - m) by Faddeev-LeVerrier."""
    n = m.dim
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    integer = m.is_integer
    mk = ExactMatrix.zeros(n)
    c_prev = 1
    for k in range(1, n + 1):
        # M_k = m @ M_{k-1} + c_{n-k+1} I
        mk = m @ mk if k > 1 else ExactMatrix.zeros(n)
        mk = ExactMatrix([[a + c_prev if i == j else a for j, a in enumerate(r)]
                          for i, r in enumerate(mk.rows)])
        t = (m @ mk).trace()
        if integer:
            # exact: traces are divisible by k for integer matrices
            if t % k:
                raise InexactDivision("Faddeev-LeVerrier trace not divisible")
            c = -t // k
        else:
            c = -t * Fraction(1, k)
        coeffs[n - k] = c
        c_prev = c
    return Poly(coeffs)


def minpoly(m: ExactMatrix) -> Poly:
    """Monic minimal polynomial from the first dependence among I, m, m^2, ..."""
    n = m.dim
    basis = []  # (pivot index, reduced vector, combination over powers)
    power = ExactMatrix.identity(n)
    for k in range(n + 1):
        vec = [Fraction(x) if type(x) is int else x for x in power.flatten()]
        comb = [0] * (k + 1)
        comb[k] = 1
        for piv, bvec, bcomb in basis:
            f = vec[piv]
            if _is_zero(f):
                continue
            vec = [a - f * b for a, b in zip(vec, bvec)]
            comb = [a - f * b for a, b in zip_longest(comb, bcomb, fillvalue=0)]
        piv = next((i for i, a in enumerate(vec) if not _is_zero(a)), None)
        if piv is None:
            return Poly(comb).monic()
        inv = 1 / vec[piv]
        vec = [a * inv for a in vec]
        comb = [a * inv for a in comb]
        basis.append((piv, vec, comb))
        power = power @ m
    raise AssertionError("Cayley-Hamilton violated")
