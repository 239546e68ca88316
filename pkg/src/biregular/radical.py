"""Exact arithmetic in Q(sqrt 2, sqrt 3, sqrt 5, ...).

A ``RadicalScalar`` is a finite sum ``sum q_s * sqrt(s)`` over distinct
squarefree ``s >= 1``.  Because the square roots of distinct squarefree
integers are linearly independent over Q, the term map is canonical and
equality is structural.

The module also hosts the eigenvector tests on ``D^{1/2} 1`` and ``1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .errors import IsolatedVertex
from .graphcore import Graph, _bits


@lru_cache(maxsize=None)
def sqfree_decompose(n: int) -> tuple[int, int]:
    """``(m, s)`` with ``n == m*m*s`` and ``s`` squarefree."""
    if n < 1:
        raise ValueError("n must be positive")
    m, s = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        m *= p ** (e // 2)
        if e % 2:
            s *= p
        p += 1
    return m, s * n


def _primes_of(s: int) -> list[int]:
    out = []
    p = 2
    while p * p <= s:
        if s % p == 0:
            out.append(p)
            s //= p
        p += 1
    if s > 1:
        out.append(s)
    return out


class RadicalScalar:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for s, q in terms.items():
                if q:
                    clean[s] = Fraction(q)
        self.terms = clean

    @classmethod
    def sqrt(cls, n: int) -> "RadicalScalar":
        """Exact square root of a nonnegative integer."""
        if n == 0:
            return cls()
        m, s = sqfree_decompose(n)
        return cls({s: m})

    @classmethod
    def rational(cls, q) -> "RadicalScalar":
        return cls({1: q})

    @staticmethod
    def coerce(x) -> "RadicalScalar":
        if isinstance(x, RadicalScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return RadicalScalar({1: x})
        raise TypeError(f"cannot coerce {type(x).__name__} to RadicalScalar")

    # -- queries
    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return set(self.terms) <= {1}

    def rational_part(self) -> Fraction:
        return self.terms.get(1, Fraction(0))

    def support(self) -> list[int]:
        return sorted(self.terms)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.rational_part()

    def __float__(self):
        return float(sum(float(q) * s ** 0.5 for s, q in self.terms.items()))

    # -- comparison / hashing
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RadicalScalar({1: other})
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_part())
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"RadicalScalar({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for s in sorted(self.terms):
            q = self.terms[s]
            if s == 1:
                parts.append(str(q))
            elif q == 1:
                parts.append(f"sqrt({s})")
            elif q == -1:
                parts.append(f"-sqrt({s})")
            else:
                parts.append(f"{q}*sqrt({s})")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict[str, str]:
        return {str(s): str(q) for s, q in sorted(self.terms.items())}

    # -- ring operations
    def __add__(self, other):
        try:
            other = RadicalScalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for s, q in other.terms.items():
            out[s] = out.get(s, 0) + q
        return RadicalScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return RadicalScalar({s: -q for s, q in self.terms.items()})

    def __sub__(self, other):
        try:
            other = RadicalScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RadicalScalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RadicalScalar({s: q * other for s, q in self.terms.items()})
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        out = {}
        for s, q in self.terms.items():
            for t, r in other.terms.items():
                g = gcd(s, t)
                # sqrt(s)*sqrt(t) = g*sqrt(s*t/g^2)
                key = (s // g) * (t // g)
                out[key] = out.get(key, 0) + q * r * g
        return RadicalScalar(out)

    __rmul__ = __mul__

    def conjugate(self, p: int) -> "RadicalScalar":
        """Flip the sign of every sqrt(s) with ``p | s``."""
        return RadicalScalar({s: (-q if s % p == 0 else q) for s, q in self.terms.items()})

    def inverse(self) -> "RadicalScalar":
        if not self.terms:
            raise ZeroDivisionError("inverse of zero RadicalScalar")
        primes = sorted({p for s in self.terms for p in _primes_of(s)})
        y = self
        acc = RadicalScalar({1: 1})
        for p in primes:
            c = y.conjugate(p)
            acc = acc * c
            y = y * c
        # y is now rational and nonzero
        return acc * (1 / y.rational_part())

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * Fraction(1, 1) * (1 / Fraction(other))
        if not isinstance(other, RadicalScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RadicalScalar.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        out = RadicalScalar({1: 1})
        for _ in range(k):
            out = out * self
        return out


def radical_from_json(d: dict) -> RadicalScalar:
    return RadicalScalar({int(s): Fraction(q) for s, q in d.items()})


# ------------------------------------------------------ eigenvector tests

CONDITIONS = ("DSQRT1_A", "DSQRT1_A2", "DSQRT1_Q", "ONE_NL")


def _sqrt_degree(g: Graph):
    return [RadicalScalar.sqrt(d) for d in g.degrees]


def check_eigen_condition(g: Graph, which: str) -> RadicalScalar | None:
    """Common eigenvalue if the test vector is an eigenvector, else None.

    ``DSQRT1_A``, ``DSQRT1_A2``, ``DSQRT1_Q`` test ``D^{1/2} 1`` against
    ``A``, ``A^2`` and ``Q``; ``ONE_NL`` tests ``1`` against the normalized
    Laplacian.
    """
    if which not in CONDITIONS:
        raise ValueError(f"unknown condition {which!r}")
    if 0 in g.degrees:
        raise IsolatedVertex("condition requires every vertex to have positive degree")
    n, deg = g.n, g.degrees
    if which == "ONE_NL":
        ratios = []
        for v in range(n):
            # 1 - sum_u 1/sqrt(d_u d_v) = 1 - sum_u sqrt(d_u d_v)/(d_u d_v)
            acc = RadicalScalar({1: 1})
            for u in _bits(g.adj[v]):
                p = deg[u] * deg[v]
                acc = acc - RadicalScalar.sqrt(p) * Fraction(1, p)
            ratios.append(acc)
        return _common(ratios)
    root = _sqrt_degree(g)
    av = [sum((root[u] for u in _bits(g.adj[v])), RadicalScalar()) for v in range(n)]
    if which == "DSQRT1_A2":
        av = [sum((av[u] for u in _bits(g.adj[v])), RadicalScalar()) for v in range(n)]
    ratios = []
    for v in range(n):
        # x / sqrt(d) = x * sqrt(d) / d
        r = av[v] * root[v] * Fraction(1, deg[v])
        if which == "DSQRT1_Q":
            r = r + deg[v]
        ratios.append(r)
    return _common(ratios)


def _common(values):
    first = values[0]
    if all(v == first for v in values[1:]):
        return first
    return None
