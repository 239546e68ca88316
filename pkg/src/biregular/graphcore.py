"""Simple undirected graphs: storage, graph6/edge-list I/O, named families
and degree-structure classification.

Vertices are ``0..n-1``; ``adj[u]`` is an int whose bit ``v`` is set iff
``uv`` is an edge.  Graphs are immutable and hashable.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import BadParams, MalformedInput

GRAPH6_MAX_N = 62
MAX_NAMED_VERTICES = 2000


def pair_index(i: int, j: int) -> int:
    """Bit position of the pair ``{i, j}`` in graph6 (column-major) order."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def pair_list(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(n) for i in range(j)]


def mask_rows(n: int, mask: int) -> tuple[int, ...]:
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return tuple(rows)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    degrees: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 1 or len(self.adj) != self.n:
            raise MalformedInput("adjacency must have one bitrow per vertex")
        for u, row in enumerate(self.adj):
            if row >> self.n:
                raise MalformedInput(f"row {u} has bits beyond vertex {self.n - 1}")
            if row >> u & 1:
                raise MalformedInput(f"loop at vertex {u}")
            for v in _bits(row):
                if not self.adj[v] >> u & 1:
                    raise MalformedInput(f"asymmetric edge {u}-{v}")
        object.__setattr__(self, "degrees", tuple(bin(r).count("1") for r in self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise MalformedInput(f"loop edge {u}-{v}")
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInput(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "Graph":
        n = len(rows)
        edges = []
        for u in range(n):
            if len(rows[u]) != n:
                raise MalformedInput("adjacency matrix is not square")
            for v in range(n):
                if rows[u][v] not in (0, 1):
                    raise MalformedInput("adjacency entries must be 0/1")
                if rows[u][v] != rows[v][u]:
                    raise MalformedInput("adjacency matrix is not symmetric")
                if rows[u][v] and u < v:
                    edges.append((u, v))
                if u == v and rows[u][v]:
                    raise MalformedInput(f"loop at vertex {u}")
        return cls.from_edges(n, edges)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Decode an upper-triangle bitmask (bit ``pair_index(i, j)``)."""
        return cls._unchecked(n, mask_rows(n, mask))

    @classmethod
    def _unchecked(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # rows already known to be symmetric and loop-free
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", rows)
        object.__setattr__(g, "degrees", tuple(bin(r).count("1") for r in rows))
        return g

    def to_mask(self) -> int:
        mask = 0
        for i, j in self.edges():
            mask |= 1 << pair_index(i, j)
        return mask

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def adjacency(self) -> list[list[int]]:
        return [[self.adj[u] >> v & 1 for v in range(self.n)] for u in range(self.n)]

    def is_connected(self) -> bool:
        return len(components(self)) == 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def graph6(self) -> str:
        return to_graph6(self)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(list(_bits(comp)))
    return comps


def two_coloring(g: Graph) -> list[int] | None:
    """Proper 2-coloring (0/1 per vertex) or None when an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in _bits(g.adj[u]):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


# ---------------------------------------------------------------- parsing

def parse_graph(text: str) -> Graph:
    """Parse graph6 or ``u-v`` edge-list text (0-based ids)."""
    body = text.strip()
    if body.startswith(">>graph6<<"):
        body = body[len(">>graph6<<"):].strip()
    if not body:
        raise MalformedInput("empty input")
    if "-" in body or body[0].isdigit() or body[0] == "#":
        return parse_edge_list(body)
    return parse_graph6(body)


def parse_graph6(s: str) -> Graph:
    s = s.strip()
    if not s:
        raise MalformedInput("empty graph6 string")
    data = []
    for ch in s:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise MalformedInput(f"byte {ch!r} outside the graph6 alphabet")
        data.append(code - 63)
    if data[0] == 63:
        raise MalformedInput(f"graph6 with more than {GRAPH6_MAX_N} vertices is not supported")
    n = data[0]
    if n == 0:
        raise MalformedInput("graph6 with zero vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise MalformedInput(f"expected {need} data bytes for n={n}, got {len(data) - 1}")
    bits = []
    for x in data[1:]:
        bits.extend((x >> (5 - b)) & 1 for b in range(6))
    if any(bits[nbits:]):
        raise MalformedInput("nonzero padding bits")
    mask = 0
    for k in range(nbits):
        if bits[k]:
            mask |= 1 << k
    return Graph.from_mask(n, mask)


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise BadParams(f"graph6 output limited to {GRAPH6_MAX_N} vertices")
    nbits = g.n * (g.n - 1) // 2
    mask = g.to_mask()
    bits = [(mask >> k) & 1 for k in range(nbits)]
    bits += [0] * (-nbits % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


_TOKEN = re.compile(r"^(\d+)(?:-(\d+))?$")


def parse_edge_list(text: str) -> Graph:
    """``u-v`` tokens separated by commas, whitespace or newlines.

    ``#`` starts a comment.  A bare integer token declares a vertex, which
    allows isolated vertices.
    """
    edges = []
    top = -1
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for tok in re.split(r"[,\s;]+", line):
            if not tok:
                continue
            m = _TOKEN.match(tok)
            if not m:
                raise MalformedInput(f"bad edge token {tok!r}")
            u = int(m.group(1))
            top = max(top, u)
            if m.group(2) is not None:
                v = int(m.group(2))
                if u == v:
                    raise MalformedInput(f"loop edge {tok!r}")
                top = max(top, v)
                edges.append((u, v))
    if top < 0:
        raise MalformedInput("edge list names no vertices")
    return Graph.from_edges(top + 1, edges)


def to_edge_list(g: Graph) -> str:
    toks = [f"{u}-{v}" for u, v in g.edges()]
    covered = {x for e in g.edges() for x in e}
    toks += [str(v) for v in range(g.n) if v not in covered]
    return ",".join(toks)


# --------------------------------------------------------- classification

@dataclass(frozen=True)
class Classification:
    """Degree structure of a graph.

    ``kind`` is ``"regular"``, ``"biregular"`` or ``"neither"``.  For a
    biregular graph ``part1`` is the larger side (ties: smaller degree
    first) and ``d1``/``d2`` are the degrees on ``part1``/``part2``.  For a
    regular graph ``d1 == d2 == d`` and, when bipartite, the parts are the
    colour classes.
    """

    connected: bool
    kind: str
    d1: int | None = None
    d2: int | None = None
    part1: tuple[int, ...] = ()
    part2: tuple[int, ...] = ()
    bipartition: tuple[int, ...] | None = None

    @property
    def n1(self) -> int:
        return len(self.part1)

    @property
    def n2(self) -> int:
        return len(self.part2)

    @property
    def is_regular(self) -> bool:
        return self.kind == "regular"

    @property
    def is_biregular(self) -> bool:
        return self.kind == "biregular"

    def describe(self) -> str:
        if self.kind == "regular":
            return f"Regular({self.d1})"
        if self.kind == "biregular":
            return f"Biregular(d1={self.d1}, d2={self.d2}, n1={self.n1}, n2={self.n2})"
        return "Neither"


def _order_parts(da, pa, db, pb):
    if (len(pa), -da) < (len(pb), -db):
        da, pa, db, pb = db, pb, da, pa
    return da, tuple(pa), db, tuple(pb)


def classify(g: Graph) -> Classification:
    connected = len(components(g)) == 1
    coloring = two_coloring(g)
    bip = tuple(coloring) if coloring is not None else None
    degs = set(g.degrees)
    if len(degs) == 1:
        d = g.degrees[0]
        if bip is not None:
            p0 = [v for v in range(g.n) if bip[v] == 0]
            p1 = [v for v in range(g.n) if bip[v] == 1]
            _, pa, _, pb = _order_parts(d, p0, d, p1)
        else:
            pa, pb = tuple(range(g.n)), ()
        return Classification(connected, "regular", d, d, pa, pb, bip)
    if len(degs) == 2:
        lo, hi = sorted(degs)
        # two distinct degrees with every edge joining them forces the parts
        if all(g.degrees[u] != g.degrees[v] for u, v in g.edges()):
            plo = [v for v in range(g.n) if g.degrees[v] == lo]
            phi = [v for v in range(g.n) if g.degrees[v] == hi]
            d1, p1, d2, p2 = _order_parts(lo, plo, hi, phi)
            part_of = [0] * g.n
            for v in p2:
                part_of[v] = 1
            return Classification(connected, "biregular", d1, d2, p1, p2, tuple(part_of))
    return Classification(connected, "neither", bipartition=bip)


def neighbor_degree_sums(g: Graph) -> list[int]:
    return [sum(g.degrees[u] for u in _bits(g.adj[v])) for v in range(g.n)]


# --------------------------------------------------------- named families

PAPER_A_G = (
    (0, 1, 1, 1, 1),
    (1, 0, 1, 1, 1),
    (1, 1, 0, 1, 0),
    (1, 1, 1, 0, 0),
    (1, 1, 0, 0, 0),
)

PAPER_G_PRIME = (
    (0, 1, 1, 1, 1),
    (1, 0, 0, 0, 1),
    (1, 0, 0, 1, 0),
    (1, 0, 1, 0, 0),
    (1, 1, 0, 0, 0),
)

FAMILY_ALIASES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "k": "complete",
    "complete_bipartite": "complete_bipartite",
    "kbip": "complete_bipartite",
    "star": "star",
    "cube_layer": "cube_layer",
    "cube": "cube_layer",
    "subspace_layer": "subspace_layer",
    "subspace": "subspace_layer",
    "paper_a_g": "paper_A_G",
    "a_g": "paper_A_G",
    "paper_g_prime": "paper_G_prime",
    "g_prime": "paper_G_prime",
    "petersen": "petersen",
    "paw": "paw",
}


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def _arity(name, params, k):
    if len(params) != k:
        raise BadParams(f"{name} takes {k} integer parameter(s), got {len(params)}")


def make_named(family: str, *params: int) -> Graph:
    name = FAMILY_ALIASES.get(family.lower())
    if name is None:
        raise BadParams(f"unknown family {family!r}")
    if name == "path":
        _arity(name, params, 1)
        (n,) = params
        _positive(n)
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if name == "cycle":
        _arity(name, params, 1)
        (n,) = params
        if n < 3:
            raise BadParams("cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if name == "complete":
        _arity(name, params, 1)
        (n,) = params
        _positive(n)
        return Graph.from_edges(n, combinations(range(n), 2))
    if name == "complete_bipartite":
        _arity(name, params, 2)
        a, b = params
        _positive(a)
        _positive(b)
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if name == "star":
        _arity(name, params, 1)
        (k,) = params
        _positive(k)
        return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
    if name == "cube_layer":
        _arity(name, params, 2)
        return cube_layer(*params)
    if name == "subspace_layer":
        _arity(name, params, 3)
        return subspace_layer(*params)
    if name == "paper_A_G":
        _arity(name, params, 0)
        return Graph.from_matrix(PAPER_A_G)
    if name == "paper_G_prime":
        _arity(name, params, 0)
        return Graph.from_matrix(PAPER_G_PRIME)
    if name == "petersen":
        _arity(name, params, 0)
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, outer + spokes + inner)
    if name == "paw":
        _arity(name, params, 0)
        return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    raise AssertionError(name)


def _positive(n):
    if n < 1:
        raise BadParams("size parameter must be positive")


def cube_layer(n: int, k: int) -> Graph:
    """Weight ``k`` and ``k-1`` bitstrings of length ``n``, Hamming-adjacent.

    Weight-``k`` strings come first, each layer in increasing integer order.
    """
    if not 1 <= k <= n:
        raise BadParams("cube_layer requires 1 <= k <= n")
    from math import comb
    if comb(n, k) + comb(n, k - 1) > MAX_NAMED_VERTICES:
        raise BadParams("cube_layer exceeds the vertex cap")
    upper = [x for x in range(1 << n) if bin(x).count("1") == k]
    lower = [x for x in range(1 << n) if bin(x).count("1") == k - 1]
    index = {x: i for i, x in enumerate(upper + lower)}
    edges = []
    for x in upper:
        for b in range(n):
            if x >> b & 1:
                edges.append((index[x], index[x ^ (1 << b)]))
    return Graph.from_edges(len(index), edges)


def rref_subspaces(n: int, k: int, q: int) -> list[tuple[tuple[int, ...], ...]]:
    """All ``k``-dimensional subspaces of F_q^n as reduced row-echelon bases."""
    out = []
    for pivots in combinations(range(n), k):
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n) if c not in pivots]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), x in zip(free, values):
                rows[r][c] = x
            out.append(tuple(tuple(row) for row in rows))
    return out


def _span(basis, n, q):
    vecs = set()
    for coeffs in product(range(q), repeat=len(basis)):
        vecs.add(tuple(sum(a * row[c] for a, row in zip(coeffs, basis)) % q for c in range(n)))
    return frozenset(vecs)


def subspace_layer(n: int, k: int, q: int) -> Graph:
    """Containment graph between ``k``- and ``(k-1)``-dimensional subspaces of F_q^n.

    The ``k``-dimensional subspaces come first, both layers in RREF
    enumeration order.
    """
    if not is_prime(q):
        raise BadParams(f"q={q} is not prime")
    if not 1 <= k <= n:
        raise BadParams("subspace_layer requires 1 <= k <= n")
    from .trees import gauss_binomial
    if gauss_binomial(n, k, q) + gauss_binomial(n, k - 1, q) > MAX_NAMED_VERTICES:
        raise BadParams("subspace_layer exceeds the vertex cap")
    upper = [_span(b, n, q) for b in rref_subspaces(n, k, q)]
    lower = [_span(b, n, q) for b in rref_subspaces(n, k - 1, q)]
    top = len(upper)
    edges = [(i, top + j) for i, w in enumerate(upper) for j, u in enumerate(lower) if u <= w]
    return Graph.from_edges(top + len(lower), edges)


def parse_family(spec: str) -> Graph:
    """``NAME`` or ``NAME:a,b,c`` as accepted on the command line."""
    name, _, rest = spec.partition(":")
    try:
        params = [int(x) for x in rest.split(",") if x.strip()] if rest else []
    except ValueError:
        raise BadParams(f"bad family parameters in {spec!r}") from None
    return make_named(name.strip(), *params)
