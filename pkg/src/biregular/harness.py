"""Exhaustive scans over small connected graphs.

Graphs on ``n`` vertices are upper-triangle bitmasks.  Without dedup every
labeled mask in the shard is visited; with dedup only masks that are
minimal in their orbit under vertex relabeling are visited.  Shards are
residue classes (of masks, or of orbit representatives) and share nothing,
so results merge by addition.

A scan can only report the absence of counterexamples in its range; it
never establishes a conjecture.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from .errors import CapExceeded
from .graphcore import Graph, classify, mask_rows, neighbor_degree_sums, pair_index, to_graph6
from .radical import check_eigen_condition
from .relations import classify_vs_theorem, power_relation_exists

log = logging.getLogger(__name__)

MAX_SCAN_N = 8
DEDUP_AUTO_MAX_N = 7
CHECKS = ("con_square", "con_full", "theorem_table", "lemma_conditions")
CHECKPOINT_HEADER = "biregular-scan-checkpoint 1"


@dataclass(frozen=True)
class ScanJob:
    n_max: int
    checks: tuple[str, ...] = CHECKS
    r_max: int = 4
    shard: tuple[int, int] = (0, 1)
    dedup: bool | None = None  # None: dedup for n <= DEDUP_AUTO_MAX_N
    n_min: int = 2
    prune: bool = True

    def __post_init__(self):
        if not 1 <= self.n_max <= MAX_SCAN_N:
            raise CapExceeded(f"n_max must be in 1..{MAX_SCAN_N}")
        bad = set(self.checks) - set(CHECKS)
        if bad:
            raise ValueError(f"unknown checks {sorted(bad)}")
        i, c = self.shard
        if not (c >= 1 and 0 <= i < c):
            raise ValueError("shard must satisfy 0 <= index < count")
        if self.r_max < 1:
            raise ValueError("r_max must be positive")
        object.__setattr__(self, "checks", tuple(self.checks))
        object.__setattr__(self, "shard", (i, c))

    def dedup_for(self, n: int) -> bool:
        return n <= DEDUP_AUTO_MAX_N if self.dedup is None else self.dedup

    def to_dict(self) -> dict:
        d = asdict(self)
        d["checks"] = list(self.checks)
        d["shard"] = list(self.shard)
        return d


@dataclass
class ScanResult:
    graphs_visited: int = 0
    connected_count: int = 0
    kind_counts: dict = field(default_factory=lambda: {"regular": 0, "biregular": 0, "neither": 0})
    counterexamples: list = field(default_factory=list)  # (graph6, check, witness)
    mismatches: list = field(default_factory=list)  # (graph6, "X^r=f(Y)", predicted, found r)
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.mismatches

    def merge(self, other: "ScanResult") -> "ScanResult":
        kinds = {k: self.kind_counts.get(k, 0) + other.kind_counts.get(k, 0)
                 for k in set(self.kind_counts) | set(other.kind_counts)}
        return ScanResult(
            self.graphs_visited + other.graphs_visited,
            self.connected_count + other.connected_count,
            kinds,
            sorted(self.counterexamples + other.counterexamples),
            sorted(self.mismatches + other.mismatches),
            self.elapsed + other.elapsed,
        )

    def to_dict(self) -> dict:
        return {
            "graphs_visited": self.graphs_visited,
            "connected_count": self.connected_count,
            "kind_counts": dict(sorted(self.kind_counts.items())),
            "counterexamples": [list(x) for x in self.counterexamples],
            "mismatches": [list(x) for x in self.mismatches],
            "elapsed": round(self.elapsed, 3),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ScanResult":
        return cls(d["graphs_visited"], d["connected_count"], dict(d["kind_counts"]),
                   [tuple(x) for x in d["counterexamples"]],
                   [tuple(x) for x in d["mismatches"]], d.get("elapsed", 0.0))


# ------------------------------------------------------------ enumeration

def _connected_rows(n: int, rows) -> bool:
    comp = frontier = 1
    full = (1 << n) - 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~comp
        comp |= frontier
    return comp == full


@lru_cache(maxsize=None)
def orbit_representatives(n: int) -> tuple[int, ...]:
    """Masks that are minimal in their orbit under all ``n!`` relabelings.

    Scans masks upward; the first unseen mask is its orbit's minimum, and
    its whole orbit is then marked seen.
    """
    if n > MAX_SCAN_N:
        raise CapExceeded(f"n={n} exceeds the scan cap {MAX_SCAN_N}")
    e = n * (n - 1) // 2
    if e == 0:
        return (0,)
    pairs = [(i, j) for j in range(n) for i in range(j)]
    table = np.array([[pair_index(p[i], p[j]) for i, j in pairs]
                      for p in permutations(range(n))], dtype=np.int64)
    weights = np.left_shift(np.int64(1), table)
    total = 1 << e
    seen = np.zeros(total, dtype=bool)
    reps = []
    chunk = 1 << 16
    pos = 0
    while pos < total:
        free = np.flatnonzero(~seen[pos:pos + chunk])
        if free.size == 0:
            pos += chunk
            continue
        mask = pos + int(free[0])
        reps.append(mask)
        cols = [k for k in range(e) if mask >> k & 1]
        images = weights[:, cols].sum(axis=1) if cols else np.zeros(1, dtype=np.int64)
        seen[images] = True
        pos = mask + 1
    return tuple(reps)


def enumerate_connected(n: int, shard: tuple[int, int] = (0, 1), dedup: bool = False) -> Iterator[Graph]:
    for _, g in _enumerate(n, shard, dedup):
        if g is not None:
            yield g


def _enumerate(n, shard, dedup):
    """Yield ``(mask, Graph or None)`` for every mask in the shard; None
    marks a disconnected graph."""
    if not 1 <= n <= MAX_SCAN_N:
        raise CapExceeded(f"n={n} outside 1..{MAX_SCAN_N}")
    index, count = shard
    if dedup:
        masks = orbit_representatives(n)[index::count]
    else:
        masks = range(index, 1 << (n * (n - 1) // 2), count)
    for mask in masks:
        rows = mask_rows(n, mask)
        if _connected_rows(n, rows):
            yield mask, Graph._unchecked(n, rows)
        else:
            yield mask, None


# ------------------------------------------------------------------ checks

def _is_regular_or_biregular(kind):
    return kind in ("regular", "biregular")


def check_graph(g: Graph, job: ScanJob, result: ScanResult) -> None:
    cls = classify(g)
    result.kind_counts[cls.kind] = result.kind_counts.get(cls.kind, 0) + 1
    g6 = to_graph6(g)
    checks = job.checks
    ce = result.counterexamples
    if g.n == 1:
        return
    if "lemma_conditions" in checks:
        a = check_eigen_condition(g, "DSQRT1_A")
        if (a is not None) != _is_regular_or_biregular(cls.kind):
            ce.append((g6, "lemma_NL", f"DSQRT1_A={a} kind={cls.kind}"))
        q = check_eigen_condition(g, "DSQRT1_Q")
        if q is not None and cls.kind != "regular":
            ce.append((g6, "lemma_NLQ", f"eigenvalue={q} kind={cls.kind}"))
        one = check_eigen_condition(g, "ONE_NL")
        if one is not None and cls.kind != "regular":
            ce.append((g6, "lemma_NLL", f"eigenvalue={one} kind={cls.kind}"))
        sums = neighbor_degree_sums(g)
        if cls.bipartition is not None and len(set(sums)) == 1 and not _is_regular_or_biregular(cls.kind):
            ce.append((g6, "lemma_1", f"neighbor degree sums {sums}"))
    square = None
    if cls.kind == "neither" and ("con_square" in checks or "con_full" in checks):
        square = check_eigen_condition(g, "DSQRT1_A2")
    if "con_square" in checks and cls.kind == "neither" and square is not None:
        ce.append((g6, "con_square", f"eigenvalue={square}"))
    if "con_full" in checks and cls.kind == "neither":
        # odd r is settled (regular or biregular); even r needs D^{1/2}1 to
        # be an eigenvector of A^2 first
        start = 2 if job.prune else 1
        step = 2 if job.prune else 1
        if square is not None or not job.prune:
            for r in range(start, job.r_max + 1, step):
                f = power_relation_exists(g, "A", "NL", r)
                if f is not None:
                    ce.append((g6, "con_full", f"r={r} f={f}"))
                    break
    if "theorem_table" in checks:
        cmp = classify_vs_theorem(g, job.r_max)
        for (x, y), expect, found in cmp.mismatches:
            result.mismatches.append((g6, f"{x}^r=f({y})", expect, found))
        if cmp.con_full_candidates:
            ce.append((g6, "con_full", f"A^{cmp.con_full_candidates[0]}=f(NL) (theorem table)"))


def _run_unit(job: ScanJob, unit: tuple[int, int]) -> ScanResult:
    start = time.perf_counter()
    result = ScanResult()
    for n in range(max(job.n_min, 1), job.n_max + 1):
        for _, g in _enumerate(n, unit, job.dedup_for(n)):
            result.graphs_visited += 1
            if g is None:
                continue
            result.connected_count += 1
            check_graph(g, job, result)
    result.counterexamples.sort()
    result.mismatches.sort()
    result.elapsed = time.perf_counter() - start
    return result


def _units(job: ScanJob, parts: int) -> list[tuple[int, int]]:
    i, c = job.shard
    return [(i + c * j, c * parts) for j in range(parts)]


def run_scan(job: ScanJob, workers: int = 1, checkpoint: str | os.PathLike | None = None,
             parts: int | None = None) -> ScanResult:
    """Run every check of ``job`` over its shard.

    The shard is refined into ``parts`` sub-shards (default: ``workers``),
    fanned out over a process pool.  With ``checkpoint`` each finished
    sub-shard is appended to that file, and a rerun skips the ones already
    recorded.
    """
    parts = parts or max(workers, 1)
    units = _units(job, parts)
    done = _load_checkpoint(checkpoint, job, parts) if checkpoint else {}
    todo = [u for u in units if u not in done]
    results = dict(done)
    if todo:
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = {u: pool.submit(_run_unit, job, u) for u in todo}
                for u in todo:
                    results[u] = futures[u].result()
                    _append_checkpoint(checkpoint, job, parts, u, results[u])
        else:
            for u in todo:
                results[u] = _run_unit(job, u)
                _append_checkpoint(checkpoint, job, parts, u, results[u])
                log.info("unit %s done: %d connected graphs", u, results[u].connected_count)
    total = ScanResult()
    for u in units:
        total = total.merge(results[u])
    return total


# -------------------------------------------------------------- checkpoint

def _job_line(job, parts):
    return "job " + json.dumps({"job": job.to_dict(), "parts": parts}, sort_keys=True)


def _append_checkpoint(path, job, parts, unit, result):
    if not path:
        return
    fresh = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", encoding="utf-8") as fh:
        if fresh:
            fh.write(CHECKPOINT_HEADER + "\n")
            fh.write(_job_line(job, parts) + "\n")
        fh.write(f"unit {unit[0]} {unit[1]} {json.dumps(result.to_dict(), sort_keys=True)}\n")


def _load_checkpoint(path, job, parts) -> dict:
    if not os.path.exists(path):
        return {}
    with open(path, encoding="utf-8") as fh:
        lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    if not lines:
        return {}
    if lines[0] != CHECKPOINT_HEADER:
        raise ValueError(f"{path}: not a scan checkpoint (version mismatch?)")
    if len(lines) < 2 or lines[1] != _job_line(job, parts):
        raise ValueError(f"{path}: checkpoint belongs to a different job")
    done = {}
    for ln in lines[2:]:
        tag, i, c, payload = ln.split(" ", 3)
        if tag != "unit":
            raise ValueError(f"{path}: bad checkpoint line {ln[:40]!r}")
        done[(int(i), int(c))] = ScanResult.from_dict(json.loads(payload))
    return done
