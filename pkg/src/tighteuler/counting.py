"""Exact counting of tight Euler trails and tours by inclusion-exclusion.

For a subset ``W`` of edges, the number of tight walks of length ``m`` that
avoid ``W`` is a walk-count dynamic program over ordered ``(k-1)``-prefixes.
Summing these counts with sign ``(-1)^|W|`` over all ``2^m`` subsets leaves
exactly the walks that use every edge, i.e. the Euler trails. Only one
subset's state is alive at a time, so memory stays polynomial in ``m``.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .hypercore import Hypergraph, HypergraphError, divisibility_filter

Prefix = tuple[int, ...]

MAX_EDGES = 30
# int64 fast path is used only while every intermediate count provably fits.
_INT64_LIMIT = 2**62


class CountingError(RuntimeError):
    """An internal consistency check failed; results must not be trusted."""


class TooLargeError(ValueError):
    pass


@dataclass
class WalkCountTable:
    """``rows[d][p]`` = number of tight start->p walks of length d."""

    start: Prefix
    states: list[Prefix]
    rows: list[dict[Prefix, int]]

    def __getitem__(self, key: tuple[int, Prefix]) -> int:
        d, p = key
        return self.rows[d].get(tuple(p), 0)

    @property
    def max_len(self) -> int:
        return len(self.rows) - 1


@dataclass
class CountReport:
    trail_count: int
    tour_count: int
    subsets_processed: int
    wall_time: float  # seconds

    def to_json(self) -> dict:
        return {
            "trail_count": str(self.trail_count),
            "tour_count": str(self.tour_count),
            "subsets_processed": self.subsets_processed,
            "wall_time_ms": round(self.wall_time * 1000.0, 3),
        }


def _check_prefix(h: Hypergraph, p) -> Prefix:
    p = tuple(p)
    if len(p) != h.k - 1:
        raise HypergraphError(f"prefix {list(p)} must have length k-1={h.k - 1}")
    if len(set(p)) != len(p):
        raise HypergraphError(f"prefix {list(p)} has repeated vertices")
    return p


def _predecessors(edges, k: int) -> dict[Prefix, list[Prefix]]:
    """Map each prefix x' to the prefixes x0 x'_1..x'_{k-2} with {x0} u x' an edge."""
    pred: dict[Prefix, list[Prefix]] = {}
    for e in edges:
        for perm in itertools.permutations(sorted(e)):
            head, tail = perm[:-1], perm[1:]
            pred.setdefault(tail, []).append(head)
    return pred


def _walk_table(edges, k: int, start: Prefix, max_len: int) -> WalkCountTable:
    pred = _predecessors(edges, k)
    states = sorted(pred)
    row = {p: 0 for p in states}
    if start in row:
        row[start] = 1
    rows = [row]
    for _ in range(max_len):
        prev = rows[-1]
        rows.append({p: sum(prev[q] for q in pred[p]) for p in states})
    return WalkCountTable(start, states, rows)


def walk_counts(h: Hypergraph, start, max_len: int) -> WalkCountTable:
    """Walk counts from ``start`` to every prefix, for lengths ``0..max_len``.

    If ``start`` is not contained in any edge every entry is zero.
    """
    start = _check_prefix(h, start)
    return _walk_table(h.edges, h.k, start, max_len)


def count_trails_between(h: Hypergraph, y, x) -> int:
    """Number of tight Euler trails starting with prefix ``y`` and ending with ``x``."""
    y = _check_prefix(h, y)
    x = _check_prefix(h, x)
    m = h.m
    total = 0
    for mask in range(1 << m):
        kept = [e for i, e in enumerate(h.edges) if not mask >> i & 1]
        t = _walk_table(kept, h.k, y, m)
        sign = -1 if mask.bit_count() & 1 else 1
        total += sign * t[m, x]
    if total < 0:
        raise CountingError(f"negative inclusion-exclusion total {total}")
    return total


class _SubsetCounter:
    """Per-hypergraph transition data, shared by all subsets.

    The forward recursion is batched over every start prefix at once: the
    ``d``-step table for all starts is the ``d``-th power of the transition
    matrix of the surviving edges. Its trace counts closed walks and its
    entry sum counts all walks.
    """

    def __init__(self, h: Hypergraph):
        self.m = h.m
        self.states = h.prefixes()
        index = {p: i for i, p in enumerate(self.states)}
        s = len(self.states)
        src, dst, eid = [], [], []
        for j, e in enumerate(h.edges):
            for perm in itertools.permutations(sorted(e)):
                src.append(index[perm[:-1]])
                dst.append(index[perm[1:]])
                eid.append(j)
        self.size = s
        self.flat = np.asarray(src, dtype=np.int64) * s + np.asarray(dst, dtype=np.int64)
        self.eid = np.asarray(eid, dtype=np.int64)
        full = np.bincount(self.flat, minlength=s * s).reshape(s, s)
        rho = int(full.sum(axis=1).max()) if s else 0
        self.dtype = np.int64 if s * rho ** self.m < _INT64_LIMIT else object

    def closed_and_total(self, mask: int) -> tuple[int, int]:
        if self.m < 63:
            removed = (mask >> self.eid) & 1
        else:
            removed = np.array([mask >> int(j) & 1 for j in self.eid], dtype=np.int64)
        keep = 1 - removed
        a = np.bincount(self.flat, weights=keep, minlength=self.size * self.size)
        a = a.astype(np.int64).reshape(self.size, self.size)
        if self.dtype is object:
            a = a.astype(object)
        p = np.linalg.matrix_power(a, self.m)
        return int(np.trace(p)), int(p.sum())

    def partial(self, lo: int, hi: int) -> tuple[int, int]:
        closed = total = 0
        for mask in range(lo, hi):
            c, t = self.closed_and_total(mask)
            if mask.bit_count() & 1:
                closed -= c
                total -= t
            else:
                closed += c
                total += t
        return closed, total


def _worker(args) -> tuple[int, int]:
    h, lo, hi = args
    return _SubsetCounter(h).partial(lo, hi)


def _split(n_items: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, n_items))
    step, extra = divmod(n_items, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def count(h: Hypergraph, threads: int = 1, force_large: bool = False) -> CountReport:
    """Count tight Euler trails and tours of ``h`` in one pass over all edge subsets."""
    m = h.m
    if m < 1:
        raise HypergraphError("counting needs at least one edge")
    if m > MAX_EDGES and not force_large:
        raise TooLargeError(
            f"m={m} exceeds {MAX_EDGES}; use the search module or force_large=True")
    t0 = time.perf_counter()
    n_subsets = 1 << m
    if threads <= 1:
        closed, total = _SubsetCounter(h).partial(0, n_subsets)
    else:
        # A few chunks per worker keeps the load balanced.
        chunks = _split(n_subsets, threads * 4)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_worker, [(h, lo, hi) for lo, hi in chunks]))
        closed = sum(c for c, _ in parts)
        total = sum(t for _, t in parts)
    if closed < 0 or total < 0:
        raise CountingError(f"negative inclusion-exclusion total ({closed}, {total})")
    if closed % (2 * m):
        raise CountingError(
            f"closed Euler trail count {closed} is not divisible by 2m={2 * m}")
    return CountReport(total, closed // (2 * m), n_subsets, time.perf_counter() - t0)


def count_euler_trails(h: Hypergraph, threads: int = 1, force_large: bool = False) -> int:
    """Euler trails as directed vertex sequences; a sequence and its reverse both count."""
    return count(h, threads, force_large).trail_count


def count_euler_tours(h: Hypergraph, threads: int = 1, force_large: bool = False) -> int:
    """Euler tours up to rotation and reversal."""
    return count(h, threads, force_large).tour_count


def exists_euler_tour(h: Hypergraph, threads: int = 1, force_large: bool = False,
                      method: str = "count") -> bool:
    if h.m < 1 or not divisibility_filter(h):
        return False
    if method == "search":
        from .search import enumerate_euler_tours
        return bool(enumerate_euler_tours(h, limit=1))
    if method != "count":
        raise ValueError(f"unknown method {method!r}")
    return count_euler_tours(h, threads, force_large) > 0
