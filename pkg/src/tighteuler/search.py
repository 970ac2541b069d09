"""Backtracking enumeration of tight Euler trails and tours.

This is the brute-force oracle for the counting module, plus the
forced-extension walker that solves 3-uniform hypergraphs of maximum
codegree at most 2 in polynomial time.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from .hypercore import Hypergraph, HypergraphError, WalkSeq, max_codegree, verify_euler

log = logging.getLogger(__name__)


class _Index:
    """Edges containing each (k-1)-set, with the vertex that completes them."""

    def __init__(self, h: Hypergraph):
        self.k = h.k
        self.ext: dict[frozenset[int], list[tuple[int, int]]] = {}
        for j, e in enumerate(h.edges):
            for v in e:
                self.ext.setdefault(e - {v}, []).append((v, j))
        for lst in self.ext.values():
            lst.sort()

    def continuations(self, tail) -> list[tuple[int, int]]:
        return self.ext.get(frozenset(tail), [])


def _extend(idx: _Index, seq: list[int], used: int, remaining: int, out: list,
            limit: int | None, closed_only: bool) -> bool:
    """Depth-first extension; returns True once ``limit`` results are collected."""
    if remaining == 0:
        k1 = idx.k - 1
        if not closed_only or seq[:k1] == seq[-k1:]:
            out.append(tuple(seq))
            return limit is not None and len(out) >= limit
        return False
    tail = seq[len(seq) - idx.k + 1:]
    for v, j in idx.continuations(tail):
        if used >> j & 1:
            continue
        seq.append(v)
        done = _extend(idx, seq, used | (1 << j), remaining - 1, out, limit, closed_only)
        seq.pop()
        if done:
            return True
    return False


def _starts(h: Hypergraph, edges) -> list[tuple[tuple[int, ...], int]]:
    starts = []
    for j in edges:
        for perm in itertools.permutations(sorted(h.edges[j])):
            starts.append((perm, j))
    starts.sort()
    return starts


def enumerate_euler_trails(h: Hypergraph, limit: int | None = None) -> list[WalkSeq]:
    """All tight Euler trails as open vertex sequences, in lexicographic order."""
    if h.m < 1:
        raise HypergraphError("enumeration needs at least one edge")
    idx = _Index(h)
    out: list[tuple[int, ...]] = []
    for perm, j in _starts(h, range(h.m)):
        if _extend(idx, list(perm), 1 << j, h.m - 1, out, limit, False):
            break
    return [WalkSeq(s, closed=False) for s in out]


def _rotations(verts: tuple[int, ...]):
    for i in range(len(verts)):
        yield verts[i:] + verts[:i]


def canonicalize(w: WalkSeq | tuple[int, ...], h: Hypergraph | None = None) -> tuple[int, ...]:
    """Lexicographically least rotation of the tour or of its reverse.

    With ``h`` given the input is first checked to be a tight Euler tour.
    """
    if isinstance(w, WalkSeq):
        if h is not None:
            verdict = verify_euler(h, w)
            if verdict.kind != "euler_tour":
                raise HypergraphError(f"not an Euler tour: {verdict}")
        verts = w.verts
    else:
        verts = tuple(w)
    if not verts:
        return verts
    return min(itertools.chain(_rotations(verts), _rotations(verts[::-1])))


def orbit_size(verts: tuple[int, ...]) -> int:
    return len(set(_rotations(verts)) | set(_rotations(verts[::-1])))


def enumerate_euler_tours(h: Hypergraph, limit: int | None = None) -> list[tuple[int, ...]]:
    """Distinct tight Euler tours in canonical form, sorted.

    Every tour contains edge 0, so rotating it to start there loses nothing;
    only the orderings of that edge are tried as the opening window.
    """
    if h.m < 1:
        raise HypergraphError("enumeration needs at least one edge")
    tours: set[tuple[int, ...]] = set()
    idx = _Index(h)
    k1 = h.k - 1
    for perm, j in _starts(h, [0]):
        found: list[tuple[int, ...]] = []
        _extend(idx, list(perm), 1 << j, h.m - 1, found, None, True)
        for s in found:
            c = canonicalize(s[:-k1])
            if c not in tours:
                size = orbit_size(c)
                if size != 2 * h.m:
                    log.warning("tour %s has orbit size %d, expected %d", c, size, 2 * h.m)
                tours.add(c)
                if limit is not None and len(tours) >= limit:
                    return sorted(tours)
    return sorted(tours)


@dataclass(frozen=True)
class ForcedResult:
    kind: str  # "tour" | "trail" | "stuck"
    walk: WalkSeq


def forced_walk(h: Hypergraph, seed) -> ForcedResult:
    """Follow the unique unused continuation from a 3-vertex seed window.

    In a 3-uniform hypergraph of maximum codegree 2 the trailing pair of a
    trail lies in at most one other edge, so there is never a choice.
    Extension stops when that edge is used or missing; if the walk then ends
    on the seed's leading pair it has closed into a tour.
    """
    if h.k != 3:
        raise HypergraphError("forced_walk needs a 3-uniform hypergraph")
    if max_codegree(h) > 2:
        raise HypergraphError("forced_walk needs maximum codegree at most 2")
    seed = tuple(seed)
    if len(seed) != 3:
        raise HypergraphError("seed must have exactly 3 vertices")
    j0 = h.edge_index(seed)
    if j0 is None or len(set(seed)) != 3:
        raise HypergraphError(f"seed {list(seed)} is not an edge")
    idx = _Index(h)
    seq = list(seed)
    used = {j0}
    while True:
        nxt = [(v, j) for v, j in idx.continuations(seq[-2:]) if j not in used]
        if not nxt:
            break
        v, j = nxt[0]
        used.add(j)
        seq.append(v)
    if len(seq) == 3:
        return ForcedResult("stuck", WalkSeq(seq))
    if len(seq) >= 5 and seq[-2:] == seq[:2]:
        return ForcedResult("tour", WalkSeq(seq[:-2], closed=True))
    return ForcedResult("trail", WalkSeq(seq))
