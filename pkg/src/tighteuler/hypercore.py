"""Uniform hypergraphs, tight walks, and certificate verification.

Vertices are dense integers ``0..n-1``. Every edge gets a fixed index
``0..m-1`` at build time; the counting module uses these indices as bit
positions in subset masks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_K = 12


class HypergraphError(ValueError):
    """Raised for malformed hypergraph input."""


@dataclass(frozen=True)
class Hypergraph:
    k: int
    n: int
    edges: tuple[frozenset[int], ...]
    _index: dict[frozenset[int], int] = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        if self._index is None:
            object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.edges)})

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, vertices: Iterable[int]) -> int | None:
        """Index of the edge with exactly these vertices, or None."""
        return self._index.get(frozenset(vertices))

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return frozenset(vertices) in self._index

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(e)) for e in self.edges]

    def prefixes(self) -> list[tuple[int, ...]]:
        """All ordered (k-1)-sequences of distinct vertices contained in some edge, sorted."""
        out = set()
        for e in self.edges:
            for sub in itertools.combinations(sorted(e), self.k - 1):
                out.update(itertools.permutations(sub))
        return sorted(out)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.k == other.k and self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.k, self.n, frozenset(self.edges)))


def build(k: int, n: int, edge_list: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate an edge list and return a :class:`Hypergraph`.

    Edge order is preserved and fixes the edge indices.
    """
    if not 2 <= k <= MAX_K:
        raise HypergraphError(f"k must be in 2..{MAX_K}, got {k}")
    if n < k:
        raise HypergraphError(f"need n >= k, got n={n}, k={k}")
    edges: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for raw in edge_list:
        verts = list(raw)
        e = frozenset(verts)
        if len(e) != len(verts):
            raise HypergraphError(f"repeated vertex in edge {verts}")
        if len(e) != k:
            raise HypergraphError(f"edge {verts} has size {len(e)}, expected {k}")
        for v in e:
            if not (isinstance(v, int) and 0 <= v < n):
                raise HypergraphError(f"vertex {v!r} out of range 0..{n - 1}")
        if e in seen:
            raise HypergraphError(f"duplicate edge {sorted(e)}")
        seen.add(e)
        edges.append(e)
    return Hypergraph(k, n, tuple(edges))


def codegree(h: Hypergraph, u: int, v: int) -> int:
    if u == v:
        raise HypergraphError("codegree needs two distinct vertices")
    _check_vertex(h, u)
    _check_vertex(h, v)
    return sum(1 for e in h.edges if u in e and v in e)


def max_codegree(h: Hypergraph) -> int:
    counts: dict[tuple[int, int], int] = {}
    for e in h.edges:
        for pair in itertools.combinations(sorted(e), 2):
            counts[pair] = counts.get(pair, 0) + 1
    return max(counts.values(), default=0)


def degree(h: Hypergraph, v: int) -> int:
    _check_vertex(h, v)
    return sum(1 for e in h.edges if v in e)


def degrees(h: Hypergraph) -> list[int]:
    out = [0] * h.n
    for e in h.edges:
        for v in e:
            out[v] += 1
    return out


def divisibility_filter(h: Hypergraph) -> bool:
    """Necessary condition for a tight Euler tour: k divides every nonzero degree.

    Each appearance of a vertex in a closed tight trail lies in exactly k
    windows, so a vertex of degree d must appear d/k times.
    """
    return all(d % h.k == 0 for d in degrees(h))


def _check_vertex(h: Hypergraph, v: int) -> None:
    if not 0 <= v < h.n:
        raise HypergraphError(f"vertex {v} out of range 0..{h.n - 1}")


@dataclass(frozen=True)
class WalkSeq:
    """A vertex sequence read as a tight walk; ``closed`` makes windows wrap."""

    verts: tuple[int, ...]
    closed: bool = False

    def __init__(self, verts: Sequence[int], closed: bool = False):
        object.__setattr__(self, "verts", tuple(verts))
        object.__setattr__(self, "closed", bool(closed))

    def __len__(self) -> int:
        return len(self.verts)

    def reversed(self) -> WalkSeq:
        return WalkSeq(self.verts[::-1], self.closed)

    def windows(self, k: int) -> list[tuple[int, ...]]:
        """Ordered windows; ``s-k+1`` of them when open, ``s`` when closed."""
        v = self.verts
        s = len(v)
        if self.closed:
            return [tuple(v[(i + j) % s] for j in range(k)) for i in range(s)]
        return [v[i:i + k] for i in range(s - k + 1)]

    def length(self, k: int) -> int:
        return len(self.verts) if self.closed else max(len(self.verts) - k + 1, 0)


@dataclass(frozen=True)
class TrailCheck:
    ok: bool
    reason: str = ""
    edge_indices: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def check_trail(h: Hypergraph, w: WalkSeq) -> TrailCheck:
    """Check that every window is an edge and no edge repeats.

    Malformed input yields a failed check with a reason, never an exception.
    """
    k = h.k
    s = len(w.verts)
    if any(not isinstance(v, int) or not 0 <= v < h.n for v in w.verts):
        return TrailCheck(False, "vertex id out of range")
    if w.closed:
        if s < k:
            return TrailCheck(False, f"closed walk needs at least k={k} vertices, got {s}")
    elif s < k - 1:
        return TrailCheck(False, f"walk needs at least k-1={k - 1} vertices, got {s}")
    used: list[int] = []
    seen: set[int] = set()
    for pos, win in enumerate(w.windows(k)):
        idx = h.edge_index(win)
        if idx is None or len(set(win)) != k:
            return TrailCheck(False, f"window {pos} {list(win)} is not an edge")
        if idx in seen:
            return TrailCheck(False, f"window {pos} repeats edge {sorted(h.edges[idx])}")
        seen.add(idx)
        used.append(idx)
    return TrailCheck(True, "", tuple(used))


def is_tight_trail(h: Hypergraph, w: WalkSeq) -> bool:
    return check_trail(h, w).ok


@dataclass(frozen=True)
class Verdict:
    kind: str  # "euler_trail" | "euler_tour" | "not_euler"
    reason: str = ""

    @property
    def is_euler(self) -> bool:
        return self.kind != "not_euler"

    def __str__(self) -> str:
        return self.kind if not self.reason else f"{self.kind}: {self.reason}"


def verify_euler(h: Hypergraph, w: WalkSeq) -> Verdict:
    chk = check_trail(h, w)
    if not chk.ok:
        return Verdict("not_euler", chk.reason)
    covered = len(chk.edge_indices)
    if covered != h.m:
        return Verdict("not_euler", f"covers {covered} of {h.m} edges")
    return Verdict("euler_tour" if w.closed else "euler_trail")


# -- text formats -----------------------------------------------------------

def _content_lines(text: str) -> list[str]:
    return [ln for ln in (raw.strip() for raw in text.splitlines())
            if ln and not ln.startswith("#")]


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the ``k n m`` header followed by m edge lines."""
    lines = _content_lines(text)
    if not lines:
        raise HypergraphError("empty hypergraph file")
    try:
        k, n, m = (int(x) for x in lines[0].split())
        rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise HypergraphError(f"malformed hypergraph file: {exc}") from None
    if len(rows) != m:
        raise HypergraphError(f"header declares {m} edges, found {len(rows)}")
    for row in rows:
        if len(row) != k:
            raise HypergraphError(f"edge line {row} has {len(row)} ids, expected {k}")
    return build(k, n, rows)


def format_hypergraph(h: Hypergraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {ln}" for ln in comment.splitlines())
    out.append(f"{h.k} {h.n} {h.m}")
    out.extend(" ".join(map(str, e)) for e in h.sorted_edges())
    return "\n".join(out) + "\n"


def parse_walk(text: str) -> WalkSeq:
    lines = _content_lines(text)
    if len(lines) < 1 or lines[0] not in ("open", "closed"):
        raise HypergraphError("walk file must start with 'open' or 'closed'")
    try:
        verts = [int(x) for ln in lines[1:] for x in ln.split()]
    except ValueError as exc:
        raise HypergraphError(f"malformed walk file: {exc}") from None
    return WalkSeq(verts, lines[0] == "closed")


def format_walk(w: WalkSeq) -> str:
    return ("closed" if w.closed else "open") + "\n" + " ".join(map(str, w.verts)) + "\n"
