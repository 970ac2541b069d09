"""Constructors for the hypergraph families used throughout the package.

The torus gadget ``H_l`` uses this dense id layout (stable, so certificate
files stay portable):

    numeric vertices 0..l+1   -> ids 0..l+1
    v_i^a, i = 1..l-1          -> ids l+1+i
    v_i^b, i = 1..l-1          -> ids 2l+i
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple, Sequence

from .hypercore import Hypergraph, HypergraphError, WalkSeq, build


def gen_tight_cycle(n: int, k: int = 3) -> Hypergraph:
    """Tight cycle: edges ``{i, i+1, ..., i+k-1} mod n``."""
    if n <= k:
        raise HypergraphError(f"tight cycle needs n > k, got n={n}, k={k}")
    return build(k, n, [[(i + j) % n for j in range(k)] for i in range(n)])


def gen_path(t: int) -> Hypergraph:
    """3-uniform tight path on 2t vertices with edges ``{i, i+1, i+2}``, i <= 2t-3."""
    if t < 2:
        raise HypergraphError(f"path needs t >= 2, got {t}")
    return build(3, 2 * t, [[i, i + 1, i + 2] for i in range(2 * t - 2)])


def gen_complete(n: int, k: int) -> Hypergraph:
    if not 2 <= k <= n:
        raise HypergraphError(f"complete hypergraph needs n >= k >= 2, got n={n}, k={k}")
    return build(k, n, itertools.combinations(range(n), k))


def gen_wreath(n: int, k: int, perm: Sequence[int] | None = None) -> Hypergraph:
    """Consecutive k-blocks of residues 1..n, lcm(n, k)/k of them, relabelled by ``perm``.

    ``perm[r]`` is the new id of residue ``r + 1``.
    """
    if not 2 <= k < n:
        raise HypergraphError(f"wreath needs n > k >= 2, got n={n}, k={k}")
    perm = list(range(n)) if perm is None else list(perm)
    if sorted(perm) != list(range(n)):
        raise HypergraphError("perm must be a permutation of 0..n-1")
    a = math.lcm(n, k) // k
    blocks: list[list[int]] = []
    seen: set[frozenset[int]] = set()
    for j in range(1, a + 1):
        residues = [((j - 1) * k + r - 1) % n + 1 for r in range(1, k + 1)]
        block = [perm[r - 1] for r in residues]
        if frozenset(block) not in seen:
            seen.add(frozenset(block))
            blocks.append(block)
    return build(k, n, blocks)


def gen_random(n: int, k: int, m: int, seed: int) -> Hypergraph:
    """m distinct k-subsets of 0..n-1 sampled uniformly; deterministic in ``seed``."""
    total = math.comb(n, k)
    if not 0 <= m <= total:
        raise HypergraphError(f"cannot draw {m} distinct edges from C({n},{k})={total}")
    rng = random.Random(seed)
    return build(k, n, rng.sample(list(itertools.combinations(range(n), k)), m))


# -- the torus gadget -------------------------------------------------------

class OrderingType(str, Enum):
    N = "N"
    T = "T"
    F = "F"


@dataclass(frozen=True)
class HellLabels:
    ell: int

    def a(self, i: int) -> int:
        self._check_index(i)
        return self.ell + 1 + i

    def b(self, i: int) -> int:
        self._check_index(i)
        return 2 * self.ell + i

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.ell - 1:
            raise HypergraphError(f"gadget index {i} outside 1..{self.ell - 1}")

    @property
    def n(self) -> int:
        return 3 * self.ell

    def name(self, v: int) -> str:
        ell = self.ell
        if 0 <= v <= ell + 1:
            return str(v)
        if ell + 2 <= v <= 2 * ell:
            return f"v{v - ell - 1}a"
        if 2 * ell + 1 <= v < 3 * ell:
            return f"v{v - 2 * ell}b"
        raise HypergraphError(f"id {v} outside H_{ell}")

    def vertex(self, name: str | int) -> int:
        """Inverse of :meth:`name`: ``'7'``, ``7``, ``'v3a'`` or ``'v3b'``."""
        if isinstance(name, int) or name.isdigit():
            v = int(name)
            if not 0 <= v <= self.ell + 1:
                raise HypergraphError(f"numeric vertex {v} outside 0..{self.ell + 1}")
            return v
        if name.startswith("v") and name[-1] in "ab":
            i = int(name[1:-1])
            return self.a(i) if name[-1] == "a" else self.b(i)
        raise HypergraphError(f"unknown vertex name {name!r}")

    def to_json(self) -> dict:
        return {"ell": self.ell, "names": [self.name(v) for v in range(self.n)]}


def _check_ell(ell: int) -> None:
    if ell <= 4:
        raise HypergraphError(f"H_l needs l > 4, got {ell}")


def hell_edge_blocks(ell: int) -> list[list[tuple[int, int, int]]]:
    """The six-edge families E_1..E_l, in id form."""
    _check_ell(ell)
    lab = HellLabels(ell)
    a, b, L = lab.a, lab.b, ell
    blocks = [[(1, 0, L), (1, a(1), L), (a(1), L, L + 1),
               (a(1), b(1), L + 1), (b(1), L + 1, 0), (b(1), 1, 0)]]
    for i in range(2, ell):
        blocks.append([(i, i - 1, a(i - 1)), (i, a(i), a(i - 1)),
                       (a(i), a(i - 1), b(i - 1)), (a(i), b(i), b(i - 1)),
                       (b(i), b(i - 1), i - 1), (b(i), i, i - 1)])
    blocks.append([(L, L - 1, a(L - 1)), (L, L + 1, a(L - 1)),
                   (L + 1, a(L - 1), b(L - 1)), (L + 1, 0, b(L - 1)),
                   (0, b(L - 1), L - 1), (0, L, L - 1)])
    return blocks


def gen_h_ell(ell: int) -> tuple[Hypergraph, HellLabels]:
    blocks = hell_edge_blocks(ell)
    return build(3, 3 * ell, [e for block in blocks for e in block]), HellLabels(ell)


class GadgetTour(NamedTuple):
    walk: WalkSeq
    euler: bool


def _type_t_sequence(ell: int) -> list[int]:
    lab = HellLabels(ell)
    seq = [0, ell]
    for i in range(1, ell):
        seq += [i, lab.a(i)]
    seq += [ell, ell + 1]
    for i in range(1, ell):
        seq += [lab.a(i), lab.b(i)]
    seq += [ell + 1, 0]
    for i in range(1, ell):
        seq += [lab.b(i), i]
    return seq


def tour_of_type(ell: int, kind: OrderingType | str) -> GadgetTour:
    """The gadget tour of type N, T or F.

    N is the short tour through E_1, T is written out directly, and F is
    obtained by forced extension from the ordering ``(l, 0, 1)``; F is an
    Euler tour exactly when ``l % 3 != 1``.
    """
    from .search import forced_walk

    _check_ell(ell)
    kind = OrderingType(kind)
    lab = HellLabels(ell)
    if kind is OrderingType.N:
        return GadgetTour(WalkSeq([0, 1, ell, lab.a(1), ell + 1, lab.b(1)], closed=True), False)
    if kind is OrderingType.T:
        return GadgetTour(WalkSeq(_type_t_sequence(ell), closed=True), True)
    h, _ = gen_h_ell(ell)
    res = forced_walk(h, (ell, 0, 1))
    if res.kind != "tour":
        raise RuntimeError(f"type F walk in H_{ell} did not close ({res.kind})")
    return GadgetTour(res.walk, len(res.walk) == h.m)


def _cyclic_triples(verts: Sequence[int]):
    s = len(verts)
    for i in range(s):
        yield (verts[i], verts[(i + 1) % s], verts[(i + 2) % s])


@lru_cache(maxsize=64)
def _ordering_table(ell: int) -> dict[tuple[int, int, int], OrderingType]:
    table: dict[tuple[int, int, int], OrderingType] = {}
    for kind in (OrderingType.T, OrderingType.F):
        for tri in _cyclic_triples(tour_of_type(ell, kind).walk.verts):
            table[tri] = kind
            table[tri[::-1]] = kind
    return table


def ordering_type(ell: int, edge, ordering) -> OrderingType:
    """Classify an ordering of an edge of ``H_l`` as type N, T or F.

    Orderings occurring (up to reversal) in the type-T or type-F tour get
    that type; the remaining one is N. Defined only for ``l % 3 != 1``.
    """
    _check_ell(ell)
    if ell % 3 == 1:
        raise HypergraphError(f"ordering types are defined only for l % 3 != 1, got l={ell}")
    ordering = tuple(ordering)
    edge_set = frozenset(edge)
    h, _ = _hell_cached(ell)
    if len(ordering) != 3 or frozenset(ordering) != edge_set or len(edge_set) != 3:
        raise HypergraphError(f"{list(ordering)} is not an ordering of {sorted(edge_set)}")
    if not h.has_edge(edge_set):
        raise HypergraphError(f"{sorted(edge_set)} is not an edge of H_{ell}")
    return _ordering_table(ell).get(ordering, OrderingType.N)


@lru_cache(maxsize=64)
def _hell_cached(ell: int) -> tuple[Hypergraph, HellLabels]:
    return gen_h_ell(ell)
