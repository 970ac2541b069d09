import random

import pytest

from conftest import brute_walk_count
from tighteuler.counting import (
    CountingError, TooLargeError, count, count_euler_tours, count_euler_trails,
    count_trails_between, exists_euler_tour, walk_counts,
)
from tighteuler.generators import gen_complete, gen_h_ell, gen_random, gen_tight_cycle
from tighteuler.hypercore import HypergraphError, build, divisibility_filter
from tighteuler.search import enumerate_euler_tours, enumerate_euler_trails

C6 = gen_tight_cycle(6)
SINGLE = build(3, 3, [{0, 1, 2}])
TWO_DISJOINT = build(3, 6, [{0, 1, 2}, {3, 4, 5}])


def test_walk_oracle_pins_seven():
    # 7 was produced by this brute-force product, not by the DP
    assert brute_walk_count(C6, (0, 1), (0, 1), 6) == 7


def test_walk_counts_c6():
    t = walk_counts(C6, (0, 1), 6)
    assert t[6, (0, 1)] == 7
    assert t[0, (0, 1)] == 1
    assert sum(t[0, p] for p in t.states) == 1


def test_walk_counts_start_outside_edges():
    t = walk_counts(C6, (0, 3), 6)
    assert all(v == 0 for row in t.rows for v in row.values())


def test_walk_counts_rejects_repeated_prefix():
    with pytest.raises(HypergraphError):
        walk_counts(C6, (1, 1), 3)


@pytest.mark.parametrize("seed", range(8))
def test_walk_counts_against_brute_force(seed):
    rng = random.Random(seed)
    h = gen_random(5, 3, rng.randint(3, 8), seed)
    starts = h.prefixes()
    start = rng.choice(starts)
    table = walk_counts(h, start, 4)
    for d in range(5):
        for end in starts:
            assert table[d, end] == brute_walk_count(h, start, end, d)


def test_trails_between():
    assert count_trails_between(C6, (0, 1), (0, 1)) == 1
    assert count_trails_between(C6, (1, 0), (1, 0)) == 1
    assert count_trails_between(C6, (0, 1), (1, 0)) == 0
    assert count_trails_between(SINGLE, (0, 1), (1, 2)) == 1


def test_trails_between_sums_to_total():
    h = gen_random(5, 3, 6, 3)
    pref = h.prefixes()
    total = sum(count_trails_between(h, y, x) for y in pref for x in pref)
    assert total == count_euler_trails(h) == len(enumerate_euler_trails(h))
    closed = sum(count_trails_between(h, x, x) for x in pref)
    assert closed == 2 * h.m * count_euler_tours(h)


def test_trail_counts():
    assert count_euler_trails(SINGLE) == 6
    assert count_euler_trails(C6) == 12
    assert count_euler_trails(TWO_DISJOINT) == 0


@pytest.mark.parametrize("n", range(5, 10))
def test_cycle_has_one_tour(n):
    assert count_euler_tours(gen_tight_cycle(n)) == 1


def test_tour_counts_small():
    assert count_euler_tours(SINGLE) == 0
    h = gen_complete(5, 3)
    assert count_euler_tours(h) == len(enumerate_euler_tours(h)) == 0


def test_tours_in_graphs():
    # k = 2: the 4-cycle has one Euler tour, K4 has none (odd degrees)
    c4 = build(2, 4, [{0, 1}, {1, 2}, {2, 3}, {3, 0}])
    assert count_euler_tours(c4) == 1
    assert count_euler_tours(gen_complete(4, 2)) == 0
    k5 = gen_complete(5, 2)
    assert count_euler_tours(k5) == len(enumerate_euler_tours(k5))


def test_four_uniform_agrees_with_search():
    h = gen_tight_cycle(7, 4)
    assert count_euler_tours(h) == len(enumerate_euler_tours(h)) == 1
    assert count_euler_trails(h) == len(enumerate_euler_trails(h))


def test_exists():
    assert exists_euler_tour(C6)
    assert not exists_euler_tour(SINGLE)
    assert exists_euler_tour(gen_h_ell(7)[0], method="search")


def test_divisibility_filter_implies_zero():
    for seed in range(15):
        h = gen_random(6, 3, 7, seed)
        if not divisibility_filter(h):
            assert count_euler_tours(h) == 0
            assert enumerate_euler_tours(h) == []


def test_unique_tour_vanishes_when_edge_removed():
    for n in (6, 8):
        h = gen_tight_cycle(n)
        assert count_euler_tours(h) == 1
        smaller = build(3, n, list(h.edges)[:-1])
        assert count_euler_tours(smaller) == 0


def test_large_cap():
    h = gen_random(9, 3, 31, 0)
    with pytest.raises(TooLargeError):
        count(h)


def test_object_dtype_path_matches_int64(monkeypatch):
    import tighteuler.counting as counting_mod
    h = gen_random(6, 3, 9, 4)
    fast = count(h)
    monkeypatch.setattr(counting_mod, "_INT64_LIMIT", 0)
    assert counting_mod._SubsetCounter(h).dtype is object
    slow = count(h)
    assert (fast.trail_count, fast.tour_count) == (slow.trail_count, slow.tour_count)


def test_k5_graph_tours():
    # K_5 (k=2) is Eulerian; divide by 2m must be exact
    h = gen_complete(5, 2)
    rep = count(h)
    assert rep.tour_count == len(enumerate_euler_tours(h)) > 0
    assert rep.trail_count == 2 * h.m * rep.tour_count


def test_report_json():
    rep = count(C6)
    js = rep.to_json()
    assert js["trail_count"] == "12" and js["tour_count"] == "1"
    assert js["subsets_processed"] == 64


def test_threads_agree():
    h = gen_random(7, 3, 10, 5)
    a, b = count(h, threads=1), count(h, threads=3)
    assert (a.trail_count, a.tour_count) == (b.trail_count, b.tour_count)


def test_subset_semantics_brute_force():
    # count of length-m walks avoiding W equals brute-force walks in (V, E \ W)
    h = gen_random(5, 3, 5, 11)
    m = h.m
    start = h.prefixes()[0]
    for mask in range(1 << m):
        kept = build(3, h.n, [e for i, e in enumerate(h.edges) if not mask >> i & 1])
        table = walk_counts(kept, start, m)
        for end in h.prefixes():
            assert table[m, end] == brute_walk_count(kept, start, end, m)


def test_divisibility_diagnostic(monkeypatch):
    import tighteuler.counting as counting_mod
    monkeypatch.setattr(counting_mod._SubsetCounter, "partial", lambda self, lo, hi: (5, 5))
    with pytest.raises(CountingError, match="not divisible"):
        count(C6)
    monkeypatch.setattr(counting_mod._SubsetCounter, "partial", lambda self, lo, hi: (-12, 0))
    with pytest.raises(CountingError, match="negative"):
        count(C6)
