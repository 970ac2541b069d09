import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tighteuler.generators import gen_complete, gen_h_ell, gen_random, gen_tight_cycle, tour_of_type
from tighteuler.hypercore import (
    HypergraphError, WalkSeq, build, codegree, degree, divisibility_filter,
    format_hypergraph, format_walk, is_tight_trail, max_codegree, parse_hypergraph,
    parse_walk, verify_euler,
)

C6_EDGES = [{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 0}, {5, 0, 1}]


@pytest.fixture
def c6():
    return build(3, 6, C6_EDGES)


def test_build_c6(c6):
    assert c6.m == 6
    assert c6 == gen_tight_cycle(6, 3)


def test_build_single_edge():
    assert build(3, 3, [{0, 1, 2}]).m == 1


@pytest.mark.parametrize("k, n, edges, msg", [
    (3, 4, [{0, 1, 2}, {0, 1, 2}], "duplicate"),
    (3, 4, [[0, 1, 2], [2, 1, 0]], "duplicate"),
    (3, 4, [{0, 1}], "size"),
    (3, 4, [{0, 1, 7}], "range"),
    (3, 4, [[0, 1, 1]], "repeated"),
    (1, 4, [], "k must"),
    (3, 2, [], "n >= k"),
    (13, 20, [], "k must"),
])
def test_build_errors(k, n, edges, msg):
    with pytest.raises(HypergraphError, match=msg):
        build(k, n, edges)


def test_edge_indices_are_stable(c6):
    for i, e in enumerate(C6_EDGES):
        assert c6.edge_index(e) == i
    assert c6.edge_index({0, 1, 3}) is None


@pytest.mark.parametrize("u, v, expected", [(0, 1, 2), (0, 2, 1), (0, 3, 0), (5, 0, 2)])
def test_codegree_c6(c6, u, v, expected):
    # independent count straight from the literal edge list
    assert expected == sum(1 for e in C6_EDGES if u in e and v in e)
    assert codegree(c6, u, v) == expected


def test_codegree_same_vertex(c6):
    with pytest.raises(HypergraphError):
        codegree(c6, 2, 2)


def test_max_codegree():
    assert max_codegree(gen_tight_cycle(6, 3)) == 2
    assert max_codegree(gen_h_ell(5)[0]) == 2
    assert max_codegree(build(3, 4, [])) == 0


def test_degree(c6):
    assert degree(c6, 0) == 3
    assert degree(build(3, 4, [{0, 1, 2}]), 0) == 1
    assert degree(build(3, 4, [{0, 1, 2}]), 3) == 0
    with pytest.raises(HypergraphError):
        degree(c6, 6)


def test_is_tight_trail(c6):
    assert is_tight_trail(c6, WalkSeq([0, 1, 2, 3, 4, 5]))
    assert WalkSeq([0, 1, 2, 3, 4, 5]).length(3) == 4
    assert not is_tight_trail(c6, WalkSeq([0, 1, 3]))
    # an edge used twice
    assert not is_tight_trail(c6, WalkSeq([0, 1, 2, 0, 1]))


def test_type_n_tour_is_trail_not_euler():
    h, lab = gen_h_ell(5)
    w = WalkSeq([0, 1, 5, lab.a(1), 6, lab.b(1)], closed=True)
    assert is_tight_trail(h, w)
    assert w.length(3) == 6
    v = verify_euler(h, w)
    assert v.kind == "not_euler" and "6 of 30" in v.reason


def test_verify_euler(c6):
    assert verify_euler(c6, WalkSeq([0, 1, 2, 3, 4, 5], closed=True)).kind == "euler_tour"
    assert verify_euler(c6, WalkSeq([0, 1, 2, 3, 4, 5, 0, 1])).kind == "euler_trail"
    assert verify_euler(c6, WalkSeq([0, 1, 2, 3, 4, 5])).kind == "not_euler"
    h, _ = gen_h_ell(5)
    assert verify_euler(h, tour_of_type(5, "F").walk).kind == "euler_tour"


@pytest.mark.parametrize("w", [
    WalkSeq([]), WalkSeq([0], closed=True), WalkSeq([0, 1], closed=True),
    WalkSeq([0, 99, 2]), WalkSeq([0, 0, 0], closed=True),
])
def test_malformed_walks_are_not_euler(c6, w):
    v = verify_euler(c6, w)
    assert v.kind == "not_euler" and v.reason


def test_divisibility_filter(c6):
    assert divisibility_filter(c6)
    assert not divisibility_filter(build(3, 3, [{0, 1, 2}]))
    # every degree is C(4, 2) = 6
    assert divisibility_filter(gen_complete(5, 3))


def test_text_round_trip(c6):
    text = format_hypergraph(c6, "tight cycle")
    back = parse_hypergraph(text)
    assert back == c6
    strip = lambda s: "".join(ln + "\n" for ln in s.splitlines() if not ln.startswith("#"))
    assert format_hypergraph(back) == strip(text)
    w = WalkSeq([0, 1, 2, 3, 4, 5], closed=True)
    assert parse_walk(format_walk(w)) == w


@pytest.mark.parametrize("text", [
    "", "3 4 2\n0 1 2\n", "3 4 1\n0 1\n", "3 4 1\n0 1 x\n", "3 4 2\n0 1 2\n2 1 0\n",
])
def test_parse_errors(text):
    with pytest.raises(HypergraphError):
        parse_hypergraph(text)


def test_parse_comments():
    h = parse_hypergraph("# hello\n3 4 1\n# edge\n0 1 2\n")
    assert h.m == 1


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000), length=st.integers(2, 9), closed=st.booleans())
def test_reversal_closure(seed, length, closed):
    import random
    h = gen_random(6, 3, 12, seed)
    rng = random.Random(seed)
    w = WalkSeq([rng.randrange(6) for _ in range(length)], closed)
    assert is_tight_trail(h, w) == is_tight_trail(h, w.reversed())


@settings(max_examples=30, deadline=None)
@given(s=st.integers(3, 12))
def test_open_window_count(s):
    w = WalkSeq(range(s))
    assert len(w.windows(3)) == s - 2
    assert len(WalkSeq(range(s), closed=True).windows(3)) == s


def test_euler_tour_length_equals_m():
    for n in range(5, 9):
        h = gen_tight_cycle(n)
        for rot in range(n):
            verts = [(i + rot) % n for i in range(n)]
            assert verify_euler(h, WalkSeq(verts, closed=True)).kind == "euler_tour"
        assert verify_euler(h, WalkSeq(range(n - 1), closed=True)).kind == "not_euler"


def test_prefixes_are_ordered_subsets():
    h = build(3, 4, [{0, 1, 2}])
    assert h.prefixes() == sorted(itertools.permutations([0, 1, 2], 2))
