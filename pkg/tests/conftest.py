import itertools
import random

import pytest

from tighteuler.reduction import CnfFormula

ACCEPTANCE_LINES: list[str] = []


def brute_walks(h, start, d):
    """Every vertex sequence that starts with ``start`` and has d edge windows.

    Plain product over vertex ids, no DP and no adjacency index.
    """
    k = h.k
    edges = set(h.edges)
    for tail in itertools.product(range(h.n), repeat=d):
        seq = tuple(start) + tail
        if all(frozenset(seq[i:i + k]) in edges and len(set(seq[i:i + k])) == k
               for i in range(d)):
            yield seq


def brute_walk_count(h, start, end, d):
    k1 = h.k - 1
    return sum(1 for s in brute_walks(h, start, d) if s[len(s) - k1:] == tuple(end))


def random_formula(rng: random.Random, t: int, p: int) -> CnfFormula:
    clauses = []
    for _ in range(p):
        vs = rng.sample(range(1, t + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return CnfFormula(t, clauses)


@pytest.fixture
def rng():
    return random.Random(20171)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
