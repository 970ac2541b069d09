"""Counting, enumerating and certifying tight Euler trails and tours in uniform hypergraphs."""

from .counting import (
    CountReport, WalkCountTable, count, count_euler_tours, count_euler_trails,
    count_trails_between, exists_euler_tour, walk_counts,
)
from .generators import (
    HellLabels, OrderingType, gen_complete, gen_h_ell, gen_path, gen_random,
    gen_tight_cycle, gen_wreath, ordering_type, tour_of_type,
)
from .hypercore import (
    Hypergraph, HypergraphError, Verdict, WalkSeq, build, codegree, degree,
    divisibility_filter, is_tight_trail, max_codegree, verify_euler,
)
from .reduction import (
    CnfFormula, ReductionMap, assignment_from_tour, parse_dimacs, preprocess,
    reduce, sat_brute_force, tour_from_assignment,
)
from .search import canonicalize, enumerate_euler_tours, enumerate_euler_trails, forced_walk

__version__ = "0.1.0"
