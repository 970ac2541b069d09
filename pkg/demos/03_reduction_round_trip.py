"""
From a 3-CNF formula to a hypergraph and back
=============================================

Each variable becomes a copy of H_l, each clause a tight 6-cycle attached to
its three variables, and one spine cycle ties the gadgets together. A
satisfying assignment yields an explicit tour, and any tour gives back an
assignment.
"""

from tighteuler import (
    assignment_from_tour, max_codegree, parse_dimacs, preprocess, reduce, sat_brute_force,
    tour_from_assignment, verify_euler,
)

text = """c two clauses sharing x1 with opposite signs
p cnf 4 2
1 2 3 0
-1 2 4 0
"""
f = preprocess(parse_dimacs(text))
h, rmap = reduce(f)
print(f"{f.t} variables, {f.p} clauses -> {h.n} vertices, {h.m} edges, "
      f"max codegree {max_codegree(h)}")
print("gadget sizes l:", [g.ell for g in rmap.variables])

assignment = sat_brute_force(f)
print("satisfying assignment:", assignment)

tour = tour_from_assignment(f, rmap, assignment)
print("certificate:", verify_euler(h, tour).kind, "of length", len(tour))

decoded = assignment_from_tour(f, rmap, tour, h)
print("decoded:", decoded, "satisfies:", f.evaluate(decoded))

# the map is plain JSON and can travel with the hypergraph
print(rmap.dumps()[:120], "...")
