"""
The H_l gadget and its three kinds of tours
===========================================

H_l has codegree 2, so a tour is determined by how its first edge is read.
Reading the edge {0, 1, l} in each of the three essentially distinct ways
gives the tours called N, T and F.
"""

from tighteuler import (
    canonicalize, enumerate_euler_tours, forced_walk, gen_h_ell, ordering_type, tour_of_type,
    verify_euler,
)

h, labels = gen_h_ell(5)
print(f"H_5: {h.n} vertices, {h.m} edges")

for seed in [(0, 1, 5), (0, 5, 1), (5, 0, 1)]:
    res = forced_walk(h, seed)
    kind = ordering_type(5, set(seed), seed).value
    names = " ".join(labels.name(v) for v in res.walk.verts)
    print(f"seed {seed} type {kind}: {len(res.walk)} edges, "
          f"{verify_euler(h, res.walk).kind}\n    {names}")

# l = 1 (mod 3) leaves the F reading short of a full tour
for ell in range(5, 14):
    hh, _ = gen_h_ell(ell)
    f = tour_of_type(ell, "F")
    print(f"l={ell:2d}  tours={len(enumerate_euler_tours(hh))}  F covers everything: {f.euler}")

t = tour_of_type(5, "T")
print("canonical T tour:", canonicalize(t.walk, h)[:10], "...")
