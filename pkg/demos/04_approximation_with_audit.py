"""Greedy packing approximation, with its certificate audited by brute force.

Every packed set is pairwise disjoint from the others and must be hit by any
feasible solution, so their count lower-bounds the optimum while the
solution picks up at most the factor bound per set.
"""

import random

from scatterdel import Graph, approx_solve, brute_force_opt, get_profile, verify_solution

rng = random.Random(4)
profile = get_profile("interval-tree")

# Three planted trouble spots: a four-cycle, and two long-claw/triangle pairs.
edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
long_claw = [(4, 5), (4, 6), (4, 7), (5, 8), (6, 9), (7, 10)]
edges += long_claw + [(8, 11), (11, 12), (12, 13), (11, 13)]
edges += [(u + 10, v + 10) for u, v in long_claw] + [(18, 21), (21, 22), (21, 23), (22, 23)]
g = Graph(24, edges)

res = approx_solve(g, profile)
opt, witness = brute_force_opt(g, profile, g.n)

print("approximate solution:", res.solution)
print("size %d against optimum %d, bound %d*opt = %d" % (
    len(res.solution), opt, res.factor_bound, res.factor_bound * opt))
print("feasible:", verify_solution(g, res.solution, profile))

print("\npacked certificate sets (disjoint, each unavoidable):")
for packed in res.packing_sets:
    print("  ", packed, " hit by optimum:", bool(set(packed) & set(witness)))
print("optimum witness:", witness)
