"""Solve a small scattered-deletion instance end to end.

The instance: a triangle sharing a vertex with a claw.  Under the
claw-triangle profile a component may keep claws or keep triangles, but not
both, so one deletion is needed and the shared vertex is the cheapest fix.
"""

from scatterdel import (
    Graph,
    closest_pair_occurrence,
    get_profile,
    solve_decision,
    solve_optimize,
    verify_solution,
)

profile = get_profile("claw-triangle")

# triangle {0,1,2}; vertex 3 hangs off 0 and carries two more leaves
g = Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (3, 5)])

pair = closest_pair_occurrence(g, profile)
print("closest forbidden pair:")
print("  claw side     ", pair.j1)
print("  triangle side ", pair.j2)
print("  witness path  ", pair.path, "distance", pair.distance)

print("\ndecision at k = 0:", solve_decision(g, 0, profile).feasible)
res = solve_decision(g, 1, profile)
print("decision at k = 1:", res.feasible, "witness", res.solution)

best = solve_optimize(g, profile)
print("\noptimum:", best.value, "via", best.solution)
print("search tree: %d nodes, widest branch %d, depth %d" % (
    best.nodes, best.max_children, best.max_depth))
print("verified:", verify_solution(g, best.solution, profile))
print("\nas JSON:", best.to_json(profile.name))
