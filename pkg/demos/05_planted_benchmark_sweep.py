"""Generate planted benchmarks and sweep all six profiles against the oracle.

Each instance is a feasible base (components certified for one of the two
classes by construction) plus planted extra vertices, so the planted count
upper-bounds the optimum; the brute-force oracle then pins it exactly.
"""

from scatterdel import (
    GeneratorSpec,
    approx_solve,
    brute_force_opt,
    generate_planted,
    get_profile,
    solve_optimize,
)
from scatterdel.profiles import PROFILES

print(f"{'profile':22s} {'n':>3s} {'planted':>7s} {'opt':>3s} {'engine':>6s} "
      f"{'approx':>6s} {'nodes':>6s} {'width':>5s}")
for name in sorted(PROFILES):
    profile = get_profile(name)
    for seed in range(3):
        spec = GeneratorSpec(name, 11, 2, 0.35, seed)
        g, planted = generate_planted(spec)
        opt, _ = brute_force_opt(g, profile, g.n)
        res = solve_optimize(g, profile)
        apx = approx_solve(g, profile)
        assert res.value == opt <= len(planted)
        assert len(apx.solution) <= profile.d * opt
        print(f"{name:22s} {g.n:3d} {len(planted):7d} {opt:3d} {res.value:6d} "
              f"{len(apx.solution):6d} {res.nodes:6d} {res.max_children:5d}")

print("\nevery engine value matched the oracle and stayed within the plant.")
