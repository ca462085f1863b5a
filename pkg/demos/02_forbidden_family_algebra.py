"""How two forbidden families collapse into pruned graphs plus residual pairs.

A graph has every component inside class 1 or class 2 exactly when it avoids
every member of the pruned family outright and no single component carries
both halves of a residual forbidden pair.  This is what lets the solver
branch on small fixed sets even when both forbidden families are infinite.
"""

from scatterdel import PatternFamily, forbidden_pairs, get_pattern, sp_family
from scatterdel.profiles import FAMILY_FOREST, FAMILY_INTERVAL, PROFILES, get_profile

# A tiny worked example: C4 sits in both families, and the diamond already
# contains a triangle, so every pair is redundant.
f1 = PatternFamily("demo-1", (get_pattern("C3"), get_pattern("C4")))
f2 = PatternFamily("demo-2", (get_pattern("D4"), get_pattern("C4")))
print("families:", [p.name for p in f1.fixed], "versus", [p.name for p in f2.fixed])
print("pruned   :", [p.name for p in sp_family(f1, f2, 12)])
print("pairs    :", forbidden_pairs(f1, f2, 12))

# Interval obstructions against all cycles: everything carrying a cycle or a
# triangle prunes away and only (long-claw, triangle) survives.
print("\ninterval versus cycles, truncated at 12 vertices:")
sp = sp_family(FAMILY_INTERVAL, FAMILY_FOREST, 12)
print("pruned   :", ", ".join(p.name for p in sp))
pairs = forbidden_pairs(FAMILY_INTERVAL, FAMILY_FOREST, 12)
print("pairs    :", [(a.name, b.name) for a, b in pairs])

print("\nresidual pair families shipped with the six profiles:")
for name in sorted(PROFILES):
    profile = get_profile(name)
    computed = forbidden_pairs(profile.family1, profile.family2, 12)
    print(f"  {name:22s} {[(a.name, b.name) for a, b in computed]}")
