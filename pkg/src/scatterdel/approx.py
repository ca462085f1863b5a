"""Polynomial-time approximation by greedy disjoint packing.

Three stages over a shrinking working copy:

0. pack whole occurrences of the profile's outright-forbidden small graphs;
1. pack closest forbidden pairs (side sets plus connecting path); in modes
   A/B the whole packed set joins the solution, in mode C only the side sets
   do, since some optimal solution always avoids the path interior;
2. finish each residual pair-free component exactly on an applicable side.

Every recorded packing set must be hit by any feasible solution, and the
sets are pairwise disjoint, so stages 0-1 contribute at most their largest
set size per optimum vertex; stage 2 is exact per component.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basesolve import applicable_sides_mask, exact_deletion_mask
from .engine import _g1_occurrence, closest_pair_occurrence
from .graphs import Graph, component_masks, mask_of
from .profiles import ProblemProfile
from .recognizers import mask_member


@dataclass
class ApproxResult:
    solution: list[int]
    packing_sets: list[list[int]]
    factor_bound: int

    def to_json(self, profile: str | None = None) -> dict:
        doc = {
            "solution": self.solution,
            "value": len(self.solution),
            "packing_sets": self.packing_sets,
            "factor_bound": self.factor_bound,
        }
        if profile is not None:
            doc["profile"] = profile
        return doc


def approx_solve(g: Graph, profile: ProblemProfile) -> ApproxResult:
    solution: set[int] = set()
    packing: list[list[int]] = []
    mask = g.full_mask()

    # Stage 0: whole-set packing of outright-forbidden graphs.
    if profile.g1:
        while True:
            occ = _g1_occurrence(g, mask, profile)
            if occ is None:
                break
            packing.append(list(occ))
            solution.update(occ)
            mask &= ~mask_of(occ)

    # Stage 1: closest-pair packing.
    while True:
        po = closest_pair_occurrence(g, profile, mask)
        if po is None:
            break
        full = sorted(set(po.j1) | set(po.j2) | set(po.path))
        packing.append(full)
        if profile.mode == "C":
            gained = set(po.j1) | set(po.j2)
        else:
            gained = set(full)
        solution.update(gained)
        mask &= ~mask_of(gained)

    # Stage 2: exact finishing of pair-free components.
    for comp in component_masks(g, mask):
        if mask_member(g, comp, profile.class1) or mask_member(g, comp, profile.class2):
            continue
        sides = applicable_sides_mask(g, comp, profile)
        best: list[int] | None = None
        for side in sorted(sides):
            cls = profile.class1 if side == 1 else profile.class2
            cap = comp.bit_count() if best is None else len(best) - 1
            got = exact_deletion_mask(g, comp, cls, cap)
            if got is not None and (best is None or len(got) < len(best)):
                best = got
        solution.update(best)

    return ApproxResult(sorted(solution), packing, profile.d)
