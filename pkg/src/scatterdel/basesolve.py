"""Exact minimum vertex deletion into a single class, by peel-and-branch.

Used to finish components that no longer contain any forbidden pair: extract
a minimal forbidden induced subgraph by peeling, branch on its vertices
(heredity forces any solution to hit it), recurse with a shrinking budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .profiles import ProblemProfile
from .recognizers import mask_components_in, minimal_obstruction_peel
from .patterns import PatternGraph, has_induced


@dataclass(frozen=True)
class BaseSolveRequest:
    component: Graph
    target: str
    budget: int

    def __post_init__(self):
        if self.budget < 0:
            raise ValueError("budget must be nonnegative")


def exact_hereditary_deletion(req: BaseSolveRequest) -> list[int] | None:
    """Minimum-size deletion set into the target class, or None above budget."""
    return exact_deletion_mask(
        req.component, req.component.full_mask(), req.target, req.budget
    )


def exact_deletion_mask(
    g: Graph, mask: int, cls: str, budget: int
) -> list[int] | None:
    """Mask-level core: minimum S within ``mask`` so that every component of
    the remainder is in ``cls``; None when that minimum exceeds ``budget``."""
    if budget < 0:
        return None
    if mask_components_in(g, mask, cls):
        return []
    if budget == 0:
        return None
    obstruction = minimal_obstruction_peel(g, cls, mask)
    best: list[int] | None = None
    for v in obstruction:
        cap = budget - 1 if best is None else len(best) - 2
        if cap < 0:
            break
        sub = exact_deletion_mask(g, mask & ~(1 << v), cls, cap)
        if sub is not None and (best is None or len(sub) + 1 < len(best)):
            best = sorted(sub + [v])
    return best


def pattern_in_mask(g: Graph, mask: int, pattern: PatternGraph) -> bool:
    """Memoized presence of a pattern inside a vertex mask."""
    key = ("occ", pattern.name, mask)
    hit = g._cache.get(key)
    if hit is None:
        hit = has_induced(g, pattern, mask)
        g._cache[key] = hit
    return hit


def side_applicability(component: Graph, profile: ProblemProfile) -> set[int]:
    """Sides whose pair patterns are absent from a pair-free component."""
    return applicable_sides_mask(component, component.full_mask(), profile)


def applicable_sides_mask(g: Graph, mask: int, profile: ProblemProfile) -> set[int]:
    sides = set()
    if not any(pattern_in_mask(g, mask, p) for p in profile.side1_free):
        sides.add(1)
    if not any(pattern_in_mask(g, mask, p) for p in profile.side2_free):
        sides.add(2)
    if not sides:
        raise ValueError(
            "component contains patterns of both sides; it is not pair-free"
        )
    return sides
