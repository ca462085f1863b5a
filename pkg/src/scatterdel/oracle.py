"""Brute-force ground truth: subset-enumeration optimum and solution checking.

Deliberately independent of the branching engine; only the class recognizers
are shared, and those are cross-validated separately against the pattern
catalog.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .graphs import Graph, component_masks, mask_of
from .profiles import ProblemProfile
from .recognizers import mask_member


def verify_solution(g: Graph, solution: Iterable[int], profile: ProblemProfile) -> bool:
    """Does deleting ``solution`` leave every component in class1 or class2?"""
    sol = set(solution)
    if any(not 0 <= v < g.n for v in sol):
        raise ValueError("solution vertex out of range")
    rest = g.full_mask() & ~mask_of(sol)
    return _scattered_ok(g, rest, profile)


def _scattered_ok(g: Graph, mask: int, profile: ProblemProfile) -> bool:
    for comp in component_masks(g, mask):
        if not (
            mask_member(g, comp, profile.class1) or mask_member(g, comp, profile.class2)
        ):
            return False
    return True


def brute_force_opt(
    g: Graph, profile: ProblemProfile, cap: int
) -> tuple[int, list[int]] | None:
    """Exact optimum by enumerating subsets in (size, lexicographic) order.

    Returns (value, first witness) or None when every subset of size <= cap
    fails.  Intended for desk-size instances.
    """
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    full = g.full_mask()
    for size in range(min(cap, g.n) + 1):
        for subset in itertools.combinations(range(g.n), size):
            rest = full & ~mask_of(subset)
            if _scattered_ok(g, rest, profile):
                return size, list(subset)
    if cap >= g.n:
        raise AssertionError("deleting every vertex must be feasible")
    return None
