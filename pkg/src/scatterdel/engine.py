"""Bounded search-tree solver for scattered two-class vertex deletion.

A solve node first drops every component already inside one of the two
target classes, then branches:

* mode C: on the vertex set of any outright-forbidden small graph (``g1``),
  and once none remain, on the two vertex sets of a closest forbidden pair;
* modes A/B: on the two vertex sets of a closest forbidden pair plus the
  interior of their shortest connecting path.

Components free of forbidden pairs are finished exactly by the generic
peel-and-branch deletion solver on whichever side still applies.

All search state lives on the stack; distinct solves, including concurrent
ones over shared immutable graphs, are independent (the per-graph memo caches
only idempotent pure results).
"""

from __future__ import annotations

from dataclasses import dataclass

from .basesolve import applicable_sides_mask, exact_deletion_mask
from .graphs import (
    Graph,
    bfs_distances,
    component_masks,
    induced_subgraph,
    lexmin_shortest_path,
    mask_of,
    vertices_of,
)
from .patterns import enumerate_induced, find_hole, find_induced
from .profiles import ProblemProfile
from .recognizers import mask_member


class EngineInvariantError(RuntimeError):
    """A structural guarantee of the branching rules failed; engine bug."""


@dataclass(frozen=True)
class PairOccurrence:
    """A realized closest forbidden pair: side sets plus a witness path.

    The path endpoints lie one in each side set; the sequence is normalized
    to the lexicographically smaller of its two orientations.
    """

    pair_index: int
    j1: tuple[int, ...]
    j2: tuple[int, ...]
    path: tuple[int, ...]
    distance: int


@dataclass
class SolveResult:
    feasible: bool
    solution: list[int]
    value: int
    nodes: int
    max_children: int
    max_depth: int

    def to_json(self, profile: str | None = None) -> dict:
        doc = {
            "feasible": self.feasible,
            "value": self.value,
            "solution": self.solution,
            "nodes": self.nodes,
            "max_children": self.max_children,
            "max_depth": self.max_depth,
        }
        if profile is not None:
            doc["profile"] = profile
        return doc


@dataclass
class _Stats:
    nodes: int = 0
    max_children: int = 0
    max_depth: int = 0


# ---------------------------------------------------------------------------
# reduction and closest pairs


def reduce_components(g: Graph, profile: ProblemProfile) -> tuple[Graph, list[list[int]]]:
    """Drop every component already in class1 or class2.

    Returns the reindexed residual graph and the removed parts in original
    indices, ordered by minimum vertex.
    """
    removed: list[list[int]] = []
    keep: list[int] = []
    for comp in component_masks(g):
        if mask_member(g, comp, profile.class1) or mask_member(g, comp, profile.class2):
            removed.append(vertices_of(comp))
        else:
            keep.extend(vertices_of(comp))
    residual, _ = induced_subgraph(g, keep)
    return residual, removed


def _active_mask(g: Graph, mask: int, profile: ProblemProfile) -> int:
    active = 0
    for comp in component_masks(g, mask):
        if not (
            mask_member(g, comp, profile.class1) or mask_member(g, comp, profile.class2)
        ):
            active |= comp
    return active


def _pattern_occurrences(g: Graph, pattern, mask: int) -> list[tuple[int, ...]]:
    key = ("occ-list", pattern.name, mask)
    hit = g._cache.get(key)
    if hit is None:
        hit = tuple(enumerate_induced(g, pattern, mask))
        g._cache[key] = hit
    return hit


def closest_pair_occurrence(
    g: Graph, profile: ProblemProfile, active: int | None = None
) -> PairOccurrence | None:
    """Globally closest realized forbidden pair, or None when no component
    holds both sides of any pair.

    Selection key: distance, then size of the branch set (side sets plus path
    interior), then pair index, then lexicographic side sets, then the
    lexicographically smallest normalized witness path.
    """
    mask = g.full_mask() if active is None else active
    best_key = None
    best = None
    for comp in component_masks(g, mask):
        for idx, (h1, h2) in enumerate(profile.pairs):
            occ1 = _pattern_occurrences(g, h1, comp)
            if not occ1:
                continue
            occ2 = _pattern_occurrences(g, h2, comp)
            if not occ2:
                continue
            for j1 in occ1:
                dist = bfs_distances(g, mask_of(j1), comp)
                for j2 in occ2:
                    d = min(dist[v] for v in j2)
                    union = len(set(j1) | set(j2)) + max(0, d - 1)
                    key = (d, union, idx, j1, j2)
                    if best_key is None or key < best_key:
                        best_key = key
                        best = (idx, j1, j2, d, comp)
    if best is None:
        return None
    idx, j1, j2, d, comp = best
    p_fwd = lexmin_shortest_path(g, mask_of(j1), mask_of(j2), comp)
    p_bwd = lexmin_shortest_path(g, mask_of(j2), mask_of(j1), comp)
    path = min(p_fwd, p_bwd)
    return PairOccurrence(idx, j1, j2, tuple(path), d)


# ---------------------------------------------------------------------------
# mode C structural check


def check_branch_site(
    g: Graph, po: PairOccurrence, active: int | None = None, bare_path: bool = False
) -> None:
    """Assert the closest-pair structure used by the path-avoiding branching.

    With the pair sets removed, the component holding the path interior must
    be a caterpillar whose spine is the interior (exactly the bare interior
    when ``bare_path``), and only the interior endpoints may touch the pair
    sets, each through exactly one edge.  Holds for closest pairs whenever
    the graph has no ``g1`` member; violations indicate an engine bug.
    """
    if po.distance < 2:
        return
    mask = g.full_mask() if active is None else active
    pair_mask = mask_of(po.j1) | mask_of(po.j2)
    interior = po.path[1:-1]
    interior_mask = mask_of(interior)
    rest = mask & ~pair_mask
    comp = None
    for cm in component_masks(g, rest):
        if cm & interior_mask:
            comp = cm
            break
    if comp is None or comp & interior_mask != interior_mask:
        raise EngineInvariantError("path interior split across components")
    comp_verts = vertices_of(comp)
    edge_count = (
        sum((g.adj_mask[v] & comp).bit_count() for v in comp_verts) // 2
    )
    if edge_count != len(comp_verts) - 1:
        raise EngineInvariantError("interior component is not a tree")
    for v in comp_verts:
        if not (interior_mask >> v & 1) and not (g.adj_mask[v] & interior_mask):
            raise EngineInvariantError("component vertex beyond distance 1 of spine")
    if bare_path and comp != interior_mask:
        raise EngineInvariantError("interior component is more than the bare path")
    first, last = interior[0], interior[-1]
    want = {first: 1 << po.path[0], last: 1 << po.path[-1]}
    if first == last:
        want = {first: 1 << po.path[0] | 1 << po.path[-1]}
    for v in comp_verts:
        touching = g.adj_mask[v] & pair_mask & mask
        if touching != want.get(v, 0):
            raise EngineInvariantError("pair sets touched beyond the path endpoints")


# ---------------------------------------------------------------------------
# search


_G1_SPLIT_CACHE: dict[str, tuple] = {}


def _g1_occurrence(g: Graph, mask: int, profile: ProblemProfile) -> tuple[int, ...] | None:
    split = _G1_SPLIT_CACHE.get(profile.name)
    if split is None:
        split = profile.g1_split()
        _G1_SPLIT_CACHE[profile.name] = split
    hole_range, named = split
    if hole_range is not None:
        hole = find_hole(g, hole_range[0], hole_range[1], mask)
        if hole is not None:
            return tuple(sorted(hole))
    for pat in named:
        occ = find_induced(g, pat, mask)
        if occ is not None:
            return occ
    return None


def _path_pattern_order(profile: ProblemProfile) -> int | None:
    for p in profile.side1_free:
        if p.name.startswith("P") and p.name[1:].isdigit():
            return p.order
    return None


def _search(
    g: Graph, mask: int, budget: int, depth: int, profile: ProblemProfile, stats: _Stats
) -> list[int] | None:
    stats.nodes += 1
    if depth > stats.max_depth:
        stats.max_depth = depth
    active = _active_mask(g, mask, profile)
    if not active:
        return []

    if profile.mode == "C":
        occ = _g1_occurrence(g, active, profile)
        if occ is not None:
            if budget == 0:
                return None
            if len(occ) > profile.c:
                raise EngineInvariantError("g1 branch wider than the profile constant")
            if len(occ) > stats.max_children:
                stats.max_children = len(occ)
            for v in occ:
                sub = _search(g, active & ~(1 << v), budget - 1, depth + 1, profile, stats)
                if sub is not None:
                    return sub + [v]
            return None

    po = closest_pair_occurrence(g, profile, active)
    if po is not None:
        if profile.mode in ("A", "B"):
            if profile.alpha and _path_pattern_order(profile) == profile.alpha:
                if len(po.path) > profile.alpha:
                    raise EngineInvariantError("witness path exceeds the forbidden-path bound")
            branch = sorted(set(po.j1) | set(po.j2) | set(po.path))
        else:
            check_branch_site(g, po, active)
            branch = sorted(set(po.j1) | set(po.j2))
        if len(branch) > profile.c:
            raise EngineInvariantError("pair branch wider than the profile constant")
        if budget == 0:
            return None
        if len(branch) > stats.max_children:
            stats.max_children = len(branch)
        for v in branch:
            sub = _search(g, active & ~(1 << v), budget - 1, depth + 1, profile, stats)
            if sub is not None:
                return sub + [v]
        return None

    # Pair-free: finish each remaining component on an applicable side.
    solution: list[int] = []
    remaining = budget
    for comp in component_masks(g, active):
        sides = applicable_sides_mask(g, comp, profile)
        best: list[int] | None = None
        for side in sorted(sides):
            cls = profile.class1 if side == 1 else profile.class2
            cap = remaining if best is None else len(best) - 1
            got = exact_deletion_mask(g, comp, cls, cap)
            if got is not None and (best is None or len(got) < len(best)):
                best = got
        if best is None:
            return None
        solution.extend(best)
        remaining -= len(best)
    return solution


def solve_decision(
    g: Graph, k: int, profile: ProblemProfile, _stats: _Stats | None = None
) -> SolveResult:
    """Is there a deletion set of size at most k?  Returns a witness when so."""
    if k < 0:
        raise ValueError("budget k must be nonnegative")
    stats = _stats if _stats is not None else _Stats()
    got = _search(g, g.full_mask(), k, 0, profile, stats)
    if got is None:
        return SolveResult(False, [], -1, stats.nodes, stats.max_children, stats.max_depth)
    sol = sorted(got)
    return SolveResult(True, sol, len(sol), stats.nodes, stats.max_children, stats.max_depth)


def solve_optimize(g: Graph, profile: ProblemProfile) -> SolveResult:
    """Minimum-size solution, by raising the decision budget from zero."""
    stats = _Stats()
    for k in range(g.n + 1):
        res = solve_decision(g, k, profile, _stats=stats)
        if res.feasible:
            return res
    raise EngineInvariantError("deleting all vertices must always be feasible")
