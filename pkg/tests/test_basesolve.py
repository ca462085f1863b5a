"""Peel-and-branch exact deletion against brute force."""

from __future__ import annotations

import itertools
import random

import pytest

from scatterdel.basesolve import (
    BaseSolveRequest,
    exact_hereditary_deletion,
    side_applicability,
)
from scatterdel.graphs import Graph, mask_of
from scatterdel.profiles import get_profile
from scatterdel.recognizers import components_in, mask_components_in, minimal_obstruction_peel

from helpers import complete_graph, cycle_graph, path_graph, random_graph

TARGETS = ("forest", "cluster", "bipartite", "interval", "split", "triangle-free")


def brute_min_deletion(g: Graph, cls: str) -> int:
    full = g.full_mask()
    for size in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            if mask_components_in(g, full & ~mask_of(sub), cls):
                return size
    raise AssertionError


def test_examples():
    got = exact_hereditary_deletion(BaseSolveRequest(complete_graph(4), "forest", 4))
    assert len(got) == 2
    got = exact_hereditary_deletion(BaseSolveRequest(cycle_graph(7), "forest", 7))
    assert len(got) == 1
    got = exact_hereditary_deletion(BaseSolveRequest(path_graph(5), "cluster", 5))
    assert got == [2]


def test_budget_exceeded_signals_none():
    assert exact_hereditary_deletion(BaseSolveRequest(complete_graph(4), "forest", 1)) is None
    assert exact_hereditary_deletion(BaseSolveRequest(cycle_graph(5), "forest", 0)) is None
    assert exact_hereditary_deletion(BaseSolveRequest(path_graph(3), "forest", 0)) == []


def test_rejects_negative_budget():
    with pytest.raises(ValueError):
        BaseSolveRequest(path_graph(2), "forest", -1)


@pytest.mark.parametrize("cls", TARGETS)
def test_matches_brute_force(cls):
    rng = random.Random(101 + len(cls))
    for _ in range(60):
        n = rng.randint(2, 10)
        g = random_graph(rng, n, rng.choice([0.25, 0.45, 0.65]))
        want = brute_min_deletion(g, cls)
        got = exact_hereditary_deletion(BaseSolveRequest(g, cls, n))
        assert len(got) == want
        keep = [v for v in range(g.n) if v not in set(got)]
        from scatterdel.graphs import induced_subgraph

        rest, _ = induced_subgraph(g, keep)
        assert components_in(rest, cls)


def test_first_peeled_obstruction_is_hit_by_every_optimum():
    rng = random.Random(55)
    for _ in range(60):
        g = random_graph(rng, rng.randint(3, 8), rng.choice([0.35, 0.55]))
        for cls in ("forest", "cluster"):
            if components_in(g, cls):
                continue
            obstruction = set(minimal_obstruction_peel(g, cls))
            want = brute_min_deletion(g, cls)
            full = g.full_mask()
            for sub in itertools.combinations(range(g.n), want):
                if mask_components_in(g, full & ~mask_of(sub), cls):
                    assert obstruction & set(sub), (sorted(g.edges), cls, sub)


def test_side_applicability_examples():
    it = get_profile("interval-tree")
    assert side_applicability(cycle_graph(11), it) == {1, 2}
    ct = get_profile("claw-triangle")
    tri_pendant = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert side_applicability(tri_pendant, ct) == {1}
    assert side_applicability(Graph(1), ct) == {1, 2}


def test_side_applicability_rejects_pairful_component():
    ct = get_profile("claw-triangle")
    from helpers import GADGET_A

    with pytest.raises(ValueError):
        side_applicability(GADGET_A, ct)
