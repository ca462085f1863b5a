"""Shared test utilities: seeded random graphs and naive reference oracles."""

from __future__ import annotations

import itertools
import random

from scatterdel.graphs import Graph


def random_graph(rng: random.Random, n: int, density: float) -> Graph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    return Graph(n, edges)


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges]
    return Graph(a.n + b.n, edges)


# Gadgets shared across engine/approx/oracle tests.
# A: triangle {0,1,2}, path edges 2-3 and 3-4, claw centered at 4.
GADGET_A = Graph(8, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (4, 7)])
# B: triangle {0,1,2}, vertex 3 adjacent to 0, 4, 5 (claw sharing vertex 0).
GADGET_B = Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (3, 5)])


def naive_scattered_opt(g: Graph, profile) -> tuple[int, list[int]]:
    """Reference optimum, restated from first principles on top of component
    and membership checks only."""
    from scatterdel.graphs import component_masks, mask_of
    from scatterdel.recognizers import mask_member

    full = g.full_mask()
    for size in range(g.n + 1):
        for sub in itertools.combinations(range(g.n), size):
            rest = full & ~mask_of(sub)
            if all(
                mask_member(g, comp, profile.class1)
                or mask_member(g, comp, profile.class2)
                for comp in component_masks(g, rest)
            ):
                return size, list(sub)
    raise AssertionError("unreachable")


def nx_graph(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_isomorphic(a: Graph, b: Graph) -> bool:
    import networkx as nx

    return nx.is_isomorphic(nx_graph(a), nx_graph(b))
