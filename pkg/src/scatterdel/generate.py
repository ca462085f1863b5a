"""Planted-instance generator: feasible base graph plus k extra vertices.

The base is assembled from components certified for one of the profile's two
classes by construction (cliques, trees, caterpillars, interval models, ...),
so the planted vertex set is always a feasible solution and hence an upper
bound on the optimum.  Fully deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Graph
from .profiles import get_profile


@dataclass(frozen=True)
class GeneratorSpec:
    profile: str
    n: int
    planted_k: int
    edge_density: float
    seed: int

    def __post_init__(self):
        if not 0 <= self.planted_k <= self.n:
            raise ValueError("need n >= planted_k >= 0")
        if not 0.0 <= self.edge_density <= 1.0:
            raise ValueError("edge_density must lie in [0, 1]")


# --- certified component builders: edges on vertices 0..size-1 ---------------


def _clique(rng: random.Random, size: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(size) for j in range(i + 1, size)]


def _path(rng: random.Random, size: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(size - 1)]


def _tree(rng: random.Random, size: int) -> list[tuple[int, int]]:
    return [(v, rng.randrange(v)) for v in range(1, size)]


def _cycle(min_len: int, parity: int | None = None):
    def build(rng: random.Random, size: int) -> list[tuple[int, int]]:
        length = max(size, min_len)
        if parity is not None and length % 2 != parity:
            length += 1
        return [(i, (i + 1) % length) for i in range(length)]

    return build


def _caterpillar(rng: random.Random, size: int) -> list[tuple[int, int]]:
    spine = max(1, size // 2)
    edges = [(i, i + 1) for i in range(spine - 1)]
    for v in range(spine, size):
        edges.append((v, rng.randrange(spine)))
    return edges


def _interval_model(rng: random.Random, size: int) -> list[tuple[int, int]]:
    spans = []
    for _ in range(size):
        a, b = sorted(rng.random() for _ in range(2))
        spans.append((a, b))
    return [
        (i, j)
        for i in range(size)
        for j in range(i + 1, size)
        if spans[i][0] <= spans[j][1] and spans[j][0] <= spans[i][1]
    ]


def _unit_interval_model(rng: random.Random, size: int) -> list[tuple[int, int]]:
    starts = [rng.random() * size / 2 for _ in range(size)]
    return [
        (i, j)
        for i in range(size)
        for j in range(i + 1, size)
        if abs(starts[i] - starts[j]) <= 1.0
    ]


def _chordal_accretion(rng: random.Random, size: int) -> list[tuple[int, int]]:
    # Attach each new vertex to a clique inside an existing neighborhood.
    edges: list[tuple[int, int]] = []
    adj: list[set[int]] = [set() for _ in range(size)]
    for v in range(1, size):
        u = rng.randrange(v)
        base = {u}
        candidates = [w for w in adj[u] if w < v]
        rng.shuffle(candidates)
        for w in candidates:
            if all(x in adj[w] for x in base):
                base.add(w)
                if rng.random() < 0.5:
                    break
        for w in base:
            edges.append((v, w))
            adj[v].add(w)
            adj[w].add(v)
    return edges


def _split_model(rng: random.Random, size: int) -> list[tuple[int, int]]:
    boundary = rng.randint(1, size) if size > 1 else 1
    edges = _clique(rng, boundary)
    for v in range(boundary, size):
        hook = rng.randrange(boundary)
        for u in range(boundary):
            if u == hook or rng.random() < 0.4:
                edges.append((u, v))
    return edges


def _bipartite_model(rng: random.Random, size: int) -> list[tuple[int, int]]:
    left = max(1, rng.randint(1, size - 1)) if size > 1 else 1
    edges = []
    for v in range(left, size):
        hook = rng.randrange(left)
        for u in range(left):
            if u == hook or rng.random() < 0.4:
                edges.append((u, v))
    return edges


def _complete_bipartite(rng: random.Random, size: int) -> list[tuple[int, int]]:
    left = rng.randint(1, size - 1) if size > 1 else 1
    return [(u, v) for u in range(left) for v in range(left, size)]


_BUILDERS: dict[str, list] = {
    "claw-triangle": [_clique, _tree, _cycle(3), _path],
    "interval-tree": [_clique, _interval_model, _tree, _path],
    "proper-interval-tree": [_clique, _unit_interval_model, _tree, _path],
    "chordal-bipperm": [_clique, _chordal_accretion, _tree, _caterpillar, _complete_bipartite, _cycle(4, parity=0)],
    "split-bipartite": [_clique, _split_model, _bipartite_model, _tree, _cycle(4, parity=0)],
    "cluster-forest": [_clique, _tree, _path],
}


def generate_planted(spec: GeneratorSpec) -> tuple[Graph, list[int]]:
    """Sample a graph whose base is feasible by construction.

    Returns the graph and the planted vertex set; deleting the planted set
    always leaves every component inside one of the profile's classes.
    """
    profile = get_profile(spec.profile)
    rng = random.Random(spec.seed)
    builders = _BUILDERS[profile.name]
    base_total = spec.n - spec.planted_k
    edges: list[tuple[int, int]] = []
    offset = 0
    while offset < base_total:
        size = min(rng.randint(1, 6), base_total - offset)
        build = rng.choice(builders)
        part = build(rng, size)
        used = max((max(e) for e in part), default=size - 1) + 1
        if offset + used > base_total:
            part = _path(rng, base_total - offset)
            used = base_total - offset
        edges.extend((offset + u, offset + v) for u, v in part)
        offset += used
    planted = list(range(base_total, spec.n))
    density = max(spec.edge_density, 0.15)
    for v in planted:
        attached = False
        for u in range(v):
            if rng.random() < density:
                edges.append((u, v))
                attached = True
        if not attached and v > 0:
            edges.append((rng.randrange(v), v))
    return Graph(spec.n, edges), planted
