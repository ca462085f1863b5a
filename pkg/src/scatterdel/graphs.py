"""Immutable undirected graphs with dense 0-based vertex indices.

All heavier machinery in this package (pattern search, recognizers, the
branching solver) runs on adjacency bitmasks, so the representation keeps
one integer mask per vertex alongside the sorted neighbor lists.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator


class EdgeListParseError(ValueError):
    """Malformed edge-list input; the message names the offending line."""


class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction.

    No self-loops, no parallel edges.  Safe to share across threads: every
    operation in this module is read-only.
    """

    __slots__ = ("n", "edges", "adj", "adj_mask", "_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            edge_set.add((u, v) if u < v else (v, u))
        masks = [0] * n
        for u, v in edge_set:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "adj_mask", tuple(masks))
        object.__setattr__(
            self, "adj", tuple(tuple(vertices_of(m)) for m in masks)
        )
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_mask[u] >> v & 1)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def iterate_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# parsing and serialization


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: header ``n m`` then m lines ``u v``.

    Blank lines and lines starting with ``#`` are ignored; fields are split
    on runs of spaces/tabs; LF and CRLF both accepted.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise EdgeListParseError(f"malformed header (line {lineno})")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise EdgeListParseError(f"malformed header (line {lineno})") from None
            if n < 0 or m < 0:
                raise EdgeListParseError(f"malformed header (line {lineno})")
            header = (n, m)
            continue
        if len(edges) >= header[1]:
            raise EdgeListParseError(f"unexpected extra edge line (line {lineno})")
        if len(fields) != 2:
            raise EdgeListParseError(f"malformed edge line (line {lineno})")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(f"malformed edge line (line {lineno})") from None
        for w in (u, v):
            if not (0 <= w < n):
                raise EdgeListParseError(f"vertex {w} out of range (line {lineno})")
        if u == v:
            raise EdgeListParseError(f"self-loop at vertex {u} (line {lineno})")
        edges.append((u, v))
    if header is None:
        raise EdgeListParseError("malformed header (line 1)")
    if len(edges) != header[1]:
        raise EdgeListParseError(
            f"expected {header[1]} edges, found {len(edges)} (line {len(text.splitlines()) or 1})"
        )
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_json(obj: dict | str) -> Graph:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])


# ---------------------------------------------------------------------------
# traversal


def component_masks(g: Graph, active: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``active``, as masks.

    Ordered by minimum vertex.
    """
    remaining = g.full_mask() if active is None else active
    adj = g.adj_mask
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iterate_bits(frontier):
                nxt |= adj[v] & remaining
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    """Partition of the vertex set into maximal connected parts."""
    return [vertices_of(m) for m in component_masks(g)]


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices`` plus the map from new to old indices."""
    order = sorted(set(vertices))
    index = {old: new for new, old in enumerate(order)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph(len(order), edges), order


def subgraph_from_mask(g: Graph, mask: int) -> tuple[Graph, list[int]]:
    return induced_subgraph(g, vertices_of(mask))


def bfs_distances(g: Graph, sources: int, active: int | None = None) -> dict[int, int]:
    """BFS layers from the ``sources`` mask inside the ``active`` mask."""
    if active is None:
        active = g.full_mask()
    dist: dict[int, int] = {}
    frontier = sources & active
    seen = frontier
    d = 0
    while frontier:
        for v in iterate_bits(frontier):
            dist[v] = d
        nxt = 0
        for v in iterate_bits(frontier):
            nxt |= g.adj_mask[v] & active
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist


def lexmin_shortest_path(
    g: Graph, from_mask: int, to_mask: int, active: int | None = None
) -> list[int] | None:
    """Lexicographically smallest minimum-length path from one set to another.

    The path starts in ``from_mask`` and ends in ``to_mask``; vertex sequences
    are compared lexicographically.  Returns None when unreachable.
    """
    if active is None:
        active = g.full_mask()
    dist_to_target = bfs_distances(g, to_mask, active)
    starts = [v for v in iterate_bits(from_mask & active) if v in dist_to_target]
    if not starts:
        return None
    d = min(dist_to_target[v] for v in starts)
    cur = min(v for v in starts if dist_to_target[v] == d)
    path = [cur]
    while dist_to_target[cur] > 0:
        cur = min(
            w
            for w in iterate_bits(g.adj_mask[cur] & active)
            if dist_to_target.get(w) == dist_to_target[cur] - 1
        )
        path.append(cur)
    return path


def distance_between_sets(
    g: Graph, a: Iterable[int], b: Iterable[int]
) -> tuple[int, list[int]] | None:
    """Minimum edge-count distance between two nonempty vertex sets.

    Returns ``(d, path)`` where the realizing path is the lexicographically
    smallest minimum-length witness, or None when no path exists.  Intersecting
    sets give d = 0 and a single-vertex path.
    """
    am, bm = mask_of(a), mask_of(b)
    if not am or not bm:
        raise ValueError("both vertex sets must be nonempty")
    path = lexmin_shortest_path(g, am, bm)
    if path is None:
        return None
    return len(path) - 1, path
