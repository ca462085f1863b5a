"""Polynomial-time recognizers for the graph classes the solver targets.

Each recognizer is structural (elimination orders, 2-coloring, asteroidal
triple scan, degree characterization) rather than a forbidden-subgraph
search, so the catalog-based checks in the test suite form an independent
cross-validation.

``is_member`` uses whole-graph semantics; ``components_in`` asks that every
connected component pass, which differs from the whole-graph question only
for classes not closed under disjoint union (split graphs).
"""

from __future__ import annotations

from .graphs import Graph, component_masks, iterate_bits, vertices_of

GRAPH_CLASSES = (
    "forest",
    "bipartite",
    "cluster",
    "claw-free",
    "triangle-free",
    "chordal",
    "interval",
    "proper-interval",
    "split",
    "bipartite-permutation",
)


def is_member(g: Graph, cls: str) -> bool:
    """Whole-graph membership test for ``cls``."""
    return _check(g, g.full_mask(), cls)


def components_in(g: Graph, cls: str, active: int | None = None) -> bool:
    """Every connected component (within ``active``) belongs to ``cls``."""
    mask = g.full_mask() if active is None else active
    return all(_check(g, comp, cls) for comp in component_masks(g, mask))


def is_at_free(g: Graph, active: int | None = None) -> bool:
    """No asteroidal triple: three pairwise nonadjacent vertices such that any
    two are joined by a path avoiding the closed neighborhood of the third."""
    mask = g.full_mask() if active is None else active
    return _at_free(g, mask)


def mask_member(g: Graph, mask: int, cls: str) -> bool:
    """Membership of the induced subgraph given by ``mask``, memoized per graph."""
    cache = g._cache
    key = (cls, mask)
    hit = cache.get(key)
    if hit is None:
        hit = _check(g, mask, cls)
        cache[key] = hit
    return hit


def mask_components_in(g: Graph, mask: int, cls: str) -> bool:
    return all(mask_member(g, comp, cls) for comp in component_masks(g, mask))


# ---------------------------------------------------------------------------
# class cores, all operating on an induced vertex mask


def _check(g: Graph, mask: int, cls: str) -> bool:
    try:
        fn = _CORES[cls]
    except KeyError:
        raise ValueError(f"unknown graph class {cls!r}") from None
    return fn(g, mask)


def _forest(g: Graph, mask: int) -> bool:
    # Acyclic iff every component has |V| - 1 edges.
    for comp in component_masks(g, mask):
        nv = comp.bit_count()
        ne = sum((g.adj_mask[v] & comp).bit_count() for v in iterate_bits(comp)) // 2
        if ne != nv - 1:
            return False
    return True


def _bipartite(g: Graph, mask: int) -> bool:
    color: dict[int, int] = {}
    for comp in component_masks(g, mask):
        start = (comp & -comp).bit_length() - 1
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in iterate_bits(g.adj_mask[v] & comp):
                if w not in color:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _cluster(g: Graph, mask: int) -> bool:
    # Every component is a clique.
    for comp in component_masks(g, mask):
        for v in iterate_bits(comp):
            if (g.adj_mask[v] & comp) != comp & ~(1 << v):
                return False
    return True


def _triangle_free(g: Graph, mask: int) -> bool:
    for u, v in g.edges:
        if mask >> u & 1 and mask >> v & 1:
            if g.adj_mask[u] & g.adj_mask[v] & mask:
                return False
    return True


def _claw_free(g: Graph, mask: int) -> bool:
    # A claw center has three pairwise nonadjacent neighbors.
    for v in iterate_bits(mask):
        nb = vertices_of(g.adj_mask[v] & mask)
        if len(nb) < 3:
            continue
        k = len(nb)
        for i in range(k):
            for j in range(i + 1, k):
                if g.has_edge(nb[i], nb[j]):
                    continue
                pair_block = g.adj_mask[nb[i]] | g.adj_mask[nb[j]]
                rest = g.adj_mask[v] & mask & ~pair_block
                rest &= ~(1 << nb[i]) & ~(1 << nb[j])
                if rest:
                    return False
    return True


def _chordal(g: Graph, mask: int) -> bool:
    """Maximum-cardinality search followed by perfect-elimination validation."""
    verts = vertices_of(mask)
    if len(verts) <= 2:
        return True
    weight = {v: 0 for v in verts}
    numbered: dict[int, int] = {}
    order: list[int] = []
    remaining = set(verts)
    while remaining:
        v = max(remaining, key=lambda u: (weight[u], -u))
        remaining.discard(v)
        numbered[v] = len(order)
        order.append(v)
        for w in iterate_bits(g.adj_mask[v] & mask):
            if w in remaining:
                weight[w] += 1
    # Reverse MCS order is a perfect elimination order iff chordal: for each
    # vertex, its already-numbered neighbors must form a clique witnessed by
    # the latest of them.
    pos = numbered
    for v in order:
        earlier = [w for w in iterate_bits(g.adj_mask[v] & mask) if pos[w] < pos[v]]
        if not earlier:
            continue
        pivot = max(earlier, key=lambda w: pos[w])
        for w in earlier:
            if w != pivot and not g.has_edge(w, pivot):
                return False
    return True


def _at_free(g: Graph, mask: int) -> bool:
    verts = vertices_of(mask)
    comp_label: dict[int, dict[int, int]] = {}
    for c in verts:
        sub = mask & ~(1 << c) & ~g.adj_mask[c]
        labels: dict[int, int] = {}
        for i, comp in enumerate(component_masks(g, sub)):
            for v in iterate_bits(comp):
                labels[v] = i
        comp_label[c] = labels
    k = len(verts)
    for i in range(k):
        a = verts[i]
        for j in range(i + 1, k):
            b = verts[j]
            if g.has_edge(a, b):
                continue
            for l in range(j + 1, k):
                c = verts[l]
                if g.has_edge(a, c) or g.has_edge(b, c):
                    continue
                la, lb, lc = comp_label[a], comp_label[b], comp_label[c]
                if (
                    lc.get(a) is not None
                    and lc.get(a) == lc.get(b)
                    and lb.get(a) is not None
                    and lb.get(a) == lb.get(c)
                    and la.get(b) is not None
                    and la.get(b) == la.get(c)
                ):
                    return False
    return True


def _interval(g: Graph, mask: int) -> bool:
    return _chordal(g, mask) and _at_free(g, mask)


def _proper_interval(g: Graph, mask: int) -> bool:
    return _claw_free(g, mask) and _interval(g, mask)


def _split(g: Graph, mask: int) -> bool:
    """Degree-sequence characterization of split graphs."""
    degs = sorted(
        ((g.adj_mask[v] & mask).bit_count() for v in iterate_bits(mask)), reverse=True
    )
    n = len(degs)
    if n == 0:
        return True
    m = 0
    for i in range(1, n + 1):
        if degs[i - 1] >= i - 1:
            m = i
    left = sum(degs[:m])
    right = m * (m - 1) + sum(degs[m:])
    return left == right


def _bipartite_permutation(g: Graph, mask: int) -> bool:
    return _bipartite(g, mask) and _at_free(g, mask)


_CORES = {
    "forest": _forest,
    "bipartite": _bipartite,
    "cluster": _cluster,
    "claw-free": _claw_free,
    "triangle-free": _triangle_free,
    "chordal": _chordal,
    "interval": _interval,
    "proper-interval": _proper_interval,
    "split": _split,
    "bipartite-permutation": _bipartite_permutation,
}


# ---------------------------------------------------------------------------
# obstruction peeling


def minimal_obstruction_peel(g: Graph, cls: str, active: int | None = None) -> list[int]:
    """Minimal vertex set whose induced subgraph leaves ``cls`` component-wise.

    Scans vertices in ascending order, dropping any vertex whose removal
    keeps the remainder outside the class; repeats until a full pass removes
    nothing.  Heredity makes the survivor a minimal forbidden induced
    subgraph: removing any single vertex lands back inside the class.
    """
    mask = g.full_mask() if active is None else active
    if mask_components_in(g, mask, cls):
        raise ValueError(f"graph already has every component in {cls!r}")
    changed = True
    while changed:
        changed = False
        for v in vertices_of(mask):
            reduced = mask & ~(1 << v)
            if not mask_components_in(g, reduced, cls):
                mask = reduced
                changed = True
    return vertices_of(mask)
