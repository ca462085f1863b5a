"""Forbidden-pattern catalog, induced-subgraph search, and family algebra.

Patterns are small labeled graphs (at most 12 vertices in the shipped
catalog).  Occurrences are reported as sorted vertex sets of the host graph,
deduplicated over automorphisms, in ascending lexicographic order.

The family algebra computes, for two minimal forbidden families, the set of
graphs that can never appear in any allowed component (``sp_family``) and the
residual pairs whose joint presence in one component is what remains
forbidden (``forbidden_pairs``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .graphs import Graph, iterate_bits, mask_of, vertices_of


@dataclass(frozen=True)
class PatternGraph:
    """A named forbidden pattern with a fixed canonical labeling."""

    name: str
    graph: Graph
    connected: bool = True

    def __post_init__(self):
        rows = _rows(self.graph, tuple(range(self.graph.n)))
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_degs", tuple(sorted(r.bit_count() for r in rows)))

    @property
    def order(self) -> int:
        return self.graph.n

    def degree_sequence(self) -> tuple[int, ...]:
        return self._degs

    def sort_key(self):
        """Label-independent ordering key for canonical family output."""
        return (self.graph.n, self.graph.m, self._degs, self.name)


@dataclass(frozen=True)
class ParametricPatterns:
    """Generator descriptor for an infinite pattern family, indexed by order."""

    name: str
    min_order: int
    make: Callable[[int], PatternGraph]
    step: int = 1

    def instances(self, size_cap: int) -> list[PatternGraph]:
        return [self.make(s) for s in range(self.min_order, size_cap + 1, self.step)]


@dataclass(frozen=True)
class PatternFamily:
    """Minimal forbidden family: fixed members plus size-capped generators."""

    name: str
    fixed: tuple[PatternGraph, ...]
    parametric: tuple[ParametricPatterns, ...] = ()

    def members(self, size_cap: int) -> list[PatternGraph]:
        out = [p for p in self.fixed if p.order <= size_cap]
        for gen in self.parametric:
            out.extend(gen.instances(size_cap))
        return sorted(out, key=PatternGraph.sort_key)


def _rows(g: Graph, subset: tuple[int, ...]) -> tuple[int, ...]:
    """Adjacency of the induced subset re-encoded on local indices."""
    rows = []
    for v in subset:
        row = 0
        mv = g.adj_mask[v]
        for j, w in enumerate(subset):
            if mv >> w & 1:
                row |= 1 << j
        rows.append(row)
    return tuple(rows)


def _iso_rows(rows_a: tuple[int, ...], rows_b: tuple[int, ...]) -> bool:
    """Isomorphism between two equally-sized local adjacency encodings."""
    k = len(rows_a)
    if k != len(rows_b):
        return False
    deg_a = [r.bit_count() for r in rows_a]
    deg_b = [r.bit_count() for r in rows_b]
    if sorted(deg_a) != sorted(deg_b):
        return False
    order = sorted(range(k), key=lambda i: -deg_a[i])
    image = [-1] * k

    def place(idx: int, used: int) -> bool:
        if idx == k:
            return True
        a = order[idx]
        for b in range(k):
            if used >> b & 1 or deg_b[b] != deg_a[a]:
                continue
            ok = True
            for j in range(idx):
                a2 = order[j]
                if (rows_a[a] >> a2 & 1) != (rows_b[b] >> image[a2] & 1):
                    ok = False
                    break
            if ok:
                image[a] = b
                if place(idx + 1, used | 1 << b):
                    return True
        return False

    return place(0, 0)


# ---------------------------------------------------------------------------
# fixed pattern constructors


def path_pattern(length: int) -> PatternGraph:
    return PatternGraph(f"P{length}", Graph(length, [(i, i + 1) for i in range(length - 1)]))


def cycle_pattern(length: int) -> PatternGraph:
    edges = [(i, (i + 1) % length) for i in range(length)]
    return PatternGraph(f"C{length}", Graph(length, edges))


def complete_pattern(order: int) -> PatternGraph:
    return PatternGraph(f"K{order}", Graph(order, itertools.combinations(range(order), 2)))


def dagger_aw_pattern(order: int) -> PatternGraph:
    """Single-center asteroidal witness with base path of d = order-4 vertices.

    Layout: end vertices 0 and d+1 of the chain 0-1-...-d-(d+1), a center d+2
    adjacent to every inner chain vertex, and a pendant d+3 on the center.
    The smallest member (order 6) is the net.
    """
    d = order - 4
    if d < 2:
        raise ValueError("single-center witness needs a base of at least 2")
    c, t = d + 2, d + 3
    edges = [(i, i + 1) for i in range(d + 1)]
    edges += [(c, b) for b in range(1, d + 1)]
    edges.append((c, t))
    return PatternGraph(f"dagger-aw-{d}", Graph(order, edges))


def ddagger_aw_pattern(order: int) -> PatternGraph:
    """Double-center asteroidal witness with base path of d = order-5 vertices.

    Chain 0-1-...-d-(d+1); centers d+2 and d+3 are adjacent, cover the whole
    base, and each picks up one chain end; vertex d+4 is pendant on both
    centers.  The smallest member (order 6) is the sun.
    """
    d = order - 5
    if d < 1:
        raise ValueError("double-center witness needs a base of at least 1")
    c1, c2, t = d + 2, d + 3, d + 4
    edges = [(i, i + 1) for i in range(d + 1)]
    edges += [(c1, b) for b in range(1, d + 1)]
    edges += [(c2, b) for b in range(1, d + 1)]
    edges += [(c1, c2), (c1, 0), (c2, d + 1), (t, c1), (t, c2)]
    return PatternGraph(f"ddagger-aw-{d}", Graph(order, edges))


def _fixed_catalog() -> dict[str, PatternGraph]:
    pats = [
        path_pattern(3),
        path_pattern(4),
        path_pattern(5),
        PatternGraph("claw", Graph(4, [(0, 1), (0, 2), (0, 3)])),
        PatternGraph("triangle", Graph(3, [(0, 1), (0, 2), (1, 2)])),
        cycle_pattern(4),
        cycle_pattern(5),
        cycle_pattern(6),
        PatternGraph("D4", Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])),
        PatternGraph(
            "long-claw",
            Graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]),
        ),
        PatternGraph(
            "net",
            Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]),
        ),
        PatternGraph(
            "sun",
            Graph(
                6,
                [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)],
            ),
        ),
        # Fan over a 5-path with a pendant hanging from the middle path vertex.
        PatternGraph(
            "whipping-top",
            Graph(
                7,
                [(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4), (6, 2)],
            ),
        ),
        # Triangle {0,1,2} with the tail 1-3-4.
        PatternGraph(
            "necktie", Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (3, 4)])
        ),
        # Two triangles sharing vertex 2.
        PatternGraph(
            "bowtie", Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        ),
        # 4-cycle 0-1-2-3 with pendants on three of its vertices.
        PatternGraph(
            "X2",
            Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (5, 1), (6, 2)]),
        ),
        # Two 4-cycles sharing the edge 0-1, plus a pendant on vertex 0.
        PatternGraph(
            "X3",
            Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 0), (0, 6)]),
        ),
        PatternGraph("2K1", Graph(2, []), connected=False),
        PatternGraph("2K2", Graph(4, [(0, 1), (2, 3)]), connected=False),
    ]
    return {p.name: p for p in pats}


CATALOG: dict[str, PatternGraph] = _fixed_catalog()


def get_pattern(name: str) -> PatternGraph:
    """Look up a fixed pattern or instantiate a parametric one by name.

    Parametric names: ``C<l>`` (cycle), ``P<l>`` (path), ``K<t>`` (complete),
    ``dagger-aw-<d>`` and ``ddagger-aw-<d>`` (by base length d).
    """
    if name in CATALOG:
        return CATALOG[name]
    try:
        if name.startswith("C") and name[1:].isdigit():
            length = int(name[1:])
            if length == 3:
                return CATALOG["triangle"]
            if length >= 4:
                return cycle_pattern(length)
        if name.startswith("P") and name[1:].isdigit() and int(name[1:]) >= 1:
            return path_pattern(int(name[1:]))
        if name.startswith("K") and name[1:].isdigit() and int(name[1:]) >= 1:
            return complete_pattern(int(name[1:]))
        if name.startswith("dagger-aw-"):
            return dagger_aw_pattern(int(name.rsplit("-", 1)[1]) + 4)
        if name.startswith("ddagger-aw-"):
            return ddagger_aw_pattern(int(name.rsplit("-", 1)[1]) + 5)
    except ValueError:
        pass
    raise KeyError(f"unknown pattern {name!r}")


def catalog_names() -> list[str]:
    return sorted(CATALOG)


# ---------------------------------------------------------------------------
# induced-subgraph search


def graphs_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return _iso_rows(_rows(a, tuple(range(a.n))), _rows(b, tuple(range(b.n))))


def subset_induces(g: Graph, subset: tuple[int, ...], pattern: PatternGraph) -> bool:
    """Whether the induced subgraph on ``subset`` is isomorphic to the pattern."""
    if len(subset) != pattern.order:
        return False
    degs = tuple(
        sorted((g.adj_mask[v] & mask_of(subset)).bit_count() for v in subset)
    )
    if degs != pattern._degs:
        return False
    return _iso_rows(_rows(g, tuple(subset)), pattern._rows)


def enumerate_induced(
    g: Graph, pattern: PatternGraph, active: int | None = None
) -> Iterator[tuple[int, ...]]:
    """All occurrences of the pattern, as sorted vertex tuples, lex ascending."""
    verts = vertices_of(g.full_mask() if active is None else active)
    if len(verts) < pattern.order:
        return
    prows = pattern._rows
    pdegs = pattern._degs
    for subset in itertools.combinations(verts, pattern.order):
        smask = mask_of(subset)
        degs = tuple(sorted((g.adj_mask[v] & smask).bit_count() for v in subset))
        if degs != pdegs:
            continue
        if _iso_rows(_rows(g, subset), prows):
            yield subset


def find_induced(
    g: Graph, pattern: PatternGraph, active: int | None = None
) -> tuple[int, ...] | None:
    """Lexicographically smallest occurrence vertex set, or None."""
    for occ in enumerate_induced(g, pattern, active):
        return occ
    return None


def has_induced(g: Graph, pattern: PatternGraph, active: int | None = None) -> bool:
    """Fast presence test via backtracking over injective adjacency-consistent maps."""
    mask = g.full_mask() if active is None else active
    k = pattern.order
    if mask.bit_count() < k:
        return False
    prows = pattern._rows
    pdeg = [r.bit_count() for r in prows]
    # Place pattern vertices so each one attaches to an already-placed vertex
    # when possible; break ties toward high degree for earlier pruning.
    order: list[int] = []
    placed_mask = 0
    while len(order) < k:
        unplaced = [i for i in range(k) if not placed_mask >> i & 1]
        attached = [i for i in unplaced if prows[i] & placed_mask]
        pool = attached or unplaced
        nxt = max(pool, key=lambda i: (pdeg[i], -i))
        order.append(nxt)
        placed_mask |= 1 << nxt

    host = vertices_of(mask)
    hostdeg = {v: (g.adj_mask[v] & mask).bit_count() for v in host}
    image = [-1] * k

    def place(idx: int, used: int) -> bool:
        if idx == k:
            return True
        p = order[idx]
        for v in host:
            if used >> v & 1 or hostdeg[v] < pdeg[p]:
                continue
            ok = True
            for j in range(idx):
                q = order[j]
                if (prows[p] >> q & 1) != (g.adj_mask[v] >> image[q] & 1):
                    ok = False
                    break
            if ok:
                image[p] = v
                if place(idx + 1, used | 1 << v):
                    return True
        return False

    return place(0, 0)


# ---------------------------------------------------------------------------
# hole search


def find_hole(
    g: Graph,
    min_len: int = 4,
    max_len: int | None = None,
    active: int | None = None,
) -> list[int] | None:
    """Shortest induced cycle with length in [min_len, max_len], in cycle order.

    Among equally short holes the one with the lexicographically smallest
    sorted vertex set wins.  Returns None when no such hole exists.
    """
    if min_len < 4:
        raise ValueError("holes have length at least 4")
    mask = g.full_mask() if active is None else active
    n_active = mask.bit_count()
    top = min(max_len if max_len is not None else n_active, n_active)
    for length in range(min_len, top + 1):
        holes = _holes_of_length(g, length, mask)
        if holes:
            return min(holes, key=lambda cyc: tuple(sorted(cyc)))
    return None


def _holes_of_length(g: Graph, length: int, mask: int) -> list[list[int]]:
    """All induced cycles of exactly ``length`` vertices inside ``mask``.

    Canonical form: starts at its minimum vertex, second vertex smaller than
    the last (fixes direction), so each hole appears once.
    """
    adj = g.adj_mask
    out: list[list[int]] = []

    def extend(path: list[int], path_mask: int):
        last = path[-1]
        if len(path) == length:
            if adj[last] >> path[0] & 1 and path[1] < path[-1]:
                out.append(path.copy())
            return
        start = path[0]
        middle_mask = path_mask & ~(1 << start) & ~(1 << last)
        for w in iterate_bits(adj[last] & mask & ~path_mask):
            if w < start:
                continue
            if adj[w] & middle_mask:
                continue  # chord to an interior path vertex
            if 2 <= len(path) <= length - 2 and adj[w] >> start & 1:
                continue  # premature edge back to the start would be a chord
            path.append(w)
            extend(path, path_mask | 1 << w)
            path.pop()

    for v0 in iterate_bits(mask):
        extend([v0], 1 << v0)
    return out


# ---------------------------------------------------------------------------
# family algebra


def induced_in(small: PatternGraph, big: PatternGraph) -> bool:
    """Whether ``small`` occurs as an induced subgraph of ``big`` (iso counts)."""
    if small.order > big.order:
        return False
    return has_induced(big.graph, small)


def minimalize(members: list[PatternGraph]) -> list[PatternGraph]:
    """Drop every member that has another member as an induced subgraph.

    Iso-duplicate members collapse to one representative.  Idempotent.
    """
    ordered = sorted(members, key=PatternGraph.sort_key)
    kept: list[PatternGraph] = []
    for p in ordered:
        if any(induced_in(q, p) for q in kept):
            continue
        kept.append(p)
    return kept


def _contains_member(p: PatternGraph, others: list[PatternGraph]) -> bool:
    return any(induced_in(q, p) for q in others)


def sp_family(
    f1: PatternFamily, f2: PatternFamily, size_cap: int
) -> list[PatternGraph]:
    """Graphs of either family containing a member of the other induced.

    These graphs can never appear in any component regardless of which side
    the component is meant to satisfy.  The result is minimalized and sorted
    by a label-independent key, so it is invariant under input permutation
    and relabeling.
    """
    mem1 = f1.members(size_cap)
    mem2 = f2.members(size_cap)
    pruned = [p for p in mem1 if _contains_member(p, mem2)]
    for p in mem2:
        if _contains_member(p, mem1) and not any(
            graphs_isomorphic(p.graph, q.graph) for q in pruned
        ):
            pruned.append(p)
    return minimalize(pruned)


def forbidden_pairs(
    f1: PatternFamily, f2: PatternFamily, size_cap: int
) -> list[tuple[PatternGraph, PatternGraph]]:
    """All (H1, H2) with neither side redundant through the pruned family."""
    mem1 = f1.members(size_cap)
    mem2 = f2.members(size_cap)
    keep1 = [p for p in mem1 if not _contains_member(p, mem2)]
    keep2 = [p for p in mem2 if not _contains_member(p, mem1)]
    pairs = [(h1, h2) for h1 in keep1 for h2 in keep2]
    return sorted(pairs, key=lambda pr: (pr[0].sort_key(), pr[1].sort_key()))


def families_match(a: list[PatternGraph], b: list[PatternGraph]) -> bool:
    """Multiset equality of two pattern lists up to isomorphism."""
    if len(a) != len(b):
        return False
    remaining = list(b)
    for p in a:
        for i, q in enumerate(remaining):
            if graphs_isomorphic(p.graph, q.graph):
                del remaining[i]
                break
        else:
            return False
    return True
