"""Catalog shapes, occurrence search, hole finding, and the family algebra."""

from __future__ import annotations

import itertools
import random

import pytest

from scatterdel.graphs import Graph, induced_subgraph, mask_of
from scatterdel.patterns import (
    CATALOG,
    PatternFamily,
    cycle_pattern,
    dagger_aw_pattern,
    ddagger_aw_pattern,
    enumerate_induced,
    families_match,
    find_hole,
    find_induced,
    forbidden_pairs,
    get_pattern,
    graphs_isomorphic,
    has_induced,
    minimalize,
    sp_family,
    subset_induces,
)
from scatterdel.profiles import FAMILY_BIPARTITE, FAMILY_FOREST, FAMILY_INTERVAL, FAMILY_SPLIT

from helpers import complete_graph, cycle_graph, nx_isomorphic, path_graph, random_graph

# Pinned encodings: (name, order, size, sorted degree sequence).
SHAPES = [
    ("claw", 4, 3, (1, 1, 1, 3)),
    ("triangle", 3, 3, (2, 2, 2)),
    ("D4", 4, 5, (2, 2, 3, 3)),
    ("net", 6, 6, (1, 1, 1, 3, 3, 3)),
    ("sun", 6, 9, (2, 2, 2, 4, 4, 4)),
    ("long-claw", 7, 6, (1, 1, 1, 2, 2, 2, 3)),
    ("whipping-top", 7, 10, (1, 2, 2, 3, 3, 4, 5)),
    ("necktie", 5, 5, (1, 2, 2, 2, 3)),
    ("bowtie", 5, 6, (2, 2, 2, 2, 4)),
    ("X2", 7, 7, (1, 1, 1, 2, 3, 3, 3)),
    ("X3", 7, 8, (1, 2, 2, 2, 2, 3, 4)),
    ("2K1", 2, 0, (0, 0)),
    ("2K2", 4, 2, (1, 1, 1, 1)),
]


@pytest.mark.parametrize("name,order,size,degs", SHAPES)
def test_fixed_pattern_shapes(name, order, size, degs):
    p = CATALOG[name]
    assert p.order == order
    assert p.graph.m == size
    assert p.degree_sequence() == degs


def test_parametric_witness_shapes():
    assert dagger_aw_pattern(7).degree_sequence() == (1, 1, 1, 3, 3, 3, 4)
    assert dagger_aw_pattern(8).degree_sequence() == (1, 1, 1, 3, 3, 3, 3, 5)
    assert ddagger_aw_pattern(7).degree_sequence() == (2, 2, 2, 4, 4, 5, 5)
    assert ddagger_aw_pattern(8).degree_sequence() == (2, 2, 2, 4, 4, 4, 6, 6)
    # the smallest members of the two witness families are the net and the sun
    assert graphs_isomorphic(dagger_aw_pattern(6).graph, CATALOG["net"].graph)
    assert graphs_isomorphic(ddagger_aw_pattern(6).graph, CATALOG["sun"].graph)


def test_connectivity_flags():
    from scatterdel.graphs import connected_components

    for p in CATALOG.values():
        assert p.connected == (len(connected_components(p.graph)) <= 1)


def test_get_pattern_parametric_names():
    assert get_pattern("C3").name == "triangle"
    assert get_pattern("C9").order == 9
    assert get_pattern("K5").graph.m == 10
    assert get_pattern("P6").order == 6
    assert get_pattern("dagger-aw-3").order == 7
    assert get_pattern("ddagger-aw-2").order == 7
    with pytest.raises(KeyError):
        get_pattern("nonsense")


def test_find_induced_examples():
    claw = CATALOG["claw"]
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert find_induced(star, claw) == (0, 1, 2, 3)
    assert find_induced(cycle_graph(4), CATALOG["triangle"]) is None
    assert find_induced(complete_graph(4), claw) is None


def test_enumerate_induced_examples():
    k4 = complete_graph(4)
    assert list(enumerate_induced(k4, CATALOG["triangle"])) == [
        (0, 1, 2),
        (0, 1, 3),
        (0, 2, 3),
        (1, 2, 3),
    ]
    assert list(enumerate_induced(path_graph(5), CATALOG["P3"])) == [
        (0, 1, 2),
        (1, 2, 3),
        (2, 3, 4),
    ]
    forest = Graph(6, [(0, 1), (1, 2), (3, 4)])
    assert list(enumerate_induced(forest, CATALOG["C4"])) == []


def test_enumeration_matches_naive_subset_scan():
    rng = random.Random(5)
    pats = [CATALOG[n] for n in ("triangle", "claw", "P4", "C4", "necktie", "2K2")]
    for _ in range(80):
        g = random_graph(rng, rng.randint(3, 9), rng.choice([0.25, 0.45, 0.65]))
        for pat in pats:
            mine = set(enumerate_induced(g, pat))
            naive = set()
            for sub in itertools.combinations(range(g.n), pat.order):
                h, _ = induced_subgraph(g, sub)
                if nx_isomorphic(h, pat.graph):
                    naive.add(sub)
            assert mine == naive, (pat.name, sorted(g.edges))


def test_occurrences_induce_the_pattern():
    rng = random.Random(6)
    for _ in range(40):
        g = random_graph(rng, rng.randint(4, 9), 0.5)
        for name in ("claw", "D4", "P5", "bowtie"):
            pat = CATALOG[name]
            for occ in enumerate_induced(g, pat):
                h, _ = induced_subgraph(g, occ)
                assert nx_isomorphic(h, pat.graph)
                assert subset_induces(g, occ, pat)


def test_has_induced_agrees_with_enumeration():
    rng = random.Random(7)
    for _ in range(120):
        g = random_graph(rng, rng.randint(3, 9), rng.random())
        for name in ("triangle", "claw", "C4", "P5", "net"):
            pat = CATALOG[name]
            assert has_induced(g, pat) == (find_induced(g, pat) is not None)


def test_find_hole_examples():
    assert find_hole(cycle_graph(6)) == [0, 1, 2, 3, 4, 5]
    c4_pendant = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    assert find_hole(c4_pendant, 5, 10) is None
    chorded = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert find_hole(chorded) is None
    with pytest.raises(ValueError):
        find_hole(cycle_graph(5), 3)


def test_find_hole_is_shortest_and_chordless():
    rng = random.Random(8)
    for _ in range(150):
        g = random_graph(rng, rng.randint(4, 9), rng.choice([0.25, 0.4, 0.6]))
        hole = find_hole(g)
        lengths = [
            l
            for l in range(4, g.n + 1)
            if any(
                subset_induces(g, sub, cycle_pattern(l) if l > 3 else CATALOG["triangle"])
                for sub in itertools.combinations(range(g.n), l)
            )
        ]
        if hole is None:
            assert not lengths
        else:
            assert len(hole) == min(lengths)
            # lexicographically smallest sorted set among equally short holes
            from scatterdel.patterns import _holes_of_length

            peers = _holes_of_length(g, len(hole), g.full_mask())
            assert sorted(hole) == min(sorted(c) for c in peers)
            # chordless: cycle edges only
            hset = mask_of(hole)
            for i, v in enumerate(hole):
                allowed = {hole[(i + 1) % len(hole)], hole[(i - 1) % len(hole)]}
                nbrs = set(w for w in g.adj[v] if hset >> w & 1)
                assert nbrs == allowed


def test_minimalize_examples():
    p3, p5 = CATALOG["P3"], CATALOG["P5"]
    assert [p.name for p in minimalize([p3, p5])] == ["P3"]
    c3, c4 = CATALOG["triangle"], CATALOG["C4"]
    assert {p.name for p in minimalize([c3, c4])} == {"triangle", "C4"}
    assert [p.name for p in minimalize([CATALOG["claw"], CATALOG["long-claw"]])] == ["claw"]
    # idempotent
    fam = [CATALOG[n] for n in ("claw", "long-claw", "net", "P3")]
    once = minimalize(fam)
    assert minimalize(once) == once


def test_sp_family_worked_example():
    f1 = PatternFamily("a", (CATALOG["triangle"], CATALOG["C4"]))
    f2 = PatternFamily("b", (CATALOG["D4"], CATALOG["C4"]))
    sp = sp_family(f1, f2, 12)
    assert {p.name for p in sp} == {"C4", "D4"}
    assert forbidden_pairs(f1, f2, 12) == []


def test_sp_family_trivial_empty():
    f1 = PatternFamily("a", (CATALOG["P3"],))
    f2 = PatternFamily("b", (get_pattern("K5"),))
    assert sp_family(f1, f2, 12) == []


def test_sp_family_interval_versus_cycles():
    sp = sp_family(FAMILY_INTERVAL, FAMILY_FOREST, 12)
    names = {p.name for p in sp}
    want = {"net", "sun", "whipping-top"}
    want |= {f"C{i}" for i in range(4, 13)}
    want |= {f"dagger-aw-{d}" for d in range(3, 9)}
    want |= {f"ddagger-aw-{d}" for d in range(2, 8)}
    assert names == want
    pairs = forbidden_pairs(FAMILY_INTERVAL, FAMILY_FOREST, 12)
    assert [(a.name, b.name) for a, b in pairs] == [("long-claw", "triangle")]


def test_forbidden_pairs_split_versus_odd_cycles():
    pairs = forbidden_pairs(FAMILY_SPLIT, FAMILY_BIPARTITE, 12)
    assert [(a.name, b.name) for a, b in pairs] == [
        ("C4", "triangle"),
        ("P5", "triangle"),
    ]


def test_family_algebra_invariance_under_order_and_relabeling():
    def relabel(pat, seed):
        rng = random.Random(seed)
        perm = list(range(pat.order))
        rng.shuffle(perm)
        edges = [(perm[u], perm[v]) for u, v in pat.graph.edges]
        from scatterdel.patterns import PatternGraph

        return PatternGraph(pat.name, Graph(pat.order, edges), pat.connected)

    base1 = [CATALOG["triangle"], CATALOG["C4"]]
    base2 = [CATALOG["D4"], CATALOG["C4"]]
    ref_sp = sp_family(PatternFamily("a", tuple(base1)), PatternFamily("b", tuple(base2)), 12)
    for seed in range(4):
        f1 = PatternFamily("a", tuple(relabel(p, seed + 10 * i) for i, p in enumerate(reversed(base1))))
        f2 = PatternFamily("b", tuple(relabel(p, seed + 100 * i) for i, p in enumerate(reversed(base2))))
        got = sp_family(f1, f2, 12)
        assert families_match(got, ref_sp)
        assert forbidden_pairs(f1, f2, 12) == []


def test_families_are_minimal_at_cap():
    for fam in (FAMILY_INTERVAL, FAMILY_FOREST, FAMILY_SPLIT, FAMILY_BIPARTITE):
        members = fam.members(12)
        assert families_match(minimalize(members), members)
