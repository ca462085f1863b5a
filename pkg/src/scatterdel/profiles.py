"""Shipped problem profiles: which pair of graph classes a solve targets.

A profile bundles the two class recognizers, the residual forbidden pairs
whose joint presence in one component must be branched away, the finite list
of outright-forbidden small graphs used for direct branching and packing,
and the branching-width / approximation constants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .patterns import (
    CATALOG,
    ParametricPatterns,
    PatternFamily,
    PatternGraph,
    cycle_pattern,
    dagger_aw_pattern,
    ddagger_aw_pattern,
)


@dataclass(frozen=True)
class ProblemProfile:
    """Full configuration of one target pair of graph classes.

    mode "A"/"B" branches on closest-pair vertex sets plus the connecting
    path (bounded by ``alpha``, the order of the forbidden path on side 1);
    mode "C" branches on members of ``g1`` first and then on closest-pair
    vertex sets alone.  ``g1`` also drives the whole-set packing stage of the
    approximation in every mode.
    """

    name: str
    class1: str
    class2: str
    pairs: tuple[tuple[PatternGraph, PatternGraph], ...]
    g1: tuple[PatternGraph, ...]
    mode: str
    alpha: int
    c: int
    d: int
    family1: PatternFamily
    family2: PatternFamily

    @property
    def side1_free(self) -> tuple[PatternGraph, ...]:
        """Patterns whose absence makes a pair-free component side-1 solvable."""
        out = []
        for h1, _ in self.pairs:
            if all(p.name != h1.name for p in out):
                out.append(h1)
        return tuple(out)

    @property
    def side2_free(self) -> tuple[PatternGraph, ...]:
        out = []
        for _, h2 in self.pairs:
            if all(p.name != h2.name for p in out):
                out.append(h2)
        return tuple(out)

    def g1_split(self) -> tuple[tuple[int, int] | None, tuple[PatternGraph, ...]]:
        """Partition g1 into a hole length range and the named remainder.

        Hole search is much cheaper than one pattern scan per cycle length,
        but only applies when the cycle lengths form a contiguous range of
        holes; otherwise every member is scanned as a named pattern.
        """
        lengths = sorted(
            int(p.name[1:]) for p in self.g1 if p.name.startswith("C") and p.name[1:].isdigit()
        )
        if not lengths:
            return None, self.g1
        lo, hi = lengths[0], lengths[-1]
        if lengths != list(range(lo, hi + 1)) or lo < 4:
            return None, self.g1
        named = tuple(
            p for p in self.g1 if not (p.name.startswith("C") and p.name[1:].isdigit())
        )
        return (lo, hi), named


def _cycles_from(min_len: int, step: int = 1) -> ParametricPatterns:
    def make(order: int) -> PatternGraph:
        return CATALOG["triangle"] if order == 3 else cycle_pattern(order)

    return ParametricPatterns(f"cycles>={min_len}", min_len, make, step)


def _holes() -> ParametricPatterns:
    return ParametricPatterns("holes", 4, cycle_pattern)


CLAW = CATALOG["claw"]
TRIANGLE = CATALOG["triangle"]
LONG_CLAW = CATALOG["long-claw"]
NET = CATALOG["net"]
SUN = CATALOG["sun"]
WHIPPING_TOP = CATALOG["whipping-top"]
C4 = CATALOG["C4"]
P3 = CATALOG["P3"]
P5 = CATALOG["P5"]
NECKTIE = CATALOG["necktie"]
BOWTIE = CATALOG["bowtie"]
X2 = CATALOG["X2"]
X3 = CATALOG["X3"]

FAMILY_CLAW_FREE = PatternFamily("claw-free", (CLAW,))
FAMILY_TRIANGLE_FREE = PatternFamily("triangle-free", (TRIANGLE,))
FAMILY_FOREST = PatternFamily("forest", (), (_cycles_from(3),))
FAMILY_CLUSTER = PatternFamily("cluster", (P3,))
FAMILY_INTERVAL = PatternFamily(
    "interval",
    (NET, SUN, LONG_CLAW, WHIPPING_TOP),
    (
        ParametricPatterns("dagger-aw", 7, dagger_aw_pattern),
        ParametricPatterns("ddagger-aw", 7, ddagger_aw_pattern),
        _holes(),
    ),
)
FAMILY_PROPER_INTERVAL = PatternFamily(
    "proper-interval", (CLAW, NET, SUN), (_holes(),)
)
FAMILY_CHORDAL = PatternFamily("chordal", (), (_holes(),))
FAMILY_BIPARTITE_PERMUTATION = PatternFamily(
    "bipartite-permutation", (TRIANGLE, LONG_CLAW, X2, X3), (_cycles_from(5),)
)
FAMILY_SPLIT = PatternFamily("split-components", (C4, CATALOG["C5"], P5, NECKTIE, BOWTIE))
FAMILY_BIPARTITE = PatternFamily("bipartite", (), (_cycles_from(3, step=2),))


def _holes_range(lo: int, hi: int) -> tuple[PatternGraph, ...]:
    return tuple(cycle_pattern(l) for l in range(lo, hi + 1))


PROFILES: dict[str, ProblemProfile] = {}


def _add(profile: ProblemProfile) -> None:
    PROFILES[profile.name] = profile


_add(
    ProblemProfile(
        name="claw-triangle",
        class1="claw-free",
        class2="triangle-free",
        pairs=((CLAW, TRIANGLE),),
        g1=(),
        mode="C",
        alpha=0,
        c=7,
        d=7,
        family1=FAMILY_CLAW_FREE,
        family2=FAMILY_TRIANGLE_FREE,
    )
)

_add(
    ProblemProfile(
        name="interval-tree",
        class1="interval",
        class2="forest",
        pairs=((LONG_CLAW, TRIANGLE),),
        g1=_holes_range(4, 10)
        + (NET, SUN, WHIPPING_TOP)
        + tuple(dagger_aw_pattern(s) for s in range(7, 11))
        + tuple(ddagger_aw_pattern(s) for s in range(7, 11)),
        mode="C",
        alpha=0,
        c=10,
        d=10,
        family1=FAMILY_INTERVAL,
        family2=FAMILY_FOREST,
    )
)

_add(
    ProblemProfile(
        name="proper-interval-tree",
        class1="proper-interval",
        class2="forest",
        pairs=((CLAW, TRIANGLE),),
        g1=_holes_range(4, 7) + (NET, SUN),
        mode="C",
        alpha=0,
        c=7,
        d=7,
        family1=FAMILY_PROPER_INTERVAL,
        family2=FAMILY_FOREST,
    )
)

_add(
    ProblemProfile(
        name="chordal-bipperm",
        class1="chordal",
        class2="bipartite-permutation",
        pairs=((C4, LONG_CLAW), (C4, TRIANGLE)),
        g1=_holes_range(5, 10) + (X2, X3),
        mode="C",
        alpha=0,
        c=11,
        d=11,
        family1=FAMILY_CHORDAL,
        family2=FAMILY_BIPARTITE_PERMUTATION,
    )
)

_add(
    ProblemProfile(
        name="split-bipartite",
        class1="split",
        class2="bipartite",
        pairs=((C4, TRIANGLE), (P5, TRIANGLE)),
        g1=(CATALOG["C5"], NECKTIE, BOWTIE, cycle_pattern(7), cycle_pattern(9), cycle_pattern(11)),
        mode="B",
        alpha=5,
        c=11,
        d=11,
        family1=FAMILY_SPLIT,
        family2=FAMILY_BIPARTITE,
    )
)

_add(
    ProblemProfile(
        name="cluster-forest",
        class1="cluster",
        class2="forest",
        pairs=((P3, TRIANGLE),),
        g1=(C4,),
        mode="B",
        alpha=3,
        c=4,
        d=4,
        family1=FAMILY_CLUSTER,
        family2=FAMILY_FOREST,
    )
)


def get_profile(name: str) -> ProblemProfile:
    try:
        return PROFILES[name]
    except KeyError:
        raise KeyError(
            f"unknown profile {name!r}; available: {', '.join(sorted(PROFILES))}"
        ) from None
