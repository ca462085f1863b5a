"""scatterdel: vertex deletion into scattered pairs of graph classes.

Delete at most k vertices so that every connected component of what remains
belongs to one of two hereditary graph classes.  Ships bounded search-tree
solvers for six class pairs, constant-factor approximations, polynomial
recognizers, a forbidden-pattern catalog with its family algebra, and a
brute-force oracle for verification.
"""

from .approx import ApproxResult, approx_solve
from .basesolve import BaseSolveRequest, exact_hereditary_deletion, side_applicability
from .engine import (
    PairOccurrence,
    SolveResult,
    closest_pair_occurrence,
    reduce_components,
    solve_decision,
    solve_optimize,
)
from .generate import GeneratorSpec, generate_planted
from .graphs import (
    Graph,
    connected_components,
    distance_between_sets,
    induced_subgraph,
    parse_edge_list,
)
from .oracle import brute_force_opt, verify_solution
from .patterns import (
    PatternFamily,
    PatternGraph,
    enumerate_induced,
    find_hole,
    find_induced,
    forbidden_pairs,
    get_pattern,
    minimalize,
    sp_family,
)
from .profiles import PROFILES, ProblemProfile, get_profile
from .recognizers import is_at_free, is_member, minimal_obstruction_peel

__version__ = "0.1.0"

__all__ = [
    "ApproxResult",
    "BaseSolveRequest",
    "GeneratorSpec",
    "Graph",
    "PROFILES",
    "PairOccurrence",
    "PatternFamily",
    "PatternGraph",
    "ProblemProfile",
    "SolveResult",
    "approx_solve",
    "brute_force_opt",
    "closest_pair_occurrence",
    "connected_components",
    "distance_between_sets",
    "enumerate_induced",
    "exact_hereditary_deletion",
    "find_hole",
    "find_induced",
    "forbidden_pairs",
    "generate_planted",
    "get_pattern",
    "get_profile",
    "induced_subgraph",
    "is_at_free",
    "is_member",
    "minimal_obstruction_peel",
    "minimalize",
    "parse_edge_list",
    "reduce_components",
    "side_applicability",
    "solve_decision",
    "solve_optimize",
    "sp_family",
    "verify_solution",
]
