"""Class recognizers, asteroidal triples, and minimal obstruction peeling."""

from scatterdel import Graph, get_pattern, is_at_free, is_member, minimal_obstruction_peel
from scatterdel.graphs import format_edge_list
from scatterdel.recognizers import GRAPH_CLASSES

samples = {
    "P6": Graph(6, [(i, i + 1) for i in range(5)]),
    "C4": Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "C6": Graph(6, [(i, (i + 1) % 6) for i in range(6)]),
    "K4": Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "long-claw": get_pattern("long-claw").graph,
    "net": get_pattern("net").graph,
}

header = " ".join(f"{c[:9]:>9s}" for c in GRAPH_CLASSES)
print(f"{'graph':10s} {header}")
for name, g in samples.items():
    row = " ".join(f"{str(is_member(g, c))[:5]:>9s}" for c in GRAPH_CLASSES)
    print(f"{name:10s} {row}")

print("\nasteroidal triples: paths are fine, six-cycles and long claws are not")
for name in ("P6", "C6", "long-claw"):
    print(f"  {name:10s} AT-free: {is_at_free(samples[name])}")

print("\npeeling a minimal obstruction out of a non-member:")
c5_pendant = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
witness = minimal_obstruction_peel(c5_pendant, "forest")
print("  five-cycle with a pendant, against forests ->", witness)

print("\nfixed catalog entries render as edge lists, e.g. the whipping top:")
print(format_edge_list(get_pattern("whipping-top").graph))
