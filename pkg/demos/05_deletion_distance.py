"""How far is a graph from being a 2-club cluster graph?

A 2-club cluster graph is one where every connected component has diameter
at most two.  The distance is the minimum number of vertices to delete.
Every gadget the toolkit builds sits at distance at most two: deleting the
two hubs a and b always works, and for complete sources deleting u alone
already does.
"""

from itertools import combinations

from clubkit import (
    build_graph,
    is_s_club_cluster,
    min_deletion_to_s_club_cluster,
    reduce,
    verify_deletion,
)

# A path on four vertices has diameter 3; chopping off an end fixes it.
p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
print("P4 a 2-club cluster graph?", is_s_club_cluster(p4, 2))
cert = min_deletion_to_s_club_cluster(p4, 2, 2)
print("smallest deletion set:", sorted(cert.deleted))
print("re-verified:", verify_deletion(p4, cert.deleted, 2))

# Gadget of a non-complete source: distance exactly two, via the hubs.
inst = reduce(build_graph(3, [(0, 1), (1, 2)]))
print("\ngadget of a path source:", inst.graph)
print("is it already a cluster graph?", is_s_club_cluster(inst.graph, 2))
cert = min_deletion_to_s_club_cluster(inst.graph, 2, 2)
print("smallest deletion set:", sorted(cert.deleted),
      "(the hubs a and b:", [inst.layout.a, inst.layout.b], ")")

# Deleting a and b isolates every x1 slot and leaves u adjacent to all
# remaining vertices, so every component has diameter at most 2.
print("deleting {a, b} verifies:",
      verify_deletion(inst.graph, [inst.layout.a, inst.layout.b], 2))
print("deleting {a, u} does not:",
      verify_deletion(inst.graph, [inst.layout.a, inst.layout.u], 2))

# Complete sources collapse to distance one: u is the single obstruction.
inst = reduce(build_graph(3, list(combinations(range(3), 2))))
cert = min_deletion_to_s_club_cluster(inst.graph, 2, 2)
print("\ngadget of a triangle source: smallest deletion set:",
      sorted(cert.deleted), "(u is", inst.layout.u, ")")
