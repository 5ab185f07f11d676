"""Tour of the graph core: construction, distances, clubs, serialization."""

from clubkit import (
    DIMACS,
    EDGELIST,
    bfs_distances,
    build_graph,
    connected_components,
    diameter,
    emit_graph,
    induced_subgraph,
    is_s_club,
    parse_graph,
)

# A 5-cycle: every vertex reaches every other within two hops.
c5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
print("C5:", c5)
print("distances from 0:", bfs_distances(c5, 0))
print("diameter:", diameter(c5))
print("is the whole cycle a 2-club?", is_s_club(c5, range(5), 2))
print("and a 1-club (clique)?", is_s_club(c5, range(5), 1))

# Dropping a vertex leaves a path of diameter 3.
p4, remap = induced_subgraph(c5, {0, 1, 2, 3})
print("\ninduced path:", p4, "remap:", remap)
print("path diameter:", diameter(p4))
print("2-club?", is_s_club(p4, range(4), 2))

# Components of a disconnected graph come back ordered by smallest id.
two_parts = build_graph(6, [(0, 1), (1, 2), (4, 5)])
print("\ncomponents:", connected_components(two_parts))
print("disconnected diameter:", diameter(two_parts))

# Both serializations round-trip byte for byte.
text = emit_graph(c5, DIMACS)
print("\nDIMACS form:")
print(text.decode(), end="")
again = parse_graph(text, DIMACS)
print("round trip equal:", again.edges == c5.edges)
print("edge-list form:", emit_graph(c5, EDGELIST))
