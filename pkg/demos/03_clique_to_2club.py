"""Solve both sides exactly and walk a solution across the transformation."""

from itertools import combinations

from clubkit import (
    build_graph,
    extract_clique,
    forward_map,
    has_s_club_of_size,
    is_s_club,
    max_clique,
    max_s_club,
    reduce,
    target_size,
)

# Source graph: a triangle with a pendant vertex.
h = build_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
clique = max_clique(h)
print("source:", h)
print("maximum clique:", sorted(clique.best_set), "size", clique.best_size,
      f"({clique.nodes_explored} nodes)")

inst = reduce(h)
print("gadget:", inst.graph)

# Forward: the clique maps to a 2-club of exactly the target size.
image = forward_map(inst, clique.best_set)
target = target_size(inst.n, clique.best_size)
print("\nforward image size:", len(image), "target:", target)
print("verified 2-club:", is_s_club(inst.graph, image, 2))

# Solving the gadget directly finds a 2-club of the same size...
club = max_s_club(inst.graph, 2)
print("\nsolved maximum 2-club size:", club.best_size,
      f"({club.nodes_explored} nodes, {club.elapsed * 1000:.0f}ms)")

# ...and extraction brings any such 2-club back to a clique of the source.
recovered = extract_clique(inst, club.best_set)
print("extracted source vertices:", sorted(recovered))
print("pairwise adjacent:", all(h.has_edge(u, v)
                                for u, v in combinations(sorted(recovered), 2)))

# The decision form stops at the first witness, so the yes side is cheap.
print("\ngadget has a 2-club of size >= target?",
      has_s_club_of_size(inst.graph, 2, target))
print("and one vertex more?",
      has_s_club_of_size(inst.graph, 2, target + 1))
