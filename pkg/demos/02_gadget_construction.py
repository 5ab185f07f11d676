"""Build the gadget graph for a small source graph and inspect its anatomy.

The gadget ties the maximum clique of the source H to the maximum 2-club
of the gadget: a k-clique in H corresponds to a 2-club of size
n^3 + n^2 + (k-1)n + k + 2, where n = |V(H)|.
"""

from collections import Counter

from clubkit import build_graph, reduce, target_size, validate_gadget

# Source: a path on three vertices (so its maximum clique is an edge).
h = build_graph(3, [(0, 1), (1, 2)])
inst = reduce(h)
g, layout = inst.graph, inst.layout
n = inst.n

print("source:", h)
print("gadget:", g)
print("expected sizes:", n**3 + 2 * n**2 + 3, "vertices,",
      h.n_edges + 3 * n**3 + 4 * n**2 + 1, "edges")

# Every gadget vertex has a role; the id scheme is fixed and reproducible.
roles = Counter(layout.role_of(v)[0] for v in range(g.n_vertices))
print("\nrole census:", dict(roles))
print("specials: a =", layout.a, " b =", layout.b, " u =", layout.u)
print("copies of source vertex 1:", list(layout.copies_of(1)))
print("first x1 slot:", layout.x1_ids[0], " first x2 slot:", layout.x2_ids[0])

# The validator recognizes the construction edge by edge.
print("\nvalidate:", validate_gadget(inst))

# The 2-club size thresholds this gadget encodes, one per clique size k.
for k in range(1, n + 1):
    print(f"k={k}: a k-clique in the source <=> a 2-club of size {target_size(n, k)}")

# Hub degrees follow directly from the construction.
print("\ndeg(a) =", len(g.adjacency[layout.a]), "= 1 + n^3 + n^2")
print("deg(b) =", len(g.adjacency[layout.b]), "= 1 + n^3 + n^2")
print("deg(u) =", len(g.adjacency[layout.u]), "= 2 n^2")
