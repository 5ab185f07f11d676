"""Undirected simple graphs on dense integer ids.

Vertices are 0..n_vertices-1.  Adjacency is kept both as per-vertex
frozensets (convenient iteration) and as per-vertex int bitmasks, so the
solvers can do neighborhood unions and intersections in O(n/word) time.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import EmptyGraph, InvalidEdge, InvalidVertex

#: Distance value for vertex pairs with no connecting path.  Compares
#: greater than every finite (integer) distance.
UNREACHABLE = float("inf")


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.  Build via :func:`build_graph`."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...]
    adjacency_bits: tuple[int, ...]

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency_bits[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n_vertices={self.n_vertices}, n_edges={self.n_edges})"


def build_graph(n_vertices: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Construct a graph, deduplicating edges and symmetrizing adjacency.

    Raises InvalidVertex for endpoint ids outside 0..n_vertices-1 and
    InvalidEdge for self-loops.
    """
    if n_vertices < 0:
        raise InvalidVertex(f"vertex count must be non-negative, got {n_vertices}")
    normalized = set()
    for u, v in edge_list:
        if not (0 <= u < n_vertices) or not (0 <= v < n_vertices):
            raise InvalidVertex(f"edge ({u}, {v}) outside id range 0..{n_vertices - 1}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        normalized.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(normalized))
    neighbor_sets: list[set[int]] = [set() for _ in range(n_vertices)]
    bits = [0] * n_vertices
    for u, v in edges:
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    return Graph(
        n_vertices=n_vertices,
        edges=edges,
        adjacency=tuple(frozenset(s) for s in neighbor_sets),
        adjacency_bits=tuple(bits),
    )


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n_vertices):
        raise InvalidVertex(f"vertex {v} outside id range 0..{g.n_vertices - 1}")


def _mask_of(g: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        _check_vertex(g, v)
        mask |= 1 << v
    return mask


def _bits_to_ids(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _neighborhood_union(bits: tuple[int, ...], mask: int) -> int:
    """Union of the neighborhoods of all vertices in `mask`."""
    out = 0
    while mask:
        low = mask & -mask
        out |= bits[low.bit_length() - 1]
        mask ^= low
    return out


def _ball(bits: tuple[int, ...], v: int, radius: int, mask: int) -> int:
    """Vertices of `mask` within `radius` induced hops of v (v included)."""
    reach = 1 << v & mask
    frontier = reach
    for _ in range(radius):
        if not frontier:
            break
        grown = _neighborhood_union(bits, frontier) & mask & ~reach
        if not grown:
            break
        reach |= grown
        frontier = grown
    return reach


def _eccentricity(bits: tuple[int, ...], v: int, mask: int) -> tuple[int, int]:
    """(eccentricity, reachable set) of v inside the induced subgraph `mask`.

    The eccentricity covers only the reachable part; callers compare the
    reach against `mask` to detect disconnection.
    """
    reach = 1 << v & mask
    frontier = reach
    ecc = 0
    while frontier:
        grown = _neighborhood_union(bits, frontier) & mask & ~reach
        if not grown:
            break
        reach |= grown
        frontier = grown
        ecc += 1
    return ecc, reach


def _is_s_club_mask(bits: tuple[int, ...], mask: int, s: int) -> bool:
    """True iff the induced subgraph on `mask` has diameter at most s."""
    if mask.bit_count() <= 1:
        return True
    rem = mask
    while rem:
        low = rem & -rem
        v = low.bit_length() - 1
        if _ball(bits, v, s, mask) != mask:
            return False
        rem ^= low
    return True


def _components_within(bits: tuple[int, ...], mask: int) -> list[int]:
    """Connected components of the induced subgraph, as masks, by lowest id."""
    comps = []
    rem = mask
    while rem:
        v = (rem & -rem).bit_length() - 1
        _, reach = _eccentricity(bits, v, mask)
        comps.append(reach)
        rem &= ~reach
    return comps


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Shortest-path lengths from `source`; UNREACHABLE where no path exists."""
    _check_vertex(g, source)
    dist: list[int | float] = [UNREACHABLE] * g.n_vertices
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        d = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = d
                queue.append(w)
    return dist


def diameter(g: Graph) -> int | float:
    """Longest shortest path; UNREACHABLE iff the graph is disconnected."""
    if g.n_vertices == 0:
        raise EmptyGraph("diameter is undefined on the empty graph")
    bits = g.adjacency_bits
    full = (1 << g.n_vertices) - 1
    worst = 0
    for v in range(g.n_vertices):
        ecc, reach = _eccentricity(bits, v, full)
        if reach != full:
            return UNREACHABLE
        if ecc > worst:
            worst = ecc
    return worst


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by `vertices`, plus the old-id -> new-id mapping.

    New ids follow the ascending order of the old ids.
    """
    chosen = sorted(set(vertices))
    for v in chosen:
        _check_vertex(g, v)
    remap = {old: new for new, old in enumerate(chosen)}
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges
        if u in remap and v in remap
    ]
    return build_graph(len(chosen), edges), remap


def is_s_club(g: Graph, vertices: Iterable[int], s: int) -> bool:
    """True iff the subgraph induced by `vertices` has diameter at most s.

    Sets with at most one vertex qualify by convention; a disconnected
    induced subgraph never does.
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    mask = _mask_of(g, vertices)
    return _is_s_club_mask(g.adjacency_bits, mask, s)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Partition of the vertex ids into maximal connected sets.

    Components are ordered by their smallest contained id.
    """
    full = (1 << g.n_vertices) - 1
    return [
        frozenset(_bits_to_ids(comp))
        for comp in _components_within(g.adjacency_bits, full)
    ]
