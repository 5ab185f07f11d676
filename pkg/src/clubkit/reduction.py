"""Clique-to-2-club instance transformation.

Given a source graph H on n vertices, `reduce` builds a gadget graph G on
n^3 + 2n^2 + 3 vertices whose maximum 2-club size encodes the maximum
clique size of H: H has a clique of size k exactly when G has a 2-club of
size `target_size(n, k)`.  The vertex classes of G are

  * Original(i)    - the n vertices of H, keeping their ids,
  * Copy(i, j)     - n private copies attached to each Original(i),
  * a, b, u        - three special hub vertices,
  * X1(t)          - n^3 pendant-like vertices seeing only a and b,
  * X2(t)          - n^2 - n vertices seeing b, u and every Original.

`forward_map` turns a clique of H into a 2-club of G of exactly the
target size; `extract_clique` recovers a clique from any large 2-club.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import EmptyGraph, InvalidK, InvalidVertex, NotAClique
from .graph import Graph, build_graph

ROLE_ORIGINAL = "orig"
ROLE_COPY = "copy"
ROLE_A = "a"
ROLE_B = "b"
ROLE_U = "u"
ROLE_X1 = "x1"
ROLE_X2 = "x2"


@dataclass(frozen=True)
class GadgetLayout:
    """Fixed id scheme of the gadget built from a source graph on n vertices.

    Ids are laid out contiguously: Originals 0..n-1, then the n^2 Copies
    (Copy(i, j) at n + i*n + j), then a, b, u, then the n^3 X1 slots, then
    the n^2 - n X2 slots.
    """

    n: int

    @property
    def n_vertices(self) -> int:
        n = self.n
        return n**3 + 2 * n**2 + 3

    @property
    def a(self) -> int:
        return self.n + self.n**2

    @property
    def b(self) -> int:
        return self.a + 1

    @property
    def u(self) -> int:
        return self.a + 2

    def original(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise InvalidVertex(f"no original vertex {i} for n={self.n}")
        return i

    def copy(self, i: int, j: int) -> int:
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise InvalidVertex(f"no copy ({i}, {j}) for n={self.n}")
        return self.n + i * self.n + j

    def x1(self, t: int) -> int:
        if not 0 <= t < self.n**3:
            raise InvalidVertex(f"no x1 slot {t} for n={self.n}")
        return self.a + 3 + t

    def x2(self, t: int) -> int:
        if not 0 <= t < self.n**2 - self.n:
            raise InvalidVertex(f"no x2 slot {t} for n={self.n}")
        return self.a + 3 + self.n**3 + t

    @property
    def originals(self) -> range:
        return range(self.n)

    @property
    def copies(self) -> range:
        return range(self.n, self.n + self.n**2)

    def copies_of(self, i: int) -> range:
        start = self.copy(i, 0)
        return range(start, start + self.n)

    @property
    def x1_ids(self) -> range:
        start = self.a + 3
        return range(start, start + self.n**3)

    @property
    def x2_ids(self) -> range:
        start = self.a + 3 + self.n**3
        return range(start, self.n_vertices)

    def role_of(self, v: int) -> tuple:
        """Structured role of id v, e.g. ('orig', 2) or ('copy', 0, 1)."""
        n = self.n
        if v < 0 or v >= self.n_vertices:
            raise InvalidVertex(f"vertex {v} outside gadget id range")
        if v < n:
            return (ROLE_ORIGINAL, v)
        if v < n + n**2:
            off = v - n
            return (ROLE_COPY, off // n, off % n)
        if v == self.a:
            return (ROLE_A,)
        if v == self.b:
            return (ROLE_B,)
        if v == self.u:
            return (ROLE_U,)
        if v < self.a + 3 + n**3:
            return (ROLE_X1, v - (self.a + 3))
        return (ROLE_X2, v - (self.a + 3 + n**3))

    def role_label(self, v: int) -> str:
        """Sidecar spelling of the role: orig:i, copy:i:j, a, b, u, x1:t, x2:t."""
        return ":".join(str(part) for part in self.role_of(v))


@dataclass(frozen=True)
class ReducedInstance:
    """A gadget graph together with its layout and the source size n."""

    graph: Graph
    layout: GadgetLayout
    n: int


def reduce(h: Graph) -> ReducedInstance:
    """Build the gadget graph for source graph `h`.

    The gadget depends on `h` alone; the clique size k enters only through
    `target_size`, so one gadget serves every k.
    """
    n = h.n_vertices
    if n == 0:
        raise EmptyGraph("cannot reduce an empty source graph")
    layout = GadgetLayout(n)
    a, b, u = layout.a, layout.b, layout.u
    edges: list[tuple[int, int]] = list(h.edges)
    edges.append((a, b))
    for x in layout.x1_ids:
        edges.append((a, x))
        edges.append((b, x))
    for c in layout.copies:
        edges.append((a, c))
        edges.append((u, c))
    for i in layout.originals:
        edges.append((b, i))
        edges.append((u, i))
        for y in layout.x2_ids:
            edges.append((i, y))
        for c in layout.copies_of(i):
            edges.append((i, c))
    for y in layout.x2_ids:
        edges.append((b, y))
        edges.append((u, y))
    return ReducedInstance(graph=build_graph(layout.n_vertices, edges), layout=layout, n=n)


def target_polynomial(n: int, k: int) -> int:
    """The 2-club size threshold n^3 + n^2 + (k-1)n + k + 2, for any integer k."""
    return n**3 + n**2 + (k - 1) * n + k + 2


def target_size(n: int, k: int) -> int:
    """Size of the 2-club that encodes a k-clique of an n-vertex source graph."""
    if n < 1:
        raise EmptyGraph(f"target size needs n >= 1, got n={n}")
    if not 1 <= k <= n:
        raise InvalidK(f"k must be within 1..{n}, got {k}")
    return target_polynomial(n, k)


def forward_map(inst: ReducedInstance, clique: Iterable[int]) -> frozenset[int]:
    """Map a clique of the source graph to a 2-club of the gadget.

    The result is all of X1 and X2, the chosen Originals with every one of
    their Copies, plus a and b; its size is target_size(n, |clique|).
    """
    layout = inst.layout
    chosen = sorted(set(clique))
    if not chosen:
        raise NotAClique("forward_map needs a non-empty clique")
    for v in chosen:
        if not 0 <= v < inst.n:
            raise InvalidVertex(f"{v} is not a vertex of the source graph")
    bits = inst.graph.adjacency_bits
    for idx, v in enumerate(chosen):
        for w in chosen[idx + 1 :]:
            if not bits[v] >> w & 1:
                raise NotAClique(f"vertices {v} and {w} are not adjacent in the source graph")
    members = set(layout.x1_ids)
    members.update(layout.x2_ids)
    members.update(chosen)
    for i in chosen:
        members.update(layout.copies_of(i))
    members.add(layout.a)
    members.add(layout.b)
    return frozenset(members)


def extract_clique(inst: ReducedInstance, vertices: Iterable[int]) -> frozenset[int]:
    """Source-graph vertices whose Original and at least one Copy are present.

    For any 2-club of the gadget with size >= target_size(n, k) this yields
    a clique of size >= k in the source graph.
    """
    layout = inst.layout
    present = set(vertices)
    kept = []
    for i in layout.originals:
        if i in present and any(c in present for c in layout.copies_of(i)):
            kept.append(i)
    return frozenset(kept)


@dataclass(frozen=True)
class GadgetValidation:
    """Outcome of `validate_gadget`: ok, or the first offending pair."""

    ok: bool
    message: str | None = None
    pair: tuple[int, int] | None = None


_KIND_ORDER = {
    ROLE_ORIGINAL: 0,
    ROLE_COPY: 1,
    ROLE_A: 2,
    ROLE_B: 3,
    ROLE_U: 4,
    ROLE_X1: 5,
    ROLE_X2: 6,
}

# Required adjacency between role kinds, keyed in _KIND_ORDER order.  The
# Original-Copy entry holds because Copy(i, j) attaches only to Original(i);
# Original-Original pairs mirror the source graph and are unconstrained.
_REQUIRED_KINDS = {
    (ROLE_ORIGINAL, ROLE_B): True,
    (ROLE_ORIGINAL, ROLE_U): True,
    (ROLE_ORIGINAL, ROLE_X2): True,
    (ROLE_COPY, ROLE_A): True,
    (ROLE_COPY, ROLE_U): True,
    (ROLE_A, ROLE_B): True,
    (ROLE_A, ROLE_X1): True,
    (ROLE_B, ROLE_X1): True,
    (ROLE_B, ROLE_X2): True,
    (ROLE_U, ROLE_X2): True,
}


def _required_edge(role_u: tuple, role_v: tuple) -> bool | None:
    """Whether the gadget definition demands the edge (None: source-defined)."""
    kind_u, kind_v = role_u[0], role_v[0]
    if kind_u == kind_v:
        return None if kind_u == ROLE_ORIGINAL else False
    if _KIND_ORDER[kind_u] > _KIND_ORDER[kind_v]:
        role_u, role_v = role_v, role_u
        kind_u, kind_v = kind_v, kind_u
    if kind_u == ROLE_ORIGINAL and kind_v == ROLE_COPY:
        return role_v[1] == role_u[1]
    return _REQUIRED_KINDS.get((kind_u, kind_v), False)


def validate_gadget(inst: ReducedInstance) -> GadgetValidation:
    """Check the gadget edge set against the construction, pair by pair.

    Acts as an independent recognizer: it classifies every vertex pair by
    role instead of re-running the edge generation, and reports the first
    (lexicographically smallest) offending pair.
    """
    layout = inst.layout
    g = inst.graph
    if g.n_vertices != layout.n_vertices:
        return GadgetValidation(
            ok=False,
            message=f"expected {layout.n_vertices} vertices, found {g.n_vertices}",
        )
    roles = [layout.role_of(v) for v in range(g.n_vertices)]
    bits = g.adjacency_bits
    for v in range(g.n_vertices):
        role_v = roles[v]
        row = bits[v] >> (v + 1)
        for w in range(v + 1, g.n_vertices):
            required = _required_edge(role_v, roles[w])
            if required is None:
                continue
            present = bool(row >> (w - v - 1) & 1)
            if present and not required:
                return GadgetValidation(
                    ok=False,
                    message=f"unexpected edge ({v}, {w}) "
                    f"[{layout.role_label(v)} - {layout.role_label(w)}]",
                    pair=(v, w),
                )
            if required and not present:
                return GadgetValidation(
                    ok=False,
                    message=f"missing edge ({v}, {w}) "
                    f"[{layout.role_label(v)} - {layout.role_label(w)}]",
                    pair=(v, w),
                )
    return GadgetValidation(ok=True)


def format_roles(layout: GadgetLayout) -> str:
    """Sidecar text mapping every gadget id to its role, one line per vertex."""
    return "".join(f"{v} {layout.role_label(v)}\n" for v in range(layout.n_vertices))
