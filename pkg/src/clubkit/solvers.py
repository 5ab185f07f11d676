"""Exact maximum-clique and maximum-s-club solvers, plus brute-force oracles.

The clique solver is a branch-and-bound over bitmask candidate sets with a
greedy-coloring upper bound.  The s-club solver branches on conflict
pairs: whenever the candidate set contains two vertices at induced
distance greater than s, any s-club inside the candidate must drop one of
them, so the search excludes each endpoint in turn.  The brute-force
twins enumerate subsets exhaustively and exist only to cross-check the
optimized solvers at desk scale.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .errors import EmptyGraph, TooLarge
from .graph import Graph, _ball, _bits_to_ids, _is_s_club_mask

#: Largest vertex count accepted by the brute-force oracles.
BRUTE_FORCE_LIMIT = 22


@dataclass(frozen=True)
class SolveResult:
    """An optimal vertex set with its size and basic search statistics."""

    best_set: frozenset[int]
    best_size: int
    nodes_explored: int
    elapsed: float


def _result(mask: int, nodes: int, started: float) -> SolveResult:
    ids = _bits_to_ids(mask)
    return SolveResult(
        best_set=frozenset(ids),
        best_size=len(ids),
        nodes_explored=nodes,
        elapsed=time.perf_counter() - started,
    )


def max_clique(g: Graph) -> SolveResult:
    """Maximum clique via branch and bound with a greedy-coloring bound."""
    if g.n_vertices == 0:
        raise EmptyGraph("max_clique needs at least one vertex")
    started = time.perf_counter()
    bits = g.adjacency_bits
    best = 0
    best_mask = 0
    nodes = 0

    def order_by_color(sub: int) -> list[tuple[int, int]]:
        # Greedy coloring; a vertex in color class c caps any clique
        # through it and the earlier classes at c.
        out = []
        rem = sub
        bound = 0
        while rem:
            bound += 1
            avail = rem
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                out.append((v, bound))
                avail &= ~bits[v]
                avail ^= low
                rem ^= low
        return out

    def expand(sub: int, size: int, mask: int) -> None:
        nonlocal best, best_mask, nodes
        nodes += 1
        for v, bound in reversed(order_by_color(sub)):
            if size + bound <= best:
                return
            vbit = 1 << v
            nxt = sub & bits[v]
            if nxt:
                expand(nxt, size + 1, mask | vbit)
            elif size + 1 > best:
                best = size + 1
                best_mask = mask | vbit
            sub ^= vbit

    expand((1 << g.n_vertices) - 1, 0, 0)
    result = _result(best_mask, nodes, started)
    assert _is_clique_mask(bits, best_mask), "solver returned a non-clique"
    return result


def _is_clique_mask(bits: tuple[int, ...], mask: int) -> bool:
    rem = mask
    while rem:
        low = rem & -rem
        rem ^= low
        if rem & ~bits[low.bit_length() - 1] & mask & ~low:
            return False
    return True


def _first_far_pair(bits: tuple[int, ...], cand: int, s: int) -> tuple[int, int] | None:
    """Lexicographically first pair at induced distance > s, or None."""
    rem = cand
    while rem:
        low = rem & -rem
        v = low.bit_length() - 1
        far = cand & ~_ball(bits, v, s, cand)
        if far:
            return v, (far & -far).bit_length() - 1
        rem ^= low
    return None


def _greedy_club_seed(bits: tuple[int, ...], n: int, s: int) -> int:
    """Largest half-radius ball; always an s-club, used as the initial bound."""
    full = (1 << n) - 1
    radius = s // 2
    best_mask = 0
    best = 0
    for v in range(n):
        ball = _ball(bits, v, radius, full)
        size = ball.bit_count()
        if size > best:
            best = size
            best_mask = ball
    return best_mask


def _root_upper_bound(bits: tuple[int, ...], n: int, s: int) -> int:
    """Any s-club lies inside the radius-s ball of each of its members."""
    full = (1 << n) - 1
    return max(_ball(bits, v, s, full).bit_count() for v in range(n))


def max_s_club(g: Graph, s: int) -> SolveResult:
    """Maximum s-club via conflict-pair branching.

    Branching excludes, in turn, each endpoint of the lexicographically
    first vertex pair whose induced distance exceeds s; a branch is pruned
    once its candidate set cannot beat the incumbent.
    """
    if g.n_vertices == 0:
        raise EmptyGraph("max_s_club needs at least one vertex")
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    started = time.perf_counter()
    bits = g.adjacency_bits
    n = g.n_vertices
    best_mask = _greedy_club_seed(bits, n, s)
    best = best_mask.bit_count()
    nodes = 0
    if _root_upper_bound(bits, n, s) > best:
        stack = [(1 << n) - 1]
        while stack:
            cand = stack.pop()
            nodes += 1
            if cand.bit_count() <= best:
                continue
            pair = _first_far_pair(bits, cand, s)
            if pair is None:
                best = cand.bit_count()
                best_mask = cand
                continue
            v, w = pair
            stack.append(cand & ~(1 << w))
            stack.append(cand & ~(1 << v))
    result = _result(best_mask, nodes, started)
    assert _is_s_club_mask(bits, best_mask, s), "solver returned a non-club"
    return result


def _decide_s_club(g: Graph, s: int, t: int) -> tuple[bool, int]:
    """Decision-mode search with early exit; returns (answer, nodes explored)."""
    if t <= 0:
        return True, 0
    n = g.n_vertices
    if t > n:
        return False, 0
    if t == 1:
        return True, 0
    bits = g.adjacency_bits
    if _greedy_club_seed(bits, n, s).bit_count() >= t:
        return True, 0
    if _root_upper_bound(bits, n, s) < t:
        return False, 0
    nodes = 0
    stack = [(1 << n) - 1]
    while stack:
        cand = stack.pop()
        nodes += 1
        if cand.bit_count() < t:
            continue
        pair = _first_far_pair(bits, cand, s)
        if pair is None:
            return True, nodes
        v, w = pair
        stack.append(cand & ~(1 << w))
        stack.append(cand & ~(1 << v))
    return False, nodes


def has_s_club_of_size(g: Graph, s: int, t: int) -> bool:
    """True iff the graph has an s-club with at least t vertices.

    Stops at the first witness, which makes the yes side much cheaper than
    a full optimization.
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    answer, _ = _decide_s_club(g, s, t)
    return answer


def _check_brute_size(g: Graph, what: str) -> None:
    if g.n_vertices == 0:
        raise EmptyGraph(f"{what} needs at least one vertex")
    if g.n_vertices > BRUTE_FORCE_LIMIT:
        raise TooLarge(
            f"{what} is exhaustive and limited to {BRUTE_FORCE_LIMIT} vertices, "
            f"got {g.n_vertices}"
        )


def brute_force_max_clique(g: Graph) -> SolveResult:
    """Provably optimal clique by dynamic programming over all vertex subsets."""
    _check_brute_size(g, "brute_force_max_clique")
    started = time.perf_counter()
    bits = g.adjacency_bits
    n = g.n_vertices
    total = 1 << n
    is_clique = bytearray(total)
    is_clique[0] = 1
    best = 0
    best_mask = 0
    for mask in range(1, total):
        low = mask & -mask
        rest = mask ^ low
        if is_clique[rest] and bits[low.bit_length() - 1] & rest == rest:
            is_clique[mask] = 1
            size = mask.bit_count()
            if size > best:
                best = size
                best_mask = mask
    return _result(best_mask, total - 1, started)


def brute_force_max_s_club(g: Graph, s: int) -> SolveResult:
    """Provably optimal s-club by exhaustive subset scan, largest sizes first.

    All subsets of every size above the answer are checked, so the first
    hit is a maximum s-club.
    """
    _check_brute_size(g, "brute_force_max_s_club")
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    started = time.perf_counter()
    bits = g.adjacency_bits
    n = g.n_vertices
    checked = 0
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            checked += 1
            if _is_s_club_mask(bits, mask, s):
                return SolveResult(
                    best_set=frozenset(combo),
                    best_size=size,
                    nodes_explored=checked,
                    elapsed=time.perf_counter() - started,
                )
    raise AssertionError("unreachable: singletons are always s-clubs")
