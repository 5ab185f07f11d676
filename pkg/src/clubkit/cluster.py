"""Recognition of s-club cluster graphs and vertex-deletion distance to them.

A graph is an s-club cluster graph when every connected component has
diameter at most s.  `min_deletion_to_s_club_cluster` searches deletion
sets of growing size (lexicographically within each size) and returns the
canonical smallest certificate, if one exists within the budget.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .errors import TooLarge
from .graph import Graph, _components_within, _is_s_club_mask, _mask_of

#: Largest deletion budget accepted by the exhaustive search.
DELETION_BUDGET_LIMIT = 4


@dataclass(frozen=True)
class DeletionCertificate:
    """A vertex set whose removal leaves an s-club cluster graph."""

    deleted: frozenset[int]
    class_s: int


def _is_cluster_mask(bits: tuple[int, ...], mask: int, s: int) -> bool:
    return all(
        _is_s_club_mask(bits, comp, s) for comp in _components_within(bits, mask)
    )


def is_s_club_cluster(g: Graph, s: int) -> bool:
    """True iff every connected component has diameter at most s."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    full = (1 << g.n_vertices) - 1
    return _is_cluster_mask(g.adjacency_bits, full, s)


def verify_deletion(g: Graph, deleted: Iterable[int], s: int) -> bool:
    """True iff removing `deleted` leaves an s-club cluster graph."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    removed = _mask_of(g, deleted)
    full = (1 << g.n_vertices) - 1
    return _is_cluster_mask(g.adjacency_bits, full & ~removed, s)


def _min_deletion_search(
    g: Graph, s: int, d_max: int
) -> tuple[DeletionCertificate | None, int]:
    """Exhaustive search; returns (certificate or None, candidates evaluated)."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    if d_max < 0:
        raise ValueError(f"d_max must be non-negative, got {d_max}")
    if d_max > DELETION_BUDGET_LIMIT:
        raise TooLarge(
            f"deletion search is exhaustive and limited to d_max <= "
            f"{DELETION_BUDGET_LIMIT}, got {d_max}"
        )
    bits = g.adjacency_bits
    n = g.n_vertices
    full = (1 << n) - 1
    if _is_cluster_mask(bits, full, s):
        return DeletionCertificate(deleted=frozenset(), class_s=s), 1
    # Deletions outside a component cannot change it, so every component
    # already violating the diameter bound must lose at least one vertex.
    violating = [
        comp
        for comp in _components_within(bits, full)
        if not _is_s_club_mask(bits, comp, s)
    ]
    checked = 1
    for size in range(max(1, len(violating)), d_max + 1):
        for combo in combinations(range(n), size):
            dmask = 0
            for v in combo:
                dmask |= 1 << v
            if any(not comp & dmask for comp in violating):
                continue
            checked += 1
            if _is_cluster_mask(bits, full & ~dmask, s):
                return DeletionCertificate(deleted=frozenset(combo), class_s=s), checked
    return None, checked


def min_deletion_to_s_club_cluster(
    g: Graph, s: int, d_max: int
) -> DeletionCertificate | None:
    """Smallest deletion set (then lexicographically first) within the budget.

    Returns None when no deletion set of size at most d_max works.  The
    search is exhaustive; d_max is capped at DELETION_BUDGET_LIMIT.
    """
    certificate, _ = _min_deletion_search(g, s, d_max)
    return certificate
