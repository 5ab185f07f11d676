"""Experiment driver: equivalence sweeps, instance verification, reports.

A sweep enumerates every labeled source graph on n vertices (encoded as an
edge bitmask), builds the gadget once per graph, solves both sides exactly
and emits one row per (graph, k).  Each row must agree: the source graph
has a clique of size k exactly when the gadget has a 2-club of the target
size.
"""

from __future__ import annotations

import dataclasses
import json
import random
import time
from dataclasses import dataclass
from itertools import combinations

from .cluster import verify_deletion
from .errors import TooLarge
from .graph import Graph, build_graph, is_s_club
from .reduction import forward_map, reduce, target_polynomial, target_size
from .solvers import (
    _decide_s_club,
    brute_force_max_clique,
    brute_force_max_s_club,
    max_clique,
    max_s_club,
)

ENGINE_BRANCHING = "branching"
ENGINE_BRUTE = "brute"

#: Default per-engine caps on the source size n for sweeps.  Brute force
#: enumerates subsets of the whole gadget, so its cap is lower.
SWEEP_GUARDS = {ENGINE_BRANCHING: 3, ENGINE_BRUTE: 2}

#: Default cap on n for `verify_instance`; the no side of its decision
#: solve degrades quickly beyond desk scale.
VERIFY_GUARD = 4


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    """Unordered vertex pairs of an n-vertex graph, in bitmask bit order."""
    return list(combinations(range(n), 2))


def edge_mask_of(g: Graph) -> int:
    """Canonical edge-bitmask encoding of a labeled graph."""
    index = {pair: i for i, pair in enumerate(vertex_pairs(g.n_vertices))}
    mask = 0
    for edge in g.edges:
        mask |= 1 << index[edge]
    return mask


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Inverse of `edge_mask_of` for n-vertex graphs."""
    pairs = vertex_pairs(n)
    return build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def labeled_graphs(n: int):
    """Yield (edge mask, graph) for every labeled graph on n vertices."""
    pairs = vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        yield mask, build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@dataclass(frozen=True)
class EquivalenceRow:
    """One sweep entry: both decision answers for a (source graph, k) pair."""

    h_id: int
    n: int
    k: int
    omega: int
    target: int
    max_2club: int
    clique_yes: bool
    club_yes: bool
    agree: bool


def _sweep_guard(n: int, engine: str, guard_override: bool) -> None:
    if engine not in SWEEP_GUARDS:
        raise ValueError(f"unknown engine {engine!r}")
    limit = SWEEP_GUARDS[engine]
    if n > limit and not guard_override:
        raise TooLarge(
            f"sweep with the {engine} engine is limited to n <= {limit} "
            f"(got n={n}); pass guard_override to proceed anyway"
        )


def _sweep_solutions(n: int, engine: str):
    """Yield (h_id, graph, clique result, 2-club result) per labeled graph."""
    for h_id, h in labeled_graphs(n):
        omega_result = max_clique(h)
        gadget = reduce(h).graph
        if engine == ENGINE_BRUTE:
            club_result = brute_force_max_s_club(gadget, 2)
        else:
            club_result = max_s_club(gadget, 2)
        yield h_id, h, omega_result, club_result


def _rows_for(
    h_id: int, n: int, k_range, omega: int, max_2club: int
) -> list[EquivalenceRow]:
    rows = []
    for k in k_range:
        target = target_size(n, k)
        clique_yes = omega >= k
        club_yes = max_2club >= target
        rows.append(
            EquivalenceRow(
                h_id=h_id,
                n=n,
                k=k,
                omega=omega,
                target=target,
                max_2club=max_2club,
                clique_yes=clique_yes,
                club_yes=club_yes,
                agree=clique_yes == club_yes,
            )
        )
    return rows


def run_equivalence_sweep(
    n: int,
    k_range=None,
    engine: str = ENGINE_BRANCHING,
    guard_override: bool = False,
) -> list[EquivalenceRow]:
    """Solve both sides for every labeled n-vertex source graph.

    Returns rows sorted by (h_id, k).  The gadget is solved once per source
    graph and shared across the k values.
    """
    _sweep_guard(n, engine, guard_override)
    ks = list(k_range) if k_range is not None else list(range(1, n + 1))
    rows: list[EquivalenceRow] = []
    for h_id, _h, omega_result, club_result in _sweep_solutions(n, engine):
        rows.extend(
            _rows_for(h_id, n, ks, omega_result.best_size, club_result.best_size)
        )
    return rows


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of the three checks run on a single (H, k) instance."""

    n: int
    k: int
    omega: int
    target: int
    clique_yes: bool
    club_yes: bool
    agree: bool
    forward_checked: bool
    forward_ok: bool
    certificate: tuple[int, int]
    certificate_ok: bool
    nodes_explored: int

    @property
    def ok(self) -> bool:
        return self.agree and self.certificate_ok and (self.forward_ok or not self.forward_checked)


def verify_instance(h: Graph, k: int, guard_override: bool = False) -> VerifyReport:
    """Machine-check the clique/2-club correspondence for one instance.

    Runs the constructive direction (clique -> 2-club witness), the
    deletion certificate {a, b}, and an independent decision solve on the
    gadget, then compares the two decision answers.  k outside 1..n is
    settled without solving: k <= 0 is trivially yes on both sides, k > n
    trivially no (the target then exceeds the gadget order).
    """
    n = h.n_vertices
    if n > VERIFY_GUARD and not guard_override:
        raise TooLarge(
            f"verify is exhaustive at heart and limited to n <= {VERIFY_GUARD} "
            f"(got n={n}); pass guard_override to proceed anyway"
        )
    inst = reduce(h)
    gadget = inst.graph
    layout = inst.layout
    omega_result = max_clique(h)
    omega = omega_result.best_size
    target = target_polynomial(n, k)
    nodes = omega_result.nodes_explored

    if k <= 0:
        clique_yes = club_yes = True
    elif k > n:
        clique_yes = club_yes = False
    else:
        clique_yes = omega >= k
        club_yes, decide_nodes = _decide_s_club(gadget, 2, target)
        nodes += decide_nodes

    forward_checked = False
    forward_ok = False
    witness_size = max(k, 1)
    if omega >= witness_size:
        forward_checked = True
        chosen = sorted(omega_result.best_set)[:witness_size]
        witness = forward_map(inst, chosen)
        forward_ok = len(witness) == target_size(n, witness_size) and is_s_club(
            gadget, witness, 2
        )

    certificate = (layout.a, layout.b)
    certificate_ok = verify_deletion(gadget, certificate, 2)
    return VerifyReport(
        n=n,
        k=k,
        omega=omega,
        target=target,
        clique_yes=clique_yes,
        club_yes=club_yes,
        agree=clique_yes == club_yes,
        forward_checked=forward_checked,
        forward_ok=forward_ok,
        certificate=certificate,
        certificate_ok=certificate_ok,
        nodes_explored=nodes,
    )


@dataclass(frozen=True)
class OracleMismatch:
    """A disagreement between an optimized solver and its brute-force twin."""

    seed_index: int
    n: int
    edges: tuple[tuple[int, int], ...]
    s: int
    branching: int
    brute: int


@dataclass(frozen=True)
class OracleCheckReport:
    graphs_checked: int
    solves: int
    mismatches: tuple[OracleMismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def oracle_check(
    seed: int = 0,
    count: int = 20,
    min_n: int = 8,
    max_n: int = 16,
    s_values: tuple[int, ...] = (1, 2, 3),
) -> OracleCheckReport:
    """Cross-validate the branching solvers against brute force on random graphs."""
    rng = random.Random(seed)
    mismatches: list[OracleMismatch] = []
    solves = 0
    for index in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.choice((0.2, 0.35, 0.5, 0.65, 0.8))
        edges = [pair for pair in combinations(range(n), 2) if rng.random() < p]
        g = build_graph(n, edges)
        clique_size = max_clique(g).best_size
        brute_clique = brute_force_max_clique(g).best_size
        solves += 2
        if clique_size != brute_clique:
            mismatches.append(
                OracleMismatch(index, n, g.edges, 0, clique_size, brute_clique)
            )
        for s in s_values:
            fast = max_s_club(g, s).best_size
            slow = brute_force_max_s_club(g, s).best_size
            solves += 2
            if fast != slow:
                mismatches.append(OracleMismatch(index, n, g.edges, s, fast, slow))
            if s == 1 and fast != clique_size:
                mismatches.append(OracleMismatch(index, n, g.edges, 1, fast, clique_size))
    return OracleCheckReport(
        graphs_checked=count, solves=solves, mismatches=tuple(mismatches)
    )


def build_report(
    command: str,
    rows=(),
    certificates=(),
    nodes_explored: int = 0,
    elapsed_ms: float = 0.0,
) -> dict:
    """Assemble the machine-readable report emitted by the command line."""
    return {
        "command": command,
        "rows": [dataclasses.asdict(row) for row in rows],
        "certificates": [sorted(cert) for cert in certificates],
        "stats": {
            "nodes_explored": nodes_explored,
            "elapsed_ms": round(elapsed_ms, 3),
        },
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


class _Stopwatch:
    """Wall-clock helper for report stats."""

    def __init__(self) -> None:
        self.started = time.perf_counter()

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.started) * 1000.0


def sweep_with_stats(
    n: int,
    k_range=None,
    engine: str = ENGINE_BRANCHING,
    guard_override: bool = False,
) -> tuple[list[EquivalenceRow], int, float]:
    """Like `run_equivalence_sweep` but also returns solver node and time totals."""
    _sweep_guard(n, engine, guard_override)
    ks = list(k_range) if k_range is not None else list(range(1, n + 1))
    watch = _Stopwatch()
    rows: list[EquivalenceRow] = []
    nodes = 0
    for h_id, _h, omega_result, club_result in _sweep_solutions(n, engine):
        nodes += omega_result.nodes_explored + club_result.nodes_explored
        rows.extend(
            _rows_for(h_id, n, ks, omega_result.best_size, club_result.best_size)
        )
    return rows, nodes, watch.elapsed_ms()
