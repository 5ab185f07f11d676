"""Equivalence sweep rows, instance verification, and report assembly."""

import pytest

from clubkit import (
    EquivalenceRow,
    InvalidK,
    TooLarge,
    build_graph,
    edge_mask_of,
    graph_from_edge_mask,
    labeled_graphs,
    oracle_check,
    run_equivalence_sweep,
    target_size,
    verify_instance,
)
from clubkit.harness import build_report, report_json


def test_labeled_graph_enumeration_counts():
    assert sum(1 for _ in labeled_graphs(1)) == 1
    assert sum(1 for _ in labeled_graphs(3)) == 8
    assert sum(1 for _ in labeled_graphs(4)) == 64


def test_edge_mask_round_trip():
    for mask, g in labeled_graphs(4):
        assert edge_mask_of(g) == mask
        assert graph_from_edge_mask(4, mask).edges == g.edges


def test_sweep_n2_brute_rows_are_exact():
    rows = run_equivalence_sweep(2, engine="brute")
    assert rows == [
        EquivalenceRow(0, 2, 1, 1, 15, 15, True, True, True),
        EquivalenceRow(0, 2, 2, 1, 18, 15, False, False, True),
        EquivalenceRow(1, 2, 1, 2, 15, 18, True, True, True),
        EquivalenceRow(1, 2, 2, 2, 18, 18, True, True, True),
    ]


def test_sweep_n3_branching_agrees_and_is_consistent():
    rows = run_equivalence_sweep(3, engine="branching")
    assert len(rows) == 24
    assert all(row.agree for row in rows)
    for row in rows:
        assert row.max_2club == target_size(3, row.omega)
    assert [(row.h_id, row.k) for row in rows] == sorted(
        (row.h_id, row.k) for row in rows
    )


def test_sweep_guards():
    with pytest.raises(TooLarge):
        run_equivalence_sweep(4, engine="branching")
    with pytest.raises(TooLarge):
        run_equivalence_sweep(3, engine="brute")
    with pytest.raises(ValueError):
        run_equivalence_sweep(2, engine="quantum")


def test_sweep_guard_override():
    rows = run_equivalence_sweep(4, k_range=(1, 4), engine="branching", guard_override=True)
    assert len(rows) == 128
    assert all(row.agree for row in rows)


def test_sweep_rejects_out_of_range_k():
    with pytest.raises(InvalidK):
        run_equivalence_sweep(2, k_range=(0, 1), engine="brute")


def test_verify_instance_yes_side():
    report = verify_instance(build_graph(2, [(0, 1)]), 2)
    assert report.omega == 2
    assert report.clique_yes and report.club_yes and report.agree
    assert report.forward_checked and report.forward_ok
    assert report.certificate_ok
    assert report.ok


def test_verify_instance_no_side():
    report = verify_instance(build_graph(2, []), 2)
    assert report.omega == 1
    assert not report.clique_yes and not report.club_yes
    assert report.agree and report.certificate_ok and report.ok


def test_verify_instance_k_below_range():
    report = verify_instance(build_graph(3, [(0, 1)]), 0)
    assert report.clique_yes and report.club_yes and report.agree
    assert report.forward_checked and report.forward_ok
    assert report.ok


def test_verify_instance_k_above_range():
    h = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    report = verify_instance(h, 4)
    assert not report.clique_yes and not report.club_yes and report.agree
    # the extended target is out of reach by construction
    assert report.target > 48
    assert report.ok


def test_verify_instance_guard():
    with pytest.raises(TooLarge):
        verify_instance(build_graph(5, []), 1)


def test_oracle_check_small_run():
    report = oracle_check(seed=5, count=4, min_n=6, max_n=9)
    assert report.ok
    assert report.graphs_checked == 4
    assert report.solves == 4 * 8
    assert report.mismatches == ()


def test_report_shape_and_determinism():
    rows = run_equivalence_sweep(2, engine="brute")
    report = build_report("sweep", rows=rows, certificates=[{3, 1}], nodes_explored=7)
    assert set(report) == {"command", "rows", "certificates", "stats"}
    assert report["certificates"] == [[1, 3]]
    assert report["rows"][0]["h_id"] == 0
    assert set(report["stats"]) == {"nodes_explored", "elapsed_ms"}
    assert report_json(report) == report_json(
        build_report("sweep", rows=rows, certificates=[{3, 1}], nodes_explored=7)
    )
