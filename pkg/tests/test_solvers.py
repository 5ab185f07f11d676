"""Branching solvers against their brute-force oracles."""

import random
from itertools import combinations

import pytest

from clubkit import (
    EmptyGraph,
    TooLarge,
    build_graph,
    brute_force_max_clique,
    brute_force_max_s_club,
    has_s_club_of_size,
    is_s_club,
    labeled_graphs,
    max_clique,
    max_s_club,
    reduce,
)


def complete(n):
    return build_graph(n, list(combinations(range(n), 2)))


def path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


PETERSEN = build_graph(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 7), (7, 9), (5, 8), (6, 8), (6, 9),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
)


def random_corpus(count, min_n=8, max_n=16, seed=20240414):
    rng = random.Random(seed)
    probs = (0.15, 0.3, 0.5, 0.7, 0.85)
    for idx in range(count):
        n = rng.randint(min_n, max_n)
        p = probs[idx % len(probs)]
        yield build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def test_max_clique_examples():
    assert max_clique(complete(4)).best_size == 4
    assert max_clique(cycle(5)).best_size == 2
    assert max_clique(PETERSEN).best_size == 2
    assert brute_force_max_clique(PETERSEN).best_size == 2


def test_max_clique_returns_a_clique():
    result = max_clique(PETERSEN)
    assert len(result.best_set) == result.best_size
    assert all(
        PETERSEN.has_edge(u, v) for u, v in combinations(sorted(result.best_set), 2)
    )


def test_max_s_club_examples():
    star = build_graph(6, [(0, i) for i in range(1, 6)])
    assert max_s_club(star, 2).best_size == 6
    assert max_s_club(path(4), 2).best_size == 3
    assert brute_force_max_s_club(path(4), 2).best_size == 3


def test_brute_force_club_examples():
    assert brute_force_max_s_club(cycle(5), 2).best_size == 5
    two_triangles = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert brute_force_max_s_club(two_triangles, 2).best_size == 3


def test_gadget_of_an_edge_has_a_2club_of_18():
    gadget = reduce(build_graph(2, [(0, 1)])).graph
    assert brute_force_max_s_club(gadget, 2).best_size == 18
    assert max_s_club(gadget, 2).best_size == 18


def test_solvers_reject_empty_graph():
    empty = build_graph(0, [])
    with pytest.raises(EmptyGraph):
        max_clique(empty)
    with pytest.raises(EmptyGraph):
        max_s_club(empty, 2)
    with pytest.raises(EmptyGraph):
        brute_force_max_clique(empty)
    with pytest.raises(EmptyGraph):
        brute_force_max_s_club(empty, 2)


def test_brute_force_guard():
    big = build_graph(23, [])
    with pytest.raises(TooLarge):
        brute_force_max_clique(big)
    with pytest.raises(TooLarge):
        brute_force_max_s_club(big, 2)


def test_has_s_club_of_size_examples():
    g = path(4)
    assert has_s_club_of_size(g, 2, 0)
    assert has_s_club_of_size(g, 2, 1)
    assert has_s_club_of_size(g, 2, 3)
    assert not has_s_club_of_size(g, 2, 4)


def test_has_s_club_of_size_on_empty_graph():
    empty = build_graph(0, [])
    assert has_s_club_of_size(empty, 2, 0)
    assert not has_s_club_of_size(empty, 2, 1)


def test_decision_agrees_with_optimum():
    for g in random_corpus(30, min_n=5, max_n=9, seed=7):
        for s in (1, 2):
            best = max_s_club(g, s).best_size
            assert has_s_club_of_size(g, s, best)
            assert not has_s_club_of_size(g, s, best + 1)


def test_oracle_equivalence_exhaustive_up_to_n4():
    for n in range(1, 5):
        for _, g in labeled_graphs(n):
            clique_size = max_clique(g).best_size
            assert clique_size == brute_force_max_clique(g).best_size
            for s in (1, 2, 3):
                fast = max_s_club(g, s)
                slow = brute_force_max_s_club(g, s)
                assert fast.best_size == slow.best_size
                assert is_s_club(g, fast.best_set, s)
            assert max_s_club(g, 1).best_size == clique_size


def test_oracle_equivalence_random_corpus():
    # 500 seeded graphs on 8..16 vertices, mixed densities.
    for g in random_corpus(500):
        clique_size = max_clique(g).best_size
        assert clique_size == brute_force_max_clique(g).best_size
        for s in (1, 2, 3):
            assert max_s_club(g, s).best_size == brute_force_max_s_club(g, s).best_size
        assert max_s_club(g, 1).best_size == clique_size


def test_best_size_monotone_in_s():
    for g in random_corpus(40, min_n=6, max_n=12, seed=31):
        sizes = [max_s_club(g, s).best_size for s in (1, 2, 3, 4)]
        assert sizes == sorted(sizes)


def test_solver_determinism():
    for g in random_corpus(20, min_n=6, max_n=12, seed=47):
        first = max_s_club(g, 2)
        second = max_s_club(g, 2)
        assert first.best_size == second.best_size
        assert first.best_set == second.best_set
        assert max_clique(g).best_set == max_clique(g).best_set


def test_returned_sets_are_valid():
    for g in random_corpus(25, min_n=6, max_n=12, seed=53):
        for s in (1, 2, 3):
            result = max_s_club(g, s)
            assert is_s_club(g, result.best_set, s)
            assert result.best_size == len(result.best_set)
            assert result.best_size >= 1
        clique = max_clique(g)
        assert all(
            g.has_edge(u, v) for u, v in combinations(sorted(clique.best_set), 2)
        )


def test_solve_result_statistics_populated():
    result = max_s_club(cycle(6), 2)
    assert result.nodes_explored >= 1
    assert result.elapsed >= 0.0
