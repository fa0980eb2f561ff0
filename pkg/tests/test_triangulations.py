import pytest

from oracles import catalan, cycle_triangulations_bruteforce
from phylosandwich.triangulations import (
    CycleTooLongError,
    count_proper_triangulations,
    cycle_has_proper_triangulation,
    triangulations_of_cycle,
)


def test_triangle():
    assert triangulations_of_cycle(3) == [frozenset()]


@pytest.mark.parametrize("k, expected", [(4, 2), (5, 5), (6, 14)])
def test_small_counts(k, expected):
    assert len(triangulations_of_cycle(k)) == expected


@pytest.mark.parametrize("k", range(3, 9))
def test_matches_bruteforce_chord_subsets(k):
    assert set(triangulations_of_cycle(k)) == set(cycle_triangulations_bruteforce(k))


@pytest.mark.parametrize("k", range(3, 13))
def test_catalan_counts(k):
    tris = triangulations_of_cycle(k)
    assert len(tris) == len(set(tris)) == catalan(k - 2)
    assert all(len(t) == k - 3 for t in tris)


def test_budget():
    with pytest.raises(CycleTooLongError):
        triangulations_of_cycle(13)
    with pytest.raises(ValueError):
        triangulations_of_cycle(2)


def test_forbidden_four_cycle():
    cycle = ["b0", "c0", "b2", "c1"]
    assert cycle_has_proper_triangulation(cycle, {("b0", "b2"), ("c0", "c1")}) == 0
    assert cycle_has_proper_triangulation(cycle, set()) == 2


def test_fig6_cycle_has_one_completion():
    cycle = ["a0", "b0", "a1", "c0", "b1"]
    assert count_proper_triangulations(cycle, {("a0", "a1"), ("b1", "b0")}) == 1


@pytest.mark.parametrize("k", range(4, 9))
def test_count_agrees_with_enumeration(k):
    import random

    rng = random.Random(k)
    chords = [(i, j) for i in range(k) for j in range(i + 2, k) if not (i == 0 and j == k - 1)]
    tris = triangulations_of_cycle(k)
    for _ in range(20):
        bad = {c for c in chords if rng.random() < 0.3}
        expected = sum(1 for t in tris if not t & bad)
        assert count_proper_triangulations(list(range(k)), bad) == expected
