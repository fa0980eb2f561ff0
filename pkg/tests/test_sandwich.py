import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from phylosandwich.experiments import random_instance
from phylosandwich.graphs import chordless_cycles, is_chordal
from phylosandwich.intersection import build_instance
from phylosandwich.sandwich import (
    SandwichInstance,
    closure,
    find_f_path,
    find_g_cycle,
    norm,
    verify_closure_properties,
)
from phylosandwich.triangulations import count_proper_triangulations


def named(inst, *names):
    return [inst.index(n) for n in names]


def test_fig6_f_path(fig6):
    a1, b1, b0, a0 = named(fig6, "a1", "b1", "b0", "a0")
    assert find_f_path(fig6, a1, b1) == [a1, b0, a0, b1]


def test_f_path_needs_conflicts():
    inst = SandwichInstance(4, frozenset({(0, 1), (1, 2), (2, 3)}), frozenset())
    assert find_f_path(inst, 0, 3) is None
    with pytest.raises(ValueError):
        find_f_path(inst, 0, 1)


def test_fig6_g_cycle_after_forbidding(fig6):
    inst = fig6.with_pairs(conflicts=[fig6.pair("a1", "b1")])
    b1, a0, c0, a1, b0 = named(inst, "b1", "a0", "c0", "a1", "b0")
    w, cycle = find_g_cycle(inst, b1, a0)
    assert w == c0
    assert cycle == [b1, c0, a1, b0, a0]
    with pytest.raises(ValueError):
        find_g_cycle(inst, a1, b1)


def test_g_cycle_none_in_triangle():
    inst = SandwichInstance(3, frozenset({(0, 1), (1, 2), (0, 2)}), frozenset())
    assert find_g_cycle(inst, 0, 1) is None


def _random(seed, n_max=9):
    rng = random.Random(seed)
    n = rng.randint(3, n_max)
    return random_instance(seed, n, rng.uniform(0.25, 0.6), rng.uniform(0.1, 0.4))


@pytest.mark.parametrize("seed", range(120))
def test_f_path_agrees_with_enumeration(seed):
    inst = _random(seed)
    for u in range(inst.n):
        for v in range(inst.n):
            if u == v or norm(u, v) in inst.edges:
                continue
            path = find_f_path(inst, u, v)
            brute = oracles.f_paths(inst, u, v)
            assert (path is None) == (not brute)
            if path is not None:
                assert path in brute


@pytest.mark.parametrize("seed", range(120))
def test_g_cycle_agrees_with_enumeration(seed):
    inst = _random(seed)
    for u, v in inst.edges:
        for a, b in ((u, v), (v, u)):
            found = find_g_cycle(inst, a, b)
            brute = oracles.g_cycles(inst, a, b)
            assert (found is None) == (not brute)
            if found is not None:
                w, cycle = found
                assert cycle in brute and cycle[1] == w


def test_closure_fig6(fig6):
    out = closure(fig6)
    assert out.feasible
    assert set(out.added_forbidden) == {fig6.pair("a1", "b1")}
    assert set(out.added_forced) == {fig6.pair("c0", "a0"), fig6.pair("c0", "b0")}
    closed = out.instance
    assert len(closed.edges) == 7 and len(closed.conflicts) == 3
    assert not closed.free_pairs()
    assert is_chordal(closed.adjacency())


def test_closure_fig7(fig7):
    out = closure(fig7)
    assert not out.feasible
    witness = [fig7.name(v) for v in out.witness]
    assert set(witness) == {"b0", "c0", "b2", "c1"}
    assert count_proper_triangulations(out.witness, fig7.conflicts) == 0


def test_closure_tree_without_conflicts():
    inst = SandwichInstance(5, frozenset({(0, 1), (1, 2), (1, 3), (3, 4)}), frozenset())
    out = closure(inst)
    assert out.feasible and not out.added_forced and not out.added_forbidden


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_degenerate(n):
    inst = SandwichInstance(n, frozenset(), frozenset())
    out = closure(inst)
    assert out.feasible and out.instance == inst


def test_delta_report(fig6):
    report = closure(fig6).report(fig6)
    assert report == {
        "feasible": True,
        "forced": [["a0", "c0"], ["b0", "c0"]],
        "forbidden": [["a1", "b1"]],
        "infeasible_witness": None,
    }


@pytest.mark.parametrize("seed", range(150))
def test_closure_invariants(seed):
    inst = _random(seed)
    out = closure(inst)
    if not out.feasible:
        assert count_proper_triangulations(out.witness, inst.conflicts | set(out.added_forbidden)) == 0
        assert closure(inst, schedule="reverse").feasible is False
        return
    closed = out.instance
    # monotone, disjoint
    assert inst.edges <= closed.edges and inst.conflicts <= closed.conflicts
    assert not closed.edges & closed.conflicts
    # idempotent
    again = closure(closed)
    assert again.feasible and not again.added_forced and not again.added_forbidden
    # fixpoint
    for u, v in closed.free_pairs():
        assert find_f_path(closed, u, v) is None
    for u, v in closed.edges:
        assert find_g_cycle(closed, u, v) is None and find_g_cycle(closed, v, u) is None
    # schedule independence
    other = closure(inst, schedule="reverse")
    assert other.feasible and other.instance == closed


def test_verify_properties_fig6(fig6):
    report = verify_closure_properties(closure(fig6).instance)
    assert report.ok
    assert report.unclassified_pairs == 0 and report.chordless_cycles == 0


def test_verify_properties_example1(example1):
    closed = closure(build_instance(example1)).instance
    assert verify_closure_properties(closed).ok


def test_verify_properties_flags_violation():
    # a bare 4-cycle with one chord forbidden has one proper triangulation
    inst = SandwichInstance(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}), frozenset({(0, 2)}))
    report = verify_closure_properties(inst)
    assert not report.ok
    assert "property 2" in report.violations[0]


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_closed_instances_have_two_triangulations_per_cycle(seed):
    out = closure(_random(seed, 8))
    if not out.feasible:
        return
    closed = out.instance
    for cycle in chordless_cycles(closed.adjacency()):
        assert count_proper_triangulations(cycle, closed.conflicts) >= 2
