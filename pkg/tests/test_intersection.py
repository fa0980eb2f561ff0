import json
import random
from itertools import combinations

import pytest

from phylosandwich.characters import CharacterSet, restrict
from phylosandwich.experiments import random_characters
from phylosandwich.graphs import is_chordal
from phylosandwich.intersection import build_instance, vertex_species
from phylosandwich.sandwich import SandwichInstance, StateVertex


def test_sec4_instance_shape(sec4):
    inst = build_instance(sec4)
    assert inst.n == 20
    assert len(inst.conflicts) == 30
    assert inst.pair("a0", "b0") in inst.edges
    assert inst.pair("a0", "b1") not in inst.edges


def test_restricted_vertex_count(sec4):
    assert build_instance(restrict(sec4, ["a", "b"])).n == 8


def test_example1_is_chordal(example1):
    assert is_chordal(build_instance(example1).adjacency())


def test_vertex_species(sec4, example1):
    assert vertex_species(sec4, StateVertex(0, 1)) == frozenset("zt")
    assert vertex_species(example1, (2, 0)) == frozenset("gh")
    assert vertex_species(sec4, (0, 2)) == frozenset("y")
    with pytest.raises(IndexError):
        vertex_species(sec4, (0, 4))
    with pytest.raises(IndexError):
        vertex_species(sec4, (9, 0))


def test_labels(sec4, example1):
    assert build_instance(sec4).name(0) == "a0"
    assert build_instance(example1).name(0) == "c1_0"


@pytest.mark.parametrize("seed", range(30))
def test_edges_match_block_intersections(seed):
    rng = random.Random(seed)
    n_species = rng.randint(3, 7)
    cs = random_characters(seed, n_species, rng.randint(1, 4), rng.randint(1, 3))
    inst = build_instance(cs)
    blocks = [(i, j, b) for i, c in enumerate(cs.characters) for j, b in enumerate(c.blocks)]
    assert inst.n == sum(c.n_states for c in cs.characters)
    for (u, (ci, _, bu)), (v, (cj, _, bv)) in combinations(enumerate(blocks), 2):
        same = ci == cj
        assert ((u, v) in inst.conflicts) == same
        assert ((u, v) in inst.edges) == (not same and len(set(bu).intersection(bv)) > 0)


def test_json_round_trip(sec4):
    inst = build_instance(sec4)
    data = json.loads(json.dumps(inst.to_json()))
    again = SandwichInstance.from_json(data)
    assert again.edges == inst.edges and again.conflicts == inst.conflicts
    assert [again.name(v) for v in range(again.n)] == [inst.name(v) for v in range(inst.n)]
    assert data["vertices"][0] == {"char": "a", "state": 0}


def test_dot_marks_conflicts_dotted(fig6):
    dot = fig6.to_dot()
    assert dot.count("style=dotted") == len(fig6.conflicts) == 2
    assert "colour=" in dot


def test_instance_rejects_overlap():
    with pytest.raises(ValueError):
        SandwichInstance(3, frozenset({(0, 1)}), frozenset({(1, 0)}))
    with pytest.raises(ValueError):
        SandwichInstance(3, frozenset({(0, 0)}), frozenset())


def test_no_characters():
    inst = build_instance(CharacterSet(("a",), ()))
    assert inst.n == 0
