"""Partition intersection graph of a character set."""

from __future__ import annotations

from itertools import combinations

from .characters import CharacterSet
from .sandwich import SandwichInstance, StateVertex


def state_vertices(cs: CharacterSet) -> list[StateVertex]:
    return [
        StateVertex(i, j, c.name)
        for i, c in enumerate(cs.characters)
        for j in range(c.n_states)
    ]


def build_instance(cs: CharacterSet) -> SandwichInstance:
    """States become vertices; E joins states sharing a species, F joins same-character states."""
    verts = state_vertices(cs)
    blocks = [cs.characters[sv.char_index].blocks[sv.state_index] for sv in verts]
    edges = set()
    conflicts = set()
    for u, v in combinations(range(len(verts)), 2):
        if verts[u].char_index == verts[v].char_index:
            conflicts.add((u, v))
        elif blocks[u] & blocks[v]:
            edges.add((u, v))
    # blocks of one character are disjoint, so E and F cannot meet
    assert not edges & conflicts
    return SandwichInstance(len(verts), frozenset(edges), frozenset(conflicts), tuple(verts))


def vertex_species(cs: CharacterSet, v: StateVertex | tuple[int, int]) -> frozenset[str]:
    i, j = (v.char_index, v.state_index) if isinstance(v, StateVertex) else v
    if not 0 <= i < len(cs.characters):
        raise IndexError(f"character index {i} out of range")
    blocks = cs.characters[i].blocks
    if not 0 <= j < len(blocks):
        raise IndexError(f"state index {j} out of range for {cs.characters[i].name}")
    return blocks[j]


def species_states(cs: CharacterSet, inst: SandwichInstance) -> dict[str, list[int]]:
    """Map each species to the vertices (states) it belongs to."""
    out: dict[str, list[int]] = {s: [] for s in cs.universe}
    for v, sv in enumerate(inst.labels or ()):
        for s in cs.characters[sv.char_index].blocks[sv.state_index]:
            out[s].append(v)
    return out
