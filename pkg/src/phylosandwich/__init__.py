"""Multi-state character compatibility through chordal sandwich completion."""

from .characters import (
    Character,
    CharacterDataError,
    CharacterSet,
    k_subsets,
    parse_characters,
    restrict,
    serialize_characters,
)
from .experiments import dataset, random_characters, scan_subsets, verify_f4_counterexample
from .graphs import find_chordless_cycle, is_chordal, perfect_elimination_ordering
from .intersection import build_instance, vertex_species
from .sandwich import (
    ClosureOutcome,
    SandwichInstance,
    StateVertex,
    closure,
    find_f_path,
    find_g_cycle,
    verify_closure_properties,
)
from .solver import Completion, SolveReport, enumerate_minimal_completions, solve
from .tree import PhyloTree, build_clique_tree, build_phylogeny, is_convex, parse_newick
from .triangulations import cycle_has_proper_triangulation, triangulations_of_cycle

__all__ = [
    "Character", "CharacterDataError", "CharacterSet", "ClosureOutcome", "Completion",
    "PhyloTree", "SandwichInstance", "SolveReport", "StateVertex", "build_clique_tree",
    "build_instance", "build_phylogeny", "closure", "cycle_has_proper_triangulation",
    "dataset", "enumerate_minimal_completions", "find_chordless_cycle", "find_f_path",
    "find_g_cycle", "is_chordal", "is_convex", "k_subsets", "parse_characters",
    "parse_newick", "perfect_elimination_ordering", "random_characters", "restrict",
    "scan_subsets", "serialize_characters", "solve", "triangulations_of_cycle",
    "vertex_species", "verify_closure_properties", "verify_f4_counterexample",
]
