"""Bundled datasets, the f(4) >= 5 check, subset scans and random generators.

Random generators use ``random.Random`` (Mersenne Twister), whose output for
a given integer seed is the same on every platform.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations

from .characters import CharacterSet, k_subsets, parse_characters, restrict
from .graphs import is_chordal
from .intersection import build_instance
from .sandwich import SandwichInstance, load_instance
from .solver import DEFAULT_BUDGET, enumerate_minimal_completions, solve

DATASETS = {
    "example1": ("example1.chars", "characters c1..c4 over species a..j"),
    "sec4": ("sec4.chars", "five 4-state characters a..e over {x,y,z,t,u,v}; every 4 compatible, all 5 not"),
    "fig6": ("fig6.json", "5-cycle a0 b0 a1 c0 b1 with same-colour conflicts"),
    "fig7": ("fig7.json", "5-cycle a0 b1 c0 a1 b0 plus c0-b2-c1-b0; no proper completion"),
}


@dataclass
class Dataset:
    name: str
    payload: CharacterSet | SandwichInstance
    notes: str = ""

    @property
    def is_characters(self) -> bool:
        return isinstance(self.payload, CharacterSet)

    def instance(self) -> SandwichInstance:
        return build_instance(self.payload) if self.is_characters else self.payload


def dataset_text(name: str) -> str:
    if name not in DATASETS:
        raise KeyError(f"unknown dataset {name!r}; choose from {sorted(DATASETS)}")
    return resources.files(__package__).joinpath("data", DATASETS[name][0]).read_text()


def dataset(name: str) -> Dataset:
    text = dataset_text(name)
    filename, notes = DATASETS[name]
    payload = load_instance(text) if filename.endswith(".json") else parse_characters(text)
    return Dataset(name, payload, notes)


# -- subset scans ------------------------------------------------------------

@dataclass
class ScanReport:
    k: int
    total: int
    compatible: int
    incompatible_subsets: list[list[str]] = field(default_factory=list)
    inconclusive_subsets: list[list[str]] = field(default_factory=list)
    full_set_status: str = ""

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "total": self.total,
            "compatible": self.compatible,
            "incompatible_subsets": self.incompatible_subsets,
            "inconclusive_subsets": self.inconclusive_subsets,
            "full_set_status": self.full_set_status,
        }


def _status(args: tuple[CharacterSet, int]) -> str:
    cs, budget = args
    return solve(build_instance(cs), budget).status


def scan_subsets(cs: CharacterSet, k: int, *, budget: int = DEFAULT_BUDGET, workers: int = 1) -> ScanReport:
    """Solve every k-subset of characters and the full set."""
    subsets = list(k_subsets(cs, k))
    jobs = [(s, budget) for s in subsets] + [(cs, budget)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            statuses = list(pool.map(_status, jobs))
    else:
        statuses = [_status(j) for j in jobs]
    report = ScanReport(k, len(subsets), 0, full_set_status=statuses[-1])
    for sub, status in zip(subsets, statuses):
        if status == "compatible":
            report.compatible += 1
        elif status == "incompatible":
            report.incompatible_subsets.append(sub.names)
        else:
            report.inconclusive_subsets.append(sub.names)
    return report


# -- the 4-state counterexample ------------------------------------------------

SEC4_FILLS = {
    "abcd": [["a1", "b0"], ["a1", "c1"], ["b0", "c1"]],
    "abce": [["a0", "b1"], ["a0", "c0"], ["b1", "c0"]],
}


def verify_f4_counterexample(cs: CharacterSet | None = None) -> tuple[bool, dict]:
    """Check that every 4 characters are compatible while all 5 are not.

    Also checks that {a,c,d,e} needs no fill and that {a,b,c,d} and
    {a,b,c,e} each have exactly one minimal completion, with the known fills.
    Returns ``(ok, report)``; ``report["mismatches"]`` lists what differed.
    """
    if cs is None:
        cs = dataset("sec4").payload
    report: dict = {"mismatches": []}
    bad = report["mismatches"]

    scan = scan_subsets(cs, 4)
    report["scan"] = scan.to_json()
    if scan.compatible != scan.total or scan.total != 5:
        bad.append(f"expected 5/5 compatible 4-subsets, got {scan.compatible}/{scan.total}")
    if scan.full_set_status != "incompatible":
        bad.append(f"expected the full set incompatible, got {scan.full_set_status}")

    acde = build_instance(restrict(cs, list("acde")))
    report["acde_chordal"] = is_chordal(acde.adjacency())
    if not report["acde_chordal"]:
        bad.append("{a,c,d,e} intersection graph is not chordal")

    for key, expected in SEC4_FILLS.items():
        inst = build_instance(restrict(cs, list(key)))
        found = [c.labelled(inst) for c in enumerate_minimal_completions(inst)]
        report[f"{key}_minimal_completions"] = found
        if found != [expected]:
            bad.append(f"{{{','.join(key)}}}: expected unique minimal completion {expected}, got {found}")
    return not bad, report


# -- random generators --------------------------------------------------------

def random_characters(seed: int, n_species: int, n_chars: int, r: int) -> CharacterSet:
    """``n_chars`` full characters with exactly ``r`` states each.

    Each character is a uniform labelling of the species by ``r`` states;
    labellings that leave a state empty are rejected and redrawn.
    """
    if r < 1 or n_species < r or n_chars < 0:
        raise ValueError(f"infeasible parameters n_species={n_species}, n_chars={n_chars}, r={r}")
    rng = random.Random(seed)
    species = [f"s{i}" for i in range(n_species)]
    chars = []
    for c in range(n_chars):
        while True:
            labels = [rng.randrange(r) for _ in species]
            if len(set(labels)) == r:
                break
        blocks = [[s for s, lab in zip(species, labels) if lab == j] for j in range(r)]
        chars.append((f"c{c}", blocks))
    return CharacterSet.from_blocks(chars, universe=species)


def random_instance(seed: int, n: int, p_edge: float = 0.4, p_conflict: float = 0.3) -> SandwichInstance:
    """Random sandwich instance: each pair is an edge, else a conflict, else free."""
    rng = random.Random(seed)
    edges, conflicts = set(), set()
    for pair in combinations(range(n), 2):
        x = rng.random()
        if x < p_edge:
            edges.add(pair)
        elif x < p_edge + p_conflict:
            conflicts.add(pair)
    return SandwichInstance(n, frozenset(edges), frozenset(conflicts))


def k_wise_violation(cs: CharacterSet, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True when every k-subset is compatible but the whole set is not."""
    full = solve(build_instance(cs), budget).status
    if full == "inconclusive":
        raise RuntimeError("full set undecided within budget")
    if full == "compatible":
        return False
    for sub in k_subsets(cs, k):
        status = solve(build_instance(sub), budget).status
        if status == "inconclusive":
            raise RuntimeError(f"subset {sub.names} undecided within budget")
        if status == "incompatible":
            return False
    return True
