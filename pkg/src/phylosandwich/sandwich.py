"""Chordal-sandwich instances and the forbidden/forced closure.

An instance is a graph ``(V, E, F)``: ``E`` holds the mandatory edges and
``F`` the pairs no completion may use.  Internally adjacency and conflict
sets are kept as integer bitmasks, which keeps the path searches in the
closure cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .graphs import chordless_cycles, chordless_paths, is_chordal
from .triangulations import count_proper_triangulations

Pair = tuple[int, int]


def norm(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class StateVertex:
    """State ``state_index`` of character ``char_index``; the colour is the character."""

    char_index: int
    state_index: int
    char_name: str = ""

    @property
    def colour(self) -> int:
        return self.char_index

    @property
    def label(self) -> str:
        name = self.char_name or f"c{self.char_index}"
        sep = "_" if name[-1].isdigit() else ""
        return f"{name}{sep}{self.state_index}"


@dataclass(frozen=True)
class SandwichInstance:
    n: int
    edges: frozenset[Pair]
    conflicts: frozenset[Pair]
    labels: tuple[StateVertex, ...] | None = None

    def __post_init__(self):
        for name in ("edges", "conflicts"):
            pairs = getattr(self, name)
            fixed = frozenset(norm(*p) for p in pairs)
            for u, v in fixed:
                if u == v:
                    raise ValueError(f"self pair ({u},{u}) in {name}")
                if not (0 <= u < self.n and 0 <= v < self.n):
                    raise ValueError(f"pair ({u},{v}) out of range for n={self.n}")
            object.__setattr__(self, name, fixed)
        both = self.edges & self.conflicts
        if both:
            raise ValueError(f"E and F intersect: {sorted(both)}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must cover every vertex")

    # -- views ---------------------------------------------------------
    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def conflict_map(self) -> tuple[frozenset[int], ...]:
        fm: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.conflicts:
            fm[u].add(v)
            fm[v].add(u)
        return tuple(frozenset(a) for a in fm)

    def adjacency(self) -> list[set[int]]:
        return [set(a) for a in self.neighbors]

    def name(self, v: int) -> str:
        return self.labels[v].label if self.labels else str(v)

    def index(self, name: str) -> int:
        for v in range(self.n):
            if self.name(v) == name:
                return v
        raise KeyError(name)

    def pair(self, a: str, b: str) -> Pair:
        return norm(self.index(a), self.index(b))

    def names(self, pairs: Iterable[Pair]) -> list[list[str]]:
        return sorted(sorted((self.name(u), self.name(v))) for u, v in pairs)

    def free_pairs(self) -> list[Pair]:
        """Pairs in neither E nor F, lexicographic."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in self.edges and (u, v) not in self.conflicts
        ]

    def with_pairs(self, edges: Iterable[Pair] = (), conflicts: Iterable[Pair] = ()) -> SandwichInstance:
        return SandwichInstance(
            self.n,
            self.edges | {norm(*p) for p in edges},
            self.conflicts | {norm(*p) for p in conflicts},
            self.labels,
        )

    def induced(self, vertices: Sequence[int]) -> SandwichInstance:
        pos = {v: i for i, v in enumerate(vertices)}

        def keep(pairs):
            return frozenset(norm(pos[u], pos[v]) for u, v in pairs if u in pos and v in pos)

        labels = tuple(self.labels[v] for v in vertices) if self.labels else None
        return SandwichInstance(len(vertices), keep(self.edges), keep(self.conflicts), labels)

    # -- serialization -------------------------------------------------
    def to_json(self) -> dict:
        if self.labels:
            vertices = [{"char": sv.char_name or f"c{sv.char_index}", "state": sv.state_index} for sv in self.labels]
        else:
            vertices = [{"id": v} for v in range(self.n)]
        return {
            "vertices": vertices,
            "edges": [list(p) for p in sorted(self.edges)],
            "conflicts": [list(p) for p in sorted(self.conflicts)],
        }

    @classmethod
    def from_json(cls, data: dict) -> SandwichInstance:
        vertices = data["vertices"]
        labels = None
        if vertices and all("char" in v for v in vertices):
            colour: dict[str, int] = {}
            labels = []
            for v in vertices:
                name = str(v["char"])
                colour.setdefault(name, len(colour))
                labels.append(StateVertex(colour[name], int(v["state"]), name))
            labels = tuple(labels)
        return cls(
            len(vertices),
            frozenset(tuple(p) for p in data.get("edges", [])),
            frozenset(tuple(p) for p in data.get("conflicts", [])),
            labels,
        )

    def to_dot(self, fill: Iterable[Pair] = ()) -> str:
        lines = ["graph G {"]
        for v in range(self.n):
            attrs = f'label="{self.name(v)}"'
            if self.labels:
                attrs += f" colour={self.labels[v].colour}"
            lines.append(f"  {v} [{attrs}];")
        for u, v in sorted(self.edges):
            lines.append(f"  {u} -- {v};")
        for u, v in sorted(norm(*p) for p in fill):
            lines.append(f"  {u} -- {v} [style=bold color=red];")
        for u, v in sorted(self.conflicts):
            lines.append(f"  {u} -- {v} [style=dotted];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def load_instance(text: str) -> SandwichInstance:
    return SandwichInstance.from_json(json.loads(text))


# -- bitmask core ----------------------------------------------------------

def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _masks(inst: SandwichInstance) -> tuple[list[int], list[int]]:
    N = [0] * inst.n
    Fm = [0] * inst.n
    for u, v in inst.edges:
        N[u] |= 1 << v
        N[v] |= 1 << u
    for u, v in inst.conflicts:
        Fm[u] |= 1 << v
        Fm[v] |= 1 << u
    return N, Fm


def _layered_path(N: list[int], starts: int, allowed: int, target: int) -> list[int] | None:
    """Shortest walk from ``starts`` through ``allowed`` to a vertex adjacent to ``target``.

    The first layer is ``starts`` itself; later layers stay in ``allowed``.
    Returns the vertices from a start to the last vertex, or None.
    """
    layers = [starts]
    seen = starts
    frontier = starts
    while frontier:
        hit = frontier & target
        if hit:
            x = (hit & -hit).bit_length() - 1
            path = [x]
            for layer in reversed(layers[:-1]):
                cand = layer & N[path[-1]]
                path.append((cand & -cand).bit_length() - 1)
            return path[::-1]
        nxt = 0
        for x in _bits(frontier):
            nxt |= N[x]
        nxt &= allowed & ~seen
        seen |= nxt
        layers.append(nxt)
        frontier = nxt
    return None


def _f_path(N: list[int], Fm: list[int], u: int, v: int) -> list[int] | None:
    ends = (1 << u) | (1 << v)
    allowed = (Fm[u] | Fm[v]) & ~ends
    inner = _layered_path(N, N[u] & allowed, allowed, N[v])
    return None if inner is None else [u, *inner, v]


def _g_cycle(N: list[int], Fm: list[int], u: int, v: int) -> list[int] | None:
    ends = (1 << u) | (1 << v)
    first = N[u] & ~N[v] & ~Fm[v] & ~ends
    if not first:
        return None
    rest = (Fm[u] | Fm[v]) & ~N[u] & ~ends
    walk = _layered_path(N, first, rest, N[v])
    if walk is None or len(walk) < 2:
        return None
    return [u, *walk, v]


def find_f_path(inst: SandwichInstance, u: int, v: int) -> list[int] | None:
    """A chordless path u, t1..tk, v (k >= 1) with every t_i in F(u) | F(v).

    Its existence makes (u, v) forbidden.  Requires (u, v) not in E.
    """
    if norm(u, v) in inst.edges:
        raise ValueError(f"({u},{v}) is an edge; f-paths are defined for non-edges")
    N, Fm = _masks(inst)
    return _f_path(N, Fm, u, v)


def find_g_cycle(inst: SandwichInstance, u: int, v: int) -> tuple[int, list[int]] | None:
    """A chordless cycle u, w, t1..tk, v with w not in F(v) and t_i in F(u) | F(v).

    Returns ``(w, cycle)``; the pair (v, w) is then forced.  Requires (u, v) in E.
    """
    if norm(u, v) not in inst.edges:
        raise ValueError(f"({u},{v}) is not an edge; g-cycles are defined for edges")
    N, Fm = _masks(inst)
    cycle = _g_cycle(N, Fm, u, v)
    return None if cycle is None else (cycle[1], cycle)


# -- closure -----------------------------------------------------------------

@dataclass
class ClosureOutcome:
    feasible: bool
    instance: SandwichInstance | None = None
    added_forced: list[Pair] = field(default_factory=list)
    added_forbidden: list[Pair] = field(default_factory=list)
    witness: list[int] | None = None
    rounds: int = 0

    def report(self, inst: SandwichInstance) -> dict:
        return {
            "feasible": self.feasible,
            "forced": inst.names(self.added_forced),
            "forbidden": inst.names(self.added_forbidden),
            "infeasible_witness": [inst.name(v) for v in self.witness] if self.witness else None,
        }


def _close(
    n: int, N: list[int], Fm: list[int], pairs: Sequence[Pair]
) -> tuple[bool, list[Pair], list[Pair], list[int] | None, int]:
    """Run both propagation rules to a fixpoint, mutating ``N`` and ``Fm``."""
    forced: list[Pair] = []
    forbidden: list[Pair] = []
    rounds = 0
    changed = True
    while changed:
        changed = False
        rounds += 1
        for u, v in pairs:
            if N[u] >> v & 1:
                path = _f_path(N, Fm, u, v)
                if path is not None:
                    return False, forced, forbidden, path, rounds
                for a, b in ((u, v), (v, u)):
                    cycle = _g_cycle(N, Fm, a, b)
                    if cycle is not None:
                        w = cycle[1]
                        N[b] |= 1 << w
                        N[w] |= 1 << b
                        forced.append(norm(b, w))
                        changed = True
            elif not Fm[u] >> v & 1:
                if _f_path(N, Fm, u, v) is not None:
                    Fm[u] |= 1 << v
                    Fm[v] |= 1 << u
                    forbidden.append((u, v))
                    changed = True
    return True, forced, forbidden, None, rounds


def _pair_order(n: int, schedule: str) -> list[Pair]:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if schedule == "lex":
        return pairs
    if schedule == "reverse":
        return pairs[::-1]
    raise ValueError(f"unknown schedule {schedule!r}")


def closure(inst: SandwichInstance, *, schedule: str = "lex") -> ClosureOutcome:
    """Add every forbidden pair to F and every forced pair to E until stable.

    The proper chordal completions of the result are exactly those of the
    input.  An edge that admits an f-path sits on a cycle with no proper
    triangulation; that cycle is returned as the infeasibility witness.
    """
    N, Fm = _masks(inst)
    ok, forced, forbidden, witness, rounds = _close(inst.n, N, Fm, _pair_order(inst.n, schedule))
    if not ok:
        return ClosureOutcome(False, None, forced, forbidden, witness, rounds)
    closed = SandwichInstance(
        inst.n,
        inst.edges | frozenset(forced),
        inst.conflicts | frozenset(forbidden),
        inst.labels,
    )
    return ClosureOutcome(True, closed, forced, forbidden, None, rounds)


# -- closure properties -----------------------------------------------------

@dataclass
class PropertyReport:
    unclassified_pairs: int = 0
    created_cycles: int = 0
    chordless_cycles: int = 0
    violations: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_closure_properties(inst: SandwichInstance, *, max_cycle_length: int | None = 12) -> PropertyReport:
    """Check the two structural guarantees of a closed instance by enumeration.

    1. joining any unclassified pair only creates chordless cycles with at
       least one proper triangulation;
    2. every chordless cycle already present has at least two.

    Cycles longer than ``max_cycle_length`` are not enumerated; pairs whose
    search was cut short are listed in ``skipped``.
    """
    report = PropertyReport()
    adj = inst.adjacency()
    conflicts = inst.conflicts
    for u, v in inst.free_pairs():
        report.unclassified_pairs += 1
        for path in chordless_paths(adj, u, v, max_vertices=max_cycle_length):
            report.created_cycles += 1
            if count_proper_triangulations(path, conflicts) < 1:
                names = [inst.name(x) for x in path]
                report.violations.append(f"property 1: joining {names[0]}-{names[-1]} closes unfillable cycle {names}")
    for cycle in chordless_cycles(adj, max_length=max_cycle_length):
        report.chordless_cycles += 1
        count = count_proper_triangulations(cycle, conflicts)
        if count < 2:
            names = [inst.name(x) for x in cycle]
            report.violations.append(f"property 2: cycle {names} has {count} proper triangulation(s)")
    if max_cycle_length is not None and inst.n > max_cycle_length:
        report.skipped.append(f"cycles longer than {max_cycle_length} not enumerated")
    return report


def is_completion(inst: SandwichInstance, fill: Iterable[Pair]) -> bool:
    fill = {norm(*p) for p in fill}
    if fill & inst.edges or fill & inst.conflicts:
        return False
    return is_chordal(_adj_dict(inst.n, inst.edges | fill))


def _adj_dict(n: int, pairs: Iterable[Pair]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in pairs:
        adj[u].add(v)
        adj[v].add(u)
    return adj
