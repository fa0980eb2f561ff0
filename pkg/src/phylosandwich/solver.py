"""Exact search for proper chordal completions.

Each search node first runs the closure, then picks a shortest chordless
cycle of the current graph and branches over its allowed chords.  Branch
``i`` adds chord ``i`` and forbids chords ``0..i-1``, so the branches
partition the completions (every completion triangulates the cycle, hence
contains one of its chords).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator

from .graphs import is_chordal, shortest_chordless_cycle
from .sandwich import Pair, SandwichInstance, _bits, _close, _masks, _pair_order, norm

DEFAULT_BUDGET = 10**6


class BudgetExhausted(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class Completion:
    fill: frozenset[Pair]

    def edges(self, inst: SandwichInstance) -> frozenset[Pair]:
        return inst.edges | self.fill

    def labelled(self, inst: SandwichInstance) -> list[list[str]]:
        return inst.names(self.fill)


@dataclass
class SolveReport:
    status: str  # "compatible" | "incompatible" | "inconclusive"
    completion: Completion | None = None
    nodes: int = 0
    wall_time: float = 0.0
    refuted_by: str | None = None  # "closure" at the root, else "search"

    def to_json(self, inst: SandwichInstance, *, timing: bool = False) -> dict:
        out = {
            "status": self.status,
            "fill": self.completion.labelled(inst) if self.completion else None,
            "nodes": self.nodes,
            "refuted_by": self.refuted_by,
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out


@dataclass
class _Search:
    n: int
    budget: int
    nodes: int = 0
    pairs: list = field(default_factory=list)
    root_refuted: bool = False

    def run(self, N: list[int], Fm: list[int]) -> Iterator[list[int]]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(self.nodes - 1)
        N, Fm = list(N), list(Fm)
        ok, *_ = _close(self.n, N, Fm, self.pairs)
        if not ok:
            if self.nodes == 1:
                self.root_refuted = True
            return
        adj = [set(_bits(m)) for m in N]
        cycle = shortest_chordless_cycle(adj)
        if cycle is None:
            yield N
            return
        k = len(cycle)
        chords = [
            norm(cycle[i], cycle[j])
            for i in range(k)
            for j in range(i + 2, k)
            if not (i == 0 and j == k - 1)
        ]
        chords = sorted(c for c in chords if not Fm[c[0]] >> c[1] & 1)
        excluded: list[Pair] = []
        for a, b in chords:
            childN = list(N)
            childN[a] |= 1 << b
            childN[b] |= 1 << a
            childF = list(Fm)
            for x, y in excluded:
                childF[x] |= 1 << y
                childF[y] |= 1 << x
            yield from self.run(childN, childF)
            excluded.append((a, b))


def _fill(inst: SandwichInstance, N: list[int]) -> frozenset[Pair]:
    return frozenset(
        (u, v) for u in range(inst.n) for v in _bits(N[u]) if u < v and (u, v) not in inst.edges
    )


def solve(inst: SandwichInstance, budget: int = DEFAULT_BUDGET) -> SolveReport:
    """Decide whether ``inst`` has a proper chordal completion.

    Budget exhaustion yields status ``inconclusive``, never ``incompatible``.
    """
    start = time.perf_counter()
    search = _Search(inst.n, budget, pairs=_pair_order(inst.n, "lex"))
    N, Fm = _masks(inst)
    try:
        found = next(search.run(N, Fm), None)
    except BudgetExhausted:
        return SolveReport("inconclusive", None, search.nodes, time.perf_counter() - start)
    elapsed = time.perf_counter() - start
    if found is None:
        layer = "closure" if search.root_refuted else "search"
        return SolveReport("incompatible", None, search.nodes, elapsed, layer)
    completion = Completion(_fill(inst, found))
    assert_completion(inst, completion)
    return SolveReport("compatible", completion, search.nodes, elapsed)


def assert_completion(inst: SandwichInstance, completion: Completion) -> None:
    fill = completion.fill
    if fill & inst.edges or fill & inst.conflicts:
        raise AssertionError("fill overlaps E or F")
    adj = [set() for _ in range(inst.n)]
    for u, v in inst.edges | fill:
        adj[u].add(v)
        adj[v].add(u)
    if not is_chordal(adj):
        raise AssertionError("E + fill is not chordal")


def is_minimal(inst: SandwichInstance, fill: frozenset[Pair]) -> bool:
    """No single fill edge can be dropped while staying chordal."""
    for e in fill:
        adj = [set() for _ in range(inst.n)]
        for u, v in inst.edges | (fill - {e}):
            adj[u].add(v)
            adj[v].add(u)
        if is_chordal(adj):
            return False
    return True


def enumerate_minimal_completions(
    inst: SandwichInstance, limit: int | None = None, budget: int = DEFAULT_BUDGET
) -> list[Completion]:
    """All inclusion-minimal proper completions (up to ``limit``), sorted by fill.

    Raises BudgetExhausted when the search tree exceeds ``budget`` nodes.
    """
    search = _Search(inst.n, budget, pairs=_pair_order(inst.n, "lex"))
    N, Fm = _masks(inst)
    found: set[frozenset[Pair]] = set()
    for leaf in search.run(N, Fm):
        fill = _fill(inst, leaf)
        if fill in found or not is_minimal(inst, fill):
            continue
        found.add(fill)
        if limit is not None and len(found) >= limit:
            break
    out = [Completion(f) for f in sorted(found, key=lambda f: (len(f), sorted(f)))]
    for c in out:
        assert_completion(inst, c)
    return out
