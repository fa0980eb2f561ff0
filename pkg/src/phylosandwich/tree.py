"""Phylogenies from proper chordal completions, and convexity checks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .characters import Character, CharacterSet
from .graphs import Graph, _normalize, perfect_elimination_ordering
from .intersection import build_instance, species_states
from .solver import Completion


class InvalidCompletionError(ValueError):
    pass


# -- clique trees ------------------------------------------------------------

@dataclass
class CliqueTree:
    cliques: list[frozenset]
    edges: list[tuple[int, int]]

    def has_running_intersection(self) -> bool:
        adj: dict[int, set[int]] = {i: set() for i in range(len(self.cliques))}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        for v in set().union(*self.cliques) if self.cliques else ():
            holders = {i for i, c in enumerate(self.cliques) if v in c}
            start = next(iter(holders))
            seen = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in adj[x] & holders:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            if seen != holders:
                return False
        return True

    def to_dot(self) -> str:
        lines = ["graph cliquetree {"]
        for i, c in enumerate(self.cliques):
            lines.append(f'  {i} [label="{" ".join(sorted(map(str, c)))}"];')
        for a, b in self.edges:
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def maximal_cliques(g: Graph) -> list[frozenset]:
    """Maximal cliques of a chordal graph, in elimination order."""
    nodes, adj = _normalize(g)
    peo = perfect_elimination_ordering(adj)
    pos = {v: i for i, v in enumerate(peo)}
    candidates = [frozenset([v, *(w for w in adj[v] if pos[w] > pos[v])]) for v in peo]
    cliques = [c for c in candidates if not any(c < d for d in candidates)]
    unique = list(dict.fromkeys(cliques))
    return [frozenset(nodes[v] for v in c) for c in unique]


def build_clique_tree(g: Graph) -> CliqueTree:
    """Maximum-weight spanning tree of the clique intersection graph (Kruskal)."""
    cliques = maximal_cliques(g)
    parent = list(range(len(cliques)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    weighted = sorted(
        ((-len(cliques[a] & cliques[b]), a, b) for a, b in combinations(range(len(cliques)), 2))
    )
    edges = []
    for _, a, b in weighted:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            edges.append((a, b))
    ct = CliqueTree(cliques, edges)
    assert ct.has_running_intersection()
    return ct


# -- phylogenetic trees ------------------------------------------------------

@dataclass
class PhyloTree:
    """Unrooted tree; ``leaf_labels`` maps leaf nodes to species."""

    adj: dict[int, set[int]] = field(default_factory=dict)
    leaf_labels: dict[int, str] = field(default_factory=dict)

    def add_node(self) -> int:
        v = max(self.adj, default=-1) + 1
        self.adj[v] = set()
        return v

    def add_edge(self, a: int, b: int) -> None:
        self.adj[a].add(b)
        self.adj[b].add(a)

    def remove_node(self, v: int) -> None:
        for w in self.adj.pop(v):
            self.adj[w].discard(v)
        self.leaf_labels.pop(v, None)

    @property
    def species(self) -> set[str]:
        return set(self.leaf_labels.values())

    def leaf_of(self) -> dict[str, int]:
        return {s: v for v, s in self.leaf_labels.items()}

    def copy(self) -> PhyloTree:
        return PhyloTree({v: set(n) for v, n in self.adj.items()}, dict(self.leaf_labels))

    def check(self) -> None:
        n_edges = sum(len(a) for a in self.adj.values()) // 2
        if self.adj and n_edges != len(self.adj) - 1:
            raise AssertionError("not a tree")
        if len(set(self.leaf_labels.values())) != len(self.leaf_labels):
            raise AssertionError("species label more than one leaf")
        for v, s in self.leaf_labels.items():
            if len(self.adj[v]) > 1:
                raise AssertionError(f"species {s} labels an internal node")

    def prune_unlabelled_leaves(self) -> PhyloTree:
        t = self.copy()
        stack = [v for v in t.adj if v not in t.leaf_labels and len(t.adj[v]) <= 1]
        while stack:
            v = stack.pop()
            if v not in t.adj or v in t.leaf_labels or len(t.adj[v]) > 1:
                continue
            nbrs = list(t.adj[v])
            t.remove_node(v)
            stack.extend(w for w in nbrs if w not in t.leaf_labels and len(t.adj[w]) <= 1)
        return t

    def suppress_degree_two(self) -> PhyloTree:
        t = self.copy()
        for v in sorted(t.adj):
            if v not in t.leaf_labels and len(t.adj[v]) == 2:
                a, b = t.adj[v]
                t.remove_node(v)
                t.add_edge(a, b)
        return t

    def splits(self) -> frozenset[frozenset[str]]:
        """Non-trivial bipartitions, each given by the side without the smallest species."""
        t = self.suppress_degree_two()
        all_species = frozenset(t.leaf_labels.values())
        if not all_species:
            return frozenset()
        anchor = min(all_species)
        out = set()
        for a in t.adj:
            for b in t.adj[a]:
                side = _side(t, b, a)
                if 1 < len(side) < len(all_species) - 1 and anchor not in side:
                    out.add(side)
        return frozenset(out)

    def canonical(self) -> tuple[frozenset[str], frozenset[frozenset[str]]]:
        return frozenset(self.leaf_labels.values()), self.splits()

    def to_newick(self) -> str:
        t = self.suppress_degree_two()
        if not t.adj:
            return ";"
        if len(t.adj) == 1:
            return f"{next(iter(t.leaf_labels.values()))};"
        internal = sorted(v for v in t.adj if v not in t.leaf_labels)
        if not internal:
            return "(" + ",".join(sorted(t.leaf_labels.values())) + ");"
        root = internal[0]

        def label(v: int, parent: int) -> tuple[str, str]:
            kids = [label(w, v) for w in t.adj[v] if w != parent]
            if not kids:
                return t.leaf_labels[v], t.leaf_labels[v]
            kids.sort(key=lambda k: k[1])
            return "(" + ",".join(k[0] for k in kids) + ")", kids[0][1]

        return label(root, -1)[0] + ";"

    def to_dot(self) -> str:
        lines = ["graph tree {"]
        for v in sorted(self.adj):
            name = self.leaf_labels.get(v, "")
            lines.append(f'  {v} [label="{name}"];')
        for v in sorted(self.adj):
            for w in sorted(self.adj[v]):
                if v < w:
                    lines.append(f"  {v} -- {w};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _side(t: PhyloTree, start: int, avoid: int) -> frozenset[str]:
    seen = {start, avoid}
    stack = [start]
    found = []
    while stack:
        x = stack.pop()
        if x in t.leaf_labels:
            found.append(t.leaf_labels[x])
        for y in t.adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(found)


def parse_newick(text: str) -> PhyloTree:
    """Parse a Newick string; branch lengths and internal labels are ignored."""
    text = text.strip()
    if not text.endswith(";"):
        raise ValueError("Newick string must end with ';'")
    s = text[:-1]
    t = PhyloTree()
    pos = 0

    def name() -> str:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos] not in "(),:;":
            pos += 1
        token = s[start:pos].strip()
        if pos < len(s) and s[pos] == ":":
            pos += 1
            while pos < len(s) and s[pos] not in "(),;":
                pos += 1
        return token

    def subtree() -> int:
        nonlocal pos
        v = t.add_node()
        if pos < len(s) and s[pos] == "(":
            pos += 1
            while True:
                t.add_edge(v, subtree())
                if pos >= len(s):
                    raise ValueError("unbalanced parentheses")
                if s[pos] == ",":
                    pos += 1
                    continue
                if s[pos] == ")":
                    pos += 1
                    break
                raise ValueError(f"unexpected {s[pos]!r} at {pos}")
            name()
        else:
            label = name()
            if not label:
                raise ValueError(f"empty leaf name at {pos}")
            t.leaf_labels[v] = label
        return v

    subtree()
    if pos != len(s):
        raise ValueError(f"trailing text at {pos}")
    t.check()
    return t


# -- convexity ---------------------------------------------------------------

def _spanning_subtree(t: PhyloTree, leaves: list[int]) -> set[int]:
    root = leaves[0]
    parent = {root: None}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in t.adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    nodes = {root}
    for leaf in leaves[1:]:
        x = leaf
        while x not in nodes:
            nodes.add(x)
            x = parent[x]
    return nodes


def is_convex(t: PhyloTree, c: Character) -> bool:
    """True iff the minimal subtrees spanning each state's leaves are pairwise disjoint."""
    leaf = t.leaf_of()
    missing = c.species - leaf.keys()
    if missing:
        raise KeyError(f"species missing from tree: {sorted(missing)}")
    used: set[int] = set()
    for block in c.blocks:
        nodes = _spanning_subtree(t, sorted(leaf[s] for s in block))
        if nodes & used:
            return False
        used |= nodes
    return True


def build_phylogeny(cs: CharacterSet, completion: Completion | Iterable[tuple[int, int]] = ()) -> PhyloTree:
    """Tree on which every character of ``cs`` is convex, from a proper completion."""
    inst = build_instance(cs)
    fill = completion.fill if isinstance(completion, Completion) else frozenset(completion)
    if fill & inst.edges or fill & inst.conflicts:
        raise InvalidCompletionError("fill overlaps E or F")
    adj = {v: set() for v in range(inst.n)}
    for u, v in inst.edges | fill:
        adj[u].add(v)
        adj[v].add(u)
    try:
        ct = build_clique_tree(adj)
    except ValueError as exc:
        raise InvalidCompletionError("E + fill is not chordal") from exc

    t = PhyloTree()
    for _ in range(max(1, len(ct.cliques))):
        t.add_node()
    for a, b in ct.edges:
        t.add_edge(a, b)
    for s, states in species_states(cs, inst).items():
        # a species' states are pairwise adjacent, so some maximal clique holds them all
        home = next((i for i, c in enumerate(ct.cliques) if c.issuperset(states)), 0)
        t.add_edge(home, leaf := t.add_node())
        t.leaf_labels[leaf] = s
    t = t.prune_unlabelled_leaves()
    t.check()
    suppressed = t.suppress_degree_two()
    for c in cs.characters:
        raw, short = is_convex(t, c), is_convex(suppressed, c)
        if raw != short:
            raise AssertionError(f"degree-2 suppression changed convexity of {c.name}")
        if not raw:
            raise AssertionError(f"character {c.name} not convex on the constructed tree")
    return t
