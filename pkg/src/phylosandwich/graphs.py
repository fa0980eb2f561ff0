"""Chordal-graph primitives on plain adjacency structures.

Graphs are passed as either a sequence of neighbour sets indexed ``0..n-1``
or a mapping ``vertex -> iterable of neighbours``.  Results are expressed in
the caller's vertex names.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Iterator, Mapping, Sequence, Union

Graph = Union[Sequence[Iterable[int]], Mapping[Hashable, Iterable[Hashable]]]


class NotChordalError(ValueError):
    pass


def _normalize(g: Graph) -> tuple[list, list[set[int]]]:
    if isinstance(g, Mapping):
        nodes = list(g)
        index = {v: i for i, v in enumerate(nodes)}
        adj = [set() for _ in nodes]
        for v, nbrs in g.items():
            for w in nbrs:
                if w == v:
                    continue
                if w not in index:
                    index[w] = len(nodes)
                    nodes.append(w)
                    adj.append(set())
                adj[index[v]].add(index[w])
                adj[index[w]].add(index[v])
        return nodes, adj
    adj = [set() for _ in range(len(g))]
    for v, nbrs in enumerate(g):
        for w in nbrs:
            if w != v:
                adj[v].add(w)
                adj[w].add(v)
    return list(range(len(g))), adj


def adjacency(n: int, edges: Iterable[tuple[int, int]]) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def mcs_order(adj: Sequence[set[int]]) -> list[int]:
    """Maximum cardinality search visit order; ties go to the lowest index."""
    n = len(adj)
    weight = [0] * n
    done = [False] * n
    order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not done[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        done[best] = True
        order.append(best)
        for w in adj[best]:
            if not done[w]:
                weight[w] += 1
    return order


def _is_peo(adj: Sequence[set[int]], peo: Sequence[int]) -> bool:
    # Tarjan-Yannakakis: later neighbours minus the first one must all be
    # adjacent to that first one.
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        if len(later) < 2:
            continue
        first = min(later, key=pos.__getitem__)
        for w in later:
            if w != first and w not in adj[first]:
                return False
    return True


def is_chordal(g: Graph) -> bool:
    _, adj = _normalize(g)
    return _is_peo(adj, mcs_order(adj)[::-1])


def perfect_elimination_ordering(g: Graph) -> list:
    """Return a PEO: every vertex's later neighbours form a clique."""
    nodes, adj = _normalize(g)
    peo = mcs_order(adj)[::-1]
    if not _is_peo(adj, peo):
        raise NotChordalError("graph is not chordal")
    return [nodes[v] for v in peo]


def _shortest_path(adj: Sequence[set[int]], src: int, dst: int, allowed: set[int]) -> list[int] | None:
    """Shortest src-dst path whose vertices (other than src) lie in ``allowed``."""
    parent = {src: -1}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in parent or y not in allowed:
                continue
            parent[y] = x
            if y == dst:
                path = [y]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(y)
    return None


def shortest_chordless_cycle(adj: Sequence[set[int]]) -> list[int] | None:
    """A shortest induced cycle of length >= 4, or None when the graph is chordal."""
    n = len(adj)
    best: list[int] | None = None
    for v in range(n):
        nbrs = sorted(adj[v])
        blocked = set(nbrs) | {v}
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                if y in adj[x]:
                    continue
                allowed = (set(range(n)) - blocked) | {y}
                path = _shortest_path(adj, x, y, allowed)
                if path is None:
                    continue
                cycle = [v] + path
                if best is None or len(cycle) < len(best):
                    best = cycle
                    if len(best) == 4:
                        return best
    return best


def find_chordless_cycle(g: Graph) -> list | None:
    nodes, adj = _normalize(g)
    if _is_peo(adj, mcs_order(adj)[::-1]):
        return None
    cycle = shortest_chordless_cycle(adj)
    return [nodes[v] for v in cycle]


def chordless_paths(
    adj: Sequence[set[int]],
    u: int,
    v: int,
    *,
    allowed: set[int] | None = None,
    max_vertices: int | None = None,
) -> Iterator[list[int]]:
    """Yield every induced u-v path with at least one interior vertex.

    A direct u-v edge, if present, is ignored, so for an edge this yields
    the chordless cycles through it (as paths).  Interior vertices are drawn
    from ``allowed`` when given.
    """
    path = [u]
    on_path = {u}

    def extend() -> Iterator[list[int]]:
        last = path[-1]
        if max_vertices is not None and len(path) + 1 > max_vertices:
            return
        if last != u and v in adj[last]:
            path.append(v)
            yield list(path)
            path.pop()
            return
        for x in sorted(adj[last]):
            if x in on_path or x == v:
                continue
            if allowed is not None and x not in allowed:
                continue
            touching = adj[x] & on_path
            if touching != {last}:
                continue
            path.append(x)
            on_path.add(x)
            yield from extend()
            on_path.discard(x)
            path.pop()

    # ``v`` may only touch the last interior vertex (and ``u`` via the ignored edge)
    for p in extend():
        interior = set(p[1:-1])
        if len(adj[v] & interior) == 1:
            yield p


def chordless_cycles(adj: Sequence[set[int]], *, max_length: int | None = None) -> Iterator[list[int]]:
    """Yield each induced cycle of length >= 4 once, starting at its lowest vertex."""
    for u in range(len(adj)):
        higher = {x for x in range(u + 1, len(adj))}
        for v in sorted(adj[u]):
            if v <= u:
                continue
            for p in chordless_paths(adj, u, v, allowed=higher, max_vertices=max_length):
                if len(p) < 4:
                    continue
                # each cycle is met from both of u's cycle neighbours
                if p[1] < v:
                    yield p
