"""Brute-force reference implementations.

Deliberately naive and independent of the package's search code: they work
from the definitions (induced cycles, all subsets, all simple paths).
"""

from __future__ import annotations

from itertools import combinations
from math import comb


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def masks_from_edges(n, edges):
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def has_induced_long_cycle(n, adj) -> bool:
    """Some vertex subset of size >= 4 induces a cycle (connected, 2-regular)."""
    for size in range(4, n + 1):
        for sub in combinations(range(n), size):
            mask = 0
            for v in sub:
                mask |= 1 << v
            if any(bin(adj[v] & mask).count("1") != 2 for v in sub):
                continue
            # 2-regular: it is a single cycle iff connected
            seen = 1 << sub[0]
            frontier = seen
            while frontier:
                nxt = 0
                for v in sub:
                    if frontier >> v & 1:
                        nxt |= adj[v] & mask
                frontier = nxt & ~seen
                seen |= nxt
            if seen == mask:
                return True
    return False


def chordal_by_elimination(n, adj) -> bool:
    """Repeatedly delete a simplicial vertex; chordal iff that empties the graph."""
    remaining = (1 << n) - 1
    while remaining:
        for v in range(n):
            if not remaining >> v & 1:
                continue
            nb = adj[v] & remaining
            if all((nb & ~adj[w] & ~(1 << w)) == 0 for w in range(n) if nb >> w & 1):
                remaining &= ~(1 << v)
                break
        else:
            return False
    return True


def all_completions(inst) -> set[frozenset]:
    """Every chordal edge set E* with E <= E* and E* disjoint from F."""
    free = inst.free_pairs()
    base = masks_from_edges(inst.n, inst.edges)
    out = set()
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            adj = list(base)
            for u, v in extra:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            if chordal_by_elimination(inst.n, adj):
                out.add(inst.edges | frozenset(extra))
    return out


def has_completion(inst) -> bool:
    """Subsets of allowed non-edges in increasing cardinality; stop at the first chordal one."""
    free = inst.free_pairs()
    base = masks_from_edges(inst.n, inst.edges)
    for r in range(len(free) + 1):
        for extra in combinations(free, r):
            adj = list(base)
            for u, v in extra:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            if chordal_by_elimination(inst.n, adj):
                return True
    return False


def _simple_paths(adj_sets, u, v):
    path = [u]

    def go():
        last = path[-1]
        for x in adj_sets[last]:
            if x in path:
                continue
            if x == v:
                yield path + [v]
                continue
            path.append(x)
            yield from go()
            path.pop()

    yield from go()


def _is_induced_path(adj_sets, p, ignore=None):
    for i in range(len(p)):
        for j in range(i + 2, len(p)):
            if ignore and {p[i], p[j]} == set(ignore):
                continue
            if p[j] in adj_sets[p[i]]:
                return False
    return True


def f_paths(inst, u, v):
    """All chordless u..v paths with >= 1 interior vertex, all interior in F(u) | F(v)."""
    adj = inst.neighbors
    fu, fv = inst.conflict_map[u], inst.conflict_map[v]
    out = []
    for p in _simple_paths(adj, u, v):
        if len(p) < 3:
            continue
        if not _is_induced_path(adj, p):
            continue
        if all(t in fu or t in fv for t in p[1:-1]):
            out.append(p)
    return out


def g_cycles(inst, u, v):
    """All chordless cycles u, w, t1..tk, v (k >= 1) with w not in F(v), t_i in F(u) | F(v)."""
    adj = inst.neighbors
    fu, fv = inst.conflict_map[u], inst.conflict_map[v]
    out = []
    for p in _simple_paths(adj, u, v):
        if len(p) < 4:
            continue
        # p = u, w, t1..tk, v closes with the edge v-u
        if not _is_induced_path(adj, p, ignore=(u, v)):
            continue
        w, ts = p[1], p[2:-1]
        if w in fv:
            continue
        if all(t in fu or t in fv for t in ts):
            out.append(p)
    return out


def cycle_triangulations_bruteforce(k):
    """(k-3)-subsets of chords that make the k-cycle chordal."""
    sides = [(i, (i + 1) % k) for i in range(k)]
    chords = [(i, j) for i in range(k) for j in range(i + 2, k) if not (i == 0 and j == k - 1)]
    out = []
    for chosen in combinations(chords, k - 3):
        adj = masks_from_edges(k, sides + list(chosen))
        if chordal_by_elimination(k, adj):
            out.append(frozenset(chosen))
    return out
