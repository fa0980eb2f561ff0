"""Triangulations of a single cycle.

The triangulations of a k-cycle are its chordal completions with exactly
k - 3 chords, i.e. the triangulations of a convex k-gon.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Collection, Hashable, Sequence

MAX_ENUMERATION_LENGTH = 12


class CycleTooLongError(ValueError):
    pass


def triangulations_of_cycle(k: int, max_length: int = MAX_ENUMERATION_LENGTH) -> list[frozenset[tuple[int, int]]]:
    """All triangulations of the cycle 0-1-...-(k-1)-0 as sets of chords."""
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if k > max_length:
        raise CycleTooLongError(f"k={k} exceeds the enumeration budget {max_length}")

    @lru_cache(maxsize=None)
    def polygon(i: int, j: int) -> tuple[frozenset, ...]:
        # vertices i..j with (i, j) as the base side
        if j - i < 2:
            return (frozenset(),)
        out = []
        for m in range(i + 1, j):
            own = frozenset(c for c in ((i, m), (m, j)) if c[1] - c[0] > 1)
            for left in polygon(i, m):
                for right in polygon(m, j):
                    out.append(own | left | right)
        return tuple(out)

    return list(polygon(0, k - 1))


def count_proper_triangulations(
    cycle: Sequence[Hashable], forbidden: Collection[tuple]
) -> int:
    """Number of triangulations of ``cycle`` that use no chord from ``forbidden``.

    ``forbidden`` holds vertex pairs in either orientation.  Zero means the
    cycle is forbidden.
    """
    k = len(cycle)
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    bad = {frozenset(p) for p in forbidden}

    def ok(i: int, j: int) -> bool:
        if j - i == 1 or (i == 0 and j == k - 1):
            return True
        return frozenset((cycle[i], cycle[j])) not in bad

    count = [[0] * k for _ in range(k)]
    for i in range(k - 1):
        count[i][i + 1] = 1
    for span in range(2, k):
        for i in range(0, k - span):
            j = i + span
            total = 0
            for m in range(i + 1, j):
                if ok(i, m) and ok(m, j):
                    total += count[i][m] * count[m][j]
            count[i][j] = total
    return count[0][k - 1]


def cycle_has_proper_triangulation(cycle: Sequence[Hashable], forbidden: Collection[tuple]) -> int:
    return count_proper_triangulations(cycle, forbidden)
