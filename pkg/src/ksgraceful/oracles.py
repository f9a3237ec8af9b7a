"""Slow, obviously-correct reference implementations used to cross-check the fast code.

Nothing here shares logic with :mod:`ksgraceful.search` or the census.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations, product

from .graph import Graph


def brute_force_labelings(g: Graph, k: int) -> int:
    """Count k-super graceful labelings by assigning vertices in index order."""
    top = k + g.p + g.q - 1
    earlier = [[w for w in g.adjacency[v] if w < v] for v in range(g.p)]
    lab = [0] * g.p
    used: set[int] = set()
    count = 0

    def rec(v: int):
        nonlocal count
        if v == g.p:
            count += 1
            return
        for x in range(k, top + 1):
            if x in used:
                continue
            new = [x]
            ok = True
            for w in earlier[v]:
                e = abs(lab[w] - x)
                if e < k or e in used or e in new:
                    ok = False
                    break
                new.append(e)
            if not ok:
                continue
            used.update(new)
            lab[v] = x
            rec(v + 1)
            used.difference_update(new)

    rec(0)
    return count


def brute_force_alpha(g: Graph) -> int:
    for size in range(g.p, 0, -1):
        for sub in combinations(range(g.p), size):
            s = set(sub)
            if not any(u in s and v in s for u, v in g.edges):
                return size
    return 0


def perfect_matchings(items: list[int]):
    if not items:
        yield []
        return
    x, rest = items[0], items[1:]
    for i, y in enumerate(rest):
        for m in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(y, x)] + m


def brute_force_pairings(ground: list[int], diffs: list[int]) -> int:
    """Enumerate every perfect matching of ``ground`` and keep those with the right differences."""
    target = Counter(diffs)
    return sum(Counter(abs(a - b) for a, b in m) == target for m in perfect_matchings(sorted(ground)))


def brute_force_k_skolem(n: int, k: int) -> int:
    """Count k-Skolem sequences of length n by trying every position tuple."""
    size = 2 * n
    choices = [range(1, size - (k + i) + 1) for i in range(n)]
    count = 0
    for starts in product(*choices):
        seen = set()
        for i, b in enumerate(starts):
            seen.add(b)
            seen.add(b + k + i)
        count += len(seen) == size
    return count
