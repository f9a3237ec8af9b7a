"""Necessary conditions for k-super gracefulness, as fast pre-search filters.

Every filter answers ``infeasible`` (with the rule that fired) or
``unknown``; none of them ever claims a labeling exists.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graph import Graph, independence_number

INFEASIBLE = "infeasible"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class FeasibilityVerdict:
    status: str
    rule: str = ""
    reason: str = ""
    params: Mapping = field(default_factory=dict)

    @property
    def infeasible(self) -> bool:
        return self.status == INFEASIBLE

    def __str__(self):
        if self.status == UNKNOWN:
            return "unknown (no necessary condition violated)"
        return f"infeasible [{self.rule}] {self.reason}"


def infeasible(rule: str, reason: str, params: Mapping) -> FeasibilityVerdict:
    return FeasibilityVerdict(INFEASIBLE, rule, reason, dict(params))


def unknown(params: Mapping) -> FeasibilityVerdict:
    return FeasibilityVerdict(UNKNOWN, "", "", dict(params))


def first_infeasible(verdicts, params) -> FeasibilityVerdict:
    for v in verdicts:
        if v.infeasible:
            return v
    return unknown(params)


def check_k_range(g: Graph, k: int) -> FeasibilityVerdict:
    """``1 <= k <= alpha(G)``."""
    params = {"graph": g.name, "k": k}
    if k < 1:
        return infeasible("k-range", f"k={k} < 1", params)
    alpha = independence_number(g).alpha
    if k > alpha:
        return infeasible("k-range", f"k={k} exceeds the independence number {alpha}", params)
    return unknown(params)


def check_nk2(n: int, k: int) -> FeasibilityVerdict:
    params = {"n": n, "k": k}
    if (3 * n * (2 * k + 3 * n - 1) // 2) % 2:
        return infeasible("nk2-label-sum", "label sum 3n(2k+3n-1)/2 is odd", params)
    if n < 2 * k - 1:
        return infeasible("nk2-size", f"n={n} < 2k-1={2 * k - 1}", params)
    if n % 4 == 2:
        return infeasible("nk2-residue", "n = 2 (mod 4) admits no k", params)
    if n % 4 == 1 and k % 2 == 0:
        return infeasible("nk2-residue", "n = 1 (mod 4) requires odd k", params)
    if n % 4 == 3 and k % 2 == 1:
        return infeasible("nk2-residue", "n = 3 (mod 4) requires even k", params)
    if k == n and n >= 2:
        return infeasible("nk2-k-equals-n", "nK2 is n-super graceful only for n = 1", params)
    return unknown(params)


def check_even_edge_nk2(n: int, k: int) -> FeasibilityVerdict:
    """All-even edge labels on nK2 need n=3 (4) with even k, n=0 (4), or n=1 (4) with odd k."""
    params = {"n": n, "k": k}
    r = n % 4
    if (r == 3 and k % 2 == 0) or r == 0 or (r == 1 and k % 2 == 1):
        return unknown(params)
    return infeasible("nk2-even-edges", f"no admissible parity split for n={n}, k={k}", params)


def check_all_odd_vertices(g: Graph, k: int) -> FeasibilityVerdict:
    params = {"graph": g.name, "k": k}
    if g.p != g.q + 1:
        return infeasible("odd-vertices-shape", f"needs a (q+1,q)-graph, got p={g.p}, q={g.q}", params)
    if k != 1:
        return infeasible("odd-vertices-offset", "all-odd vertex labels force k = 1", params)
    return unknown(params)


def check_all_odd_edges(g: Graph, k: int) -> FeasibilityVerdict:
    params = {"graph": g.name, "k": k}
    if not g.is_star():
        return infeasible("odd-edges-star", "all-odd edge labels force a star", params)
    if k != 1:
        return infeasible("odd-edges-offset", "all-odd edge labels force k = 1", params)
    return unknown(params)


@dataclass(frozen=True)
class ParityProfile:
    """Admissible counts of even vertex labels per part of K(m,n)."""

    m: int
    n: int
    k: int
    admissible_ab: frozenset[tuple[int, int]]


def kmn_parity_profile(m: int, n: int, k: int) -> ParityProfile | FeasibilityVerdict:
    """Even-label counts ``(a, b)`` on the parts of K(m,n) allowed by label parity.

    ``a`` and ``b`` count even vertex labels in the parts of size m and n.
    """
    if not 2 <= m <= n:
        raise ValueError("need n >= m >= 2")
    params = {"m": m, "n": n, "k": k}
    cand: list[tuple[float, float]] = []
    if m % 2 == 0 and n % 2 == 0:
        cand = [(m / 2, n / 2), ((m - 2) / 2, (n - 2) / 2)]
    elif k % 2 == 1:
        if m % 2:
            cand += [((m - 1) / 2, b) for b in range(n + 1)]
        if n % 2:
            cand += [(a, (n - 1) / 2) for a in range(m + 1)]
    else:
        cand = [((m - 2) / 2, (n - 3) / 2), ((m - 3) / 2, (n - 2) / 2),
                (m / 2, (n + 1) / 2), ((m + 1) / 2, n / 2)]
    ab = frozenset((int(a), int(b)) for a, b in cand
                   if float(a).is_integer() and float(b).is_integer() and 0 <= a <= m and 0 <= b <= n)
    if not ab:
        why = ("m, n odd force odd k" if m % 2 and n % 2 else "no integral even-label split")
        return infeasible("kmn-parity", why, params)
    return ParityProfile(m, n, k, ab)


def check_k2n(n: int, k: int) -> FeasibilityVerdict:
    """K(2,n) is k-super graceful only for k in {1, 2, n}."""
    params = {"n": n, "k": k}
    if n >= 2 and k not in (1, 2, n):
        return infeasible("k2n-offsets", f"K(2,{n}) admits only k in {{1, 2, {n}}}", params)
    return unknown(params)


def check_kmn(m: int, n: int, k: int) -> FeasibilityVerdict:
    """All closed-form rules for K(m,n), ``n >= m >= 2``."""
    params = {"m": m, "n": n, "k": k}
    checks = []
    if k < 1 or k > n:
        checks.append(infeasible("k-range", f"k={k} outside [1, alpha={n}]", params))
    prof = kmn_parity_profile(m, n, k)
    if isinstance(prof, FeasibilityVerdict):
        checks.append(prof)
    if m == 2:
        checks.append(check_k2n(n, k))
    return first_infeasible(checks, params)


def check_complete_minus_edge(order: int, k: int) -> FeasibilityVerdict:
    """K(1,...,1,2) of order r+2 >= 4 is k-super graceful only for r=2, k=1."""
    params = {"order": order, "k": k}
    if order >= 4 and not (order == 4 and k == 1):
        return infeasible("k11-2", "K(1,...,1,2) is k-super graceful only at order 4 with k = 1", params)
    return unknown(params)


def check_triangle_copies(copies: int, k: int) -> FeasibilityVerdict:
    """``cC3`` at offset ``k``: 2C3 never; cC3 at k = c >= 2 never."""
    params = {"copies": copies, "k": k}
    if copies == 2:
        return infeasible("2c3", "2C3 is not k-super graceful for any k", params)
    if copies >= 2 and k == copies:
        return infeasible("kc3", "kC3 is k-super graceful only for k = 1", params)
    return unknown(params)


def c3_edge_sum_filter(g: Graph, partial: Mapping[int, int]) -> FeasibilityVerdict:
    """Each fully edge-labelled triangle must have largest edge = sum of the other two.

    ``partial`` maps edge index to label.
    """
    idx = g.edge_index()
    for a, b, c in g.triangles():
        es = [idx[(a, b)], idx[(b, c)], idx[(a, c)]]
        if all(e in partial for e in es):
            x, y, z = sorted(partial[e] for e in es)
            if x + y != z:
                return infeasible("triangle-sum", f"triangle {a},{b},{c} has edges {x},{y},{z}",
                                  {"triangle": (a, b, c)})
    return unknown({"graph": g.name})


# -- structural recognition for the aggregate check --------------------------

def _bipartition(g: Graph):
    side = [-1] * g.p
    for s in range(g.p):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return None
    return side


def recognise(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """Identify the graph as a family the closed-form rules speak about."""
    degs = [g.degree(v) for v in g.vertices]
    if g.p == 2 * g.q and all(d == 1 for d in degs):
        return "nK2", (g.q,)
    comps = g.components()
    if len(comps) == 1 and g.p >= 2:
        side = _bipartition(g)
        if side is not None:
            a = side.count(0)
            b = g.p - a
            if a * b == g.q:
                return "complete_bipartite", (min(a, b), max(a, b))
        if g.p >= 4 and g.q == g.p * (g.p - 1) // 2 - 1:
            return "complete_minus_edge", (g.p,)
    if all(len(c) == 3 for c in comps) and g.q == g.p:
        return "triangles", (len(comps),)
    return None


def check_all(g: Graph, k: int, mode: str = "plain") -> list[FeasibilityVerdict]:
    """Run every rule that applies to ``g`` under the labeling restriction ``mode``."""
    out = [check_k_range(g, k)]
    fam = recognise(g)
    if fam is not None:
        name, prm = fam
        if name == "nK2":
            out.append(check_nk2(prm[0], k))
            if mode == "all-even-edges":
                out.append(check_even_edge_nk2(prm[0], k))
        elif name == "complete_bipartite" and prm[0] >= 2:
            out.append(check_kmn(prm[0], prm[1], k))
        elif name == "complete_minus_edge":
            out.append(check_complete_minus_edge(prm[0], k))
        elif name == "triangles":
            out.append(check_triangle_copies(prm[0], k))
    if mode == "all-odd-vertices":
        out.append(check_all_odd_vertices(g, k))
    elif mode == "all-odd-edges":
        out.append(check_all_odd_edges(g, k))
    return out


def feasibility(g: Graph, k: int, mode: str = "plain") -> FeasibilityVerdict:
    return first_infeasible(check_all(g, k, mode), {"graph": g.name, "k": k, "mode": mode})
