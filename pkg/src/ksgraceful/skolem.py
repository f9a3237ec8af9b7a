"""k-Skolem sequences, the 2-Skolem pairing census, and nK2 conversions.

A k-Skolem sequence of length n is a list of pairs ``(a_i, b_i)``,
``i = 1..n``, with ``a_i - b_i = k + i - 1`` and all ``2n`` entries distinct
in ``[1, 2n]``.  Pairs are stored in order of ``i``.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from importlib import resources

from .feasibility import FeasibilityVerdict, infeasible, unknown
from .graph import Graph, Labeling, nk2, verify_labeling
from .search import SearchReport

log = logging.getLogger(__name__)

MAX_TWO_SKOLEM_N = 84


class SkolemError(ValueError):
    pass


class UnsupportedRangeError(SkolemError):
    pass


@dataclass(frozen=True)
class SkolemSequence:
    k: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))

    @property
    def n(self) -> int:
        return len(self.pairs)

    def problems(self) -> list[str]:
        out = []
        if self.k < 1:
            out.append(f"k={self.k} must be >= 1")
        for i, (a, b) in enumerate(self.pairs, start=1):
            if a - b != self.k + i - 1:
                out.append(f"pair {i} ({a},{b}) has difference {a - b}, expected {self.k + i - 1}")
        values = [x for pr in self.pairs for x in pr]
        if sorted(values) != list(range(1, 2 * self.n + 1)):
            out.append("entries are not exactly 1..2n")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def validate(self) -> "SkolemSequence":
        probs = self.problems()
        if probs:
            raise SkolemError("; ".join(probs))
        return self

    def lines(self) -> list[str]:
        return [f"{a} {b} {a - b}" for a, b in self.pairs]


# -- backtracking ------------------------------------------------------------

def search_k_skolem(n: int, k: int, *, count_all: bool = False, prune: bool = True,
                    node_limit: int | None = None) -> SearchReport:
    """Exhaustive backtracking over k-Skolem sequences of length ``n``.

    Differences are placed largest first into a bitmask of occupied
    positions.  With ``prune`` the search applies the parity invariant
    ``sum(free positions) == sum(remaining differences) (mod 2)``, which
    every placement preserves, so a violated root closes the search.
    """
    size = 2 * n
    diffs = [k + i - 1 for i in range(n, 0, -1)]   # largest first
    placed: list[tuple[int, int]] = [(0, 0)] * n
    state = {"nodes": 0, "count": 0, "witness": None, "hit": False}

    if prune:
        free_sum = size * (size + 1) // 2
        if (free_sum - sum(diffs)) % 2:
            return SearchReport("exhausted", 0, [], 1)

    def rec(j: int, occ: int) -> bool:
        state["nodes"] += 1
        if node_limit is not None and state["nodes"] > node_limit:
            state["hit"] = True
            return True
        if j == n:
            state["count"] += 1
            if state["witness"] is None:
                state["witness"] = list(placed)
            return not count_all
        d = diffs[j]
        # positions are 1-based; bit (x-1) marks x as occupied
        for b in range(1, size - d + 1):
            m = (1 << (b - 1)) | (1 << (b + d - 1))
            if occ & m:
                continue
            placed[j] = (b + d, b)
            if rec(j + 1, occ | m):
                return True
        return False

    rec(0, 0)
    status = "budget-hit" if state["hit"] else ("found" if (state["count"] and not count_all) else "exhausted")
    witnesses = []
    if state["witness"] is not None:
        seq = SkolemSequence(k, tuple(reversed(state["witness"])))
        witnesses.append(seq.validate())
    return SearchReport(status, state["count"], witnesses, state["nodes"])


def find_k_skolem(n: int, k: int) -> SkolemSequence | None:
    """First k-Skolem sequence of length ``n`` found by backtracking, or None."""
    if n < 1 or k < 1:
        raise SkolemError("n and k must be >= 1")
    rep = search_k_skolem(n, k)
    return rep.witnesses[0] if rep.witnesses else None


def skolem_multiple_of_four(n: int) -> SkolemSequence:
    """Closed-form Skolem sequence for ``n = 4s``."""
    if n < 4 or n % 4:
        raise SkolemError("n must be a positive multiple of 4")
    if n == 4:
        return SkolemSequence(1, ((2, 1), (6, 4), (8, 5), (7, 3)))
    s = n // 4
    pairs = [(8 * s - r + 1, 4 * s + r - 1) for r in range(1, 2 * s + 1)]
    pairs += [(4 * s - r - 1, r) for r in range(1, s - 1)]
    pairs += [(3 * s - r, s + r + 1) for r in range(1, s - 1)]
    pairs += [(3 * s, s - 1), (s + 1, s), (4 * s - 1, 2 * s), (6 * s, 2 * s + 1)]
    return SkolemSequence(1, tuple(sorted(pairs, key=lambda pr: pr[0] - pr[1]))).validate()


def skolem_classic(n: int) -> SkolemSequence | None:
    """A Skolem (1-Skolem) sequence of length ``n``, or None when none exists.

    ``n = 0 (mod 4)`` uses the closed form; other n use backtracking, whose
    parity check settles ``n = 2, 3 (mod 4)`` at the root.
    """
    if n >= 4 and n % 4 == 0:
        return skolem_multiple_of_four(n)
    return find_k_skolem(n, 1)


def k_skolem_length_2k_minus_1(k: int) -> SkolemSequence:
    """Closed-form k-Skolem sequence of length 2k-1."""
    if k < 1:
        raise SkolemError("k must be >= 1")
    pairs = [(2 * k - 2 + 2 * i, k - 1 + i) for i in range(1, k + 1)]
    pairs += [(2 * i - 1, i - k) for i in range(k + 1, 2 * k)]
    return SkolemSequence(k, tuple(pairs))


def k_skolem_feasible(n: int, k: int) -> FeasibilityVerdict:
    """Integrality of ``sum(a_i) = n(5n+2k+1)/4``."""
    params = {"n": n, "k": k}
    if n < 1 or k < 1:
        raise SkolemError("n and k must be >= 1")
    if n * (5 * n + 2 * k + 1) % 4:
        need = "0,3" if k % 2 == 0 else "0,1"
        return infeasible("skolem-sum-integrality",
                          f"sum of larger entries n(5n+2k+1)/4 is not an integer; "
                          f"{'even' if k % 2 == 0 else 'odd'} k needs n = {need} (mod 4)", params)
    return unknown(params)


# -- 2-Skolem pairing census -------------------------------------------------

@dataclass(frozen=True)
class PairingProblem:
    """Pair up ``ground_set`` so that the pair differences are ``target_differences``."""

    r: int
    ground_set: tuple[int, ...] = field(init=False)
    target_differences: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.r < 4:
            raise SkolemError("pairing problem needs r >= 4")
        r = self.r
        ground = sorted({4 * l + 2 for l in range(2, r - 1)} | {2 * l for l in range(2 * r - 1, 3 * r)})
        targets = [2] + [2 * l for l in range(3, r + 1)]
        object.__setattr__(self, "ground_set", tuple(ground))
        object.__setattr__(self, "target_differences", tuple(targets))

    def is_solution(self, pairs) -> bool:
        pairs = list(pairs)
        if any(a <= b for a, b in pairs):
            return False
        vals = sorted(x for pr in pairs for x in pr)
        return (vals == sorted(self.ground_set)
                and sorted(a - b for a, b in pairs) == sorted(self.target_differences))


def pairing_census(r: int, *, fixed=(), limit: int | None = None,
                   max_witnesses: int = 1) -> SearchReport:
    """Count all pairings of the ``r`` problem, optionally forcing some pairs.

    A solution is an unordered set of ``(larger, smaller)`` pairs.  With
    ``limit`` the search stops after that many solutions (status ``found``).
    """
    prob = PairingProblem(r)
    fixed = [tuple(pr) for pr in fixed]
    ground = set(prob.ground_set)
    diffs = list(prob.target_differences)
    used_vals = set()
    for a, b in fixed:
        if a - b not in diffs or a not in ground or b not in ground or a in used_vals or b in used_vals:
            return SearchReport("exhausted", 0, [], 0)
        diffs.remove(a - b)
        used_vals.update((a, b))

    order = sorted(ground - used_vals, reverse=True)
    free = {x: True for x in order}
    diffs.sort(reverse=True)
    avail = [True] * len(diffs)
    chosen: list[tuple[int, int]] = []
    st = {"nodes": 0, "count": 0, "stop": False}
    witnesses = []

    def rec(pos: int):
        st["nodes"] += 1
        while pos < len(order) and not free[order[pos]]:
            pos += 1
        if pos == len(order):
            st["count"] += 1
            if len(witnesses) < max_witnesses:
                witnesses.append(tuple(sorted(fixed + chosen, key=lambda pr: pr[0] - pr[1])))
            if limit is not None and st["count"] >= limit:
                st["stop"] = True
            return
        x = order[pos]
        free[x] = False
        for j, d in enumerate(diffs):
            if not avail[j] or not free.get(x - d, False):
                continue
            avail[j] = False
            free[x - d] = False
            chosen.append((x, x - d))
            rec(pos + 1)
            chosen.pop()
            free[x - d] = True
            avail[j] = True
            if st["stop"]:
                break
        free[x] = True

    rec(0)
    status = "found" if st["stop"] else "exhausted"
    return SearchReport(status, st["count"], witnesses, st["nodes"])


def find_pairing(r: int, node_limit: int | None = None) -> tuple[tuple[int, int], ...] | None:
    """One pairing for ``r``, branching on whichever element or difference has fewest options.

    Faster than :func:`pairing_census` at finding a first solution for large r.
    Returns None when none exists; raises :class:`SkolemError` past ``node_limit``.
    """
    prob = PairingProblem(r)
    free = set(prob.ground_set)
    diffs = set(prob.target_differences)
    chosen: list[tuple[int, int]] = []
    nodes = 0

    def options_for(x):
        return [(max(x, y), min(x, y)) for d in sorted(diffs) for y in (x - d, x + d) if y in free]

    def options_diff(d):
        return [(x, x - d) for x in sorted(free) if x - d in free]

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise SkolemError(f"find_pairing exceeded {node_limit} nodes")
        if not diffs:
            return True
        best = None
        for x in sorted(free):
            opts = options_for(x)
            if best is None or len(opts) < len(best):
                best = opts
                if len(best) <= 1:
                    break
        if len(best) > 1:
            for d in sorted(diffs):
                opts = options_diff(d)
                if len(opts) < len(best):
                    best = opts
                    if len(best) <= 1:
                        break
        for a, b in sorted(best, reverse=True):
            d = a - b
            free.difference_update((a, b))
            diffs.remove(d)
            chosen.append((a, b))
            if rec():
                return True
            chosen.pop()
            diffs.add(d)
            free.update((a, b))
        return False

    if not rec():
        return None
    return tuple(sorted(chosen, key=lambda pr: pr[0] - pr[1]))


# Ad hoc pairs for odd i in {1} u [5, 2r-1], keyed by r; kept as printed and
# validated before use.  Rows that fail validation are repaired by search.
PAIRING_TABLE: dict[int, tuple[tuple[int, int], ...]] = {
    4: ((20, 18), (16, 10), (22, 14)),
    5: ((28, 26), (24, 18), (22, 14), (20, 10)),
    6: ((32, 30), (34, 28), (26, 18), (24, 14), (22, 10)),
    7: ((36, 34), (38, 32), (26, 18), (40, 30), (22, 10), (28, 14)),
    8: ((42, 40), (38, 32), (18, 10), (44, 34), (26, 14), (36, 22), (46, 30)),
    9: ((52, 50), (48, 42), (46, 38), (44, 34), (22, 10), (40, 26), (30, 14), (36, 18)),
    10: ((42, 40), (44, 48), (18, 10), (56, 46), (26, 14), (58, 44), (38, 22), (52, 34), (50, 30)),
    11: ((64, 62), (54, 48), (58, 50), (52, 42), (30, 18), (60, 46), (26, 10), (56, 38), (34, 14), (44, 22)),
}

SMALL_TWO_SKOLEM = {
    1: ((4, 2), (6, 3), (5, 1)),
    2: ((10, 8), (4, 1), (6, 2), (14, 9), (13, 7), (12, 5), (11, 3)),
    3: ((14, 12), (4, 1), (6, 2), (8, 3), (16, 10), (22, 15), (21, 13), (20, 11), (19, 9), (18, 7), (17, 5)),
}


@dataclass(frozen=True)
class TableRepair:
    r: int
    printed: tuple[tuple[int, int], ...]
    kept: tuple[tuple[int, int], ...]
    repaired: tuple[tuple[int, int], ...]


def repair_table_row(r: int, row) -> tuple[tuple[tuple[int, int], ...], TableRepair | None]:
    """Validate a printed pairing row; if it fails, keep its consistent pairs and complete by search."""
    prob = PairingProblem(r)
    row = tuple(tuple(pr) for pr in row)
    if prob.is_solution(row):
        return row, None
    ground = set(prob.ground_set)
    targets = set(prob.target_differences)
    counts: dict[int, int] = {}
    for pr in row:
        for x in pr:
            counts[x] = counts.get(x, 0) + 1
    kept, seen_d = [], set()
    for a, b in row:
        d = a - b
        ok = (a > b and a in ground and b in ground and d in targets and d not in seen_d
              and counts[a] == 1 and counts[b] == 1)
        if ok:
            kept.append((a, b))
            seen_d.add(d)
    rep = pairing_census(r, fixed=kept, limit=1)
    if not rep.witnesses:
        rep = pairing_census(r, limit=1)
    sol = rep.witnesses[0]
    info = TableRepair(r, row, tuple(kept), sol)
    log.info("pairing table row r=%d failed validation; repaired to %s", r, sol)
    return sol, info


def _cached_pairings() -> dict[int, tuple[tuple[int, int], ...]]:
    text = resources.files("ksgraceful").joinpath("data/two_skolem_pairings.json").read_text()
    raw = json.loads(text)["pairings"]
    return {int(r): tuple(tuple(pr) for pr in prs) for r, prs in raw.items()}


def two_skolem_pairing(r: int) -> tuple[tuple[int, int], ...]:
    """Pairs for odd i in {1} u [5, 2r-1]: printed table, then cache, then search."""
    if r in PAIRING_TABLE:
        sol, _ = repair_table_row(r, PAIRING_TABLE[r])
        return sol
    cache = _cached_pairings()
    if r in cache and PairingProblem(r).is_solution(cache[r]):
        return cache[r]
    sol = find_pairing(r)
    if sol is None:
        raise SkolemError(f"no pairing exists for r={r}")
    return sol


def _two_skolem_odd_length(r: int) -> SkolemSequence:
    if r in SMALL_TWO_SKOLEM:
        return SkolemSequence(2, SMALL_TWO_SKOLEM[r]).validate()
    n = 4 * r - 1
    by_i: dict[int, tuple[int, int]] = {}
    for i in [2, 3, 4] + list(range(6, 2 * r - 1, 2)):
        by_i[i] = (2 * i, i - 1)
    for i in range(2 * r, 4 * r):
        by_i[i] = (10 * r - 2 - i, 10 * r - 3 - 2 * i)
    for a, b in two_skolem_pairing(r):
        by_i[a - b - 1] = (a, b)
    return SkolemSequence(2, tuple(by_i[i] for i in range(1, n + 1))).validate()


def two_skolem(n: int) -> SkolemSequence | None:
    """A 2-Skolem sequence of length ``n <= 84``; None when ``n = 1, 2 (mod 4)``."""
    if n < 1:
        raise SkolemError("n must be >= 1")
    if n > MAX_TWO_SKOLEM_N:
        raise UnsupportedRangeError(f"two_skolem is only established for n <= {MAX_TWO_SKOLEM_N}")
    if n % 4 in (1, 2):
        return None
    if n % 4 == 3:
        return _two_skolem_odd_length((n + 1) // 4)
    r = n // 4
    base = _two_skolem_odd_length(r).pairs
    pairs = [base[i - 1] if i <= 2 * r - 1 else (base[i - 1][0] + 2, base[i - 1][1] + 2)
             for i in range(1, 4 * r)]
    pairs.append((6 * r, 2 * r - 1))
    return SkolemSequence(2, tuple(pairs)).validate()


# -- nK2 conversions ---------------------------------------------------------

def skolem_to_nk2_labeling(s: SkolemSequence) -> tuple[Graph, Labeling]:
    """Shift every entry by ``k+n-1``; component i carries edge label ``k+i-1``."""
    s.validate()
    shift = s.k + s.n - 1
    vlabels = []
    for a, b in s.pairs:
        vlabels += [a + shift, b + shift]
    g = nk2(s.n)
    return g, Labeling.from_vertex_labels(g, s.k, vlabels)


def nk2_labeling_to_skolem(lab: Labeling) -> SkolemSequence:
    """Inverse of :func:`skolem_to_nk2_labeling` (components sorted by edge label)."""
    n = len(lab.edge_labels)
    g = nk2(n)
    if len(lab.vertex_labels) != 2 * n:
        raise SkolemError("labeling is not on nK2")
    if not verify_labeling(g, lab):
        raise SkolemError("labeling is not k-super graceful")
    if sorted(lab.edge_labels) != list(range(lab.k, lab.k + n)):
        raise SkolemError(f"edge labels are not the interval [{lab.k}, {lab.k + n - 1}]")
    shift = lab.k + n - 1
    by_edge = {}
    for i, e in enumerate(lab.edge_labels):
        x, y = lab.vertex_labels[2 * i], lab.vertex_labels[2 * i + 1]
        by_edge[e] = (max(x, y) - shift, min(x, y) - shift)
    return SkolemSequence(lab.k, tuple(by_edge[e] for e in sorted(by_edge))).validate()


def nk2_recursive_family(k: int, r: int) -> tuple[Graph, Labeling]:
    """k-super graceful nK2 with ``n = (2k-1)(3^r-1)/2`` and edges ``[k, k+n-1]``.

    Start from the closed-form (2k-1)K2 and repeatedly append the
    (n+k)-super graceful (2n+2k-1)K2, gluing edge intervals.
    """
    from .constructions import compose_disjoint

    if k < 1 or r < 1:
        raise SkolemError("k and r must be >= 1")
    g, lab = skolem_to_nk2_labeling(k_skolem_length_2k_minus_1(k))
    for _ in range(r - 1):
        n = g.q
        h, hl = skolem_to_nk2_labeling(k_skolem_length_2k_minus_1(n + k))
        g, lab = compose_disjoint([(g, lab), (h, hl)])
        g = nk2(g.q)
    return g, lab
