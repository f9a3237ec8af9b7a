"""Exhaustive backtracking over k-super graceful labelings.

Labels are placed from the largest, ``k+p+q-1``, downwards.  The current
largest unused label ``L`` is either the label of an unlabelled vertex, or the
label of an edge ``uw`` with ``u`` already labelled and ``w`` not, in which
case ``w`` receives ``f(u) - L``.  Every labeling is reached along exactly one
path, so exhausted counts are exact.

Symmetry reduction (``SearchConfig.symmetry``):

``none``        labelings are counted as distinct functions.
``components``  identical components (same relative edge list) are
                interchangeable; counts are per orbit.
``twins``       vertices with equal open or equal closed neighbourhoods are
                interchangeable; for K(m,n) these are the two parts.
``all``         both of the above.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .graph import Graph, Labeling, verify_labeling

MODES = ("first", "count", "enumerate")
SYMMETRIES = ("none", "components", "twins", "all")
PARITIES = (None, "all-even-edges", "all-odd-vertices")


@dataclass
class SearchReport:
    """``status``: exhausted, found (stopped at a requested solution) or budget-hit."""

    status: str
    count: int
    witnesses: list = field(default_factory=list)
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def exhausted(self) -> bool:
        return self.status == "exhausted"

    @property
    def found(self) -> bool:
        return self.count > 0

    def summary(self) -> dict:
        return {"status": self.status, "count": self.count, "nodes": self.nodes,
                "witnesses": len(self.witnesses)}


@dataclass(frozen=True)
class EvenCountProfile:
    """Allowed numbers of even vertex labels per vertex part."""

    parts: tuple[tuple[int, ...], ...]
    admissible: frozenset[tuple[int, ...]]


@dataclass(frozen=True)
class SearchConfig:
    k: int
    mode: str = "first"
    symmetry: str = "none"
    node_limit: int = 10**9
    time_limit: float | None = None
    parity: str | None = None
    prune: bool = True
    max_witnesses: int | None = 1
    threads: int = 1
    even_profile: EvenCountProfile | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.symmetry not in SYMMETRIES:
            raise ValueError(f"symmetry must be one of {SYMMETRIES}")
        if self.parity not in PARITIES:
            raise ValueError(f"parity must be one of {PARITIES}")
        if self.node_limit <= 0 or (self.time_limit is not None and self.time_limit <= 0):
            raise ValueError("budgets must be positive")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


class BudgetExceeded(Exception):
    pass


class _Stop(Exception):
    pass


def twin_classes(g: Graph) -> list[list[int]]:
    """Classes of pairwise false twins, then of pairwise true twins (size >= 2 only)."""
    by_open: dict[frozenset, list[int]] = {}
    for v in g.vertices:
        by_open.setdefault(frozenset(g.adjacency[v]), []).append(v)
    classes = [c for c in by_open.values() if len(c) > 1]
    taken = {v for c in classes for v in c}
    by_closed: dict[frozenset, list[int]] = {}
    for v in g.vertices:
        if v not in taken:
            by_closed.setdefault(frozenset(g.adjacency[v]) | {v}, []).append(v)
    classes += [c for c in by_closed.values() if len(c) > 1]
    return sorted(classes)


def component_classes(g: Graph) -> tuple[list[int], list[int]]:
    """Per vertex: its component index, and per component: its class id."""
    comps = g.components()
    comp_of = [0] * g.p
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    shapes: dict[tuple, int] = {}
    cls = []
    for comp in comps:
        pos = {v: i for i, v in enumerate(comp)}
        shape = (len(comp), tuple(sorted(
            (min(pos[u], pos[v]), max(pos[u], pos[v]))
            for u, v in g.edges if u in pos)))
        cls.append(shapes.setdefault(shape, len(shapes)))
    return comp_of, cls


def symmetry_group_order(g: Graph, symmetry: str) -> int:
    """Size of the group quotiented out by ``symmetry`` (it acts freely on labelings)."""
    order = 1
    if symmetry in ("twins", "all"):
        for c in twin_classes(g):
            order *= factorial(len(c))
    if symmetry in ("components", "all"):
        _, cls = component_classes(g)
        for c in set(cls):
            order *= factorial(cls.count(c))
    return order


class _Solver:
    def __init__(self, g: Graph, cfg: SearchConfig):
        self.g, self.cfg = g, cfg
        self.k = cfg.k
        self.top = cfg.k + g.p + g.q - 1
        self.adj = g.adjacency
        self.lab = [0] * g.p
        self.used = bytearray(self.top + 2)
        self.nlabeled = 0
        self.nodes = 0
        self.count = 0
        self.witnesses: list[Labeling] = []
        self.deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit

        self.twin_peers: list[tuple[int, ...]] = [()] * g.p
        if cfg.symmetry in ("twins", "all"):
            for c in twin_classes(g):
                for v in c:
                    self.twin_peers[v] = tuple(c)
        self.comp_sym = cfg.symmetry in ("components", "all")
        self.comp_of, ccls = component_classes(g)
        self.comp_touched = [0] * len(ccls)
        # earlier components of the same class must be touched first
        self.comp_before: list[tuple[int, ...]] = [
            tuple(j for j in range(ci) if ccls[j] == ccls[ci]) for ci in range(len(ccls))
        ]

        self.profile = cfg.even_profile
        if self.profile is not None:
            self.part_of = [-1] * g.p
            for pi, part in enumerate(self.profile.parts):
                for v in part:
                    self.part_of[v] = pi
            self.part_size = [len(pt) for pt in self.profile.parts]
            self.part_even = [0] * len(self.part_size)
            self.part_lab = [0] * len(self.part_size)

        self.odd_vertices = cfg.parity == "all-odd-vertices"
        self.even_edges = cfg.parity == "all-even-edges"

    # -- state changes -------------------------------------------------------

    def _profile_ok(self) -> bool:
        ev, lb, sz = self.part_even, self.part_lab, self.part_size
        for ab in self.profile.admissible:
            if all(ev[i] <= ab[i] and lb[i] - ev[i] <= sz[i] - ab[i] for i in range(len(ab))):
                return True
        return False

    def assign(self, v: int, x: int) -> list[int] | None:
        """Label vertex v with x and every edge to a labelled neighbour; None if inconsistent."""
        self.nodes += 1
        if self.nodes > self.cfg.node_limit:
            raise BudgetExceeded
        if self.deadline is not None and not self.nodes & 0xFFF and time.monotonic() > self.deadline:
            raise BudgetExceeded
        used, lab, k = self.used, self.lab, self.k
        if used[x] or (self.odd_vertices and not x & 1):
            return None
        for z in self.twin_peers[v]:
            if lab[z] and (z < v) != (lab[z] > x):
                return None
        used[x] = 1
        marked = [x]
        for w in self.adj[v]:
            fw = lab[w]
            if fw:
                e = fw - x if fw > x else x - fw
                if e < k or used[e] or (self.even_edges and e & 1):
                    for y in marked:
                        used[y] = 0
                    return None
                used[e] = 1
                marked.append(e)
        lab[v] = x
        self.nlabeled += 1
        self.comp_touched[self.comp_of[v]] += 1
        if self.profile is not None:
            pi = self.part_of[v]
            if pi >= 0:
                self.part_lab[pi] += 1
                self.part_even[pi] += not x & 1
                if not self._profile_ok():
                    self.unassign(v, marked)
                    return None
        return marked

    def unassign(self, v: int, marked: list[int]):
        if self.profile is not None:
            pi = self.part_of[v]
            if pi >= 0:
                self.part_lab[pi] -= 1
                self.part_even[pi] -= not self.lab[v] & 1
        self.comp_touched[self.comp_of[v]] -= 1
        self.nlabeled -= 1
        self.lab[v] = 0
        for y in marked:
            self.used[y] = 0

    # -- search --------------------------------------------------------------

    def _record(self):
        self.count += 1
        cap = self.cfg.max_witnesses if self.cfg.mode != "enumerate" else None
        if cap is None or len(self.witnesses) < cap:
            lab = Labeling.from_vertex_labels(self.g, self.k, self.lab)
            res = verify_labeling(self.g, lab)
            if not res:
                raise AssertionError(f"solver produced an invalid labeling: {res.violations}")
            self.witnesses.append(lab)
        if self.cfg.mode == "first":
            raise _Stop

    def rec(self, L: int):
        used = self.used
        while used[L]:
            L -= 1
        if self.nlabeled == self.g.p:
            self._record()
            return
        lab, adj, g = self.lab, self.adj, self.g
        top_block = self.cfg.prune and L > self.top - self.k

        if not (self.odd_vertices and not L & 1):
            for v in range(g.p):
                if lab[v]:
                    continue
                if top_block and any(lab[w] for w in adj[v]):
                    continue
                if self.comp_sym and not self.comp_touched[self.comp_of[v]]:
                    if any(not self.comp_touched[c] for c in self.comp_before[self.comp_of[v]]):
                        continue
                marked = self.assign(v, L)
                if marked is not None:
                    self.rec(L - 1)
                    self.unassign(v, marked)

        if top_block or (self.even_edges and L & 1):
            return
        for u in range(g.p):
            x = lab[u] - L
            if x < self.k or used[x]:
                continue
            for w in adj[u]:
                if lab[w]:
                    continue
                marked = self.assign(w, x)
                if marked is not None:
                    self.rec(L - 1)
                    self.unassign(w, marked)

    def first_level(self) -> list[int]:
        """Vertices that may carry the largest label, after symmetry filtering."""
        out = []
        for v in range(self.g.p):
            if self.comp_sym and self.comp_before[self.comp_of[v]]:
                continue
            if any(z < v for z in self.twin_peers[v]):
                continue
            if self.odd_vertices and not self.top & 1:
                continue
            out.append(v)
        return out

    def run(self, forced: Sequence[tuple[int, int]] = ()) -> SearchReport:
        t0 = time.monotonic()
        status = "exhausted"
        try:
            ok = True
            for v, x in forced:
                if self.assign(v, x) is None:
                    ok = False
                    break
            if ok:
                self.rec(self.top)
        except _Stop:
            status = "found"
        except BudgetExceeded:
            status = "budget-hit"
        return SearchReport(status, self.count, self.witnesses, self.nodes, time.monotonic() - t0)


def _run_branch(args):
    g, cfg, forced = args
    return _Solver(g, cfg).run(forced)


def solve(g: Graph, cfg: SearchConfig) -> SearchReport:
    """Search for k-super graceful labelings of ``g`` per ``cfg``."""
    if cfg.threads <= 1:
        return _Solver(g, cfg).run()
    t0 = time.monotonic()
    solver = _Solver(g, cfg)
    branches = [[(v, solver.top)] for v in solver.first_level()]
    total = SearchReport("exhausted", 0, [], 0)
    with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
        for rep in pool.map(_run_branch, [(g, cfg, f) for f in branches]):
            total.count += rep.count
            total.nodes += rep.nodes
            cap = cfg.max_witnesses if cfg.mode != "enumerate" else None
            for w in rep.witnesses:
                if cap is None or len(total.witnesses) < cap:
                    total.witnesses.append(w)
            if rep.status == "budget-hit":
                total.status = "budget-hit"
            elif rep.status == "found" and total.status == "exhausted":
                total.status = "found"
    if cfg.mode == "first" and total.count > 1:
        total.count = 1
        total.witnesses = total.witnesses[:1]
    total.elapsed = time.monotonic() - t0
    return total


# -- certification helpers ---------------------------------------------------

@dataclass
class Certification:
    graph: str
    reports: dict[int, SearchReport]
    expected: frozenset[int] | None = None

    @property
    def conclusive(self) -> bool:
        return all(r.status != "budget-hit" for r in self.reports.values())

    @property
    def feasible(self) -> frozenset[int]:
        return frozenset(k for k, r in self.reports.items() if r.count > 0)

    @property
    def matches(self) -> bool | None:
        """True/False against ``expected``; None when some k hit the budget."""
        if not self.conclusive:
            return None
        if self.expected is None:
            return True
        return self.feasible == self.expected


def certify_nonexistence(g: Graph, ks: Sequence[int], expected: Sequence[int] | None = None,
                         **cfg_kwargs) -> Certification:
    """Decide each offset in ``ks`` exhaustively (find-first per k)."""
    cfg_kwargs.setdefault("symmetry", "all")
    reports = {k: solve(g, SearchConfig(k=k, mode="first", **cfg_kwargs)) for k in ks}
    return Certification(g.name, reports, None if expected is None else frozenset(expected))


def kmn_search(m: int, n: int, k: int, *, mode: str = "count", use_parity: bool = True,
               **cfg_kwargs) -> SearchReport:
    """Solve K(m,n) at offset k with part symmetry broken and parity-profile pruning.

    Counts are per orbit of within-part permutations.
    """
    from .feasibility import FeasibilityVerdict, kmn_parity_profile
    from .graph import complete_bipartite

    g = complete_bipartite(m, n)
    profile = None
    if use_parity and 2 <= m <= n:
        prof = kmn_parity_profile(m, n, k)
        if isinstance(prof, FeasibilityVerdict):
            return SearchReport("exhausted", 0, [], 0)
        profile = EvenCountProfile((tuple(range(m)), tuple(range(m, m + n))), prof.admissible_ab)
    cfg_kwargs.setdefault("symmetry", "twins")
    return solve(g, SearchConfig(k=k, mode=mode, even_profile=profile, **cfg_kwargs))
