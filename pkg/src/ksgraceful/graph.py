"""Graph and labeling data model plus the authoritative labeling verifier.

Vertices are dense integers ``0..p-1`` and edges keep insertion order, so a
construction can address "the i-th vertex of the path" by index.

Vertex numbering used by the family builders
--------------------------------------------
``nK2``                component ``i`` (0-based) is the edge ``(2i, 2i+1)``.
``cycle``              ``0..n-1`` around the cycle; edges ``(i, i+1)`` then ``(n-1, 0)``.
``path``               ``0..n-1`` along the path; edges ``(i, i+1)``.
``star``               centre ``0``, leaves ``1..q``; edges ``(0, i)``.
``complete_bipartite`` part A is ``0..m-1``, part B is ``m..m+n-1``; edges
                       ``(a, b)`` with ``a`` outer, ``b`` inner.
``complete_multipartite`` parts laid out consecutively; edges in lexicographic
                       order over vertex pairs from different parts.
``cycle_plus_path``    the ``cycle(n)`` block on ``0..n-1`` then the ``path(m)``
                       block on ``n..n+m-1``.
``path_plus_path``     ``path(a)`` on ``0..a-1`` then ``path(b)`` on ``a..a+b-1``.
``nCm``                ``n`` copies of ``cycle(m)``, copy ``i`` on ``i*m..i*m+m-1``.

Disjoint unions (``disjoint_union``) concatenate blocks in argument order.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Malformed graph or out-of-range family parameters."""


class LabelingStructureError(ValueError):
    """A labeling does not assign every vertex and edge of its graph."""


@dataclass(frozen=True)
class Graph:
    p: int
    edges: tuple[tuple[int, int], ...]
    name: str = ""
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if not edges:
            raise GraphError("a graph needs at least one edge")
        seen = set()
        adj: list[list[int]] = [[] for _ in range(self.p)]
        for u, v in edges:
            if not (0 <= u < self.p and 0 <= v < self.p):
                raise GraphError(f"edge ({u}, {v}) references a vertex outside 0..{self.p - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        isolated = [v for v in range(self.p) if not adj[v]]
        if isolated:
            raise GraphError(f"isolated vertices are not allowed: {isolated}")
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.p)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def components(self) -> list[list[int]]:
        """Vertex lists of the connected components, ordered by smallest vertex."""
        seen = [False] * self.p
        comps = []
        for s in range(self.p):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    @property
    def component_count(self) -> int:
        return len(self.components())

    def triangles(self) -> list[tuple[int, int, int]]:
        adj = [set(a) for a in self.adjacency]
        out = []
        for u, v in self.edges:
            a, b = min(u, v), max(u, v)
            for w in adj[a] & adj[b]:
                if w > b:
                    out.append((a, b, w))
        return sorted(out)

    def edge_index(self) -> dict[tuple[int, int], int]:
        idx = {}
        for i, (u, v) in enumerate(self.edges):
            idx[(u, v)] = i
            idx[(v, u)] = i
        return idx

    def is_star(self) -> bool:
        if self.p != self.q + 1:
            return False
        return any(self.degree(v) == self.q for v in self.vertices)


@dataclass(frozen=True)
class Labeling:
    """Labels of a graph: ``vertex_labels[v]`` and ``edge_labels[i]`` for edge ``i``."""

    k: int
    vertex_labels: tuple[int, ...]
    edge_labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_labels", tuple(self.vertex_labels))
        object.__setattr__(self, "edge_labels", tuple(self.edge_labels))

    @classmethod
    def from_vertex_labels(cls, g: Graph, k: int, vertex_labels: Sequence[int]) -> "Labeling":
        """Induce edge labels as absolute differences."""
        vl = tuple(vertex_labels)
        if len(vl) != g.p:
            raise LabelingStructureError(f"expected {g.p} vertex labels, got {len(vl)}")
        return cls(k, vl, tuple(abs(vl[u] - vl[v]) for u, v in g.edges))

    def all_labels(self) -> list[int]:
        return list(self.vertex_labels) + list(self.edge_labels)

    @property
    def max_label(self) -> int:
        return max(self.all_labels())

    def edge_label_set(self) -> set[int]:
        return set(self.edge_labels)


@dataclass(frozen=True)
class Violation:
    kind: str
    where: str
    detail: str

    def __str__(self):
        return f"{self.kind} at {self.where}: {self.detail}"


@dataclass(frozen=True)
class VerificationResult:
    valid: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self):
        return self.valid


def verify_labeling(g: Graph, lab: Labeling) -> VerificationResult:
    """Check that ``lab`` is a k-super graceful labeling of ``g``.

    Raises LabelingStructureError when some vertex or edge has no label; an
    assignment that is complete but wrong yields ``valid=False`` with the
    offending labels and edges listed.
    """
    if len(lab.vertex_labels) != g.p or len(lab.edge_labels) != g.q:
        raise LabelingStructureError(
            f"labeling covers {len(lab.vertex_labels)} vertices / {len(lab.edge_labels)} edges, "
            f"graph has {g.p} / {g.q}"
        )
    for i, x in enumerate(lab.vertex_labels):
        if x is None:
            raise LabelingStructureError(f"vertex {i} has no label")
    for i, x in enumerate(lab.edge_labels):
        if x is None:
            raise LabelingStructureError(f"edge {i} has no label")

    violations: list[Violation] = []
    if lab.k < 1:
        violations.append(Violation("offset", "k", f"k={lab.k} must be >= 1"))
    lo, hi = lab.k, lab.k + g.p + g.q - 1

    for i, (u, v) in enumerate(g.edges):
        want = abs(lab.vertex_labels[u] - lab.vertex_labels[v])
        if lab.edge_labels[i] != want:
            violations.append(Violation(
                "difference", f"edge {i} ({u},{v})",
                f"label {lab.edge_labels[i]} != |{lab.vertex_labels[u]} - {lab.vertex_labels[v]}| = {want}",
            ))

    owners: dict[int, list[str]] = {}
    for v, x in enumerate(lab.vertex_labels):
        owners.setdefault(x, []).append(f"vertex {v}")
    for i, x in enumerate(lab.edge_labels):
        owners.setdefault(x, []).append(f"edge {i}")
    for x in sorted(owners):
        if not lo <= x <= hi:
            violations.append(Violation("range", ", ".join(owners[x]), f"label {x} outside [{lo}, {hi}]"))
        if len(owners[x]) > 1:
            violations.append(Violation("repeat", ", ".join(owners[x]), f"label {x} used {len(owners[x])} times"))
    missing = [x for x in range(lo, hi + 1) if x not in owners]
    if missing:
        violations.append(Violation("missing", "labels", f"unused labels {missing}"))
    return VerificationResult(not violations, tuple(violations))


def is_graceful(g: Graph, vertex_labels: Sequence[int]) -> bool:
    """Classic graceful labeling: injective into [0, q], edge differences onto [1, q]."""
    if len(vertex_labels) != g.p or len(set(vertex_labels)) != g.p:
        return False
    if any(not 0 <= x <= g.q for x in vertex_labels):
        return False
    diffs = sorted(abs(vertex_labels[u] - vertex_labels[v]) for u, v in g.edges)
    return diffs == list(range(1, g.q + 1))


# -- independence number -----------------------------------------------------

@dataclass(frozen=True)
class IndependenceCertificate:
    alpha: int
    witness: tuple[int, ...]


def independence_number(g: Graph) -> IndependenceCertificate:
    """Exact independence number by branch and bound on neighbourhood bitmasks."""
    nbr = [0] * g.p
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    best = [0, 0]  # size, mask

    def branch(cand: int, chosen: int, size: int):
        if size + cand.bit_count() <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        # vertex of minimum degree within the candidate set: some maximum
        # independent set contains it or one of its candidate neighbours
        v, vdeg = -1, 1 << 30
        c = cand
        while c:
            low = c & -c
            w = low.bit_length() - 1
            d = (nbr[w] & cand).bit_count()
            if d < vdeg:
                v, vdeg = w, d
            c ^= low
        options = (nbr[v] & cand) | (1 << v)
        while options:
            low = options & -options
            w = low.bit_length() - 1
            branch(cand & ~nbr[w] & ~low, chosen | low, size + 1)
            cand &= ~low
            options ^= low
            if size + cand.bit_count() <= best[0]:
                return

    branch((1 << g.p) - 1, 0, 0)
    witness = tuple(v for v in range(g.p) if best[1] >> v & 1)
    return IndependenceCertificate(best[0], witness)


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return not any(u in vs and v in vs for u, v in g.edges)


# -- family builders ---------------------------------------------------------

def nk2(n: int) -> Graph:
    if n < 1:
        raise GraphError("nK2 needs n >= 1")
    return Graph(2 * n, tuple((2 * i, 2 * i + 1) for i in range(n)), f"{n}K2")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)), f"C{n}")


def path(n: int) -> Graph:
    if n < 2:
        raise GraphError("a path needs n >= 2 vertices")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), f"P{n}")


def star(q: int) -> Graph:
    if q < 1:
        raise GraphError("a star needs q >= 1 leaves")
    return Graph(q + 1, tuple((0, i) for i in range(1, q + 1)), f"K(1,{q})")


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphError("K(m,n) needs m, n >= 1")
    return Graph(m + n, tuple((a, m + b) for a in range(m) for b in range(n)), f"K({m},{n})")


def complete_multipartite(*parts: int) -> Graph:
    if len(parts) < 2 or any(s < 1 for s in parts):
        raise GraphError("complete multipartite graph needs >= 2 nonempty parts")
    owner = [i for i, s in enumerate(parts) for _ in range(s)]
    edges = tuple((u, v) for u, v in combinations(range(len(owner)), 2) if owner[u] != owner[v])
    return Graph(len(owner), edges, "K(" + ",".join(map(str, parts)) + ")")


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.p
    return Graph(offset, tuple(edges), "+".join(h.name or "G" for h in graphs))


def cycle_plus_path(n: int, m: int) -> Graph:
    return disjoint_union(cycle(n), path(m))


def path_plus_path(a: int, b: int) -> Graph:
    return disjoint_union(path(a), path(b))


def n_cycles(n: int, m: int) -> Graph:
    if n < 1:
        raise GraphError("need at least one cycle")
    g = disjoint_union(*[cycle(m)] * n)
    return Graph(g.p, g.edges, f"{n}C{m}")


_FAMILIES = {
    "nK2": (nk2, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "complete_multipartite": (complete_multipartite, None),
    "cycle_plus_path": (cycle_plus_path, 2),
    "path_plus_path": (path_plus_path, 2),
    "nCm": (n_cycles, 2),
}


def family_names() -> list[str]:
    return sorted(_FAMILIES)


def graph_family(name: str, *params: int) -> Graph:
    """Build a named family graph; see the module docstring for vertex order."""
    try:
        builder, arity = _FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(family_names())}") from None
    if arity is not None and len(params) != arity:
        raise GraphError(f"family {name} takes {arity} parameter(s), got {len(params)}")
    g = builder(*(int(x) for x in params))
    return g


_SHORTHAND = [
    (re.compile(r"^(\d+)K2$"), lambda m: ("nK2", (int(m[1]),))),
    (re.compile(r"^(\d+)C(\d+)$"), lambda m: ("nCm", (int(m[1]), int(m[2])))),
    (re.compile(r"^C(\d+)\+P(\d+)$"), lambda m: ("cycle_plus_path", (int(m[1]), int(m[2])))),
    (re.compile(r"^P(\d+)\+P(\d+)$"), lambda m: ("path_plus_path", (int(m[1]), int(m[2])))),
    (re.compile(r"^C(\d+)$"), lambda m: ("cycle", (int(m[1]),))),
    (re.compile(r"^P(\d+)$"), lambda m: ("path", (int(m[1]),))),
    (re.compile(r"^K\(?1,(\d+)\)?$"), lambda m: ("star", (int(m[1]),))),
    (re.compile(r"^K\(?(\d+),(\d+)\)?$"), lambda m: ("complete_bipartite", (int(m[1]), int(m[2])))),
    (re.compile(r"^K\((\d+(?:,\d+){2,})\)$"),
     lambda m: ("complete_multipartite", tuple(int(x) for x in m[1].split(",")))),
]


def parse_family(spec: str) -> tuple[str, tuple[int, ...]]:
    """Resolve shorthand such as ``2C3``, ``5K2``, ``C4+P3``, ``K(3,4)`` or ``name:1,2``."""
    s = spec.replace(" ", "")
    if ":" in s:
        name, _, rest = s.partition(":")
        return name, tuple(int(x) for x in rest.split(",") if x)
    for pattern, build in _SHORTHAND:
        m = pattern.match(s)
        if m:
            return build(m)
    if s in _FAMILIES:
        raise GraphError(f"family {s} needs parameters, e.g. {s}:3")
    raise GraphError(f"cannot parse graph family {spec!r}")


def family_from_spec(spec: str) -> Graph:
    name, params = parse_family(spec)
    return graph_family(name, *params)
