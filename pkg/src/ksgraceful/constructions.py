"""Explicit labeling constructions and labeling-to-labeling transformations.

Every public constructor returns a :class:`LabeledGraph` whose labeling has
been checked by :func:`verify_labeling` before it is handed out.

Notes on derived formulas
-------------------------
``cycle_plus_path``
    The path ``P_m`` is walked as ``u1 v1 u2 v2 ...``.  Only vertex labels are
    computed; edge labels are induced as differences.  Each residue case of
    ``m = 4r + s`` is its own routine.

``two_paths_k2(n, r)``
    Label the path ``u_1 .. u_L`` with ``L = 2n + r - 1`` by
    ``u_{2j-1} = A - j`` and ``u_{2j} = A + j`` where ``A = 3n + r + 1``, so
    edge ``u_i u_{i+1}`` carries ``i + 1``.  Drop the edge ``u_n u_{n+1}``
    (label ``n + 1``) and hang a new vertex labelled ``A`` on ``u_L``, which
    recreates the label ``n + 1``.  Result: ``P_{n+r} + P_n`` at ``k = 2``.

``two_paths_kn1(n, r)``
    With ``C = 4n + 2`` (r=2) or ``4n + 4`` (r=3), label ``u_{2j} = n + j`` and
    ``u_{2j-1} = C + n + 1 - j``; edge ``u_i u_{i+1}`` carries ``C - i``.
    Drop the edge ``u_{n+r-1} u_{n+r}`` and hang a vertex labelled
    ``2n + r - 1`` on ``u_1``, which recreates the dropped label.

``bipartite_growth`` mode A2
    Round ``r`` adds vertices ``(2r+2)k + nd + s`` (``1 <= s <= k``).  Any edge
    whose label repeats a vertex label or an earlier kept edge label is
    dropped; older edges, then smaller ``u_i`` index, win.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .graph import (
    Graph,
    GraphError,
    Labeling,
    cycle_plus_path as _cycle_plus_path_graph,
    disjoint_union,
    nk2,
    path_plus_path,
    star,
    verify_labeling,
)


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labeling: Labeling

    def __iter__(self):
        return iter((self.graph, self.labeling))

    def verify(self):
        return verify_labeling(self.graph, self.labeling)


@dataclass(frozen=True)
class ConstructionRecipe:
    """A named construction with its parameters and the offset it produces."""

    family: str
    params: tuple[int, ...]
    k: int | None = None
    provenance: str = ""

    def build(self) -> LabeledGraph:
        return construct(self.family, *self.params)


def _checked(g: Graph, k: int, vertex_labels: Sequence[int]) -> LabeledGraph:
    lab = Labeling.from_vertex_labels(g, k, vertex_labels)
    res = verify_labeling(g, lab)
    if not res:
        raise ConstructionError(f"construction for {g.name} produced an invalid labeling: "
                                + "; ".join(map(str, res.violations[:5])))
    return LabeledGraph(g, lab)


def _require(cond: bool, msg: str):
    if not cond:
        raise ConstructionError(msg)


# -- stars -------------------------------------------------------------------

def star_all_odd_edges(q: int) -> LabeledGraph:
    """K(1,q) at k=1 with every edge label odd: centre 2q+1, leaf i gets 2q+2-2i."""
    _require(q >= 1, "q must be >= 1")
    return _checked(star(q), 1, [2 * q + 1] + [2 * q + 2 - 2 * i for i in range(1, q + 1)])


# -- graceful / odd-vertex / edge-interval transformations --------------------

def _is_graceful(g: Graph, labels: Sequence[int]) -> bool:
    if len(labels) != g.p or len(set(labels)) != g.p:
        return False
    if any(not 0 <= x <= g.q for x in labels):
        return False
    return sorted(abs(labels[u] - labels[v]) for u, v in g.edges) == list(range(1, g.q + 1))


def graceful_to_odd_super(g: Graph, graceful: Sequence[int]) -> LabeledGraph:
    """``h(u) = 2 g(u) + 1``; edges become twice the graceful differences."""
    _require(_is_graceful(g, graceful), "input is not a graceful labeling")
    return _checked(g, 1, [2 * x + 1 for x in graceful])


def odd_super_to_edge_interval(g: Graph, lab: Labeling) -> LabeledGraph:
    """Map an all-odd-vertex super graceful labeling to one with edges exactly [1, q]."""
    _require(lab.k == 1 and bool(verify_labeling(g, lab)), "input must be a valid super graceful labeling")
    _require(all(x % 2 for x in lab.vertex_labels), "every vertex label must be odd")
    return _checked(g, 1, [(x - 1) // 2 + g.q + 1 for x in lab.vertex_labels])


def edge_interval_to_graceful(g: Graph, lab: Labeling) -> tuple[int, ...]:
    """``g(u) = f(u) - q - 1`` for a super graceful labeling with edges exactly [1, q]."""
    _require(lab.k == 1 and bool(verify_labeling(g, lab)), "input must be a valid super graceful labeling")
    _require(sorted(lab.edge_labels) == list(range(1, g.q + 1)), "edge labels must be exactly [1, q]")
    out = tuple(x - g.q - 1 for x in lab.vertex_labels)
    if not _is_graceful(g, out):
        raise ConstructionError("result is not graceful; the graph is not a (q+1,q)-graph")
    return out


# -- growth and reflection for odd-vertex labelings --------------------------

def _odd_vertex_super(g: Graph, lab: Labeling):
    _require(lab.k == 1 and bool(verify_labeling(g, lab)), "input must be a valid super graceful labeling")
    _require(all(x % 2 for x in lab.vertex_labels), "every vertex label must be odd")


def extend_by_path(g: Graph, lab: Labeling, v: int, n: int) -> LabeledGraph:
    """Graft a path of order n at vertex v (labelled 1), keeping all vertex labels odd.

    One step reflects the old labels by ``w -> 2q + 4 - f(w)`` and hangs a new
    vertex labelled 1 on the vertex that used to carry 1.
    """
    _odd_vertex_super(g, lab)
    _require(0 <= v < g.p and lab.vertex_labels[v] == 1, "v must be the vertex labelled 1")
    _require(n >= 2, "the grafted path needs n >= 2 vertices")
    cur_g, labels, tip = g, list(lab.vertex_labels), v
    for _ in range(n - 1):
        q = cur_g.q
        labels = [2 * q + 4 - x for x in labels] + [1]
        new = cur_g.p
        cur_g = Graph(cur_g.p + 1, cur_g.edges + ((tip, new),), f"{g.name or 'G'}^{v}_{n}")
        tip = new
    return _checked(cur_g, 1, labels)


def complement_labeling(g: Graph, lab: Labeling, reflect: int | None = None) -> LabeledGraph:
    """Reflect vertex labels ``f -> c - f``; edges are unchanged.

    The default ``c = 2q + 2`` maps the odd labels of [1, 2q+1] onto themselves.
    Any other ``c`` is applied as given and rejected if the result is invalid.
    """
    _odd_vertex_super(g, lab)
    c = 2 * g.q + 2 if reflect is None else reflect
    return _checked(g, 1, [c - x for x in lab.vertex_labels])


# -- disjoint composition ----------------------------------------------------

def compose_disjoint(parts: Sequence[tuple[Graph, Labeling]], mode: str = "auto") -> LabeledGraph:
    """Label a disjoint union from labeled parts.

    ``interval``: part i has edge labels exactly [k_i, k_i+q_i-1] with
    ``k_{i+1} = k_i + q_i``.  Edge labels are kept; vertex blocks are restacked
    so that the last part stays put and earlier parts sit above it.
    ``chain``: part i+1 starts right after part i's largest label; labels kept.
    ``auto`` picks whichever precondition holds.
    """
    _require(len(parts) >= 1, "need at least one part")
    for g, lab in parts:
        res = verify_labeling(g, lab)
        _require(bool(res), f"part {g.name} is not validly labeled")

    def is_interval():
        for i, (g, lab) in enumerate(parts):
            if sorted(lab.edge_labels) != list(range(lab.k, lab.k + g.q)):
                return False
            if i + 1 < len(parts) and parts[i + 1][1].k != lab.k + g.q:
                return False
        return True

    def is_chain():
        return all(parts[i + 1][1].k == parts[i][1].max_label + 1 for i in range(len(parts) - 1))

    if mode == "auto":
        mode = "interval" if is_interval() else "chain" if is_chain() else "invalid"
    graph = disjoint_union(*(g for g, _ in parts))
    k = parts[0][1].k
    if mode == "interval":
        _require(is_interval(), "parts' edge-label intervals do not tile")
        top = parts[-1][1].max_label
        shifted: list[list[int]] = [list(parts[-1][1].vertex_labels)]
        for g, lab in reversed(parts[:-1]):
            low = lab.k + g.q
            shifted.append([x - low + top + 1 for x in lab.vertex_labels])
            top += g.p
        shifted.reverse()
        labels = [x for block in shifted for x in block]
    elif mode == "chain":
        _require(is_chain(), "parts' label ranges do not chain")
        labels = [x for _, lab in parts for x in lab.vertex_labels]
    else:
        raise ConstructionError("parts satisfy neither the interval nor the chain precondition")
    return _checked(graph, k, labels)


# -- nK2 with even edge labels -----------------------------------------------

def nk2_from_triples(triples: Sequence[tuple[int, int, int]], k: int) -> LabeledGraph:
    """Component i gets end labels (a, c); b must equal c - a."""
    for a, b, c in triples:
        _require(abs(c - a) == b, f"triple {(a, b, c)} is inconsistent")
    return _checked(nk2(len(triples)), k, [x for a, _, c in triples for x in (a, c)])


def nk2_even_edges(n: int, variant: str = "a") -> LabeledGraph:
    """Printed all-even-edge super graceful labelings of nK2 for n in {4, 5, 8, 9}."""
    from .catalog import load_catalog

    key = f"nk2-even-edges-{n}" + (variant if n == 4 else "")
    cat = load_catalog()
    if key not in cat:
        raise ConstructionError(f"no even-edge fixture for n={n} (variant {variant!r})")
    entry = cat[key]
    return LabeledGraph(entry.graph, entry.labeling)


def even_edges_extend(g: Graph, lab: Labeling) -> LabeledGraph:
    """From an even-edge super graceful (4t)K2 labeling build one for (4t+1)K2.

    Components with two odd ends get +2, the rest are kept, and a new
    component is labelled 1 and 12t+3.
    """
    _require_nk2(g)
    _require(lab.k == 1 and bool(verify_labeling(g, lab)), "input must be a valid super graceful labeling")
    _require(all(e % 2 == 0 for e in lab.edge_labels), "every edge label must be even")
    n = g.q
    _require(n % 4 == 0, "input must have 4t components")
    t = n // 4
    odd = [i for i, (u, v) in enumerate(g.edges) if lab.vertex_labels[u] % 2]
    _require(len(odd) == 3 * t, f"expected {3 * t} odd components, found {len(odd)}")
    labels = list(lab.vertex_labels)
    for i in odd:
        u, v = g.edges[i]
        labels[u] += 2
        labels[v] += 2
    return _checked(nk2(n + 1), 1, labels + [1, 12 * t + 3])


# -- cycle plus path, all vertex labels odd ----------------------------------

def _interleave(u: dict[int, int], v: dict[int, int], m: int) -> list[int]:
    out = []
    for pos in range(m):
        out.append(u[pos // 2 + 1] if pos % 2 == 0 else v[pos // 2 + 1])
    return out


def _odd(lo: int, hi: int):
    """Odd i with lo <= i <= hi."""
    return range(lo if lo % 2 else lo + 1, hi + 1, 2)


def _even(lo: int, hi: int):
    return range(lo if lo % 2 == 0 else lo + 1, hi + 1, 2)


def _c3_s0(r):
    u, v = {}, {}
    for i in _odd(1, 2 * r - 1):
        u[i] = 2 * i + 1
        u[i + 1] = u[i] - 2
    v[2 * r] = 4 * r + 5
    v[1] = 8 * r + 5
    for i in _odd(3, 2 * r - 1):
        v[i] = 8 * r + 9 - 2 * i
        v[i - 1] = v[i] - 2
    return [4 * r + 1, 4 * r + 3, 4 * r + 7], u, v


def _c3_s1(r):
    u, v = {2 * r + 1: 4 * r + 3}, {}
    for i in _odd(1, 2 * r - 1):
        u[i] = 2 * i + 1
        u[i + 1] = u[i] - 2
        v[i] = 8 * r + 7 - 2 * i
        v[i + 1] = v[i] + 2
    return [4 * r + 1, 4 * r + 5, 4 * r + 7], u, v


def _c3_s2(r):
    if r == 1:
        return [5, 7, 11], {1: 9, 2: 1, 3: 3}, {1: 17, 2: 15, 3: 13}
    u = {2 * r - 1: 4 * r - 3, 2 * r: 4 * r + 1, 2 * r + 1: 4 * r - 1}
    for i in _odd(1, 2 * r - 3):
        u[i] = 2 * i + 1
        u[i + 1] = u[i] - 2
    v = {1: 8 * r + 9, 2 * r + 1: 4 * r + 7, 2 * r: 4 * r + 11}
    for i in _even(2, 2 * r - 2):
        v[i] = 8 * r + 9 - 2 * i
        v[i + 1] = v[i] + 2
    return [4 * r + 3, 4 * r + 5, 4 * r + 9], u, v


def _c3_s3(r):
    u = {1: 3, 2: 5, 3: 1, 4: 9}
    v = {1: 8 * r + 7, 2: 8 * r + 11, 3: 8 * r + 9}
    for i in _even(6, 2 * r + 2):
        u[i] = u[i - 2] + 4
        u[i - 1] = u[i - 2] - 2
    for i in _odd(5, 2 * r + 1):
        v[i] = v[i - 2] - 4
        v[i - 1] = v[i] - 2
    return [4 * r + 3, 4 * r + 7, 4 * r + 9], u, v


def _c4_s0(r):
    if r == 1:
        return [1, 13, 5, 15], {1: 7, 2: 9}, {1: 3, 2: 11}
    u = {1: 3, 2: 7}
    for i in _odd(3, 2 * r - 1):
        u[i] = 5 + 2 * i
        u[i + 1] = u[i] - 2
    v = {}
    for i in _odd(1, 2 * r - 1):
        v[i] = 8 * r + 3 - 2 * i
        v[i + 1] = v[i] + 2
    return [1, 8 * r + 5, 5, 8 * r + 7], u, v


def _c4_s1(r):
    u, v = {}, {}
    for i in _odd(1, 2 * r + 1):
        u[i] = 8 * r + 9 - 2 * i
        if i < 2 * r + 1:
            u[i + 1] = u[i] - 6
    for i in _odd(1, 2 * r - 1):
        v[i] = 5 + 2 * i
        v[i + 1] = v[i] - 2
    return [1, 8 * r + 5, 3, 8 * r + 9], u, v


def _c4_s2(r):
    u = {1: 8 * r + 9, 2: 8 * r + 5, 3: 8 * r + 1}
    for i in _odd(5, 2 * r + 1):
        u[i] = u[i - 2] - 4
        u[i - 1] = u[i] + 6
    v = {2 * r + 1: 4 * r + 7}
    for i in _odd(1, 2 * r - 1):
        v[i] = 5 + 2 * i
        v[i + 1] = v[i] - 2
    return [1, 8 * r + 7, 3, 8 * r + 11], u, v


def _c4_s3(r):
    u, v = {}, {2 * r + 1: 4 * r + 7}
    for i in _odd(1, 2 * r + 1):
        u[i] = 8 * r + 13 - 2 * i
        u[i + 1] = u[i] - 6
    for i in _odd(1, 2 * r - 1):
        v[i] = 5 + 2 * i
        v[i + 1] = v[i] - 2
    return [1, 8 * r + 9, 3, 8 * r + 13], u, v


_CYCLE_PATH_CASES: dict[tuple[int, int], Callable] = {
    (3, 0): _c3_s0, (3, 1): _c3_s1, (3, 2): _c3_s2, (3, 3): _c3_s3,
    (4, 0): _c4_s0, (4, 1): _c4_s1, (4, 2): _c4_s2, (4, 3): _c4_s3,
}


def cycle_plus_path(n: int, m: int) -> LabeledGraph:
    """C_n + P_m at k=1 with every vertex label odd, for n=3, m>=4 or n=4, m>=3."""
    _require((n == 3 and m >= 4) or (n == 4 and m >= 3),
             f"C{n}+P{m} is outside n=3, m>=4 and n=4, m>=3")
    g = _cycle_plus_path_graph(n, m)
    if (n, m) == (4, 3):
        return _checked(g, 1, [1, 11, 5, 13, 3, 7, 9])
    r, s = divmod(m, 4)
    cyc, u, v = _CYCLE_PATH_CASES[(n, s)](r)
    return _checked(g, 1, cyc + _interleave(u, v, m))


# -- two paths ---------------------------------------------------------------

def _two_paths(n: int, r: int, labels: dict[int, int], cut: int, graft_to: int, graft_label: int,
               k: int) -> LabeledGraph:
    """Split u_1..u_L after u_cut; hang a new vertex on u_graft_to.

    The component holding the graft is emitted first (it is the longer one).
    """
    L = 2 * n + r - 1
    left = list(range(1, cut + 1))
    right = list(range(cut + 1, L + 1))
    if graft_to == L:
        long_part = [labels[i] for i in right] + [graft_label]
        short_part = [labels[i] for i in left]
    else:
        long_part = [graft_label] + [labels[i] for i in left]
        short_part = [labels[i] for i in right]
    _require(len(long_part) == n + r and len(short_part) == n, "path split has the wrong sizes")
    return _checked(path_plus_path(n + r, n), k, long_part + short_part)


def two_paths_k2(n: int, r: int) -> LabeledGraph:
    """P_{n+r} + P_n at k=2 with edge labels exactly [2, 2n+r-1], r in {2, 3}."""
    _require(n >= 2 and r in (2, 3), "need n >= 2 and r in {2, 3}")
    L, A = 2 * n + r - 1, 3 * n + r + 1
    labels = {i: (A - (i + 1) // 2 if i % 2 else A + i // 2) for i in range(1, L + 1)}
    return _two_paths(n, r, labels, cut=n, graft_to=L, graft_label=A, k=2)


def two_paths_kn1(n: int, r: int) -> LabeledGraph:
    """P_{n+r} + P_n at k=n+1; edges [2n+2, 4n+1] for r=2 and [2n+3, 4n+3] for r=3."""
    _require(n >= 2 and r in (2, 3), "need n >= 2 and r in {2, 3}")
    L = 2 * n + r - 1
    C = 4 * n + 2 if r == 2 else 4 * n + 4
    labels = {i: (C + n + 1 - (i + 1) // 2 if i % 2 else n + i // 2) for i in range(1, L + 1)}
    return _two_paths(n, r, labels, cut=n + r - 1, graft_to=1, graft_label=2 * n + r - 1, k=n + 1)


# -- bipartite growth --------------------------------------------------------

def bipartite_growth(mode: str, n: int, d: int, k: int, rounds: int = 0,
                     printed_rounds: bool = False) -> LabeledGraph:
    """Grow a k-super graceful bipartite graph from hubs u_0..u_n labelled k + i d.

    A1 needs d > k and adds d-1 (then d per round) vertices; A2 needs
    2 <= d <= k and adds k vertices per stage.  Edges whose label collides
    with a vertex label or an earlier edge are dropped.

    ``printed_rounds`` uses ``2(r+1)k + (r+1)d + s`` for the A2 round labels,
    which only tiles the label range when ``n = r + 1``.
    """
    _require(mode in ("A1", "A2"), "mode must be A1 or A2")
    _require(n >= 1 and rounds >= 0, "need n >= 1 and rounds >= 0")
    if mode == "A1":
        _require(d > k >= 1, "A1 needs d > k >= 1")
    else:
        _require(2 <= d <= k, "A2 needs 2 <= d <= k")

    hubs = [k + i * d for i in range(n + 1)]
    labels = list(hubs)
    if mode == "A1":
        stages = [[2 * k + j + n * d for j in range(1, d)]]
        stages += [[(r + 2) * k + (n * r + n + r) * d + s - 1 for s in range(1, d + 1)]
                   for r in range(1, rounds + 1)]
    else:
        stages = [[2 * k + j + n * d for j in range(1, k + 1)]]
        span = (lambda r: (r + 1) * d) if printed_rounds else (lambda r: n * d)
        stages += [[(2 * r + 2) * k + span(r) + s for s in range(1, k + 1)]
                   for r in range(1, rounds + 1)]

    edges: list[tuple[int, int]] = []
    taken = set(hubs)
    for stage in stages:
        base = len(labels)
        labels.extend(stage)
        taken.update(stage)
        for i, h in enumerate(hubs):
            for j, x in enumerate(stage):
                e = x - h
                if e in taken:
                    continue
                taken.add(e)
                edges.append((i, base + j))
    try:
        g = Graph(len(labels), tuple(edges), f"{mode}(n={n},d={d},k={k},rounds={rounds})")
    except GraphError as exc:
        raise ConstructionError(f"every edge of some vertex was dropped: {exc}") from None
    return _checked(g, k, labels)


# -- sequentially additive view of nK2 ---------------------------------------

@dataclass(frozen=True)
class AdditiveAssignment:
    """Labels where every edge label is the sum of its end labels.

    ``swapped`` lists, per component, the vertex whose label was exchanged
    with the edge label, so the swap can be undone exactly.
    """

    k: int
    vertex_labels: tuple[int, ...]
    edge_labels: tuple[int, ...]
    swapped: tuple[int, ...] = ()

    def is_valid(self, g: Graph) -> bool:
        if any(self.edge_labels[i] != self.vertex_labels[u] + self.vertex_labels[v]
               for i, (u, v) in enumerate(g.edges)):
            return False
        allv = sorted(self.vertex_labels + self.edge_labels)
        return allv == list(range(self.k, self.k + g.p + g.q))


def _require_nk2(g: Graph):
    _require(g.p == 2 * g.q and all(g.degree(v) == 1 for v in g.vertices), "input must be nK2")


def nk2_to_sequentially_additive(g: Graph, lab: Labeling) -> AdditiveAssignment:
    """Per component, swap the larger end label with the edge label."""
    _require_nk2(g)
    _require(bool(verify_labeling(g, lab)), "input labeling is invalid")
    vl, el, swapped = list(lab.vertex_labels), list(lab.edge_labels), []
    for i, (u, v) in enumerate(g.edges):
        big = u if vl[u] > vl[v] else v
        vl[big], el[i] = el[i], vl[big]
        swapped.append(big)
    out = AdditiveAssignment(lab.k, tuple(vl), tuple(el), tuple(swapped))
    assert out.is_valid(g)
    return out


def sequentially_additive_to_nk2(g: Graph, add: AdditiveAssignment) -> LabeledGraph:
    """Move each edge sum back onto a vertex.

    Uses ``add.swapped`` when present; otherwise the sum goes onto the end
    with the larger label.  Either choice gives a valid labeling.
    """
    _require_nk2(g)
    _require(add.is_valid(g), "input is not a sequentially additive assignment")
    vl, el = list(add.vertex_labels), list(add.edge_labels)
    for i, (u, v) in enumerate(g.edges):
        if add.swapped:
            big = add.swapped[i]
        else:
            big = u if vl[u] > vl[v] else v
        vl[big], el[i] = el[i], vl[big]
    return _checked(g, add.k, vl)


# -- dispatch ----------------------------------------------------------------

def _skolem_nk2(kind: str):
    def build(*params):
        from . import skolem as sk
        if kind == "classic":
            s = sk.skolem_classic(*params)
        elif kind == "two":
            s = sk.two_skolem(*params)
        elif kind == "length-2k-1":
            s = sk.k_skolem_length_2k_minus_1(*params)
        else:
            g, lab = sk.nk2_recursive_family(*params)
            return LabeledGraph(g, lab)
        if s is None:
            raise ConstructionError(f"no {kind} Skolem sequence for parameters {params}")
        g, lab = sk.skolem_to_nk2_labeling(s)
        return LabeledGraph(g, lab)
    return build


CONSTRUCTIONS: dict[str, tuple[Callable[..., LabeledGraph], str]] = {
    "star_all_odd_edges": (star_all_odd_edges, "q"),
    "cycle_plus_path": (cycle_plus_path, "n m"),
    "two_paths_k2": (two_paths_k2, "n r"),
    "two_paths_kn1": (two_paths_kn1, "n r"),
    "bipartite_growth_A1": (lambda n, d, k, rounds=0: bipartite_growth("A1", n, d, k, rounds), "n d k [rounds]"),
    "bipartite_growth_A2": (lambda n, d, k, rounds=0: bipartite_growth("A2", n, d, k, rounds), "n d k [rounds]"),
    "nk2_even_edges": (nk2_even_edges, "n"),
    "nk2_skolem": (_skolem_nk2("classic"), "n"),
    "nk2_two_skolem": (_skolem_nk2("two"), "n"),
    "nk2_length_2k_minus_1": (_skolem_nk2("length-2k-1"), "k"),
    "nk2_recursive": (_skolem_nk2("recursive"), "k r"),
}


def construct(family: str, *params: int) -> LabeledGraph:
    try:
        build, _ = CONSTRUCTIONS[family]
    except KeyError:
        raise ConstructionError(f"unknown construction {family!r}; known: {', '.join(sorted(CONSTRUCTIONS))}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise ConstructionError(f"bad parameters for {family}: {exc}") from None
