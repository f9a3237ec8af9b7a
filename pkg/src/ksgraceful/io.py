"""Text and JSON serialisation for graphs and labelings.

Edge-list text format::

    p q [k]
    u v            # q lines, 0-based
    V i label      # optional labeling block
    E i label

Lines starting with ``#`` and blank lines are ignored.

Labeling document (JSON)::

    {"k": 1, "vertex_labels": [...], "edge_labels": [...],
     "family": "cycle_plus_path", "params": [4, 3]}

Documents for graphs outside the named families carry ``"p"`` and ``"edges"``
instead of ``family``/``params``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, GraphError, Labeling, LabelingStructureError, graph_family


class FormatError(ValueError):
    pass


def parse_edge_list(text: str) -> tuple[Graph, Labeling | None]:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty edge-list document")
    head = lines[0].split()
    if len(head) not in (2, 3):
        raise FormatError(f"header must be 'p q [k]', got {lines[0]!r}")
    try:
        p, q = int(head[0]), int(head[1])
        k = int(head[2]) if len(head) == 3 else None
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc

    edges, vlab, elab = [], {}, {}
    for ln in lines[1:]:
        parts = ln.split()
        try:
            if parts[0] == "V" and len(parts) == 3:
                vlab[int(parts[1])] = int(parts[2])
            elif parts[0] == "E" and len(parts) == 3:
                elab[int(parts[1])] = int(parts[2])
            elif len(parts) == 2:
                edges.append((int(parts[0]), int(parts[1])))
            else:
                raise FormatError(f"unrecognised line {ln!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"unrecognised line {ln!r}") from exc
    if len(edges) != q:
        raise FormatError(f"header promises {q} edges, found {len(edges)}")
    try:
        g = Graph(p, tuple(edges))
    except GraphError as exc:
        raise FormatError(str(exc)) from exc

    if not vlab and not elab:
        return g, None
    if k is None:
        raise FormatError("a labeling block needs k in the header")
    bad = [i for i in vlab if not 0 <= i < p] + [i for i in elab if not 0 <= i < q]
    if bad:
        raise FormatError(f"label indices out of range: {bad}")
    lab = Labeling(k, tuple(vlab.get(i) for i in range(p)), tuple(elab.get(i) for i in range(q)))
    return g, lab


def format_edge_list(g: Graph, lab: Labeling | None = None) -> str:
    head = f"{g.p} {g.q}" + (f" {lab.k}" if lab is not None else "")
    out = [head] + [f"{u} {v}" for u, v in g.edges]
    if lab is not None:
        out += [f"V {i} {x}" for i, x in enumerate(lab.vertex_labels)]
        out += [f"E {i} {x}" for i, x in enumerate(lab.edge_labels)]
    return "\n".join(out) + "\n"


def labeling_document(g: Graph, lab: Labeling, family: str | None = None,
                      params: tuple[int, ...] | list[int] | None = None, **extra) -> dict:
    doc = {"k": lab.k, "vertex_labels": list(lab.vertex_labels), "edge_labels": list(lab.edge_labels)}
    if family is not None:
        doc["family"] = family
        doc["params"] = list(params or ())
    else:
        doc["p"] = g.p
        doc["edges"] = [list(e) for e in g.edges]
    doc.update(extra)
    return doc


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def document_graph(doc: dict) -> Graph:
    if "family" in doc and doc["family"] is not None:
        g = graph_family(doc["family"], *doc.get("params", []))
        if "edges" in doc and [tuple(e) for e in doc["edges"]] != list(g.edges):
            raise FormatError("document edges disagree with its family")
        return g
    if "edges" not in doc or "p" not in doc:
        raise FormatError("document needs either family/params or p/edges")
    return Graph(int(doc["p"]), tuple(tuple(e) for e in doc["edges"]))


def parse_document(doc: dict | str) -> tuple[Graph, Labeling]:
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        g = document_graph(doc)
        lab = Labeling(int(doc["k"]), tuple(doc["vertex_labels"]), tuple(doc["edge_labels"]))
    except (KeyError, TypeError, GraphError) as exc:
        raise FormatError(f"malformed labeling document: {exc}") from exc
    return g, lab


def load(path: str | Path) -> tuple[Graph, Labeling | None]:
    """Read a ``.json`` labeling document or an edge-list text file."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return parse_document(text)
    return parse_edge_list(text)


__all__ = [
    "FormatError", "LabelingStructureError", "parse_edge_list", "format_edge_list",
    "labeling_document", "dumps_document", "parse_document", "document_graph", "load",
]
