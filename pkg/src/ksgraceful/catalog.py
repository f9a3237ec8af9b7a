"""Fixture catalog of explicitly printed labelings, Skolem sequences and pairing rows.

Every entry is checked when the catalog is loaded; an invalid entry raises
:class:`CatalogError` instead of being skipped.  Pairing rows that were
corrected keep the printed row alongside, and loading re-derives the
correction to make sure the stored fix is the one the search finds.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .graph import Graph, Labeling, graph_family, verify_labeling


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class FixtureEntry:
    id: str
    kind: str  # labeling | skolem | pairing
    provenance: str
    note: str = ""
    graph: Graph | None = None
    labeling: Labeling | None = None
    family: str | None = None
    params: tuple[int, ...] = ()
    pairs: tuple[tuple[int, int], ...] = ()
    printed: tuple[tuple[int, int], ...] = ()
    r: int | None = None

    @property
    def corrected(self) -> bool:
        return bool(self.printed) and self.printed != self.pairs


@dataclass
class FixtureCatalog:
    entries: dict[str, FixtureEntry] = field(default_factory=dict)

    def __contains__(self, key):
        return key in self.entries

    def __getitem__(self, key) -> FixtureEntry:
        return self.entries[key]

    def __iter__(self):
        return iter(self.entries.values())

    def __len__(self):
        return len(self.entries)

    def of_kind(self, kind: str) -> list[FixtureEntry]:
        return [e for e in self if e.kind == kind]

    def labelings(self) -> list[FixtureEntry]:
        return self.of_kind("labeling")


def _pairs(raw) -> tuple[tuple[int, int], ...]:
    return tuple((int(a), int(b)) for a, b in raw)


def _entry(raw: dict) -> FixtureEntry:
    from .skolem import PairingProblem, SkolemSequence, repair_table_row

    eid, kind = raw["id"], raw["kind"]
    prov = raw.get("provenance", "")
    if not prov:
        raise CatalogError(f"{eid}: provenance is empty")
    note = raw.get("note", "")
    if kind == "labeling":
        params = tuple(raw["params"])
        g = graph_family(raw["family"], *params)
        if "triples" in raw:
            ts = raw["triples"]
            if any(c - a != b for a, b, c in ts):
                raise CatalogError(f"{eid}: a triple (a, b, c) has b != c - a")
            vl = [x for a, _, c in ts for x in (a, c)]
        else:
            vl = raw["vertex_labels"]
        lab = Labeling.from_vertex_labels(g, int(raw["k"]), vl)
        res = verify_labeling(g, lab)
        if not res:
            raise CatalogError(f"{eid}: invalid labeling: " + "; ".join(map(str, res.violations)))
        return FixtureEntry(eid, kind, prov, note, g, lab, raw["family"], params)
    if kind == "skolem":
        seq = SkolemSequence(int(raw["k"]), _pairs(raw["pairs"]))
        if not seq.is_valid():
            raise CatalogError(f"{eid}: invalid Skolem sequence: {seq.problems()}")
        return FixtureEntry(eid, kind, prov, note, pairs=seq.pairs, params=(seq.k,))
    if kind == "pairing":
        r = int(raw["r"])
        pairs, printed = _pairs(raw["pairs"]), _pairs(raw.get("printed", raw["pairs"]))
        if not PairingProblem(r).is_solution(pairs):
            raise CatalogError(f"{eid}: pairs do not solve the r={r} pairing problem")
        if printed != pairs:
            if not note:
                raise CatalogError(f"{eid}: corrected row needs a derivation note")
            derived, _ = repair_table_row(r, printed)
            if sorted(derived) != sorted(pairs):
                raise CatalogError(f"{eid}: stored correction {pairs} differs from re-derived {derived}")
        return FixtureEntry(eid, kind, prov, note, pairs=pairs, printed=printed, r=r)
    raise CatalogError(f"{eid}: unknown entry kind {kind!r}")


def parse_catalog(doc: dict) -> FixtureCatalog:
    cat = FixtureCatalog()
    for raw in doc["entries"]:
        e = _entry(raw)
        if e.id in cat.entries:
            raise CatalogError(f"duplicate catalog id {e.id}")
        cat.entries[e.id] = e
    return cat


@lru_cache(maxsize=1)
def load_catalog() -> FixtureCatalog:
    text = resources.files("ksgraceful").joinpath("data/catalog.json").read_text()
    return parse_catalog(json.loads(text))
