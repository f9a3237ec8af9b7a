"""Regenerate src/ksgraceful/data/catalog.json from the literal fixture lists below.

Run from the repository root:  python3 scripts/build_catalog.py
"""
import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "ksgraceful" / "data" / "catalog.json"


def triples(id_, k, ts, provenance, note=""):
    return {"id": id_, "kind": "labeling", "family": "nK2", "params": [len(ts)], "k": k,
            "triples": [list(t) for t in ts], "provenance": provenance, "note": note}


def vertices(id_, family, params, k, labels, provenance, note=""):
    return {"id": id_, "kind": "labeling", "family": family, "params": params, "k": k,
            "vertex_labels": labels, "provenance": provenance, "note": note}


entries = [
    triples("nk2-even-edges-4a", 1, [(5, 2, 7), (3, 6, 9), (1, 10, 11), (8, 4, 12)],
            "printed even-edge list for n=4, first variant"),
    triples("nk2-even-edges-4b", 1, [(5, 4, 9), (1, 6, 7), (3, 8, 11), (10, 2, 12)],
            "printed even-edge list for n=4, second variant"),
    triples("nk2-even-edges-5", 1, [(7, 2, 9), (5, 6, 11), (3, 10, 13), (1, 14, 15), (8, 4, 12)],
            "printed even-edge list for n=5"),
    triples("nk2-even-edges-8", 1,
            [(7, 4, 11), (15, 6, 21), (3, 10, 13), (5, 12, 17), (9, 14, 23), (1, 18, 19),
             (20, 2, 22), (16, 8, 24)],
            "printed even-edge list for n=8"),
    triples("nk2-even-edges-9", 1,
            [(9, 6, 15), (11, 8, 19), (7, 10, 17), (13, 12, 25), (5, 18, 23), (1, 20, 21),
             (3, 24, 27), (14, 2, 16), (22, 4, 26)],
            "printed even-edge list for n=9"),
    triples("8k2-k3-a", 3,
            [(10, 3, 13), (18, 4, 22), (16, 5, 21), (14, 6, 20), (19, 7, 26), (17, 8, 25),
             (15, 9, 24), (12, 11, 23)],
            "printed 3-super graceful 8K2 (witness that 8K2 is 3-super graceful)",
            "edge labels are {3..9, 11}, not an interval"),
    triples("8k2-k3-b", 3,
            [(13, 3, 16), (14, 4, 18), (21, 5, 26), (19, 6, 25), (17, 7, 24), (15, 8, 23),
             (11, 9, 20), (12, 10, 22)],
            "printed 3-super graceful 8K2 with edge labels [3, 10]"),
    triples("9k2-k3", 3,
            [(24, 5, 29), (22, 6, 28), (20, 7, 27), (17, 9, 26), (15, 10, 25), (12, 11, 23),
             (13, 8, 21), (16, 3, 19), (14, 4, 18)],
            "printed 3-super graceful 9K2 with edge labels [3, 11]"),
    triples("12k2-k3", 3,
            [(18, 3, 21), (19, 4, 23), (20, 5, 25), (32, 6, 38), (30, 7, 37), (28, 8, 36),
             (26, 9, 35), (24, 10, 34), (22, 11, 33), (15, 12, 27), (16, 13, 29), (17, 14, 31)],
            "printed 3-super graceful 12K2 with edge labels [3, 14]"),
    triples("12k2-k3-alt", 3,
            [(18, 3, 21), (19, 4, 23), (20, 5, 25), (32, 6, 38), (30, 7, 37), (28, 8, 36),
             (26, 9, 35), (24, 10, 34), (22, 11, 33), (14, 13, 27), (17, 12, 29), (16, 15, 31)],
            "printed alternative last three triples for 12K2 at k=3",
            "valid, but the edge labels are {3..13, 15}, not [3, 14]"),
    triples("13k2-k3", 3,
            [(36, 5, 41), (34, 6, 40), (32, 7, 39), (30, 8, 38), (22, 15, 37), (21, 14, 35),
             (20, 13, 33), (19, 12, 31), (18, 11, 29), (24, 4, 28), (17, 10, 27), (23, 3, 26),
             (16, 9, 25)],
            "printed 3-super graceful 13K2 with edge labels [3, 15]"),
    triples("12k2-k5", 5,
            [(32, 8, 40), (30, 9, 39), (28, 10, 38), (22, 15, 37), (20, 16, 36), (18, 17, 35),
             (23, 11, 34), (21, 12, 33), (25, 6, 31), (24, 5, 29), (14, 13, 27), (19, 7, 26)],
            "printed 5-super graceful 12K2", "edge labels are not [5, 16]"),
    vertices("c10-k5", "cycle", [10], 5, [24, 6, 20, 12, 21, 10, 23, 7, 22, 5],
             "printed 5-super graceful C10"),
    vertices("c12-k6", "cycle", [12], 6, [27, 6, 29, 7, 26, 14, 24, 13, 28, 8, 25, 9],
             "printed 6-super graceful C12"),
    vertices("c4p3-odd", "cycle_plus_path", [4, 3], 1, [1, 11, 5, 13, 3, 7, 9],
             "printed odd-vertex super graceful C4+P3"),
    vertices("c3p6-odd", "cycle_plus_path", [3, 6], 1, [5, 7, 11, 9, 17, 1, 15, 3, 13],
             "printed odd-vertex super graceful C3+P6"),
    vertices("c4p4-odd", "cycle_plus_path", [4, 4], 1, [1, 13, 5, 15, 7, 3, 9, 11],
             "printed odd-vertex super graceful C4+P4, path labels corrected",
             "printed path labels 5,7,3,9 reuse the cycle label 5 and miss 11; the printed "
             "path edge labels 4,6,2 force the path 7,3,9,11"),
    vertices("example-k2-edge1", "nK2", [1], 1, [2, 3],
             "K2 with edge label 1 used in the disjoint-union example"),
    triples("example-4k2-k2", 2, [(7, 2, 9), (10, 3, 13), (8, 4, 12), (6, 5, 11)],
            "printed 2-super graceful 4K2 with edge labels [2, 5] from the disjoint-union example"),
    vertices("example-p3-edges12", "path", [3], 1, [3, 5, 4],
             "P3 with edge labels 1, 2 from the disjoint-union example",
             "only the edge labels are printed; vertex labels chosen"),
    triples("example-5k2-k3", 3, [(11, 3, 14), (9, 4, 13), (12, 5, 17), (10, 6, 16), (8, 7, 15)],
            "printed 3-super graceful 5K2 with edge labels [3, 7] from the disjoint-union example"),
]

small = {
    1: [(4, 2), (6, 3), (5, 1)],
    2: [(10, 8), (4, 1), (6, 2), (14, 9), (13, 7), (12, 5), (11, 3)],
    3: [(14, 12), (4, 1), (6, 2), (8, 3), (16, 10), (22, 15), (21, 13), (20, 11), (19, 9),
        (18, 7), (17, 5)],
}
for r, pairs in small.items():
    entries.append({"id": f"two-skolem-length-{4 * r - 1}", "kind": "skolem", "k": 2,
                    "pairs": [list(p) for p in pairs],
                    "provenance": f"printed 2-Skolem sequence of length {4 * r - 1}", "note": ""})

table = {
    4: [(20, 18), (16, 10), (22, 14)],
    5: [(28, 26), (24, 18), (22, 14), (20, 10)],
    6: [(32, 30), (34, 28), (26, 18), (24, 14), (22, 10)],
    7: [(36, 34), (38, 32), (26, 18), (40, 30), (22, 10), (28, 14)],
    8: [(42, 40), (38, 32), (18, 10), (44, 34), (26, 14), (36, 22), (46, 30)],
    9: [(52, 50), (48, 42), (46, 38), (44, 34), (22, 10), (40, 26), (30, 14), (36, 18)],
    10: [(42, 40), (44, 48), (18, 10), (56, 46), (26, 14), (58, 44), (38, 22), (52, 34), (50, 30)],
    11: [(64, 62), (54, 48), (58, 50), (52, 42), (30, 18), (60, 46), (26, 10), (56, 38), (34, 14),
         (44, 22)],
}
corrections = {
    10: ([(42, 40), (54, 48), (18, 10), (56, 46), (26, 14), (58, 44), (38, 22), (52, 34), (50, 30)],
         "printed pair (44,48) has difference -4 and reuses 44; the other eight pairs leave "
         "{48, 54} and difference 6 unused, so the unique completion is (54,48)"),
}
for r, printed in table.items():
    fixed, note = corrections.get(r, (printed, ""))
    entries.append({"id": f"pairing-r{r}", "kind": "pairing", "r": r,
                    "pairs": [list(p) for p in fixed], "printed": [list(p) for p in printed],
                    "provenance": f"printed ad hoc pairing row for r={r}", "note": note})

OUT.parent.mkdir(parents=True, exist_ok=True)
OUT.write_text(json.dumps({"version": 1, "entries": entries}, indent=1) + "\n")
print(f"wrote {len(entries)} entries to {OUT}")
