import json

import pytest

from ksgraceful.catalog import load_catalog
from ksgraceful.graph import Labeling, path
from ksgraceful.io import (
    FormatError, dumps_document, format_edge_list, labeling_document, load, parse_document, parse_edge_list,
)


def test_edge_list_round_trip_for_every_fixture():
    for e in load_catalog().labelings():
        text = format_edge_list(e.graph, e.labeling)
        g, lab = parse_edge_list(text)
        assert g.edges == e.graph.edges and lab == e.labeling


def test_json_round_trip_family_and_raw():
    for e in load_catalog().labelings():
        doc = labeling_document(e.graph, e.labeling, e.family, e.params)
        g, lab = parse_document(dumps_document(doc))
        assert g.edges == e.graph.edges and lab == e.labeling
        raw = labeling_document(e.graph, e.labeling)
        assert "edges" in raw
        g2, lab2 = parse_document(json.loads(dumps_document(raw)))
        assert g2.edges == e.graph.edges and lab2 == e.labeling


def test_documents_are_byte_stable():
    g = path(3)
    lab = Labeling.from_vertex_labels(g, 1, [3, 5, 4])
    a = dumps_document(labeling_document(g, lab, "path", [3]))
    assert a == dumps_document(labeling_document(g, lab, "path", [3]))
    assert a.startswith('{\n  "k": 1,\n  "vertex_labels": [\n')


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n0 1\n0 1\n", "2 1\n0 x\n", "2 1\n0 1\nV 0 3\n",
                                  "2 1 1\n0 1\nV 5 3\n", "2 1\n0 0\n"])
def test_malformed_edge_lists(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


def test_load_detects_format(tmp_path):
    g = path(2)
    lab = Labeling(1, (3, 2), (1,))
    (tmp_path / "a.lab").write_text(format_edge_list(g, lab))
    (tmp_path / "a.json").write_text(dumps_document(labeling_document(g, lab, "path", [2])))
    assert load(tmp_path / "a.lab")[1] == lab
    assert load(tmp_path / "a.json")[1] == lab


def test_bad_documents():
    with pytest.raises(FormatError):
        parse_document({"k": 1, "vertex_labels": [1]})
    with pytest.raises(FormatError):
        parse_document({"family": "path", "params": [2], "k": 1})
