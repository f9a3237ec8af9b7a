import os

import pytest
from hypothesis import settings

from ksgraceful.graph import Graph, nk2

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def small_graphs():
    """Every graph without isolated vertices and with p + q <= 12, up to isomorphism."""
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        p, q = h.number_of_nodes(), h.number_of_edges()
        if p < 2 or q == 0 or p + q > 12 or any(d == 0 for _, d in h.degree()):
            continue
        out.append(Graph(p, tuple(sorted(tuple(sorted(e)) for e in h.edges())), f"atlas-{p}-{q}-{len(out)}"))
    # the atlas stops at 7 vertices; 4K2 is the only such graph on 8
    out.append(nk2(4))
    return out


def pytest_collection_modifyitems(config, items):
    if os.environ.get("KSG_LONG") == "1":
        return
    skip = pytest.mark.skip(reason="long-running; set KSG_LONG=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.pytest_terminal_lines():
        terminalreporter.write_line(line)
