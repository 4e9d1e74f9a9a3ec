"""Shared fixtures: exhaustive small-graph corpus, random graphs, and the
acceptance-criterion summary printed at the end of the run."""

from __future__ import annotations

import random
import re

import networkx as nx
import pytest

from splitdom.graph import Graph, from_edge_list, is_connected, to_graph6

#: connected graph counts by vertex count (sequence of connected graphs)
CONNECTED_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _atlas_graphs(max_n: int) -> list[Graph]:
    out = []
    for k, G in enumerate(nx.graph_atlas_g()):
        n = G.number_of_nodes()
        if 2 <= n <= max_n and nx.is_connected(G):
            out.append(from_edge_list(n, list(G.edges()), f"atlas-{k}"))
    return out


@pytest.fixture(scope="session")
def corpus7() -> list[Graph]:
    """Every connected graph with 2 <= n <= 7, one per isomorphism class."""
    graphs = _atlas_graphs(7)
    assert len(graphs) == sum(CONNECTED_COUNTS.values())
    return graphs


@pytest.fixture(scope="session")
def corpus6(corpus7) -> list[Graph]:
    return [g for g in corpus7 if g.n <= 6]


@pytest.fixture(scope="session")
def corpus7_lines(corpus7) -> list[str]:
    return [to_graph6(g) for g in corpus7]


def random_connected_graphs(count: int, n_range=(7, 10), seed: int = 20250811):
    """Deterministic sample of random connected graphs."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(*n_range)
        p = rng.uniform(0.18, 0.7)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = from_edge_list(n, edges, f"rand-{len(out)}")
        if is_connected(g):
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# Acceptance summary: one pass/fail line per criterion at the end of the run
# ---------------------------------------------------------------------------

_CRITERION_RE = re.compile(r"test_acceptance\.py::test_criterion_([0-9]+[a-z]?)")
_ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _CRITERION_RE.search(report.nodeid)
    if m:
        _ACCEPTANCE_RESULTS[m.group(1)] = report.outcome


def _criterion_sort_key(label: str):
    m = re.match(r"(\d+)([a-z]?)", label)
    return (int(m.group(1)), m.group(2))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for label in sorted(_ACCEPTANCE_RESULTS, key=_criterion_sort_key):
        outcome = _ACCEPTANCE_RESULTS[label]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"  [criterion {label}] {verdict}")
