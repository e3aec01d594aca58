import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from k4sub.generators import (complete, complete_bipartite, cycle_graph, path_graph, prism,
                              random_2connected, random_3connected, wheel)
from k4sub.graph import Graph


def octahedron():
    return Graph.from_edges([e for e in combinations(range(6), 2)
                             if e not in ((0, 1), (2, 3), (4, 5))], 6)


def named_graphs():
    return {
        "K4": complete(4), "K5": complete(5), "W5": wheel(5), "W6": wheel(6),
        "prism": prism(), "K23": complete_bipartite(2, 3), "K33": complete_bipartite(3, 3),
        "C6": cycle_graph(6), "P4": path_graph(4), "octahedron": octahedron(),
        "K5-e": Graph.from_edges([e for e in combinations(range(5), 2) if e != (0, 1)], 5),
    }


def small_corpus():
    """Graphs with n <= 6 and m <= 12 for oracle comparisons."""
    out = dict(named_graphs())
    for seed in range(12):
        out[f"rand3_{seed}"] = random_3connected(5 + seed % 2, seed)
        out[f"rand2_{seed}"] = random_2connected(6, 1 + seed % 6, seed)
    return {k: g for k, g in out.items() if g.n <= 6 and g.m <= 12}


@st.composite
def graphs(draw, max_n=7, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, keep in zip(pairs, mask) if keep))


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
