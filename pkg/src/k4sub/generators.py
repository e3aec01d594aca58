"""Named graph families and seeded random 2-/3-connected graphs.

Randomness comes from ``numpy.random.default_rng(seed)`` (the PCG64 bit
generator), so every generator is a pure function of its arguments.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Graph, is_k_connected


def wheel(n: int) -> Graph:
    """Hub 0 joined to the rim cycle 1..n-1."""
    if n < 4:
        raise ValueError("a wheel needs at least 4 vertices")
    rim = list(range(1, n))
    edges = [(0, r) for r in rim] + [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return Graph.from_edges(edges, n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    return Graph.from_edges(combinations(range(n), 2), n)


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise ValueError("both sides must be non-empty")
    return Graph.from_edges([(i, p + j) for i in range(p) for j in range(q)], p + q)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges([(i, (i + 1) % n) for i in range(n)], n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges([(i, i + 1) for i in range(n - 1)], n)


def prism() -> Graph:
    """Triangular prism: two triangles joined by a perfect matching."""
    return Graph.from_edges([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                             (0, 3), (1, 4), (2, 5)], 6)


@dataclass(frozen=True)
class GadgetChain:
    cells: int
    graph: Graph
    endpoints: tuple[int, int]
    junctions: tuple[int, ...]


def gadget_chain(c: int) -> GadgetChain:
    """Series chain of ``c`` diamonds: junction j_i, inner pair, junction j_{i+1}.

    The chain has exactly ``c`` cycles and ``2**c`` end-to-end paths.
    """
    if c < 1:
        raise ValueError("a gadget chain needs at least one cell")
    junctions = [3 * i for i in range(c + 1)]
    edges = []
    for i in range(c):
        j, a, b, k = 3 * i, 3 * i + 1, 3 * i + 2, 3 * i + 3
        edges += [(j, a), (j, b), (a, k), (b, k)]
    return GadgetChain(c, Graph.from_edges(edges, 3 * c + 1), (0, 3 * c), tuple(junctions))


def random_2connected(n_target: int, ears_target: int, seed: int) -> Graph:
    """Random cycle plus ``ears_target - 1`` random open ears on ``n_target`` vertices.

    The result has ``n_target + ears_target - 1`` edges.
    """
    if n_target < 3 or ears_target < 1:
        raise ValueError("need n_target >= 3 and ears_target >= 1")
    m = n_target + ears_target - 1
    if m > n_target * (n_target - 1) // 2:
        raise ValueError(f"{ears_target} ears on {n_target} vertices exceed a simple graph")
    rng = np.random.default_rng(seed)
    for _ in range(200):
        g = _try_ears(n_target, ears_target, rng)
        if g is not None:
            return g
    raise ValueError(f"could not realize ({n_target}, {ears_target}) as an ear sequence")


def _try_ears(n: int, ears: int, rng) -> Graph | None:
    extra = ears - 1
    # split the n vertices between the initial cycle (>= 3) and the ear interiors
    cyc = int(rng.integers(3, n + 1)) if extra else n
    inner = rng.multinomial(n - cyc, [1 / extra] * extra).tolist() if extra else []
    order = rng.permutation(n).tolist()
    cycle = order[:cyc]
    pool = order[cyc:]
    edges = {tuple(sorted((cycle[i], cycle[(i + 1) % cyc]))) for i in range(cyc)}
    present = list(cycle)
    for k in inner:
        new = [pool.pop() for _ in range(k)]
        options = [(a, b) for a, b in combinations(sorted(present), 2)
                   if k > 0 or (a, b) not in edges]
        if not options:
            return None
        a, b = options[int(rng.integers(len(options)))]
        if rng.random() < 0.5:
            a, b = b, a
        chain = [a] + new + [b]
        edges.update(tuple(sorted(e)) for e in zip(chain, chain[1:]))
        present += new
    return Graph.from_edges(sorted(edges), n)


def random_3connected(n: int, seed: int, extra_edges: float = 0.3) -> Graph:
    """Random 3-connected graph grown from K4 (= wheel(4)).

    Each step adds a vertex either by splitting a vertex of degree >= 4 (both
    halves keep >= 2 old neighbors and the new edge between them) or by joining a
    new vertex to 3+ existing ones; random edges are added in between. Every
    operation preserves 3-connectivity; the result is re-checked anyway.
    """
    if n < 4:
        raise ValueError("3-connected graphs need at least 4 vertices")
    rng = np.random.default_rng(seed)
    adj: list[set[int]] = [set(range(4)) - {v} for v in range(4)]
    while len(adj) < n:
        big = [v for v in range(len(adj)) if len(adj[v]) >= 4]
        if big and rng.random() < 0.6:
            v = big[int(rng.integers(len(big)))]
            nb = sorted(adj[v])
            perm = rng.permutation(len(nb)).tolist()
            cut = int(rng.integers(2, len(nb) - 1))
            moved = [nb[i] for i in perm[cut:]]
            w = len(adj)
            adj.append(set())
            for u in moved:
                adj[v].discard(u)
                adj[u].discard(v)
                adj[u].add(w)
                adj[w].add(u)
            adj[v].add(w)
            adj[w].add(v)
        else:
            k = int(rng.integers(3, min(len(adj), 5) + 1))
            nb = rng.choice(len(adj), size=k, replace=False).tolist()
            w = len(adj)
            adj.append(set())
            for u in nb:
                adj[u].add(w)
                adj[w].add(u)
        missing = [(a, b) for a, b in combinations(range(len(adj)), 2) if b not in adj[a]]
        if missing and rng.random() < extra_edges:
            a, b = missing[int(rng.integers(len(missing)))]
            adj[a].add(b)
            adj[b].add(a)
    g = Graph.from_edges([(u, w) for u in range(n) for w in adj[u] if u < w], n)
    if not is_k_connected(g, 3):
        raise AssertionError("3-connectivity lost while growing graph")  # pragma: no cover
    return g
