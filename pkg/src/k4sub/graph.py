"""Simple undirected graphs, the edge-list format, and disjoint-path machinery.

Vertices are ``0..n-1``. Neighbors are always visited in ascending id so that
every search in the package is deterministic.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Malformed edge-list input; ``lineno`` is 1-based (0 if not line-specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class InvariantViolation(RuntimeError):
    """Raised when a result contradicts a theorem the code relies on (a bug)."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = _norm(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> "Graph":
        edges = [tuple(int(x) for x in e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) with each row sorted ascending."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for v, nb in enumerate(self.adj):
            indptr[v + 1] = indptr[v] + len(nb)
        indices = np.fromiter(itertools.chain.from_iterable(self.adj), dtype=np.int64,
                              count=int(indptr[-1]))
        return indptr, indices

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edge_set

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabeled to 0..k-1; returns it with the old ids."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(keep), tuple(edges)), keep

    def remove_vertex(self, v: int) -> tuple["Graph", list[int]]:
        return self.induced(u for u in range(self.n) if u != v)

    def edge_subgraph(self, edges: Iterable[Sequence[int]]) -> "Graph":
        """Same vertex ids, only the given edges."""
        return Graph(self.n, tuple(_norm(*e) for e in edges))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph(self.n, tuple(_norm(perm[u], perm[v]) for u, v in self.edges))

    def to_text(self) -> str:
        lines = [f"p {self.n} {self.m}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: optional ``p <n> <m>`` header, ``u v`` lines,
    ``#`` comments and blank lines ignored."""
    n_decl = m_decl = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n_decl is not None:
                raise GraphFormatError("second header line", lineno)
            if edges:
                raise GraphFormatError("header after edges", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            try:
                n_decl, m_decl = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
            if n_decl < 0 or m_decl < 0:
                raise GraphFormatError("negative header value", lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex id", lineno)
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", lineno)
        if n_decl is not None and max(u, v) >= n_decl:
            raise GraphFormatError(f"vertex id {max(u, v)} out of declared range {n_decl}", lineno)
        e = _norm(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {u} {v} (first on line {seen[e]})", lineno)
        seen[e] = lineno
        edges.append(e)
    if m_decl is not None and m_decl != len(edges):
        raise GraphFormatError(f"header declares {m_decl} edges, found {len(edges)}")
    return Graph.from_edges(edges, n_decl)


def is_connected(g: Graph, removed: Iterable[int] = ()) -> bool:
    """Connectivity of ``g`` minus ``removed`` (the empty graph counts as connected)."""
    gone = set(removed)
    alive = [v for v in range(g.n) if v not in gone]
    if not alive:
        return True
    seen = {alive[0]}
    queue = deque([alive[0]])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in gone and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(alive)


@dataclass(frozen=True)
class PathSet:
    source: int
    targets: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Separator:
    """Failure witness for :func:`disjoint_st_paths`.

    ``vertices`` separates ``s`` from ``t`` in ``g`` (with the edge ``st`` deleted
    when ``via_edge`` is set, since that edge is then one of the paths).
    """
    s: int
    t: int
    vertices: frozenset[int]
    found: int
    via_edge: bool = False


_INF = 1 << 30


@dataclass
class _SplitNetwork:
    """Unit vertex capacities via in/out splitting; vertex v -> (2v, 2v+1)."""
    n: int
    cap: dict = field(default_factory=dict)
    out: list = field(default_factory=list)

    def __post_init__(self):
        self.out = [[] for _ in range(2 * self.n + 2)]

    @property
    def src(self) -> int:
        return 2 * self.n

    @property
    def snk(self) -> int:
        return 2 * self.n + 1

    def arc(self, a: int, b: int, c: int):
        if (a, b) not in self.cap:
            self.out[a].append(b)
            self.out[b].append(a)
            self.cap.setdefault((b, a), 0)
        self.cap[(a, b)] = self.cap.get((a, b), 0) + c

    def _augment(self) -> bool:
        prev = {self.src: None}
        queue = deque([self.src])
        while queue:
            a = queue.popleft()
            for b in self.out[a]:
                if b not in prev and self.cap[(a, b)] > 0:
                    prev[b] = a
                    if b == self.snk:
                        while prev[b] is not None:
                            a = prev[b]
                            self.cap[(a, b)] -= 1
                            self.cap[(b, a)] += 1
                            b = a
                        return True
                    queue.append(b)
        return False

    def reachable(self) -> set[int]:
        seen = {self.src}
        queue = deque([self.src])
        while queue:
            a = queue.popleft()
            for b in self.out[a]:
                if b not in seen and self.cap[(a, b)] > 0:
                    seen.add(b)
                    queue.append(b)
        return seen


def _vertex_disjoint(g: Graph, sources: Sequence[int], sinks: Sequence[int], limit: int,
                     source_cap: int = 1, sink_cap: int = 1, skip_edge=None):
    """Up to ``limit`` vertex-disjoint paths from ``sources`` to ``sinks``.

    Each path meets ``sources`` only at its first vertex and ``sinks`` only at its
    last. Returns (paths, cut) where cut is the min vertex cut when fewer than
    ``limit`` paths exist, else None.
    """
    net = _SplitNetwork(g.n)
    src_set, snk_set = set(sources), set(sinks)
    for v in range(g.n):
        c = source_cap if v in src_set else sink_cap if v in snk_set else 1
        net.arc(2 * v, 2 * v + 1, c)
    for v in sources:
        net.arc(net.src, 2 * v, _INF)
    for v in sinks:
        net.arc(2 * v + 1, net.snk, _INF)
    for u, v in g.edges:
        if skip_edge is not None and (u, v) == skip_edge:
            continue
        for a, b in ((u, v), (v, u)):
            if b in src_set or a in snk_set:
                continue
            net.arc(2 * a + 1, 2 * b, _INF)
    # snapshot of original capacities for flow decomposition
    original = dict(net.cap)
    flow_value = 0
    while flow_value < limit and net._augment():
        flow_value += 1
    flow = {k: original[k] - net.cap[k] for k in original if original[k] > 0 and original[k] > net.cap[k]}
    paths = []
    for _ in range(flow_value):
        node, path = net.src, []
        while node != net.snk:
            nxt = next(b for b in sorted(net.out[node]) if flow.get((node, b), 0) > 0)
            flow[(node, nxt)] -= 1
            if nxt < 2 * g.n and nxt % 2 == 0:
                path.append(nxt // 2)
            node = nxt
        paths.append(tuple(path))
    paths.sort()
    cut = None
    if flow_value < limit:
        reach = net.reachable()
        cut = frozenset(v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach)
    return paths, cut


def disjoint_st_paths(g: Graph, s: int, t: int, k: int) -> PathSet | Separator:
    """``k`` internally disjoint s-t paths, or a :class:`Separator` of size < k."""
    if s == t:
        raise ValueError("s and t must differ")
    for x in (s, t):
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range")
    if k < 1:
        raise ValueError("k must be positive")
    adjacent = g.has_edge(s, t)
    need = k - 1 if adjacent else k
    paths: list[tuple[int, ...]] = []
    cut = None
    if need > 0:
        paths, cut = _vertex_disjoint(g, [s], [t], need, source_cap=need, sink_cap=need,
                                      skip_edge=_norm(s, t) if adjacent else None)
    if adjacent:
        paths = [(s, t)] + paths
    if cut is not None:
        return Separator(s, t, cut, len(paths), via_edge=adjacent)
    return PathSet(s, (t,) * k, tuple(paths[:k]))


def local_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths (capped at ``limit``)."""
    limit = g.n if limit is None else limit
    res = disjoint_st_paths(g, s, t, limit)
    return len(res.paths) if isinstance(res, PathSet) else res.found


def is_k_connected(g: Graph, k: int) -> bool:
    """``n > k`` and no set of fewer than ``k`` vertices disconnects ``g``."""
    if k < 1:
        raise ValueError("k must be positive")
    if g.n <= k:
        return False
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if min(g.degrees()) < k:
        return False
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            _, cut = _vertex_disjoint(g, [s], [t], k, source_cap=k, sink_cap=k)
            if cut is not None:
                return False
    return True


def fan_paths(g: Graph, v: int, c_set: Iterable[int], k: int) -> PathSet:
    """``k`` paths from ``v`` to distinct members of ``c_set``, sharing only ``v``
    and each meeting ``c_set`` only at its last vertex."""
    targets = sorted(set(c_set))
    if v in targets:
        raise ValueError("v must not lie in the target set")
    if len(targets) < k:
        raise ValueError(f"target set has {len(targets)} < {k} vertices")
    if not is_k_connected(g, k):
        raise ValueError(f"graph is not {k}-connected")
    paths, cut = _vertex_disjoint(g, [v], targets, k, source_cap=k)
    if cut is not None:
        raise InvariantViolation(f"fan from {v} blocked by {sorted(cut)} in a {k}-connected graph")
    return PathSet(v, tuple(p[-1] for p in paths), tuple(paths))


def set_disjoint_paths(g: Graph, sources: Iterable[int], sinks: Iterable[int], k: int):
    """``k`` vertex-disjoint paths from ``sources`` to ``sinks`` (length 0 allowed
    on the intersection), or None."""
    paths, cut = _vertex_disjoint(g, sorted(set(sources)), sorted(set(sinks)), k)
    return None if cut is not None else paths
