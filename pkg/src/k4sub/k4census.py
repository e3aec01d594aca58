"""Detection, enumeration and construction of K4-subdivisions.

Two subdivisions are the same iff their edge sets are equal; the real vertices
are determined by the subgraph (its four degree-3 vertices).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from ._kernels import PAIR_A, PAIR_B, k4_kernel
from .cycles import DEFAULT_CAP, cycle_edges
from .graph import Graph, InvariantViolation, fan_paths, is_k_connected, set_disjoint_paths

Edge = tuple[int, int]


@dataclass(frozen=True)
class SubdivisionCertificate:
    real_vertices: tuple[int, int, int, int]
    branch_paths: dict  # (a, b) with a < b real -> path from a to b
    edge_set: tuple[Edge, ...]

    def unreal_vertices(self) -> set[int]:
        inner = set()
        for path in self.branch_paths.values():
            inner.update(path[1:-1])
        return inner

    def vertices(self) -> set[int]:
        return set(self.real_vertices) | self.unreal_vertices()

    def to_json(self) -> dict:
        return {
            "real": list(self.real_vertices),
            "paths": [list(self.branch_paths[k]) for k in sorted(self.branch_paths)],
        }


@dataclass(frozen=True)
class K4List:
    certificates: tuple[SubdivisionCertificate, ...]
    truncated: bool = False

    def __len__(self):
        return len(self.certificates)


def _path_edges(path: Sequence[int]) -> list[Edge]:
    return [tuple(sorted(e)) for e in zip(path, path[1:])]


def is_k4_subdivision(g: Graph, edge_subset: Iterable[Sequence[int]]) -> SubdivisionCertificate | None:
    """Certificate if the edges form a K4-subdivision, else None."""
    edges = {tuple(sorted(e)) for e in edge_subset}
    missing = edges - g.edge_set
    if missing:
        raise ValueError(f"edges not in graph: {sorted(missing)}")
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    real = sorted(v for v, nb in nbrs.items() if len(nb) == 3)
    if len(real) != 4 or any(len(nb) not in (2, 3) for nb in nbrs.values()):
        return None
    real_set = set(real)
    paths: dict[Edge, tuple[int, ...]] = {}
    used: set[int] = set()
    for r in real:
        for first in sorted(nbrs[r]):
            path = [r, first]
            while path[-1] not in real_set:
                a, b = nbrs[path[-1]]
                nxt = a if a != path[-2] else b
                path.append(nxt)
                if len(path) > len(nbrs) + 1:
                    return None
            end = path[-1]
            if end == r:
                return None
            key = (min(r, end), max(r, end))
            oriented = tuple(path) if r < end else tuple(reversed(path))
            if key in paths:
                if paths[key] != oriented:
                    return None  # parallel branch paths
                continue
            paths[key] = oriented
            used.update(path)
    if len(paths) != 6 or used != set(nbrs):
        return None
    return SubdivisionCertificate(tuple(real), paths, tuple(sorted(edges)))


def _candidates(g: Graph) -> np.ndarray:
    return np.array([v for v in range(g.n) if g.degree(v) >= 3], dtype=np.int64)


def _row_to_certificate(row: np.ndarray, quad: Sequence[int]) -> SubdivisionCertificate:
    paths = {}
    edges: list[Edge] = []
    k = 6
    for p in range(6):
        ln = int(row[p])
        path = tuple(int(x) for x in row[k:k + ln])
        k += ln
        paths[(quad[PAIR_A[p]], quad[PAIR_B[p]])] = path
        edges.extend(_path_edges(path))
    return SubdivisionCertificate(tuple(quad), paths, tuple(sorted(edges)))


def _run(g: Graph, cand: np.ndarray, marks: np.ndarray | None, cap: int, record: bool):
    indptr, indices = g.csr
    if marks is None:
        marks = np.zeros(g.n, dtype=np.int64)
    return k4_kernel(indptr, indices, cand, marks, cap, record)


def enumerate_k4(g: Graph, cap: int = DEFAULT_CAP, real: Sequence[int] | None = None) -> K4List:
    """All K4-subdivisions of ``g`` (restricted to real vertex set ``real`` if given)."""
    cand = _candidates(g) if real is None else np.array(sorted(real), dtype=np.int64)
    count, truncated, _, rows = _run(g, cand, None, cap, True)
    certs = []
    for row in rows:
        # the real quadruple is the set of path endpoints
        ends = sorted(set(_path_ends(row)))
        certs.append(_row_to_certificate(row, ends))
    return K4List(tuple(certs), bool(truncated))


def _path_ends(row):
    k = 6
    out = []
    for p in range(6):
        ln = int(row[p])
        out += [int(row[k]), int(row[k + ln - 1])]
        k += ln
    return out


def count_k4(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, bool]:
    """Exact number of K4-subdivisions (``cap`` reached -> truncated)."""
    if g.n < 4:
        return 0, False
    count, truncated, _, _ = _run(g, _candidates(g), None, cap, False)
    return int(count), bool(truncated)


def k4_histogram(g: Graph, marked: Iterable[int], cap: int = DEFAULT_CAP,
                 real: Sequence[int] | None = None):
    """Counts split by how many marked vertices are real / unreal.

    Returns (hist, truncated) with ``hist[x][y]`` a Python int.
    """
    marks = np.zeros(g.n, dtype=np.int64)
    for v in marked:
        marks[v] = 1
    cand = _candidates(g) if real is None else np.array(sorted(real), dtype=np.int64)
    _, truncated, hist, _ = _run(g, cand, marks, cap, False)
    return [[int(x) for x in row] for row in hist], bool(truncated)


def _check_cycle(g: Graph, c: Sequence[int], v: int):
    if len(c) < 3 or len(set(c)) != len(c):
        raise ValueError("cycle must have at least 3 distinct vertices")
    if v in c:
        raise ValueError(f"vertex {v} lies on the cycle")
    for a, b in cycle_edges(c):
        if not g.has_edge(a, b):
            raise ValueError(f"cycle edge ({a}, {b}) not in graph")


def _certify(g: Graph, edges: set[Edge]) -> SubdivisionCertificate:
    cert = is_k4_subdivision(g, edges)
    if cert is None:
        raise InvariantViolation("constructed edge set is not a K4-subdivision")
    return cert


def k4_from_cycle(g: Graph, v: int, c: Sequence[int]) -> SubdivisionCertificate:
    """Extend a cycle of ``g - v`` to a K4-subdivision using a 3-fan from ``v``."""
    _check_cycle(g, c, v)
    if not is_k_connected(g, 3):
        raise ValueError("graph is not 3-connected")
    fan = fan_paths(g, v, c, 3)
    edges = set(cycle_edges(c))
    for path in fan.paths:
        edges.update(_path_edges(path))
    return _certify(g, edges)


def k4_from_cycle_pinned(g: Graph, v: int, x: int, y: int,
                         c: Sequence[int]) -> tuple[SubdivisionCertificate, int]:
    """Like :func:`k4_from_cycle` but forcing branch paths through edges vx, vy.

    Three disjoint paths from the cycle to {v, x, y} are completed with vx and vy;
    returns the certificate and the neighbor z of v on the third branch path.
    """
    if x == y:
        raise ValueError("x and y must be distinct")
    for w in (x, y):
        if not g.has_edge(v, w):
            raise ValueError(f"{w} is not adjacent to {v}")
    _check_cycle(g, c, v)
    if not is_k_connected(g, 3):
        raise ValueError("graph is not 3-connected")
    paths = set_disjoint_paths(g, c, (v, x, y), 3)
    if paths is None:
        raise InvariantViolation("no three disjoint cycle-to-{v,x,y} paths in a 3-connected graph")
    edges = set(cycle_edges(c)) | {tuple(sorted((v, x))), tuple(sorted((v, y)))}
    z = None
    for path in paths:
        edges.update(_path_edges(path))
        if path[-1] == v:
            z = path[-2]
    return _certify(g, edges), z


def classify_marked(cert: SubdivisionCertificate, marked: Iterable[int]) -> tuple[int, int]:
    """(number of marked real vertices, number of marked unreal vertices)."""
    marked = set(marked)
    return (len(marked & set(cert.real_vertices)), len(marked & cert.unreal_vertices()))


def quadruples(g: Graph):
    return combinations(_candidates(g).tolist(), 4)
