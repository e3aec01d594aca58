"""The two counting reductions: s-t paths -> fixed-real-vertex K4-subdivisions ->
K4-subdivisions, and K4-subdivisions in general graphs -> in k-connected graphs
via apex vertices plus exact polynomial interpolation.
"""
from __future__ import annotations

import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Mapping, Sequence

from .cycles import DEFAULT_CAP
from .generators import GadgetChain, gadget_chain
from .graph import Graph, InvariantViolation
from .k4census import count_k4, enumerate_k4, k4_histogram


@dataclass(frozen=True)
class FixedInstance:
    graph: Graph
    a: int
    b: int
    c: int
    d: int
    s: int
    t: int

    @property
    def markers(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


def build_fixed_instance(g: Graph, s: int, t: int) -> FixedInstance:
    """K4 on new vertices a, b, c, d with the edge ab replaced by a-s, g, t-b.

    The vertices of ``g`` keep their ids; a, b, c, d are ``n .. n+3``.
    """
    if s == t:
        raise ValueError("s and t must differ")
    for x in (s, t):
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range")
    n = g.n
    a, b, c, d = n, n + 1, n + 2, n + 3
    edges = list(g.edges) + [(a, c), (a, d), (c, d), (b, c), (b, d), (s, a), (t, b)]
    return FixedInstance(Graph.from_edges(edges, n + 4), a, b, c, d, s, t)


def count_fixed_subdivisions(fi: FixedInstance, cap: int = DEFAULT_CAP) -> int:
    """K4-subdivisions of G' whose real vertices are exactly {a, b, c, d}."""
    if min(fi.graph.degree(x) for x in fi.markers) < 3:
        return 0
    hist, truncated = k4_histogram(fi.graph, (), cap, real=fi.markers)
    if truncated:
        raise OverflowError(f"more than {cap} fixed subdivisions")
    return sum(map(sum, hist))


@dataclass(frozen=True)
class WeightedInstance:
    graph: Graph
    cells: int
    markers: tuple[int, int, int, int]
    # G'-edge -> list of (chain, vertex ids of the chain inside G'')
    gadget_map: dict = field(default_factory=dict)
    certified: bool = False

    def gadget_inner_vertices(self) -> set[int]:
        inner = set()
        for (u, v), chains in self.gadget_map.items():
            for _, ids in chains:
                inner.update(x for x in ids if x not in (u, v))
        return inner


def build_weighted_instance(fi: FixedInstance, cells: int, k4_count: int | None = None) -> WeightedInstance:
    """Replace G'-edges touching {a, b, c, d} by diamond chains.

    One chain (``2**cells`` paths) for an edge with one marker endpoint, two
    chains in series (``2**(2*cells)``) for an edge between markers. Recovery
    needs ``2**cells`` to exceed every class count; this is certified with the
    exact ``k4_count`` of G' if supplied, else with the crude ``2**C(n, 2)``
    bound, and a warning is issued when neither holds.
    """
    if cells < 1:
        raise ValueError("cells must be at least 1")
    g = fi.graph
    mark = set(fi.markers)
    limit = k4_count if k4_count is not None else 2 ** comb(g.n, 2)
    certified = 2 ** cells > limit
    if not certified:
        warnings.warn(f"2**{cells} does not certifiably exceed the K4 count of G'", stacklevel=2)
    chain = gadget_chain(cells)
    nxt = g.n
    edges: list[tuple[int, int]] = []
    gmap: dict = {}

    def embed(u: int, v: int) -> tuple[GadgetChain, list[int]]:
        nonlocal nxt
        ids = []
        j0, j1 = chain.endpoints
        for x in range(chain.graph.n):
            if x == j0:
                ids.append(u)
            elif x == j1:
                ids.append(v)
            else:
                ids.append(nxt)
                nxt += 1
        edges.extend((ids[p], ids[q]) for p, q in chain.graph.edges)
        return chain, ids

    for u, v in g.edges:
        ends = (u in mark) + (v in mark)
        if ends == 0:
            edges.append((u, v))
        elif ends == 1:
            gmap[(u, v)] = [embed(u, v)]
        else:
            mid = nxt
            nxt += 1
            gmap[(u, v)] = [embed(u, mid), embed(mid, v)]
    return WeightedInstance(Graph.from_edges(edges, nxt), cells, fi.markers, gmap, certified)


def weighted_identity(fi: FixedInstance, cells: int, cap: int = DEFAULT_CAP) -> tuple[int, list[list[int]]]:
    """Predicted #K4(G'') from the classes N[x][y] of G' (x real, y unreal markers)."""
    hist, truncated = k4_histogram(fi.graph, fi.markers, cap)
    if truncated:
        raise OverflowError("G' too large to classify")
    total = sum(2 ** (cells * (3 * x + 2 * y)) * hist[x][y]
                for x in range(5) for y in range(5) if x + y <= 4 and y < len(hist[x]))
    return total, hist


def recover_fixed_count(total: int, cells: int) -> int:
    if cells < 1:
        raise ValueError("cells must be at least 1")
    return total // 2 ** (12 * cells)


@dataclass(frozen=True)
class ApexInstance:
    graph: Graph
    base_size: int
    apexes: tuple[int, ...]


def build_apex_instance(g: Graph, s: int) -> ApexInstance:
    """Add ``s`` pairwise non-adjacent vertices joined to every vertex of ``g``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    n = g.n
    apexes = tuple(range(n, n + s))
    edges = list(g.edges) + [(x, v) for x in apexes for v in range(n)]
    return ApexInstance(Graph.from_edges(edges, n + s), n, apexes)


def p_falling(s: int, t: int) -> int:
    """s (s-1) ... (s-t+1); zero when t > s."""
    if s < 0 or t < 0:
        raise ValueError("s and t must be non-negative")
    out = 1
    for i in range(t):
        out *= s - i
    return out


@dataclass
class ApexCensus:
    totals: dict  # s -> #K4(G_s)
    by_t: dict  # s -> {t: number of subdivisions using exactly t apexes}
    per_subset: dict  # t -> subdivisions whose apex set is one fixed t-set
    n_t: dict  # t -> count_t / P(s, t) as a Fraction

    @property
    def integral(self) -> bool:
        return all(v.denominator == 1 for v in self.n_t.values())


def apex_census(g: Graph, s_values: Sequence[int], cap: int = DEFAULT_CAP,
                t_max: int | None = None) -> ApexCensus:
    """Count subdivisions of each G_s by the number t of apexes they use.

    Apexes are interchangeable, so count_t = C(s, t) * A_t where A_t (the
    subdivisions using one fixed set of t apexes) cannot depend on s; that is
    checked here. N_t = count_t / P(s, t) = A_t / t! is returned exactly and is
    not always an integer: a subdivision can be fixed by swapping two apexes.
    If ``t_max`` is given, every ``s`` must be at least ``t_max``.
    """
    if t_max is not None and any(s < t_max for s in s_values):
        raise ValueError(f"every s must be >= t_max={t_max}")
    totals, by_t, per_subset = {}, {}, {}
    for s in s_values:
        inst = build_apex_instance(g, s)
        hist, truncated = k4_histogram(inst.graph, inst.apexes, cap)
        if truncated:
            raise OverflowError(f"G_{s} has more than {cap} subdivisions")
        counts: dict[int, int] = defaultdict(int)
        for x, row in enumerate(hist):
            for y, c in enumerate(row):
                if c:
                    counts[x + y] += c
        totals[s] = sum(counts.values())
        by_t[s] = dict(sorted(counts.items()))
        for t, c in counts.items():
            q, r = divmod(c, comb(s, t))
            if r:
                raise InvariantViolation(f"count_{t} = {c} not divisible by C({s},{t})")
            if per_subset.setdefault(t, q) != q:
                raise InvariantViolation(f"A_{t} depends on s ({per_subset[t]} vs {q} at s={s})")
    per_subset = dict(sorted(per_subset.items()))
    n_t = {t: Fraction(a, factorial(t)) for t, a in per_subset.items()}
    return ApexCensus(totals, by_t, per_subset, n_t)


def partial_classes(g: Graph, s: int, cap: int = DEFAULT_CAP) -> tuple[dict, dict]:
    """Group the subdivisions of G_s by partial subdivision.

    Returns two dicts t -> number of classes: keyed by (remaining edges, gap
    neighbor sets of the used apexes), i.e. orbits under relabeling apexes, and
    keyed by remaining edges alone.
    """
    inst = build_apex_instance(g, s)
    apex = set(inst.apexes)
    with_gaps: dict = defaultdict(set)
    edges_only: dict = defaultdict(set)
    for cert in enumerate_k4(inst.graph, cap).certificates:
        used = apex & cert.vertices()
        rest = tuple(e for e in cert.edge_set if not (apex & set(e)))
        gaps = frozenset(frozenset(v for e in cert.edge_set if x in e for v in e if v != x)
                         for x in used)
        with_gaps[len(used)].add((rest, gaps))
        edges_only[len(used)].add(rest)
    return ({t: len(v) for t, v in sorted(with_gaps.items())},
            {t: len(v) for t, v in sorted(edges_only.items())})


def solve_exact(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction]:
    """Gaussian elimination over the rationals; raises on a singular matrix."""
    size = len(matrix)
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[r][size] for r in range(size)]


def vandermonde_coefficients(evals: Mapping[int, int], t_max: int) -> list[Fraction]:
    """Coefficients of the degree-``t_max`` polynomial through ``t_max + 1`` points."""
    keys = [int(s) for s in evals]
    if len(set(keys)) != len(keys):
        raise ValueError("repeated s value")
    if len(keys) < t_max + 1:
        raise ValueError(f"need {t_max + 1} evaluation points, got {len(keys)}")
    pts = sorted(keys)[: t_max + 1]
    matrix = [[s ** j for j in range(t_max + 1)] for s in pts]
    values = {int(s): int(v) for s, v in evals.items()}
    return solve_exact(matrix, [values[s] for s in pts])


def vandermonde_recover(evals: Mapping[int, int], t_max: int) -> int:
    """Constant term N_0 of the polynomial sum_t s**t N'_t fitted to ``evals``."""
    coeffs = vandermonde_coefficients(evals, t_max)
    n0 = coeffs[0]
    if n0.denominator != 1:
        raise ArithmeticError(f"non-integral constant term {n0}")
    return int(n0)


def count_k4_via_apexes(g: Graph, s_values: Sequence[int], t_max: int, cap: int = DEFAULT_CAP) -> int:
    """#K4(g) recovered only from counts of the apex graphs G_s."""
    evals = {}
    for s in s_values:
        total, truncated = count_k4(build_apex_instance(g, s).graph, cap)
        if truncated:
            raise OverflowError(f"G_{s} has more than {cap} subdivisions")
        evals[s] = total
    return vandermonde_recover(evals, t_max)
