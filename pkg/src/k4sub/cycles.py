"""Exhaustive cycle and s-t path enumeration."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import cycles_kernel, st_paths_kernel
from .graph import Graph

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class CycleList:
    """Cycles as vertex tuples, rotated to start at their minimum vertex and
    oriented so the second vertex is the smaller neighbor of the first."""
    cycles: tuple[tuple[int, ...], ...]
    truncated: bool = False

    def __len__(self):
        return len(self.cycles)


def canonical_cycle(cycle) -> tuple[int, ...]:
    cyc = list(cycle)
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if len(cyc) > 2 and cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[1:][::-1]
    return tuple(cyc)


def enumerate_cycles(g: Graph, cap: int = DEFAULT_CAP) -> CycleList:
    indptr, indices = g.csr
    count, truncated, rows, lens = cycles_kernel(indptr, indices, cap, True)
    cycles = tuple(tuple(int(x) for x in rows[i, :lens[i]]) for i in range(count))
    return CycleList(cycles, bool(truncated))


def count_cycles(g: Graph, cap: int = DEFAULT_CAP) -> tuple[int, bool]:
    indptr, indices = g.csr
    count, truncated, _, _ = cycles_kernel(indptr, indices, cap, False)
    return int(count), bool(truncated)


def count_st_paths(g: Graph, s: int, t: int, cap: int = DEFAULT_CAP) -> tuple[int, bool]:
    """Number of simple s-t paths in ``g`` (exact unless the flag is set)."""
    if s == t:
        raise ValueError("s and t must differ")
    for x in (s, t):
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range")
    indptr, indices = g.csr
    count, truncated = st_paths_kernel(indptr, indices, np.int64(s), np.int64(t), cap)
    return int(count), bool(truncated)


def cycle_edges(cycle) -> frozenset[tuple[int, int]]:
    k = len(cycle)
    return frozenset(tuple(sorted((cycle[i], cycle[(i + 1) % k]))) for i in range(k))
