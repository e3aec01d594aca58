"""Closed-form cycle and K4-subdivision bounds, and a report that checks them
against exact enumeration. All arithmetic is in integers or Fractions.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import ceil, comb
from typing import Sequence

from .cycles import DEFAULT_CAP, count_cycles
from .graph import Graph, is_k_connected
from .k4census import count_k4


def binom2(x) -> Fraction:
    """x(x-1)/2 for integer or rational x."""
    x = Fraction(x)
    return x * (x - 1) / 2


def ear_count_formula(n: int, m: int) -> int:
    return m - n + 1


def cycle_bound_ears(l: int) -> int:
    if l < 1:
        raise ValueError("a 2-connected graph has at least one ear")
    return comb(l + 1, 2)


def cycle_bound_nm(n: int, m: int) -> int:
    if m < n:
        raise ValueError("a 2-connected graph has m >= n")
    return comb(m - n + 2, 2)


def cycle_bound_min_degree(n: int, delta: int) -> Fraction:
    """C(n(delta/2 - 1) + 2, 2), exact (a Fraction when n*delta is odd)."""
    if delta < 2:
        raise ValueError("minimum degree of a 2-connected graph is at least 2")
    return binom2(Fraction(n) * (Fraction(delta, 2) - 1) + 2)


def cycle_bound_min_degree_expanded(n: int, delta: int) -> Fraction:
    return Fraction((delta - 2) ** 2 * n * n, 8) + Fraction(3 * (delta - 2) * n, 4) + 1


def phi_lower_cubic(n: int) -> int:
    if n < 4:
        raise ValueError("n must be at least 4")
    return max(0, ceil(Fraction(n ** 3, 32) - Fraction(n ** 2, 16)))


def phi_upper_wheel(n: int) -> int:
    if n < 4:
        raise ValueError("n must be at least 4")
    return comb(n - 1, 3)


def _check_degrees(n: int, degrees: Sequence[int]) -> int:
    if len(degrees) != n:
        raise ValueError(f"expected {n} degrees, got {len(degrees)}")
    if min(degrees) < 3:
        raise ValueError("all degrees must be at least 3")
    total = sum(degrees)
    if total % 2:
        raise ValueError("degree sum must be even")
    m = total // 2
    if 2 * m < 3 * n:
        raise ValueError("need m >= 3n/2")
    return m


def cycle_sum_bound(n: int, degrees: Sequence[int]) -> tuple[int, Fraction]:
    """(sum over v of C(a - d_v + 1, 2) with a = m - n + 2, and n^3/8 - n^2/4)."""
    m = _check_degrees(n, degrees)
    a = m - n + 2
    exact = sum(comb(a - d + 1, 2) for d in degrees)
    return exact, Fraction(n ** 3, 8) - Fraction(n ** 2, 4)


def star_bound(n: int, degrees: Sequence[int]) -> Fraction:
    """1/4 * sum over v of ceil(C(d_v, 2) / 3) * C(a - d_v + 1, 2)."""
    m = _check_degrees(n, degrees)
    a = m - n + 2
    return Fraction(sum(ceil(Fraction(comb(d, 2), 3)) * comb(a - d + 1, 2) for d in degrees), 4)


def phi_lower_m4n(n: int, m: int) -> Fraction:
    """m/6 * C(m/3, 2) * (m/n - 1/2); only valid for m > 3n."""
    if m <= 3 * n:
        raise ValueError("bound inapplicable for m <= 3n; use phi_lower_cubic")
    return Fraction(m, 6) * binom2(Fraction(m, 3)) * (Fraction(m, n) - Fraction(1, 2))


@dataclass
class BoundReport:
    n: int
    m: int
    degrees: list[int]
    two_connected: bool
    three_connected: bool
    cycles: int | None = None
    cycles_per_deleted_vertex: list[int] | None = None
    k4_count: int | None = None
    truncated: bool = False
    bounds: dict = field(default_factory=dict)
    flags: dict = field(default_factory=dict)
    inapplicable: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.flags.values())

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, bool) or x is None:
                return x
            if isinstance(x, (int, Fraction)):
                return str(x)
            if isinstance(x, list):
                return [enc(v) for v in x]
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            return x

        out = {k: enc(v) for k, v in asdict(self).items()}
        out["ok"] = self.ok
        return out


def bound_report(g: Graph, cap: int = DEFAULT_CAP) -> BoundReport:
    """Evaluate every applicable bound and compare with exact counts.

    Cycle bounds need 2-connectivity, the K4 bounds 3-connectivity; the rest are
    listed in ``inapplicable``. A flag is skipped (not failed) when the count it
    needs was truncated.
    """
    degrees = g.degrees()
    two = is_k_connected(g, 2)
    three = two and is_k_connected(g, 3)
    rep = BoundReport(g.n, g.m, degrees, two, three)
    b, f = rep.bounds, rep.flags

    if two:
        cyc, trunc = count_cycles(g, cap)
        rep.cycles = cyc
        rep.truncated |= trunc
        l = ear_count_formula(g.n, g.m)
        b["ear_count"] = l
        b["cycles_from_ears"] = cycle_bound_ears(l)
        b["cycles_from_nm"] = cycle_bound_nm(g.n, g.m)
        b["cycles_from_min_degree"] = cycle_bound_min_degree(g.n, min(degrees))
        if not trunc:
            f["cycles_from_ears"] = cyc >= b["cycles_from_ears"]
            f["cycles_from_nm"] = cyc >= b["cycles_from_nm"]
            f["cycles_from_min_degree"] = cyc >= b["cycles_from_min_degree"]
    else:
        rep.inapplicable += ["ear_count", "cycles_from_ears", "cycles_from_nm", "cycles_from_min_degree"]

    if three:
        per_vertex = []
        for v in range(g.n):
            c, trunc = count_cycles(g.remove_vertex(v)[0], cap)
            per_vertex.append(c)
            rep.truncated |= trunc
        rep.cycles_per_deleted_vertex = per_vertex
        k4, trunc = count_k4(g, cap)
        rep.k4_count = k4
        rep.truncated |= trunc
        total = sum(per_vertex)
        exact_sum, chain = cycle_sum_bound(g.n, degrees)
        b["cycle_sum"] = total
        b["cycle_sum_exact"] = exact_sum
        b["cycle_sum_chain"] = chain
        b["phi_lower_cubic"] = phi_lower_cubic(g.n)
        b["phi_upper_wheel"] = phi_upper_wheel(g.n)
        b["fan_quarter"] = Fraction(total, 4)
        b["fan_pinned_quarter"] = Fraction(
            sum(ceil(Fraction(comb(d, 2), 3)) * c for d, c in zip(degrees, per_vertex)), 4)
        b["star"] = star_bound(g.n, degrees)
        if g.m > 3 * g.n:
            b["m4n"] = phi_lower_m4n(g.n, g.m)
        else:
            rep.inapplicable.append("m4n")
        if not rep.truncated:
            f["cycle_sum_exact"] = total >= exact_sum
            f["cycle_sum_chain"] = total >= chain
            f["phi_lower_cubic"] = k4 >= b["phi_lower_cubic"]
            f["fan_quarter"] = k4 >= b["fan_quarter"]
            f["fan_pinned_quarter"] = k4 >= b["fan_pinned_quarter"]
            f["star"] = k4 >= b["star"]
            if "m4n" in b:
                f["m4n"] = k4 >= b["m4n"]
            # informational: the wheel count is conjectured to be the minimum
            b["conjecture_gap"] = k4 - b["phi_upper_wheel"]
    else:
        rep.inapplicable += ["cycle_sum", "phi_lower_cubic", "phi_upper_wheel", "fan_quarter",
                             "fan_pinned_quarter", "star", "m4n"]
    return rep
