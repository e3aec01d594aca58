import warnings
from fractions import Fraction
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from oracles import lagrange_at_zero
from k4sub.cycles import count_st_paths
from k4sub.generators import complete, cycle_graph, path_graph
from k4sub.graph import Graph
from k4sub.k4census import count_k4, enumerate_k4
from k4sub.reductions import (apex_census, build_apex_instance, build_fixed_instance,
                              build_weighted_instance, count_fixed_subdivisions, count_k4_via_apexes,
                              p_falling, partial_classes, recover_fixed_count, solve_exact,
                              vandermonde_coefficients, vandermonde_recover, weighted_identity)

EDGE = Graph.from_edges([(0, 1)])


class TestFixed:
    def test_sizes(self):
        fi = build_fixed_instance(EDGE, 0, 1)
        assert (fi.graph.n, fi.graph.m) == (6, 8)
        fi = build_fixed_instance(path_graph(3), 0, 2)
        assert (fi.graph.n, fi.graph.m) == (7, 9)

    def test_marker_structure(self):
        fi = build_fixed_instance(cycle_graph(5), 1, 3)
        g = fi.graph
        a, b, c, d = fi.markers
        assert not g.has_edge(a, b)
        assert all(g.has_edge(*sorted(p)) for p in [(a, c), (a, d), (c, d), (b, c), (b, d)])
        assert set(g.adj[a]) == {c, d, 1} and set(g.adj[b]) == {c, d, 3}

    def test_counts(self):
        assert count_fixed_subdivisions(build_fixed_instance(EDGE, 0, 1)) == 1
        assert count_fixed_subdivisions(build_fixed_instance(cycle_graph(4), 0, 1)) == 2
        split = Graph.from_edges([(0, 1), (2, 3)])
        assert count_fixed_subdivisions(build_fixed_instance(split, 0, 3)) == 0

    def test_same_endpoint(self):
        with pytest.raises(ValueError):
            build_fixed_instance(cycle_graph(4), 2, 2)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=7, min_n=2), st.data())
    def test_reduction_matches_paths(self, g, data):
        s = data.draw(st.integers(0, g.n - 1))
        t = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != s))
        fi = build_fixed_instance(g, s, t)
        assert count_fixed_subdivisions(fi) == count_st_paths(g, s, t)[0]


class TestWeighted:
    def test_smallest_instance(self):
        fi = build_fixed_instance(EDGE, 0, 1)
        wi = build_weighted_instance(fi, 1, k4_count=count_k4(fi.graph)[0])
        assert wi.certified
        assert (wi.graph.n, wi.graph.m) == (35, 49)
        total = count_k4(wi.graph)[0]
        assert total == 4096
        assert recover_fixed_count(total, 1) == 1 == count_st_paths(EDGE, 0, 1)[0]

    def test_gadget_map_shape(self):
        fi = build_fixed_instance(cycle_graph(4), 0, 2)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            wi = build_weighted_instance(fi, 2)
        mark = set(fi.markers)
        for e in fi.graph.edges:
            ends = len(mark & set(e))
            if ends == 0:
                assert wi.graph.has_edge(*e) and e not in wi.gadget_map
            else:
                assert len(wi.gadget_map[e]) == ends

    def test_warns_when_uncertified(self):
        fi = build_fixed_instance(EDGE, 0, 1)
        with pytest.warns(UserWarning):
            wi = build_weighted_instance(fi, 1)
        assert not wi.certified

    def test_rejects_zero_cells(self):
        with pytest.raises(ValueError):
            build_weighted_instance(build_fixed_instance(EDGE, 0, 1), 0)

    def test_no_gadget_vertex_is_real(self):
        fi = build_fixed_instance(EDGE, 0, 1)
        wi = build_weighted_instance(fi, 1, k4_count=1)
        inner = wi.gadget_inner_vertices()
        assert len(inner) == 35 - 6
        bad = [c for c in enumerate_k4(wi.graph).certificates if inner & set(c.real_vertices)]
        assert bad == []

    @pytest.mark.parametrize("g, s, t", [(EDGE, 0, 1), (path_graph(3), 0, 2), (cycle_graph(3), 0, 1)])
    def test_identity(self, g, s, t):
        fi = build_fixed_instance(g, s, t)
        predicted, hist = weighted_identity(fi, 1)
        assert hist[4][0] == count_st_paths(g, s, t)[0]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            wi = build_weighted_instance(fi, 1)
        assert count_k4(wi.graph, cap=10 ** 8)[0] == predicted

    @pytest.mark.slow
    def test_two_cells(self):
        fi = build_fixed_instance(EDGE, 0, 1)
        wi = build_weighted_instance(fi, 2, k4_count=1)
        total, truncated = count_k4(wi.graph, cap=2 ** 25)
        assert not truncated and total == 2 ** 24
        assert recover_fixed_count(total, 2) == 1


def test_recover_fixed():
    assert recover_fixed_count(4096, 1) == 1
    assert recover_fixed_count(2 ** 12 * 7 + 123, 1) == 7
    assert recover_fixed_count(0, 3) == 0
    with pytest.raises(ValueError):
        recover_fixed_count(5, 0)


class TestApex:
    def test_sizes(self):
        inst = build_apex_instance(complete(4), 3)
        assert (inst.graph.n, inst.graph.m) == (7, 18)
        assert build_apex_instance(complete(4), 1).graph == complete(5)

    def test_apex_contract(self):
        inst = build_apex_instance(cycle_graph(5), 4)
        for x in inst.apexes:
            assert inst.graph.degree(x) == 5
            assert not set(inst.graph.adj[x]) & set(inst.apexes)
        with pytest.raises(ValueError):
            build_apex_instance(cycle_graph(5), 0)

    def test_p_falling(self):
        assert p_falling(5, 2) == 20
        assert p_falling(7, 0) == 1
        assert p_falling(3, 4) == 0
        with pytest.raises(ValueError):
            p_falling(-1, 2)

    def test_census_k5(self):
        cen = apex_census(complete(4), [1])
        assert cen.totals[1] == 35
        assert cen.n_t == {0: 1, 1: 34}

    def test_census_identity_across_s(self):
        cen = apex_census(complete(4), [1, 2, 3])
        assert cen.per_subset == {0: 1, 1: 34, 2: 330, 3: 1548}
        assert cen.n_t == {0: 1, 1: 34, 2: 165, 3: 258}
        for s, total in cen.totals.items():
            assert total == sum(p_falling(s, t) * cen.n_t[t] for t in cen.n_t)
            assert cen.by_t[s] == {t: comb(s, t) * a for t, a in cen.per_subset.items() if t <= s}

    def test_n_t_not_always_integral(self):
        # a subdivision through two apexes can be fixed by swapping them
        cen = apex_census(path_graph(3), [2, 3])
        assert not cen.integral
        assert cen.n_t[2] == 2 and cen.n_t[3] == Fraction(7, 2)

    def test_t_max_precondition(self):
        with pytest.raises(ValueError):
            apex_census(complete(4), [1, 2], t_max=3)

    def test_partial_classes(self):
        with_gaps, edges_only = partial_classes(complete(4), 2)
        assert with_gaps == {0: 1, 1: 34, 2: 177}
        assert edges_only == {0: 1, 1: 25, 2: 56}


class TestVandermonde:
    def test_round_trip_small(self):
        coeffs = [7, 0, 5]
        evals = {s: sum(c * s ** j for j, c in enumerate(coeffs)) for s in (1, 2, 3)}
        assert vandermonde_recover(evals, 2) == 7
        assert vandermonde_coefficients(evals, 2) == coeffs

    def test_random_vectors(self):
        rng = np.random.default_rng(2024)
        for _ in range(40):
            t_max = int(rng.integers(0, 11))
            coeffs = [int(x) for x in rng.integers(0, 2 ** 63, size=t_max + 1, dtype=np.uint64)]
            xs = sorted(rng.choice(np.arange(1, 60), size=t_max + 1, replace=False).tolist())
            evals = {s: sum(c * s ** j for j, c in enumerate(coeffs)) for s in xs}
            assert vandermonde_coefficients(evals, t_max) == coeffs
            assert lagrange_at_zero(evals) == coeffs[0]

    def test_errors(self):
        with pytest.raises(ValueError):
            vandermonde_recover({1: 3, 2: 5}, 2)
        with pytest.raises(ArithmeticError):
            vandermonde_recover({1: 1, 3: 2}, 1)
        with pytest.raises(ValueError):
            solve_exact([[1, 2], [2, 4]], [1, 2])

    def test_end_to_end_k4(self):
        assert count_k4_via_apexes(complete(4), range(1, 8), 6) == 1

    def test_end_to_end_matches_lagrange(self):
        evals = {s: count_k4(build_apex_instance(complete(4), s).graph)[0] for s in range(1, 8)}
        assert lagrange_at_zero(evals) == 1
