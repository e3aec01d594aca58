"""Counting and constructing K4-subdivisions in graphs."""
from .graph import Graph, parse_graph, is_k_connected, disjoint_st_paths, fan_paths
from .cycles import enumerate_cycles, count_cycles, count_st_paths
from .ears import open_ear_decomposition, verify_ears
from .k4census import enumerate_k4, count_k4, is_k4_subdivision, k4_from_cycle, k4_from_cycle_pinned
from .generators import wheel, complete, complete_bipartite, gadget_chain, random_2connected, random_3connected
from .bounds import bound_report
from .reductions import (build_fixed_instance, build_weighted_instance, build_apex_instance,
                         apex_census, vandermonde_recover)

__all__ = [
    "Graph", "parse_graph", "is_k_connected", "disjoint_st_paths", "fan_paths",
    "enumerate_cycles", "count_cycles", "count_st_paths",
    "open_ear_decomposition", "verify_ears",
    "enumerate_k4", "count_k4", "is_k4_subdivision", "k4_from_cycle", "k4_from_cycle_pinned",
    "wheel", "complete", "complete_bipartite", "gadget_chain", "random_2connected", "random_3connected",
    "bound_report",
    "build_fixed_instance", "build_weighted_instance", "build_apex_instance", "apex_census",
    "vandermonde_recover",
]
