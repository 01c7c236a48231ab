"""Neighborhood-conductance-seeded community detection with LPA and greedy modularity baselines."""

from .baselines import greedy_modularity, greedy_modularity_trace, lpa
from .conductance import conductance, cut, find_seeds, neighborhood_conductance, profile, volume
from .core import TraceEvent, assign_leftovers, capture_factor, detect, expand, gravitation, init_communities, stability
from .errors import NCBError
from .graph import Graph, load_edge_list, load_gml, load_graph
from .metrics import MetricReport, evaluate, modularity, nmi
from .partition import Community, Partition

__all__ = [
    "Community",
    "Graph",
    "MetricReport",
    "NCBError",
    "Partition",
    "TraceEvent",
    "assign_leftovers",
    "capture_factor",
    "conductance",
    "cut",
    "detect",
    "evaluate",
    "expand",
    "find_seeds",
    "gravitation",
    "greedy_modularity",
    "greedy_modularity_trace",
    "init_communities",
    "load_edge_list",
    "load_gml",
    "load_graph",
    "lpa",
    "modularity",
    "neighborhood_conductance",
    "nmi",
    "profile",
    "stability",
    "volume",
]
