"""Colorings of graphs with no rainbow path on k vertices.

c_k(G) is the largest number of colors in a vertex coloring of G where no
path on k vertices gets k distinct colors; cp_k(G) is the same over proper
colorings.
"""
from .exceptions import DomainError, GraphValidationError, ParseError, RainbowError, ResourceError
from .graphcore import (
    Coloring,
    Graph,
    PathPattern,
    Tree,
    complete_graph,
    has_rainbow_path,
    parse_graph,
    path_graph,
    serialize_graph,
    star_graph,
    to_graph6,
)
from .formulas import PathQuery, construct_path_coloring, path_coloring_unique, path_value
from .thwarting import ThetaResult, ThwartingSet, coloring_from_thwarting, theta_bruteforce, theta_tree_dp
from .solver import SolveResult, count_optimal_partitions, exact_c_k, exact_cp_k, make_boring, solve
from .enumeration import all_cubic_graphs, all_trees, canonical_form
from .zoo import FamilySpec, build, is_corona, is_double_broom, is_multicorona_subgraph, is_octopus
from .harness import CampaignReport, run_campaign

__version__ = "0.1.0"
