"""Causal flow and gflow search for open graphs."""

from mbqcflow.analysis import (
    Delay,
    FlowStructureError,
    LayerPartition,
    VerifyReport,
    Violation,
    causal_to_gflow,
    check_maximally_delayed,
    edge_bound_holds,
    is_more_delayed,
    layer_partition,
    verify_causal_flow,
    verify_flow,
    verify_gflow,
)
from mbqcflow.causal import CausalFlow, find_causal_flow
from mbqcflow.estimators import FlowFinder
from mbqcflow.gf2 import Gf2Matrix, mat_vec_mul, row_echelon, solve_many
from mbqcflow.gflow import GFlow, find_gflow
from mbqcflow.graph import (
    GraphFormatError,
    OpenGraph,
    gamma_submatrix,
    odd_neighborhood,
    parse_open_graph,
    random_open_graph,
    serialize_open_graph,
)
from mbqcflow.io import FlowDocument

__all__ = [
    "CausalFlow",
    "Delay",
    "FlowDocument",
    "FlowFinder",
    "FlowStructureError",
    "GFlow",
    "Gf2Matrix",
    "GraphFormatError",
    "LayerPartition",
    "OpenGraph",
    "VerifyReport",
    "Violation",
    "causal_to_gflow",
    "check_maximally_delayed",
    "edge_bound_holds",
    "find_causal_flow",
    "find_gflow",
    "gamma_submatrix",
    "is_more_delayed",
    "layer_partition",
    "mat_vec_mul",
    "odd_neighborhood",
    "parse_open_graph",
    "random_open_graph",
    "row_echelon",
    "serialize_open_graph",
    "solve_many",
    "verify_causal_flow",
    "verify_flow",
    "verify_gflow",
]
__version__ = "0.1.0"
