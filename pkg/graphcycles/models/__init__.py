from .base import IndexedGraph, NodeId, format_node, parse_node
from .census import CycleCensus
from .curve import CurveVariant, EmbedBounds, TheoryCurve
from .experiment import (
    ComparisonRow,
    ExperimentConfig,
    GraphFamily,
    IndependenceRow,
    SimulationReport,
)
from .ldpc_graph import LdpcGraph
from .permutation import Permutation
from .picture import EdgeLabel, Picture
from .turbo_graph import TurboGraph

__all__ = [
    "ComparisonRow",
    "CurveVariant",
    "CycleCensus",
    "EdgeLabel",
    "EmbedBounds",
    "ExperimentConfig",
    "GraphFamily",
    "IndependenceRow",
    "IndexedGraph",
    "LdpcGraph",
    "NodeId",
    "Permutation",
    "Picture",
    "SimulationReport",
    "TheoryCurve",
    "TurboGraph",
    "format_node",
    "parse_node",
]
