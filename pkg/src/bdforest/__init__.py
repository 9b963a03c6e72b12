"""Forest decompositions with bounded-diameter components.

Forest + star forest -> two forests of diameter <= 18, arboricity
pipelines, plane duals with thin spanning trees, and independent checkers.
"""

from .arboricity import arboricity_decompose, decompose_bounded, fractional_density, lower_bound_certificate
from .decomposer import decompose_forest_star
from .graph_core import (
    CapacityError,
    ForestDecomposition,
    Graph,
    GraphError,
    InputError,
    StructuralError,
    graph_from_json,
)
from .planar import PlanarEmbedding, build_dual, gen_counterexample, thin_trees

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ForestDecomposition",
    "Graph",
    "GraphError",
    "InputError",
    "PlanarEmbedding",
    "StructuralError",
    "arboricity_decompose",
    "build_dual",
    "decompose_bounded",
    "decompose_forest_star",
    "fractional_density",
    "gen_counterexample",
    "graph_from_json",
    "lower_bound_certificate",
    "thin_trees",
]
