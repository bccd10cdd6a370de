"""Exact differential calculus, linear connections and curvature on finite
directed graphs, over polynomials in the connection parameter with rational
coefficients."""

from .calculus import CalculusTower, Digraph
from .connection import (
    CompleteConnection,
    ConnectionParams,
    CurvatureReport,
    DegenerateMetricError,
    EdgeNotInGraphError,
    InducedConnection,
    Metric,
    bilinearize,
)
from .elements import Element, is_valid_path
from .reduction import Echelon, NonConstantCoefficientError, echelonize, in_span, reduce_mod
from .scalars import GAMMA, GammaPoly
from .universal import UniversalAlgebra

__version__ = "0.1.0"

__all__ = [
    "GAMMA",
    "GammaPoly",
    "Element",
    "is_valid_path",
    "Echelon",
    "NonConstantCoefficientError",
    "echelonize",
    "in_span",
    "reduce_mod",
    "UniversalAlgebra",
    "Digraph",
    "CalculusTower",
    "ConnectionParams",
    "CompleteConnection",
    "InducedConnection",
    "CurvatureReport",
    "Metric",
    "bilinearize",
    "EdgeNotInGraphError",
    "DegenerateMetricError",
    "__version__",
]
