"""Computational services: graph generation, cycle census, combinatorics and estimators."""

from .errors import ConstructionError, GraphCyclesError, InvalidParameterError, ReportWriteError

__all__ = ["ConstructionError", "GraphCyclesError", "InvalidParameterError", "ReportWriteError"]
