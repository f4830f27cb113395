"""Induced path decompositions of graphs."""

from ipdkit.graph import Graph
from ipdkit.solver import InducedPathDecomposition, exists_ipd, min_ipd, validate_ipd

__all__ = ["Graph", "InducedPathDecomposition", "exists_ipd", "min_ipd", "validate_ipd"]
__version__ = "0.1.0"
