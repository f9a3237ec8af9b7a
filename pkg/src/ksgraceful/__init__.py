"""k-super graceful labelings: verification, constructions, Skolem sequences and search."""
from .graph import Graph, Labeling, graph_family, parse_family, verify_labeling

__all__ = ["Graph", "Labeling", "graph_family", "parse_family", "verify_labeling"]
__version__ = "0.1.0"
