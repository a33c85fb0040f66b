"""Exact spectral computations on mixed graphs with the Hermitian N-matrix.

The N-matrix has entry w = (1 + i*sqrt(3))/2 for an arc u->v, conj(w) in the
reverse position and 1 for an undirected edge.
"""

from .core import EisensteinNumber, GraphFormatError, MixedGraph, SimpleGraph, T6Element, parse_graph, serialize_graph
from .nmatrix import CharPoly, charpoly, charpoly_subgraphs, eigenvalues, spectral_radius

__version__ = "0.1.0"
