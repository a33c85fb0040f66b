"""N-matrices, characteristic polynomials, spectra and exact spectral decisions."""

from .charpoly import (
    CapacityError,
    charpoly,
    charpoly_exact,
    charpoly_subgraphs,
    cut_edge_residual,
    edge_recurrence_residual,
    trace_square_check,
    vertex_recurrence_residual,
)
from .eigen import ConvergenceError, Spectrum, eigenvalues, spectral_radius
from .matrix import NMatrix, build_nmatrix, complement_graph, complement_nmatrix, nmatrix_to_graph
from .poly import CharPoly
from .sturm import (
    QuadraticSurd,
    count_roots_in,
    count_roots_with_multiplicity,
    multiplicity_at,
    radius_at_most,
    radius_equals,
    radius_strictly_below,
)
