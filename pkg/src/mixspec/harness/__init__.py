"""Orientation sweeps, cospectral search, invariant suites and the command line."""

from .cospectral import CospectralClass, CospectralReport, complete_bipartite, complete_multipartite, find_cospectral
from .hereditary import census, hereditary_orientations
from .orientations import (
    SweepSpec,
    connected_graphs,
    connected_up_to,
    enumerate_orientations,
    orientation,
    orientation_index,
)
from .suites import SUITES, SuiteReport, verify_suite
from .sweep import OrientationTable, build_table, switching_sweep
