"""Rank, the Delta bound and small-spectral-radius classification."""

from .catalog import NAMED, NamedGraph, catalog_members, named_graph
from .extremal import DeltaBoundReport, ExtremalMode, ExtremalPartition, delta_bound_report, extremal_partition
from .families import Family, FamilyParams, box_graph, build_family, cycle_graph, path_graph, y_tree
from .radius import RadiusClass, perfect_matching_class, pm_one_spectrum_recognize, small_radius_classify
from .rank import (
    RankResult,
    matching_number,
    pendant_reduction_check,
    rank2_recognize,
    rank3_recognize,
    rank_exact,
)
