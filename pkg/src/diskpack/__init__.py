"""Cycle packing on unit disk graphs via balanced separators and a signature DP.

The public surface mirrors the pipeline stages: unit disk graph construction
(:mod:`diskpack.udg`), the diameter-one grid map (:mod:`diskpack.gridmap`),
the planar map sparsifier (:mod:`diskpack.sparsifier`), weighted cycle
separators (:mod:`diskpack.separator`), surface and surface-cut
decompositions (:mod:`diskpack.surface`, :mod:`diskpack.scdecomp`),
circular-arc pairing enumeration (:mod:`diskpack.arcs`), and the solver
(:mod:`diskpack.dp`) with its brute-force oracle (:mod:`diskpack.oracle`).
"""

from diskpack.udg import Point, UnitDiskGraph, build_udg, find_crossings, check_icf
from diskpack.gridmap import GridMap, MapConstants, build_map, cell_distance, compute_constants
from diskpack.oracle import max_cycle_packing, verify_solution
from diskpack.structure import clean, dense_extract
from diskpack.scdecomp import build_sc_decomposition
from diskpack.separator import balanced_small_separator
from diskpack.arcs import CircularPairing, enumerate_kzz_free, is_kzz_free
from diskpack.dp import (
    DPSolver,
    ParityFrame,
    SolveResult,
    crossing_parity,
    enumerate_valid_tuples,
    paths_cross,
    solve,
)

__all__ = [
    "Point",
    "UnitDiskGraph",
    "build_udg",
    "find_crossings",
    "check_icf",
    "GridMap",
    "MapConstants",
    "build_map",
    "cell_distance",
    "compute_constants",
    "max_cycle_packing",
    "verify_solution",
    "clean",
    "dense_extract",
    "build_sc_decomposition",
    "balanced_small_separator",
    "CircularPairing",
    "enumerate_kzz_free",
    "is_kzz_free",
    "DPSolver",
    "ParityFrame",
    "SolveResult",
    "crossing_parity",
    "enumerate_valid_tuples",
    "paths_cross",
    "solve",
]
