# -*- coding: utf-8 -*-
"""Turning distances and turning disorders of planar polygonal networks."""

__version__ = "0.1.0"

from .turning import (Polygon, TurningFunction, DistanceResult,  # noqa: E402
                      turning_function, d2_general, dp_general)
from .regular import d2_regular_closed, d2_circle_polygon  # noqa: E402
from .network import PlanarNetwork, DisorderReport, disorder  # noqa: E402
from .archimedean import generate_lattice, exact_disorder  # noqa: E402
from .t1 import T1Simulation, run_t1  # noqa: E402
from .rupture import RuptureSimulation, run_rupture  # noqa: E402

__all__ = [
    "Polygon",
    "TurningFunction",
    "DistanceResult",
    "turning_function",
    "d2_general",
    "dp_general",
    "d2_regular_closed",
    "d2_circle_polygon",
    "PlanarNetwork",
    "DisorderReport",
    "disorder",
    "generate_lattice",
    "exact_disorder",
    "T1Simulation",
    "run_t1",
    "RuptureSimulation",
    "run_rupture",
]
