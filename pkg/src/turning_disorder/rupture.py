# -*- coding: utf-8 -*-
"""Polygonal edge rupture on a frozen hexagonal network.

A rupture deletes an interior edge together with both of its endpoints and
reconnects the four orphaned neighbors with two straight chords. The two
faces on either side of the edge merge and the two flanking faces lose a
side. Vertex coordinates never change.
"""

import math
import logging
import numpy as np

from . import exceptions
from .archimedean import SQRT3, tile_network
from .cfg import RuptureConfig
from .constants import Rejection
from .network import NetworkState
from .simulation import MoveOutcome, Simulation
from .tools import signed_area
from .turning import Polygon

logger = logging.getLogger(__name__)

# Relative change of the summed face area tolerated by a rupture.
AREA_TOLERANCE = 1e-10

# Vertex angles of a pointy-top hexagon, counterclockwise.
_HEXAGON_ANGLES = np.radians(30 + 60 * np.arange(6))


def patch_dimensions(cells):
    """Finds a near-square patch holding a number of hexagonal cells.

    Args:
        cells: Requested cell count, at least 1.

    Returns:
        Tuple of (rows, cols) with rows * cols >= cells and fewer than cols
        cells missing from the last row.

    Raises:
        DomainError: cells < 1.
    """
    if cells < 1:
        raise exceptions.DomainError(
            "Patch needs at least one cell, got {}".format(cells))
    cols = int(math.ceil(math.sqrt(cells)))
    rows = int(math.ceil(cells / float(cols)))
    return rows, cols


def hexagonal_patch(rows, cols, cells=None):
    """Builds a honeycomb of unit-side hexagons in offset rows.

    Cells are laid out row by row; odd rows are shifted by half a cell.

    Args:
        rows: Number of rows.
        cols: Cells per row.
        cells: Number of cells to keep in row-major order (default: all).

    Returns:
        PlanarNetwork with the outer vertices pinned.

    Raises:
        DomainError: Dimensions are not positive or cells does not fit.
    """
    if rows < 1 or cols < 1:
        raise exceptions.DomainError(
            "Patch dimensions must be positive, got {}x{}".format(rows, cols))
    if cells is None:
        cells = rows * cols
    if not 1 <= cells <= rows * cols:
        raise exceptions.DomainError(
            "{} cells do not fit in a {}x{} patch".format(cells, rows, cols))

    r, c = np.divmod(np.arange(cells), cols)
    centers = np.column_stack([SQRT3 * c + SQRT3 / 2 * (r % 2), 1.5 * r])
    ring = np.column_stack([np.cos(_HEXAGON_ANGLES), np.sin(_HEXAGON_ANGLES)])
    rings = centers[:, None, :] + ring[None, :, :]

    network = tile_network(
        rings, metadata={"rows": rows, "cols": cols, "cells": cells})
    logger.info("Generated %dx%d hexagonal patch: %d cells, %d vertices",
                rows, cols, len(network.faces), len(network.vertices))
    return network


def _arc(cycle, start, stop):
    """Returns the vertices of cycle from start to stop, both included."""
    i = cycle.index(start)
    rotated = cycle[i:] + cycle[:i]
    return rotated[:rotated.index(stop) + 1]


def _area(state, cycle):
    return signed_area(state.positions[cycle])


def rupture_move(state, edge):
    """Ruptures an interior edge of a trivalent network.

    With F1 = (..., p, u, v, q, ...) and F2 = (..., r, v, u, w, ...) the
    faces on either side of (u, v), F3 the face at w -> u -> p and F4 the
    face at q -> v -> r, vertices u and v are deleted and the chords (p, w)
    and (q, r) are drawn. F1 and F2 merge into the cycle (q ... p, w ... r)
    kept under the id of F1, while F3 and F4 lose a side each.

    Args:
        state: NetworkState, modified in place when the move applies.
        edge: Vertex pair (u, v).

    Returns:
        MoveOutcome.
    """
    u, v = edge
    if not state.has_edge(u, v):
        return MoveOutcome.rejected(Rejection.NOT_INTERIOR, edge)
    if state.pinned[u] or state.pinned[v]:
        return MoveOutcome.rejected(Rejection.BOUNDARY_EDGE, edge)
    if state.degree(u) != 3 or state.degree(v) != 3:
        return MoveOutcome.rejected(Rejection.NOT_TRIVALENT, edge)

    f1, f2 = state.face_of(u, v), state.face_of(v, u)
    if f1 is None or f2 is None:
        return MoveOutcome.rejected(Rejection.NOT_INTERIOR, edge)
    c1, c2 = state.faces[f1], state.faces[f2]
    i, j = c1.index(u), c2.index(v)
    p, q = c1[i - 1], c1[(i + 2) % len(c1)]
    r, w = c2[j - 1], c2[(j + 2) % len(c2)]
    f3, f4 = state.face_of(u, p), state.face_of(v, r)
    if f3 is None or f4 is None:
        return MoveOutcome.rejected(Rejection.NOT_INTERIOR, edge)
    if len(set((f1, f2, f3, f4))) != 4:
        return MoveOutcome.rejected(Rejection.NON_SIMPLE_GRAPH, edge)

    c3, c4 = state.faces[f3], state.faces[f4]
    merged = _arc(c1, q, p) + _arc(c2, w, r)
    if len(c3) <= 3 or len(c4) <= 3 or len(merged) < 3:
        return MoveOutcome.rejected(Rejection.SMALL_FACE, edge)
    if len(set(merged)) != len(merged):
        return MoveOutcome.rejected(Rejection.NON_SIMPLE_FACE, edge)
    if state.has_edge(p, w) or state.has_edge(q, r):
        return MoveOutcome.rejected(Rejection.NON_SIMPLE_GRAPH, edge)

    shrunk3 = [x for x in c3 if x != u]
    shrunk4 = [x for x in c4 if x != v]
    new_cycles = (merged, shrunk3, shrunk4)
    try:
        for cycle in new_cycles:
            Polygon(state.positions[cycle])
    except exceptions.InvalidPolygon as e:
        logger.debug("Rupture on (%d, %d) leaves an invalid face: %s",
                     u, v, e.args[0])
        return MoveOutcome.rejected(Rejection.NON_SIMPLE_FACE, edge)

    before = sum(_area(state, cycle) for cycle in (c1, c2, c3, c4))
    after = sum(_area(state, cycle) for cycle in new_cycles)
    if abs(after - before) > AREA_TOLERANCE * max(1.0, abs(before)):
        logger.debug("Rupture on (%d, %d) changes the area by %.3g",
                     u, v, after - before)
        return MoveOutcome.rejected(Rejection.NON_SIMPLE_FACE, edge)

    state.remove_face(f2)
    state.set_face(f1, merged)
    state.set_face(f3, shrunk3)
    state.set_face(f4, shrunk4)
    state.remove_vertex(u)
    state.remove_vertex(v)
    state.add_edge(p, w)
    state.add_edge(q, r)

    logger.debug("Rupture on (%d, %d): faces %d and %d merge, %d %d shrink",
                 u, v, f1, f2, f3, f4)
    return MoveOutcome(True, edge=edge, faces=(f1, f2, f3, f4))


class RuptureSimulation(Simulation):

    """Edge rupture process started from a hexagonal patch.

    Attributes:
        rows: Rows of the initial patch.
        cols: Columns of the initial patch.
        initial_cells: Number of cells before the first rupture.
    """

    name = "rupture"

    def __init__(self, config=None, **kwargs):
        """Constructs RuptureSimulation object.

        Args:
            config: RuptureConfig (default: built from kwargs).
            kwargs: RuptureConfig parameters.
        """
        super(RuptureSimulation, self).__init__(
            config or RuptureConfig(**kwargs))
        self.rows = None
        self.cols = None
        self.initial_cells = 0

    @property
    def target(self):
        return self.config.num_ruptures

    def initialize(self):
        """Builds the initial hexagonal patch."""
        if self.config.rows:
            self.rows, self.cols = self.config.rows, self.config.cols
            cells = None
        else:
            cells = self.config.num_cells
            self.rows, self.cols = patch_dimensions(cells)
        network = hexagonal_patch(self.rows, self.cols, cells)
        self.state = NetworkState(network)
        self.initial_cells = len(self.state.faces)

    def apply(self, edge):
        return rupture_move(self.state, edge)

    def metadata(self):
        meta = super(RuptureSimulation, self).metadata()
        meta.update({
            "rows": self.rows,
            "cols": self.cols,
            "initial_cells": self.initial_cells,
        })
        return meta


def run_rupture(config=None, callback=None, **kwargs):
    """Runs the rupture process.

    Args:
        config: RuptureConfig (default: built from kwargs).
        callback: Function called with every TraceRecord.
        kwargs: RuptureConfig parameters.

    Returns:
        SimulationTrace.
    """
    return RuptureSimulation(config, **kwargs).run(callback)
