# -*- coding: utf-8 -*-
"""T1 process on a Voronoi spring network.

Random interior edges of a trivalent network are rotated by T1 moves. After
every accepted move the network is re-embedded with its boundary pinned and
vertices that end up closer than a tolerance are identified.
"""

import logging
import numpy as np

from .cfg import T1Config
from .constants import OrderedShape, Rejection
from .embedding import embed_state, voronoi_init
from .network import NetworkState
from .regular import d2_circle_regular, d2_regular_closed, d2_segment_vs
from .simulation import MoveOutcome, Simulation
from .tools import merge_close_points

logger = logging.getLogger(__name__)


def _neighbors_in_face(cycle, a, b):
    """Finds the vertices before a and after b where a -> b is in cycle."""
    i = cycle.index(a)
    n = len(cycle)
    return cycle[i - 1], cycle[(i + 2) % n]


def _remove(cycle, x):
    """Returns cycle without vertex x."""
    return [v for v in cycle if v != x]


def _insert_after(cycle, a, x):
    """Returns cycle with x inserted right after a."""
    i = cycle.index(a)
    return cycle[:i + 1] + [x] + cycle[i + 1:]


def t1_move(state, edge):
    """Rotates an interior edge of a trivalent network.

    With F1 = (..., p, u, v, q, ...) and F2 = (..., r, v, u, w, ...) the
    faces on either side of (u, v), F3 the face at w -> u -> p and F4 the
    face at q -> v -> r, u trades w for q and v trades q for w. F1 and F2
    lose a side while F3 and F4 gain one. Coordinates are left untouched.

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
    p, q = _neighbors_in_face(c1, u, v)
    r, w = _neighbors_in_face(c2, v, u)
    f3, f4 = state.face_of(u, p), state.face_of(v, r)
    if f3 is None or f4 is None:
        return MoveOutcome.rejected(Rejection.NOT_INTERIOR, edge)
    if len(set((f1, f2, f3, f4))) != 4:
        return MoveOutcome.rejected(Rejection.NON_SIMPLE_GRAPH, edge)

    # Cells may not drop below three sides.
    if len(c1) <= 3 or len(c2) <= 3:
        return MoveOutcome.rejected(Rejection.SMALL_FACE, edge)
    if state.has_edge(u, q) or state.has_edge(v, w):
        return MoveOutcome.rejected(Rejection.NON_SIMPLE_GRAPH, edge)

    state.remove_edge(u, w)
    state.remove_edge(v, q)
    state.add_edge(u, q)
    state.add_edge(v, w)

    state.set_face(f1, _remove(c1, v))
    state.set_face(f2, _remove(c2, u))
    state.set_face(f3, _insert_after(state.faces[f3], w, v))
    state.set_face(f4, _insert_after(state.faces[f4], q, u))

    logger.debug("T1 on (%d, %d): faces %d %d lose, %d %d gain",
                 u, v, f1, f2, f3, f4)
    return MoveOutcome(True, edge=edge, faces=(f1, f2, f3, f4))


def degenerate_face_distance(points, sides, ordered_shape):
    """Approximates the distance of a collapsed face to an ordered shape.

    A face reduced to two distinct points, or to a polygon that is no
    longer simple, is treated as the needle R₂. A face reduced to a single
    point is treated as the regular polygon with its original side count.

    Args:
        points: Coordinates of the face's remaining vertices.
        sides: Side count of the face before it collapsed.
        ordered_shape: OrderedShape value.

    Returns:
        Distance.
    """
    distinct = len(np.unique(np.asarray(points, dtype=float), axis=0))
    if distinct >= 2:
        if ordered_shape == OrderedShape.REGULAR:
            return d2_segment_vs(max(sides, 2))
        if ordered_shape == OrderedShape.HEXAGON:
            return d2_segment_vs(6)
        return d2_segment_vs("circle")

    if ordered_shape == OrderedShape.REGULAR:
        return 0.0
    if ordered_shape == OrderedShape.HEXAGON:
        return d2_regular_closed(sides, 6).distance
    return d2_circle_regular(sides)


def merge_state(state, tolerance):
    """Identifies vertices of a state closer than a tolerance.

    Merging repeats until no pair of live vertices is that close.

    Args:
        state: NetworkState.
        tolerance: Merge distance.

    Returns:
        Number of vertices removed.
    """
    total = 0
    while True:
        alive = np.flatnonzero(state.alive)
        local = merge_close_points(state.positions[alive], tolerance)
        labels = np.arange(len(state.positions))
        labels[alive] = alive[local]
        merged = state.merge_close_vertices(labels)
        if not merged:
            return total
        total += merged


class T1Simulation(Simulation):

    """T1 process started from a Tutte-embedded Voronoi network.

    Attributes:
        merges: Number of vertices identified so far.
        max_residual: Largest Tutte residual seen.
    """

    name = "t1"
    fallback = staticmethod(degenerate_face_distance)

    def __init__(self, config=None, **kwargs):
        """Constructs T1Simulation object.

        Args:
            config: T1Config (default: built from kwargs).
            kwargs: T1Config parameters.
        """
        super(T1Simulation, self).__init__(config or T1Config(**kwargs))
        self.merges = 0
        self.max_residual = 0.0
        self.jittered_sites = []

    @property
    def target(self):
        return self.config.num_moves

    def initialize(self):
        """Builds and embeds the initial Voronoi network."""
        network = voronoi_init(self.config.num_sites, self.config.seed,
                               rng=self.rng)
        self.jittered_sites = network.metadata.get("jittered_sites", [])
        self.state = NetworkState(network)
        self._relax()
        logger.info("T1 network ready: %d cells", len(self.state.faces))

    def _relax(self):
        """Re-embeds the state and merges close vertices."""
        residual = embed_state(self.state)
        self.max_residual = max(self.max_residual, residual)
        merged = merge_state(self.state, self.config.merge_tolerance)
        if merged:
            logger.warning("Identified %d close vertices at step %d",
                           merged, self.step)
            self.merges += merged

    def apply(self, edge):
        return t1_move(self.state, edge)

    def after_move(self, outcome):
        self._relax()

    def metadata(self):
        meta = super(T1Simulation, self).metadata()
        degenerate = sum(1 for cycle in self.state.faces.values()
                         if len(set(cycle)) < 3) if self.state else 0
        meta.update({
            "merged_vertices": self.merges,
            "max_tutte_residual": self.max_residual,
            "jittered_sites": self.jittered_sites,
            "degenerate_faces": degenerate,
        })
        return meta


def run_t1(config=None, callback=None, **kwargs):
    """Runs the T1 process.

    Args:
        config: T1Config (default: built from kwargs).
        callback: Function called with every TraceRecord.
        kwargs: T1Config parameters.

    Returns:
        SimulationTrace.
    """
    return T1Simulation(config, **kwargs).run(callback)
