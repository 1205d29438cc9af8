# -*- coding: utf-8 -*-
"""Planar polygonal networks and their turning disorders."""

import math
import logging
import numpy as np
from functools import lru_cache
from shapely import STRtree
from shapely.geometry import LineString, Point

from . import exceptions
from .constants import OrderedShape
from .regular import d2_circle
from .tools import signed_area
from .turning import (Polygon, d2_turning, regular_turning_function,
                      turning_function)

logger = logging.getLogger(__name__)


class PlanarNetwork(object):

    """Straight-line planar network partitioning a disk-like domain.

    Faces are counterclockwise cycles of vertex indices. Only the bounded
    faces are stored.

    Attributes:
        vertices: Array of shape (V, 2).
        edges: Sorted list of (i, j) pairs with i < j.
        faces: List of vertex index tuples.
        boundary: Boolean array flagging pinned boundary vertices.
        nominal_sides: Side count each face is compared against when its
            polygon has collapsed.
        metadata: Free-form dictionary carried into output files.
    """

    def __init__(self, vertices, edges, faces, boundary=None,
                 nominal_sides=None, metadata=None):
        """Constructs PlanarNetwork object.

        Args:
            vertices: Sequence of (x, y) points.
            edges: Sequence of vertex index pairs.
            faces: Sequence of vertex index cycles.
            boundary: Per-vertex boundary flags (default: all False).
            nominal_sides: Per-face side counts (default: cycle lengths).
            metadata: Dictionary (default: empty).
        """
        self.vertices = np.array(vertices, dtype=float).reshape(-1, 2)
        self.edges = sorted(set(
            (min(int(i), int(j)), max(int(i), int(j))) for i, j in edges))
        self.faces = [tuple(int(v) for v in face) for face in faces]
        if boundary is None:
            self.boundary = np.zeros(len(self.vertices), dtype=bool)
        else:
            self.boundary = np.array(boundary, dtype=bool)
        if nominal_sides is None:
            self.nominal_sides = [len(face) for face in self.faces]
        else:
            self.nominal_sides = [int(n) for n in nominal_sides]
        self.metadata = dict(metadata or {})

    def __repr__(self):
        """Returns string representation of network."""
        return "<PlanarNetwork: {} vertices, {} edges, {} faces>".format(
            len(self.vertices), len(self.edges), len(self.faces))

    def face_points(self, face_id):
        """Returns the coordinates of a face's cycle."""
        return self.vertices[list(self.faces[face_id])]

    def face_polygon(self, face_id):
        """Constructs the polygon of a face.

        Args:
            face_id: Face index.

        Returns:
            Polygon.

        Raises:
            InvalidNetwork: Face is not a simple counterclockwise polygon.
        """
        try:
            return Polygon(self.face_points(face_id))
        except exceptions.InvalidPolygon as e:
            raise exceptions.InvalidNetwork(
                "Face {} is invalid: {}".format(face_id, e.args[0]), face_id)

    def face_area(self, face_id):
        """Returns the shoelace area of a face, 0 once collapsed."""
        if len(set(self.faces[face_id])) < 3:
            return 0.0
        return max(signed_area(self.face_points(face_id)), 0.0)

    def face_sides(self, face_id):
        """Returns the number of vertices on a face's boundary."""
        return len(self.faces[face_id])

    def total_area(self):
        """Returns the summed face area."""
        return sum(self.face_area(i) for i in range(len(self.faces)))

    def edge_face_counts(self):
        """Counts the faces on either side of every edge.

        Returns:
            Dictionary from sorted edge to number of bordering faces.
        """
        counts = dict.fromkeys(self.edges, 0)
        for face in self.faces:
            if len(set(face)) < 3:
                continue
            for u, v in zip(face, face[1:] + face[:1]):
                key = (min(u, v), max(u, v))
                counts[key] = counts.get(key, 0) + 1
        return counts

    def interior_face_ids(self):
        """Lists faces that share every edge with another face."""
        counts = self.edge_face_counts()
        interior = []
        for i, face in enumerate(self.faces):
            if all(counts.get((min(u, v), max(u, v))) == 2
                   for u, v in zip(face, face[1:] + face[:1])):
                interior.append(i)
        return interior

    def validate(self):
        """Checks planarity, face validity and edge incidences.

        Raises:
            InvalidNetwork: Any invariant is violated.
        """
        check_planarity(self.vertices, self.edges)

        for i in range(len(self.faces)):
            self.face_polygon(i)

        for edge, count in self.edge_face_counts().items():
            if count not in (1, 2):
                raise exceptions.InvalidNetwork(
                    "Edge {} borders {} faces".format(edge, count), None)

        used = set(v for edge in self.edges for v in edge)
        euler = len(used) - len(self.edges) + len(self.faces)
        if self.faces and euler != 1:
            raise exceptions.InvalidNetwork(
                "Euler characteristic is {}, expected 1".format(euler), None)


def face_area(network, face_id):
    """Returns the area of a face of a network."""
    return network.face_area(face_id)


def face_sides(network, face_id):
    """Returns the side count of a face of a network."""
    return network.face_sides(face_id)


def check_planarity(vertices, edges):
    """Verifies that straight edges meet only at shared endpoints.

    Args:
        vertices: Array of shape (V, 2).
        edges: Sequence of (i, j) pairs.

    Raises:
        InvalidNetwork: Two edges cross or overlap.
    """
    if not len(edges):
        return
    pts = np.asarray(vertices, dtype=float)
    lines = [LineString([pts[i], pts[j]]) for i, j in edges]
    tree = STRtree(lines)
    for a, line in enumerate(lines):
        for b in tree.query(line, predicate="intersects"):
            if b <= a:
                continue
            shared = set(edges[a]) & set(edges[b])
            if not shared:
                raise exceptions.InvalidNetwork(
                    "Edges {} and {} cross".format(edges[a], edges[b]), None)
            touch = line.intersection(lines[b])
            common = Point(pts[shared.pop()])
            if not touch.equals(common):
                raise exceptions.InvalidNetwork(
                    "Edges {} and {} overlap".format(edges[a], edges[b]),
                    None)


def extract_faces(vertices, edges, boundary=None, validate=True):
    """Recovers the bounded faces of a planar straight-line graph.

    Every half-edge u -> v is followed by v -> w where w is the neighbor
    of v that comes next clockwise from u, which traces the face on the
    left of each half-edge. The single clockwise cycle is the outer face.

    Args:
        vertices: Sequence of (x, y) points.
        edges: Sequence of vertex index pairs.
        boundary: Per-vertex boundary flags (default: vertices on the outer
            face).
        validate: Whether to check planarity and faces.

    Returns:
        PlanarNetwork.

    Raises:
        InvalidNetwork: Loops, dangling edges, disconnected or non-planar
            input.
    """
    pts = np.array(vertices, dtype=float).reshape(-1, 2)
    pairs = set()
    for i, j in edges:
        i, j = int(i), int(j)
        if i == j:
            raise exceptions.InvalidNetwork(
                "Loop at vertex {}".format(i), None)
        if not (0 <= i < len(pts) and 0 <= j < len(pts)):
            raise exceptions.InvalidNetwork(
                "Edge ({}, {}) refers to a missing vertex".format(i, j), None)
        pairs.add((min(i, j), max(i, j)))
    pairs = sorted(pairs)

    if validate:
        check_planarity(pts, pairs)

    neighbors = [[] for _ in range(len(pts))]
    for i, j in pairs:
        neighbors[i].append(j)
        neighbors[j].append(i)
    for v, adjacent in enumerate(neighbors):
        if len(adjacent) == 1:
            raise exceptions.InvalidNetwork(
                "Dangling edge at vertex {}".format(v), None)

    # Sort neighbors counterclockwise.
    rank = {}
    for v, adjacent in enumerate(neighbors):
        adjacent.sort(key=lambda w: math.atan2(pts[w, 1] - pts[v, 1],
                                               pts[w, 0] - pts[v, 0]))
        for index, w in enumerate(adjacent):
            rank[(v, w)] = index

    visited = set()
    cycles = []
    for i, j in pairs:
        for start in ((i, j), (j, i)):
            if start in visited:
                continue
            cycle = []
            u, v = start
            while (u, v) not in visited:
                visited.add((u, v))
                cycle.append(u)
                around = neighbors[v]
                w = around[(rank[(v, u)] - 1) % len(around)]
                u, v = v, w
            cycles.append(cycle)

    faces, outer = [], []
    for cycle in cycles:
        if signed_area(pts[cycle]) > 0:
            faces.append(tuple(cycle))
        else:
            outer.append(cycle)
    if len(outer) > 1:
        raise exceptions.InvalidNetwork(
            "Network has {} components".format(len(outer)), None)

    # Start every face at its smallest vertex.
    faces = [face[face.index(min(face)):] + face[:face.index(min(face))]
             for face in faces]
    faces.sort()

    if boundary is None:
        boundary = np.zeros(len(pts), dtype=bool)
        for cycle in outer:
            boundary[cycle] = True

    network = PlanarNetwork(pts, pairs, faces, boundary)
    if validate:
        network.validate()
    logger.debug("Extracted %d faces from %d edges", len(faces), len(pairs))
    return network


class FaceDistances(object):

    """Distances of one face to the three ordered shapes.

    Attributes:
        face_id: Face index.
        sides: Side count the regular reference uses.
        regular: Distance to the regular polygon with the same side count.
        hexagon: Distance to the regular hexagon.
        circle: Distance to the circle.
        area: Face area, 0 for collapsed faces.
        degenerate: Whether a fallback distance was used.
    """

    def __init__(self, face_id, sides, regular, hexagon, circle, area,
                 degenerate=False):
        self.face_id = face_id
        self.sides = sides
        self.regular = regular
        self.hexagon = hexagon
        self.circle = circle
        self.area = area
        self.degenerate = degenerate

    def distance(self, ordered_shape):
        """Returns the distance to an ordered shape."""
        return {
            OrderedShape.REGULAR: self.regular,
            OrderedShape.HEXAGON: self.hexagon,
            OrderedShape.CIRCLE: self.circle,
        }[ordered_shape]


@lru_cache(maxsize=None)
def _reference(n):
    """Returns the cached turning function of R_n."""
    return regular_turning_function(n)


def face_distances(network, face_id, fallback=None):
    """Computes the distances of a face to every ordered shape.

    Args:
        network: PlanarNetwork.
        face_id: Face index.
        fallback: Callable (points, sides, ordered_shape) -> distance used
            when the face polygon is invalid.

    Returns:
        FaceDistances.

    Raises:
        InvalidNetwork: Invalid face and no fallback.
    """
    try:
        polygon = network.face_polygon(face_id)
        f = turning_function(polygon)
    except (exceptions.InvalidNetwork, exceptions.InvalidPolygon) as e:
        if fallback is None:
            if isinstance(e, exceptions.InvalidNetwork):
                raise
            raise exceptions.InvalidNetwork(
                "Face {} has no turning function: {}".format(
                    face_id, e.args[0]), face_id)
        logger.debug("Face %d scored as degenerate: %s", face_id, e.args[0])
        points = network.face_points(face_id)
        sides = network.nominal_sides[face_id]
        return FaceDistances(
            face_id, sides,
            fallback(points, sides, OrderedShape.REGULAR),
            fallback(points, sides, OrderedShape.HEXAGON),
            fallback(points, sides, OrderedShape.CIRCLE),
            0.0, degenerate=True)

    sides = network.face_sides(face_id)
    return FaceDistances(
        face_id, sides,
        d2_turning(_reference(sides), f).distance,
        d2_turning(_reference(6), f).distance,
        d2_circle(f),
        polygon.area)


class DisorderReport(object):

    """The six turning disorders of a network.

    Attributes:
        D, D_w: Regular disorder, unweighted and area-weighted.
        D6, D6_w: Hexagonal disorder, unweighted and area-weighted.
        Dc, Dc_w: Circular disorder, unweighted and area-weighted.
        per_face_distances: List of FaceDistances that were averaged.
    """

    COLUMNS = ("D", "D_w", "D6", "D6_w", "Dc", "Dc_w")

    def __init__(self, per_face_distances):
        """Constructs DisorderReport object.

        Args:
            per_face_distances: Non-empty list of FaceDistances.

        Raises:
            InvalidNetwork: No faces.
        """
        if not per_face_distances:
            raise exceptions.InvalidNetwork("Network has no faces", None)
        self.per_face_distances = per_face_distances

        areas = np.array([face.area for face in per_face_distances])
        total = areas.sum()
        weights = areas / total if total > 0 else np.zeros_like(areas)

        values = {}
        for name, shape in (("", OrderedShape.REGULAR),
                            ("6", OrderedShape.HEXAGON),
                            ("c", OrderedShape.CIRCLE)):
            d = np.array([face.distance(shape) for face in per_face_distances])
            values["D" + name] = float(np.mean(d))
            values["D" + name + "_w"] = float(np.dot(weights, d))

        self.D = values["D"]
        self.D_w = values["D_w"]
        self.D6 = values["D6"]
        self.D6_w = values["D6_w"]
        self.Dc = values["Dc"]
        self.Dc_w = values["Dc_w"]
        self.min_area = float(areas.min())
        self.max_area = float(areas.max())

    def __len__(self):
        """Returns the number of faces averaged."""
        return len(self.per_face_distances)

    def __repr__(self):
        """Returns string representation of report."""
        return "<DisorderReport: {}>".format(", ".join(
            "{}={:.4f}".format(name, value)
            for name, value in zip(self.COLUMNS, self.values())))

    def values(self):
        """Returns the six disorders in column order."""
        return (self.D, self.D_w, self.D6, self.D6_w, self.Dc, self.Dc_w)

    def to_dict(self):
        """Returns a JSON-ready dictionary of the six disorders."""
        return dict(zip(self.COLUMNS, self.values()))


def _ordered_shape(ordered_shape):
    """Resolves an OrderedShape value or name."""
    if isinstance(ordered_shape, str):
        value = OrderedShape.from_string(ordered_shape)
    else:
        value = ordered_shape
    if value not in OrderedShape.values():
        raise exceptions.DomainError(
            "Unknown ordered shape {!r}".format(ordered_shape))
    return value


def disorder_report(network, interior_only=False, fallback=None):
    """Computes all six disorders of a network in one pass.

    Args:
        network: PlanarNetwork.
        interior_only: Whether to skip faces with an edge on the outer
            boundary.
        fallback: Distance policy for collapsed faces, see face_distances.

    Returns:
        DisorderReport.
    """
    if interior_only:
        face_ids = network.interior_face_ids()
    else:
        face_ids = range(len(network.faces))
    return DisorderReport(
        [face_distances(network, i, fallback) for i in face_ids])


def disorder(network, ordered_shape, weighted, interior_only=False,
             fallback=None):
    """Computes one turning disorder of a network.

    Args:
        network: PlanarNetwork.
        ordered_shape: OrderedShape value or its name.
        weighted: Whether to weight faces by their share of the total area.
        interior_only: Whether to skip faces with an edge on the outer
            boundary.
        fallback: Distance policy for collapsed faces, see face_distances.

    Returns:
        Disorder.
    """
    shape = _ordered_shape(ordered_shape)
    report = disorder_report(network, interior_only, fallback)
    suffix = {
        OrderedShape.REGULAR: "D",
        OrderedShape.HEXAGON: "D6",
        OrderedShape.CIRCLE: "Dc",
    }[shape]
    return getattr(report, suffix + ("_w" if weighted else ""))


class NetworkState(object):

    """Mutable combinatorial map shared by the stochastic processes.

    Vertices keep their indices for the whole run; removed vertices are
    marked dead. Face cycles are counterclockwise and each half-edge u -> v
    of a face with at least three distinct vertices maps to that face.

    Attributes:
        positions: Array of shape (V, 2).
        pinned: Boolean array of vertices fixed to the boundary.
        alive: Boolean array of vertices still in the network.
        neighbors: List of adjacency sets.
        faces: Dictionary from face id to vertex cycle list.
        nominal_sides: Dictionary from face id to side count.
        half_edges: Dictionary from (u, v) to face id.
    """

    def __init__(self, network):
        """Constructs NetworkState object.

        Args:
            network: PlanarNetwork.
        """
        self.positions = np.array(network.vertices, dtype=float)
        self.pinned = np.array(network.boundary, dtype=bool)
        self.alive = np.ones(len(self.positions), dtype=bool)
        self.neighbors = [set() for _ in range(len(self.positions))]
        for i, j in network.edges:
            self.neighbors[i].add(j)
            self.neighbors[j].add(i)
        self.faces = {i: list(face) for i, face in enumerate(network.faces)}
        self.nominal_sides = dict(enumerate(network.nominal_sides))
        self.metadata = dict(network.metadata)
        self.half_edges = {}
        for face_id in self.faces:
            self._link(face_id)

    def __repr__(self):
        """Returns string representation of state."""
        return "<NetworkState: {} vertices, {} faces>".format(
            int(self.alive.sum()), len(self.faces))

    def _link(self, face_id):
        """Registers the half-edges of a face."""
        cycle = self.faces[face_id]
        if len(set(cycle)) < 3 or len(set(cycle)) != len(cycle):
            return
        for u, v in zip(cycle, cycle[1:] + cycle[:1]):
            self.half_edges[(u, v)] = face_id

    def _unlink(self, face_id):
        """Unregisters the half-edges of a face."""
        cycle = self.faces[face_id]
        for u, v in zip(cycle, cycle[1:] + cycle[:1]):
            if self.half_edges.get((u, v)) == face_id:
                del self.half_edges[(u, v)]

    def set_face(self, face_id, cycle):
        """Replaces the cycle of a face."""
        if face_id in self.faces:
            self._unlink(face_id)
        self.faces[face_id] = list(cycle)
        if len(set(cycle)) >= 3:
            self.nominal_sides[face_id] = len(cycle)
        self._link(face_id)

    def remove_face(self, face_id):
        """Deletes a face."""
        self._unlink(face_id)
        del self.faces[face_id]
        del self.nominal_sides[face_id]

    def add_edge(self, u, v):
        """Connects two vertices."""
        self.neighbors[u].add(v)
        self.neighbors[v].add(u)

    def remove_edge(self, u, v):
        """Disconnects two vertices."""
        self.neighbors[u].discard(v)
        self.neighbors[v].discard(u)

    def remove_vertex(self, v):
        """Deletes an isolated vertex."""
        for w in list(self.neighbors[v]):
            self.remove_edge(v, w)
        self.alive[v] = False

    def has_edge(self, u, v):
        """Whether two vertices are adjacent."""
        return v in self.neighbors[u]

    def degree(self, v):
        """Returns the number of neighbors of a vertex."""
        return len(self.neighbors[v])

    def face_of(self, u, v):
        """Returns the face on the left of u -> v, or None."""
        return self.half_edges.get((u, v))

    def face_points(self, face_id):
        """Returns the coordinates of a face's cycle."""
        return self.positions[self.faces[face_id]]

    def edges(self):
        """Returns the sorted list of (i, j) edges with i < j."""
        return sorted((u, v) for u in np.flatnonzero(self.alive).tolist()
                      for v in self.neighbors[u] if u < v)

    def interior_edges(self):
        """Returns the sorted edges that border a face on each side."""
        return [(u, v) for u, v in self.edges()
                if (u, v) in self.half_edges and (v, u) in self.half_edges]

    def merge_close_vertices(self, labels):
        """Identifies vertices that share a cluster label.

        Pinned vertices represent their cluster, otherwise the smallest
        index does. Edges inside a cluster vanish, parallel edges collapse
        and repeated vertices are dropped from face cycles.

        Args:
            labels: Array mapping every vertex to its cluster label.

        Returns:
            Number of vertices removed.
        """
        clusters = {}
        for v in np.flatnonzero(self.alive).tolist():
            clusters.setdefault(int(labels[v]), []).append(v)

        target = {}
        for members in clusters.values():
            if len(members) < 2:
                continue
            pinned = [v for v in members if self.pinned[v]]
            keep = min(pinned) if pinned else min(members)
            for v in members:
                if v != keep:
                    target[v] = keep
        if not target:
            return 0

        for v, keep in target.items():
            for w in list(self.neighbors[v]):
                self.remove_edge(v, w)
                w = target.get(w, w)
                if w != keep:
                    self.add_edge(keep, w)
            self.alive[v] = False

        for face_id in list(self.faces):
            self._unlink(face_id)
        for face_id, cycle in self.faces.items():
            mapped = [target.get(v, v) for v in cycle]
            merged = [v for i, v in enumerate(mapped) if v != mapped[i - 1]]
            if not merged:
                merged = mapped[:1]
            self.faces[face_id] = merged
            if len(set(merged)) >= 3:
                self.nominal_sides[face_id] = len(merged)
        for face_id in self.faces:
            self._link(face_id)

        logger.debug("Merged %d vertices", len(target))
        return len(target)

    def snapshot(self, metadata=None):
        """Freezes the state into a compactly indexed PlanarNetwork.

        Args:
            metadata: Extra metadata entries.

        Returns:
            PlanarNetwork.
        """
        alive = np.flatnonzero(self.alive)
        index = np.full(len(self.positions), -1, dtype=int)
        index[alive] = np.arange(len(alive))

        face_ids = sorted(self.faces)
        info = dict(self.metadata)
        info.update(metadata or {})
        return PlanarNetwork(
            self.positions[alive],
            [(index[u], index[v]) for u, v in self.edges()],
            [[index[v] for v in self.faces[i]] for i in face_ids],
            self.pinned[alive],
            [self.nominal_sides[i] for i in face_ids],
            info)
