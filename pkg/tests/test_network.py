# -*- coding: utf-8 -*-
"""Planar networks and their turning disorders."""

import math
import numpy as np
import pytest

from turning_disorder import exceptions
from turning_disorder.archimedean import generate_lattice
from turning_disorder.constants import OrderedShape
from turning_disorder.network import (
    NetworkState, PlanarNetwork, check_planarity, disorder, disorder_report,
    extract_faces, face_area, face_distances, face_sides)
from turning_disorder.regular import (d2_circle_regular, d2_regular_closed,
                                      d2_segment_vs)
from turning_disorder.t1 import degenerate_face_distance

HEX_CIRCLE = math.sqrt(3) * math.pi / 18


def square_grid(n):
    """Vertices and edges of an n x n grid of unit squares."""
    side = n + 1
    vertices = [(x, y) for y in range(side) for x in range(side)]
    edges = []
    for y in range(side):
        for x in range(side):
            v = y * side + x
            if x < n:
                edges.append((v, v + 1))
            if y < n:
                edges.append((v, v + side))
    return vertices, edges


def test_extract_square_grid():
    network = extract_faces(*square_grid(2))
    assert len(network.faces) == 4
    assert all(face_sides(network, i) == 4 for i in range(4))
    assert [face_area(network, i) for i in range(4)] == [1.0] * 4
    assert network.total_area() == pytest.approx(4.0)
    assert network.boundary.tolist() == [True] * 4 + [False] + [True] * 4


def test_faces_start_at_smallest_vertex():
    network = extract_faces(*square_grid(2))
    assert network.faces[0] == (0, 1, 4, 3)
    for face in network.faces:
        assert face[0] == min(face)


def test_interior_faces():
    network = extract_faces(*square_grid(3))
    assert network.interior_face_ids() == [4]
    counts = network.edge_face_counts()
    assert sorted(set(counts.values())) == [1, 2]


def test_faces_meeting_boundary_at_a_vertex_are_interior():
    vertices = [(0, 0), (3, 0), (3, 3), (0, 3), (2, 1), (1, 2)]
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (0, 5), (4, 5),
             (2, 4), (2, 5)]
    faces = [(0, 1, 2, 4), (0, 4, 5), (0, 5, 2, 3), (2, 5, 4)]
    network = PlanarNetwork(vertices, edges, faces,
                            boundary=[True] * 4 + [False] * 2)
    network.validate()
    assert network.interior_face_ids() == [1, 3]
    assert len(disorder_report(network, interior_only=True)) == 2


def test_crossing_edges():
    points = [(0, 0), (1, 1), (1, 0), (0, 1)]
    with pytest.raises(exceptions.InvalidNetwork):
        check_planarity(points, [(0, 1), (2, 3)])
    check_planarity(points, [(0, 2), (2, 1), (1, 3), (3, 0)])


def test_overlapping_edges():
    points = [(0, 0), (2, 0), (1, 0), (1, 1)]
    with pytest.raises(exceptions.InvalidNetwork):
        check_planarity(points, [(0, 1), (0, 2)])


def test_extract_rejects_bad_graphs():
    with pytest.raises(exceptions.InvalidNetwork):
        extract_faces([(0, 0), (1, 0)], [(0, 0)])
    with pytest.raises(exceptions.InvalidNetwork):
        extract_faces([(0, 0), (1, 0), (0, 1), (2, 2)],
                      [(0, 1), (1, 2), (2, 0), (2, 3)])
    with pytest.raises(exceptions.InvalidNetwork):
        extract_faces([(0, 0), (1, 0), (0, 1), (5, 5), (6, 5), (5, 6)],
                      [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(exceptions.InvalidNetwork):
        extract_faces([(0, 0), (1, 0)], [(0, 7)])


def test_validate_counts_edge_incidences():
    vertices, edges = square_grid(1)
    network = PlanarNetwork(vertices, edges, [(0, 1, 3, 2), (0, 1, 3, 2),
                                              (0, 1, 3, 2)])
    with pytest.raises(exceptions.InvalidNetwork):
        network.validate()


def test_square_grid_disorders():
    network = extract_faces(*square_grid(3))
    report = disorder_report(network)
    assert len(report) == 9
    assert report.D == pytest.approx(0.0, abs=1e-9)
    assert report.D6 == pytest.approx(d2_regular_closed(4, 6).distance)
    assert report.Dc_w == pytest.approx(d2_circle_regular(4))
    assert report.min_area == report.max_area == 1.0


def test_hexagonal_lattice_is_ordered():
    network = generate_lattice("hex", 4)
    report = disorder_report(network)
    assert report.D < 1e-6
    assert report.D6 < 1e-6
    assert report.D6_w < 1e-6
    assert report.Dc == pytest.approx(HEX_CIRCLE)
    assert report.Dc_w == pytest.approx(HEX_CIRCLE)
    assert round(report.Dc, 4) == 0.3023


def test_single_disorder_lookup():
    network = extract_faces(*square_grid(2))
    assert disorder(network, "circle", True) == pytest.approx(
        d2_circle_regular(4))
    assert disorder(network, OrderedShape.HEXAGON, False) == pytest.approx(
        d2_regular_closed(4, 6).distance)
    with pytest.raises(exceptions.DomainError):
        disorder(network, "triangle", False)


def test_interior_only():
    network = extract_faces(*square_grid(3))
    assert len(disorder_report(network, interior_only=True)) == 1
    with pytest.raises(exceptions.InvalidNetwork):
        disorder_report(extract_faces(*square_grid(2)), interior_only=True)


def test_area_weights():
    # A 2 x 1 rectangle next to a unit square.
    vertices = [(0, 0), (1, 0), (3, 0), (0, 1), (1, 1), (3, 1)]
    edges = [(0, 1), (1, 2), (0, 3), (1, 4), (2, 5), (3, 4), (4, 5)]
    report = disorder_report(extract_faces(vertices, edges))
    by_area = dict((face.area, face) for face in report.per_face_distances)
    expected = (by_area[1.0].circle + 2 * by_area[2.0].circle) / 3
    assert report.Dc_w == pytest.approx(expected)
    assert report.Dc == pytest.approx(
        (by_area[1.0].circle + by_area[2.0].circle) / 2)


def collapsed_network():
    """Square whose third corner sits on its second."""
    vertices = [(0, 0), (1, 0), (1, 0), (0, 1)]
    faces = [(0, 1, 2, 3)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    return PlanarNetwork(vertices, edges, faces)


def test_collapsed_face_needs_fallback():
    network = collapsed_network()
    with pytest.raises(exceptions.InvalidNetwork):
        disorder_report(network)

    distances = face_distances(network, 0, degenerate_face_distance)
    assert distances.degenerate
    assert distances.area == 0.0
    assert distances.sides == 4
    assert distances.distance(OrderedShape.CIRCLE) == pytest.approx(
        d2_circle_regular(2))


def test_sliver_face_is_scored_as_needle():
    # Merged vertices leave a face with almost no area.
    vertices = [(0, 0), (1, 0), (2, 1e-13), (1, 2e-13)]
    network = PlanarNetwork(vertices, [(0, 1), (1, 2), (2, 3), (0, 3)],
                            [(0, 1, 2, 3)], nominal_sides=[6])
    with pytest.raises(exceptions.InvalidNetwork):
        disorder_report(network)

    report = disorder_report(network, fallback=degenerate_face_distance)
    face = report.per_face_distances[0]
    assert face.degenerate
    assert face.sides == 6
    assert face.regular == pytest.approx(d2_segment_vs(6))
    assert face.hexagon == pytest.approx(d2_segment_vs(6))
    assert face.circle == pytest.approx(d2_segment_vs("circle"))
    assert report.Dc == pytest.approx(d2_segment_vs("circle"))


def test_state_tracks_faces():
    network = extract_faces(*square_grid(2))
    state = NetworkState(network)
    assert state.interior_edges() == [(1, 4), (3, 4), (4, 5), (4, 7)]
    assert state.degree(4) == 4
    assert state.face_of(0, 1) == 0
    assert state.face_of(1, 0) is None

    snapshot = state.snapshot({"step": 0})
    assert snapshot.faces == network.faces
    assert snapshot.edges == network.edges
    assert snapshot.metadata["step"] == 0
    np.testing.assert_array_equal(snapshot.vertices, network.vertices)


def test_state_removal_compacts_snapshot():
    network = extract_faces(*square_grid(2))
    state = NetworkState(network)
    state.remove_face(3)
    state.remove_vertex(8)
    snapshot = state.snapshot()
    assert len(snapshot.vertices) == 8
    assert len(snapshot.faces) == 3
    assert len(snapshot.edges) == 10


def test_merge_keeps_pinned_representative():
    network = extract_faces(*square_grid(2))
    state = NetworkState(network)
    labels = np.arange(9)
    labels[5] = 4
    assert state.merge_close_vertices(labels) == 1
    assert not state.alive[4]
    assert state.degree(5) == 5
    assert sorted(len(face) for face in state.faces.values()) == [3, 3, 4, 4]
