# -*- coding: utf-8 -*-
"""Polygon and network files."""

import json
import logging
import numpy as np
import pytest

from turning_disorder import exceptions
from turning_disorder.archimedean import generate_lattice
from turning_disorder.fileio import (read_network, read_polygon,
                                     write_network, write_polygon)
from turning_disorder.turning import Polygon

SQUARE = [[0, 0], [1, 0], [1, 1], [0, 1]]


def dump(path, data):
    path.write_text(json.dumps(data))
    return str(path)


def test_polygon_files(tmp_path):
    path = str(tmp_path / "square.json")
    write_polygon(path, Polygon(SQUARE))
    polygon = read_polygon(path)
    np.testing.assert_array_equal(polygon.vertices, SQUARE)
    assert not polygon.reversed


def test_clockwise_polygon_is_reversed(tmp_path, caplog):
    path = dump(tmp_path / "cw.json", {"vertices": SQUARE[::-1]})
    with caplog.at_level(logging.WARNING):
        polygon = read_polygon(path)
    assert polygon.reversed
    assert "Reversed" in caplog.text


def test_malformed_polygon_files(tmp_path):
    with pytest.raises(exceptions.FileCorrupted):
        read_polygon(str(tmp_path / "missing.json"))
    with pytest.raises(exceptions.FileCorrupted):
        read_polygon(dump(tmp_path / "list.json", SQUARE))
    with pytest.raises(exceptions.FileCorrupted):
        read_polygon(dump(tmp_path / "nokey.json", {"points": SQUARE}))
    with pytest.raises(exceptions.FileCorrupted):
        read_polygon(dump(tmp_path / "3d.json", {"vertices": [[0, 0, 0]]}))
    bad = tmp_path / "text.json"
    bad.write_text("{not json")
    with pytest.raises(exceptions.FileCorrupted):
        read_polygon(str(bad))
    with pytest.raises(exceptions.InvalidPolygon):
        read_polygon(dump(tmp_path / "bowtie.json",
                          {"vertices": [[0, 0], [1, 1], [1, 0], [0, 1]]}))


def test_network_round_trip(tmp_path):
    network = generate_lattice("4.8.8", 4)
    path = str(tmp_path / "lattice.json")
    write_network(path, network)
    loaded = read_network(path)
    np.testing.assert_array_equal(loaded.vertices, network.vertices)
    assert loaded.faces == network.faces
    assert loaded.edges == network.edges
    assert loaded.boundary.tolist() == network.boundary.tolist()
    assert loaded.metadata == {"lattice": "4.8.8", "half_width": 4}


def test_network_without_faces(tmp_path):
    path = dump(tmp_path / "grid.json", {
        "vertices": [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1], [2, 1]],
        "edges": [[0, 1], [1, 2], [0, 3], [1, 4], [2, 5], [3, 4], [4, 5]],
        "boundary": [0, 2],
        "metadata": {"source": "test"},
    })
    network = read_network(path)
    assert len(network.faces) == 2
    assert network.boundary.tolist() == [True, False, True, False, False,
                                         False]
    assert network.metadata == {"source": "test"}


def test_malformed_network_files(tmp_path):
    with pytest.raises(exceptions.FileCorrupted):
        read_network(dump(tmp_path / "a.json", {"vertices": SQUARE}))
    with pytest.raises(exceptions.FileCorrupted):
        read_network(dump(tmp_path / "b.json", {
            "vertices": SQUARE, "edges": [[0, 1, 2]]}))
    with pytest.raises(exceptions.FileCorrupted):
        read_network(dump(tmp_path / "c.json", {
            "vertices": SQUARE, "edges": [[0, 1]], "faces": [[0, 1, 9]]}))
    with pytest.raises(exceptions.FileCorrupted):
        read_network(dump(tmp_path / "d.json", {
            "vertices": SQUARE, "edges": [[0, 1]], "boundary": [7]}))
    with pytest.raises(exceptions.InvalidNetwork):
        read_network(dump(tmp_path / "e.json", {
            "vertices": SQUARE, "edges": [[0, 2], [1, 3], [0, 1], [2, 3]]}))


def test_unvalidated_network_keeps_bad_faces(tmp_path):
    path = dump(tmp_path / "clockwise.json", {
        "vertices": SQUARE,
        "edges": [[0, 1], [1, 2], [2, 3], [0, 3]],
        "faces": [[0, 3, 2, 1]],
    })
    with pytest.raises(exceptions.InvalidNetwork):
        read_network(path)
    network = read_network(path, validate=False)
    assert network.faces == [(0, 3, 2, 1)]
