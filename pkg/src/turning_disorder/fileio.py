# -*- coding: utf-8 -*-
"""Polygon and network JSON files.

A polygon file holds {"vertices": [[x, y], ...]}. A network file holds
{"vertices": [[x, y], ...], "edges": [[i, j], ...], "faces": [[i, j, k,
...], ...], "boundary": [i, ...]} where faces are optional and recovered
from the edges when absent.
"""

import json
import logging
import numpy as np

from . import exceptions
from .network import PlanarNetwork, extract_faces
from .turning import Polygon

logger = logging.getLogger(__name__)


def _load(path):
    """Loads a JSON object from a file.

    Raises:
        FileCorrupted: File missing, not JSON or not an object.
    """
    try:
        with open(path) as f:
            data = json.load(f)
    except (IOError, OSError, ValueError) as e:
        raise exceptions.FileCorrupted(path, str(e))
    if not isinstance(data, dict):
        raise exceptions.FileCorrupted(path, "expected a JSON object")
    return data


def _dump(path, data):
    with open(path, "w") as f:
        json.dump(data, f, sort_keys=True, indent=2)
        f.write("\n")


def _points(path, data, key):
    """Parses a list of 2D points."""
    try:
        points = np.array(data[key], dtype=float)
    except KeyError:
        raise exceptions.FileCorrupted(path, "missing {!r}".format(key))
    except (TypeError, ValueError) as e:
        raise exceptions.FileCorrupted(path, "bad {!r}: {}".format(key, e))
    if points.size == 0:
        return points.reshape(0, 2)
    if points.ndim != 2 or points.shape[1] != 2:
        raise exceptions.FileCorrupted(
            path, "{!r} must be a list of [x, y] pairs".format(key))
    return points


def _indices(path, data, key, default=None):
    """Parses a list of integer index lists."""
    if key not in data:
        if default is None:
            raise exceptions.FileCorrupted(path, "missing {!r}".format(key))
        return default
    try:
        return [[int(i) for i in item] for item in data[key]]
    except (TypeError, ValueError) as e:
        raise exceptions.FileCorrupted(path, "bad {!r}: {}".format(key, e))


def read_polygon(path):
    """Reads a polygon file.

    Clockwise input is reversed, which the returned polygon records in its
    reversed attribute.

    Args:
        path: JSON path.

    Returns:
        Polygon.

    Raises:
        FileCorrupted: Malformed file.
        InvalidPolygon: Vertices do not form a simple polygon.
    """
    polygon = Polygon.from_points(_points(path, _load(path), "vertices"))
    if polygon.reversed:
        logger.warning("Reversed clockwise polygon from %s", path)
    return polygon


def write_polygon(path, polygon):
    """Writes a polygon file."""
    _dump(path, {"vertices": np.asarray(polygon.vertices).tolist()})


def read_network(path, validate=True):
    """Reads a network file.

    Args:
        path: JSON path.
        validate: Whether to check planarity and faces.

    Returns:
        PlanarNetwork.

    Raises:
        FileCorrupted: Malformed file.
        InvalidNetwork: Network is not a valid planar partition.
    """
    data = _load(path)
    vertices = _points(path, data, "vertices")
    edges = _indices(path, data, "edges")
    if any(len(edge) != 2 for edge in edges):
        raise exceptions.FileCorrupted(path, "edges must be index pairs")

    try:
        boundary_ids = [int(i) for i in data.get("boundary", [])]
    except (TypeError, ValueError) as e:
        raise exceptions.FileCorrupted(path, "bad 'boundary': {}".format(e))
    if any(not 0 <= i < len(vertices) for i in boundary_ids):
        raise exceptions.FileCorrupted(
            path, "boundary refers to a missing vertex")

    if "faces" not in data:
        logger.info("Recovering faces of %s from its edges", path)
        network = extract_faces(vertices, edges, validate=validate)
        if boundary_ids:
            network.boundary[:] = False
            network.boundary[boundary_ids] = True
        network.metadata.update(data.get("metadata", {}))
        return network

    faces = _indices(path, data, "faces")
    if any(not 0 <= v < len(vertices) for face in faces for v in face):
        raise exceptions.FileCorrupted(path, "face refers to a missing vertex")
    boundary = np.zeros(len(vertices), dtype=bool)
    boundary[boundary_ids] = True
    network = PlanarNetwork(vertices, edges, faces, boundary,
                            data.get("nominal_sides"),
                            data.get("metadata", {}))
    if validate:
        network.validate()
    return network


def write_network(path, network):
    """Writes a network file."""
    _dump(path, {
        "vertices": network.vertices.tolist(),
        "edges": [list(edge) for edge in network.edges],
        "faces": [list(face) for face in network.faces],
        "boundary": np.flatnonzero(network.boundary).tolist(),
        "nominal_sides": list(network.nominal_sides),
        "metadata": network.metadata,
    })
    logger.debug("Wrote network with %d faces to %s",
                 len(network.faces), path)
