# -*- coding: utf-8 -*-
"""Planar geometry tools."""

import numpy as np
from scipy.sparse import coo_matrix
from scipy.spatial import cKDTree
from scipy.sparse.csgraph import connected_components


def signed_area(points):
    """Computes the shoelace area of a closed polyline.

    Args:
        points: Array-like of shape (n, 2).

    Returns:
        Signed area, positive if counterclockwise.
    """
    pts = np.asarray(points, dtype=float)
    if len(pts) < 3:
        return 0.0
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def orientation(a, b, c):
    """Returns the sign of the turn a -> b -> c.

    Args:
        a, b, c: Points.

    Returns:
        1 if counterclockwise, -1 if clockwise, 0 if collinear.
    """
    cross = ((b[0] - a[0]) * (c[1] - a[1]) -
             (b[1] - a[1]) * (c[0] - a[0]))
    return int(cross > 0) - int(cross < 0)


def _on_segment(a, b, c):
    """Whether collinear point c lies on the closed segment ab."""
    return (min(a[0], b[0]) <= c[0] <= max(a[0], b[0]) and
            min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))


def segments_intersect(p1, p2, q1, q2):
    """Determines whether closed segments p1p2 and q1q2 share a point.

    Args:
        p1, p2: Endpoints of the first segment.
        q1, q2: Endpoints of the second segment.

    Returns:
        True if the segments touch or cross.
    """
    o1 = orientation(p1, p2, q1)
    o2 = orientation(p1, p2, q2)
    o3 = orientation(q1, q2, p1)
    o4 = orientation(q1, q2, p2)

    if o1 != o2 and o3 != o4:
        return True

    # Collinear special cases.
    if o1 == 0 and _on_segment(p1, p2, q1):
        return True
    if o2 == 0 and _on_segment(p1, p2, q2):
        return True
    if o3 == 0 and _on_segment(q1, q2, p1):
        return True
    if o4 == 0 and _on_segment(q1, q2, p2):
        return True
    return False


def first_self_intersection(points):
    """Finds the first edge of a closed polyline that hits a non-adjacent edge.

    Edges are numbered by their starting vertex. Adjacent edges may only
    share their common vertex.

    Args:
        points: Array-like of shape (n, 2).

    Returns:
        Index of the starting vertex of the offending edge, or None.
    """
    pts = [tuple(p) for p in np.asarray(points, dtype=float)]
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = pts[j], pts[(j + 1) % n]
            if j == i + 1 or (i == 0 and j == n - 1):
                # Adjacent edges overlap only if they fold back.
                shared, other_a, other_b = (
                    (b, a, d) if j == i + 1 else (a, b, c))
                if (orientation(other_a, shared, other_b) == 0 and
                        np.dot(np.subtract(other_a, shared),
                               np.subtract(other_b, shared)) > 0):
                    return i
                continue
            if segments_intersect(a, b, c, d):
                return i
    return None


def merge_close_points(points, tolerance):
    """Clusters points that lie within a tolerance of each other.

    Clusters are closed transitively, so chains of close points collapse
    together.

    Args:
        points: Array-like of shape (n, 2).
        tolerance: Merge distance.

    Returns:
        Integer array mapping every point to the smallest index in its
        cluster.
    """
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    labels = np.arange(n)
    if n < 2:
        return labels

    pairs = cKDTree(pts).query_pairs(tolerance, output_type="ndarray")
    if len(pairs) == 0:
        return labels

    graph = coo_matrix(
        (np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(n, n))
    _, component = connected_components(graph, directed=False)

    # Smallest index per component is its representative.
    representative = np.full(component.max() + 1, n)
    np.minimum.at(representative, component, labels)
    return representative[component]


def transform_points(points, angle=0.0, scale=1.0, offset=(0.0, 0.0)):
    """Rotates, scales and translates points.

    Args:
        points: Array-like of shape (n, 2).
        angle: Counterclockwise rotation in radians.
        scale: Uniform scale factor.
        offset: Translation applied last.

    Returns:
        Transformed array of shape (n, 2).
    """
    c, s = np.cos(angle), np.sin(angle)
    rotation = np.array([[c, -s], [s, c]])
    pts = np.asarray(points, dtype=float)
    return scale * pts.dot(rotation.T) + np.asarray(offset, dtype=float)


def make_rng(seed):
    """Creates the random generator every stochastic process draws from.

    Args:
        seed: Unsigned 64-bit seed.

    Returns:
        numpy Generator backed by PCG64.
    """
    return np.random.Generator(np.random.PCG64(seed))


def describe_rng(seed):
    """Describes the generator created by make_rng for trace metadata."""
    return {
        "bit_generator": "PCG64",
        "library": "numpy {}".format(np.__version__),
        "seed": int(seed),
        "edge_choice": "integers(len(edges)) over sorted interior edges",
    }
