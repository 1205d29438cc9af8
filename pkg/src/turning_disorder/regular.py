# -*- coding: utf-8 -*-
"""Closed forms for 2-turning distances of regular polygons and circles."""

import math
import logging
import numpy as np

from . import exceptions
from .constants import TWO_PI, OrderedShape
from .turning import (Polygon, as_turning_function, circle_turning_function,
                      d2_turning, regular_polygon, regular_turning_function,
                      turning_function)

logger = logging.getLogger(__name__)

# Partial sums of squared floor terms are kept below this bound.
_INT64_LIMIT = 1 << 62


class RegularPolygonSpec(object):

    """Regular n-gon, n = 2 standing for the segment.

    Attributes:
        n: Side count.
    """

    def __init__(self, n):
        """Constructs RegularPolygonSpec object.

        Args:
            n: Side count, n >= 2.

        Raises:
            DomainError: n < 2.
        """
        self.n = _side_count(n)

    def __repr__(self):
        """Returns string representation of regular polygon."""
        return "<R_{}>".format(self.n)

    def turning_function(self):
        """Returns the turning function with jumps at i/n."""
        return regular_turning_function(self.n)

    def polygon(self):
        """Returns the unit-perimeter polygon, only defined for n >= 3."""
        return regular_polygon(self.n)


class PolygonTrace(object):

    """Cumulative perimeters and corner angles of a normalized polygon.

    The turning function equals theta[i - 1] on [x[i - 1], x[i]).

    Attributes:
        cumulative_perimeters: x_0 = 0 < x_1 < ... < x_n = 1.
        corner_angles: theta_0 = 0, ..., theta_n = 2π.
    """

    def __init__(self, cumulative_perimeters, corner_angles):
        """Constructs PolygonTrace object.

        Args:
            cumulative_perimeters: n + 1 increasing arc lengths.
            corner_angles: n + 1 accumulated angles.

        Raises:
            InvalidTurningFunction: Malformed trace.
        """
        x = np.array(cumulative_perimeters, dtype=float)
        theta = np.array(corner_angles, dtype=float)
        if len(x) < 2 or len(x) != len(theta):
            raise exceptions.InvalidTurningFunction(
                "Trace needs matching perimeters and angles")
        if np.any(np.diff(x) <= 0):
            raise exceptions.InvalidTurningFunction(
                "Cumulative perimeters must increase strictly")
        if abs(x[0]) > 1e-12 or abs(x[-1] - 1) > 1e-12:
            raise exceptions.InvalidTurningFunction(
                "Cumulative perimeters must run from 0 to 1")
        self.cumulative_perimeters = x
        self.corner_angles = theta

    def __len__(self):
        """Returns the number of sides."""
        return len(self.cumulative_perimeters) - 1

    @property
    def is_convex(self):
        """Whether the corner angles never decrease."""
        return bool(np.all(np.diff(self.corner_angles) >= -1e-12))

    @classmethod
    def from_turning_function(cls, f):
        """Constructs the trace of a step turning function.

        Args:
            f: TurningFunction with constant pieces.

        Returns:
            PolygonTrace with angles measured from the first piece.
        """
        if not f.is_step:
            raise exceptions.InvalidTurningFunction(
                "Only step functions have a polygon trace")
        x = np.append(f.breakpoints, 1.0)
        theta = np.append(f.values - f.values[0], TWO_PI)
        return cls(x, theta)

    @classmethod
    def from_polygon(cls, polygon):
        """Constructs the trace of a polygon.

        Args:
            polygon: Polygon.

        Returns:
            PolygonTrace.
        """
        return cls.from_turning_function(turning_function(polygon))


def _side_count(n):
    """Validates a regular side count."""
    if int(n) != n or n < 2:
        raise exceptions.DomainError(
            "Regular polygons need n >= 2, got {}".format(n))
    return int(n)


def d2_regular_sum(n, k):
    """Computes d₂(R_n, R_k) from the merged jump lists of both polygons.

    On the grid c = nks the difference of the turning functions is
    2πN(c)/(nk) with N(c) = k⌊c/k⌋ - n⌊c/n⌋, constant between consecutive
    multiples of n or k. Shift 0 is optimal for regular polygons, so only
    the O(n + k) pieces of that shift are summed. The squared distance is
    accumulated as an exact integer ratio.

    Args:
        n: Side count, n >= 2.
        k: Side count, k >= 2.

    Returns:
        Distance.

    Raises:
        DomainError: n or k < 2.
    """
    n, k = _side_count(n), _side_count(k)
    if n == k:
        return 0.0

    nk = n * k
    cuts = np.union1d(np.arange(0, nk, k, dtype=np.int64),
                      np.arange(0, nk, n, dtype=np.int64))
    widths = np.diff(np.append(cuts, nk))
    jumps = k * (cuts // k) - n * (cuts // n)

    # Pieces are shorter than max(n, k) and jumps smaller in magnitude.
    bound = max(n, k) ** 3
    if bound >= _INT64_LIMIT:
        widths, jumps = widths.astype(object), jumps.astype(object)
    terms = widths * jumps * jumps
    chunk = max(1, _INT64_LIMIT // bound)
    total = sum(int(terms[i:i + chunk].sum())
                for i in range(0, len(terms), chunk))
    numerator = 4 * total - nk * (k - n) ** 2
    return math.pi * math.sqrt(numerator / nk ** 3)


class RegularDistance(object):

    """2-turning distance between regular polygons with its derivation.

    Attributes:
        distance: Distance.
        formula: One of "identical", "multiple", "consecutive", "sum".
        gcd: Greatest common divisor of the side counts.
    """

    IDENTICAL = "identical"
    MULTIPLE = "multiple"
    CONSECUTIVE = "consecutive"
    SUM = "sum"

    def __init__(self, distance, formula, gcd):
        self.distance = float(distance)
        self.formula = formula
        self.gcd = gcd

    def __float__(self):
        return self.distance

    def __repr__(self):
        return "<RegularDistance: {:.12g} ({}, gcd {})>".format(
            self.distance, self.formula, self.gcd)


def d2_regular_closed(n, k):
    """Computes d₂(R_n, R_k) through the cheapest exact closed form.

    The precedence is multiples, then reduction by the gcd, then the
    consecutive-integer formula, then the summation.

    Args:
        n: Side count, n >= 2.
        k: Side count, k >= 2.

    Returns:
        RegularDistance.

    Raises:
        DomainError: n or k < 2.
    """
    n, k = _side_count(n), _side_count(k)
    q = math.gcd(n, k)
    if n == k:
        return RegularDistance(0.0, RegularDistance.IDENTICAL, q)

    small, large = min(n, k), max(n, k)
    if large % small == 0:
        a = large // small
        distance = math.pi / large * math.sqrt((a * a - 1) / 3.0)
        return RegularDistance(distance, RegularDistance.MULTIPLE, q)

    m, l = small // q, large // q
    if l - m == 1:
        numerator = 2 * m * m + 2 * m - 1
        denominator = 3 * m * m * (m + 1) ** 2
        distance = math.pi * math.sqrt(numerator / denominator) / q
        return RegularDistance(distance, RegularDistance.CONSECUTIVE, q)

    return RegularDistance(d2_regular_sum(m, l) / q, RegularDistance.SUM, q)


def d2_circle_polygon(trace):
    """Computes d₂(C, P) from the trace of a polygon.

    Args:
        trace: PolygonTrace.

    Returns:
        Distance.
    """
    x = trace.cumulative_perimeters
    theta = trace.corner_angles[:-1] / math.pi
    cubes = (2 * x[1:] - theta) ** 3 - (2 * x[:-1] - theta) ** 3
    mean = 1.0 - np.sum(theta * np.diff(x))
    squared = np.sum(cubes) / 6.0 - mean * mean
    return math.pi * math.sqrt(max(squared, 0.0))


def d2_circle(shape):
    """Computes the 2-turning distance between a shape and the circle.

    Args:
        shape: Polygon or TurningFunction. Step functions use the polygon
            trace formula; affine ones fall back to the general algorithm.

    Returns:
        Distance.
    """
    f = as_turning_function(shape)
    if f.is_step:
        return d2_circle_polygon(PolygonTrace.from_turning_function(f))
    return d2_turning(f, circle_turning_function()).distance


def d2_circle_regular(n):
    """Computes d₂(C, R_n) = √3π/(3n).

    Args:
        n: Side count, n >= 2.

    Returns:
        Distance.

    Raises:
        DomainError: n < 2.
    """
    n = _side_count(n)
    return math.sqrt(3) * math.pi / (3 * n)


def d2_segment_vs(target):
    """Computes d₂ from the segment R₂ to R_n or to the circle.

    Args:
        target: Side count n >= 2, or "circle".

    Returns:
        Distance.
    """
    if isinstance(target, str):
        if target.lower() != "circle":
            raise exceptions.DomainError(
                "Unknown segment target {!r}".format(target))
        return d2_circle_regular(2)
    return d2_regular_sum(2, target)


def rectangle(aspect):
    """Constructs the rectangle with sides aspect and 1.

    Args:
        aspect: Ratio of the horizontal to the vertical side.

    Returns:
        Polygon.
    """
    if not aspect > 0:
        raise exceptions.DomainError(
            "Aspect ratio must be positive, got {}".format(aspect))
    a = float(aspect)
    return Polygon([(0.0, 0.0), (a, 0.0), (a, 1.0), (0.0, 1.0)])


def aspect_ratio_sweep(start, stop, step):
    """Compares rectangles of increasing aspect ratio to ordered shapes.

    Args:
        start: First aspect ratio.
        stop: Last aspect ratio, included if on the grid.
        step: Increment.

    Returns:
        List of (a, d₂(R₄, P_a), d₂(R₆, P_a), d₂(C, P_a)) tuples.
    """
    if not step > 0 or stop < start:
        raise exceptions.DomainError(
            "Sweep {}:{}:{} is empty".format(start, stop, step))

    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    square = regular_turning_function(4)
    hexagon = regular_turning_function(6)

    rows = []
    for i in range(count):
        a = round(start + i * step, 12)
        f = turning_function(rectangle(a))
        rows.append((
            a,
            d2_turning(square, f).distance,
            d2_turning(hexagon, f).distance,
            d2_circle(f),
        ))
    logger.debug("Swept %d aspect ratios", count)
    return rows


def ordered_distance(shape, ordered_shape, sides=None):
    """Computes the distance from a shape to an ordered reference shape.

    Args:
        shape: Polygon or TurningFunction.
        ordered_shape: OrderedShape value.
        sides: Side count of the regular reference, defaults to the number
            of pieces of the shape.

    Returns:
        Distance.
    """
    f = as_turning_function(shape)
    if ordered_shape == OrderedShape.CIRCLE:
        return d2_circle(f)
    if ordered_shape == OrderedShape.HEXAGON:
        sides = 6
    elif ordered_shape != OrderedShape.REGULAR:
        raise exceptions.DomainError(
            "Unknown ordered shape {}".format(ordered_shape))
    if sides is None:
        sides = len(f)
    return d2_turning(regular_turning_function(sides), f).distance


def regular_ordered_distance(n, ordered_shape, sides=None):
    """Computes the distance from R_n to an ordered reference shape exactly.

    Args:
        n: Side count of the compared regular polygon, n >= 2.
        ordered_shape: OrderedShape value.
        sides: Side count of the regular reference, defaults to n.

    Returns:
        Distance.
    """
    if ordered_shape == OrderedShape.CIRCLE:
        return d2_circle_regular(n)
    if ordered_shape == OrderedShape.HEXAGON:
        return d2_regular_closed(n, 6).distance
    return d2_regular_closed(n, n if sides is None else sides).distance
