# -*- coding: utf-8 -*-
"""Turning functions and p-turning distances between planar shapes.

All polygons are simple and counterclockwise. Their turning functions are
right-continuous step functions on [0, 1) extended to the real line by

    f(s + 1) = f(s) + 2π.

Circles and spirals are represented by the same type with affine pieces.
"""

import math
import logging
import numpy as np
from scipy.optimize import minimize_scalar
from shapely.geometry import LinearRing

from . import exceptions
from .constants import TWO_PI, BREAKPOINT_TOLERANCE
from .tools import first_self_intersection, signed_area, transform_points

logger = logging.getLogger(__name__)

# Largest number of (shift, piece) cells evaluated in one vectorized pass.
_CHUNK_SIZE = 1 << 20

# Squared distances closer than this are ties, broken by the smallest shift.
_TIE_TOLERANCE = 1e-14

# Tolerance on the rotation when it has to be searched for.
_THETA_TOLERANCE = 1e-10

# Smallest area, relative to the squared perimeter, of a valid polygon.
_NEEDLE_RATIO = 1e-12


class Polygon(object):

    """Simple counterclockwise polygon.

    Attributes:
        vertices: Read-only array of shape (n, 2).
        reversed: Whether clockwise input was reversed into this polygon.
    """

    def __init__(self, vertices, reversed=False):
        """Constructs and validates a Polygon.

        Args:
            vertices: Sequence of (x, y) points in counterclockwise order.
            reversed: Whether the points were reversed from clockwise input.

        Raises:
            InvalidPolygon: Fewer than 3 vertices, a zero-length edge, a
                self-intersection or a non-positive area.
        """
        pts = np.array(vertices, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise exceptions.InvalidPolygon(
                "Vertices must be a list of 2D points", None)
        if len(pts) < 3:
            raise exceptions.InvalidPolygon(
                "Polygon needs at least 3 vertices, got {}".format(len(pts)),
                None)
        if not np.all(np.isfinite(pts)):
            bad = int(np.flatnonzero(~np.all(np.isfinite(pts), axis=1))[0])
            raise exceptions.InvalidPolygon(
                "Non-finite coordinate at vertex {}".format(bad), bad)

        # Consecutive vertices must be distinct.
        edges = np.roll(pts, -1, axis=0) - pts
        lengths = np.hypot(edges[:, 0], edges[:, 1])
        short = np.flatnonzero(lengths <= 1e-14 * lengths.max())
        if len(short):
            raise exceptions.InvalidPolygon(
                "Zero-length edge at vertex {}".format(short[0]),
                int(short[0]))

        if not LinearRing(pts).is_simple:
            index = first_self_intersection(pts)
            index = 0 if index is None else index
            raise exceptions.InvalidPolygon(
                "Polygon self-intersects at vertex {}".format(index), index)

        # Needles whose area vanishes against the perimeter have no
        # usable turning function.
        area = signed_area(pts)
        if abs(area) <= _NEEDLE_RATIO * lengths.sum() ** 2:
            raise exceptions.InvalidPolygon("Polygon has zero area", None)
        if area < 0:
            raise exceptions.InvalidPolygon("Polygon is clockwise", None)

        pts.setflags(write=False)
        self.vertices = pts
        self.reversed = reversed
        self._lengths = lengths
        self._area = area

    @classmethod
    def from_points(cls, points):
        """Constructs a Polygon from points in either orientation.

        Clockwise input is reversed while keeping the first vertex first.

        Args:
            points: Sequence of (x, y) points.

        Returns:
            Polygon.
        """
        pts = np.array(points, dtype=float)
        if pts.ndim == 2 and len(pts) >= 3 and signed_area(pts) < 0:
            pts = np.vstack([pts[:1], pts[:0:-1]])
            return cls(pts, reversed=True)
        return cls(pts)

    def __len__(self):
        """Returns the number of vertices."""
        return len(self.vertices)

    def __repr__(self):
        """Returns string representation of polygon."""
        return "<Polygon: {} vertices, area {:.6g}>".format(
            len(self), self.area)

    @property
    def side_lengths(self):
        """Edge lengths, edge i running from vertex i to vertex i + 1."""
        return self._lengths.copy()

    @property
    def perimeter(self):
        """Total boundary length."""
        return float(self._lengths.sum())

    @property
    def area(self):
        """Enclosed area."""
        return self._area

    @property
    def cumulative_perimeters(self):
        """Normalized arc length x_0 = 0 < ... < x_n = 1 at each corner."""
        x = np.concatenate([[0.0], np.cumsum(self._lengths)])
        x /= x[-1]
        x[-1] = 1.0
        return x

    @property
    def exterior_turns(self):
        """Signed exterior angle in (-π, π) at every vertex.

        The turn at vertex i is measured from edge i - 1 to edge i.
        """
        edges = np.roll(self.vertices, -1, axis=0) - self.vertices
        incoming = np.roll(edges, 1, axis=0)
        cross = incoming[:, 0] * edges[:, 1] - incoming[:, 1] * edges[:, 0]
        dot = incoming[:, 0] * edges[:, 0] + incoming[:, 1] * edges[:, 1]
        return np.arctan2(cross, dot)

    @property
    def is_convex(self):
        """Whether no exterior turn is clockwise."""
        return bool(np.all(self.exterior_turns >= -1e-12))


class TurningFunction(object):

    """Right-continuous turning function with affine pieces.

    On [breakpoints[i], breakpoints[i + 1]) the function equals

        values[i] + slopes[i] * (s - breakpoints[i])

    with breakpoints[n] = 1, and it is extended past [0, 1) by adding 2π
    per period.

    Attributes:
        breakpoints: Strictly increasing piece starts, first is 0.
        values: Value at the start of each piece in radians.
        slopes: Slope of each piece, zero for polygons.
        total_turn: Increase over one period, always 2π.
        rotation_period: Shift that acts as a rotation: 1/n for a regular
            n-gon, 0 for the circle (every shift does), 1 otherwise.
    """

    total_turn = TWO_PI

    def __init__(self, breakpoints, values, slopes=None, rotation_period=1.0):
        """Constructs TurningFunction object.

        Args:
            breakpoints: Piece starts in [0, 1).
            values: Piece start values.
            slopes: Piece slopes (default: all zero).
            rotation_period: See class attributes.

        Raises:
            InvalidTurningFunction: Malformed pieces.
        """
        b = np.array(breakpoints, dtype=float).ravel()
        v = np.array(values, dtype=float).ravel()
        if slopes is None:
            m = np.zeros_like(b)
        else:
            m = np.array(slopes, dtype=float).ravel()

        if len(b) == 0 or len(b) != len(v) or len(b) != len(m):
            raise exceptions.InvalidTurningFunction(
                "Breakpoints, values and slopes must have equal lengths")
        if b[0] != 0.0:
            raise exceptions.InvalidTurningFunction(
                "First breakpoint must be 0, got {}".format(b[0]))
        if np.any(np.diff(b) <= 0) or b[-1] >= 1.0:
            raise exceptions.InvalidTurningFunction(
                "Breakpoints must increase strictly inside [0, 1)")
        if not (np.all(np.isfinite(v)) and np.all(np.isfinite(m))):
            raise exceptions.InvalidTurningFunction("Non-finite piece")

        for array in (b, v, m):
            array.setflags(write=False)
        self.breakpoints = b
        self.values = v
        self.slopes = m
        self.rotation_period = float(rotation_period)

    def __len__(self):
        """Returns the number of pieces."""
        return len(self.breakpoints)

    def __repr__(self):
        """Returns string representation of turning function."""
        kind = "step" if self.is_step else "affine"
        return "<TurningFunction: {} {} pieces>".format(len(self), kind)

    def __call__(self, s):
        """Evaluates the extended function.

        Args:
            s: Real number or array.

        Returns:
            Value(s) in radians.
        """
        values, _ = self.evaluate(s)
        return values if np.ndim(values) else float(values)

    @property
    def is_step(self):
        """Whether every piece is constant."""
        return not np.any(self.slopes)

    @property
    def lengths(self):
        """Length of every piece."""
        return np.diff(np.append(self.breakpoints, 1.0))

    def evaluate(self, s):
        """Evaluates the extended function and its slope.

        The period count is applied as an integer multiple of 2π, so no
        rounding accumulates with |s|.

        Args:
            s: Real number or array.

        Returns:
            Tuple of (values, slopes) with the shape of s.
        """
        x = np.asarray(s, dtype=float)
        k = np.floor(x)
        frac = x - k

        # Tiny negative inputs round up to a whole period.
        wrap = frac >= 1.0
        frac = np.where(wrap, 0.0, frac)
        k = np.where(wrap, k + 1, k)

        i = np.searchsorted(self.breakpoints, frac, side="right") - 1
        values = (self.values[i] +
                  self.slopes[i] * (frac - self.breakpoints[i]) +
                  self.total_turn * k)
        return values, self.slopes[i]

    def integral(self):
        """Returns the integral over one period."""
        lengths = self.lengths
        return float(np.sum(
            self.values * lengths + 0.5 * self.slopes * lengths ** 2))


class CriticalEventSet(object):

    """Shifts at which jumps of two turning functions coincide.

    Attributes:
        events: Sorted array of distinct shifts in [0, 1).
    """

    def __init__(self, events):
        """Constructs CriticalEventSet object.

        Args:
            events: Sorted distinct shifts.
        """
        self.events = np.asarray(events, dtype=float)
        self.events.setflags(write=False)

    def __len__(self):
        """Returns the number of events."""
        return len(self.events)

    def __iter__(self):
        """Iterates over events in increasing order."""
        return iter(self.events.tolist())

    def __repr__(self):
        """Returns string representation of event set."""
        return "<CriticalEventSet: {} events>".format(len(self))


class DistanceResult(object):

    """Minimized p-turning distance.

    Attributes:
        distance: Nonnegative distance.
        optimal_shift_t: Achieving shift in [0, 1).
        optimal_rotation_theta: Achieving rotation in radians.
        p: Exponent.
    """

    def __init__(self, distance, optimal_shift_t, optimal_rotation_theta, p):
        """Constructs DistanceResult object.

        Args:
            distance: Nonnegative distance.
            optimal_shift_t: Achieving shift.
            optimal_rotation_theta: Achieving rotation.
            p: Exponent.
        """
        self.distance = float(distance)
        self.optimal_shift_t = float(optimal_shift_t)
        self.optimal_rotation_theta = float(optimal_rotation_theta)
        self.p = p

    def __float__(self):
        """Returns the distance."""
        return self.distance

    def __repr__(self):
        """Returns string representation of result."""
        return "<d_{s.p} = {s.distance:.12g} at t={s.optimal_shift_t:.6g}, "\
            "θ={s.optimal_rotation_theta:.6g}>".format(s=self)

    def to_dict(self):
        """Returns a JSON-ready dictionary."""
        return {
            "distance": self.distance,
            "t": self.optimal_shift_t,
            "theta": self.optimal_rotation_theta,
            "p": self.p,
        }


def normalize_polygon(polygon):
    """Scales, translates and rotates a polygon into the standard position.

    The first vertex moves to the origin, the first edge onto the positive
    x-axis, and the perimeter becomes 1.

    Args:
        polygon: Polygon.

    Returns:
        Normalized Polygon.
    """
    pts = np.array(polygon.vertices) - polygon.vertices[0]
    angle = math.atan2(pts[1, 1], pts[1, 0])
    pts = transform_points(pts, -angle, 1.0 / polygon.perimeter)

    # Pin the convention exactly.
    pts[0] = 0.0
    pts[1, 1] = 0.0
    return Polygon(pts, reversed=polygon.reversed)


def turning_function(polygon):
    """Constructs the turning function of a polygon.

    The first piece holds the angle of the first edge, and angles accumulate
    along the traversal without wrapping.

    Args:
        polygon: Polygon.

    Returns:
        Step TurningFunction with one piece per vertex.

    Raises:
        InvalidPolygon: Boundary does not turn by exactly 2π.
    """
    pts = polygon.vertices
    first = math.atan2(pts[1, 1] - pts[0, 1], pts[1, 0] - pts[0, 0])
    turns = polygon.exterior_turns

    total = float(turns.sum())
    if abs(total - TWO_PI) > 1e-9:
        raise exceptions.InvalidPolygon(
            "Boundary turns by {} instead of 2π".format(total), None)

    values = first + np.concatenate([[0.0], np.cumsum(turns[1:])])
    breakpoints = polygon.cumulative_perimeters[:-1]
    return TurningFunction(breakpoints, values)


def eval_extended(f, s):
    """Evaluates a turning function anywhere on the real line.

    Args:
        f: TurningFunction.
        s: Real number.

    Returns:
        Angle in radians, f(s ± 1) = f(s) ± 2π.
    """
    return f(s)


def regular_turning_function(n):
    """Constructs the turning function of the regular n-gon.

    Args:
        n: Side count, 2 for the segment.

    Returns:
        TurningFunction with breakpoints i/n and values 2πi/n.

    Raises:
        DomainError: n < 2.
    """
    if int(n) != n or n < 2:
        raise exceptions.DomainError(
            "Regular polygons need n >= 2, got {}".format(n))
    n = int(n)
    i = np.arange(n)
    return TurningFunction(i / float(n), TWO_PI * i / n,
                           rotation_period=1.0 / n)


def segment_turning_function():
    """Constructs the 2-gon turning function: 0 on [0, ½), π on [½, 1)."""
    return regular_turning_function(2)


def circle_turning_function():
    """Constructs the turning function 2πs of the unit-perimeter circle."""
    return TurningFunction([0.0], [0.0], [TWO_PI], rotation_period=0.0)


def spiral_turning_function(n):
    """Constructs the piecewise-linear turning function of an n-turn spiral.

    The spiral winds n times counterclockwise over the first half of its
    perimeter, turns back by π and unwinds over the second half.

    Args:
        n: Number of windings, n >= 2.

    Returns:
        TurningFunction with two affine pieces.

    Raises:
        DomainError: n < 2.
    """
    if int(n) != n or n < 2:
        raise exceptions.DomainError(
            "Spirals need n >= 2 windings, got {}".format(n))
    n = int(n)
    return TurningFunction(
        [0.0, 0.5],
        [0.0, (2 * n - 1) * math.pi],
        [4 * math.pi * n, 4 * math.pi * (1 - n)])


def regular_polygon(n):
    """Constructs the regular n-gon with unit perimeter in standard position.

    Args:
        n: Side count, n >= 3.

    Returns:
        Polygon.

    Raises:
        DomainError: n < 3.
    """
    if int(n) != n or n < 3:
        raise exceptions.DomainError(
            "Regular polygons need n >= 3 vertices, got {}".format(n))
    n = int(n)
    angles = TWO_PI * np.arange(n) / n
    steps = np.column_stack([np.cos(angles), np.sin(angles)]) / n
    pts = np.vstack([[0.0, 0.0], np.cumsum(steps, axis=0)[:-1]])
    return Polygon(pts)


def right_triangle(a):
    """Constructs the right triangle with legs 3 and a.

    Args:
        a: Length of the vertical leg.

    Returns:
        Polygon (0, 0), (3, 0), (3, a).
    """
    return Polygon([(0.0, 0.0), (3.0, 0.0), (3.0, float(a))])


def perturb_vertex(polygon, index, delta):
    """Moves a single vertex of a polygon.

    Args:
        polygon: Polygon.
        index: Vertex index.
        delta: Displacement (dx, dy).

    Returns:
        Polygon with vertex index moved by delta.

    Raises:
        DomainError: Index out of range.
        InvalidPolygon: Result is no longer simple.
    """
    if not 0 <= index < len(polygon):
        raise exceptions.DomainError(
            "Vertex index {} out of range for {} vertices".format(
                index, len(polygon)))
    pts = np.array(polygon.vertices)
    pts[index] += np.asarray(delta, dtype=float)
    return Polygon(pts, reversed=polygon.reversed)


def as_turning_function(shape):
    """Returns the turning function of a Polygon or a TurningFunction."""
    if isinstance(shape, TurningFunction):
        return shape
    if isinstance(shape, Polygon):
        return turning_function(shape)
    raise TypeError("Expected Polygon or TurningFunction, got {!r}".format(
        type(shape).__name__))


def _unique_shifts(shifts):
    """Sorts shifts into [0, 1) and drops near duplicates."""
    s = np.sort(np.mod(np.asarray(shifts, dtype=float).ravel(), 1.0))
    s[s >= 1.0 - BREAKPOINT_TOLERANCE] = 0.0
    s = np.sort(s)
    if len(s) == 0:
        return s
    keep = np.concatenate([[True], np.diff(s) > BREAKPOINT_TOLERANCE])
    return s[keep]


def critical_events(f, g):
    """Enumerates the shifts t where a jump of f(s + t) meets a jump of g(s).

    Args:
        f: Shifted TurningFunction.
        g: Fixed TurningFunction.

    Returns:
        CriticalEventSet of all breakpoint differences modulo 1.
    """
    diffs = f.breakpoints[:, None] - g.breakpoints[None, :]
    return CriticalEventSet(_unique_shifts(diffs))


def _candidate_shifts(f, g):
    """Critical events reduced by shifts that only rotate either function."""
    periods = [f.rotation_period, g.rotation_period]
    if min(periods) == 0.0:
        return np.zeros(1)

    events = critical_events(f, g).events
    period = min(periods)
    if period >= 1.0:
        return events
    reduced = np.mod(events, period)
    reduced[reduced >= period - BREAKPOINT_TOLERANCE] = 0.0
    return _unique_shifts(reduced)


def _snap(points, grid):
    """Moves points within tolerance of a sorted grid in [0, 1) onto it."""
    ext = np.append(grid, 1.0)
    i = np.clip(np.searchsorted(ext, points), 1, len(ext) - 1)
    lo, hi = ext[i - 1], ext[i]
    nearest = np.where(points - lo <= hi - points, lo, hi)
    snapped = np.where(
        np.abs(points - nearest) <= BREAKPOINT_TOLERANCE, nearest, points)
    return np.where(snapped >= 1.0, 0.0, snapped)


def _difference_pieces(f, g, shifts):
    """Splits f(s + t) - g(s) into affine pieces for every shift t.

    Args:
        f: Shifted TurningFunction.
        g: Fixed TurningFunction.
        shifts: Array of T shifts.

    Returns:
        Tuple of (lengths, values, slopes), arrays of shape (T, len(f) +
        len(g)). Zero-length pieces may appear where jumps coincide.
    """
    t = np.atleast_1d(np.asarray(shifts, dtype=float))
    count = len(t)

    moved = np.mod(f.breakpoints[None, :] - t[:, None], 1.0)
    moved = _snap(moved, g.breakpoints)
    fixed = np.broadcast_to(g.breakpoints, (count, len(g)))
    cuts = np.sort(np.concatenate([moved, fixed], axis=1), axis=1)
    lengths = np.diff(
        np.concatenate([cuts, np.ones((count, 1))], axis=1), axis=1)

    # Sample mid-piece, where both functions are affine.
    middle = cuts + 0.5 * lengths
    f_values, f_slopes = f.evaluate(middle + t[:, None])
    g_values, g_slopes = g.evaluate(middle)
    slopes = f_slopes - g_slopes
    values = f_values - g_values - 0.5 * slopes * lengths
    return lengths, values, slopes


def _chunks(shifts, pieces):
    """Yields slices of shifts small enough to evaluate together."""
    size = max(1, _CHUNK_SIZE // max(1, pieces))
    for start in range(0, len(shifts), size):
        yield shifts[start:start + size]


def _mean_and_variance(lengths, values, slopes):
    """Computes ∫D and ∫(D - ∫D)² per row of affine pieces."""
    mean = np.sum(lengths * values + 0.5 * slopes * lengths ** 2, axis=-1)
    c = values - mean[..., None]
    variance = np.sum(
        c * c * lengths + c * slopes * lengths ** 2 +
        slopes ** 2 * lengths ** 3 / 3.0, axis=-1)
    return mean, np.maximum(variance, 0.0)


def _power_integral(lengths, values, slopes, theta, p):
    """Computes ∫|D + θ|^p per row of affine pieces."""
    c = values + np.asarray(theta, dtype=float)[..., None]
    if p == 2:
        pieces = (c * c * lengths + c * slopes * lengths ** 2 +
                  slopes ** 2 * lengths ** 3 / 3.0)
        return np.sum(pieces, axis=-1)

    flat = slopes == 0
    safe = np.where(flat, 1.0, slopes)
    end = c + slopes * lengths

    def antiderivative(y):
        return np.sign(y) * np.abs(y) ** (p + 1) / (p + 1)

    sloped = (antiderivative(end) - antiderivative(c)) / safe
    pieces = np.where(flat, lengths * np.abs(c) ** p, sloped)
    return np.sum(pieces, axis=-1)


def integral_at(f, g, t, theta, p):
    """Evaluates ∫₀¹ |f(s + t) - g(s) + θ|^p ds exactly.

    Args:
        f: Shifted TurningFunction.
        g: Fixed TurningFunction.
        t: Shift.
        theta: Rotation in radians.
        p: Exponent, p > 0.

    Returns:
        Integral value.

    Raises:
        UnsupportedExponent: p <= 0.
    """
    if not p > 0:
        raise exceptions.UnsupportedExponent(
            "Exponent must be positive", p)
    lengths, values, slopes = _difference_pieces(f, g, [t])
    return float(_power_integral(lengths, values, slopes, theta, p)[0])


def optimal_theta(f, g, t):
    """Computes the rotation minimizing the 2-integral at shift t.

    This is ∫₀¹ g(s) - f(s + t) ds, evaluated exactly from the pieces.

    Args:
        f: Shifted TurningFunction.
        g: Fixed TurningFunction.
        t: Shift.

    Returns:
        Rotation in radians.
    """
    lengths, values, slopes = _difference_pieces(f, g, [t])
    mean, _ = _mean_and_variance(lengths, values, slopes)
    return -float(mean[0])


def _first_minimum(values):
    """Index of the smallest value, ties going to the earliest index."""
    best = values.min()
    return int(np.flatnonzero(values <= best + _TIE_TOLERANCE)[0])


def d2_turning(f, g):
    """Computes the exact 2-turning distance between turning functions.

    Args:
        f: Shifted TurningFunction.
        g: Fixed TurningFunction.

    Returns:
        DistanceResult.
    """
    shifts = _candidate_shifts(f, g)
    means, variances = [], []
    for chunk in _chunks(shifts, len(f) + len(g)):
        mean, variance = _mean_and_variance(
            *_difference_pieces(f, g, chunk))
        means.append(mean)
        variances.append(variance)
    means = np.concatenate(means)
    variances = np.concatenate(variances)

    best = _first_minimum(variances)
    return DistanceResult(
        math.sqrt(variances[best]), shifts[best], -means[best], 2)


def d2_general(a, b):
    """Computes the exact 2-turning distance between two shapes.

    Args:
        a: Polygon or TurningFunction (e.g. the 2-gon segment).
        b: Polygon or TurningFunction.

    Returns:
        DistanceResult.
    """
    return d2_turning(as_turning_function(a), as_turning_function(b))


def _weighted_median(values, weights):
    """Returns a minimizer of Σ w|v - x| over x."""
    order = np.argsort(values, kind="stable")
    cumulative = np.cumsum(weights[order])
    i = np.searchsorted(cumulative, 0.5 * cumulative[-1])
    return values[order][min(i, len(values) - 1)]


def _minimize_rotation(lengths, values, slopes, p):
    """Minimizes ∫|D + θ|^p over θ for one shift.

    Returns:
        Tuple of (minimum, theta).
    """
    if p == 1 and not np.any(slopes):
        theta = -_weighted_median(values, lengths)
    else:
        ends = values + slopes * lengths
        lo = -max(values.max(), ends.max())
        hi = -min(values.min(), ends.min())
        if hi - lo <= _THETA_TOLERANCE:
            theta = 0.5 * (lo + hi)
        else:
            result = minimize_scalar(
                lambda x: _power_integral(lengths, values, slopes, x, p),
                bounds=(lo, hi), method="bounded",
                options={"xatol": _THETA_TOLERANCE})
            theta = float(result.x)
    return float(_power_integral(lengths, values, slopes, theta, p)), theta


def dp_turning(f, g, p):
    """Computes the p-turning distance between turning functions.

    Args:
        f: Shifted TurningFunction.
        g: Fixed TurningFunction.
        p: Exponent, p >= 1.

    Returns:
        DistanceResult.

    Raises:
        UnsupportedExponent: p < 1, where the distance is not a metric.
    """
    if not p >= 1:
        raise exceptions.UnsupportedExponent(
            "Exponent must be at least 1", p)
    if p == 2:
        return d2_turning(f, g)

    shifts = _candidate_shifts(f, g)
    minima = np.empty(len(shifts))
    thetas = np.empty(len(shifts))
    offset = 0
    for chunk in _chunks(shifts, len(f) + len(g)):
        lengths, values, slopes = _difference_pieces(f, g, chunk)
        for row in range(len(chunk)):
            minima[offset + row], thetas[offset + row] = _minimize_rotation(
                lengths[row], values[row], slopes[row], p)
        offset += len(chunk)

    best = _first_minimum(minima)
    distance = max(minima[best], 0.0) ** (1.0 / p)
    return DistanceResult(distance, shifts[best], thetas[best], p)


def dp_general(a, b, p):
    """Computes the p-turning distance between two shapes.

    For p = 1 the rotation is the weighted median of the piece differences;
    for other exponents it is found by bounded scalar minimization of the
    convex integral.

    Args:
        a: Polygon or TurningFunction.
        b: Polygon or TurningFunction.
        p: Exponent, p >= 1.

    Returns:
        DistanceResult.

    Raises:
        UnsupportedExponent: p < 1.
    """
    return dp_turning(as_turning_function(a), as_turning_function(b), p)
