# -*- coding: utf-8 -*-
"""Closed forms for regular polygons and circles."""

import math
import time
import numpy as np
import pytest

from turning_disorder import exceptions
from turning_disorder.constants import OrderedShape
from turning_disorder.regular import (
    PolygonTrace, RegularDistance, RegularPolygonSpec, aspect_ratio_sweep,
    d2_circle, d2_circle_polygon, d2_circle_regular, d2_regular_closed,
    d2_regular_sum, d2_segment_vs, ordered_distance, rectangle,
    regular_ordered_distance)
from turning_disorder.turning import (
    Polygon, circle_turning_function, d2_turning, regular_polygon,
    regular_turning_function, turning_function)

PAIRS = [(3, 4), (4, 6), (5, 7), (6, 9), (2, 5), (3, 5), (7, 12), (4, 10)]


def test_known_values():
    assert round(d2_regular_closed(4, 6).distance, 4) == 0.5013
    assert d2_regular_closed(3, 6).distance == pytest.approx(math.pi / 6)
    assert round(d2_circle_regular(12), 4) == 0.1511
    assert round(d2_circle_regular(3), 4) == 0.6046


def test_formula_precedence():
    assert d2_regular_closed(5, 5).formula == RegularDistance.IDENTICAL
    assert d2_regular_closed(5, 5).distance == 0.0
    assert d2_regular_closed(3, 9).formula == RegularDistance.MULTIPLE
    result = d2_regular_closed(4, 6)
    assert result.formula == RegularDistance.CONSECUTIVE
    assert result.gcd == 2
    assert d2_regular_closed(5, 7).formula == RegularDistance.SUM
    assert d2_regular_closed(6, 10).gcd == 2


@pytest.mark.parametrize("n,k", PAIRS)
def test_closed_forms_match_general_algorithm(n, k):
    general = d2_turning(regular_turning_function(n),
                         regular_turning_function(k)).distance
    assert d2_regular_sum(n, k) == pytest.approx(general, abs=1e-10)
    assert d2_regular_closed(n, k).distance == pytest.approx(general,
                                                             abs=1e-10)


@pytest.mark.parametrize("n,k", PAIRS)
def test_sum_is_symmetric(n, k):
    assert d2_regular_sum(n, k) == pytest.approx(d2_regular_sum(k, n))


def test_sum_handles_large_side_counts():
    distance = d2_regular_sum(997, 1009)
    assert distance == pytest.approx(d2_regular_closed(997, 1009).distance)
    assert distance > 0


def test_sum_stays_exact_for_consecutive_large_counts():
    distance = d2_regular_sum(100000, 100001)
    assert distance == pytest.approx(
        d2_regular_closed(100000, 100001).distance, rel=1e-9)


def test_consecutive_formula():
    for m in range(2, 12):
        assert d2_regular_closed(m, m + 1).distance == pytest.approx(
            d2_regular_sum(m, m + 1))


def test_side_count_domain():
    with pytest.raises(exceptions.DomainError):
        d2_regular_closed(1, 4)
    with pytest.raises(exceptions.DomainError):
        RegularPolygonSpec(2.5)
    with pytest.raises(exceptions.DomainError):
        d2_circle_regular(1)


def test_regular_polygon_builder():
    hexagon = RegularPolygonSpec(6)
    assert hexagon.n == 6
    assert len(hexagon.turning_function()) == 6
    assert hexagon.polygon().perimeter == pytest.approx(1.0)


def test_circle_polygon_formula():
    square = PolygonTrace.from_polygon(regular_polygon(4))
    assert d2_circle_polygon(square) == pytest.approx(d2_circle_regular(4))

    general = d2_turning(turning_function(rectangle(2.5)),
                         circle_turning_function()).distance
    assert d2_circle(rectangle(2.5)) == pytest.approx(general, abs=1e-10)


@pytest.mark.parametrize("n", [2, 3, 5, 8, 20])
def test_circle_against_regular_matches_general(n):
    general = d2_turning(regular_turning_function(n),
                         circle_turning_function()).distance
    assert d2_circle_regular(n) == pytest.approx(general, abs=1e-10)


def test_trace_validation():
    with pytest.raises(exceptions.InvalidTurningFunction):
        PolygonTrace([0.0, 0.6, 0.5, 1.0], [0, 1, 2, 2 * math.pi])
    with pytest.raises(exceptions.InvalidTurningFunction):
        PolygonTrace([0.0, 0.5, 0.9], [0, 1, 2 * math.pi])
    trace = PolygonTrace.from_polygon(Polygon([(0, 0), (2, 0), (1, 1)]))
    assert len(trace) == 3
    assert trace.is_convex
    assert trace.corner_angles[-1] == pytest.approx(2 * math.pi)


def test_segment():
    assert d2_segment_vs("circle") == pytest.approx(math.sqrt(3) * math.pi /
                                                    6)
    general = d2_turning(regular_turning_function(2),
                         regular_turning_function(4)).distance
    assert d2_segment_vs(4) == pytest.approx(general, abs=1e-10)
    with pytest.raises(exceptions.DomainError):
        d2_segment_vs("square")


def test_ordered_distance():
    square = regular_polygon(4)
    assert ordered_distance(square, OrderedShape.REGULAR) == \
        pytest.approx(0.0, abs=1e-9)
    assert ordered_distance(square, OrderedShape.HEXAGON) == \
        pytest.approx(d2_regular_closed(4, 6).distance)
    assert ordered_distance(square, OrderedShape.CIRCLE) == \
        pytest.approx(d2_circle_regular(4))
    assert regular_ordered_distance(4, OrderedShape.HEXAGON) == \
        pytest.approx(d2_regular_closed(4, 6).distance)
    assert regular_ordered_distance(4, OrderedShape.CIRCLE) == \
        pytest.approx(d2_circle_regular(4))
    with pytest.raises(exceptions.DomainError):
        ordered_distance(square, 7)


def _ranking(aspect):
    (row,) = aspect_ratio_sweep(aspect, aspect, 1.0)
    distances = dict(zip(("R4", "R6", "C"), row[1:]))
    return sorted(distances, key=distances.get)


@pytest.mark.parametrize("aspect,ranking", [
    (1.2, ["R4", "C", "R6"]),
    (2.2, ["R6", "C", "R4"]),
    (4.0, ["C", "R6", "R4"]),
    (7.3, ["C", "R4", "R6"]),
    (10.8, ["R4", "C", "R6"]),
    (16.0, ["R4", "R6", "C"]),
])
def test_aspect_ratio_regimes(aspect, ranking):
    assert _ranking(aspect) == ranking


def test_sweep_grid():
    rows = aspect_ratio_sweep(1.0, 2.0, 0.25)
    assert [row[0] for row in rows] == [1.0, 1.25, 1.5, 1.75, 2.0]
    assert rows[0][1] == pytest.approx(0.0, abs=1e-9)
    assert rows[0][3] == pytest.approx(d2_circle_regular(4))
    with pytest.raises(exceptions.DomainError):
        aspect_ratio_sweep(2.0, 1.0, 0.1)
    with pytest.raises(exceptions.DomainError):
        rectangle(0)


@pytest.mark.slow
def test_regime_boundaries():
    rows = aspect_ratio_sweep(1.0, 16.0, 0.01)
    changes = []
    previous = None
    for row in rows:
        ranking = tuple(np.argsort(row[1:], kind="stable"))
        if previous is not None and ranking != previous:
            changes.append(row[0])
        previous = ranking
    for boundary in (1.52, 2.81, 6.21, 8.47, 13.21):
        assert min(abs(c - boundary) for c in changes) <= 0.011


@pytest.mark.parametrize("distance,expected", [
    (lambda: d2_regular_closed(3, 6).distance, math.pi / 6),
    (lambda: d2_regular_closed(6, 12).distance, math.pi / 12),
    (lambda: d2_regular_closed(4, 6).distance, math.sqrt(33) * math.pi / 36),
    (lambda: d2_regular_closed(8, 6).distance, math.sqrt(69) * math.pi / 72),
    (lambda: d2_circle_regular(6), math.sqrt(3) * math.pi / 18),
    (lambda: d2_circle_regular(12), math.sqrt(3) * math.pi / 36),
    (lambda: d2_segment_vs(6), math.sqrt(6) * math.pi / 9),
    (lambda: d2_segment_vs("circle"), math.sqrt(3) * math.pi / 6),
])
def test_radical_values(distance, expected):
    assert abs(distance() - expected) <= 1e-12


def test_octagon_hexagon_value():
    assert round(d2_regular_closed(8, 6).distance, 5) == 0.36244


@pytest.mark.parametrize("n,k,q", [(3, 4, 5), (2, 5, 7), (5, 7, 3),
                                   (4, 9, 6), (7, 12, 11)])
def test_sum_scales_with_common_divisor(n, k, q):
    assert d2_regular_sum(q * n, q * k) == pytest.approx(
        d2_regular_sum(n, k) / q, rel=1e-12)


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_sum_matches_multiple_formula(n):
    for a in range(2, 9):
        expected = math.pi / (a * n) * math.sqrt((a * a - 1) / 3.0)
        assert d2_regular_sum(n, a * n) == pytest.approx(expected,
                                                         rel=1e-12)


def test_consecutive_limit():
    limit = math.sqrt(6) * math.pi / 3
    errors = [abs(m * d2_regular_sum(m, m + 1) - limit)
              for m in (10, 100, 1000, 10000)]
    assert errors == sorted(errors, reverse=True)
    assert errors[-1] < 1e-3


@pytest.mark.parametrize("n", [3, 4, 6])
def test_many_sided_polygons_approach_the_circle(n):
    for m in (50, 503, 5003):
        error = abs(d2_regular_closed(n, m).distance - d2_circle_regular(n))
        assert error <= d2_circle_regular(m) + 1e-12


@pytest.mark.slow
def test_formulas_agree_on_all_small_pairs():
    for n in range(2, 61):
        f = regular_turning_function(n)
        for k in range(n, 61):
            general = d2_turning(f, regular_turning_function(k)).distance
            summed = d2_regular_sum(n, k)
            closed = d2_regular_closed(n, k).distance
            assert abs(summed - general) <= 1e-9, (n, k)
            assert abs(closed - general) <= 1e-9, (n, k)
            assert abs(closed - summed) <= 1e-9, (n, k)


def _best_time(n, repeats=3):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        d2_regular_sum(n, n + 1)
        times.append(time.perf_counter() - start)
    return min(times)


@pytest.mark.slow
def test_sum_time_grows_quasi_linearly():
    small, large = _best_time(10000), _best_time(100000)
    assert large < 5.0
    growth = (200001 * math.log(200001)) / (20001 * math.log(20001))
    assert large / small <= 3 * growth
