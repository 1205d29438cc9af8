# -*- coding: utf-8 -*-
"""Archimedean lattices and their exact disorders."""

import math
import pytest

from turning_disorder import exceptions
from turning_disorder.archimedean import (
    LATTICES, FundamentalRegion, census, exact_disorder, exact_table,
    fundamental_region, generate_lattice, get_lattice, tile_area,
    tile_network, vertex_type)
from turning_disorder.network import disorder
from turning_disorder.regular import d2_circle_regular, d2_regular_closed

# Unweighted and weighted hexagonal and circular disorders.
TABLE = {
    "4.8.8": (0.4319, 0.3863, 0.3401, 0.2656),
    "3.12.12": (0.4363, 0.2806, 0.4534, 0.1837),
    "4.6.12": (0.2942, 0.2287, 0.3527, 0.2384),
}


@pytest.mark.parametrize("name", sorted(TABLE))
def test_exact_disorders(name):
    values = (
        exact_disorder(name, "hex6", False),
        exact_disorder(name, "hex6", True),
        exact_disorder(name, "circle", False),
        exact_disorder(name, "circle", True),
    )
    for value, expected in zip(values, TABLE[name]):
        assert abs(value - expected) <= 1e-4


def test_hexagonal_lattice_values():
    assert exact_disorder("hex", "hex6", False) == 0.0
    assert exact_disorder("hex", "hex6", True) == 0.0
    assert exact_disorder("hex", "circle", True) == pytest.approx(
        math.sqrt(3) * math.pi / 18)


def test_regular_disorder_of_lattices_vanishes():
    for name in LATTICES:
        assert exact_disorder(name, "regular", True) == 0.0


def test_radical_forms_match_values():
    closed = {
        "π/144·(2√33 + √69)": math.pi / 144 * (2 * math.sqrt(33) +
                                             math.sqrt(69)),
        "5π/36": 5 * math.pi / 36,
        "7√3π/108": 7 * math.sqrt(3) * math.pi / 108,
        "π/36·(1 + √3)": math.pi / 36 * (1 + math.sqrt(3)),
    }
    for name in TABLE:
        for _, expression, value in exact_table(name):
            if expression in closed:
                assert value == pytest.approx(closed[expression])


def test_exact_table_rows():
    rows = exact_table("4.8.8")
    assert [row[0] for row in rows] == ["D6", "D6_w", "Dc", "Dc_w"]
    assert rows[2][1] == "√3π/16"


def test_fundamental_regions():
    region = fundamental_region("3.12.12")
    assert region.q == pytest.approx({3: 2 / 3., 12: 1 / 3.})
    assert sum(region.p.values()) == pytest.approx(1.0)
    region = fundamental_region("4.6.12")
    assert region.q == pytest.approx({4: 0.5, 6: 1 / 3., 12: 1 / 6.})


def test_custom_region():
    region = FundamentalRegion("custom", {4: 1.0}, {4: 1.0})
    assert exact_disorder("custom", "circle", False, region) == \
        pytest.approx(math.sqrt(3) * math.pi / 12)


def test_unknown_lattice():
    with pytest.raises(exceptions.UnknownLattice) as info:
        generate_lattice("3.3.3.3.6", 5)
    assert info.value.args[1] == sorted(LATTICES)
    with pytest.raises(exceptions.UnknownLattice):
        exact_disorder("penrose", "circle", False)


def test_unknown_family():
    with pytest.raises(exceptions.DomainError):
        exact_disorder("4.8.8", "pentagon", False)


def test_tile_areas():
    assert tile_area(4) == pytest.approx(1.0)
    assert tile_area(6) == pytest.approx(3 * math.sqrt(3) / 2)
    assert tile_area(3) == pytest.approx(math.sqrt(3) / 4)


@pytest.mark.parametrize("name", sorted(LATTICES))
def test_generated_lattice_is_valid(name):
    network = generate_lattice(name, 6)
    network.validate()
    assert network.metadata["lattice"] == name
    assert network.boundary.any()
    assert not network.boundary.all()
    sides = set(census(network))
    assert sides <= set(get_lattice(name).vertex_type)


@pytest.mark.parametrize("name", sorted(LATTICES))
def test_interior_vertex_types(name):
    network = generate_lattice(name, 6)
    expected = get_lattice(name).vertex_type
    interior = [v for v in range(len(network.vertices))
                if not network.boundary[v]]
    assert interior
    for v in interior:
        assert vertex_type(network, v) == expected


@pytest.mark.parametrize("name", sorted(TABLE))
def test_generated_disorders_match_census(name):
    network = generate_lattice(name, 8)
    interior = network.interior_face_ids()
    counts = census(network, interior)
    total = float(sum(counts.values()))
    area = sum(n * tile_area(k) for k, n in counts.items())
    region = FundamentalRegion(
        name,
        dict((k, n / total) for k, n in counts.items()),
        dict((k, n * tile_area(k) / area) for k, n in counts.items()))

    for family in ("hexagon", "circle"):
        for weighted in (False, True):
            measured = disorder(network, family, weighted,
                                interior_only=True)
            assert measured == pytest.approx(
                exact_disorder(name, family, weighted, region), abs=1e-9)


def test_census_converges():
    network = generate_lattice("4.8.8", 12)
    counts = census(network, network.interior_face_ids())
    share = counts[4] / float(counts[4] + counts[8])
    assert abs(share - 0.5) < 0.1


def test_tile_network_glues_shared_corners():
    rings = [
        [(0, 0), (1, 0), (1, 1), (0, 1)],
        [(1, 0), (2, 0), (2, 1), (1, 1.0000000001)],
    ]
    network = tile_network(rings, {"name": "pair"})
    assert len(network.vertices) == 6
    assert len(network.edges) == 7
    assert network.boundary.all()
    assert network.metadata == {"name": "pair"}


def test_size_domain():
    with pytest.raises(exceptions.DomainError):
        generate_lattice("hex", 0.5)


def _tile_distance(family, k):
    if family == "hexagon":
        return d2_regular_closed(k, 6).distance
    return d2_circle_regular(k)


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(TABLE))
def test_large_patches_approach_table_values(name):
    network = generate_lattice(name, 55)
    interior = network.interior_face_ids()
    assert len(interior) >= 2000

    counts = census(network, interior)
    total = float(sum(counts.values()))
    area = sum(n * tile_area(k) for k, n in counts.items())
    shares = {
        False: dict((k, n / total) for k, n in counts.items()),
        True: dict((k, n * tile_area(k) / area) for k, n in counts.items()),
    }
    exact = fundamental_region(name)
    expected = iter(TABLE[name])
    for family in ("hexagon", "circle"):
        for weighted in (False, True):
            limit = exact.p if weighted else exact.q
            assert set(shares[weighted]) == set(limit)
            # Clipping leaves extra tiles of one kind along the boundary.
            census_error = sum(
                abs(shares[weighted][k] - limit[k]) * _tile_distance(family, k)
                for k in limit)
            assert max(abs(shares[weighted][k] - limit[k])
                       for k in limit) < 0.1
            measured = disorder(network, family, weighted, interior_only=True)
            assert abs(measured - next(expected)) <= 2e-3 + census_error
