# -*- coding: utf-8 -*-
"""Archimedean lattices and their exact turning disorders."""

import math
import logging
import numpy as np
from collections import Counter
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import exceptions
from .constants import OrderedShape
from .network import PlanarNetwork
from .regular import d2_circle_regular, d2_regular_closed
from .tools import merge_close_points

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2)
SQRT3 = math.sqrt(3)

# Points of one lattice closer than this are the same vertex.
_VERTEX_TOLERANCE = 1e-6


def _circumradius(k):
    """Returns the circumradius of the regular k-gon with side 1."""
    return 1.0 / (2 * math.sin(math.pi / k))


def tile_area(k):
    """Returns the area A_k of the regular k-gon with side 1."""
    return k / (4 * math.tan(math.pi / k))


class _Tile(object):

    """Regular tile placed in every lattice cell.

    Attributes:
        sides: Side count.
        offset: Center relative to the cell origin.
        angles: Polar angles of the vertices, counterclockwise.
    """

    def __init__(self, sides, offset, first_angle):
        self.sides = sides
        self.offset = np.asarray(offset, dtype=float)
        self.angles = math.radians(first_angle) + \
            2 * math.pi * np.arange(sides) / sides

    def corners(self, centers):
        """Returns the vertices of tiles at the given centers, (N, k, 2)."""
        radius = _circumradius(self.sides)
        ring = radius * np.column_stack(
            [np.cos(self.angles), np.sin(self.angles)])
        return centers[:, None, :] + ring[None, :, :]


class Lattice(object):

    """Translation vectors and motif of a vertex-transitive tiling.

    Attributes:
        name: Lattice name.
        vertex_type: Side counts around every vertex, canonically rotated.
        basis: 2x2 array whose columns are the translation vectors.
        motif: List of tiles per cell.
    """

    def __init__(self, name, vertex_type, t1, t2, motif):
        self.name = name
        self.vertex_type = tuple(vertex_type)
        self.basis = np.column_stack([t1, t2]).astype(float)
        self.motif = motif

    def __repr__(self):
        return "<Lattice {}>".format(self.name)

    @property
    def cell_counts(self):
        """Number of tiles of each side count per cell."""
        return Counter(tile.sides for tile in self.motif)


def _build_lattices():
    """Defines the supported lattices, all with unit side length."""
    hexagonal = Lattice(
        "hex", (6, 6, 6), (SQRT3, 0.0), (SQRT3 / 2, 1.5),
        [_Tile(6, (0.0, 0.0), 30)])

    width = 1 + SQRT2
    truncated_square = Lattice(
        "4.8.8", (4, 8, 8), (width, 0.0), (0.0, width),
        [_Tile(8, (0.0, 0.0), 22.5),
         _Tile(4, (width / 2, width / 2), 0)])

    span = 2 + SQRT3
    t1 = np.array([span, 0.0])
    t2 = np.array([span / 2, span * SQRT3 / 2])
    truncated_hexagonal = Lattice(
        "3.12.12", (3, 12, 12), t1, t2,
        [_Tile(12, (0.0, 0.0), 15),
         _Tile(3, (t1 + t2) / 3, 30),
         _Tile(3, 2 * (t1 + t2) / 3, 90)])

    span = 3 + SQRT3
    t1 = np.array([span, 0.0])
    t2 = np.array([span / 2, span * SQRT3 / 2])
    truncated_trihexagonal = Lattice(
        "4.6.12", (4, 6, 12), t1, t2,
        [_Tile(12, (0.0, 0.0), 15),
         _Tile(6, (t1 + t2) / 3, 0),
         _Tile(6, 2 * (t1 + t2) / 3, 0),
         _Tile(4, t1 / 2, 45),
         _Tile(4, t2 / 2, 105),
         _Tile(4, (t1 + t2) / 2, 165)])

    lattices = (hexagonal, truncated_square, truncated_hexagonal,
                truncated_trihexagonal)
    return dict((lattice.name, lattice) for lattice in lattices)


LATTICES = _build_lattices()


def get_lattice(name):
    """Looks up a supported lattice.

    Args:
        name: Lattice name.

    Returns:
        Lattice.

    Raises:
        UnknownLattice: Name not supported.
    """
    try:
        return LATTICES[name]
    except KeyError:
        raise exceptions.UnknownLattice(
            "Unknown lattice {!r}".format(name), sorted(LATTICES))


def _cell_range(basis, width):
    """Integer coefficient ranges covering the square [-width, width]²."""
    corners = np.array([[-1, -1], [-1, 1], [1, -1], [1, 1]]) * width
    coeffs = np.linalg.solve(basis, corners.T)
    lo = np.floor(coeffs.min(axis=1)).astype(int) - 1
    hi = np.ceil(coeffs.max(axis=1)).astype(int) + 1
    return lo, hi


def _largest_component(faces):
    """Keeps the faces of the largest edge-connected group."""
    owner = {}
    rows, cols = [], []
    for i, face in enumerate(faces):
        for u, v in zip(face, face[1:] + face[:1]):
            key = (min(u, v), max(u, v))
            if key in owner:
                rows.append(owner[key])
                cols.append(i)
            else:
                owner[key] = i
    graph = coo_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(len(faces), len(faces)))
    _, labels = connected_components(graph, directed=False)
    largest = np.bincount(labels).argmax()
    return [face for face, label in zip(faces, labels) if label == largest]


def generate_lattice(name, half_width):
    """Generates a lattice clipped to the square [-n, n]².

    Only tiles lying entirely inside the square are kept, and of those the
    largest edge-connected group.

    Args:
        name: One of "hex", "4.8.8", "3.12.12" or "4.6.12".
        half_width: Half side n of the square, n >= 1.

    Returns:
        PlanarNetwork with boundary vertices flagged.

    Raises:
        DomainError: half_width < 1.
        UnknownLattice: Name not supported.
    """
    lattice = get_lattice(name)
    if half_width < 1:
        raise exceptions.DomainError(
            "Half width must be at least 1, got {}".format(half_width))

    lo, hi = _cell_range(lattice.basis, half_width + 2)
    i, j = np.meshgrid(np.arange(lo[0], hi[0] + 1),
                       np.arange(lo[1], hi[1] + 1), indexing="ij")
    cells = np.column_stack([i.ravel(), j.ravel()]).dot(lattice.basis.T)

    rings = []
    limit = half_width + 1e-9
    for tile in lattice.motif:
        corners = tile.corners(cells + tile.offset)
        inside = np.all(np.abs(corners) <= limit, axis=(1, 2))
        rings.extend(corners[inside])
    if not rings:
        raise exceptions.DomainError(
            "No {} tile fits in a square of half width {}".format(
                name, half_width))

    network = tile_network(
        rings, metadata={"lattice": name, "half_width": half_width})
    logger.info("Generated %s lattice: %d faces, %d vertices",
                name, len(network.faces), len(network.vertices))
    return network


def tile_network(rings, metadata=None):
    """Glues polygonal tiles into a network.

    Corners closer than the vertex tolerance are identified and only the
    largest edge-connected group of tiles is kept. Vertices on an edge with
    a single face are flagged as boundary.

    Args:
        rings: Sequence of counterclockwise corner arrays, one per tile.
        metadata: Dictionary attached to the network.

    Returns:
        PlanarNetwork whose faces follow the order of rings.
    """
    sizes = [len(ring) for ring in rings]
    flat = np.concatenate([np.asarray(ring, dtype=float) for ring in rings])
    labels = merge_close_points(flat, _VERTEX_TOLERANCE)
    representatives, index = np.unique(labels, return_inverse=True)
    offsets = np.cumsum([0] + sizes)
    faces = [tuple(index[offsets[f]:offsets[f + 1]].tolist())
             for f in range(len(sizes))]
    faces = _largest_component(faces)

    # Compact the vertices still in use.
    used = sorted(set(v for face in faces for v in face))
    compact = dict((v, new) for new, v in enumerate(used))
    vertices = flat[representatives[used]]
    faces = [tuple(compact[v] for v in face) for face in faces]

    counts = Counter()
    for face in faces:
        for u, v in zip(face, face[1:] + face[:1]):
            counts[(min(u, v), max(u, v))] += 1
    boundary = np.zeros(len(vertices), dtype=bool)
    for (u, v), count in counts.items():
        if count == 1:
            boundary[[u, v]] = True

    return PlanarNetwork(vertices, sorted(counts), faces, boundary,
                         metadata=metadata)


def census(network, face_ids=None):
    """Counts faces by side count.

    Args:
        network: PlanarNetwork.
        face_ids: Faces to count (default: all).

    Returns:
        Counter from side count to number of faces.
    """
    if face_ids is None:
        face_ids = range(len(network.faces))
    return Counter(network.face_sides(i) for i in face_ids)


def vertex_type(network, vertex):
    """Lists the side counts of the faces around a vertex.

    Args:
        network: PlanarNetwork.
        vertex: Vertex index.

    Returns:
        Tuple of side counts in cyclic order, rotated and reflected to its
        lexicographically smallest form.
    """
    center = network.vertices[vertex]
    around = []
    for i, face in enumerate(network.faces):
        if vertex in face:
            centroid = network.face_points(i).mean(axis=0)
            angle = math.atan2(centroid[1] - center[1],
                               centroid[0] - center[0])
            around.append((angle, len(face)))
    sides = [k for _, k in sorted(around)]

    forms = []
    for order in (sides, sides[::-1]):
        for r in range(len(order)):
            forms.append(tuple(order[r:] + order[:r]))
    return min(forms) if forms else ()


class FundamentalRegion(object):

    """Tile proportions of a lattice.

    Attributes:
        lattice_name: Lattice name.
        q: Dictionary from side count to share of tiles.
        p: Dictionary from side count to share of area.
    """

    def __init__(self, lattice_name, q, p):
        self.lattice_name = lattice_name
        self.q = q
        self.p = p

    def __repr__(self):
        return "<FundamentalRegion {}: q={} p={}>".format(
            self.lattice_name, self.q, self.p)


def fundamental_region(name):
    """Computes the tile proportions of a lattice.

    Args:
        name: Lattice name.

    Returns:
        FundamentalRegion.

    Raises:
        UnknownLattice: Name not supported.
    """
    counts = get_lattice(name).cell_counts
    tiles = float(sum(counts.values()))
    area = sum(n * tile_area(k) for k, n in counts.items())
    q = dict((k, n / tiles) for k, n in sorted(counts.items()))
    p = dict((k, n * tile_area(k) / area) for k, n in sorted(counts.items()))
    return FundamentalRegion(name, q, p)


def _family(family):
    """Resolves an ordered shape family name."""
    aliases = {"hex6": OrderedShape.HEXAGON, "6": OrderedShape.HEXAGON}
    if isinstance(family, str):
        value = aliases.get(family.lower(), OrderedShape.from_string(family))
    else:
        value = family
    if value not in OrderedShape.values():
        raise exceptions.DomainError(
            "Unknown ordered shape {!r}".format(family))
    return value


def exact_disorder(name, family, weighted, region=None):
    """Computes a lattice disorder from its tile proportions.

    Args:
        name: Lattice name.
        family: OrderedShape value or one of "regular", "hex6", "circle".
        weighted: Whether to use area proportions.
        region: FundamentalRegion overriding the built-in proportions.

    Returns:
        Disorder.

    Raises:
        UnknownLattice: Name not supported and no region given.
    """
    shape = _family(family)
    if region is None:
        region = fundamental_region(name)
    if shape == OrderedShape.REGULAR:
        return 0.0

    shares = region.p if weighted else region.q
    total = 0.0
    for k, share in shares.items():
        if shape == OrderedShape.HEXAGON:
            total += share * d2_regular_closed(k, 6).distance
        else:
            total += share * d2_circle_regular(k)
    return total


# Radical forms of the nonzero lattice disorders, keyed by lattice and
# (family, weighted).
EXACT_EXPRESSIONS = {
    "hex": {
        ("hex6", False): "0",
        ("hex6", True): "0",
        ("circle", False): "√3π/18",
        ("circle", True): "√3π/18",
    },
    "4.8.8": {
        # Octagon term is d₂(R₈, R₆) = √69π/72 ≈ 0.36244. √69π/36 is twice
        # that value and disagrees with the tabulated decimal.
        ("hex6", False): "π/144·(2√33 + √69)",
        ("hex6", True): "π/36·(3√33 + √138 − 2√66 − √69)",
        ("circle", False): "√3π/16",
        ("circle", True): "π/12·(2√3 − √6)",
    },
    "3.12.12": {
        ("hex6", False): "5π/36",
        ("hex6", True): "π/3·(2 − √3)",
        ("circle", False): "√3π/12",
        ("circle", True): "π/18·(11√3 − 18)",
    },
    "4.6.12": {
        ("hex6", False): "π/72·(√33 + 1)",
        ("hex6", True): "π/36·(2√11 + √3 − √33)",
        ("circle", False): "7√3π/108",
        ("circle", True): "π/36·(1 + √3)",
    },
}


def exact_table(name):
    """Lists every exact disorder of a lattice.

    Args:
        name: Lattice name.

    Returns:
        List of (label, radical string, value) rows.
    """
    get_lattice(name)
    rows = []
    for family, label in (("hex6", "D6"), ("circle", "Dc")):
        for weighted in (False, True):
            rows.append((
                label + ("_w" if weighted else ""),
                EXACT_EXPRESSIONS[name][(family, weighted)],
                exact_disorder(name, family, weighted)))
    return rows
