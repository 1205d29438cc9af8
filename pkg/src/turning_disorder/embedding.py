# -*- coding: utf-8 -*-
"""Voronoi initialization and Tutte spring embedding."""

import logging
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.sparse.linalg import splu
from scipy.spatial import Voronoi

from . import exceptions
from .network import PlanarNetwork
from .tools import make_rng

logger = logging.getLogger(__name__)

# Largest allowed deviation of a free vertex from its neighbors' mean.
RESIDUAL_TOLERANCE = 1e-9

# Coordinates this close to a side of the unit square lie on it.
_SNAP_TOLERANCE = 1e-9

# Cell edges shorter than this mark a degenerate site configuration.
_EDGE_TOLERANCE = 1e-12


class _DegenerateSites(Exception):

    """Voronoi diagram has a vertex of degree four or a vanishing edge."""
    pass


def _mirror(sites):
    """Reflects sites across the four sides of the unit square."""
    x, y = sites[:, 0], sites[:, 1]
    return np.vstack([
        sites,
        np.column_stack([-x, y]),
        np.column_stack([2 - x, y]),
        np.column_stack([x, -y]),
        np.column_stack([x, 2 - y]),
    ])


def _clipped_voronoi(sites):
    """Builds the Voronoi network of sites clipped to the unit square.

    Mirrored copies of the sites make the square's sides Voronoi ridges, so
    every original cell is already clipped.

    Args:
        sites: Array of shape (N, 2) inside the unit square.

    Returns:
        Tuple of (vertices, faces, pinned) with face i the cell of site i.

    Raises:
        _DegenerateSites: Some interior vertex is not trivalent.
    """
    count = len(sites)
    diagram = Voronoi(_mirror(sites))

    cells = []
    for i in range(count):
        region = diagram.regions[diagram.point_region[i]]
        if -1 in region or len(region) < 3:
            raise _DegenerateSites([i])
        corners = diagram.vertices[region]
        angles = np.arctan2(corners[:, 1] - sites[i, 1],
                            corners[:, 0] - sites[i, 0])
        cells.append([region[r] for r in np.argsort(angles, kind="stable")])

    used = sorted(set(v for cell in cells for v in cell))
    compact = dict((v, new) for new, v in enumerate(used))
    vertices = diagram.vertices[used].copy()
    faces = [[compact[v] for v in cell] for cell in cells]

    # Snap onto the sides of the square.
    for axis in (0, 1):
        for side in (0.0, 1.0):
            near = np.abs(vertices[:, axis] - side) <= _SNAP_TOLERANCE
            vertices[near, axis] = side
    pinned = np.any((vertices == 0.0) | (vertices == 1.0), axis=1)

    owners = [[] for _ in range(len(vertices))]
    degree = [set() for _ in range(len(vertices))]
    bad = set()
    for i, face in enumerate(faces):
        for u, v in zip(face, face[1:] + face[:1]):
            owners[u].append(i)
            degree[u].add(v)
            degree[v].add(u)
            if np.hypot(*(vertices[u] - vertices[v])) < _EDGE_TOLERANCE:
                bad.add(i)
    for v in range(len(vertices)):
        expected = 2 if pinned[v] and len(owners[v]) == 1 else 3
        if len(degree[v]) != expected:
            bad.update(owners[v])
    if bad:
        raise _DegenerateSites(sorted(bad))
    return vertices, faces, pinned


def voronoi_init(num_sites, seed, rng=None, jitter=1e-9, max_retries=100):
    """Builds the Voronoi network of uniform random sites in the unit square.

    Args:
        num_sites: Number of sites, at least 4.
        seed: Seed of the site generator.
        rng: Generator to draw from instead of a fresh seeded one.
        jitter: Displacement applied to sites of a degenerate diagram.
        max_retries: Number of jitter rounds before giving up.

    Returns:
        PlanarNetwork with one face per site and the boundary pinned.

    Raises:
        DomainError: Fewer than 4 sites.
        InvalidNetwork: Diagram stays degenerate.
    """
    if num_sites < 4:
        raise exceptions.DomainError(
            "Voronoi initialization needs at least 4 sites, got {}".format(
                num_sites))
    if rng is None:
        rng = make_rng(seed)
    return voronoi_network(rng.random((num_sites, 2)), rng, jitter,
                           max_retries)


def voronoi_network(sites, rng, jitter=1e-9, max_retries=100):
    """Builds the Voronoi network of given sites in the unit square.

    Sites of a degenerate diagram, with a vertex of degree four or a
    vanishing edge, are jittered and the diagram rebuilt.

    Args:
        sites: Array of shape (N, 2) strictly inside the unit square.
        rng: Generator drawing the jitter.
        jitter: Largest displacement per coordinate.
        max_retries: Number of jitter rounds before giving up.

    Returns:
        PlanarNetwork with face i the cell of site i.

    Raises:
        InvalidNetwork: Diagram stays degenerate.
    """
    sites = np.array(sites, dtype=float)
    jittered = []
    for attempt in range(max_retries + 1):
        try:
            vertices, faces, pinned = _clipped_voronoi(sites)
            break
        except _DegenerateSites as e:
            offending = e.args[0]
            logger.warning("Jittering %d sites of a degenerate diagram",
                           len(offending))
            sites[offending] += rng.uniform(
                -jitter, jitter, size=(len(offending), 2))
            np.clip(sites, jitter, 1 - jitter, out=sites)
            jittered.extend(offending)
    else:
        logger.error("Voronoi diagram degenerate after %d retries",
                     max_retries)
        raise exceptions.InvalidNetwork(
            "Voronoi diagram still degenerate after {} retries".format(
                max_retries), None)

    edges = set()
    for face in faces:
        for u, v in zip(face, face[1:] + face[:1]):
            edges.add((min(u, v), max(u, v)))

    logger.info("Initialized Voronoi network: %d cells, %d vertices",
                len(faces), len(vertices))
    return PlanarNetwork(
        vertices, edges, faces, pinned,
        metadata={"jittered_sites": sorted(set(jittered)),
                  "voronoi_retries": attempt})


def solve_tutte(positions, neighbors, pinned, alive=None):
    """Places every free vertex at the mean of its neighbors.

    Solves L_ff X_f = A_fp X_p, where L_ff is the graph Laplacian restricted
    to free vertices and A_fp their adjacency to pinned ones.

    Args:
        positions: Array of shape (V, 2); pinned rows are kept.
        neighbors: Sequence of neighbor collections per vertex.
        pinned: Boolean array of fixed vertices.
        alive: Boolean array of vertices in use (default: all).

    Returns:
        Tuple of (new positions, residual).

    Raises:
        SingularEmbedding: A free component has no pinned vertex.
    """
    count = len(positions)
    if alive is None:
        alive = np.ones(count, dtype=bool)
    free = np.flatnonzero(alive & ~np.asarray(pinned, dtype=bool))
    result = np.array(positions, dtype=float)
    if not len(free):
        return result, 0.0

    index = np.full(count, -1, dtype=int)
    index[free] = np.arange(len(free))

    rows, cols = [], []
    degree = np.zeros(len(free))
    rhs = np.zeros((len(free), 2))
    anchored = np.zeros(len(free), dtype=bool)
    for f, v in enumerate(free):
        for w in neighbors[v]:
            if not alive[w]:
                continue
            degree[f] += 1
            if index[w] >= 0:
                rows.append(f)
                cols.append(index[w])
            else:
                rhs[f] += result[w]
                anchored[f] = True

    # Every free component needs a pinned neighbor somewhere.
    adjacency = coo_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(len(free), len(free)))
    _, component = connected_components(adjacency, directed=False)
    grounded = np.zeros(component.max() + 1, dtype=bool)
    grounded[component[anchored]] = True
    if not grounded.all():
        label = int(np.flatnonzero(~grounded)[0])
        members = free[component == label]
        raise exceptions.SingularEmbedding(
            "Component of {} free vertices starting at vertex {} is not "
            "anchored".format(len(members), members[0]), members.tolist())

    laplacian = (coo_matrix((degree, (np.arange(len(free)),) * 2),
                            shape=adjacency.shape) - adjacency).tocsc()
    solver = splu(laplacian)
    solution = solver.solve(rhs)

    def residual_of(x):
        return float(np.max(np.abs(laplacian.dot(x) - rhs) / degree[:, None]))

    residual = residual_of(solution)
    if residual > RESIDUAL_TOLERANCE:
        # One step of iterative refinement.
        solution += solver.solve(rhs - laplacian.dot(solution))
        residual = residual_of(solution)
        if residual > RESIDUAL_TOLERANCE:
            logger.warning("Tutte residual %.3g exceeds %.0e",
                           residual, RESIDUAL_TOLERANCE)

    result[free] = solution
    return result, residual


def tutte_embed(network):
    """Re-embeds a network with its boundary vertices pinned.

    Args:
        network: PlanarNetwork.

    Returns:
        PlanarNetwork with the same topology and new interior coordinates.

    Raises:
        SingularEmbedding: Some interior component is not anchored.
    """
    neighbors = [set() for _ in range(len(network.vertices))]
    for i, j in network.edges:
        neighbors[i].add(j)
        neighbors[j].add(i)
    positions, residual = solve_tutte(
        network.vertices, neighbors, network.boundary)

    metadata = dict(network.metadata)
    metadata["tutte_residual"] = residual
    return PlanarNetwork(positions, network.edges, network.faces,
                         network.boundary, network.nominal_sides, metadata)


def embed_state(state):
    """Re-embeds a NetworkState in place.

    Args:
        state: NetworkState.

    Returns:
        Residual of the solve.
    """
    state.positions, residual = solve_tutte(
        state.positions, state.neighbors, state.pinned, state.alive)
    return residual
