# -*- coding: utf-8 -*-
"""Turning disorder exceptions."""


class InvalidPolygon(Exception):

    """Polygon is degenerate, self-intersecting or clockwise."""
    pass


class InvalidTurningFunction(Exception):

    """Turning function is malformed."""
    pass


class InvalidNetwork(Exception):

    """Network is not a valid planar polygonal partition."""
    pass


class UnsupportedExponent(Exception):

    """Exponent is outside of the supported range."""
    pass


class DomainError(Exception):

    """Argument is outside of the operation's domain."""
    pass


class UnknownLattice(Exception):

    """Lattice is not supported."""
    pass


class SingularEmbedding(Exception):

    """Spring system has an interior component with no pinned vertex."""
    pass


class InvalidConfiguration(Exception):

    """Parameter is missing or out of range."""
    pass


class FileCorrupted(Exception):

    """Input file could not be parsed."""
    pass


class TraceCorrupted(Exception):

    """Trace is empty or lacks the requested columns."""
    pass


# Errors caused by bad input rather than by a bug.
VALIDATION_ERRORS = (
    InvalidPolygon,
    InvalidTurningFunction,
    InvalidNetwork,
    UnsupportedExponent,
    DomainError,
    UnknownLattice,
    SingularEmbedding,
    InvalidConfiguration,
    FileCorrupted,
    TraceCorrupted,
)
