# -*- coding: utf-8 -*-
"""Turning disorder enumerations."""

import math

TWO_PI = 2 * math.pi

# Breakpoints closer than this are the same breakpoint.
BREAKPOINT_TOLERANCE = 1e-12


class _Enumeration(object):

    """Integer enumeration with name lookups."""

    @classmethod
    def to_string(cls, id):
        """Gets human-readable name corresponding to ID.

        Args:
            id: Enumeration value.

        Returns:
            Human-readable string, or None if unknown.
        """
        for attr, value in vars(cls).items():
            if attr.isupper() and value == id:
                return attr
        return None

    @classmethod
    def from_string(cls, name):
        """Gets ID corresponding to human-readable name.

        Args:
            name: Human-readable string, case insensitive.

        Returns:
            Enumeration value, or None if unknown.
        """
        key = str(name).upper()
        if key.isupper() and hasattr(cls, key):
            return getattr(cls, key)
        return None

    @classmethod
    def values(cls):
        """Returns all enumeration values in declaration order."""
        return sorted(
            value for attr, value in vars(cls).items() if attr.isupper())


class OrderedShape(_Enumeration):

    """Reference shapes faces are compared against."""

    REGULAR = 0  # Regular polygon with the face's side count.
    HEXAGON = 1
    CIRCLE = 2


class Rejection(_Enumeration):

    """Reasons a stochastic move was not applied."""

    BOUNDARY_EDGE = 1  # Either endpoint is pinned to the domain boundary.
    NOT_TRIVALENT = 2
    NOT_INTERIOR = 3  # Edge does not border two faces.
    SMALL_FACE = 4  # A face would end up with fewer than three sides.
    NON_SIMPLE_GRAPH = 5  # A loop or a repeated edge would appear.
    NON_SIMPLE_FACE = 6  # A face polygon would self-intersect.
