# -*- coding: utf-8 -*-
"""Parameter tables of the stochastic network processes."""

import logging

from . import exceptions

logger = logging.getLogger(__name__)

MAX_SEED = 2 ** 64 - 1


class Parameter(object):

    """Typed, bounded configuration parameter.

    Attributes:
        name: Parameter name.
        type: Python type values are coerced to.
        description: Human-readable description.
        default: Default value.
        minimum: Smallest allowed value, or None.
        maximum: Largest allowed value, or None.
        exclusive: Whether the minimum itself is excluded.
    """

    def __init__(self, name, type, description, default, minimum=None,
                 maximum=None, exclusive=False):
        self.name = name
        self.type = type
        self.description = description
        self.default = default
        self.minimum = minimum
        self.maximum = maximum
        self.exclusive = exclusive

    def resolve(self, value):
        """Coerces and range-checks a value.

        Args:
            value: Raw value, None for the default.

        Returns:
            Coerced value.

        Raises:
            InvalidConfiguration: Value has the wrong type or is out of range.
        """
        if value is None:
            return self.default
        if isinstance(value, bool) and self.type is not bool:
            raise exceptions.InvalidConfiguration(
                self.name, value, "expected {}".format(self.type.__name__))
        try:
            coerced = self.type(value)
        except (TypeError, ValueError):
            raise exceptions.InvalidConfiguration(
                self.name, value, "expected {}".format(self.type.__name__))
        if self.type is int and isinstance(value, float) and coerced != value:
            raise exceptions.InvalidConfiguration(
                self.name, value, "expected an integer")

        if self.minimum is not None:
            if coerced < self.minimum or \
                    (self.exclusive and coerced == self.minimum):
                raise exceptions.InvalidConfiguration(
                    self.name, value, "must be {} {}".format(
                        ">" if self.exclusive else ">=", self.minimum))
        if self.maximum is not None and coerced > self.maximum:
            raise exceptions.InvalidConfiguration(
                self.name, value, "must be <= {}".format(self.maximum))
        return coerced


class ParameterTable(object):

    """Ordered table of parameters.

    Attributes:
        name: Table name.
        parameters: List of Parameter.
    """

    def __init__(self, name):
        self.name = name
        self.parameters = []

    def add(self, name, type, description, default, minimum=None,
            maximum=None, exclusive=False):
        """Adds a parameter to the table."""
        self.parameters.append(Parameter(
            name, type, description, default, minimum, maximum, exclusive))

    def names(self):
        """Returns the parameter names in declaration order."""
        return [p.name for p in self.parameters]

    def resolve(self, **kwargs):
        """Resolves every parameter from keyword overrides.

        Args:
            kwargs: Parameter values overriding the defaults.

        Returns:
            Dictionary of resolved values.

        Raises:
            InvalidConfiguration: Unknown name or invalid value.
        """
        unknown = sorted(set(kwargs) - set(self.names()))
        if unknown:
            raise exceptions.InvalidConfiguration(
                unknown[0], kwargs[unknown[0]],
                "unknown {} parameter".format(self.name))
        return dict((p.name, p.resolve(kwargs.get(p.name)))
                    for p in self.parameters)


t1 = ParameterTable("t1")

# Add T1 process options.
t1.add("num_sites", int, "Number of Voronoi sites", 1000, 4)
t1.add("num_moves", int, "Number of accepted T1 moves", 3000, 0)
t1.add("seed", int, "Random generator seed", 0, 0, MAX_SEED)
t1.add("merge_tolerance", float, "Vertex identification distance", 1e-6,
       0.0, exclusive=True)
t1.add("trace_stride", int, "Accepted moves between records", 10, 1)
t1.add("max_attempts", int, "Draws per accepted move before giving up",
       100, 1)

rupture = ParameterTable("rupture")

# Add rupture process options.
rupture.add("num_cells", int, "Hexagonal cells of the initial patch", 1067, 1)
rupture.add("rows", int, "Rows of the initial patch, 0 to derive", 0, 0)
rupture.add("cols", int, "Columns of the initial patch, 0 to derive", 0, 0)
rupture.add("num_ruptures", int, "Number of accepted ruptures", 900, 0)
rupture.add("seed", int, "Random generator seed", 0, 0, MAX_SEED)
rupture.add("trace_stride", int, "Accepted ruptures between records", 10, 1)
rupture.add("max_attempts", int, "Draws per accepted rupture before giving up",
            100, 1)


class _Config(object):

    """Resolved parameter table with attribute access."""

    table = None

    def __init__(self, **kwargs):
        """Resolves the table from keyword overrides.

        Args:
            kwargs: Parameter values overriding the defaults.

        Raises:
            InvalidConfiguration: Unknown name or invalid value.
        """
        self._values = self.table.resolve(**kwargs)
        for name, value in self._values.items():
            setattr(self, name, value)

    def __repr__(self):
        """Returns string representation of configuration."""
        return "<{}: {}>".format(type(self).__name__, ", ".join(
            "{}={}".format(k, v) for k, v in self._values.items()))

    def __eq__(self, other):
        return type(self) is type(other) and self.to_dict() == other.to_dict()

    def to_dict(self):
        """Returns the resolved values."""
        return dict(self._values)

    def log(self):
        """Logs every value in aligned columns."""
        width = max(len(name) for name in self._values) + 2
        for name, value in self._values.items():
            label = "{}:".format(name.replace("_", " ").upper())
            logger.info("%s%s", label.ljust(width), value)


class T1Config(_Config):

    """Configuration of the T1 process.

    Attributes:
        num_sites: Number of Voronoi sites.
        num_moves: Number of accepted T1 moves.
        seed: Random generator seed.
        merge_tolerance: Vertex identification distance.
        trace_stride: Accepted moves between records.
        max_attempts: Draws per accepted move before giving up.
    """

    table = t1


class RuptureConfig(_Config):

    """Configuration of the rupture process.

    Either num_cells or rows and cols size the initial hexagonal patch.

    Attributes:
        num_cells: Hexagonal cells of the initial patch.
        rows: Rows of the patch, 0 to derive from num_cells.
        cols: Columns of the patch, 0 to derive from num_cells.
        num_ruptures: Number of accepted ruptures.
        seed: Random generator seed.
        trace_stride: Accepted ruptures between records.
        max_attempts: Draws per accepted rupture before giving up.
    """

    table = rupture

    def __init__(self, **kwargs):
        super(RuptureConfig, self).__init__(**kwargs)
        if bool(self.rows) != bool(self.cols):
            raise exceptions.InvalidConfiguration(
                "rows", self.rows, "rows and cols must be given together")
