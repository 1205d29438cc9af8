# -*- coding: utf-8 -*-
"""Disorder time series of the stochastic network processes."""

import os
import csv
import json
import logging
import numpy as np

from . import exceptions
from .network import DisorderReport

logger = logging.getLogger(__name__)

COLUMNS = ("step",) + DisorderReport.COLUMNS + ("faces", "min_area",
                                                "max_area")


def metadata_path(trace_path):
    """Returns the companion metadata path of a trace CSV."""
    return os.path.splitext(trace_path)[0] + ".json"


def _format(value):
    """Formats a value for round-trip exact CSV output."""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "{:.17g}".format(value)


class TraceRecord(object):

    """Disorders of a network at one step.

    Attributes:
        step: Number of accepted moves so far.
        D, D_w, D6, D6_w, Dc, Dc_w: Turning disorders.
        faces: Number of faces.
        min_area: Smallest face area.
        max_area: Largest face area.
    """

    def __init__(self, step, D, D_w, D6, D6_w, Dc, Dc_w, faces, min_area,
                 max_area):
        self.step = int(step)
        self.D = D
        self.D_w = D_w
        self.D6 = D6
        self.D6_w = D6_w
        self.Dc = Dc
        self.Dc_w = Dc_w
        self.faces = int(faces)
        self.min_area = min_area
        self.max_area = max_area

    @classmethod
    def from_report(cls, step, report):
        """Constructs a record from a DisorderReport."""
        return cls(step, *(report.values() + (
            len(report), report.min_area, report.max_area)))

    def __repr__(self):
        """Returns string representation of record."""
        return "<TraceRecord step {}: D={:.4f} D6={:.4f} Dc={:.4f}>".format(
            self.step, self.D, self.D6, self.Dc)

    def __getitem__(self, column):
        """Returns the value of a column."""
        if column not in COLUMNS:
            raise KeyError(column)
        return getattr(self, column)

    def to_row(self):
        """Returns the CSV fields of the record."""
        return [_format(self[column]) for column in COLUMNS]


class SimulationTrace(object):

    """Ordered records plus the metadata needed to reproduce them.

    Attributes:
        records: List of TraceRecord with strictly increasing steps.
        metadata: Dictionary with configuration, version and RNG details.
    """

    def __init__(self, records=None, metadata=None):
        self.records = []
        self.metadata = dict(metadata or {})
        for record in records or []:
            self.append(record)

    def __len__(self):
        """Returns the number of records."""
        return len(self.records)

    def __iter__(self):
        """Iterates over records in step order."""
        return iter(self.records)

    def __getitem__(self, index):
        """Returns a record by position."""
        return self.records[index]

    def append(self, record):
        """Appends a record.

        Raises:
            TraceCorrupted: Step does not increase.
        """
        if self.records and record.step <= self.records[-1].step:
            raise exceptions.TraceCorrupted(
                "Step {} follows step {}".format(
                    record.step, self.records[-1].step))
        self.records.append(record)

    def column(self, name):
        """Returns the values of a column.

        Raises:
            TraceCorrupted: Unknown column.
        """
        if name not in COLUMNS:
            raise exceptions.TraceCorrupted(
                "Unknown trace column {!r}".format(name))
        return np.array([record[name] for record in self.records])

    def write_csv(self, path):
        """Writes all records to a CSV file."""
        with open(path, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(COLUMNS)
            for record in self.records:
                writer.writerow(record.to_row())
        logger.info("Wrote %d records to %s", len(self), path)

    def write_metadata(self, path):
        """Writes the metadata to a JSON file with sorted keys."""
        with open(path, "w") as f:
            json.dump(self.metadata, f, sort_keys=True, indent=2)
            f.write("\n")


class TraceWriter(object):

    """Streams records to a CSV file as soon as they are produced.

    Use as a context manager and pass write() as the simulation callback:

        with TraceWriter("trace.csv") as writer:
            simulation.run(writer.write)
    """

    def __init__(self, path):
        """Constructs TraceWriter object.

        Args:
            path: CSV path.
        """
        self.path = path
        self.count = 0
        self._file = None
        self._writer = None

    def __enter__(self):
        """Opens the file and writes the header."""
        self._file = open(self.path, "w", newline="")
        self._writer = csv.writer(self._file, lineterminator="\n")
        self._writer.writerow(COLUMNS)
        self._file.flush()
        return self

    def __exit__(self, type, value, traceback):
        """Closes the file."""
        self._file.close()
        logger.info("Wrote %d records to %s", self.count, self.path)

    def write(self, record):
        """Writes and flushes one record."""
        self._writer.writerow(record.to_row())
        self._file.flush()
        self.count += 1


def read_trace(path):
    """Reads a trace CSV and its companion metadata.

    Args:
        path: CSV path.

    Returns:
        SimulationTrace.

    Raises:
        FileCorrupted: File missing or malformed.
        TraceCorrupted: Missing columns.
    """
    try:
        with open(path, newline="") as f:
            rows = list(csv.DictReader(f))
            header = rows[0].keys() if rows else []
    except (IOError, OSError, csv.Error) as e:
        raise exceptions.FileCorrupted(path, str(e))

    missing = [column for column in COLUMNS if column not in header]
    if rows and missing:
        raise exceptions.TraceCorrupted(
            "Trace {} lacks columns {}".format(path, ", ".join(missing)))

    trace = SimulationTrace()
    try:
        for row in rows:
            values = [float(row[column]) for column in COLUMNS]
            trace.append(TraceRecord(*values))
    except (TypeError, ValueError) as e:
        raise exceptions.FileCorrupted(path, str(e))

    meta = metadata_path(path)
    if os.path.exists(meta):
        try:
            with open(meta) as f:
                trace.metadata = json.load(f)
        except ValueError as e:
            raise exceptions.FileCorrupted(meta, str(e))
    return trace
