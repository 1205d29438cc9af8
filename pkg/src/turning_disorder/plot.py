# -*- coding: utf-8 -*-
"""Disorder trace figures."""

import logging
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import exceptions
from .network import DisorderReport

logger = logging.getLogger(__name__)

# Columns plotted by default.
DISORDER_COLUMNS = DisorderReport.COLUMNS

_STYLES = {
    "D": ("tab:blue", "-"),
    "D_w": ("tab:blue", "--"),
    "D6": ("tab:orange", "-"),
    "D6_w": ("tab:orange", "--"),
    "Dc": ("tab:green", "-"),
    "Dc_w": ("tab:green", "--"),
}


def plot_trace(trace, columns=DISORDER_COLUMNS, title=None):
    """Plots trace columns against the step.

    Args:
        trace: SimulationTrace.
        columns: Column names to draw, one line each.
        title: Axes title (default: process name from the metadata).

    Returns:
        matplotlib Figure.

    Raises:
        TraceCorrupted: Trace is empty or a column is unknown.
    """
    if not len(trace):
        raise exceptions.TraceCorrupted("Cannot plot an empty trace")
    columns = list(columns)
    if not columns:
        raise exceptions.TraceCorrupted("No columns to plot")

    steps = trace.column("step")
    figure, axes = plt.subplots(figsize=(8, 5))
    for name in columns:
        color, style = _STYLES.get(name, (None, "-"))
        axes.plot(steps, trace.column(name), linestyle=style, color=color,
                  label=name)

    axes.set_xlabel("step")
    axes.set_ylabel("turning disorder")
    if title is None:
        title = trace.metadata.get("process")
    if title:
        axes.set_title(title)
    axes.legend(loc="best")
    axes.grid(True, alpha=0.3)
    figure.tight_layout()
    return figure


def save_svg(figure, path):
    """Writes a figure as a standalone SVG file and closes it.

    Element ids are salted with a fixed string and no date is stored, so the
    same figure always produces the same bytes.
    """
    try:
        with matplotlib.rc_context({"svg.hashsalt": "turning_disorder"}):
            figure.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(figure)
    logger.info("Wrote figure to %s", path)
