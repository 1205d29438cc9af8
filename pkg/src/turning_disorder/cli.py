# -*- coding: utf-8 -*-
"""Command-line interface.

Subcommands:
    distance   Turning distance between polygons, regular polygons, the
               circle and the segment, or a rectangle aspect-ratio sweep.
    disorder   Six turning disorders of a network file.
    lattice    Archimedean lattice patches and their exact disorders.
    simulate   T1 and rupture processes writing disorder traces.
    plot       SVG figure of a trace.
    rerun      Re-executes a run manifest and checks its outputs.

Exit codes are 0 on success, 2 on invalid input and 1 otherwise.
"""

import os
import csv
import sys
import json
import hashlib
import logging
import argparse

from . import __version__
from . import exceptions
from .archimedean import LATTICES, exact_table, fundamental_region
from .archimedean import generate_lattice
from .fileio import read_network, read_polygon, write_network
from .network import disorder_report
from .plot import DISORDER_COLUMNS, plot_trace, save_svg
from .regular import (aspect_ratio_sweep, d2_circle, d2_circle_regular,
                      d2_regular_closed, d2_segment_vs)
from .rupture import RuptureSimulation
from .t1 import T1Simulation, degenerate_face_distance
from .trace import TraceWriter, metadata_path, read_trace
from .turning import dp_general

logger = logging.getLogger(__name__)


def _format(value):
    """Formats a float with 17 significant digits."""
    return "{:.17g}".format(value)


def _sha256(path):
    """Returns the hex SHA-256 digest of a file."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()


def _emit(args, fields):
    """Prints result fields as JSON or as aligned text lines."""
    if args.json:
        print(json.dumps(fields, sort_keys=True, indent=2))
        return
    width = max(len(name) for name in fields) + 2
    for name, value in fields.items():
        if isinstance(value, float):
            value = _format(value)
        print("{}{}".format((name + ":").ljust(width), value))


class RunManifest(object):

    """Record of one invocation sufficient to reproduce its outputs.

    Attributes:
        command: Subcommand name.
        argv: Argument vector.
        options: Resolved options.
        inputs: Dictionary from input path to SHA-256 digest.
        outputs: Dictionary from output path to SHA-256 digest.
        seed: Random seed, or None.
        version: Package version.
    """

    def __init__(self, command, argv, options, inputs=None, outputs=None,
                 seed=None, version=__version__):
        self.command = command
        self.argv = list(argv)
        self.options = options
        self.inputs = dict(inputs or {})
        self.outputs = dict(outputs or {})
        self.seed = seed
        self.version = version

    def add_input(self, path):
        self.inputs[path] = _sha256(path)

    def add_output(self, path):
        self.outputs[path] = _sha256(path)

    def to_dict(self):
        """Returns a JSON-ready dictionary."""
        return {
            "command": self.command,
            "argv": self.argv,
            "options": self.options,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "seed": self.seed,
            "version": self.version,
        }

    def write(self, path):
        """Writes the manifest as JSON with sorted keys."""
        with open(path, "w") as f:
            json.dump(self.to_dict(), f, sort_keys=True, indent=2)
            f.write("\n")
        logger.info("Wrote manifest to %s", path)

    @classmethod
    def read(cls, path):
        """Reads a manifest.

        Raises:
            FileCorrupted: File missing or malformed.
        """
        try:
            with open(path) as f:
                data = json.load(f)
            return cls(data["command"], data["argv"], data["options"],
                       data["inputs"], data["outputs"], data["seed"],
                       data["version"])
        except (IOError, OSError, ValueError, KeyError, TypeError) as e:
            raise exceptions.FileCorrupted(path, str(e))


def manifest_path(output_path):
    """Returns the manifest path written next to an output."""
    return os.path.splitext(output_path)[0] + ".manifest.json"


def _parse_sweep(text):
    """Parses a START:STOP:STEP range."""
    try:
        start, stop, step = (float(x) for x in text.split(":"))
    except ValueError:
        raise exceptions.DomainError(
            "Sweep must be START:STOP:STEP, got {!r}".format(text))
    return start, stop, step


def cmd_distance(args, manifest):
    """Prints a turning distance."""
    regular = args.regular or []
    if len(regular) > 2:
        raise exceptions.DomainError("At most two --regular side counts")

    if args.rect_sweep:
        rows = aspect_ratio_sweep(*_parse_sweep(args.rect_sweep))
        out = open(args.out, "w", newline="") if args.out else sys.stdout
        try:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(("aspect", "R4", "R6", "C"))
            for row in rows:
                writer.writerow([_format(x) for x in row])
        finally:
            if args.out:
                out.close()
        if args.out:
            manifest.add_output(args.out)
        return 0

    if args.poly_a or args.poly_b:
        if not (args.poly_a and args.poly_b):
            raise exceptions.DomainError("--poly-a needs --poly-b")
        a, b = read_polygon(args.poly_a), read_polygon(args.poly_b)
        manifest.add_input(args.poly_a)
        manifest.add_input(args.poly_b)
        result = dp_general(a, b, args.p)
        fields = {"mode": "polygons"}
        fields.update(result.to_dict())
    elif args.circle and args.poly:
        polygon = read_polygon(args.poly)
        manifest.add_input(args.poly)
        fields = {"mode": "circle-polygon", "distance": d2_circle(polygon)}
    elif args.segment and args.circle:
        fields = {"mode": "segment-circle",
                  "distance": d2_segment_vs("circle")}
    elif args.segment and len(regular) == 1:
        fields = {"mode": "segment-regular",
                  "distance": d2_segment_vs(regular[0])}
    elif args.circle and len(regular) == 1:
        fields = {"mode": "circle-regular",
                  "distance": d2_circle_regular(regular[0])}
    elif len(regular) == 2:
        result = d2_regular_closed(*regular)
        fields = {"mode": "regular-regular", "distance": result.distance,
                  "formula": result.formula, "gcd": result.gcd}
    else:
        raise exceptions.DomainError(
            "Give --poly-a/--poly-b, --regular N --regular K, --circle with "
            "--poly or --regular, --segment with --regular or --circle, or "
            "--rect-sweep")

    _emit(args, fields)
    return 0


def cmd_disorder(args, manifest):
    """Prints the six disorders of a network file."""
    network = read_network(args.network, validate=not args.no_validate)
    manifest.add_input(args.network)
    fallback = degenerate_face_distance if args.no_validate else None
    report = disorder_report(network, args.interior_only, fallback)

    if args.per_face:
        with open(args.per_face, "w", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(("face", "sides", "area", "regular", "hexagon",
                             "circle", "degenerate"))
            for face in report.per_face_distances:
                writer.writerow((
                    face.face_id, face.sides, _format(face.area),
                    _format(face.regular), _format(face.hexagon),
                    _format(face.circle), int(face.degenerate)))
        manifest.add_output(args.per_face)

    fields = report.to_dict()
    fields["faces"] = len(report)
    _emit(args, fields)
    return 0


def cmd_lattice(args, manifest):
    """Generates a lattice patch or prints its exact disorders."""
    if args.action == "generate":
        network = generate_lattice(args.name, args.size)
        write_network(args.out, network)
        manifest.add_output(args.out)
        logger.info("Wrote %d faces to %s", len(network.faces), args.out)
        return 0

    rows = exact_table(args.name)
    region = fundamental_region(args.name)
    if args.json:
        print(json.dumps({
            "lattice": args.name,
            "q": dict((str(k), v) for k, v in region.q.items()),
            "p": dict((str(k), v) for k, v in region.p.items()),
            "disorders": [
                {"label": label, "expression": expression, "value": value}
                for label, expression, value in rows],
        }, sort_keys=True, indent=2))
        return 0

    print("lattice: {}".format(args.name))
    for label, expression, value in rows:
        print("{:<6}{:<36}{}".format(label, expression, _format(value)))
    return 0


def _simulation(args):
    """Builds the simulation selected on the command line."""
    common = {"seed": args.seed, "trace_stride": args.stride,
              "max_attempts": args.max_attempts}
    if args.process == "t1":
        return T1Simulation(num_sites=args.cells, num_moves=args.moves,
                            merge_tolerance=args.merge_tolerance, **common)
    return RuptureSimulation(num_cells=args.cells, rows=args.rows,
                             cols=args.cols, num_ruptures=args.ruptures,
                             **common)


def cmd_simulate(args, manifest):
    """Runs a stochastic process and streams its trace."""
    simulation = _simulation(args)
    manifest.seed = simulation.config.seed
    if args.snapshot_every < 1:
        raise exceptions.InvalidConfiguration(
            "snapshot_every", args.snapshot_every, "must be >= 1")
    if args.snapshots and not os.path.isdir(args.snapshots):
        os.makedirs(args.snapshots)
    snapshots = []

    def snapshot(record):
        if (len(simulation.trace) - 1) % args.snapshot_every:
            return
        path = os.path.join(args.snapshots,
                            "step_{:07d}.json".format(record.step))
        write_network(path, simulation.state.snapshot({"step": record.step}))
        snapshots.append(path)

    interrupted = False
    with TraceWriter(args.trace) as writer:
        def callback(record):
            writer.write(record)
            if args.snapshots:
                snapshot(record)

        try:
            simulation.run(callback)
        except KeyboardInterrupt:
            logger.warning("Interrupted at step %d, keeping partial trace",
                           simulation.step)
            interrupted = True
        finally:
            # Partial traces keep the metadata needed to reproduce them.
            simulation.trace.write_metadata(metadata_path(args.trace))

    for path in [args.trace, metadata_path(args.trace)] + snapshots:
        manifest.add_output(path)
    return 1 if interrupted else 0


def cmd_plot(args, manifest):
    """Writes an SVG figure of a trace."""
    trace = read_trace(args.trace)
    manifest.add_input(args.trace)
    if args.columns:
        columns = [c.strip() for c in args.columns.split(",") if c.strip()]
    else:
        columns = DISORDER_COLUMNS
    save_svg(plot_trace(trace, columns), args.out)
    manifest.add_output(args.out)
    return 0


def cmd_rerun(args, manifest):
    """Re-executes a manifest and compares the output digests."""
    recorded = RunManifest.read(args.manifest_file)
    logger.info("Rerunning %s", " ".join(recorded.argv))
    code = main(recorded.argv)
    if code:
        return code

    mismatched = [path for path, digest in sorted(recorded.outputs.items())
                  if not os.path.exists(path) or _sha256(path) != digest]
    for path in mismatched:
        logger.error("Output %s differs from the manifest", path)
    if mismatched:
        return 1
    logger.info("All %d outputs reproduced", len(recorded.outputs))
    return 0


_PROCESSES = (
    ("t1", "T1 process on a Voronoi network"),
    ("rupture", "edge rupture on a hexagonal patch"),
)


def build_parser():
    """Builds the argument parser."""
    parser = argparse.ArgumentParser(
        prog="turning_disorder",
        description="Turning distances and disorders of planar networks.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s {}".format(__version__))
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="log debug messages")
    parser.add_argument("-q", "--quiet", action="store_true",
                        help="log warnings and errors only")
    parser.add_argument("--manifest", metavar="FILE",
                        help="write the run manifest to FILE")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    distance = commands.add_parser("distance", help="turning distances")
    distance.add_argument("--poly-a", metavar="FILE")
    distance.add_argument("--poly-b", metavar="FILE")
    distance.add_argument("--p", type=float, default=2.0,
                          help="exponent, at least 1 (default: 2)")
    distance.add_argument("--regular", type=int, action="append",
                          metavar="N", help="regular polygon side count")
    distance.add_argument("--circle", action="store_true")
    distance.add_argument("--segment", action="store_true")
    distance.add_argument("--poly", metavar="FILE")
    distance.add_argument("--rect-sweep", metavar="START:STOP:STEP",
                          help="rectangle aspect ratios against R4, R6, C")
    distance.add_argument("--out", metavar="FILE",
                          help="CSV path of the sweep (default: stdout)")
    distance.add_argument("--json", action="store_true")
    distance.set_defaults(func=cmd_distance)

    disorder = commands.add_parser("disorder", help="network disorders")
    disorder.add_argument("--network", metavar="FILE", required=True)
    disorder.add_argument("--interior-only", action="store_true",
                          help="skip faces with an edge on the outer boundary")
    disorder.add_argument("--no-validate", action="store_true",
                          help="accept collapsed faces and approximate them")
    disorder.add_argument("--per-face", metavar="FILE",
                          help="CSV of per-face distances")
    disorder.add_argument("--json", action="store_true")
    disorder.set_defaults(func=cmd_disorder)

    lattice = commands.add_parser("lattice", help="Archimedean lattices")
    actions = lattice.add_subparsers(dest="action", metavar="ACTION")
    actions.required = True
    generate = actions.add_parser("generate", help="write a lattice patch")
    generate.add_argument("--name", required=True,
                          help="one of {}".format(", ".join(sorted(LATTICES))))
    generate.add_argument("--size", type=float, required=True,
                          help="half side of the clipping square")
    generate.add_argument("--out", metavar="FILE", required=True)
    generate.set_defaults(func=cmd_lattice, json=False)
    exact = actions.add_parser("exact", help="print exact disorders")
    exact.add_argument("--name", required=True)
    exact.add_argument("--json", action="store_true")
    exact.set_defaults(func=cmd_lattice)

    simulate = commands.add_parser("simulate", help="stochastic processes")
    processes = simulate.add_subparsers(dest="process", metavar="PROCESS")
    processes.required = True
    for name, description in _PROCESSES:
        process = processes.add_parser(name, help=description)
        process.add_argument("--cells", type=int,
                             help="number of initial cells")
        process.add_argument("--seed", type=int)
        process.add_argument("--trace", metavar="FILE", required=True)
        process.add_argument("--stride", type=int,
                             help="accepted moves between records")
        process.add_argument("--max-attempts", type=int,
                             help="draws per accepted move before giving up")
        process.add_argument("--snapshots", metavar="DIR",
                             help="directory of network snapshots")
        process.add_argument("--snapshot-every", type=int, default=1,
                             metavar="K", help="snapshot every K records")
        process.set_defaults(func=cmd_simulate)
        if name == "t1":
            process.add_argument("--moves", type=int)
            process.add_argument("--merge-tolerance", type=float)
        else:
            process.add_argument("--ruptures", type=int)
            process.add_argument("--rows", type=int)
            process.add_argument("--cols", type=int)

    plot = commands.add_parser("plot", help="SVG figure of a trace")
    plot.add_argument("--trace", metavar="FILE", required=True)
    plot.add_argument("--out", metavar="FILE", required=True)
    plot.add_argument("--columns", metavar="LIST",
                      help="comma-separated columns (default: disorders)")
    plot.set_defaults(func=cmd_plot)

    rerun = commands.add_parser("rerun", help="reproduce a manifest")
    rerun.add_argument("manifest_file", metavar="MANIFEST")
    rerun.set_defaults(func=cmd_rerun)
    return parser


def _describe(error):
    """Formats an exception and its context arguments."""
    return "{}: {}".format(type(error).__name__,
                           ", ".join(str(arg) for arg in error.args))


def main(argv=None):
    """Runs the command line.

    Args:
        argv: Argument vector (default: sys.argv[1:]).

    Returns:
        Exit code.
    """
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(argv)

    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(
        stream=sys.stderr, level=level,
        format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)

    options = dict((k, v) for k, v in vars(args).items()
                   if k != "func")
    manifest = RunManifest(args.command, argv, options,
                           seed=getattr(args, "seed", None))
    try:
        code = args.func(args, manifest)
    except exceptions.VALIDATION_ERRORS as e:
        logger.error("%s", _describe(e))
        return 2
    except Exception:
        logger.exception("Internal error")
        return 1

    if args.manifest:
        manifest.write(args.manifest)
    elif manifest.outputs:
        manifest.write(manifest_path(next(iter(manifest.outputs))))
    return code
