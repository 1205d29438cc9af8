# -*- coding: utf-8 -*-
"""Shared driver of the stochastic network processes."""

import logging
from collections import Counter

from . import __version__
from .constants import Rejection
from .network import disorder_report
from .tools import describe_rng, make_rng
from .trace import SimulationTrace, TraceRecord

logger = logging.getLogger(__name__)


class MoveOutcome(object):

    """Result of attempting a local move.

    Attributes:
        applied: Whether the network changed.
        reason: Rejection value when not applied.
        edge: Edge the move was attempted on.
        faces: Faces the move touched.
    """

    def __init__(self, applied, reason=None, edge=None, faces=()):
        self.applied = applied
        self.reason = reason
        self.edge = edge
        self.faces = tuple(faces)

    def __bool__(self):
        return self.applied

    def __repr__(self):
        if self.applied:
            return "<MoveOutcome: applied on {}>".format(self.edge)
        return "<MoveOutcome: rejected on {} ({})>".format(
            self.edge, Rejection.to_string(self.reason))

    @classmethod
    def rejected(cls, reason, edge):
        """Constructs a rejection."""
        return cls(False, reason, edge)


class Simulation(object):

    """Seeded loop of random local moves on a planar network.

    Subclasses build the initial state and apply one move. Disorders are
    recorded at step 0, every trace_stride accepted moves and at the last
    step. Rejected draws do not advance the step.

    Attributes:
        config: Resolved configuration.
        rng: Random generator.
        state: NetworkState, None before initialize().
        step: Number of accepted moves.
        draws: Number of edges drawn.
        rejections: Counter of rejection reasons.
        exhausted: Whether the run stopped after too many rejections.
        preempted: Whether the run was asked to stop.
        trace: SimulationTrace.
    """

    name = None

    # Distance policy for faces without a valid polygon.
    fallback = None

    def __init__(self, config):
        """Constructs Simulation object.

        Args:
            config: Resolved configuration with seed, trace_stride and
                max_attempts.
        """
        self.config = config
        self.rng = make_rng(config.seed)
        self.state = None
        self.step = 0
        self.draws = 0
        self.rejections = Counter()
        self.exhausted = False
        self.preempted = False
        self.trace = SimulationTrace()

    @property
    def target(self):
        """Number of accepted moves to perform."""
        raise NotImplementedError

    def initialize(self):
        """Builds self.state."""
        raise NotImplementedError

    def apply(self, edge):
        """Attempts one move on an edge and returns its MoveOutcome."""
        raise NotImplementedError

    def after_move(self, outcome):
        """Hook run after every accepted move."""
        pass

    def draw(self):
        """Draws an interior edge uniformly at random.

        Returns:
            Edge (u, v) with u < v, or None if there is none.
        """
        edges = self.state.interior_edges()
        if not edges:
            return None
        return edges[self.rng.integers(len(edges))]

    def advance(self):
        """Draws edges until one move is accepted.

        Returns:
            Accepted MoveOutcome, or None if max_attempts draws in a row
            were rejected.
        """
        for _ in range(self.config.max_attempts):
            edge = self.draw()
            if edge is None:
                break
            self.draws += 1
            outcome = self.apply(edge)
            if outcome.applied:
                self.step += 1
                self.after_move(outcome)
                return outcome
            self.rejections[outcome.reason] += 1
            logger.debug("Rejected move on %s: %s", edge,
                         Rejection.to_string(outcome.reason))

        self.exhausted = True
        logger.warning("No move accepted after %d draws at step %d",
                       self.config.max_attempts, self.step)
        return None

    def record(self):
        """Computes the disorders of the current state.

        Returns:
            TraceRecord.
        """
        report = disorder_report(self.state.snapshot(),
                                 fallback=self.fallback)
        record = TraceRecord.from_report(self.step, report)
        self.trace.append(record)
        logger.info("STEP %6d: D=%.4f D6=%.4f Dc=%.4f FACES=%d",
                    record.step, record.D, record.D6, record.Dc,
                    record.faces)
        return record

    def preempt(self):
        """Stops the run after the current move."""
        self.preempted = True

    def metadata(self):
        """Describes the run for reproduction."""
        return {
            "process": self.name,
            "version": __version__,
            "config": self.config.to_dict(),
            "rng": describe_rng(self.config.seed),
            "steps": self.step,
            "draws": self.draws,
            "rejections": dict(
                (Rejection.to_string(reason), count)
                for reason, count in sorted(self.rejections.items())),
            "exhausted": self.exhausted,
            "step_semantics": "accepted moves",
        }

    def run(self, callback=None):
        """Runs the process.

        Args:
            callback: Function called with every TraceRecord as soon as it
                is recorded.

        Returns:
            SimulationTrace.
        """
        def emit():
            record = self.record()
            if callback:
                callback(record)

        try:
            if self.state is None:
                self.initialize()
            self.config.log()
            emit()
            stride = self.config.trace_stride
            while self.step < self.target and not self.preempted:
                if self.advance() is None:
                    break
                if self.step % stride == 0 or self.step == self.target:
                    emit()
            if self.trace[-1].step != self.step:
                emit()
        except Exception:
            logger.error("%s process failed at step %d", self.name, self.step)
            raise
        finally:
            self.trace.metadata = self.metadata()

        return self.trace
