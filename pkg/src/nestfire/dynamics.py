"""Discrete-time firing simulation over a nested ensemble.

Each step applies the increment/decrement reinforcement rule synchronously:
every neuron of a firing pattern p gains ``excitatory_unit * size(p)`` (each
firing neuron hands one unit to every member of its own pattern, itself
included), and every neuron whose pattern strictly encloses a firing pattern
q loses ``inhibitory_weight * excitatory_unit * size(q)`` per such q.
Strengths clamp at zero; they never go negative.

Two firing modes exist:

* ``scheduled`` -- a pattern fires at step t iff t has reached its activation
  step. This is the protocol that produces the reference strength table
  (5 patterns x 5 neurons, unit excitation, half-weight inhibition,
  activation steps 1..5).
* ``free_run`` -- additionally gated: a pattern keeps firing only while its
  strength stays positive (or it has never fired) and its parent fired on
  the previous step; root patterns instead require the external drive flag.
  Once the outermost pattern is inhibited down to zero it stops firing,
  which starves its children of the gate and the whole cascade winds down
  inward, one level per step.

All updates are pure functions over values: ``step`` and ``run`` never
mutate their inputs, so independent runs can share specs freely.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import AsymmetricPattern, OutOfRange, SpecMismatch, WrongShape
from .topology import EnsembleSpec, ancestors, members

__all__ = [
    "MODE_SCHEDULED",
    "MODE_FREE_RUN",
    "Schedule",
    "SimState",
    "StepBreakdown",
    "TraceTable",
    "initial_state",
    "step",
    "run",
    "pattern_strength",
    "first_zero_step",
    "golden_table",
    "with_drive",
]

MODE_SCHEDULED = "scheduled"
MODE_FREE_RUN = "free_run"


@dataclass(frozen=True)
class Schedule:
    """First firing step t_k for every pattern (steps are 1-based)."""

    activation_step: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "activation_step", tuple(int(t) for t in self.activation_step))
        for k, t in enumerate(self.activation_step):
            if t < 1:
                raise ValueError(f"activation step for pattern {k} must be >= 1, got {t}")

    @classmethod
    def staggered(cls, num_patterns: int, interval: int = 1) -> "Schedule":
        """One new pattern per ``interval`` steps, outermost first: t_k = 1 + k*interval."""
        if interval < 1:
            raise ValueError(f"interval must be >= 1, got {interval}")
        return cls(tuple(1 + k * interval for k in range(num_patterns)))


@dataclass(frozen=True, eq=False)
class SimState:
    """Snapshot after ``step`` simulation steps.

    ``strength`` holds the accumulated per-neuron signal; ``active`` marks
    the patterns that fired on the step just computed and ``ever_active``
    those that have fired at least once. ``drive`` is the external energy
    supply consulted by root patterns in free-run mode.
    """

    step: int
    strength: np.ndarray
    active: np.ndarray
    ever_active: np.ndarray
    drive: bool = True


@dataclass(frozen=True, eq=False)
class StepBreakdown:
    """Per-neuron signal totals of one step, after weighting.

    The update satisfies strength_t = max(0, strength_{t-1} + excitatory_in
    - inhibitory_in) elementwise.
    """

    excitatory_in: np.ndarray
    inhibitory_in: np.ndarray


@dataclass(frozen=True, eq=False)
class TraceTable:
    """Step x neuron matrix of strengths plus the neuron-to-pattern map."""

    values: np.ndarray
    pattern_of: np.ndarray = field(repr=False)

    @property
    def num_steps(self) -> int:
        return self.values.shape[0]

    @property
    def num_neurons(self) -> int:
        return self.values.shape[1]


def initial_state(spec: EnsembleSpec) -> SimState:
    """The all-zero state before any step has run."""
    return SimState(
        step=0,
        strength=np.zeros(spec.num_neurons),
        active=np.zeros(spec.num_patterns, dtype=bool),
        ever_active=np.zeros(spec.num_patterns, dtype=bool),
    )


def step(
    state: SimState,
    spec: EnsembleSpec,
    schedule: Schedule,
    mode: str = MODE_SCHEDULED,
) -> tuple[SimState, StepBreakdown]:
    """Advance the simulation by one step; returns the new state and the
    per-neuron excitatory/inhibitory totals that produced it."""
    _check_dimensions(state, spec, schedule)
    if mode not in (MODE_SCHEDULED, MODE_FREE_RUN):
        raise ValueError(f"unknown mode {mode!r}")

    t = state.step + 1
    reached = np.array([t >= t_k for t_k in schedule.activation_step])
    if mode == MODE_SCHEDULED:
        fires = reached
    else:
        fires = np.zeros(spec.num_patterns, dtype=bool)
        for p in range(spec.num_patterns):
            if not reached[p]:
                continue
            first = spec.offset(p)
            alive = state.strength[first] > 0 or not state.ever_active[p]
            parent = spec.patterns[p].parent
            gate = state.drive if parent is None else bool(state.active[parent])
            fires[p] = alive and gate

    exc = np.zeros(spec.num_neurons)
    inh = np.zeros(spec.num_neurons)
    s = spec.excitatory_unit
    delta = spec.inhibitory_weight
    for q in range(spec.num_patterns):
        if not fires[q]:
            continue
        size_q = spec.patterns[q].size
        exc[members(spec, q)] += s * size_q
        for a in ancestors(spec, q):
            inh[members(spec, a)] += delta * s * size_q

    new_state = SimState(
        step=t,
        strength=np.maximum(state.strength + exc - inh, 0.0),
        active=fires,
        ever_active=state.ever_active | fires,
        drive=state.drive,
    )
    return new_state, StepBreakdown(excitatory_in=exc, inhibitory_in=inh)


def run(
    spec: EnsembleSpec,
    schedule: Schedule,
    steps: int,
    mode: str = MODE_SCHEDULED,
) -> TraceTable:
    """Run ``steps`` steps from the all-zero state and collect the full trace."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    state = initial_state(spec)
    rows = []
    for _ in range(steps):
        state, _breakdown = step(state, spec, schedule, mode)
        rows.append(state.strength)
    pattern_of = np.concatenate(
        [np.full(p.size, p.id, dtype=int) for p in spec.patterns]
    )
    return TraceTable(values=np.vstack(rows), pattern_of=pattern_of)


def pattern_strength(trace: TraceTable, pattern: int, t: int) -> float:
    """The common per-neuron strength of ``pattern`` at step ``t`` (1-based).

    Raises AsymmetricPattern if the members disagree: updates are
    pattern-uniform, so unequal members indicate a bug upstream.
    """
    if not 1 <= t <= trace.num_steps:
        raise OutOfRange(f"step {t} not in 1..{trace.num_steps}")
    mask = trace.pattern_of == pattern
    if not mask.any():
        raise OutOfRange(f"pattern {pattern} not present in trace")
    values = trace.values[t - 1, mask]
    if not np.all(values == values[0]):
        raise AsymmetricPattern(f"pattern {pattern} members disagree at t={t}: {values}")
    return float(values[0])


def first_zero_step(trace: TraceTable, pattern: int) -> int | None:
    """Earliest step at which ``pattern`` returns to 0 after having been
    positive; None if that never happens within the trace."""
    was_positive = False
    for t in range(1, trace.num_steps + 1):
        value = pattern_strength(trace, pattern, t)
        if was_positive and value == 0.0:
            return t
        if value > 0.0:
            was_positive = True
    return None


def golden_table(trace: TraceTable) -> np.ndarray:
    """Extract the 25 x 3 grid (neurons 1..25 at t = 3, 4, 5) used for
    golden comparison against the reference strength table."""
    if trace.num_neurons != 25 or trace.num_steps < 5:
        raise WrongShape(
            f"need a 25-neuron trace of >= 5 steps, got {trace.num_neurons} neurons"
            f" x {trace.num_steps} steps"
        )
    return trace.values[2:5, :].T.copy()


def with_drive(state: SimState, drive: bool) -> SimState:
    """Copy of ``state`` with the external drive flag set; free-run root
    patterns stop firing once the drive is removed."""
    return replace(state, drive=drive)


def _check_dimensions(state: SimState, spec: EnsembleSpec, schedule: Schedule) -> None:
    if state.strength.shape != (spec.num_neurons,):
        raise SpecMismatch(
            f"state has {state.strength.shape[0]} neurons, spec has {spec.num_neurons}"
        )
    if state.active.shape != (spec.num_patterns,) or state.ever_active.shape != (
        spec.num_patterns,
    ):
        raise SpecMismatch("state pattern flags disagree with spec pattern count")
    if len(schedule.activation_step) != spec.num_patterns:
        raise SpecMismatch(
            f"schedule covers {len(schedule.activation_step)} patterns,"
            f" spec has {spec.num_patterns}"
        )
