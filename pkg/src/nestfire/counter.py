"""Timer/counter/battery built from a nested chain of patterns.

Lifecycle: an on-switch starts the outermost level; activation then cascades
inward one level per tick, and each level emits one count event on
activation. When the innermost level activates it signals the off-switch;
on the next tick the off-switch inhibits the on-switch (removing the
external drive), and one tick later the whole group is quiescent. A counter
of depth d therefore emits exactly d counts at ticks 1..d and goes
quiescent at tick d+2. Quiescence is absorbing: further ticks change
nothing.

The on/off switches are modeled as control signals, not as patterns with
their own dynamics, and ``tick`` is a pure transition over values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidDepth

__all__ = [
    "Phase",
    "CounterSpec",
    "CountEvent",
    "CounterState",
    "start",
    "tick",
    "run_counter",
]


class Phase(enum.Enum):
    IDLE = "idle"
    CASCADING = "cascading"
    SHUTTING_DOWN = "shutting_down"
    QUIESCENT = "quiescent"


@dataclass(frozen=True)
class CounterSpec:
    """Chain depth plus an optional name carried on emitted signals."""

    depth: int
    label: str | None = None


@dataclass(frozen=True)
class CountEvent:
    """One count: the nesting level (1-based) that activated, and when."""

    level: int
    tick: int


@dataclass(frozen=True)
class CounterState:
    """Phase machine snapshot; ``level`` is set only while cascading."""

    phase: Phase
    level: int | None
    tick: int
    emissions: tuple[CountEvent, ...]


def start(spec: CounterSpec) -> CounterState:
    """Idle state, ready to cascade from level 1 on the first tick."""
    _check_depth(spec)
    return CounterState(phase=Phase.IDLE, level=None, tick=0, emissions=())


def tick(state: CounterState, spec: CounterSpec) -> CounterState:
    """Advance the counter by one tick.

    Idle -> Cascading(1), then one level inward per tick with a CountEvent
    per activation; after the innermost level the off-switch acts
    (ShuttingDown), then everything goes dark (Quiescent, absorbing).
    """
    if state.phase is Phase.QUIESCENT:
        return state
    t = state.tick + 1
    if state.phase is Phase.IDLE:
        return _activate(state, level=1, tick_=t)
    if state.phase is Phase.CASCADING:
        assert state.level is not None
        if state.level < spec.depth:
            return _activate(state, level=state.level + 1, tick_=t)
        # Innermost already active: the off-switch it signalled now inhibits
        # the on-switch, removing the external drive.
        return CounterState(Phase.SHUTTING_DOWN, None, t, state.emissions)
    # SHUTTING_DOWN: drive is gone, all levels switch off.
    return CounterState(Phase.QUIESCENT, None, t, state.emissions)


def run_counter(spec: CounterSpec) -> tuple[list[CountEvent], CounterState]:
    """Tick from start to quiescence; returns every emission and the final
    state. Completes in exactly depth + 2 ticks."""
    _check_depth(spec)
    state = start(spec)
    while state.phase is not Phase.QUIESCENT:
        state = tick(state, spec)
    return list(state.emissions), state


def _activate(state: CounterState, level: int, tick_: int) -> CounterState:
    emitted = state.emissions + (CountEvent(level=level, tick=tick_),)
    return CounterState(Phase.CASCADING, level, tick_, emitted)


def _check_depth(spec: CounterSpec) -> None:
    if spec.depth < 1:
        raise InvalidDepth(f"counter depth must be >= 1, got {spec.depth}")
