"""Single-copy discrimination of {|0>, |1>, |+>, |->} from walk statistics.

A trial runs r weak-measurement steps while counting outcomes in j0/j1.
At the checkpoint iteration k the running estimate alpha_approx =
j0/(j0+j1) decides whether to rotate into the Hadamard basis (apply H
once); the walk then continues in whichever basis was chosen and the
final majority count names the state.

The checkpoint fires at most once. Counters are not reset when H is
applied: under the default rule (k=2, open interval (0,1)) H fires only
when j0 = j1 = 1, so the retained counts cancel in every later
comparison and the trace keeps the full history.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .gates import SQRT2
from .walk import QubitState, WalkParams, weak_step

_MODES = ("interval", "never-apply-h", "always-apply-h")


class StateLabel(enum.IntEnum):
    """The four promised states. Bit 0 of the code is the basis bit:
    zero/plus decide bit 0, one/minus decide bit 1."""

    ZERO = 0
    ONE = 1
    PLUS = 2
    MINUS = 3

    def __str__(self):
        return self.name.lower()

    @property
    def bit(self) -> int:
        """Which of the two basis vectors this label names (0 or 1)."""
        return self.value & 1

    @property
    def is_hadamard(self) -> bool:
        return self.value >= 2

    @property
    def basis(self) -> str:
        return "hadamard" if self.is_hadamard else "computational"

    def to_state(self) -> QubitState:
        """Canonical amplitudes: (1,0), (0,1), (1/sqrt2,1/sqrt2), (1/sqrt2,-1/sqrt2)."""
        if self is StateLabel.ZERO:
            return QubitState(1.0, 0.0)
        if self is StateLabel.ONE:
            return QubitState(0.0, 1.0)
        if self is StateLabel.PLUS:
            return QubitState(1.0 / SQRT2, 1.0 / SQRT2)
        return QubitState(1.0 / SQRT2, -1.0 / SQRT2)

    @classmethod
    def parse(cls, text: str) -> "StateLabel":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(
                f"unknown state {text!r}; expected one of zero, one, plus, minus"
            ) from None


@dataclass(frozen=True)
class DecisionRule:
    """Checkpoint policy: at iteration k, apply H per `mode`.

    interval mode fires iff i1 < alpha_approx < i2 (strictly): with the
    default open interval (0,1) and k=2 the only interior estimate is
    0.5, i.e. the first two outcomes disagreed.
    """

    k: int = 2
    i1: float = 0.0
    i2: float = 1.0
    mode: str = "interval"

    def __post_init__(self):
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if self.k < 1:
            raise ValueError(f"decision iteration k must be >= 1, got {self.k}")
        if self.mode == "interval" and not (0.0 <= self.i1 < self.i2 <= 1.0):
            raise ValueError(
                f"interval bounds need 0 <= i1 < i2 <= 1, got ({self.i1}, {self.i2})"
            )


@dataclass(frozen=True)
class WalkCounters:
    """Outcome tallies; j0 + j1 equals the iterations completed."""

    j0: int
    j1: int


@dataclass(frozen=True)
class TrialOutcome:
    """Everything one trial produced.

    trace holds one row per iteration, in order:
    (iteration, outcome, alpha, beta, alpha_approx), where alpha/beta
    are the amplitudes after that iteration finished (including the H
    rotation if it fired there) and alpha_approx uses the counters
    after that iteration's update.
    """

    h_applied: bool
    decided_basis: str
    decided_state: StateLabel
    tie: bool
    counters: WalkCounters
    trace: tuple[tuple[int, int, float, float, float], ...]


def alpha_approx(counters: WalkCounters) -> float:
    """j0/(j0+j1), the empirical squared-|0> amplitude."""
    total = counters.j0 + counters.j1
    if total == 0:
        raise ValueError("alpha_approx is undefined before any measurement")
    return counters.j0 / total


def apply_hadamard_update(state: QubitState) -> QubitState:
    """Rotate into the Hadamard basis: ((a+b)/sqrt2, (a-b)/sqrt2)."""
    return QubitState((state.alpha + state.beta) / SQRT2,
                      (state.alpha - state.beta) / SQRT2)


def classify(counters: WalkCounters, h_applied: bool) -> tuple[StateLabel, bool]:
    """Majority vote in the decided basis.

    j1 > j0 names one/minus, otherwise zero/plus; ties (j0 = j1) fall
    deterministically on the zero/plus side and are flagged.
    """
    if counters.j0 + counters.j1 == 0:
        raise ValueError("cannot classify with no measurements")
    tie = counters.j0 == counters.j1
    if h_applied:
        label = StateLabel.MINUS if counters.j1 > counters.j0 else StateLabel.PLUS
    else:
        label = StateLabel.ONE if counters.j1 > counters.j0 else StateLabel.ZERO
    return label, tie


def run_trial(initial: StateLabel, params: WalkParams, rule: DecisionRule,
              r: int, rng) -> TrialOutcome:
    """Run one full discrimination trial of r iterations.

    Consumes exactly r uniform draws from rng. The checkpoint test runs
    at iteration k after that iteration's counter update.
    """
    if r < 1:
        raise ValueError(f"iteration count r must be >= 1, got {r}")
    if rule.k > r:
        raise ValueError(f"decision iteration k={rule.k} exceeds r={r}; need k <= r")
    state = initial.to_state()
    j0 = 0
    j1 = 0
    h_applied = False
    trace = []
    for j in range(1, r + 1):
        outcome, state = weak_step(state, params, rng)
        if outcome == 0:
            j0 += 1
        else:
            j1 += 1
        approx = j0 / (j0 + j1)
        if j == rule.k:
            if rule.mode == "always-apply-h":
                fire = True
            elif rule.mode == "never-apply-h":
                fire = False
            else:
                fire = rule.i1 < approx < rule.i2
            if fire:
                state = apply_hadamard_update(state)
                h_applied = True
        trace.append((j, outcome, state.alpha, state.beta, approx))
    counters = WalkCounters(j0, j1)
    decided, tie = classify(counters, h_applied)
    return TrialOutcome(
        h_applied=h_applied,
        decided_basis="hadamard" if h_applied else "computational",
        decided_state=decided,
        tie=tie,
        counters=counters,
        trace=tuple(trace),
    )
