"""Measurement-induced random walk on real qubit amplitudes.

One weak-measurement round entangles the unknown qubit psi with an
auxiliary qubit through t = 2*mu + 1 partial negations: the |0>
component of psi is seen with 1-density d0 = mu (only the mu dummy
qubits are set) and the |1> component with d1 = mu + 1. Measuring the
auxiliary qubit then nudges (alpha, beta):

    outcome 0:  (alpha*cos(d0*pi/2t), beta*cos(d1*pi/2t)) / norm
    outcome 1:  (alpha*sin(d0*pi/2t), beta*sin(d1*pi/2t)) / norm

Because d0 + d1 = t the two cosine factors are complementary, which
makes alpha^2 a bounded martingale: the walk drifts towards (1,0) or
(0,1) at a rate set by mu and never changes E[alpha^2].

The updates here are the real-amplitude walk; the relative phase that a
full register simulation develops per step is deliberately not tracked
(the statevector oracle module quantifies it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .rng import batch_uniform, substream_states

_NORM_TOL = 1e-10
_PROB_FLOOR = 1e-15


@dataclass(frozen=True)
class QubitState:
    """Real amplitude pair (alpha, beta) with alpha^2 + beta^2 = 1."""

    alpha: float
    beta: float

    def __post_init__(self):
        err = abs(self.alpha * self.alpha + self.beta * self.beta - 1.0)
        if err > _NORM_TOL:
            raise ValueError(f"state not normalized: |alpha^2+beta^2-1| = {err:.3e}")

    @classmethod
    def from_angle(cls, phi: float) -> "QubitState":
        """(cos(phi), sin(phi))."""
        return cls(math.cos(phi), math.sin(phi))


@dataclass(frozen=True)
class WalkParams:
    """Walk geometry for mu dummy qubits: t = 2*mu+1, d0 = mu, d1 = mu+1."""

    mu: int

    def __post_init__(self):
        if self.mu < 0:
            raise ValueError(f"mu must be non-negative, got {self.mu}")

    @property
    def t(self) -> int:
        return 2 * self.mu + 1

    @property
    def d0(self) -> int:
        return self.mu

    @property
    def d1(self) -> int:
        return self.mu + 1

    @cached_property
    def factors(self) -> tuple[float, float, float, float]:
        """(c0, c1, s0, s1) = cos/sin of d0*pi/2t and d1*pi/2t.

        Computed once so every code path (scalar and vectorized) shares
        bit-identical constants.
        """
        t = self.t
        theta0 = self.d0 * math.pi / (2 * t)
        theta1 = self.d1 * math.pi / (2 * t)
        return (math.cos(theta0), math.cos(theta1),
                math.sin(theta0), math.sin(theta1))


def ax_probabilities(state: QubitState, params: WalkParams) -> tuple[float, float]:
    """Probabilities of auxiliary-qubit outcomes 0 and 1.

    p0 = alpha^2 cos^2(d0 pi/2t) + beta^2 cos^2(d1 pi/2t) and p1 the
    sine counterpart; p0 + p1 = 1 up to rounding.
    """
    norm_err = abs(state.alpha * state.alpha + state.beta * state.beta - 1.0)
    if norm_err > 1e-6:
        raise ValueError(f"state drifted off the unit circle by {norm_err:.3e}")
    c0, c1, s0, s1 = params.factors
    # keep the exact expression shape of step_arrays so both paths agree
    a0 = state.alpha * c0
    b0 = state.beta * c1
    a1 = state.alpha * s0
    b1 = state.beta * s1
    return a0 * a0 + b0 * b0, a1 * a1 + b1 * b1


def collapse_update(state: QubitState, outcome: int, params: WalkParams) -> QubitState:
    """Post-measurement amplitudes after observing `outcome` on ax."""
    if outcome not in (0, 1):
        raise ValueError(f"outcome must be 0 or 1, got {outcome}")
    c0, c1, s0, s1 = params.factors
    if outcome == 0:
        a = state.alpha * c0
        b = state.beta * c1
    else:
        a = state.alpha * s0
        b = state.beta * s1
    n2 = a * a + b * b
    if n2 < _PROB_FLOOR:
        raise ValueError(f"outcome {outcome} has vanishing probability {n2:.3e}")
    norm = math.sqrt(n2)
    return QubitState(a / norm, b / norm)


def weak_step(state: QubitState, params: WalkParams, rng) -> tuple[int, QubitState]:
    """Sample one auxiliary-qubit outcome and collapse.

    Consumes exactly one uniform draw; outcome is 0 iff the draw is
    strictly below p0.
    """
    p0, _ = ax_probabilities(state, params)
    outcome = 0 if rng.uniform() < p0 else 1
    return outcome, collapse_update(state, outcome, params)


def step_arrays(alpha: np.ndarray, beta: np.ndarray,
                factors: tuple[float, float, float, float],
                u: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized weak_step over trial arrays.

    Expression structure mirrors the scalar path exactly, so a batch of
    walks is bit-identical to the same walks run one weak_step at a
    time. Returns (outcome0_mask, alpha, beta).
    """
    c0, c1, s0, s1 = factors
    a0 = alpha * c0
    b0 = beta * c1
    a1 = alpha * s0
    b1 = beta * s1
    p0 = a0 * a0 + b0 * b0
    p1 = a1 * a1 + b1 * b1
    out0 = u < p0
    norm = np.sqrt(np.where(out0, p0, p1))
    return out0, np.where(out0, a0, a1) / norm, np.where(out0, b0, b1) / norm


def walk_ensemble(state: QubitState, params: WalkParams, steps: int, trials: int,
                  master_seed: int) -> tuple[np.ndarray, np.ndarray, float]:
    """Run `trials` independent walks of `steps` steps.

    Trial i draws from substream(master_seed, i). Returns the final
    (alpha, beta) arrays and the worst |alpha^2 + beta^2 - 1| seen at
    any visited state.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    streams = substream_states(master_seed, 0, trials)
    alpha = np.full(trials, state.alpha)
    beta = np.full(trials, state.beta)
    factors = params.factors
    worst = 0.0
    for _ in range(steps):
        u = batch_uniform(streams)
        _, alpha, beta = step_arrays(alpha, beta, factors, u)
        drift = float(np.max(np.abs(alpha * alpha + beta * beta - 1.0)))
        if drift > worst:
            worst = drift
    return alpha, beta, worst
