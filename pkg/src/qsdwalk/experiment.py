"""Seeded Monte Carlo harness over the discrimination trial.

Trial i always draws from substream(master_seed, i), so a report is a
pure function of its config: runs are replayable, thread count never
changes results, and different states or mu values reuse the same
underlying uniforms (common random numbers, which sharpens sweep
comparisons).

The batch engine below is the throughput path. It evolves whole trial
arrays through the same expression sequence as walk.weak_step and
discriminate.run_trial, so batch and scalar decisions are bit-identical
and the scalar path stays the readable reference.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .discriminate import DecisionRule, StateLabel, TrialOutcome, run_trial
from .gates import SQRT2, PhaseRoot
from .rng import batch_uniform, substream, substream_states
from .walk import WalkParams, step_arrays

_ALL_STATES = (StateLabel.ZERO, StateLabel.ONE, StateLabel.PLUS, StateLabel.MINUS)


@dataclass(frozen=True)
class ExperimentConfig:
    states: tuple[StateLabel, ...] = _ALL_STATES
    trials: int = 100_000
    r: int = 100
    mu: int = 2
    rule: DecisionRule = DecisionRule()
    master_seed: int = 0

    def __post_init__(self):
        if not self.states:
            raise ValueError("states must not be empty")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.mu < 0:
            raise ValueError(f"mu must be non-negative, got {self.mu}")
        if self.r < self.rule.k:
            raise ValueError(
                f"r={self.r} is below the decision iteration k={self.rule.k}")


@dataclass(frozen=True)
class StateReport:
    """Per-state aggregate; all fractions are of the full trial count,
    so success_given_h + failure_given_h = frac_h_applied exactly."""

    state: StateLabel
    trials: int
    frac_h_applied: float
    frac_no_h: float
    success_given_h: float
    failure_given_h: float
    success_given_no_h: float
    failure_given_no_h: float
    total_success: float
    tie_count: int


@dataclass(frozen=True)
class SweepPoint:
    mu: int
    success_computational: float
    success_hadamard: float


@dataclass(frozen=True)
class PhasePoint:
    """Success rates of the real-amplitude walk versus the
    phase-tracking variant, under shared random streams."""

    state: StateLabel
    total_success_real: float
    total_success_complex: float
    abs_diff: float


def _fire_mask(j0: np.ndarray, rule: DecisionRule) -> np.ndarray:
    if rule.mode == "always-apply-h":
        return np.ones(j0.shape, dtype=bool)
    if rule.mode == "never-apply-h":
        return np.zeros(j0.shape, dtype=bool)
    approx = j0 / rule.k
    return (approx > rule.i1) & (approx < rule.i2)


def _chunk_counts(state: StateLabel, config: ExperimentConfig,
                  start: int, size: int) -> tuple[int, int, int, int]:
    """Run trials [start, start+size) in one array pass.

    Returns integer counts (h_applied, success & h, success & no h,
    ties); integers keep the later reduction order-independent.
    """
    init = state.to_state()
    factors = WalkParams(config.mu).factors
    rule = config.rule
    streams = substream_states(config.master_seed, start, size)
    alpha = np.full(size, init.alpha)
    beta = np.full(size, init.beta)
    j0 = np.zeros(size, dtype=np.int64)
    h = np.zeros(size, dtype=bool)
    for j in range(1, config.r + 1):
        u = batch_uniform(streams)
        out0, alpha, beta = step_arrays(alpha, beta, factors, u)
        j0 += out0
        if j == rule.k:
            h = _fire_mask(j0, rule)
            if h.any():
                ha = (alpha + beta) / SQRT2
                hb = (alpha - beta) / SQRT2
                alpha = np.where(h, ha, alpha)
                beta = np.where(h, hb, beta)
    j1 = config.r - j0
    success = (j1 > j0) == bool(state.bit)
    return (int(np.count_nonzero(h)),
            int(np.count_nonzero(h & success)),
            int(np.count_nonzero(~h & success)),
            int(np.count_nonzero(j0 == j1)))


def _complex_factors(params: WalkParams) -> tuple[complex, complex, complex, complex]:
    """Step multipliers (1 +- k^d)/2 with their phases kept."""
    t = params.t
    k0 = PhaseRoot(t, params.d0).value
    k1 = PhaseRoot(t, params.d1).value
    return ((1 + k0) / 2, (1 + k1) / 2, (1 - k0) / 2, (1 - k1) / 2)


def _chunk_counts_complex(state: StateLabel, config: ExperimentConfig,
                          start: int, size: int) -> tuple[int, int, int, int]:
    """Same as _chunk_counts but with complex amplitudes, so the
    per-step relative phase survives into the H rotation."""
    init = state.to_state()
    f00, f01, f10, f11 = _complex_factors(WalkParams(config.mu))
    rule = config.rule
    streams = substream_states(config.master_seed, start, size)
    ac = np.full(size, init.alpha, dtype=complex)
    bc = np.full(size, init.beta, dtype=complex)
    j0 = np.zeros(size, dtype=np.int64)
    h = np.zeros(size, dtype=bool)
    for j in range(1, config.r + 1):
        u = batch_uniform(streams)
        a0 = ac * f00
        b0 = bc * f01
        a1 = ac * f10
        b1 = bc * f11
        p0 = a0.real ** 2 + a0.imag ** 2 + b0.real ** 2 + b0.imag ** 2
        p1 = a1.real ** 2 + a1.imag ** 2 + b1.real ** 2 + b1.imag ** 2
        out0 = u < p0
        norm = np.sqrt(np.where(out0, p0, p1))
        ac = np.where(out0, a0, a1) / norm
        bc = np.where(out0, b0, b1) / norm
        j0 += out0
        if j == rule.k:
            h = _fire_mask(j0, rule)
            if h.any():
                ha = (ac + bc) / SQRT2
                hb = (ac - bc) / SQRT2
                ac = np.where(h, ha, ac)
                bc = np.where(h, hb, bc)
    j1 = config.r - j0
    success = (j1 > j0) == bool(state.bit)
    return (int(np.count_nonzero(h)),
            int(np.count_nonzero(h & success)),
            int(np.count_nonzero(~h & success)),
            int(np.count_nonzero(j0 == j1)))


def _state_counts(state: StateLabel, config: ExperimentConfig, threads: int,
                  kernel) -> tuple[int, int, int, int]:
    """Split trials into contiguous chunks and sum the kernel's counts."""
    if threads <= 1 or config.trials < 2 * threads:
        return kernel(state, config, 0, config.trials)
    bounds = np.linspace(0, config.trials, threads + 1, dtype=int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(
            lambda se: kernel(state, config, int(se[0]), int(se[1] - se[0])),
            zip(bounds[:-1], bounds[1:])))
    return tuple(sum(col) for col in zip(*parts))


def _build_report(state: StateLabel, config: ExperimentConfig,
                  counts: tuple[int, int, int, int]) -> StateReport:
    n_h, succ_h, succ_noh, ties = counts
    t = config.trials
    return StateReport(
        state=state,
        trials=t,
        frac_h_applied=n_h / t,
        frac_no_h=(t - n_h) / t,
        success_given_h=succ_h / t,
        failure_given_h=(n_h - succ_h) / t,
        success_given_no_h=succ_noh / t,
        failure_given_no_h=(t - n_h - succ_noh) / t,
        total_success=(succ_h + succ_noh) / t,
        tie_count=ties,
    )


def run_experiment(config: ExperimentConfig, threads: int = 1) -> list[StateReport]:
    """One StateReport per requested state.

    Success means the decided label names the same basis vector as the
    prepared one (zero/plus carry bit 0, one/minus bit 1); when H was
    applied the decision is read in the Hadamard basis, so e.g. a
    prepared zero that was rotated and classified plus counts as
    success, exactly the accounting behind the success/failure split.
    """
    return [_build_report(s, config, _state_counts(s, config, threads, _chunk_counts))
            for s in config.states]


def sweep_mu(base: ExperimentConfig, mu_values, threads: int = 1) -> list[SweepPoint]:
    """Rerun the experiment across mu, averaging success per basis pair.

    Always runs all four states regardless of base.states, since a
    SweepPoint needs both pairs.
    """
    mu_values = list(mu_values)
    if not mu_values:
        raise ValueError("mu_values must not be empty")
    points = []
    for mu in mu_values:
        config = dataclasses.replace(base, mu=mu, states=_ALL_STATES)
        ts = {rep.state: rep.total_success for rep in run_experiment(config, threads)}
        points.append(SweepPoint(
            mu=mu,
            success_computational=(ts[StateLabel.ZERO] + ts[StateLabel.ONE]) / 2,
            success_hadamard=(ts[StateLabel.PLUS] + ts[StateLabel.MINUS]) / 2,
        ))
    return points


def collect_traces(config: ExperimentConfig, sample_count: int) -> list[TrialOutcome]:
    """Full traces of the first sample_count trials, per state in config
    order. Trial i here is bit-identical to trial i of run_experiment."""
    if sample_count < 0 or sample_count > config.trials:
        raise ValueError(
            f"sample_count must be in 0..trials={config.trials}, got {sample_count}")
    params = WalkParams(config.mu)
    outcomes = []
    for state in config.states:
        for i in range(sample_count):
            rng = substream(config.master_seed, i)
            outcomes.append(run_trial(state, params, config.rule, config.r, rng))
    return outcomes


def phase_report(config: ExperimentConfig, threads: int = 1) -> list[PhasePoint]:
    """How much the dropped per-step phase moves the success rate.

    Runs the real-amplitude engine and the complex engine on identical
    random streams and reports both success rates per state. States
    that reach the H rotation with a single nonzero component (zero,
    one) cannot show a relative phase, so their difference is pure
    Monte Carlo residue.
    """
    points = []
    for state in config.states:
        real = _state_counts(state, config, threads, _chunk_counts)
        cplx = _state_counts(state, config, threads, _chunk_counts_complex)
        ts_real = (real[1] + real[2]) / config.trials
        ts_cplx = (cplx[1] + cplx[2]) / config.trials
        points.append(PhasePoint(state, ts_real, ts_cplx, abs(ts_real - ts_cplx)))
    return points
