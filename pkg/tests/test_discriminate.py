import math

import pytest

from qsdwalk.discriminate import (
    DecisionRule,
    StateLabel,
    WalkCounters,
    alpha_approx,
    apply_hadamard_update,
    classify,
    run_trial,
)
from qsdwalk.rng import substream
from qsdwalk.walk import QubitState, WalkParams

INV_SQRT2 = 1 / math.sqrt(2)
ALL_STATES = [StateLabel.ZERO, StateLabel.ONE, StateLabel.PLUS, StateLabel.MINUS]
# exact H-firing probability under the default rule at mu=2:
# 2 cos^2(pi/5) sin^2(pi/5)
P_H_MU2 = 0.45225424859373686


def test_state_label_amplitudes():
    assert StateLabel.ZERO.to_state() == QubitState(1.0, 0.0)
    assert StateLabel.ONE.to_state() == QubitState(0.0, 1.0)
    plus = StateLabel.PLUS.to_state()
    assert plus.alpha == INV_SQRT2 and plus.beta == INV_SQRT2
    minus = StateLabel.MINUS.to_state()
    assert minus.alpha == INV_SQRT2 and minus.beta == -INV_SQRT2


def test_state_label_bits_and_basis():
    assert [s.bit for s in ALL_STATES] == [0, 1, 0, 1]
    assert [s.is_hadamard for s in ALL_STATES] == [False, False, True, True]
    assert StateLabel.ZERO.basis == "computational"
    assert StateLabel.MINUS.basis == "hadamard"


def test_state_label_parse_and_str():
    for s in ALL_STATES:
        assert StateLabel.parse(str(s)) is s
    assert StateLabel.parse(" Plus ") is StateLabel.PLUS
    with pytest.raises(ValueError):
        StateLabel.parse("up")


def test_alpha_approx_examples():
    assert alpha_approx(WalkCounters(2, 0)) == 1.0
    assert alpha_approx(WalkCounters(1, 1)) == 0.5
    assert alpha_approx(WalkCounters(55, 45)) == 0.55
    with pytest.raises(ValueError):
        alpha_approx(WalkCounters(0, 0))


def test_hadamard_update_examples():
    out = apply_hadamard_update(QubitState(INV_SQRT2, INV_SQRT2))
    assert abs(out.alpha - 1.0) < 1e-12 and abs(out.beta) < 1e-12
    out = apply_hadamard_update(QubitState(1.0, 0.0))
    assert abs(out.alpha - INV_SQRT2) < 1e-12 and abs(out.beta - INV_SQRT2) < 1e-12
    out = apply_hadamard_update(QubitState(INV_SQRT2, -INV_SQRT2))
    assert abs(out.alpha) < 1e-12 and abs(out.beta - 1.0) < 1e-12


@pytest.mark.parametrize("j0,j1,h,expected,tie", [
    (60, 40, False, StateLabel.ZERO, False),
    (40, 60, False, StateLabel.ONE, False),
    (10, 90, True, StateLabel.MINUS, False),
    (90, 10, True, StateLabel.PLUS, False),
    (50, 50, False, StateLabel.ZERO, True),
    (50, 50, True, StateLabel.PLUS, True),
])
def test_classify_table(j0, j1, h, expected, tie):
    assert classify(WalkCounters(j0, j1), h) == (expected, tie)


def test_classify_rejects_empty_counters():
    with pytest.raises(ValueError):
        classify(WalkCounters(0, 0), False)


def test_decision_rule_validation():
    DecisionRule()
    DecisionRule(k=5, i1=0.2, i2=0.8)
    # interval bounds are irrelevant outside interval mode
    DecisionRule(mode="never-apply-h", i1=0.9, i2=0.1)
    with pytest.raises(ValueError):
        DecisionRule(mode="sometimes")
    with pytest.raises(ValueError):
        DecisionRule(k=0)
    with pytest.raises(ValueError):
        DecisionRule(i1=0.5, i2=0.5)
    with pytest.raises(ValueError):
        DecisionRule(i1=-0.1)
    with pytest.raises(ValueError):
        DecisionRule(i2=1.1)


def test_run_trial_validates_iterations():
    with pytest.raises(ValueError, match="k=200.*r=100"):
        run_trial(StateLabel.PLUS, WalkParams(2), DecisionRule(k=200), 100, substream(0, 0))
    with pytest.raises(ValueError):
        run_trial(StateLabel.PLUS, WalkParams(2), DecisionRule(), 0, substream(0, 0))


@pytest.mark.parametrize("state", ALL_STATES)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_run_trial_counter_conservation(state, seed):
    r = 57
    out = run_trial(state, WalkParams(2), DecisionRule(), r, substream(seed, 0))
    assert out.counters.j0 + out.counters.j1 == r
    assert len(out.trace) == r
    assert [row[0] for row in out.trace] == list(range(1, r + 1))
    # trace alpha_approx is the running ratio
    j0 = 0
    for i, row in enumerate(out.trace, start=1):
        j0 += row[1] == 0
        assert row[4] == j0 / i
    assert out.trace[-1][4] == out.counters.j0 / r


def test_run_trial_deterministic():
    a = run_trial(StateLabel.MINUS, WalkParams(2), DecisionRule(), 100, substream(9, 4))
    b = run_trial(StateLabel.MINUS, WalkParams(2), DecisionRule(), 100, substream(9, 4))
    assert a == b


@pytest.mark.parametrize("seed", range(30))
def test_h_fires_iff_first_two_outcomes_differ(seed):
    out = run_trial(StateLabel.PLUS, WalkParams(2), DecisionRule(), 10, substream(77, seed))
    differ = out.trace[0][1] != out.trace[1][1]
    assert out.h_applied == differ


@pytest.mark.parametrize("state", ALL_STATES)
@pytest.mark.parametrize("seed", range(10))
def test_decided_basis_matches_h(state, seed):
    out = run_trial(state, WalkParams(2), DecisionRule(), 31, substream(5150, seed))
    assert out.h_applied == (out.decided_basis == "hadamard")
    assert out.h_applied == out.decided_state.is_hadamard
    assert out.tie == (out.counters.j0 == out.counters.j1)


@pytest.mark.parametrize("state", [StateLabel.ZERO, StateLabel.ONE])
@pytest.mark.parametrize("seed", range(10))
def test_basis_states_hold_until_h(state, seed):
    # amplitudes cannot move off (1,0)/(0,1); after H the walk starts at 1/sqrt2
    out = run_trial(state, WalkParams(1), DecisionRule(), 20, substream(31, seed))
    first = out.trace[0]
    assert abs(abs(first[2]) + abs(first[3]) - 1.0) < 1e-12
    if out.h_applied:
        row_k = out.trace[1]
        assert abs(abs(row_k[2]) - INV_SQRT2) < 1e-12
        assert abs(abs(row_k[3]) - INV_SQRT2) < 1e-12


def test_never_mode_skips_rotation():
    count_zero = 0
    for i in range(1000):
        out = run_trial(StateLabel.ZERO, WalkParams(1),
                        DecisionRule(mode="never-apply-h"), 100, substream(606, i))
        assert not out.h_applied
        assert out.decided_basis == "computational"
        count_zero += out.decided_state is StateLabel.ZERO
    assert count_zero >= 999


def test_always_mode_rotates_every_trial():
    for i in range(20):
        out = run_trial(StateLabel.ONE, WalkParams(1),
                        DecisionRule(mode="always-apply-h"), 10, substream(909, i))
        assert out.h_applied
        assert out.decided_state in (StateLabel.PLUS, StateLabel.MINUS)


def test_h_rate_matches_enumeration():
    trials = 10_000
    fired = sum(
        run_trial(StateLabel.PLUS, WalkParams(2), DecisionRule(), 2, substream(1717, i)).h_applied
        for i in range(trials)
    )
    sigma = math.sqrt(P_H_MU2 * (1 - P_H_MU2) / trials)
    assert abs(fired / trials - P_H_MU2) < 3 * sigma


def test_tie_possible_only_at_even_r():
    for i in range(200):
        out = run_trial(StateLabel.PLUS, WalkParams(2), DecisionRule(), 5, substream(42, i))
        assert not out.tie
