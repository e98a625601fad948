import math

import numpy as np
import pytest

from qsdwalk.discriminate import StateLabel
from qsdwalk.gates import PhaseRoot
from qsdwalk.oracle import (
    RegisterState,
    apply_p,
    ax_marginal,
    phase_table,
    prepare_register,
    project_ax,
    psi_moduli,
    relative_phase,
    walk_agreement,
)
from qsdwalk.rng import substream
from qsdwalk.walk import QubitState, WalkParams, ax_probabilities, collapse_update

INV_SQRT2 = 1 / math.sqrt(2)
TOL = 1e-12


def basis_register(n: int, index: int, mu: int) -> RegisterState:
    amps = np.zeros(2 ** n, dtype=complex)
    amps[index] = 1.0
    return RegisterState(amps, mu)


def test_prepare_basis_placement():
    reg = prepare_register(StateLabel.ZERO, 1)
    # |0,1,0> is index 0b010
    assert reg.amps[0b010] == 1.0
    assert np.count_nonzero(reg.amps) == 1

    reg = prepare_register(StateLabel.PLUS, 0)
    assert abs(reg.amps[0b00] - INV_SQRT2) < TOL
    assert abs(reg.amps[0b10] - INV_SQRT2) < TOL

    reg = prepare_register(StateLabel.PLUS, 2)
    nz = np.flatnonzero(reg.amps)
    assert list(nz) == [0b0110, 0b1110]
    assert np.allclose(reg.amps[nz], INV_SQRT2)


def test_prepare_accepts_amplitudes():
    reg = prepare_register(QubitState(0.6, 0.8), 1)
    assert abs(reg.amps[0b010] - 0.6) < TOL
    assert abs(reg.amps[0b110] - 0.8) < TOL


def test_prepare_rejects_mu_out_of_range():
    with pytest.raises(ValueError):
        prepare_register(StateLabel.ZERO, 21)
    with pytest.raises(ValueError):
        prepare_register(StateLabel.ZERO, -1)


def test_register_validates_shape_and_norm():
    with pytest.raises(ValueError):
        RegisterState(np.zeros(7, dtype=complex), 1)
    bad = np.zeros(8, dtype=complex)
    bad[0] = 0.5
    with pytest.raises(ValueError):
        RegisterState(bad, 1)


@pytest.mark.parametrize("mu", [0, 1, 2, 3])
def test_apply_p_full_density_flips_ax(mu):
    # every control set and t equal to the control count: ax gets sigma_x
    reg = prepare_register(StateLabel.ONE, mu)
    apply_p(reg, mu + 1)
    p0, p1 = ax_marginal(reg)
    assert abs(p1 - 1.0) < TOL
    assert abs(p0) < TOL


def test_apply_p_no_controls_is_identity():
    reg = basis_register(3, 0b000, 1)
    before = reg.amps.copy()
    apply_p(reg, 3)
    assert np.array_equal(reg.amps, before)


def test_apply_p_rejects_bad_t():
    with pytest.raises(ValueError):
        apply_p(prepare_register(StateLabel.ZERO, 1), 0)


def test_marginal_fresh_register():
    p0, p1 = ax_marginal(prepare_register(StateLabel.MINUS, 2))
    assert abs(p0 - 1.0) < TOL
    assert p1 == 0.0


def test_marginal_examples():
    reg = prepare_register(StateLabel.ZERO, 1)
    apply_p(reg, 3)
    p0, _ = ax_marginal(reg)
    assert abs(p0 - 0.75) < TOL

    reg = prepare_register(StateLabel.PLUS, 2)
    apply_p(reg, 5)
    p0, p1 = ax_marginal(reg)
    assert abs(p0 - 0.5) < TOL and abs(p1 - 0.5) < TOL

    reg = prepare_register(StateLabel.ZERO, 2)
    apply_p(reg, 5)
    p0, _ = ax_marginal(reg)
    assert abs(p0 - math.cos(math.pi / 5) ** 2) < TOL


@pytest.mark.parametrize("t,pattern_bits,n", [(3, 0b10, 3), (5, 0b111, 4), (7, 0b01, 3), (4, 0b1011, 5)])
def test_apply_p_product_structure(t, pattern_bits, n):
    # a basis control pattern of 1-density d leaves the register as
    # pattern (x) ((1+k^d)/2 |0> + (1-k^d)/2 |1>)
    mu = n - 2
    d = bin(pattern_bits).count("1")
    reg = basis_register(n, pattern_bits << 1, mu)
    apply_p(reg, t)
    k = PhaseRoot(t, d).value
    expected = np.zeros(2 ** n, dtype=complex)
    expected[pattern_bits << 1] = (1 + k) / 2
    expected[(pattern_bits << 1) | 1] = (1 - k) / 2
    assert np.max(np.abs(reg.amps - expected)) < TOL


@pytest.mark.parametrize("mu", range(0, 11))
def test_apply_p_preserves_norm(mu):
    rng = substream(314, mu)
    reg = prepare_register(QubitState.from_angle(rng.uniform() * 2 * math.pi), mu)
    apply_p(reg, 2 * mu + 1)
    assert abs(float(np.sum(np.abs(reg.amps) ** 2)) - 1.0) < 1e-10


def test_project_deterministic_outcome_is_identity():
    reg = prepare_register(StateLabel.ZERO, 1)
    before = reg.amps.copy()
    project_ax(reg, 0)
    assert np.array_equal(reg.amps, before)
    reg = prepare_register(StateLabel.PLUS, 1)
    before = reg.amps.copy()
    project_ax(reg, 0)
    assert np.max(np.abs(reg.amps - before)) < TOL


def test_project_rejects_zero_probability():
    with pytest.raises(ValueError):
        project_ax(prepare_register(StateLabel.PLUS, 1), 1)
    with pytest.raises(ValueError):
        project_ax(prepare_register(StateLabel.PLUS, 1), 2)


def test_project_absorbing_zero():
    reg = prepare_register(StateLabel.ZERO, 1)
    apply_p(reg, 3)
    project_ax(reg, 0)
    ma, mb = psi_moduli(reg)
    assert abs(ma - 1.0) < 1e-10 and mb < 1e-10


def test_project_plus_step_moduli():
    reg = prepare_register(StateLabel.PLUS, 2)
    apply_p(reg, 5)
    project_ax(reg, 0)
    ma, mb = psi_moduli(reg)
    assert abs(ma - 0.80902) < 1e-5
    assert abs(mb - 0.58779) < 1e-5


def test_psi_moduli_fresh():
    assert psi_moduli(prepare_register(StateLabel.ZERO, 3)) == (1.0, 0.0)
    ma, mb = psi_moduli(prepare_register(StateLabel.MINUS, 2))
    assert abs(ma - INV_SQRT2) < TOL and abs(mb - INV_SQRT2) < TOL


def test_psi_moduli_return_to_start():
    # outcomes 0 then 1 rescale both components equally from plus
    params = WalkParams(2)
    reg = prepare_register(StateLabel.PLUS, 2)
    for outcome in (0, 1):
        apply_p(reg, params.t)
        project_ax(reg, outcome)
    ma, mb = psi_moduli(reg)
    assert abs(ma - INV_SQRT2) < 1e-10 and abs(mb - INV_SQRT2) < 1e-10


def test_psi_moduli_flags_entanglement():
    reg = prepare_register(StateLabel.PLUS, 1)
    apply_p(reg, 3)
    # ax not yet projected: psi is entangled with it
    with pytest.raises(ValueError):
        psi_moduli(reg)


def test_marginal_ignores_injected_phase():
    params = WalkParams(2)
    plain = prepare_register(StateLabel.PLUS, 2)
    phased = prepare_register(StateLabel.PLUS, 2)
    half = 2 ** (plain.n - 1)
    phased.amps[half:] *= np.exp(0.7j)
    apply_p(plain, params.t)
    apply_p(phased, params.t)
    a = ax_marginal(plain)
    b = ax_marginal(phased)
    assert abs(a[0] - b[0]) < TOL and abs(a[1] - b[1]) < TOL


def test_relative_phase_fresh_plus_is_zero():
    assert relative_phase(prepare_register(StateLabel.PLUS, 2)) == 0.0


def test_relative_phase_one_step():
    reg = prepare_register(StateLabel.PLUS, 2)
    apply_p(reg, 5)
    project_ax(reg, 0)
    assert abs(relative_phase(reg) - math.pi / 10) < TOL


def test_relative_phase_two_steps_recorded():
    # value after outcomes 0,1 is whatever the register says; just well-defined
    reg = prepare_register(StateLabel.PLUS, 2)
    for outcome in (0, 1):
        apply_p(reg, 5)
        project_ax(reg, outcome)
    phase = relative_phase(reg)
    assert -math.pi < phase <= math.pi


def test_relative_phase_undefined_for_basis_state():
    with pytest.raises(ValueError):
        relative_phase(prepare_register(StateLabel.ZERO, 1))


def test_walk_agreement_small():
    worst_p, worst_m = walk_agreement(60, 4, 12, 2718)
    assert worst_p < 1e-10
    assert worst_m < 1e-10


def test_walk_agreement_validates_args():
    with pytest.raises(ValueError):
        walk_agreement(10, 21, 5, 0)
    with pytest.raises(ValueError):
        walk_agreement(0, 4, 5, 0)


def test_oracle_tracks_one_full_path():
    # single explicit path: analytic and register agree step by step
    params = WalkParams(3)
    state = QubitState.from_angle(1.05)
    reg = prepare_register(state, 3)
    for outcome in (0, 1, 1, 0, 1):
        apply_p(reg, params.t)
        p_reg = ax_marginal(reg)
        p_ana = ax_probabilities(state, params)
        assert abs(p_reg[0] - p_ana[0]) < 1e-10
        state = collapse_update(state, outcome, params)
        project_ax(reg, outcome)
        ma, mb = psi_moduli(reg)
        assert abs(ma - abs(state.alpha)) < 1e-10
        assert abs(mb - abs(state.beta)) < 1e-10


def test_phase_table_values():
    rows = phase_table(4)
    assert [mu for mu, _ in rows] == [1, 2, 3, 4]
    for mu, phase in rows:
        assert abs(phase - math.pi / (2 * (2 * mu + 1))) < TOL
