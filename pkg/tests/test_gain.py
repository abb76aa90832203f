import math
from dataclasses import replace

import pytest

from superlase import (
    alpha_beta,
    critical_coupling,
    derive,
    intracavity_photons,
    mechanical_gain,
    phonon_number,
    population_inversion,
    pump_power,
    steady_state,
    threshold_coupling,
    with_detuning,
)
from superlase.errors import BracketError, DomainError, SingularPointError

# Frozen oracles for the preset at lambda = 7.6e6 rad/s, hand-evaluated from
# delta_n = 2 g Dc/(Dc^2+gamma^2) |a2s|^2 and G0 = chi^2 delta_n/(8 gamma)
# (the 2g = omega_m resonance collapses the G0 denominator to 8 gamma^2).
DELTA_N_AT_76E5 = 56056.1200548846
GAIN_AT_76E5 = 100.36809671948564
# Root of G(lambda) = gamma_m, bisected on the oracle G0 expression.
LAMBDA_TH = 7586051.074314173  # rad/s
P_TH = 0.006362286933681245  # W


def test_population_inversion_preset_value(paper_params):
    assert population_inversion(paper_params, 7.6e6) == pytest.approx(
        DELTA_N_AT_76E5, rel=1e-10
    )


def test_population_inversion_zero_below_threshold(paper_params):
    lam_c = critical_coupling(paper_params)
    assert population_inversion(paper_params, 0.5 * lam_c) == 0.0
    assert population_inversion(paper_params, lam_c) == 0.0


def test_gain_preset_value(paper_params):
    gb = mechanical_gain(paper_params, 7.6e6)
    assert gb.gain == pytest.approx(GAIN_AT_76E5, rel=1e-10)
    assert gb.g1_term == 0.0
    assert gb.gain == gb.g0_term + gb.g1_term


def test_gain_oracle_formula_on_resonance(paper_params):
    # 2g = omega_m for the preset, so G = G0 = chi^2 delta_n / (8 gamma).
    p = paper_params
    chi = p.raw.com_coupling
    for lam in (5e6, 7.6e6, 9e6):
        gb = mechanical_gain(p, lam)
        expected = chi * chi * population_inversion(p, lam) / (8.0 * p.gamma)
        assert gb.gain == pytest.approx(expected, rel=1e-12)


def test_gain_zero_below_critical_coupling(paper_params):
    lam_c = critical_coupling(paper_params)
    gb = mechanical_gain(paper_params, 0.5 * lam_c)
    assert gb.gain == 0.0
    assert gb.delta_n == 0.0
    assert gb.g1_term == 0.0
    assert gb.freq_pull == 0.0
    assert gb.drive_c == 0j


def test_gain_pipeline_matches_brute_force(paper_raw, rng):
    # Recompute G0 + G1 from raw formulas, independent of the pipeline's
    # intermediate caching, over random off-resonant parameter draws.
    for _ in range(20):
        raw = replace(
            paper_raw,
            cavity_coupling=float(rng.uniform(0.3, 0.7)) * paper_raw.mech_freq,
            pump_cavity_detuning=float(rng.uniform(0.55, 0.95)) * paper_raw.mech_freq,
        )
        p = derive(raw)
        try:
            lam = 2.0 * critical_coupling(p)
        except SingularPointError:
            continue
        gb = mechanical_gain(p, lam)

        gamma, g, dc = p.gamma, p.g, p.detuning
        chi, om_m, n = raw.com_coupling, raw.mech_freq, raw.n_atoms
        mis = 2.0 * g - om_m
        dn = 2.0 * g * dc / (dc * dc + gamma * gamma) * intracavity_photons(p, lam)
        g0 = chi * chi * gamma * dn / (2.0 * mis * mis + 8.0 * gamma * gamma)
        jm2 = abs(steady_state(p, lam).j_minus) ** 2
        alpha, beta = alpha_beta(p)
        g1 = -(chi * chi * lam * lam * jm2 * beta * mis) / (
            n * (alpha * alpha + beta * beta) * (mis * mis + 4.0 * gamma * gamma)
        )
        assert gb.gain == pytest.approx(g0 + g1, rel=1e-12)
        assert gb.g1_term == pytest.approx(g1, rel=1e-12)


def test_alpha_beta_matches_definitions(paper_params):
    p = paper_params
    r = p.raw
    alpha, beta = alpha_beta(p)
    assert beta == p.v_coef
    expected_alpha = (
        p.gamma**2 + p.g**2 - p.detuning**2
        + (r.collective_stark_NU0 / 4.0) * 2.0 * p.detuning
    )
    assert alpha == pytest.approx(expected_alpha, rel=1e-14)
    # Phonon feedback shifts alpha but never beta.
    alpha_fb, beta_fb = alpha_beta(p, b=2.0 + 0j, n_b=10.0)
    assert beta_fb == beta
    assert alpha_fb == pytest.approx(
        expected_alpha
        + (r.collective_stark_NU0 / 4.0) * r.com_coupling * 2.0
        + (r.com_coupling**2 / 4.0) * 10.0,
        rel=1e-14,
    )
    with pytest.raises(DomainError):
        alpha_beta(p, n_b=-1.0)


def test_phonon_number_landmarks():
    assert phonon_number(100.0, 100.0) == 1.0
    assert phonon_number(200.0, 100.0) == pytest.approx(math.e**2, rel=1e-14)
    assert phonon_number(0.0, 100.0) == pytest.approx(math.e**-2, rel=1e-14)
    assert phonon_number(1e6, 1.0) == math.inf
    with pytest.raises(DomainError):
        phonon_number(1.0, 0.0)


def test_threshold_preset_value(paper_params):
    lam_th = threshold_coupling(paper_params)
    assert lam_th == pytest.approx(LAMBDA_TH, rel=1e-8)
    assert lam_th == pytest.approx(7.6e6, rel=0.02)
    gb = mechanical_gain(paper_params, lam_th)
    assert gb.n_b == pytest.approx(1.0, abs=1e-8)
    assert gb.saturated is False


def test_threshold_needs_sign_change(paper_params):
    lam_c = critical_coupling(paper_params)
    with pytest.raises(BracketError) as exc_info:
        threshold_coupling(paper_params, bracket=(1.001 * lam_c, 1.01 * lam_c))
    assert exc_info.value.f_lo < 0.0
    assert exc_info.value.f_hi < 0.0


def test_pump_power_values_and_scaling(paper_params):
    assert pump_power(LAMBDA_TH, paper_params) == pytest.approx(P_TH, rel=1e-10)
    assert pump_power(LAMBDA_TH, paper_params) == pytest.approx(6.4e-3, rel=0.05)
    base = pump_power(2e6, paper_params)
    assert pump_power(4e6, paper_params) == pytest.approx(4.0 * base, rel=1e-14)


def test_pump_power_degenerate_inputs(paper_raw):
    p = derive(replace(paper_raw, collective_stark_NU0=0.0))
    with pytest.raises(DomainError):
        pump_power(1e6, p)
