"""Acceptance gate: every shipped guarantee, one pass/fail line each.

Each test re-derives its expected values from first principles (explicit
basis-vector constructions, brute-force sums, closed trigonometric forms)
rather than trusting the code paths under test, and prints a single

    acceptance <n> <name>: PASS|FAIL (<measured>, tol <tolerance>)

line straight to the terminal. The three documented constant mismatches
between the operator route and the closed-form route are logged with their
measured values; they pass when the functional form holds and the constant
is stable.
"""

import numpy as np
import pytest

from pathpol.bench import (
    PhaseSetting,
    SourceSpec,
    apply_bs_prime,
    evolve_prestate,
    symmetrized_input,
)
from pathpol.contextuality import (
    CASE1_SETTING,
    case2_setting,
    s_prime_value,
    s_value,
    scan_max,
)
from pathpol.correlations import (
    correlation_closed_form,
    correlation_numeric,
    fit_scaled_cosine,
    fit_sinusoid,
    g2_generalized,
    sum_identity,
)
from pathpol.detector import autocorrelation_demo, p45_intensity, project_aa
from pathpol.elements import beam_splitter, pol_phase, pol_swap, path_phase
from pathpol.observables import SigmaSpec, sigma, transfer_check
from pathpol.tensor import basis_state, is_unitary

S1 = SourceSpec(1.0, 1.0)
S2 = SourceSpec(1.0, 1.3)
TWO_SQRT2 = 2.0 * np.sqrt(2.0)


def report(capsys, number, name, ok, detail):
    with capsys.disabled():
        print(f"acceptance {number} {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"acceptance {number} {name}: {detail}"


def random_phase_settings(rng, count):
    return [
        PhaseSetting(*rng.uniform(-2.0 * np.pi, 2.0 * np.pi, 4)) for _ in range(count)
    ]


def test_1_ghz_cosine_correlation(capsys):
    rng = np.random.default_rng(101)
    worst = 0.0
    for ps in random_phase_settings(rng, 64):
        want = np.cos(ps.theta1 - ps.theta2 + ps.phi1 - ps.phi2)
        worst = max(worst, abs(correlation_closed_form(ps, S1, S2) - want))
    exact = (
        correlation_closed_form(PhaseSetting(0, 0, 0, 0), S1, S2) == 1.0
        and correlation_closed_form(PhaseSetting(np.pi, 0, 0, 0), S1, S2) == -1.0
    )
    ok = worst < 1e-12 and exact
    report(
        capsys, 1, "ghz-cosine-correlation", ok,
        f"max grid error {worst:.2e}, extremes exact {exact}, tol 1e-12",
    )


def test_2_hbt_reduction(capsys):
    theta1, theta2 = 0.9, 0.2
    worst = 0.0
    for x in np.linspace(0.0, 2.0 * np.pi, 64, endpoint=False):
        ps = PhaseSetting(theta1, theta2, float(x), 0.25)
        want = 1.0 - 0.5 * np.cos(ps.phi1 - ps.phi2 + (theta1 - theta2))
        got = g2_generalized(0, 0, 0, 0, ps, S1, S2)
        worst = max(worst, abs(got - want))
        shifted = PhaseSetting(theta1, theta2, float(x) + 1.3, 0.25 + 1.3)
        worst = max(worst, abs(g2_generalized(0, 0, 0, 0, shifted, S1, S2) - got))
    lo = g2_generalized(0, 0, 0, 0, PhaseSetting(0.0, 0.0, 0.0, 0.0), S1, S2)
    hi = g2_generalized(0, 0, 0, 0, PhaseSetting(0.0, 0.0, np.pi, 0.0), S1, S2)
    exact = lo == 0.5 and hi == 1.5
    ok = worst < 1e-12 and exact
    report(
        capsys, 2, "hbt-reduction", ok,
        f"max grid error {worst:.2e}, range exactly [0.5, 1.5] {exact}, tol 1e-12",
    )


def test_3_noncontextuality_violations(capsys):
    rng = np.random.default_rng(103)
    gap_fixed = abs(s_value(*CASE1_SETTING) - TWO_SQRT2)
    gap_anchored = max(
        abs(s_prime_value(*case2_setting(float(a))) - TWO_SQRT2)
        for a in rng.uniform(-np.pi, np.pi, 10)
    )
    gap_scan = max(
        abs(scan_max(case, 64).max_abs - TWO_SQRT2) for case in (1, 2)
    )
    ok = gap_fixed < 1e-12 and gap_anchored < 1e-12 and gap_scan < 1e-4
    report(
        capsys, 3, "noncontextuality-2sqrt2", ok,
        f"fixed gap {gap_fixed:.2e} tol 1e-12, anchored gap {gap_anchored:.2e} "
        f"tol 1e-12, scan gap {gap_scan:.2e} tol 1e-4",
    )


def test_4_detection_law(capsys):
    worst = 0.0
    for d in np.linspace(0.0, 2.0 * np.pi, 64, endpoint=False):
        ps = PhaseSetting(float(d) + 0.45, 0.2, -0.25, 0.0)  # delta = d
        state = apply_bs_prime(evolve_prestate(S1, S2, ps))
        worst = max(
            worst, abs(p45_intensity(state) - 0.5 * (1.0 - np.cos(ps.delta)))
        )
    ok = worst < 1e-12
    report(capsys, 4, "diagonal-detection-law", ok, f"max error {worst:.2e}, tol 1e-12")


def test_5_state_pipeline_goldens(capsys):
    rng = np.random.default_rng(105)
    worst = 0.0
    for _ in range(100):
        a1, a2 = rng.uniform(0.2, 3.0, 2)
        s1, s2 = SourceSpec(a1, 1.0), SourceSpec(a2, 1.3)
        ps = PhaseSetting(*rng.uniform(-2.0 * np.pi, 2.0 * np.pi, 4))
        scale = a1 * a2 / np.sqrt(2.0)
        phase = np.exp(1j * ps.delta)

        pre = evolve_prestate(s1, s2, ps)
        want_pre = scale * (basis_state(0, 0, 0, 0) - phase * basis_state(1, 1, 1, 1))
        worst = max(worst, float(np.max(np.abs(pre.vector - want_pre))))

        post = apply_bs_prime(pre)
        spread_v = (
            basis_state(0, 0, 0, 0)
            + basis_state(0, 0, 1, 0)
            + basis_state(1, 0, 0, 0)
            + basis_state(1, 0, 1, 0)
        )
        spread_h = (
            basis_state(0, 1, 0, 1)
            - basis_state(0, 1, 1, 1)
            - basis_state(1, 1, 0, 1)
            + basis_state(1, 1, 1, 1)
        )
        want_post = scale * 0.5 * (spread_v - phase * spread_h)
        worst = max(worst, float(np.max(np.abs(post.vector - want_post))))

        aa = project_aa(post)
        want_unit = np.array([1.0, 0.0, 0.0, -phase]) / np.sqrt(2.0)
        worst = max(worst, float(np.max(np.abs(aa.pol_unit - want_unit))))
    ok = worst < 1e-12
    report(
        capsys, 5, "pipeline-state-goldens", ok,
        f"max entrywise error {worst:.2e} over 100 random settings, tol 1e-12",
    )


def test_6_property_suite(capsys):
    rng = np.random.default_rng(106)
    worst = 0.0
    eye = np.eye(16)
    for _ in range(100):
        x = float(rng.uniform(-6.0, 6.0))
        sign = 1 if rng.integers(0, 2) else -1
        for m in (beam_splitter(), pol_swap(), pol_phase(x, sign), path_phase(x, sign)):
            worst = max(worst, 0.0 if is_unitary(m) else 1.0)

        source = int(rng.integers(1, 3))
        dof = "path" if rng.integers(0, 2) else "pol"
        full = sigma(SigmaSpec(source, dof, x))
        plus = sigma(SigmaSpec(source, dof, x, "plus"))
        minus = sigma(SigmaSpec(source, dof, x, "minus"))
        worst = max(worst, float(np.max(np.abs(full @ full - eye))))
        worst = max(worst, float(np.max(np.abs(plus @ plus - plus))))
        worst = max(worst, float(np.max(np.abs(plus @ minus))))
        worst = max(worst, float(np.max(np.abs(plus + minus - eye))))

        other = sigma(SigmaSpec(3 - source, dof, float(rng.uniform(-6.0, 6.0))))
        worst = max(worst, float(np.max(np.abs(full @ other - other @ full))))

        a1, a2 = rng.uniform(0.2, 3.0, 2)
        s1, s2 = SourceSpec(a1, 1.0), SourceSpec(a2, 1.3)
        ps = PhaseSetting(*rng.uniform(-2.0 * np.pi, 2.0 * np.pi, 4))
        norm_in = symmetrized_input(s1, s2).norm_squared
        norm_out = apply_bs_prime(evolve_prestate(s1, s2, ps)).norm_squared
        worst = max(worst, abs(norm_out - norm_in))
    ok = worst < 1e-12
    report(
        capsys, 6, "operator-property-suite", ok,
        f"max invariant violation {worst:.2e} over 100 rounds, tol 1e-12",
    )


def test_7_dual_route_constants_logged(capsys):
    deltas = np.linspace(0.0, 2.0 * np.pi, 64, endpoint=False)
    numeric = np.array(
        [
            correlation_numeric(PhaseSetting(float(d), 0, 0, 0), S1, S2)
            for d in deltas
        ]
    )
    kappa, fit_resid = fit_scaled_cosine(deltas, numeric)

    ratios = []
    for d in deltas:
        if abs(np.cos(d)) < 1e-3:
            continue
        rep = sum_identity(PhaseSetting(float(d), 0, 0, 0), S1, S2)
        ratios.append(rep.ratio)
    ratio_spread = float(np.max(ratios) - np.min(ratios))

    ps = PhaseSetting(0.8, 0.1, -0.3, 0.2)
    pre = evolve_prestate(S1, S2, ps)
    chain = transfer_check(pre, apply_bs_prime(pre), ps)

    ok = (
        fit_resid < 1e-10
        and ratio_spread < 1e-10
        and chain.max_difference < 1e-12
        and chain.conjugation_residual < 1e-12
    )
    report(
        capsys, 7, "dual-route-constants", ok,
        f"cosine fit residual {fit_resid:.2e} tol 1e-10 (scale {kappa:+.3f} logged, "
        f"stated +1), signed-sum ratio spread {ratio_spread:.2e} tol 1e-10 "
        f"(constant {np.mean(ratios):+.3f} logged, stated +1), transfer brackets "
        f"agree to {chain.max_difference:.2e} (value {chain.value_final:.6f} logged)",
    )


def test_8_time_domain_autocorrelation(capsys):
    ps = PhaseSetting(0.7, 0.2, 0.4, -0.3)
    beat = abs(S1.omega - S2.omega)

    base = autocorrelation_demo(S1, S2, ps, 1000.0 / beat, 10_000)
    halving = [
        autocorrelation_demo(S1, S2, ps, m * np.pi / beat, n).residual
        for m, n in ((317, 20_001), (635, 40_064), (1271, 80_191))
    ]
    halves = all(
        0.4 < halving[i + 1] / halving[i] < 0.6 for i in range(len(halving) - 1)
    )

    window = 2.0 * np.pi * 160.0 / beat
    deltas = np.linspace(0.0, 2.0 * np.pi, 16, endpoint=False)
    cross = []
    for d in deltas:
        setting = PhaseSetting(
            float(d) + ps.theta2 + ps.phi2 - ps.phi1, ps.theta2, ps.phi1, ps.phi2
        )
        rep = autocorrelation_demo(S1, S2, setting, window, 10_000)
        cross.append(rep.cross_measured / window)
    coeffs, fit_resid = fit_sinusoid(deltas, np.asarray(cross))
    amplitude = float(np.hypot(coeffs[1], coeffs[2]))
    rel_resid = fit_resid / amplitude

    ok = base.residual < 1e-2 and halves and rel_resid < 1e-3
    report(
        capsys, 8, "windowed-autocorrelation", ok,
        f"residual {base.residual:.2e} at window*beat=1e3 tol 1e-2, doubling "
        f"ratios {[f'{halving[i + 1] / halving[i]:.3f}' for i in range(2)]}, "
        f"cosine fit residual {rel_resid:.2e} of amplitude tol 1e-3",
    )
