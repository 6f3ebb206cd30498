import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq
from scipy.special import airy as sp_airy

from airybox.airy_solver import (
    ALPHA_MAX,
    EigenSearchError,
    FieldProblem,
    boundary_forces,
    characteristic,
    characteristic_derivative,
    eigenfunction,
    eigenvalues,
    force_sweep,
    j_analytic,
    j_quadrature,
    wavefunction,
    zero_field_eigenvalues,
)
from airybox.fd_solver import fd_spectrum
from airybox.quadrature import gauss_rule, integrate, integrate_panels

PI2_4 = math.pi ** 2 / 4


def scipy_eigenvalues(alpha, count):
    """Independent route: scipy Airy functions, dense scan, Brent polishing."""
    a23 = alpha ** (2 / 3)

    def d(b):
        ai1, _, bi1, _ = sp_airy(-(b - alpha) / a23)
        ai2, _, bi2, _ = sp_airy(-(b + alpha) / a23)
        return ai1 * bi2 - ai2 * bi1

    grid = np.arange(-alpha, -alpha + 4000, 0.05)
    vals = [d(b) for b in grid]
    out = []
    for b0, b1, v0, v1 in zip(grid, grid[1:], vals, vals[1:]):
        if v0 * v1 < 0:
            out.append(brentq(d, b0, b1, xtol=1e-14, rtol=1e-15))
            if len(out) == count:
                break
    return out


# --- problem and characteristic function ---------------------------------

@pytest.mark.parametrize("alpha", [-1.0, ALPHA_MAX * 1.01, math.nan, math.inf])
def test_field_problem_rejects(alpha):
    with pytest.raises(ValueError):
        FieldProblem(alpha)


def test_etas_differ_by_twice_cbrt_alpha():
    for a in (0.5, 10.0, 100.0, 1000.0):
        p = FieldProblem(a)
        for b in (-a, 0.0, 37.0, 900.0):
            eh, eb = p.etas(b)
            assert eh - eb == pytest.approx(2 * a ** (1 / 3), rel=1e-12)


def test_characteristic_no_root_below_potential_minimum():
    p = FieldProblem(10.0)
    ref = math.copysign(1.0, characteristic(p, -10.0))
    for b in np.linspace(-11.0, -10.0, 101):
        assert math.copysign(1.0, characteristic(p, b)) == ref


def test_characteristic_alternates_between_eigenvalues(solved):
    for a, (p, states) in solved.items():
        signs = [math.copysign(1, characteristic(p, 0.5 * (s.beta + t.beta)))
                 for s, t in zip(states, states[1:])]
        assert all(u != v for u, v in zip(signs, signs[1:]))


def test_characteristic_domain_error():
    with pytest.raises(ValueError):
        characteristic(FieldProblem(0.0), 1.0)


@pytest.mark.parametrize("alpha,beta", [(10.0, 5.0), (50.0, 5.483182641328), (100.0, -30.0), (3.0, 80.0)])
def test_characteristic_derivative_finite_difference(alpha, beta):
    p = FieldProblem(alpha)
    h = 1e-6
    fd = (characteristic(p, beta + h) - characteristic(p, beta - h)) / (2 * h)
    assert characteristic_derivative(p, beta) == pytest.approx(fd, rel=1e-6)


def test_characteristic_derivative_at_second_state(solved):
    p, states = solved[50.0]
    b = states[1].beta
    h = 1e-6
    fd = (characteristic(p, b + h) - characteristic(p, b - h)) / (2 * h)
    assert characteristic_derivative(p, b) == pytest.approx(fd, rel=1e-6)


# --- eigenvalues -----------------------------------------------------------

@pytest.mark.parametrize("alpha", [10.0, 50.0, 100.0])
def test_eigenvalues_match_independent_scipy_route(solved, alpha):
    _, states = solved[alpha]
    ref = scipy_eigenvalues(alpha, 10)
    for s, b in zip(states, ref):
        assert abs(s.beta - b) < 1e-9 * max(1.0, abs(b))


def test_eigenstate_invariants(solved):
    for a, (p, states) in solved.items():
        betas = [s.beta for s in states]
        assert all(x < y for x, y in zip(betas, betas[1:]))
        for s in states:
            assert s.eta_hat - s.eta_bar == pytest.approx(2 * a ** (1 / 3), rel=1e-12)
            assert abs(characteristic(p, s.beta)) < 1e-10
            vh, vb = sp_airy(s.eta_hat), sp_airy(s.eta_bar)
            assert abs(vh[0] / vh[2] - vb[0] / vb[2]) < 1e-9
            assert s.j_norm > 0
            assert s.amplitude == pytest.approx(math.sqrt(2 * a ** (1 / 3) / s.j_norm), rel=1e-15)


def test_small_field_approaches_sine_spectrum():
    states = eigenvalues(FieldProblem(1e-3), 4)
    for s in states:
        assert abs(s.beta - s.k ** 2 * PI2_4) < 1e-2


def test_fd_oracle_agreement_alpha_10(solved):
    _, states = solved[10.0]
    spec = fd_spectrum(10.0, 4000, 4)
    for s, b in zip(states, spec.eigenvalues):
        assert abs(s.beta - b) < 5e-4


def test_relative_field_effect_decays_with_k():
    states = eigenvalues(FieldProblem(10.0), 30)
    dev = [abs(s.beta - s.k ** 2 * PI2_4) / abs(s.beta) for s in states]
    assert dev[29] < dev[0]
    assert all(x > y for x, y in zip(dev[4:], dev[5:]))


def test_eigen_search_reports_failing_state():
    # tiny alpha pushes eta_bar past the Airy domain quickly
    with pytest.raises(EigenSearchError) as info:
        eigenvalues(FieldProblem(1e-7), 3)
    assert info.value.k >= 1


@pytest.mark.parametrize("count", [0, -2])
def test_eigenvalue_count_checked(count):
    with pytest.raises(ValueError):
        eigenvalues(FieldProblem(10.0), count)


# --- zero field ------------------------------------------------------------

def test_zero_field_states():
    states = zero_field_eigenvalues(10)
    assert states[0].beta == PI2_4
    assert states[2].beta == 9 * PI2_4
    for s in states:
        assert s.beta == s.k * s.k * math.pi ** 2 / 4
        assert s.zero_field and s.w is None and s.j_norm is None and s.amplitude is None


def test_zero_field_routes_from_eigenvalues():
    assert eigenvalues(FieldProblem(0.0), 3) == zero_field_eigenvalues(3)


def test_zero_field_normalisation_and_forces():
    p = FieldProblem(0.0)
    for s in zero_field_eigenvalues(5):
        norm = 0.5 * integrate(lambda x: eigenfunction(s, p, x) ** 2, -1.0, 1.0, gauss_rule(64))
        assert norm == pytest.approx(1.0, abs=1e-12)
        fb = boundary_forces(s, p)
        assert fb.force_left == fb.force_right == 2 * s.beta
    assert eigenfunction(zero_field_eigenvalues(1)[0], p, 0.0) == pytest.approx(math.sqrt(2), abs=1e-15)


# --- eigenfunctions --------------------------------------------------------

@pytest.mark.parametrize("alpha", [10.0, 100.0])
def test_wavefunction_contract(solved, alpha):
    p, states = solved[alpha]
    rule = gauss_rule(64)
    xs = np.linspace(-1, 1, 2001)
    h = xs[1] - xs[0]
    for s in states[:4]:
        assert abs(eigenfunction(s, p, -1.0)) < 1e-9
        assert abs(eigenfunction(s, p, 1.0)) < 1e-9

        def psi2(x):
            return eigenfunction(s, p, x) ** 2

        one = 0.5 * integrate_panels(psi2, -1.0, 1.0, 1, rule)
        two = 0.5 * integrate_panels(psi2, -1.0, 1.0, 2, rule)
        assert abs(one - 1) < 1e-9 and abs(two - 1) < 1e-9
        psi = wavefunction(s, p, xs)
        interior = psi[1:-1]
        changes = np.count_nonzero(np.sign(interior[1:]) != np.sign(interior[:-1]))
        assert changes == s.k - 1
        second = (psi[:-2] - 2 * psi[1:-1] + psi[2:]) / h ** 2
        resid = -second - alpha * xs[1:-1] * psi[1:-1] - s.beta * psi[1:-1]
        assert np.max(np.abs(resid)) < 1e-4 * abs(s.beta)


def test_sign_convention_positive_left_slope(solved):
    for a, (p, states) in solved.items():
        for s in states:
            assert eigenfunction(s, p, -1.0 + 1e-4) > 0


def test_eigenfunction_outside_box():
    p = FieldProblem(10.0)
    s = eigenvalues(p, 1)[0]
    with pytest.raises(ValueError):
        eigenfunction(s, p, 1.0001)


# --- normalisation identity and forces ------------------------------------

def test_j_identity(solved):
    for a, (p, states) in solved.items():
        for s in states:
            jq = j_quadrature(s)
            assert abs(jq - j_analytic(s)) / jq < 1e-9
            assert j_analytic(s) > 0
            # panel splitting changes nothing at this level
            assert abs(j_quadrature(s, panels=2) - jq) / jq < 1e-12


def test_j_quadrature_normalised_states(solved):
    p, states = solved[50.0]
    q = eigenvalues(p, 10, j_method="quadrature")
    for s, t in zip(states, q):
        assert t.beta == s.beta
        assert t.j_norm == pytest.approx(s.j_norm, rel=1e-9)


def test_equilibrium_with_quadrature_normalisation():
    for a in (10.0, 50.0, 100.0):
        p = FieldProblem(a)
        for fb in force_sweep(p, 10, j_method="quadrature"):
            assert fb.force_left >= 0 and fb.force_right >= 0
            assert abs(fb.difference_half - a) < 1e-8 * a


def test_left_force_vanishes_for_low_states(solved):
    for a, n in ((50.0, 3), (100.0, 4)):
        p, states = solved[a]
        for s in states[:n]:
            assert boundary_forces(s, p).force_left_half < 0.05 * a


def test_force_sweep_zero_field_line():
    for fb in force_sweep(FieldProblem(0.0), 10):
        assert fb.force_left_half == fb.beta == fb.force_right_half


def test_force_sweep_alpha_100():
    fbs = force_sweep(FieldProblem(100.0), 10)
    assert [fb.k for fb in fbs] == list(range(1, 11))
    for fb in fbs[:4]:
        assert fb.force_left_half < 0.01 * 100
        assert fb.force_right_half == pytest.approx(100.0, rel=5e-3)
    for fb in fbs:
        assert fb.difference_half == pytest.approx(100.0, abs=1e-8 * 100)


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=0.5, max_value=300.0))
def test_invariants_over_alpha(alpha):
    p = FieldProblem(alpha)
    states = eigenvalues(p, 5)
    betas = [s.beta for s in states]
    assert betas[0] > -alpha
    assert all(x < y for x, y in zip(betas, betas[1:]))
    for s in states:
        jq = j_quadrature(s)
        assert abs(jq - s.j_norm) / jq < 1e-9
        fb = boundary_forces(s, p)
        # renormalise the closed-form forces with the quadrature J
        assert abs(fb.difference_half * s.j_norm / jq - alpha) < 1e-8 * max(1, alpha)
