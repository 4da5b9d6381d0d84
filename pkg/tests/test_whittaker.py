from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.special import kv

from g2forms import whittaker as wh
from g2forms.suites import BESSEL_NUS, MELLIN_GRID, ODE_GRID, ODE_WS
from g2forms.whittaker import WhittakerParams

W0 = (0, 1, -1, 0)


@pytest.mark.parametrize("nu", [0, 0.5, 1, 2.5, 7, 18.3, 30])
@pytest.mark.parametrize("x", [0.1, 0.37, 1.0, 4.2, 17.0, 50.0])
def test_bessel_k_against_oracles(nu, x):
    got = wh.bessel_k(nu, x)
    assert abs(got - kv(nu, x)) <= 1e-10 * kv(nu, x)
    ref = mpmath.besselk(nu, x)
    assert abs(mpmath.mpf(got) - ref) <= 1e-10 * ref


def test_bessel_half_order_closed_form():
    assert abs(wh.bessel_k(0.5, 1.0) - math.sqrt(math.pi / 2) * math.exp(-1)) < 1e-15
    assert abs(wh.bessel_k(0.5, 1.0) - 0.461068504447894) < 1e-12


def test_bessel_fd_identities():
    h = 1e-3
    d0 = (wh.bessel_k(0, 2 + h) - wh.bessel_k(0, 2 - h)) / (2 * h)
    assert abs(-d0 - wh.bessel_k(1, 2)) < 1e-6
    d2 = (wh.bessel_k(2, 3 + h) - wh.bessel_k(2, 3 - h)) / (2 * h)
    assert abs(wh.bessel_k(1, 3) + wh.bessel_k(3, 3) + 2 * d2) < 1e-6


def test_bessel_errors_and_scaling():
    with pytest.raises(ValueError):
        wh.bessel_k(1, 0.0)
    with pytest.raises(OverflowError):
        wh.bessel_k(400, 0.1)
    m, e = wh.bessel_k_scaled(400, 0.1)
    assert 1 <= m < math.e
    assert abs(math.log(m) + e - float(mpmath.log(mpmath.besselk(400, 0.1)))) < 1e-9


def test_recurrence_cross_check():
    for x in (0.5, 3.0, 12.0):
        rec = wh.bessel_k_recurrence(6, x)
        for n, val in enumerate(rec):
            assert abs(val - wh.bessel_k(n, x)) <= 1e-11 * val


@pytest.mark.parametrize("nu", BESSEL_NUS)
def test_bessel_identity_suite(nu):
    for x in np.geomspace(0.3, 20, 12):
        assert max(wh.bessel_identity_residuals(nu, float(x))) <= 1e-8


def test_w_nonneg_examples():
    assert wh.w_nonneg(W0)
    assert not wh.w_nonneg((1, 0, 0, 1))
    assert wh.w_nonneg((1, 0, 0, 0))
    assert wh.w_nonneg((0.5, 0.0, -0.5, 0.0))
    with pytest.raises(ValueError):
        wh.w_nonneg((0, 0, 0, 0))


def test_h_w_poly():
    assert list(wh.h_w_poly((1, 2, 3, 4))) == [1, 2, 3, 4]
    assert wh.h_w_eval((1, 0, 0, 1), 1j) == 1 - 1j


@given(st.floats(-1, 1), st.floats(0.3, 3), st.floats(0.2, 2), st.integers(-2, 2))
def test_phase_unit_modulus(x, y, s, v):
    p = WhittakerParams(2, W0, x, y, s)
    val = wh.whittaker_component(p, v)
    k = wh.bessel_k(v, abs(wh.j_factor(p.m()) * wh.h_w_eval(W0, wh.mobius_i(p.m()))))
    det = s * s
    assert abs(abs(val) - det ** 2 * det * k) <= 1e-12 * abs(val)


def test_v0_diagonal_value():
    n, y, s = 2, 1.3, 0.7
    w = (1, -1, -2, 1)
    val = wh.whittaker_component(WhittakerParams(n, w, 0.0, y, s), 0)
    u = abs(wh.h_w_eval(w, 1j * y)) * y ** -1.5 * s
    assert abs(val - s ** (2 * n + 2) * kv(0, u)) <= 1e-12 * abs(val)


def test_decay_matches_asymptotics():
    n, y = 1, 1.3
    prev = None
    for s in (20.0, 40.0, 80.0):
        val = abs(wh.whittaker_component(WhittakerParams(n, W0, 0.1, y, s), 0))
        u = abs(wh.h_w_eval(W0, complex(0.1, y))) * y ** -1.5 * s
        ratio = val / (s ** (2 * n + 2) * math.sqrt(math.pi / (2 * u)) * math.exp(-u))
        assert abs(ratio - 1) < 0.2 / u
        assert prev is None or val < prev
        prev = val


def test_full_vector():
    p = WhittakerParams(1, W0, 0.1, 1.3, 0.7)
    full = wh.whittaker_full(p)
    assert full.shape == (3,)
    assert abs(full[1] - wh.whittaker_component(p, 0)) < 1e-15 * abs(full[1]) + 1e-300
    for n in (1, 2, 3):
        p = WhittakerParams(n, (1, -1, -2, 1), -0.4, 0.8, 1.1)
        for v in range(1, n + 1):
            a, b = wh.whittaker_component(p, v), wh.whittaker_component(p, -v)
            assert abs(a - b.conjugate()) <= 1e-12 * abs(a)


def test_evaluation_errors():
    with pytest.raises(ValueError):
        wh.whittaker_component(WhittakerParams(1, (1, 0, 0, 1), 0.1, 1.0, 1.0), 0)
    with pytest.raises(ValueError):
        WhittakerParams(0, W0, 0, 1, 1)
    with pytest.raises(ValueError):
        WhittakerParams(1, W0, 0, -1, 1)
    with pytest.raises(ValueError):
        wh.whittaker_component(WhittakerParams(1, W0, 0, 1, 1), 2)


def test_ode_example():
    for scale in (1.0, 2 * math.pi):
        w = tuple(scale * t for t in W0)
        res = wh.ode_residuals(WhittakerParams(2, w, 0.1, 1.3, 0.7), 1e-4)
        assert max(float(np.max(r)) for r in res.values()) < 1e-5


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("w", ODE_WS)
def test_ode_grid(n, w):
    for x, y, s in ODE_GRID:
        p = WhittakerParams(n, w, x, y, s)
        assert max(float(np.max(r)) for r in wh.ode_residuals(p).values()) <= 1e-5
        assert max(float(np.max(r)) for r in wh.gk_residuals(p).values()) <= 1e-5


def test_ode_controls():
    p = WhittakerParams(2, W0, 0.1, 1.3, 0.7)
    zero = wh.ode_residuals(p, phi=lambda k, x, y, s: 0j)
    assert all(float(np.max(r)) == 0 for r in zero.values())
    base = wh._phi_closed(p)
    pert = wh.ode_residuals(p, phi=lambda k, x, y, s: base(k, x, y, s) * (1 + 0.01 * k))
    assert max(float(np.max(r)) for r in pert.values()) > 1e-3


@pytest.mark.parametrize("w", ODE_WS)
def test_collapse_and_phase(w):
    for n in (1, 2, 3):
        p = WhittakerParams(n, w, 0.1, 1.3, 0.7)
        assert wh.profile_collapse(p, (0.3, 0.7, 1.5)) <= 1e-6
        assert wh.phase_recursion(p) <= 1e-10


@pytest.mark.parametrize("w", ODE_WS)
def test_pairing_form_of_whittaker(w):
    p = WhittakerParams(2, w, 0.1, 1.3, 0.7)
    for v in range(-2, 3):
        lhs = wh.whittaker_component(p, v)
        rhs = wh.whittaker_via_pairing(2, tuple(-t for t in w), p.m(), v)
        assert abs(lhs - rhs) <= 1e-12 * abs(lhs)


def _agree(pair, tol=1e-10):
    lhs, rhs = (np.atleast_1d(np.array(t, dtype=complex)) for t in pair)
    return float(np.max(np.abs(lhs - rhs))) <= tol * max(1.0, float(np.max(np.abs(rhs))))


def test_pairing_lemma_identity_m():
    for key, pair in wh.pairing_lemma_check((1, -1, -2, 1), 0.0, 1.0, 1.0).items():
        assert _agree(pair), key


@given(st.floats(-2, 2), st.floats(0.2, 3), st.floats(0.2, 3),
       st.lists(st.floats(-3, 3), min_size=4, max_size=4))
def test_pairing_lemma_random(x, y, s, pchi):
    for key, pair in wh.pairing_lemma_check(pchi, x, y, s).items():
        assert _agree(pair, 1e-9), key


def test_pairing_lemma_homogeneity():
    pchi, t = (1, -1, -2, 1), 1.7
    a = wh.pairing_lemma_check(pchi, 0.3, 1.1, 0.9)
    b = wh.pairing_lemma_check(pchi, 0.3, 1.1, 0.9 * t)
    for key in ("1", "2", "3", "4"):
        assert abs(b[key][0] - t * a[key][0]) <= 1e-10 * abs(b[key][0])
        assert abs(b[key][1] - t * a[key][1]) <= 1e-10 * abs(b[key][1])


def test_mellin_examples():
    lhs, rhs = wh.mellin_kk(2, 0, 0)
    assert rhs == pytest.approx(0.5, rel=1e-14) and abs(lhs - 0.5) < 1e-6
    lhs, rhs = wh.mellin_kk(3, 0.5, 0.5)
    assert abs(rhs - math.pi / 8) < 1e-13 and abs(lhs - math.pi / 8) < 1e-6 * math.pi
    assert wh.mellin_kk(4.5, 1.0, 0.3) == pytest.approx(wh.mellin_kk(4.5, 0.3, 1.0), rel=1e-9)
    with pytest.raises(ValueError):
        wh.mellin_kk(1, 0.5, 0.5)


@pytest.mark.parametrize("s,mu,nu", MELLIN_GRID)
def test_mellin_grid(s, mu, nu):
    lhs, rhs = wh.mellin_kk(s, mu, nu)
    assert abs(lhs - rhs) <= 1e-6 * abs(rhs)
    ref = mpmath.quad(lambda t: mpmath.besselk(mu, t) * mpmath.besselk(nu, t) * t ** (s - 1), [0, 1, mpmath.inf])
    assert abs(rhs - float(ref)) <= 1e-8 * abs(rhs)


@pytest.mark.parametrize("s,r,y", [(1.0, 1.0, 1.0), (1.5, 2.0, 0.5), (2.25, 0.7, 1.3)])
def test_fourier_identity(s, r, y):
    lhs, rhs = wh.fourier_bessel_check(s, r, y)
    assert abs(lhs - rhs) <= 1e-8 * abs(rhs)


def test_multinomial_examples():
    lhs, rhs = wh.multinomial_bessel_check(3, 3, 1.2)
    assert lhs == pytest.approx(wh.bessel_k(0, 1.2), rel=1e-15) == rhs
    lhs, rhs = wh.multinomial_bessel_check(1, 0, 2.0)
    assert lhs == pytest.approx(2 * wh.bessel_k(1, 2.0), rel=1e-14)
    assert rhs == pytest.approx(2 * wh.bessel_k(1, 2.0), rel=1e-14)
    lhs, rhs = wh.multinomial_bessel_check(4, 0, 1.5)
    assert abs(lhs - rhs) <= 1e-8 * abs(rhs)
    ref = 16 * mpmath.diff(lambda t: mpmath.besselk(0, t), 1.5, 4)
    assert abs(rhs - float(ref)) <= 1e-8 * abs(rhs)


@pytest.mark.parametrize("N", range(6))
def test_multinomial_up_to_five(N):
    for x in (0.5, 1.5, 2.0, 4.0):
        lhs, rhs = wh.multinomial_bessel_check(N, 0, x)
        assert abs(lhs - rhs) <= 1e-8 * abs(rhs)


def test_trinomial_vs_binomial():
    for n in (1, 2, 3):
        lhs, rhs = wh.pairing_sum_check(n, 0.7 + 0.2j, 0.3, 1.2)
        assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


def test_arch_x_data():
    coeffs, nsq = wh.arch_x_data(1 + 2j, 0.0, 2.0)
    assert coeffs[1] == 0
    assert nsq == pytest.approx(5 / 4)
    assert wh.arch_x_data(0, 0, 1.0)[1] == 0
    assert wh.arch_x_data(0.1j, -0.3, -1.5)[1] > 0
    with pytest.raises(ValueError):
        wh.arch_x_data(1, 1, 0)


@given(st.lists(st.floats(-3, 3), min_size=4, max_size=4))
def test_alpha_pairing_identity_m(v):
    a, b, c, d = v
    assert abs(wh.alpha_pairing(v, np.eye(2)) - (a * 1j + b - 1j * c - d)) < 1e-12


def test_j_nu():
    p = (1, 0, -1, 0)
    r1, r2, ok = wh.j_nu_two_resolutions(p, 2.0)
    assert ok and r1.value > 0 and abs(r1.value - r2.value) <= 1e-4 * r1.value
    lam = 2.0
    scaled = wh.j_nu(tuple(lam * t for t in p), 2.0).value
    assert scaled == pytest.approx(r1.value * lam ** -4, rel=1e-6)
    with pytest.raises(ValueError):
        wh.j_nu(p, 0.2)


@pytest.mark.slow
def test_shintani_ratio_smooth():
    nus = np.linspace(1.6, 2.4, 5)
    vals = np.array([wh.shintani_ratio((1, 0, -1, 0), float(nu)) for nu in nus])
    assert np.all(vals > 0)
    second = np.abs(np.diff(vals, 2))
    assert float(np.max(second)) < 0.05 * float(np.max(np.abs(vals)))


def test_gamma_forms():
    a, b = wh.arch_gamma_check(4, 2), wh.arch_gamma_check(6, 2)
    assert abs(a[0] - a[1]) <= 1e-8 * a[1] and abs(b[0] - b[1]) <= 1e-8 * b[1]
    for n in (2, 3, 4):
        for s in (3.5, 4.0, 6.0, 7.25):
            lhs, rhs = wh.arch_gamma_check(s, n)
            assert abs(lhs - rhs) <= 1e-8 * abs(rhs)


def test_gamma_poles_and_growth():
    assert wh.arch_gamma_poles(2, -3, 1) == [-3.0, -2.0, -1.0, 0.0, 1.0]
    with pytest.raises(ValueError):
        wh.arch_gamma_ratio(1.0, 2)
    vals = [wh.arch_gamma_ratio(s, 2) for s in np.linspace(3, 10, 15)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
