"""K-Bessel functions, the generalized Whittaker function and the archimedean integrals.

Conventions.  A character parameter w is given by the cubic coefficients (a, b, c, d)
of a x^3 + b x^2 y + c x y^2 + d y^3, so h_w(z) = a z^3 + b z^2 + c z + d.  Points of
the Borel are m = [[1, x], [0, 1]] diag(y^1/2, y^-1/2) diag(s, s) with s > 0 the scale.
The character of N used in the differential equations is omega = -w; rescaling the
rational Fourier parameters by 2 pi is left to the caller.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
from scipy import integrate
from scipy.special import gamma as gamma_fn

from .heis_so7 import act_cubic_fe_raw, symplectic_cubic

# ---------------------------------------------------------------------------
# K-Bessel functions


def log_bessel_k(nu: float, x: float, rtol: float = 1e-15) -> float:
    """log K_nu(x) from the trapezoid rule on int_0^inf exp(-x cosh t) cosh(nu t) dt.

    The integrand is analytic and decays doubly exponentially, so halving the step
    until two passes agree gives near machine precision.  Everything is scaled by
    the maximum of the exponent, so large orders do not overflow.
    """
    nu = abs(float(nu))
    x = float(x)
    if not x > 0:
        raise ValueError(f"K-Bessel argument must be positive, got {x}")
    t0 = math.asinh(nu / x) if nu > 0 else 0.0
    g0 = -x * math.cosh(t0) + nu * t0
    T = t0 + 1.0
    while -x * math.cosh(T) + nu * T > g0 - 760.0:
        T *= 1.5
    h = T / 64
    prev = None
    while True:
        t = np.arange(0.0, T + h / 2, h)
        g = -x * np.cosh(t) - g0
        vals = 0.5 * (np.exp(g + nu * t) + np.exp(g - nu * t))
        vals[0] *= 0.5
        s = h * float(vals.sum())
        if prev is not None and abs(s - prev) <= rtol * abs(s):
            break
        prev = s
        h /= 2
        if h < 1e-7:
            break
    return math.log(s) + g0


def bessel_k_scaled(nu: float, x: float) -> tuple[float, float]:
    """(mantissa, exponent) with K_nu(x) = mantissa * e^exponent and mantissa in [1, e)."""
    lg = log_bessel_k(nu, x)
    e = math.floor(lg)
    return math.exp(lg - e), float(e)


def bessel_k(nu: float, x: float) -> float:
    """K_nu(x) for x > 0.  Raises OverflowError when only bessel_k_scaled can represent it."""
    lg = log_bessel_k(nu, x)
    if lg > 709.0:
        raise OverflowError(f"K_{nu}({x}) overflows a float; use bessel_k_scaled")
    return math.exp(lg)


def bessel_k_recurrence(n_max: int, x: float) -> list[float]:
    """K_0 .. K_n_max by upward recurrence K_(k+1) = K_(k-1) + (2k/x) K_k."""
    out = [bessel_k(0, x), bessel_k(1, x)]
    for k in range(1, n_max):
        out.append(out[k - 1] + 2 * k / x * out[k])
    return out[: n_max + 1]


def bessel_derivative_combination(order: int, nu: float = 0) -> dict:
    """(d/dx)^order K_nu as {order offset: coefficient}, from K'_mu = -(K_(mu-1) + K_(mu+1))/2."""
    combo = {0: Fraction(1)}
    for _ in range(order):
        nxt: dict = {}
        for off, c in combo.items():
            for step in (-1, 1):
                nxt[off + step] = nxt.get(off + step, Fraction(0)) - c / 2
        combo = {k: v for k, v in nxt.items() if v}
    return dict(sorted(combo.items()))


def bessel_k_derivative(nu: float, x: float, order: int) -> float:
    return sum(float(c) * bessel_k(nu + off, x)
               for off, c in bessel_derivative_combination(order, nu).items())


def _fd1(f: Callable, x: float, h: float) -> float:
    """Sixth-order central first derivative."""
    return (f(x + 3 * h) - 9 * f(x + 2 * h) + 45 * f(x + h)
            - 45 * f(x - h) + 9 * f(x - 2 * h) - f(x - 3 * h)) / (60 * h)


def _fd2(f: Callable, x: float, h: float) -> float:
    return (2 * f(x + 3 * h) - 27 * f(x + 2 * h) + 270 * f(x + h) - 490 * f(x)
            + 270 * f(x - h) - 27 * f(x - 2 * h) + 2 * f(x - 3 * h)) / (180 * h * h)


def bessel_identity_residuals(nu: float, x: float, h: float | None = None) -> list[float]:
    """Relative residuals of the five standard K-Bessel identities, derivatives by finite differences.

    1. ((x d)^2 - nu^2) K_nu = x^2 K_nu
    2. -x^-nu d(x^nu K_nu) = K_(nu-1)
    3. -x^nu d(x^-nu K_nu) = K_(nu+1)
    4. -(x d - nu) K_nu = x K_(nu+1)
    5. -(x d + nu) K_nu = x K_(nu-1)
    """
    h = h if h is not None else 5e-3 * min(x, 1.0)
    K = lambda t: bessel_k(nu, t)
    k0 = K(x)
    d1 = _fd1(K, x, h)
    d2 = _fd2(K, x, h)
    km, kp = bessel_k(nu - 1, x), bessel_k(nu + 1, x)
    res = []
    lhs1 = x * x * d2 + x * d1 - nu * nu * k0
    res.append(abs(lhs1 - x * x * k0) / abs(x * x * k0))
    # 2 and 3 after expanding the product rule
    lhs2 = -(nu / x * k0 + d1)
    res.append(abs(lhs2 - km) / abs(km))
    lhs3 = -(d1 - nu / x * k0)
    res.append(abs(lhs3 - kp) / abs(kp))
    res.append(abs(-(x * d1 - nu * k0) - x * kp) / abs(x * kp))
    res.append(abs(-(x * d1 + nu * k0) - x * km) / abs(x * km))
    return res


# ---------------------------------------------------------------------------
# h_w and the positivity condition


def h_w_poly(w: Sequence) -> np.ndarray:
    """Coefficients (a, b, c, d) of h_w(z) = a z^3 + b z^2 + c z + d, highest degree first."""
    return np.array([complex(t) for t in _cubic_of(w)])


def _cubic_of(w) -> tuple:
    if hasattr(w, "cubic"):
        return tuple(w.cubic())
    t = tuple(w)
    if len(t) != 4:
        raise ValueError("a binary cubic needs four coefficients")
    return t


def h_w_eval(w: Sequence, z: complex) -> complex:
    a, b, c, d = (complex(t) for t in _cubic_of(w))
    return ((a * z + b) * z + c) * z + d


def binary_cubic_disc(f: Sequence):
    a, b, c, d = f
    return b * b * c * c - 4 * a * c ** 3 - 4 * b ** 3 * d - 27 * a * a * d * d + 18 * a * b * c * d


def w_nonneg(w: Sequence, tol: float = 1e-12) -> bool:
    """True iff the binary cubic of w splits into real linear factors (h_w has no non-real roots).

    Exact through the discriminant for integer or rational input; otherwise the roots of
    the homogeneous cubic are located numerically and tested for imaginary part <= tol.
    """
    f = _cubic_of(w)
    if all(isinstance(t, (int, Fraction)) for t in f):
        if all(t == 0 for t in f):
            raise ValueError("w = 0: the positivity condition is not defined for the trivial character")
        return binary_cubic_disc(tuple(Fraction(t) for t in f)) >= 0
    fl = [float(t) for t in f]
    if all(t == 0 for t in fl):
        raise ValueError("w = 0: the positivity condition is not defined for the trivial character")
    coeffs = np.trim_zeros(np.array(fl), "f")
    if len(coeffs) <= 1:
        return True
    roots = np.roots(coeffs)
    scale = max(1.0, float(np.max(np.abs(roots))))
    return bool(np.all(np.abs(roots.imag) <= tol * scale))


# ---------------------------------------------------------------------------
# the Whittaker function


@dataclass(frozen=True)
class WhittakerParams:
    n: int
    w: tuple
    x: float
    y: float
    scale: float = 1.0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("weight n must be a positive integer")
        if not self.y > 0 or not self.scale > 0:
            raise ValueError("y and scale must be positive")
        object.__setattr__(self, "w", tuple(float(t) for t in _cubic_of(self.w)))

    def m(self) -> np.ndarray:
        return borel_matrix(self.x, self.y, self.scale)

    def at(self, x: float | None = None, y: float | None = None,
           scale: float | None = None) -> "WhittakerParams":
        return WhittakerParams(self.n, self.w, self.x if x is None else x,
                               self.y if y is None else y, self.scale if scale is None else scale)


def borel_matrix(x: float, y: float, s: float) -> np.ndarray:
    return np.array([[1.0, x], [0.0, 1.0]]) @ np.diag([math.sqrt(y), 1 / math.sqrt(y)]) * s


def mobius_i(m) -> complex:
    (a, b), (c, d) = np.asarray(m, dtype=float)
    return (a * 1j + b) / (c * 1j + d)


def j_factor(m) -> complex:
    """j(m, i) = (c i + d)^3 det(m)^-1."""
    (a, b), (c, d) = np.asarray(m, dtype=float)
    return (c * 1j + d) ** 3 / (a * d - b * c)


def whittaker_component_m(n: int, w: Sequence, m, v: int) -> complex:
    """The component W_w^v(m) for a general invertible m."""
    if abs(v) > n:
        raise ValueError("component index outside [-n, n]")
    m = np.asarray(m, dtype=float)
    det = float(np.linalg.det(m))
    if det == 0:
        raise ValueError("singular matrix")
    jh = j_factor(m) * h_w_eval(w, mobius_i(m))
    r = abs(jh)
    if r == 0:
        raise ValueError("h_w vanishes at the evaluation point")
    phase = (r / jh) ** v
    return phase * det ** n * abs(det) * bessel_k(v, r)


def whittaker_component(params: WhittakerParams, v: int) -> complex:
    if not w_nonneg(params.w):
        raise ValueError("w is not >= 0: h_w has roots off the real line")
    return whittaker_component_m(params.n, params.w, params.m(), v)


def whittaker_full(params: WhittakerParams) -> np.ndarray:
    """Coefficients of x^(n+v) y^(n-v) for v = -n .. n, including the factorial normalization."""
    n = params.n
    return np.array([whittaker_component(params, v) / (math.factorial(n + v) * math.factorial(n - v))
                     for v in range(-n, n + 1)])


def whittaker_via_pairing(n: int, v_e: Sequence, m, v: int) -> complex:
    """The same component written through alpha = <v_E, m r_0(i)>; the character is w = -v_E."""
    m = np.asarray(m, dtype=float)
    det = float(np.linalg.det(m))
    al = alpha_pairing(v_e, m)
    r = abs(al)
    return (r / al) ** v * det ** n * abs(det) * bessel_k(v, r)


# ---------------------------------------------------------------------------
# differential-difference equations


def _lin_power(*lins) -> tuple:
    """Product of linear forms p u + q v, as cubic coefficients in (u, v)."""
    out = [1 + 0j]
    for p, q in lins:
        nxt = [0j] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i] += c * p
            nxt[i + 1] += c * q
        out = nxt
    return tuple(out)


V_PLUS_IU = (1j, 1.0)
V_MINUS_IU = (-1j, 1.0)


def pair_action(omega: Sequence, m, f: Sequence) -> complex:
    """<omega, m . f> with m . f = det(m)^2 f(m^-1 (u, v)^t)."""
    return symplectic_cubic(tuple(complex(t) for t in omega),
                            act_cubic_fe_raw(np.asarray(m, dtype=float).tolist(), f))


def _phi_closed(params: WhittakerParams) -> Callable:
    def phi(k, x, y, s):
        return whittaker_component_m(params.n, params.w, borel_matrix(x, y, s), k)
    return phi


def _rel(res: complex, scale: float) -> float:
    return abs(res) / scale if scale > 0 else abs(res)


def ode_residuals(params: WhittakerParams, step: float = 1e-4,
                  phi: Callable | None = None) -> dict:
    """Relative residuals of the four phi_k families at the point of params, for k = -n .. n-1.

    (1) (w d_w - (2n+2) - k) phi_k + i <omega, m (v+iu)^3> phi_(k+1)
    (2) -(w d_w - (2n+2) + (k+1)) phi_(k+1) + i <omega, m (v-iu)^3> phi_k
    (3) -3i <omega, m (v-iu)^2 (v+iu)> phi_k - (-2y d_y + 2i y d_x + 3(k+1)) phi_(k+1)
    (4) -3i <omega, m (v+iu)^2 (v-iu)> phi_(k+1) + (-2y d_y - 2i y d_x - 3k) phi_k

    Here w is the scale coordinate and omega = -w_character.  phi(k, x, y, s) defaults
    to the closed form; derivatives are central differences of the given step.
    """
    n = params.n
    x, y, s = params.x, params.y, params.scale
    if phi is None:
        if not w_nonneg(params.w):
            raise ValueError("w is not >= 0")
        if abs(h_w_eval(params.w, complex(x, y))) < 1e3 * step:
            raise ValueError("evaluation point too close to a zero of h_w")
        phi = _phi_closed(params)
    m = borel_matrix(x, y, s)
    omega = tuple(-t for t in params.w)
    c1 = pair_action(omega, m, _lin_power(V_PLUS_IU, V_PLUS_IU, V_PLUS_IU))
    c2 = pair_action(omega, m, _lin_power(V_MINUS_IU, V_MINUS_IU, V_MINUS_IU))
    c3 = pair_action(omega, m, _lin_power(V_MINUS_IU, V_MINUS_IU, V_PLUS_IU))
    c4 = pair_action(omega, m, _lin_power(V_PLUS_IU, V_PLUS_IU, V_MINUS_IU))
    h = step

    def val(k):
        return phi(k, x, y, s)

    def w_d(k):
        return s * (phi(k, x, y, s + h) - phi(k, x, y, s - h)) / (2 * h)

    def y_dy(k):
        return y * (phi(k, x, y + h, s) - phi(k, x, y - h, s)) / (2 * h)

    def y_dx(k):
        return y * (phi(k, x + h, y, s) - phi(k, x - h, y, s)) / (2 * h)

    out = {1: [], 2: [], 3: [], 4: []}
    N2 = 2 * n + 2
    for k in range(-n, n):
        pk, pk1 = val(k), val(k + 1)
        sc = abs(pk) + abs(pk1)
        out[1].append(_rel(w_d(k) - (N2 + k) * pk + 1j * c1 * pk1, sc))
        out[2].append(_rel(-(w_d(k + 1) - (N2 - (k + 1)) * pk1) + 1j * c2 * pk, sc))
        out[3].append(_rel(-3j * c3 * pk - (-2 * y_dy(k + 1) + 2j * y_dx(k + 1) + 3 * (k + 1) * pk1), sc))
        out[4].append(_rel(-3j * c4 * pk1 + (-2 * y_dy(k) - 2j * y_dx(k) - 3 * k * pk), sc))
    return {k: np.array(v) for k, v in out.items()}


def gk_residuals(params: WhittakerParams, step: float = 1e-4) -> dict:
    """Residuals of the equations for G_k = phi_k / w^(2n+2), written with z = x + iy.

    (1) (w d_w + k + 1) G_(k+1) + w y^-3/2 p(z*) G_k
    (2) (w d_w - k) G_k + w y^-3/2 p(z) G_(k+1)
    (3) (4iy d_z + 3k) G_k + 2i w y^5/2 d_z(p(z) y^-3) G_(k+1)
    (4) (4iy d_z* + 3k) G_k + 2i w y^5/2 d_z*(p(z*) y^-3) G_(k-1)
    with p the polynomial h_w.
    """
    n = params.n
    x, y, s = params.x, params.y, params.scale
    N2 = 2 * n + 2

    def G(k, xx, yy, ss):
        return whittaker_component_m(n, params.w, borel_matrix(xx, yy, ss), k) / ss ** N2

    a, b, c, d = params.w
    z = complex(x, y)
    zs = z.conjugate()
    p = lambda t: ((a * t + b) * t + c) * t + d
    dp = lambda t: (3 * a * t + 2 * b) * t + c
    dz_term = dp(z) * y ** -3 + p(z) * 1.5j * y ** -4
    dzs_term = dp(zs) * y ** -3 - p(zs) * 1.5j * y ** -4
    h = step

    def wd(k):
        return s * (G(k, x, y, s + h) - G(k, x, y, s - h)) / (2 * h)

    def dz(k, conj=False):
        gx = (G(k, x + h, y, s) - G(k, x - h, y, s)) / (2 * h)
        gy = (G(k, x, y + h, s) - G(k, x, y - h, s)) / (2 * h)
        return 0.5 * (gx + 1j * gy) if conj else 0.5 * (gx - 1j * gy)

    out = {1: [], 2: [], 3: [], 4: []}
    for k in range(-n, n):
        gk, gk1 = G(k, x, y, s), G(k + 1, x, y, s)
        sc = abs(gk) + abs(gk1)
        out[1].append(_rel(wd(k + 1) + (k + 1) * gk1 + s * y ** -1.5 * p(zs) * gk, sc))
        out[2].append(_rel(wd(k) - k * gk + s * y ** -1.5 * p(z) * gk1, sc))
        out[3].append(_rel(4j * y * dz(k) + 3 * k * gk + 2j * s * y ** 2.5 * dz_term * gk1, sc))
    for k in range(-n + 1, n + 1):
        gk, gkm = G(k, x, y, s), G(k - 1, x, y, s)
        sc = abs(gk) + abs(gkm)
        out[4].append(_rel(4j * y * dz(k, True) + 3 * k * gk + 2j * s * y ** 2.5 * dzs_term * gkm, sc))
    return {k: np.array(v) for k, v in out.items()}


def pairing_lemma_check(pchi: Sequence, x: float, y: float, s: float) -> dict:
    """Both sides of the pairing identities for omega = -(a, b/3, c/3, d), p_chi = a t^3 + ... + d.

    Keys: "cube" checks m . (u - iv)^3 = s y^-3/2 (u - zv)^3 coefficientwise; "1" .. "4"
    are the four pairings, "3d" the derivative form of the third.
    """
    a, b, c, d = (float(t) for t in pchi)
    omega = (-a, -b, -c, -d)
    m = borel_matrix(x, y, s)
    z = complex(x, y)
    zs = z.conjugate()
    p = lambda t: ((a * t + b) * t + c) * t + d
    dp = lambda t: (3 * a * t + 2 * b) * t + c
    k = s * y ** -1.5
    cube_l = act_cubic_fe_raw(m.tolist(), _lin_power((1, -1j), (1, -1j), (1, -1j)))
    cube_r = tuple(k * t for t in _lin_power((1, -z), (1, -z), (1, -z)))
    mvu = (1j, -1.0)   # -v + iu
    mvm = (-1j, -1.0)  # -v - iu
    three = lambda f: tuple(3 * t for t in f)
    dz = dp(z) * y ** -3 + p(z) * 1.5j * y ** -4
    dzs = dp(zs) * y ** -3 - p(zs) * 1.5j * y ** -4
    return {
        "cube": (cube_l, cube_r),
        "1": (pair_action(omega, m, _lin_power(mvu, mvu, mvu)), -1j * k * p(zs)),
        "2": (pair_action(omega, m, _lin_power(mvm, mvm, mvm)), 1j * k * p(z)),
        "3": (pair_action(omega, m, three(_lin_power(mvm, mvm, mvu))),
              -k * (2 * y * dp(z) + 3j * p(z))),
        "3d": (pair_action(omega, m, three(_lin_power(mvm, mvm, mvu))),
               -2 * s * y ** 2.5 * dz),
        "4": (pair_action(omega, m, three(_lin_power(mvu, mvu, mvm))),
              -2 * s * y ** 2.5 * dzs),
    }


def profile_collapse(params: WhittakerParams, scales: Sequence[float]) -> float:
    """Max deviation of G_v(s) / K_v(u(s)) across scales; zero when G_v = K_v(u) Y_v."""
    n = params.n
    worst = 0.0
    pz = abs(h_w_eval(params.w, complex(params.x, params.y)))
    for v in range(-n, n + 1):
        ys = []
        for s in scales:
            g = whittaker_component(params.at(scale=s), v) / s ** (2 * n + 2)
            ys.append(g / bessel_k(v, pz * params.y ** -1.5 * s))
        ref = ys[0]
        worst = max(worst, max(abs(t - ref) / abs(ref) for t in ys))
    return worst


def phase_recursion(params: WhittakerParams) -> float:
    """Max |Y_(v+1)/Y_v - |p(z)|/p(z)| over v, with Y_v = G_v / K_v(u)."""
    n = params.n
    z = complex(params.x, params.y)
    pz = h_w_eval(params.w, z)
    u = abs(pz) * params.y ** -1.5 * params.scale
    ys = [whittaker_component(params, v) / params.scale ** (2 * n + 2) / bessel_k(v, u)
          for v in range(-n, n + 1)]
    target = abs(pz) / pz
    return max(abs(ys[i + 1] / ys[i] - target) for i in range(len(ys) - 1))


# ---------------------------------------------------------------------------
# archimedean integrals


def mellin_kk_rhs(s: float, mu: float, nu: float) -> float:
    num = (gamma_fn((s + mu + nu) / 2) * gamma_fn((s + mu - nu) / 2)
           * gamma_fn((s - mu + nu) / 2) * gamma_fn((s - mu - nu) / 2))
    return 2 ** (s - 3) * num / gamma_fn(s)


def mellin_kk(s: float, mu: float, nu: float, epsrel: float = 1e-11) -> tuple[float, float]:
    """(int_0^inf K_mu(y) K_nu(y) y^s dy/y, the Gamma-product closed form)."""
    if not s > abs(mu) + abs(nu):
        raise ValueError("the Mellin integral diverges unless s > |mu| + |nu|")
    f = lambda t: bessel_k(mu, t) * bessel_k(nu, t) * t ** (s - 1)
    lo = integrate.quad(f, 0, 1, epsabs=0, epsrel=epsrel, limit=200)[0]
    hi = integrate.quad(f, 1, np.inf, epsabs=0, epsrel=epsrel, limit=200)[0]
    return lo + hi, mellin_kk_rhs(s, mu, nu)


def fourier_bessel_check(s: float, r: float, y: float) -> tuple[float, float]:
    """Gamma(s)/(2 Gamma(1/2)) int e^(irx) (x^2+y^2)^-s dx against (r/2y)^(s-1/2) K_(s-1/2)(ry)."""
    if not s > 0.5:
        raise ValueError("need s > 1/2")
    f = lambda x: (x * x + y * y) ** (-s)
    val = integrate.quad(f, 0, np.inf, weight="cos", wvar=r, limlst=200)[0]
    lhs = gamma_fn(s) / math.sqrt(math.pi) * val
    rhs = (r / (2 * y)) ** (s - 0.5) * bessel_k(s - 0.5, r * y)
    return lhs, rhs


def multinomial_bessel_check(n: int, j2: int, x: float) -> tuple[float, float]:
    """(sum over j1 + j3 = n - j2 of (n-j2)!/(j1! j3!) K_(j3-j1)(x), (-2)^(n-j2) K_0^((n-j2))(x))."""
    if not 0 <= j2 <= n:
        raise ValueError("need 0 <= j2 <= n")
    if not x > 0:
        raise ValueError("need x > 0")
    N = n - j2
    lhs = sum(math.comb(N, j1) * bessel_k(N - 2 * j1, x) for j1 in range(N + 1))
    return lhs, (-2) ** N * bessel_k_derivative(0, x, N)


def pairing_sum_check(n: int, alpha: complex, beta: float, det_m: float) -> tuple[complex, complex]:
    """The K-pairing of pr_K(x)^n with the Whittaker vector, as a trinomial sum and as a binomial sum of K_0 derivatives."""
    ra = abs(alpha)
    tri = 0j
    for j1 in range(n + 1):
        for j2 in range(n + 1 - j1):
            j3 = n - j1 - j2
            coef = math.factorial(n) / (math.factorial(j1) * math.factorial(j2) * math.factorial(j3))
            tri += (-1) ** (j3 - j1) * coef * (2j * beta) ** j2 * ra ** (n - j2) * bessel_k(j3 - j1, ra)
    tri *= abs(det_m) / 2 ** (2 * n)
    bi = sum(math.comb(n, j) * (1j * beta) ** j * ra ** (n - j) * bessel_k_derivative(0, ra, n - j)
             for j in range(n + 1)) * abs(det_m) / 2 ** n
    return tri, bi


R0_CUBIC = lambda z: (1, -3 * z, 3 * z * z, -z ** 3)


def alpha_pairing(v_e: Sequence, m) -> complex:
    """<v_E, m . r_0(i)> with r_0(z) = (1, -z, z^2, -z^3) in W coordinates."""
    return pair_action(tuple(float(t) for t in _cubic_of(v_e)), m, R0_CUBIC(1j))


def arch_x_data(alpha: complex, beta: float, det_m: float) -> tuple[tuple, float]:
    """Coefficients of pr_K(x(n, m)) on (e, h, f) and ||x(n, m)||^2."""
    if det_m == 0:
        raise ValueError("det(m) must be nonzero")
    alpha = complex(alpha)
    q = 4 * det_m
    coeffs = (alpha.conjugate() / q, -1j * beta / q, -alpha / q)
    return coeffs, (abs(alpha) ** 2 + beta ** 2) / det_m ** 2


@dataclass(frozen=True)
class JNuResult:
    value: float
    error: float
    tail: float


def j_nu(p_e: Sequence, nu: float, X0: float = 20.0, y0: float = 1e-3, Y0: float = 50.0,
         epsrel: float = 1e-9) -> JNuResult:
    """int over the upper half plane of |p_E(z)|^(-2 nu) y^(3 nu) dx dy / y^2.

    The box |x| <= X0, y0 <= y <= Y0 and the three unbounded pieces beyond it are done by
    nested quadrature.  The strip y < y0 is extrapolated from the strip [y0, 2 y0] as a
    geometric series with the power law y^min(nu, 3 nu - 1) of the integrand near the axis.
    """
    a, b, c, d = (float(t) for t in _cubic_of(p_e))
    if nu <= 1.0 / 3.0:
        raise ValueError("J(nu) diverges for nu <= 1/3")
    if not w_nonneg((a, b, c, d)):
        raise ValueError("p_E must have only real roots")
    coeffs = np.trim_zeros(np.array([a, b, c, d]), "f")
    roots = sorted(r.real for r in np.roots(coeffs)) if len(coeffs) > 1 else []

    def f(y, x):
        z = complex(x, y)
        pz = ((a * z + b) * z + c) * z + d
        return abs(pz) ** (-2 * nu) * y ** (3 * nu - 2)

    pts = [r for r in roots if -X0 < r < X0]

    def xint(ylo, yhi, xlo, xhi):
        inner = lambda x: integrate.quad(f, ylo, yhi, args=(x,), epsabs=0, epsrel=epsrel,
                                         limit=200)[0]
        if math.isinf(xlo) or math.isinf(xhi):
            return integrate.quad(inner, xlo, xhi, epsabs=0, epsrel=epsrel, limit=200)
        return integrate.quad(inner, xlo, xhi, epsabs=0, epsrel=epsrel, limit=400,
                              points=pts or None)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        main, e1 = xint(y0, Y0, -X0, X0)
        top, e2 = xint(Y0, np.inf, -X0, X0)
        left, e3 = xint(y0, np.inf, -np.inf, -X0)
        right, e4 = xint(y0, np.inf, X0, np.inf)
        strip, e5 = xint(y0, 2 * y0, -X0, X0)
    expo = min(nu, 3 * nu - 1)
    tail = strip / (2 ** expo - 1)
    value = main + top + left + right + tail
    err = e1 + e2 + e3 + e4 + e5 + abs(tail) * 0.1
    return JNuResult(value, err, tail)


def j_nu_two_resolutions(p_e: Sequence, nu: float) -> tuple[JNuResult, JNuResult, bool]:
    """Two truncations; the flag is True when they agree to 1e-3 relative."""
    r1 = j_nu(p_e, nu)
    r2 = j_nu(p_e, nu, X0=10.0, y0=2e-3, Y0=25.0)
    return r1, r2, abs(r1.value - r2.value) <= 1e-3 * abs(r1.value)


def shintani_ratio(p_e: Sequence, nu: float) -> float:
    """Gamma(nu) J(nu) / (Gamma(nu/2 - 1/6) Gamma(nu/2)^2 Gamma(nu/2 + 1/6))."""
    den = gamma_fn(nu / 2 - 1 / 6) * gamma_fn(nu / 2) ** 2 * gamma_fn(nu / 2 + 1 / 6)
    return gamma_fn(nu) * j_nu(p_e, nu).value / den


def _check_poles(args: Sequence[float], tol: float = 1e-9) -> None:
    for t in args:
        if t <= 0 and abs(t - round(t)) < tol:
            raise ValueError(f"Gamma pole at argument {t}")


def arch_gamma_part1(s: float, n: int) -> float:
    """Gamma(s+2n-3) Gamma(s+n-2) Gamma((s+n-3)/2)^2 / (Gamma(s+n-3) Gamma((3s+3n-7)/2))."""
    _check_poles([s + 2 * n - 3, s + n - 2, (s + n - 3) / 2])
    return (gamma_fn(s + 2 * n - 3) * gamma_fn(s + n - 2) * gamma_fn((s + n - 3) / 2) ** 2
            / (gamma_fn(s + n - 3) * gamma_fn((3 * s + 3 * n - 7) / 2)))


def arch_gamma_ratio(s: float, n: int) -> float:
    """Gamma(s+2n-3) Gamma(s+n-2) Gamma(s+n-3) / Gamma((s+n-1)/2)."""
    _check_poles([s + 2 * n - 3, s + n - 2, s + n - 3])
    return (gamma_fn(s + 2 * n - 3) * gamma_fn(s + n - 2) * gamma_fn(s + n - 3)
            / gamma_fn((s + n - 1) / 2))


def multiplication_factor(s: float, n: int) -> float:
    """2 pi^2 3^(1 - 3 nu/2) 2^(4 - 2 nu) with nu = s + n - 2."""
    nu = s + n - 2
    return 2 * math.pi ** 2 * 3 ** (1 - 1.5 * nu) * 2 ** (4 - 2 * nu)


def arch_gamma_check(s: float, n: int) -> tuple[float, float]:
    """part1 * Gamma(nu/2-1/6) Gamma(nu/2)^2 Gamma(nu/2+1/6) / part2 against the multiplication-formula factor."""
    nu = s + n - 2
    shintani = gamma_fn(nu / 2 - 1 / 6) * gamma_fn(nu / 2) ** 2 * gamma_fn(nu / 2 + 1 / 6)
    return arch_gamma_part1(s, n) * shintani / arch_gamma_ratio(s, n), multiplication_factor(s, n)


def arch_gamma_poles(n: int, s_min: float, s_max: float) -> list[float]:
    """Values of s in [s_min, s_max] where a numerator Gamma of the second form has a pole."""
    out = set()
    for shift in (2 * n - 3, n - 2, n - 3):
        k = math.ceil(s_min + shift)
        while k <= 0:
            s = k - shift
            if s_min <= s <= s_max:
                out.add(float(s))
            k += 1
    return sorted(out)
