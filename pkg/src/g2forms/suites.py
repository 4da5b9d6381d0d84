"""Invariant suites run by `g2forms verify`, one per module.

Every check records a case; a failing case records its inputs and both sides.
Randomized checks draw from random.Random(seed), so a report is a function of
its configuration.
"""
from __future__ import annotations

import enum
import math
import os
import random
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import cubic_rings as cr
from . import g2_lie as gl
from . import heis_so7 as hs
from . import local_zeta as lz
from . import octonion as oc
from . import whittaker as wh
from .algebra_core import I, GaussianRational, Matrix, ZetaPoly, mat_rank

SUITES = ("lie", "octonion", "so7", "cubic", "zeta", "whittaker")


# ---------------------------------------------------------------------------
# plumbing


def jsonable(x: Any) -> Any:
    """Exact values become strings, complex numbers become {re, im}."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, np.bool_):
        return bool(x)
    if isinstance(x, (float, np.floating)):
        return float(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, (complex, np.complexfloating)):
        return {"re": float(x.real), "im": float(x.imag)}
    if isinstance(x, (Fraction, GaussianRational)):
        return str(x)
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, ZetaPoly):
        return x.to_json()
    if isinstance(x, Matrix):
        return [[jsonable(x[i, j]) for j in range(x.ncols)] for i in range(x.nrows)]
    if isinstance(x, cr.LatticeClass):
        return x.hnf()
    if isinstance(x, gl.G2Element):
        return [str(t) for t in x.c]
    if isinstance(x, hs.WVector):
        return [str(t) for t in x.cubic()]
    if isinstance(x, oc.Octonion):
        return oc.to_text(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, np.ndarray):
        return [jsonable(t) for t in x.tolist()]
    if isinstance(x, (list, tuple)):
        return [jsonable(t) for t in x]
    return str(x)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("G2FORMS_THREADS", "1")))
    except ValueError:
        return 1


def pmap(fn: Callable, items: Iterable) -> list:
    """map with G2FORMS_THREADS workers; results keep the input order."""
    items = list(items)
    n = thread_count()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))


@dataclass
class Config:
    seed: int = 0
    primes: tuple = (5, 7)
    types: tuple = tuple(lz.SplittingType)
    max_val: int = 6
    max_content: int = 3
    random_cases: int = 200
    bessel_tol: float = 1e-8
    ode_tol: float = 1e-5
    ode_step: float = 1e-4
    collapse_tol: float = 1e-6
    phase_tol: float = 1e-10
    mellin_tol: float = 1e-6
    multinomial_tol: float = 1e-8
    gamma_tol: float = 1e-8
    expsum_tol: float = 1e-6


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    # cases run per check name; not part of the JSON report
    counts: Counter = field(default_factory=Counter)

    def check(self, name: str, ok: bool, inputs: Any = None, lhs: Any = None,
              rhs: Any = None) -> bool:
        self.cases += 1
        self.counts[name] += 1
        if not ok:
            self.failures.append({"check": name, "inputs": jsonable(inputs),
                                  "lhs": jsonable(lhs), "rhs": jsonable(rhs)})
        return ok

    def merge(self, other: "SuiteReport") -> None:
        self.cases += other.cases
        self.counts.update(other.counts)
        for f in other.failures:
            self.failures.append({"suite": other.suite, **f})

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> dict:
        out = {"suite": self.suite, "cases": self.cases, "failures": self.failures}
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def _rand_frac(rng: random.Random, lo: int = -9, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))


def _rand_gl2(rng: random.Random) -> tuple:
    while True:
        g = ((_rand_frac(rng), _rand_frac(rng)), (_rand_frac(rng), _rand_frac(rng)))
        if g[0][0] * g[1][1] - g[0][1] * g[1][0] != 0:
            return g


def _rand_w(rng: random.Random) -> hs.WVector:
    return hs.WVector.from_cubic([rng.randint(-6, 6) for _ in range(4)])


# ---------------------------------------------------------------------------
# lie


def _cyc(j: int) -> int:
    return gl.m3(j)


def bracket_family_cases() -> list[tuple]:
    """(name, j, lhs, rhs) for the five bracket families, j = 1, 2, 3."""
    B = gl.bracket
    out = []
    for j in (1, 2, 3):
        jm, jp = _cyc(j - 1), _cyc(j + 1)
        # 3 E_jj - (E11 + E22 + E33) = diag with 2 at j and -1 elsewhere
        diag = [-1, -1, -1]
        diag[j - 1] = 2
        out += [
            ("delta_{j-1},v_j", j, B(gl.delta(jm), gl.v(j)), gl.E(j, jm) * 3),
            ("v_{j-1},delta_j", j, B(gl.v(jm), gl.delta(j)), gl.E(jm, j) * (-3)),
            ("delta_{j-1},delta_j", j, B(gl.delta(jm), gl.delta(j)), gl.v(jp) * 2),
            ("v_{j-1},v_j", j, B(gl.v(jm), gl.v(j)), gl.delta(jp) * 2),
            ("delta_j,v_j", j, B(gl.delta(j), gl.v(j)), gl.diag_element(*diag)),
        ]
    return out


def iwasawa_expected() -> dict:
    """The displayed Iwasawa data of h3, h1, h-1, h-3: (cubic, m, k), n-part modulo E13."""
    t = gl.compact_triples()
    zero_cubic = (0, 0, 0, 0)
    zero_m = ((0, 0), (0, 0))
    vpiu = (I, 1)
    vmiu = (-I, 1)
    c1 = tuple(2 * x for x in gl.cubic_power(vpiu, 2, vmiu, 1))
    c3 = tuple(-2 * x for x in gl.cubic_power(vpiu, 3, vpiu, 0))
    return {
        "h3": (zero_cubic, ((-2, 0), (0, -2)), -(t["h_u"] + t["h_r"])),
        "h1": (c1, zero_m, t["f_r"] * Fraction(-4, 3)),
        "h-1": (zero_cubic, ((Fraction(2, 3), Fraction(-4, 3) * I), (0, Fraction(-2, 3))),
                t["h_u"] - t["h_r"] * Fraction(1, 3)),
        "h-3": (c3, zero_m, t["e_u"] * (-4)),
    }


def _gl2_eq(a, b) -> bool:
    return all(gl._scalar(a[i][j]) == gl._scalar(b[i][j]) for i in range(2) for j in range(2))


def suite_lie(cfg: Config) -> SuiteReport:
    rep = SuiteReport("lie")
    rep.check("proj rank", mat_rank(gl.proj_matrix()) == 7, "21x7", mat_rank(gl.proj_matrix()), 7)
    rep.check("kernel dimension", gl.kernel_dimension() == 14, None, gl.kernel_dimension(), 14)
    rep.check("basis rank", gl.basis_rank() == 14, None, gl.basis_rank(), 14)
    for i, w in enumerate(gl.basis_wedges()):
        rep.check("basis in kernel", not any(gl.proj_v7(w)), gl.LABELS[i], gl.proj_v7(w), 0)
    for name, j, lhs, rhs in bracket_family_cases():
        rep.check("bracket family " + name, lhs == rhs, j, lhs, rhs)

    bad = set(gl.jacobi_failures())
    for i in range(gl.DIM):
        for j in range(gl.DIM):
            for k in range(gl.DIM):
                rep.check("jacobi", (i, j, k) not in bad, (i, j, k))

    bs = gl.basis_elements()
    for i in range(gl.DIM):
        for j in range(gl.DIM):
            bij = gl.bracket(bs[i], bs[j])
            for k in range(gl.DIM):
                lhs = gl.killing_pair(bij, bs[k])
                rhs = -gl.killing_pair(bs[j], gl.bracket(bs[i], bs[k]))
                rep.check("killing invariance", lhs == rhs, (i, j, k), lhs, rhs)

    th = gl.cartan_theta
    for i, b in enumerate(bs):
        rep.check("theta involution", th(th(b)) == b, gl.LABELS[i], th(th(b)), b)
    for i in range(gl.DIM):
        for j in range(gl.DIM):
            lhs = th(gl.bracket(bs[i], bs[j]))
            rhs = gl.bracket(th(bs[i]), th(bs[j]))
            rep.check("theta automorphism", lhs == rhs, (i, j), lhs, rhs)
    for j in (1, 2, 3):
        rep.check("theta(v_j) = delta_j", th(gl.v(j)) == gl.delta(j), j, th(gl.v(j)), gl.delta(j))
        for k in (1, 2, 3):
            if j != k:
                rep.check("theta(E_jk) = -E_kj", th(gl.E(j, k)) == -gl.E(k, j), (j, k),
                          th(gl.E(j, k)), -gl.E(k, j))
    for n, m in enumerate(gl.b_theta_minors(), start=1):
        rep.check("B_theta leading minor > 0", gl._scalar(m) > 0, n, m, "> 0")

    pb = gl.p_basis()
    expected = {"-3": 16, "-1": Fraction(16, 3), "1": Fraction(16, 3), "3": 16}
    for a in ("3", "1", "-1", "-3"):
        for b in ("3", "1", "-1", "-3"):
            ha, hb = pb["h" + a], pb["h" + b]
            val = gl.killing_pair(ha.conjugate(), hb)
            want = expected[a] if a == b else 0
            rep.check("(conj h_i, h_j)", val == want, (a, b), val, want)
            val = gl.killing_pair(ha, hb)
            rep.check("(h_i, h_j) = 0", val == 0, (a, b), val, 0)
            val = gl.killing_pair(ha.conjugate(), hb.conjugate())
            rep.check("(conj h_i, conj h_j) = 0", val == 0, (a, b), val, 0)
    for d, h, sign in (("d3", "h-3", -1), ("d1", "h-1", 1), ("d-1", "h1", -1), ("d-3", "h3", 1)):
        rhs = pb[h].conjugate() * sign
        rep.check("d_k = +-conj h_-k", pb[d] == rhs, d, pb[d], rhs)

    for fam, gen in (("u", gl.u), ("r", gl.r)):
        for j in (1, 2, 3):
            lhs = gl.bracket(gen(j), gen(j + 1))
            rep.check(f"[{fam}_j,{fam}_j+1]", lhs == gen(j + 2), j, lhs, gen(j + 2))
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            lhs = gl.bracket(gl.u(i), gl.r(j))
            rep.check("[u_i,r_j] = 0", lhs.is_zero(), (i, j), lhs, 0)
    t = gl.compact_triples()
    for s in ("u", "r"):
        h, e, f = t["h_" + s], t["e_" + s], t["f_" + s]
        for name, lhs, rhs in (("[h,e]=2e", gl.bracket(h, e), e * 2),
                               ("[h,f]=-2f", gl.bracket(h, f), f * (-2)),
                               ("[e,f]=h", gl.bracket(e, f), h)):
            rep.check("triple " + name, lhs == rhs, s, lhs, rhs)
    for s1 in ("h_u", "e_u", "f_u"):
        for s2 in ("h_r", "e_r", "f_r"):
            lhs = gl.bracket(t[s1], t[s2])
            rep.check("triples commute", lhs.is_zero(), (s1, s2), lhs, 0)
    for key, x in pb.items():
        k = int(key[1:])
        hu = Fraction(1 if key[0] == "h" else -1)
        lhs = gl.bracket(t["h_u"], x)
        rep.check("h_u eigenvalue", lhs == x * hu, key, lhs, x * hu)
        lhs = gl.bracket(t["h_r"], x)
        rep.check("h_r eigenvalue", lhs == x * k, key, lhs, x * k)
        kp, pp = gl.kp_decompose(x)
        rep.check("p-basis lies in p", kp.is_zero(), key, kp, 0)

    for key, (cubic, m, k) in iwasawa_expected().items():
        (got_cubic, _mu), got_m, got_k = gl.iwasawa(pb[key])
        ok = (tuple(gl._scalar(c) for c in got_cubic) == tuple(gl._scalar(c) for c in cubic)
              and _gl2_eq(got_m, m) and got_k == k)
        rep.check("iwasawa display", ok, key, [got_cubic, got_m, got_k], [cubic, m, k])
        # the decomposition reassembles the element, E13 included
        (cb, mu), mm, kk = gl.iwasawa(pb[key])
        total = gl.n_element(cb, mu) + gl.gl2_ident(mm) + kk
        rep.check("iwasawa reassembles", total == pb[key], key, total, pb[key])
        # conjugates decompose as the conjugate expressions
        (cb2, _), mm2, kk2 = gl.iwasawa(pb[key].conjugate())
        ok = (tuple(gl._scalar(c) for c in cb2) == tuple(gl.conj(gl._scalar(c)) for c in got_cubic)
              and _gl2_eq(mm2, [[gl.conj(gl._scalar(c)) for c in r] for r in got_m])
              and kk2 == got_k.conjugate())
        rep.check("iwasawa of conjugate", ok, key, [cb2, mm2, kk2], "conjugate data")

    zb = gl.z3_basis()
    for i in range(gl.DIM):
        rep.check("model_iso on basis", gl.model_iso(zb[i]) == bs[i], i, gl.model_iso(zb[i]), bs[i])
    for i in range(gl.DIM):
        for j in range(gl.DIM):
            lhs = gl.model_iso(gl.z3_bracket(zb[i], zb[j]))
            rhs = gl.bracket(bs[i], bs[j])
            rep.check("Z/3 model structure constants", lhs == rhs, (i, j), lhs, rhs)

    # n is 2-step nilpotent with [n, n] spanned by E13
    nb = gl.nilradical_basis()
    e13 = gl.E(1, 3)
    for i, a in enumerate(nb):
        for j, b in enumerate(nb):
            c = gl.bracket(a, b)
            ok = all(c[lab] == 0 for lab in gl.LABELS if lab != "E13")
            rep.check("[n, n] in span E13", ok, (i, j), c, "multiple of E13")
            rep.check("[[n, n], n] = 0", gl.bracket(c, e13).is_zero() and gl.bracket(e13, a).is_zero(),
                      (i, j), gl.bracket(c, e13), 0)
    return rep


# ---------------------------------------------------------------------------
# octonion


def _rand_oct(rng: random.Random) -> oc.Octonion:
    return oc.Octonion.from_coords([_rand_frac(rng) for _ in range(8)])


def suite_octonion(cfg: Config) -> SuiteReport:
    rep = SuiteReport("octonion")
    rng = random.Random(cfg.seed)
    one = oc.Octonion.scalar(1)
    witness = False
    for n in range(cfg.random_cases):
        x, y, z = _rand_oct(rng), _rand_oct(rng), _rand_oct(rng)
        key = (n, oc.to_text(x), oc.to_text(y), oc.to_text(z))
        lhs, rhs = oc.oct_norm(x * y), oc.oct_norm(x) * oc.oct_norm(y)
        rep.check("norm multiplicative", lhs == rhs, key, lhs, rhs)
        lhs, rhs = x * oc.oct_conj(x), one * oc.oct_norm(x)
        rep.check("x x* = N(x)", lhs == rhs, key, lhs, rhs)
        lhs, rhs = x * x, x * oc.oct_trace(x) - one * oc.oct_norm(x)
        rep.check("x^2 = tr(x) x - N(x)", lhs == rhs, key, lhs, rhs)
        lhs, rhs = oc.bilinear(x, y), oc.oct_norm(x + y) - oc.oct_norm(x) - oc.oct_norm(y)
        rep.check("bilinear polarizes N", lhs == rhs, key, lhs, rhs)
        lhs, rhs = oc.trilinear(x, y, z), oc.oct_trace(x * (y * z))
        rep.check("tr((xy)z) = tr(x(yz))", lhs == rhs, key, lhs, rhs)
        lhs, rhs = oc.oct_trace(x * y), oc.oct_trace(y * x)
        rep.check("tr(xy) = tr(yx)", lhs == rhs, key, lhs, rhs)
        lhs, rhs = oc.associator(x, y, z), -oc.associator(y, x, z)
        rep.check("associator alternates", lhs == rhs, key, lhs, rhs)
        lhs, rhs = oc.associator(x, x, y), oc.Octonion.zero()
        rep.check("left alternative", lhs == rhs, key, lhs, rhs)
        rep.check("conjugation involution", oc.oct_conj(oc.oct_conj(x)) == x, key)
        witness = witness or oc.associator(x, y, z) != oc.Octonion.zero()
    rep.check("non-associativity witness", witness, cfg.seed)
    return rep


# ---------------------------------------------------------------------------
# so7


def suite_so7(cfg: Config) -> SuiteReport:
    rep = SuiteReport("so7")
    rng = random.Random(cfg.seed)
    for n in range(cfg.random_cases):
        g = _rand_gl2(rng)
        w, w2 = _rand_w(rng), _rand_w(rng)
        mu = _rand_frac(rng)
        key = (n, g, w, w2, mu)
        me = hs.m_embed(g)
        rep.check("m_embed preserves Gram", hs.preserves_gram(me), key)
        ne = hs.n_embed(w, mu)
        rep.check("n_embed preserves Gram", hs.preserves_gram(ne), key)
        rel = hs.unipotent_relation(ne)
        rep.check("h^t S h + x + x^t = 0", rel == Matrix.zeros(2, 2), key, rel, 0)
        lhs = hs.n_embed_lie(w, mu)
        rhs = hs.g2_in_so7(hs.n_element_from_w(w, mu))
        rep.check("n_embed_lie = wedge action", lhs == rhs, key, lhs, rhs)
        det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
        lhs = me * ne * me.inverse()
        rhs = hs.n_embed(hs.gl2_act_cubic(g, w), det * mu)
        rep.check("M conjugation on N", lhs == rhs, key, lhs, rhs)
        lhs = hs.g2_in_so7(gl.gl2_ident(g))
        rhs = hs.m_embed_lie(hs.levi_twist(g))
        rep.check("Levi image", lhs == rhs, key, lhs, rhs)
        lhs = hs.symplectic(hs.gl2_act_cubic(g, w), hs.gl2_act_cubic(g, w2))
        rhs = det * hs.symplectic(w, w2)
        rep.check("symplectic det-equivariance", lhs == rhs, key, lhs, rhs)
        lhs, rhs = hs.gl2_act_cubic(g, w), hs.gl2_act_cubic_fe(hs.levi_twist(g), w)
        rep.check("two cubic actions related by J", lhs == rhs, key, lhs, rhs)
        h2 = _rand_gl2(rng)
        gh = tuple(tuple(sum(g[i][k] * h2[k][j] for k in range(2)) for j in range(2)) for i in range(2))
        lhs, rhs = hs.m_embed(gh), hs.m_embed(g) * hs.m_embed(h2)
        rep.check("m_embed homomorphism", lhs == rhs, key, lhs, rhs)
        lhs = hs.gl2_act_cubic(gh, w)
        rhs = hs.gl2_act_cubic(g, hs.gl2_act_cubic(h2, w))
        rep.check("cubic action law", lhs == rhs, key, lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# cubic


def _assoc_failures(f: Sequence) -> list:
    R = cr.df_ring(f)
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    bad = []
    for x in basis:
        for y in basis:
            if R.mul(x, y) != R.mul(y, x):
                bad.append(("comm", x, y))
            for z in basis:
                if R.mul(R.mul(x, y), z) != R.mul(x, R.mul(y, z)):
                    bad.append(("assoc", x, y, z))
    return bad


def primitive_classes_by_type(f_max: Sequence, p: int, max_val: int = 3) -> dict:
    """Content-zero ring classes grouped by the factor type of their form."""
    out: dict = {}
    for h, c, v in cr.subring_enum(f_max, p, max_val):
        if c == 0:
            out.setdefault(cr.class_factor_type(h, f_max), []).append(h)
    return out


def sublattice_lemma_cases(p: int, contents: Sequence[int] = (0, 1, 2, 3)) -> list[tuple]:
    """(f_max, h, type, c, got multiset, expected multiset) for one primitive class per type and form."""
    out = []
    seen = set()
    for f in lz.DEFAULT_FORMS.values():
        for ft, hs_ in sorted(primitive_classes_by_type(f, p).items()):
            h0 = hs_[0]
            for c in contents:
                h = h0.scale(c)
                got = sorted(cr.content(x, f) for x in cr.sublattices_index_p(h))
                out.append((f, h, ft, c, got, cr.expected_sublattice_contents(ft, c, p)))
            seen.add(ft)
    missing = set(cr.FactorType) - seen
    if missing:
        raise AssertionError(f"no primitive class of type {sorted(missing)} found at p = {p}")
    return out


def suite_cubic(cfg: Config) -> SuiteReport:
    rep = SuiteReport("cubic")
    rng = random.Random(cfg.seed)
    for n in range(100):
        f = tuple(rng.randint(-20, 20) for _ in range(4))
        bad = _assoc_failures(f)
        rep.check("Delone-Faddeev ring axioms", not bad, f, bad, [])
    gens = [((0, 1), (1, 0)), ((1, 1), (0, 1)), ((-1, 0), (0, 1)), ((1, 0), (1, 1))]
    for n in range(50):
        f = tuple(rng.randint(-9, 9) for _ in range(4))
        g = ((1, 0), (0, 1))
        for _ in range(rng.randint(1, 4)):
            s = rng.choice(gens)
            g = tuple(tuple(sum(g[i][k] * s[k][j] for k in range(2)) for j in range(2)) for i in range(2))
        lhs = cr.good_basis_form(f, [(0, g[0][0], g[0][1]), (0, g[1][0], g[1][1])])
        rhs = hs.gl2_act_cubic(g, hs.WVector.from_cubic(f)).cubic()
        rep.check("GL2(Z) equivariance", tuple(lhs) == tuple(rhs), (f, g), lhs, rhs)

    for p in cfg.primes:
        for f_case in sublattice_lemma_cases(p):
            f, h, ft, c, got, want = f_case
            rep.check("sublattice content lemma", got == want, (p, f, h, ft, c), got, want)

    p = 5
    for f in lz.DEFAULT_FORMS.values():
        for v in range(5):
            for h in cr.hnf_classes(p, v):
                c = cr.content(h, f)
                if c < 0:
                    continue
                lhs = cr.mat_val(h) == c
                rhs = cr.class_factor_type(h, f) != cr.FactorType.LCUBE
                rep.check("val = content iff not l^3", lhs == rhs, (p, f, h), lhs, rhs)
        for v in range(4):
            for h in cr.hnf_classes(p, v):
                lhs, rhs = cr.content(h, f), cr.content_by_search(h, f)
                rep.check("content closed form = search", lhs == rhs, (p, f, h), lhs, rhs)
    for p in cfg.primes:
        for t, f in lz.DEFAULT_FORMS.items():
            for m in range(4):
                lhs = sum(1 for h, c, v in cr.subring_enum(f, p, m) if v == m)
                rhs = len(cr.subrings_by_closure(f, p, m))
                rep.check("subring count vs closure", lhs == rhs, (p, t, m), lhs, rhs)
    for p in (2, 3, 5, 7, 11):
        subs = cr.sublattices_index_p(cr.identity_class(p))
        rep.check("p + 1 sublattices", len(set(subs)) == p + 1, p, len(set(subs)), p + 1)
    return rep


# ---------------------------------------------------------------------------
# zeta


def _crident_config(args: tuple) -> list[tuple]:
    p, t, max_val, max_content = args
    f = lz.DEFAULT_FORMS[t]
    out = []
    for h, c, v in lz.ring_classes(f, p, max_val, max_content):
        ok, lhs, rhs = lz.verify_crident(h, t, f, p)
        out.append(((p, t, h), ok, lhs, rhs))
    return out


def _table_config(args: tuple) -> list[tuple]:
    p, t = args
    f = lz.DEFAULT_FORMS[t]
    out = []
    for h0, c0, v0 in lz.ring_classes(f, p, 3, 0):
        for c in (2, 3):
            h = h0.scale(c)
            ft = cr.class_factor_type(h, f)
            lhs = lz.crident_numerator(h, f)
            rhs = lz.crident_table_prediction(ft, h.det_val, c, p)
            out.append(((p, t, h, ft), lhs == rhs, lhs, rhs))
    return out


def dchi_cases(p: int = 5, ks: Sequence[int] = (0, 1, 2), rs: Sequence[int] = (0, 1, 2),
               cap: int = 5 ** 10) -> list[tuple]:
    return [(p, k, r, t) for t in lz.DEFAULT_FORMS for k in ks for r in rs
            if p ** (4 * k + r) <= cap]


def suite_zeta(cfg: Config) -> SuiteReport:
    rep = SuiteReport("zeta")
    configs = [(p, t, cfg.max_val, cfg.max_content) for p in cfg.primes for t in cfg.types]
    for rows in pmap(_crident_config, configs):
        for key, ok, lhs, rhs in rows:
            rep.check("CRident", ok, key, lhs, rhs)
    for rows in pmap(_table_config, [(p, t) for p in cfg.primes for t in cfg.types]):
        for key, ok, lhs, rhs in rows:
            rep.check("five-case table", ok, key, lhs, rhs)

    def one_dchi(case):
        p, k, r, t = case
        return case, lz.exp_sum_dchi(p, k, r, lz.DEFAULT_FORMS[t], tol=cfg.expsum_tol)

    cases = [c for p in cfg.primes for c in dchi_cases(p) if c[3] in cfg.types]
    for case, res in pmap(one_dchi, cases):
        rep.check("D_chi closed form", res["ok"], case, [res["raw"], res["starred"]],
                  res["closed_form"])

    for q in cfg.primes:
        a, c = lz.n0(q)
        rep.check("N0(s-1) constant part = B0", lz.shift_s(a, -1, q) == lz.b0(q), q,
                  lz.shift_s(a, -1, q), lz.b0(q))
        want = ZetaPoly.monomial(2, -q)
        rep.check("N0(s-1) T part = -q z^2", lz.shift_s(c, -1, q) == want, q, lz.shift_s(c, -1, q), want)

    for p in cfg.primes:
        for t in cfg.types:
            f = lz.DEFAULT_FORMS[t]
            for h, c, v in cr.subring_enum(f, p, 3):
                lhs = lz.p_h(h, f)
                rhs = ZetaPoly.monomial(v - c) * (ZetaPoly([1]) - ZetaPoly.monomial(c + 1))
                rep.check("P_h recomputation", lhs == rhs, (p, t, h), lhs, rhs)
            rows = lz.local_dirichlet(f, p, t, 3)
            counts = Counter(r["val_det"] for r in rows if r["lambda_val"] == 0)
            for m in range(4):
                rhs = len(cr.subrings_by_closure(f, p, m))
                rep.check("local Dirichlet rows vs closure", counts[m] == rhs, (p, t, m), counts[m], rhs)
    if len(cfg.primes) >= 2 and len(cfg.types) >= 2:
        rep.merge(_dirichlet_assembly(cfg.primes[0], cfg.primes[1]))
    return rep


def _dirichlet_assembly(p1: int, p2: int) -> SuiteReport:
    """Global rows over two primes against products of local row counts."""
    rep = SuiteReport("zeta")
    f = lz.DEFAULT_FORMS[lz.SplittingType.SPLIT]
    t = lz.SplittingType.SPLIT
    bound = p1 * p1 * p2
    rows = lz.dirichlet_global_rows([(p1, t, f), (p2, t, f)], bound)
    loc1 = lz.local_dirichlet(f, p1, t, 3)
    loc2 = lz.local_dirichlet(f, p2, t, 3)
    want = Counter()
    for r1 in loc1:
        for r2 in loc2:
            key = (r1["index"] * r2["index"], r1["n"] * r2["n"])
            if key[0] * key[1] <= bound:
                want[key] += 1
    got = Counter((r["index"], r["n"]) for r in rows)
    for key in sorted(set(want) | set(got)):
        rep.check("multiplicative assembly", got[key] == want[key], key, got[key], want[key])
    return rep


# ---------------------------------------------------------------------------
# whittaker

ODE_WS = ((0, 1, -1, 0), (1, 0, -1, 0), (1, -1, -2, 1))
ODE_GRID = tuple((x, y, s) for x in (-0.4, 0.1, 0.6) for y in (0.8, 1.3, 2.0) for s in (0.4, 0.7, 1.1))
BESSEL_NUS = (0, 1, 2, 3, 0.5, 2.5)
MELLIN_GRID = tuple((s, mu, nu) for s in (2.0, 3.0, 4.5) for mu, nu in ((0, 0), (0.5, 0.5), (1.0, 0.3)))


def suite_whittaker(cfg: Config) -> SuiteReport:
    rep = SuiteReport("whittaker")
    for nu in BESSEL_NUS:
        for x in np.geomspace(0.3, 20, 12):
            res = wh.bessel_identity_residuals(nu, float(x))
            rep.check("Bessel identities", max(res) <= cfg.bessel_tol, (nu, float(x)), max(res),
                      cfg.bessel_tol)

    def ode_case(args):
        n, w, (x, y, s) = args
        params = wh.WhittakerParams(n, w, x, y, s)
        res = wh.ode_residuals(params, cfg.ode_step)
        gk = wh.gk_residuals(params, cfg.ode_step)
        return args, max(float(np.max(v)) for v in res.values()), max(float(np.max(v)) for v in gk.values())

    cases = [(n, w, pt) for n in (1, 2, 3) for w in ODE_WS for pt in ODE_GRID]
    for args, worst, worst_gk in pmap(ode_case, cases):
        rep.check("difEqs residual", worst <= cfg.ode_tol, args, worst, cfg.ode_tol)
        rep.check("G_k residual", worst_gk <= cfg.ode_tol, args, worst_gk, cfg.ode_tol)
    params = wh.WhittakerParams(2, ODE_WS[0], 0.1, 1.3, 0.7)
    zero = wh.ode_residuals(params, cfg.ode_step, phi=lambda k, x, y, s: 0j)
    rep.check("zero function residual", all(float(np.max(v)) == 0 for v in zero.values()), "zero")
    base = wh._phi_closed(params)
    pert = wh.ode_residuals(params, cfg.ode_step, phi=lambda k, x, y, s: base(k, x, y, s) * (1 + 0.01 * k))
    worst = max(float(np.max(v)) for v in pert.values())
    rep.check("perturbed solution fails", worst > 1e-3, "perturbed", worst, "> 1e-3")

    for n in (1, 2, 3):
        for w in ODE_WS:
            p = wh.WhittakerParams(n, w, 0.1, 1.3, 0.7)
            val = wh.profile_collapse(p, (0.3, 0.7, 1.5))
            rep.check("K_v profile collapse", val <= cfg.collapse_tol, (n, w), val, cfg.collapse_tol)
            val = wh.phase_recursion(p)
            rep.check("phase recursion", val <= cfg.phase_tol, (n, w), val, cfg.phase_tol)
            for v in range(-n, n + 1):
                lhs = wh.whittaker_component(p, v)
                rhs = wh.whittaker_via_pairing(n, tuple(-t for t in w), p.m(), v)
                rep.check("pairing form of W", abs(lhs - rhs) <= 1e-12 * abs(lhs), (n, w, v), lhs, rhs)

    for w in ODE_WS:
        for key, (lhs, rhs) in wh.pairing_lemma_check(w, 0.1, 1.3, 0.7).items():
            err = float(np.max(np.abs(np.array(lhs, dtype=complex) - np.array(rhs, dtype=complex))))
            rep.check("pairing lemma " + key, err <= 1e-10, (w, key), lhs, rhs)

    for s, mu, nu in MELLIN_GRID:
        lhs, rhs = wh.mellin_kk(s, mu, nu)
        rep.check("Mellin KK", abs(lhs - rhs) <= cfg.mellin_tol * abs(rhs), (s, mu, nu), lhs, rhs)
    for s, r, y in ((1.0, 1.0, 1.0), (1.5, 2.0, 0.5), (2.25, 0.7, 1.3)):
        lhs, rhs = wh.fourier_bessel_check(s, r, y)
        rep.check("Fourier identity", abs(lhs - rhs) <= 1e-8 * abs(rhs), (s, r, y), lhs, rhs)
    for N in range(6):
        for x in (0.5, 1.5, 2.0, 4.0):
            lhs, rhs = wh.multinomial_bessel_check(N, 0, x)
            rep.check("multinomial Bessel", abs(lhs - rhs) <= cfg.multinomial_tol * abs(rhs), (N, x), lhs, rhs)
    for n in (1, 2, 3):
        for al, be, dm in ((0.7 + 0.2j, 0.3, 1.2), (1.5 - 0.4j, -0.8, 0.6)):
            lhs, rhs = wh.pairing_sum_check(n, al, be, dm)
            rep.check("trinomial vs binomial sum", abs(lhs - rhs) <= 1e-10 * abs(rhs), (n, al, be, dm), lhs, rhs)
    for n in (2, 3, 4):
        for s in (3.5, 4.0, 6.0, 7.25):
            lhs, rhs = wh.arch_gamma_check(s, n)
            rep.check("gamma forms", abs(lhs - rhs) <= cfg.gamma_tol * abs(rhs), (s, n), lhs, rhs)
    return rep


RUNNERS = {
    "lie": suite_lie,
    "octonion": suite_octonion,
    "so7": suite_so7,
    "cubic": suite_cubic,
    "zeta": suite_zeta,
    "whittaker": suite_whittaker,
}


def run_suite(name: str, cfg: Config | None = None) -> SuiteReport:
    cfg = cfg or Config()
    t0 = time.perf_counter()
    if name == "all":
        rep = SuiteReport("all")
        for s in SUITES:
            rep.merge(run_suite(s, cfg))
    else:
        if name not in RUNNERS:
            raise ValueError(f"unknown suite {name!r}")
        rep = RUNNERS[name](cfg)
    rep.wall_time = time.perf_counter() - t0
    return rep
