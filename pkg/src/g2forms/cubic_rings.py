"""Binary cubic forms, cubic rings and p-local lattice classes.

A form (a, b, c, d) gives the ring Z + Z omega + Z theta with

    omega*theta = -ad,  omega^2 = -ac + a theta - b omega,  theta^2 = -bd + c theta - d omega.

For an invertible 2x2 matrix x = [[alpha, beta], [gamma, delta]] the module
T(x) = Z + Z(delta omega - beta theta) + Z(-gamma omega + alpha theta) depends only
on the coset x GL2(Z_p); cosets are stored as column Hermite forms.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra_core import Matrix, as_fraction, solve

INF = float("inf")


def vp(x, p: int) -> float:
    """p-adic valuation of a rational; +inf for zero."""
    x = as_fraction(x)
    if x == 0:
        return INF
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _vp_int(n: int, p: int) -> float:
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def disc(f: Sequence) -> Fraction:
    a, b, c, d = (as_fraction(t) for t in f)
    return b * b * c * c - 4 * a * c ** 3 - 4 * b ** 3 * d - 27 * a * a * d * d + 18 * a * b * c * d


def check_fmax(f: Sequence, p: int) -> None:
    if p in (2, 3):
        raise ValueError("p must be prime to 6")
    if disc(f) % p == 0:
        raise ValueError(f"form {tuple(f)} is degenerate modulo {p}")


# ---------------------------------------------------------------------------
# Delone-Faddeev tables


@dataclass(frozen=True)
class CubicRingTable:
    a: int
    b: int
    c: int
    d: int

    def products(self) -> dict:
        """omega^2, omega*theta, theta^2 as coordinates in the basis (1, omega, theta)."""
        a, b, c, d = self.a, self.b, self.c, self.d
        return {
            "ww": (-a * c, -b, a),
            "wt": (-a * d, 0, 0),
            "tt": (-b * d, -d, c),
        }

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        pr = self.products()
        x0, x1, x2 = x
        y0, y1, y2 = y
        out = [x0 * y0, x0 * y1 + x1 * y0, x0 * y2 + x2 * y0]
        for coef, key in ((x1 * y1, "ww"), (x1 * y2 + x2 * y1, "wt"), (x2 * y2, "tt")):
            if coef:
                for k in range(3):
                    out[k] += coef * pr[key][k]
        return tuple(out)


def df_ring(f: Sequence) -> CubicRingTable:
    return CubicRingTable(*f)


def form_from_basis(products) -> tuple:
    """Recover (a, b, c, d) from the products of a based cubic algebra 1, w', t'.

    products(i, j) returns the coordinates of g_i g_j (i, j in {1, 2}) in the basis
    (1, g1, g2).  The basis is first translated so that the product of the two
    generators is a scalar, which is the good-basis normalization.
    """
    wt = products(1, 2)
    s, t = -wt[2], -wt[1]          # omega = g1 + s, theta = g2 + t

    def sq(i, shift):
        # (g_i + shift)^2 = g_i^2 + 2 shift g_i + shift^2
        g = list(products(i, i))
        g[0] += shift * shift
        g[i] += 2 * shift
        return g

    ww = sq(1, s)
    tt = sq(2, t)
    # re-express in basis 1, omega, theta: g1 = omega - s, g2 = theta - t
    def rebase(v):
        return (v[0] - s * v[1] - t * v[2], v[1], v[2])

    ww, tt = rebase(ww), rebase(tt)
    a, b = ww[2], -ww[1]
    c, d = tt[2], -tt[1]
    return (a, b, c, d)


def good_basis_form(f: Sequence, basis: Sequence[Sequence]) -> tuple:
    """Form of the order spanned by 1 and two further elements given in O_E coordinates."""
    R = df_ring(f)
    g = [tuple(as_fraction(x) for x in (1, 0, 0))] + [tuple(as_fraction(x) for x in b) for b in basis]
    M = Matrix(g).transpose()
    Minv = M.inverse()

    def products(i, j):
        return Minv.apply(R.mul(g[i], g[j]))

    return form_from_basis(products)


# ---------------------------------------------------------------------------
# mod p factorization types


class FactorType(str, enum.Enum):
    IRRED = "IRRED"
    L_Q = "L_Q"
    L1L2L3 = "L1L2L3"
    L1SQ_L2 = "L1SQ_L2"
    LCUBE = "LCUBE"


def _mod_p(f: Sequence, p: int) -> tuple:
    out = []
    for t in f:
        t = as_fraction(t)
        if t.denominator % p == 0:
            raise ValueError("form is not p-integral")
        out.append(t.numerator * pow(t.denominator, -1, p) % p)
    return tuple(out)


def root_multiplicities(f: Sequence, p: int) -> dict:
    """Zeros of the binary cubic on P^1(F_p) with multiplicities; keys are t or 'inf'."""
    a, b, c, d = _mod_p(f, p)
    if (a, b, c, d) == (0, 0, 0, 0):
        raise ValueError("form vanishes identically modulo p")
    out = {}
    g = [d, c, b, a]  # g(t) = f(t, 1), lowest degree first
    deg = max(i for i, x in enumerate(g) if x)
    if deg < 3:
        out["inf"] = 3 - deg
    g = g[: deg + 1]
    for t in range(p):
        m = 0
        h = list(g)
        while len(h) > 1:
            # synthetic division of h by (x - t)
            q = [0] * (len(h) - 1)
            acc = 0
            for i in range(len(h) - 1, 0, -1):
                acc = (acc * t + h[i]) % p
                q[i - 1] = acc
            rem = (acc * t + h[0]) % p
            if rem:
                break
            m += 1
            h = q
        if m:
            out[t] = m
    return out


def factor_type(f: Sequence, p: int) -> FactorType:
    mult = root_multiplicities(f, p)
    total = sum(mult.values())
    if total == 0:
        return FactorType.IRRED
    if total == 1:
        return FactorType.L_Q
    ms = sorted(mult.values())
    if ms == [1, 1, 1]:
        return FactorType.L1L2L3
    if ms == [1, 2]:
        return FactorType.L1SQ_L2
    if ms == [3]:
        return FactorType.LCUBE
    raise AssertionError(f"impossible multiplicity pattern {ms}")


def count_p1_zeros(f: Sequence, p: int) -> int:
    return len(root_multiplicities(f, p))


def count_p1_zeros_or_all(f: Sequence, p: int) -> int:
    """Number of zeros on P^1(F_p), counting every point when f vanishes mod p."""
    if all(t == 0 for t in _mod_p(f, p)):
        return p + 1
    return count_p1_zeros(f, p)


# ---------------------------------------------------------------------------
# lattice classes


@dataclass(frozen=True, order=True)
class LatticeClass:
    """The coset [[p^a, b], [0, p^c]] GL2(Z_p) with 0 <= b < p^a."""

    p: int
    a: int
    b: Fraction
    c: int

    def matrix(self) -> tuple:
        p = Fraction(self.p)
        return ((p ** self.a, self.b), (Fraction(0), p ** self.c))

    @property
    def det_val(self) -> int:
        return self.a + self.c

    def hnf(self) -> list:
        return [[str(x) for x in r] for r in self.matrix()]

    def right_mul(self, y: Sequence[Sequence]) -> "LatticeClass":
        return canonical(_mat_mul(self.matrix(), y), self.p)

    def scale(self, k: int) -> "LatticeClass":
        """The class of p^k h."""
        return canonical(tuple(tuple(x * Fraction(self.p) ** k for x in r) for r in self.matrix()), self.p)

    def __str__(self) -> str:
        return f"[[{self.p}^{self.a}, {self.b}], [0, {self.p}^{self.c}]]"


def _mat_mul(x, y) -> tuple:
    return tuple(tuple(sum(as_fraction(x[i][k]) * as_fraction(y[k][j]) for k in range(2))
                       for j in range(2)) for i in range(2))


def _unit_part(x: Fraction, p: int, v: int) -> Fraction:
    return x / Fraction(p) ** v


def canonical(h: Sequence[Sequence], p: int) -> LatticeClass:
    """Column Hermite form of the coset h GL2(Z_p)."""
    (h11, h12), (h21, h22) = [[as_fraction(x) for x in r] for r in h]
    if h11 * h22 - h12 * h21 == 0:
        raise ValueError("singular lattice matrix")
    if vp(h21, p) < vp(h22, p):
        h11, h12 = h12, h11
        h21, h22 = h22, h21
    # clear the lower-left entry with a Z_p-multiple of column 2
    t = h21 / h22
    h11, h21 = h11 - t * h12, Fraction(0)
    c = vp(h22, p)
    u2 = _unit_part(h22, p, c)
    h12, h22 = h12 / u2, Fraction(p) ** c
    a = vp(h11, p)
    u1 = _unit_part(h11, p, a)
    h11 = Fraction(p) ** a
    b = _reduce_mod(h12, p, a)
    return LatticeClass(p, int(a), b, int(c))


def _reduce_mod(x: Fraction, p: int, a: int) -> Fraction:
    """Representative of x modulo p^a Z_p in [0, p^a), with p-power denominator."""
    if x == 0:
        return Fraction(0)
    m = max(0, -int(vp(x, p)), -a)
    u = x * Fraction(p) ** m
    mod = p ** (a + m)
    r = u.numerator * pow(u.denominator, -1, mod) % mod if mod > 1 else 0
    return Fraction(r, p ** m)


def identity_class(p: int) -> LatticeClass:
    return LatticeClass(p, 0, Fraction(0), 0)


def lattice_class(h: Sequence[Sequence], p: int) -> LatticeClass:
    return canonical(h, p)


def mat_val(h: LatticeClass) -> int:
    return int(min(vp(x, h.p) for r in h.matrix() for x in r if x != 0))


def epsilon(h: LatticeClass) -> int:
    n = mat_val(h)
    x0 = h.scale(-n)
    return 1 if x0.det_val == 0 else 2


def tp_reps(p: int) -> list[tuple]:
    """Right coset representatives of GL2(Z_p) diag(p, 1) GL2(Z_p)."""
    reps = [((p, b), (0, 1)) for b in range(p)]
    reps.append(((1, 0), (0, p)))
    return reps


def sublattices_index_p(L: LatticeClass) -> list[LatticeClass]:
    return [L.right_mul(y) for y in tp_reps(L.p)]


def hnf_classes(p: int, v: int) -> Iterator[LatticeClass]:
    """All integral classes of determinant valuation v."""
    for a in range(v + 1):
        c = v - a
        for b in range(p ** a):
            yield LatticeClass(p, a, Fraction(b), c)


# ---------------------------------------------------------------------------
# T(x) and content


@dataclass(frozen=True)
class TLattice:
    """Z + Z g1 + Z g2 with g1, g2 given in O_E coordinates (1, omega, theta)."""

    gens: tuple

    def basis_matrix(self) -> Matrix:
        return Matrix([(1, 0, 0)] + [tuple(g) for g in self.gens]).transpose()


def _adj_t(x) -> tuple:
    (al, be), (ga, de) = x
    return ((de, -ga), (-be, al))


def t_generators(x: Sequence[Sequence]) -> tuple:
    (al, be), (ga, de) = [[as_fraction(t) for t in r] for r in x]
    return ((Fraction(0), de, -be), (Fraction(0), -ga, al))


def t_lattice(x: Sequence[Sequence], f_max: Sequence) -> tuple[TLattice, bool]:
    """T(x) and whether it is closed under multiplication (p-locally, via any p: the
    membership test requires integral coordinates)."""
    (al, be), (ga, de) = [[as_fraction(t) for t in r] for r in x]
    if al * de - be * ga == 0:
        raise ValueError("singular matrix")
    T = TLattice(t_generators(x))
    R = df_ring(f_max)
    M = T.basis_matrix()
    ok = True
    g = T.gens
    for i in range(2):
        for j in range(i, 2):
            prod = R.mul(g[i], g[j])
            sol = solve(M, Matrix([[t] for t in prod]))
            if any(sol[k, 0].denominator != 1 for k in range(3)):
                ok = False
    return T, ok


def t_lattice_is_ring_at(x: Sequence[Sequence], f_max: Sequence, p: int) -> bool:
    """Closure of T(x) tensor Z_(p): coordinates need only be p-integral."""
    T = TLattice(t_generators(x))
    R = df_ring(f_max)
    M = T.basis_matrix()
    g = T.gens
    for i in range(2):
        for j in range(i, 2):
            sol = solve(M, Matrix([[t] for t in R.mul(g[i], g[j])]))
            if any(vp(sol[k, 0], p) < 0 for k in range(3)):
                return False
    return True


def content_of_matrix(x: Sequence[Sequence], f_max: Sequence, p: int) -> int:
    """Largest c such that T(p^-c x) is a ring.

    The traceless parts of the three products g_i g_j must lie in p^c times the
    span of g1, g2; the content is the least such valuation.
    """
    (g1, g2) = t_generators(x)
    a, b, c, d = (as_fraction(t) for t in f_max)
    P, Q = g1[1], g1[2]
    R_, S = g2[1], g2[2]
    det = P * S - Q * R_
    best = INF
    for (u1, u2), (w1, w2) in (((P, Q), (P, Q)), ((P, Q), (R_, S)), ((R_, S), (R_, S))):
        uu = u1 * w1
        tt = u2 * w2
        y1 = -b * uu - d * tt
        y2 = a * uu + c * tt
        s = (y1 * S - y2 * R_) / det
        t = (P * y2 - Q * y1) / det
        best = min(best, vp(s, p), vp(t, p))
    if best == INF:
        raise ArithmeticError("content is unbounded (degenerate form)")
    return int(best)


def content(h: LatticeClass, f_max: Sequence) -> int:
    return _content_cached(h, tuple(f_max))


@lru_cache(maxsize=1 << 20)
def _content_cached(h: LatticeClass, f_max: tuple) -> int:
    p = h.p
    if h.b.denominator == 1 and h.a >= 0 and h.c >= 0:
        return _content_hnf_int(p, h.a, int(h.b), h.c, f_max)
    return content_of_matrix(h.matrix(), f_max, p)


def _content_hnf_int(p: int, ea: int, b: int, ec: int, f_max: tuple) -> int:
    """Integer-only content for an integral Hermite form [[p^ea, b], [0, p^ec]]."""
    A, Bc, C, D = f_max
    pa, pc = p ** ea, p ** ec
    P, Q = pc, -b          # g1 = p^ec omega - b theta
    R_, S = 0, pa          # g2 = p^ea theta
    best = INF
    for (u1, u2), (w1, w2) in (((P, Q), (P, Q)), ((P, Q), (R_, S)), ((R_, S), (R_, S))):
        uu = u1 * w1
        tt = u2 * w2
        y1 = -Bc * uu - D * tt
        y2 = A * uu + C * tt
        # coordinates: s = y1 / p^ec, t = (y2 p^ec + b y1) / p^(ea+ec)
        vs = _vp_int(y1, p) - ec
        vt = _vp_int(y2 * pc + b * y1, p) - ea - ec
        best = min(best, vs, vt)
    if best == INF:
        raise ArithmeticError("content is unbounded (degenerate form)")
    return int(best)


def content_by_search(h: LatticeClass, f_max: Sequence) -> int:
    """The same invariant by walking c downward and testing closure of T(p^-c h)."""
    p = h.p
    x = h.matrix()
    hi = mat_val(h)
    lo = min(3 * hi - h.det_val, -h.det_val) - 1
    for c in range(hi, lo - 1, -1):
        y = tuple(tuple(e * Fraction(p) ** (-c) for e in r) for r in x)
        if t_lattice_is_ring_at(y, f_max, p):
            return c
    raise ArithmeticError("no ring found in the search window")


def is_ring(h: LatticeClass, f_max: Sequence) -> bool:
    return content(h, f_max) >= 0


def ring_form(h: LatticeClass, f_max: Sequence) -> tuple:
    """Good-basis binary cubic of T(h) (equal to p^content times a primitive form)."""
    g1, g2 = t_generators(h.matrix())
    return good_basis_form(f_max, [g1, g2])


def primitive_form(h: LatticeClass, f_max: Sequence) -> tuple:
    """The form f0 of the ring T0 with T(h) = Z + p^c T0."""
    c = content(h, f_max)
    return ring_form(h.scale(-c), f_max)


def class_factor_type(h: LatticeClass, f_max: Sequence) -> FactorType:
    return factor_type(primitive_form(h, f_max), h.p)


def n_zeros_of_class(h: LatticeClass, f_max: Sequence) -> int:
    """Zeros on P^1(F_p) of the form attached to T(h); all p + 1 points when p divides it."""
    return count_p1_zeros_or_all(ring_form(h, f_max), h.p)


def subring_enum(f_max: Sequence, p: int, max_val: int) -> list[tuple[LatticeClass, int, int]]:
    check_fmax(f_max, p)
    out = []
    for v in range(max_val + 1):
        for h in hnf_classes(p, v):
            c = content(h, f_max)
            if c >= 0:
                out.append((h, c, v))
    return out


def subring_json(f_max: Sequence, p: int, max_val: int) -> dict:
    classes = [{"hnf": h.hnf(), "content": c, "val_det": v, "is_ring": True}
               for h, c, v in subring_enum(f_max, p, max_val)]
    return {"p": p, "fmax": list(f_max), "classes": classes}


# ---------------------------------------------------------------------------
# the expected content multisets over the p + 1 index-p sublattices

def expected_sublattice_contents(ftype: FactorType, c: int, p: int) -> list[int]:
    table = {
        FactorType.IRRED: [c - 1] * (p + 1),
        FactorType.L_Q: [c] + [c - 1] * p,
        FactorType.L1L2L3: [c] * 3 + [c - 1] * (p - 2),
        FactorType.L1SQ_L2: [c, c + 1] + [c - 1] * (p - 1),
        FactorType.LCUBE: [c + 2] + [c - 1] * p,
    }
    return sorted(table[ftype])


# ---------------------------------------------------------------------------
# direct enumeration of subrings by closure under multiplication


def _in_lattice(u: int, v: int, a: int, b: int, c: int, p: int) -> bool:
    """(u, v) in the span of (p^a, b) and (0, p^c)."""
    pa, pc = p ** a, p ** c
    if u % pa:
        return False
    return (v - (u // pa) * b) % pc == 0


def subrings_by_closure(f_max: Sequence, p: int, m: int) -> list[tuple[int, int, int]]:
    """Subrings Z + Z g1 + Z g2 of the Delone-Faddeev ring of f_max with index p^m.

    g1 = p^a omega + b theta and g2 = p^c theta with a + c = m and 0 <= b < p^c.  A
    lattice containing 1 is a ring exactly when the three products g_i g_j land in it,
    tested in the (omega, theta) coordinates.  Returns the (a, b, c) that pass.
    """
    ring = df_ring(tuple(int(t) for t in f_max))
    out = []
    for a in range(m + 1):
        c = m - a
        for b in range(p ** c):
            g1 = (0, p ** a, b)
            g2 = (0, 0, p ** c)
            ok = True
            for x, y in ((g1, g1), (g1, g2), (g2, g2)):
                _, u, v = ring.mul(x, y)
                if not _in_lattice(u, v, a, b, c, p):
                    ok = False
                    break
            if ok:
                out.append((a, b, c))
    return out
