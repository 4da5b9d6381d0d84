"""The Heisenberg parabolic of G2 inside SO(7), binary cubics and their symplectic form.

Two GL2 actions on binary cubics appear and are kept apart on purpose:

* gl2_act_cubic(g, f)     = det(g)^-1 f((x, y) g)       (Levi of the SO(7) picture)
* gl2_act_cubic_fe(m, f)  = det(m)^2 f(m^-1 (u, v)^t)   (Whittaker function picture)

They are related by gl2_act_cubic(g, f) == gl2_act_cubic_fe(J g J^-1, f) with
J = [[0, 1], [-1, 0]].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra_core import Matrix, as_fraction
from .g2_lie import G2Element, g2_to_matrix, n_element

THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class WVector:
    """w = (a, b/3, c/3, d), standing for the cubic a x^3 + b x^2 y + c x y^2 + d y^3."""

    a: Fraction
    b3: Fraction
    c3: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for f in ("a", "b3", "c3", "d"):
            object.__setattr__(self, f, as_fraction(getattr(self, f)))

    @classmethod
    def from_cubic(cls, f: Sequence) -> "WVector":
        a, b, c, d = (as_fraction(t) for t in f)
        return cls(a, b * THIRD, c * THIRD, d)

    def cubic(self) -> tuple:
        return (self.a, 3 * self.b3, 3 * self.c3, self.d)

    def is_integral(self) -> bool:
        """Membership in W(Z): the cubic coefficients are integers."""
        return all(t.denominator == 1 for t in self.cubic())

    def __add__(self, o: "WVector") -> "WVector":
        return WVector(self.a + o.a, self.b3 + o.b3, self.c3 + o.c3, self.d + o.d)

    def __neg__(self) -> "WVector":
        return WVector(-self.a, -self.b3, -self.c3, -self.d)

    def scale(self, s) -> "WVector":
        s = as_fraction(s)
        return WVector(s * self.a, s * self.b3, s * self.c3, s * self.d)

    def to_text(self) -> str:
        return ",".join(str(t) for t in self.cubic())

    @classmethod
    def from_text(cls, s: str) -> "WVector":
        parts = s.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected four comma separated coefficients, got {s!r}")
        return cls.from_cubic([Fraction(p) for p in parts])


def symplectic(w: WVector, w2: WVector) -> Fraction:
    a, b, c, d = w.cubic()
    a2, b2, c2, d2 = w2.cubic()
    return a * d2 - THIRD * b * c2 + THIRD * c * b2 - d * a2


def symplectic_cubic(f: Sequence, f2: Sequence):
    """The same form on raw cubic coefficient tuples (any numeric type)."""
    a, b, c, d = f
    a2, b2, c2, d2 = f2
    return a * d2 - (b * c2) / 3 + (c * b2) / 3 - d * a2


def substitute_cubic(f: Sequence, xs: Sequence, ys: Sequence) -> tuple:
    """Coefficients of f(X, Y) with X = xs[0] x + xs[1] y and Y = ys[0] x + ys[1] y."""
    p, q = xs
    r, s = ys
    a, b, c, d = f
    # binomial expansions of X^i Y^(3-i)
    X = [p, q]
    Y = [r, s]

    def mul(u, w):
        out = [0] * (len(u) + len(w) - 1)
        for i, x in enumerate(u):
            for j, y in enumerate(w):
                out[i + j] = out[i + j] + x * y
        return out

    X2 = mul(X, X)
    Y2 = mul(Y, Y)
    terms = [mul(X2, X), mul(X2, Y), mul(X, Y2), mul(Y2, Y)]
    coeffs = (a, b, c, d)
    out = [0, 0, 0, 0]
    for cf, t in zip(coeffs, terms):
        for k in range(4):
            out[k] = out[k] + cf * t[k]
    return tuple(out)


def _det2(g) -> object:
    return g[0][0] * g[1][1] - g[0][1] * g[1][0]


def act_cubic_raw(g: Sequence[Sequence], f: Sequence) -> tuple:
    """det(g)^-1 f((x, y) g) on raw coefficients."""
    det = _det2(g)
    if det == 0:
        raise ValueError("singular matrix")
    out = substitute_cubic(f, (g[0][0], g[1][0]), (g[0][1], g[1][1]))
    return tuple(t / det for t in out)


def act_cubic_fe_raw(m: Sequence[Sequence], f: Sequence) -> tuple:
    """det(m)^2 f(m^-1 (u, v)^t) on raw coefficients."""
    det = _det2(m)
    if det == 0:
        raise ValueError("singular matrix")
    inv = ((m[1][1] / det, -m[0][1] / det), (-m[1][0] / det, m[0][0] / det))
    out = substitute_cubic(f, inv[0], inv[1])
    return tuple(t * det * det for t in out)


def _exact_matrix(g) -> tuple:
    return tuple(tuple(as_fraction(x) for x in r) for r in g)


def gl2_act_cubic(g: Sequence[Sequence], w: WVector) -> WVector:
    return WVector.from_cubic(act_cubic_raw(_exact_matrix(g), w.cubic()))


def gl2_act_cubic_fe(m: Sequence[Sequence], w: WVector) -> WVector:
    return WVector.from_cubic(act_cubic_fe_raw(_exact_matrix(m), w.cubic()))


J2 = ((0, 1), (-1, 0))


# ---------------------------------------------------------------------------
# SO(7) in the basis e1, e3*, e2*, u0, -e2, -e1*, -e3

SO7_LABELS = ("e1", "e3*", "e2*", "u0", "-e2", "-e1*", "-e3")


@lru_cache(maxsize=None)
def so7_change_of_basis() -> Matrix:
    """Columns: coordinates of the SO(7) basis in the V7 basis e1, e2, e3, u0, e1*, e2*, e3*."""
    cols = [(0, 1), (6, 1), (5, 1), (3, 1), (1, -1), (4, -1), (2, -1)]
    m = [[0] * 7 for _ in range(7)]
    for j, (i, s) in enumerate(cols):
        m[i][j] = s
    return Matrix(m)


S_BLOCK = ((0, 0, 1), (0, -2, 0), (1, 0, 0))


@lru_cache(maxsize=None)
def so7_gram() -> Matrix:
    g = [[0] * 7 for _ in range(7)]
    for i in range(2):
        g[i][5 + i] = 1
        g[5 + i][i] = 1
    for i in range(3):
        for j in range(3):
            g[2 + i][2 + j] = S_BLOCK[i][j]
    return Matrix(g)


def preserves_gram(m: Matrix) -> bool:
    return m.transpose() * so7_gram() * m == so7_gram()


def _ad0_basis():
    # e2* -> [[0,-1],[0,0]], u0 -> [[1,0],[0,-1]], -e2 -> [[0,0],[1,0]]
    return (((0, -1), (0, 0)), ((1, 0), (0, -1)), ((0, 0), (1, 0)))


def _ad0_coords(t) -> tuple:
    (p, q), (r, _) = t
    return (-q, p, r)


def _mm(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def ad0(g) -> tuple:
    """3x3 matrix of X -> g X g^-1 on traceless 2x2 matrices."""
    g = _exact_matrix(g)
    det = _det2(g)
    ginv = ((g[1][1] / det, -g[0][1] / det), (-g[1][0] / det, g[0][0] / det))
    cols = [_ad0_coords(_mm(_mm(g, x), ginv)) for x in _ad0_basis()]
    return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))


def m_embed(g: Sequence[Sequence]) -> Matrix:
    """diag(g, Ad0(g), g^-T) in the SO(7) basis."""
    g = _exact_matrix(g)
    det = _det2(g)
    if det == 0:
        raise ValueError("singular matrix")
    git = ((g[1][1] / det, -g[1][0] / det), (-g[0][1] / det, g[0][0] / det))
    ad = ad0(g)
    m = [[Fraction(0)] * 7 for _ in range(7)]
    for i in range(2):
        for j in range(2):
            m[i][j] = g[i][j]
            m[5 + i][5 + j] = git[i][j]
    for i in range(3):
        for j in range(3):
            m[2 + i][2 + j] = ad[i][j]
    return Matrix(m)


def _h_block(w: WVector) -> tuple:
    al, be, ga, de = w.a, w.b3, w.c3, w.d
    return ((al, be), (be, ga), (ga, de))


def n_embed_lie(w: WVector, mu) -> Matrix:
    """[[0, h', -mu J], [0, 0, h], [0, 0, 0]] with h' = -h^t S."""
    h = _h_block(w)
    mu = as_fraction(mu)
    hp = [[-sum(h[k][i] * S_BLOCK[k][j] for k in range(3)) for j in range(3)] for i in range(2)]
    m = [[Fraction(0)] * 7 for _ in range(7)]
    for i in range(2):
        for j in range(3):
            m[i][2 + j] = hp[i][j]
        for j in range(2):
            m[i][5 + j] = -mu * J2[i][j]
    for i in range(3):
        for j in range(2):
            m[2 + i][5 + j] = h[i][j]
    return Matrix(m)


def n_embed(w: WVector, mu) -> Matrix:
    """The group element exp(n_embed_lie(w, mu)) = 1 + X + X^2/2."""
    x = n_embed_lie(w, mu)
    return Matrix.identity(7) + x + (x * x).scale(Fraction(1, 2))


def n_blocks(n: Matrix) -> tuple:
    """(h', x, h) blocks of a unipotent element [[1, h', x], [0, 1, h], [0, 0, 1]]."""
    hp = [[n[i, 2 + j] for j in range(3)] for i in range(2)]
    x = [[n[i, 5 + j] for j in range(2)] for i in range(2)]
    h = [[n[2 + i, 5 + j] for j in range(2)] for i in range(3)]
    return hp, x, h


def unipotent_relation(n: Matrix) -> Matrix:
    """h^t S h + x + x^t, which vanishes on the group."""
    _, x, h = n_blocks(n)
    hm = Matrix(h)
    return hm.transpose() * Matrix(S_BLOCK) * hm + Matrix(x) + Matrix(x).transpose()


def g2_in_so7(x: G2Element) -> Matrix:
    """Action of a g2 element on V7 written in the SO(7) basis."""
    p = so7_change_of_basis()
    return p.inverse() * g2_to_matrix(x) * p


def n_element_from_w(w: WVector, mu) -> G2Element:
    """alpha E12 + beta v1 + gamma delta3 + delta E23 + mu E13 for w = (alpha, beta, gamma, delta)."""
    return n_element(w.cubic(), mu)


def m_embed_lie(a: Sequence[Sequence]) -> Matrix:
    """Derivative of m_embed at the identity: diag(A, [A, .] on traceless matrices, -A^t)."""
    a = _exact_matrix(a)
    cols = []
    for x in _ad0_basis():
        x = _exact_matrix(x)
        ax, xa = _mm(a, x), _mm(x, a)
        cols.append(_ad0_coords(tuple(tuple(ax[i][j] - xa[i][j] for j in range(2)) for i in range(2))))
    m = [[Fraction(0)] * 7 for _ in range(7)]
    for i in range(2):
        for j in range(2):
            m[i][j] = a[i][j]
            m[5 + i][5 + j] = -a[j][i]
    for i in range(3):
        for j in range(3):
            m[2 + i][2 + j] = cols[j][i]
    return Matrix(m)


def levi_twist(a: Sequence[Sequence]) -> tuple:
    """J A J^-1, the matrix whose m_embed derivative is the Levi element attached to A."""
    a = _exact_matrix(a)
    j = _exact_matrix(J2)
    jinv = ((Fraction(0), Fraction(-1)), (Fraction(1), Fraction(0)))
    return _mm(_mm(j, a), jinv)
