"""The Lie algebra g2 inside the second exterior power of V7.

g2 is realized as the kernel of the map w ^ x -> Im(wx).  Brackets are
computed on wedges (where they are the commutator of the orthogonal
action) and then solved back into the 14-element basis

    E21, E31, E32, E12, E13, E23, eps1, eps2, v1, v2, v3, delta1, delta2, delta3

with E_kj = e_j* ^ e_k, eps1 = E22 - E33, eps2 = E11 - E22,
v_j = u0 ^ e_j + e_{j+1}* ^ e_{j+2}*, delta_j = u0 ^ e_j* + e_{j+1} ^ e_{j+2}.
Indices are taken mod 3 in {1, 2, 3}.  All arithmetic is over Q(i).
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .algebra_core import (GaussianRational, I, Matrix, as_fraction, conj, leading_minors,
                           mat_rank, nullspace, solve)
from .octonion import imaginary_part, octonion_to_v7, oct_mul, v7_bilinear, v7_to_octonion

DIM = 14
LABELS = ("E21", "E31", "E32", "E12", "E13", "E23", "eps1", "eps2",
          "v1", "v2", "v3", "delta1", "delta2", "delta3")
_INDEX = {lab: i for i, lab in enumerate(LABELS)}

# wedge basis b_i ^ b_j, i < j, of the V7 basis e1, e2, e3, u0, e1*, e2*, e3*
PAIRS = tuple(combinations(range(7), 2))
_PAIR_INDEX = {p: k for k, p in enumerate(PAIRS)}


def m3(j: int) -> int:
    """Reduce an index into {1, 2, 3}."""
    return (j - 1) % 3 + 1


def _e(j: int) -> int:
    return m3(j) - 1


def _es(j: int) -> int:
    return m3(j) + 3


U0 = 3


def _scalar(x):
    if isinstance(x, GaussianRational):
        return x if x.im != 0 else x.re
    return as_fraction(x)


# ---------------------------------------------------------------------------
# wedge level


def wedge_basis_vector(i: int, j: int) -> tuple:
    """Coordinates of b_i ^ b_j in the 21-element wedge basis."""
    out = [Fraction(0)] * 21
    if i == j:
        return tuple(out)
    if i < j:
        out[_PAIR_INDEX[(i, j)]] = Fraction(1)
    else:
        out[_PAIR_INDEX[(j, i)]] = Fraction(-1)
    return tuple(out)


def wedge(s: Sequence, t: Sequence) -> tuple:
    """s ^ t for V7 coordinate vectors s, t."""
    return tuple(_scalar(s[i] * t[j] - s[j] * t[i]) for i, j in PAIRS)


def _wadd(*terms) -> tuple:
    """Sum of (coefficient, wedge vector) pairs."""
    out = [Fraction(0)] * 21
    for c, w in terms:
        for k in range(21):
            if w[k]:
                out[k] = out[k] + c * w[k]
    return tuple(_scalar(x) for x in out)


def wedge_action(w: Sequence, t: Sequence) -> tuple:
    """Action of a wedge element on V7: (w ^ x) . v = (x, v) w - (w, v) x."""
    out = [Fraction(0)] * 7
    for k, (i, j) in enumerate(PAIRS):
        c = w[k]
        if not c:
            continue
        bi = _unit(i)
        bj = _unit(j)
        xj = v7_bilinear(bj, t)
        xi = v7_bilinear(bi, t)
        out[i] = out[i] + c * xj
        out[j] = out[j] - c * xi
    return tuple(_scalar(x) for x in out)


def _unit(i: int) -> tuple:
    return tuple(Fraction(int(k == i)) for k in range(7))


@lru_cache(maxsize=None)
def proj_matrix() -> Matrix:
    """7 x 21 matrix of w ^ x -> Im(wx)."""
    cols = []
    for i, j in PAIRS:
        prod = oct_mul(v7_to_octonion(_unit(i)), v7_to_octonion(_unit(j)))
        cols.append(octonion_to_v7(imaginary_part(prod)))
    return Matrix(cols).transpose()


def proj_v7(w: Sequence) -> tuple:
    return tuple(_scalar(x) for x in proj_matrix().apply(w))


@lru_cache(maxsize=None)
def _basis_wedge_brackets() -> dict:
    """[b_i ^ b_j, b_k ^ b_l] on basis wedges by the orthogonal bracket rule."""
    g = [[v7_bilinear(_unit(a), _unit(b)) for b in range(7)] for a in range(7)]
    out = {}
    for p, (w, x) in enumerate(PAIRS):
        for q, (y, z) in enumerate(PAIRS):
            out[p, q] = _wadd(
                (g[x][y], wedge_basis_vector(w, z)),
                (-g[x][z], wedge_basis_vector(w, y)),
                (-g[w][y], wedge_basis_vector(x, z)),
                (g[w][z], wedge_basis_vector(x, y)),
            )
    return out


def wedge_bracket(a: Sequence, b: Sequence) -> tuple:
    table = _basis_wedge_brackets()
    out = [Fraction(0)] * 21
    for p in range(21):
        if not a[p]:
            continue
        for q in range(21):
            if not b[q]:
                continue
            c = a[p] * b[q]
            for k, t in enumerate(table[p, q]):
                if t:
                    out[k] = out[k] + c * t
    return tuple(_scalar(x) for x in out)


def wedge_killing(a: Sequence, b: Sequence):
    """(w ^ x, y ^ z) = (w, z)(x, y) - (w, y)(x, z), extended bilinearly."""
    g = [[v7_bilinear(_unit(r), _unit(s)) for s in range(7)] for r in range(7)]
    total = Fraction(0)
    for p, (w, x) in enumerate(PAIRS):
        if not a[p]:
            continue
        for q, (y, z) in enumerate(PAIRS):
            if not b[q]:
                continue
            val = g[w][z] * g[x][y] - g[w][y] * g[x][z]
            if val:
                total = total + a[p] * b[q] * val
    return _scalar(total)


def wedge_to_matrix(w: Sequence) -> Matrix:
    """7 x 7 matrix of the action on V7 (columns are images of basis vectors)."""
    cols = [wedge_action(w, _unit(j)) for j in range(7)]
    return Matrix(cols).transpose()


# ---------------------------------------------------------------------------
# the 14 basis elements


def _E_wedge(k: int, j: int) -> tuple:
    return wedge_basis_vector(_es(j), _e(k))


@lru_cache(maxsize=None)
def basis_wedges() -> tuple:
    vs = []
    for lab in LABELS[:6]:
        k, j = int(lab[1]), int(lab[2])
        vs.append(_E_wedge(k, j))
    vs.append(_wadd((1, _E_wedge(2, 2)), (-1, _E_wedge(3, 3))))
    vs.append(_wadd((1, _E_wedge(1, 1)), (-1, _E_wedge(2, 2))))
    for j in (1, 2, 3):
        vs.append(_wadd((1, wedge_basis_vector(U0, _e(j))),
                        (1, wedge_basis_vector(_es(j + 1), _es(j + 2)))))
    for j in (1, 2, 3):
        vs.append(_wadd((1, wedge_basis_vector(U0, _es(j))),
                        (1, wedge_basis_vector(_e(j + 1), _e(j + 2)))))
    return tuple(vs)


@lru_cache(maxsize=None)
def _basis_matrix() -> Matrix:
    return Matrix(basis_wedges()).transpose()


@lru_cache(maxsize=None)
def _left_inverse() -> Matrix:
    b = _basis_matrix()
    bt = b.transpose()
    return (bt * b).inverse() * bt


class NotInG2Error(ArithmeticError):
    """A wedge element was expected to lie in g2 but does not."""


class G2Element:
    """Coordinates in the fixed 14-element basis, over Q(i)."""

    __slots__ = ("c",)

    def __init__(self, coords: Sequence) -> None:
        if len(coords) != DIM:
            raise ValueError("G2Element needs 14 coordinates")
        object.__setattr__(self, "c", tuple(_scalar(x) for x in coords))

    def __setattr__(self, name, value):
        raise AttributeError("G2Element is immutable")

    @classmethod
    def zero(cls) -> "G2Element":
        return cls([0] * DIM)

    @classmethod
    def basis(cls, label: str | int) -> "G2Element":
        i = _INDEX[label] if isinstance(label, str) else label
        return cls([int(k == i) for k in range(DIM)])

    @classmethod
    def from_wedge(cls, w: Sequence) -> "G2Element":
        coords = _left_inverse().apply(w)
        if tuple(_scalar(x) for x in _basis_matrix().apply(coords)) != tuple(_scalar(x) for x in w):
            raise NotInG2Error("wedge element is not in g2")
        return cls(coords)

    def to_wedge(self) -> tuple:
        return tuple(_scalar(x) for x in _basis_matrix().apply(self.c))

    def __getitem__(self, label) -> object:
        return self.c[_INDEX[label] if isinstance(label, str) else label]

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not any(self.c)
        if not isinstance(other, G2Element):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __add__(self, o: "G2Element") -> "G2Element":
        return G2Element([a + b for a, b in zip(self.c, o.c)])

    def __sub__(self, o: "G2Element") -> "G2Element":
        return G2Element([a - b for a, b in zip(self.c, o.c)])

    def __neg__(self) -> "G2Element":
        return G2Element([-a for a in self.c])

    def __mul__(self, s) -> "G2Element":
        return G2Element([s * a for a in self.c])

    __rmul__ = __mul__

    def __truediv__(self, s) -> "G2Element":
        s = GaussianRational.coerce(_scalar(s)) if isinstance(s, GaussianRational) else as_fraction(s)
        return G2Element([a / s for a in self.c])

    def conjugate(self) -> "G2Element":
        return G2Element([conj(a) for a in self.c])

    def is_zero(self) -> bool:
        return not any(self.c)

    def __repr__(self) -> str:
        terms = [f"({x})*{lab}" for x, lab in zip(self.c, LABELS) if x]
        return " + ".join(terms) if terms else "0"


def B(label: str) -> G2Element:
    """Shorthand for a basis element."""
    return G2Element.basis(label)


def E(i: int, j: int) -> G2Element:
    """Off-diagonal matrix unit E_ij in sl3."""
    if i == j:
        raise ValueError("diagonal E_ii is not in g2; use diag_element")
    return B(f"E{i}{j}")


def diag_element(a1, a2, a3) -> G2Element:
    """a1 E11 + a2 E22 + a3 E33 with a1 + a2 + a3 = 0."""
    if _scalar(a1 + a2 + a3) != 0:
        raise NotInG2Error("diagonal element must be traceless")
    return B("eps1") * (-a3) + B("eps2") * a1


def v(j: int) -> G2Element:
    return B(f"v{m3(j)}")


def delta(j: int) -> G2Element:
    return B(f"delta{m3(j)}")


def basis_elements() -> list[G2Element]:
    return [G2Element.basis(i) for i in range(DIM)]


@lru_cache(maxsize=None)
def structure_constants() -> tuple:
    """c[i][j] = coordinates of [b_i, b_j], derived through the wedge model."""
    ws = basis_wedges()
    table = []
    for i in range(DIM):
        row = []
        for j in range(DIM):
            row.append(G2Element.from_wedge(wedge_bracket(ws[i], ws[j])).c)
        table.append(tuple(row))
    return tuple(table)


def bracket(x: G2Element, y: G2Element) -> G2Element:
    sc = structure_constants()
    out = [Fraction(0)] * DIM
    for i, a in enumerate(x.c):
        if not a:
            continue
        for j, b in enumerate(y.c):
            if not b:
                continue
            ab = a * b
            for k, t in enumerate(sc[i][j]):
                if t:
                    out[k] = out[k] + ab * t
    return G2Element(out)


def bracket_via_wedge(x: G2Element, y: G2Element) -> G2Element:
    """Same as bracket but recomputed from scratch on wedges (slow path)."""
    return G2Element.from_wedge(wedge_bracket(x.to_wedge(), y.to_wedge()))


def bracket_table_json() -> str:
    """The derived structure constants as [{i, j, coeffs[14]}] with string rationals."""
    sc = structure_constants()
    rows = [{"i": i, "j": j, "coeffs": [str(x) for x in sc[i][j]]}
            for i in range(DIM) for j in range(DIM)]
    return json.dumps(rows)


def g2_to_matrix(x: G2Element) -> Matrix:
    """Action on V7 in the basis e1, e2, e3, u0, e1*, e2*, e3*."""
    return wedge_to_matrix(x.to_wedge())


# ---------------------------------------------------------------------------
# invariant form and Cartan involution


@lru_cache(maxsize=None)
def killing_gram() -> tuple:
    ws = basis_wedges()
    return tuple(tuple(wedge_killing(a, b) for b in ws) for a in ws)


def killing_pair(x: G2Element, y: G2Element):
    g = killing_gram()
    total = Fraction(0)
    for i, a in enumerate(x.c):
        if not a:
            continue
        for j, b in enumerate(y.c):
            if b and g[i][j]:
                total = total + a * b * g[i][j]
    return _scalar(total)


def iota_v7(t: Sequence) -> tuple:
    """(a, v, phi, d) -> (d, -phi, -v, a) on trace zero octonions."""
    return (-t[4], -t[5], -t[6], -t[3], -t[0], -t[1], -t[2])


@lru_cache(maxsize=None)
def _theta_images() -> tuple:
    out = []
    for w in basis_wedges():
        img = [Fraction(0)] * 21
        for k, (i, j) in enumerate(PAIRS):
            if w[k]:
                img = [a + w[k] * b for a, b in zip(img, wedge(iota_v7(_unit(i)), iota_v7(_unit(j))))]
        out.append(G2Element.from_wedge(img).c)
    return tuple(out)


def cartan_theta(x: G2Element) -> G2Element:
    imgs = _theta_images()
    out = [Fraction(0)] * DIM
    for i, a in enumerate(x.c):
        if a:
            for k, t in enumerate(imgs[i]):
                if t:
                    out[k] = out[k] + a * t
    return G2Element(out)


def b_theta_gram() -> Matrix:
    """Gram matrix of B_theta(x, y) = -(x, theta y) on the basis."""
    bs = basis_elements()
    return Matrix([[-killing_pair(a, cartan_theta(b)) for b in bs] for a in bs])


def b_theta_minors() -> list:
    return leading_minors(b_theta_gram())


def kp_decompose(x: G2Element) -> tuple[G2Element, G2Element]:
    t = cartan_theta(x)
    return (x + t) / 2, (x - t) / 2


# ---------------------------------------------------------------------------
# Z/3-graded model sl3 + V3 + V3^vee


def _m(rows) -> tuple:
    return tuple(tuple(_scalar(x) for x in r) for r in rows)


class Z3Element:
    """(A, x, gamma) with A a traceless 3x3 matrix, x in V3, gamma in the dual."""

    __slots__ = ("A", "x", "g")

    def __init__(self, A=None, x=(0, 0, 0), g=(0, 0, 0)) -> None:
        A = A if A is not None else [[0] * 3 for _ in range(3)]
        A = _m(A)
        if _scalar(A[0][0] + A[1][1] + A[2][2]) != 0:
            raise ValueError("sl3 part must be traceless")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "x", tuple(_scalar(t) for t in x))
        object.__setattr__(self, "g", tuple(_scalar(t) for t in g))

    def __setattr__(self, name, value):
        raise AttributeError("Z3Element is immutable")

    def __eq__(self, o) -> bool:
        return isinstance(o, Z3Element) and (self.A, self.x, self.g) == (o.A, o.x, o.g)

    def __hash__(self) -> int:
        return hash((self.A, self.x, self.g))

    def __add__(self, o: "Z3Element") -> "Z3Element":
        return Z3Element([[a + b for a, b in zip(r, s)] for r, s in zip(self.A, o.A)],
                         [a + b for a, b in zip(self.x, o.x)],
                         [a + b for a, b in zip(self.g, o.g)])

    def __mul__(self, s) -> "Z3Element":
        return Z3Element([[s * a for a in r] for r in self.A],
                         [s * a for a in self.x], [s * a for a in self.g])

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Z3Element(A={[[str(a) for a in r] for r in self.A]}, x={[str(a) for a in self.x]}, g={[str(a) for a in self.g]})"


def _cross(u, w):
    return (u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0])


def _mv(A, x):
    return tuple(sum((A[i][j] * x[j] for j in range(3)), Fraction(0)) for i in range(3))


def _mtv(A, g):
    return tuple(sum((A[j][i] * g[j] for j in range(3)), Fraction(0)) for i in range(3))


def _gamma_x(g, x):
    """[gamma, x] = 3 x (x) gamma - (x, gamma) 1."""
    s = sum((g[i] * x[i] for i in range(3)), Fraction(0))
    return [[3 * x[i] * g[j] - (s if i == j else 0) for j in range(3)] for i in range(3)]


def z3_bracket(a: Z3Element, b: Z3Element) -> Z3Element:
    A, x, g = a.A, a.x, a.g
    Bm, y, h = b.A, b.x, b.g
    comm = [[sum((A[i][k] * Bm[k][j] - Bm[i][k] * A[k][j] for k in range(3)), Fraction(0))
             for j in range(3)] for i in range(3)]
    gy = _gamma_x(g, y)
    hx = _gamma_x(h, x)
    sl = [[comm[i][j] + gy[i][j] - hx[i][j] for j in range(3)] for i in range(3)]
    vpart = [p - q + 2 * r for p, q, r in zip(_mv(A, y), _mv(Bm, x), _cross(g, h))]
    dpart = [-p + q + 2 * r for p, q, r in zip(_mtv(A, h), _mtv(Bm, g), _cross(x, y))]
    return Z3Element(sl, vpart, dpart)


def model_iso(z: Z3Element) -> G2Element:
    """E_ij -> E_ij, e_j -> v_j, e_j* -> delta_j."""
    out = G2Element.zero()
    for i in range(3):
        for j in range(3):
            if i != j and z.A[i][j]:
                out = out + E(i + 1, j + 1) * z.A[i][j]
    out = out + diag_element(z.A[0][0], z.A[1][1], z.A[2][2])
    for j in range(3):
        if z.x[j]:
            out = out + v(j + 1) * z.x[j]
        if z.g[j]:
            out = out + delta(j + 1) * z.g[j]
    return out


def z3_basis() -> list[Z3Element]:
    """Z3 elements matching the G2 basis order."""
    out = []
    for lab in LABELS[:6]:
        i, j = int(lab[1]) - 1, int(lab[2]) - 1
        A = [[0] * 3 for _ in range(3)]
        A[i][j] = 1
        out.append(Z3Element(A))
    out.append(Z3Element([[0, 0, 0], [0, 1, 0], [0, 0, -1]]))
    out.append(Z3Element([[1, 0, 0], [0, -1, 0], [0, 0, 0]]))
    for j in range(3):
        out.append(Z3Element(x=[int(k == j) for k in range(3)]))
    for j in range(3):
        out.append(Z3Element(g=[int(k == j) for k in range(3)]))
    return out


# ---------------------------------------------------------------------------
# compact sl2-triples and the complement p


def u(j: int) -> G2Element:
    j = m3(j)
    return (E(m3(j + 2), m3(j + 1)) - E(m3(j + 1), m3(j + 2)) + v(j) + delta(j)) / 4


def r(j: int) -> G2Element:
    j = m3(j)
    return (E(m3(j + 2), m3(j + 1)) * 3 - E(m3(j + 1), m3(j + 2)) * 3 - v(j) - delta(j)) / 4


def compact_triples() -> dict[str, G2Element]:
    out = {}
    for name, gen in (("u", u), ("r", r)):
        out["h_" + name] = gen(2) * (2 * I)
        out["e_" + name] = gen(1) - gen(3) * I
        out["f_" + name] = -gen(1) - gen(3) * I
    return out


def y_elt(j: int) -> G2Element:
    return v(j) - delta(j)


def f_elt(j: int) -> G2Element:
    j = m3(j)
    return E(m3(j + 1), m3(j + 2)) + E(m3(j + 2), m3(j + 1))


def p_basis() -> dict[str, G2Element]:
    """The eight vectors d_k, h_k (k = 3, 1, -1, -3) spanning p over C."""
    third = Fraction(1, 3)
    d33 = diag_element(-1, 0, 1) * 2                      # 2(E33 - E11)
    cusp = diag_element(1, -2, 1)                         # E11 - 2E22 + E33
    a = f_elt(1) * 3 + y_elt(1)
    b = f_elt(3) * 3 - y_elt(3)
    return {
        "d3": f_elt(1) - y_elt(1) + (f_elt(3) + y_elt(3)) * I,
        "d1": cusp * Fraction(-2, 3) + y_elt(2) * (I * Fraction(2, 3)),
        "d-1": a * (-third) + b * (I * third),
        "d-3": d33 - f_elt(2) * (2 * I),
        "h3": d33 + f_elt(2) * (2 * I),
        "h1": a * third + b * (I * third),
        "h-1": cusp * Fraction(-2, 3) - y_elt(2) * (I * Fraction(2, 3)),
        "h-3": y_elt(1) - f_elt(1) + (f_elt(3) + y_elt(3)) * I,
    }


# ---------------------------------------------------------------------------
# Levi gl2, Heisenberg nilradical and the Iwasawa decomposition


def gl2_ident(mat: Sequence[Sequence]) -> G2Element:
    """[[a, b], [c, d]] -> d E11 + (a - d) E22 - a E33 + b v2 - c delta2."""
    (a, b), (c, d) = mat
    return diag_element(d, a - d, -a) + v(2) * b - delta(2) * c


def gl2_ident_inverse(x: G2Element) -> tuple:
    """Inverse of gl2_ident on the Levi subalgebra."""
    allowed = {"eps1", "eps2", "v2", "delta2"}
    if any(x[lab] for lab in LABELS if lab not in allowed):
        raise ValueError("element is not in the Levi subalgebra")
    return ((x["eps1"], x["v2"]), (-x["delta2"], x["eps2"]))


def n_element(cubic: Sequence, mu=0) -> G2Element:
    """a E12 + (b/3) v1 + (c/3) delta3 + d E23 + mu E13 for the cubic (a, b, c, d)."""
    a, b, c, d = cubic
    return (E(1, 2) * a + v(1) * (Fraction(1, 3) * b) + delta(3) * (Fraction(1, 3) * c)
            + E(2, 3) * d + E(1, 3) * mu)


def n_to_cubic(x: G2Element) -> tuple[tuple, object]:
    allowed = {"E12", "v1", "delta3", "E23", "E13"}
    if any(x[lab] for lab in LABELS if lab not in allowed):
        raise ValueError("element is not in the nilradical")
    return (x["E12"], 3 * x["v1"], 3 * x["delta3"], x["E23"]), x["E13"]


def nilradical_basis() -> list[G2Element]:
    return [B("E12"), B("v1"), B("delta3"), B("E23"), B("E13")]


def cubic_power(lin1: tuple, e1: int, lin2: tuple, e2: int) -> tuple:
    """Coefficients (u^3, u^2 v, u v^2, v^3) of lin1^e1 * lin2^e2, lin = (coef_u, coef_v)."""
    poly = [GaussianRational(1)]
    for lin, e in ((lin1, e1), (lin2, e2)):
        for _ in range(e):
            nxt = [GaussianRational(0)] * (len(poly) + 1)
            for k, c in enumerate(poly):
                nxt[k] += c * lin[0]
                nxt[k + 1] += c * lin[1]
            poly = nxt
    if len(poly) != 4:
        raise ValueError("expected a cubic")
    return tuple(_scalar(c) for c in poly)


@lru_cache(maxsize=None)
def _iwasawa_system() -> tuple:
    k_basis = [u(1), u(2), u(3), r(1), r(2), r(3)]
    cols = nilradical_basis() + [B("eps1"), B("eps2"), B("v2")] + k_basis
    return Matrix([c.c for c in cols]).transpose(), tuple(k_basis)


def iwasawa(x: G2Element) -> tuple[tuple, tuple, G2Element]:
    """X = n + m + k with n in the nilradical, m upper triangular in gl2, k in the compact part.

    Returns ((cubic, mu), m as a 2x2 matrix, k).
    """
    mat, k_basis = _iwasawa_system()
    sol = solve(mat, Matrix([[t] for t in x.c]))
    if sol is None:
        raise ArithmeticError("Iwasawa system is inconsistent")
    c = [sol[i, 0] for i in range(DIM)]
    n = n_element((c[0], 3 * c[1], 3 * c[2], c[3]), c[4])
    cubic, mu = n_to_cubic(n)
    m = ((c[5], c[7]), (Fraction(0), c[6]))
    k = G2Element.zero()
    for coef, kb in zip(c[8:], k_basis):
        k = k + kb * coef
    return (cubic, mu), m, k


def m_from_matrix(m: Sequence[Sequence]) -> G2Element:
    return gl2_ident(m)


# ---------------------------------------------------------------------------
# structural checks used by the verify suite


def kernel_dimension() -> int:
    return len(nullspace(proj_matrix()))


def basis_rank() -> int:
    return mat_rank(_basis_matrix())


def jacobi_failures() -> list[tuple[int, int, int]]:
    bs = basis_elements()
    bad = []
    for i in range(DIM):
        for j in range(DIM):
            xy = bracket(bs[i], bs[j])
            for k in range(DIM):
                s = (bracket(xy, bs[k]) + bracket(bracket(bs[j], bs[k]), bs[i])
                     + bracket(bracket(bs[k], bs[i]), bs[j]))
                if not s.is_zero():
                    bad.append((i, j, k))
    return bad
