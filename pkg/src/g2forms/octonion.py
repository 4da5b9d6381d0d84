"""Split octonions in the Zorn vector-matrix model.

An octonion is a 2x2 array [[a, v], [phi, d]] with a, d scalars, v in V3 and
phi in the dual space. Cross products identify wedge squares with the dual:
e1 ^ e2 = e3*, cyclically, and likewise e1* ^ e2* = e3.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra_core import as_fraction

Vec3 = tuple


def _vec(v: Sequence) -> tuple:
    if len(v) != 3:
        raise ValueError("expected three coordinates")
    return tuple(as_fraction(x) for x in v)


def cross(u: Vec3, w: Vec3) -> Vec3:
    return (u[1] * w[2] - u[2] * w[1],
            u[2] * w[0] - u[0] * w[2],
            u[0] * w[1] - u[1] * w[0])


def pair3(phi: Vec3, v: Vec3):
    """phi(v) for phi in the dual space."""
    return phi[0] * v[0] + phi[1] * v[1] + phi[2] * v[2]


@dataclass(frozen=True)
class Octonion:
    a: Fraction
    v: Vec3
    phi: Vec3
    d: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "d", as_fraction(self.d))
        object.__setattr__(self, "v", _vec(self.v))
        object.__setattr__(self, "phi", _vec(self.phi))

    @classmethod
    def scalar(cls, c) -> "Octonion":
        return cls(c, (0, 0, 0), (0, 0, 0), c)

    @classmethod
    def zero(cls) -> "Octonion":
        return cls.scalar(0)

    @classmethod
    def from_coords(cls, c: Sequence) -> "Octonion":
        """From the flat 8-tuple (a, v1, v2, v3, f1, f2, f3, d)."""
        return cls(c[0], c[1:4], c[4:7], c[7])

    def coords(self) -> tuple:
        return (self.a, *self.v, *self.phi, self.d)

    def __add__(self, o: "Octonion") -> "Octonion":
        return Octonion.from_coords([x + y for x, y in zip(self.coords(), o.coords())])

    def __sub__(self, o: "Octonion") -> "Octonion":
        return Octonion.from_coords([x - y for x, y in zip(self.coords(), o.coords())])

    def __neg__(self) -> "Octonion":
        return Octonion.from_coords([-x for x in self.coords()])

    def __mul__(self, o):
        if isinstance(o, Octonion):
            return oct_mul(self, o)
        c = as_fraction(o)
        return Octonion.from_coords([c * x for x in self.coords()])

    def __rmul__(self, c):
        c = as_fraction(c)
        return Octonion.from_coords([c * x for x in self.coords()])

    def __str__(self) -> str:
        return to_text(self)


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    """Zorn product."""
    a, v, f, d = x.a, x.v, x.phi, x.d
    a2, v2, f2, d2 = y.a, y.v, y.phi, y.d
    ff = cross(f, f2)
    vv = cross(v, v2)
    return Octonion(
        a * a2 + pair3(f2, v),
        tuple(a * p + d2 * q - r for p, q, r in zip(v2, v, ff)),
        tuple(a2 * p + d * q + r for p, q, r in zip(f, f2, vv)),
        pair3(f, v2) + d * d2,
    )


def oct_norm(x: Octonion) -> Fraction:
    return x.a * x.d - pair3(x.phi, x.v)


def oct_trace(x: Octonion) -> Fraction:
    return x.a + x.d


def oct_conj(x: Octonion) -> Octonion:
    return Octonion(x.d, tuple(-t for t in x.v), tuple(-t for t in x.phi), x.a)


def bilinear(x: Octonion, y: Octonion) -> Fraction:
    """The polarization (x, y) = N(x + y) - N(x) - N(y)."""
    return x.a * y.d + y.a * x.d - pair3(x.phi, y.v) - pair3(y.phi, x.v)


def trilinear(x1: Octonion, x2: Octonion, x3: Octonion) -> Fraction:
    return oct_trace(oct_mul(oct_mul(x1, x2), x3))


def imaginary_part(x: Octonion) -> Octonion:
    """(x - x*)/2, the projection to trace zero."""
    return (x - oct_conj(x)) * Fraction(1, 2)


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z))


def to_text(x: Octonion) -> str:
    v = ",".join(str(t) for t in x.v)
    f = ",".join(str(t) for t in x.phi)
    return f"{x.a};{v};{f};{x.d}"


def from_text(s: str) -> Octonion:
    parts = s.strip().split(";")
    if len(parts) != 4:
        raise ValueError(f"malformed octonion text {s!r}")
    v = parts[1].split(",")
    f = parts[2].split(",")
    return Octonion(Fraction(parts[0]), [Fraction(t) for t in v], [Fraction(t) for t in f],
                    Fraction(parts[3]))


# ---------------------------------------------------------------------------
# V7: trace zero octonions in the basis e1, e2, e3, u0, e1*, e2*, e3*

V7_LABELS = ("e1", "e2", "e3", "u0", "e1*", "e2*", "e3*")


def v7_to_octonion(t: Sequence) -> Octonion:
    t = [as_fraction(c) for c in t]
    if len(t) != 7:
        raise ValueError("V7 element needs 7 coordinates")
    return Octonion(t[3], t[0:3], t[4:7], -t[3])


def octonion_to_v7(x: Octonion) -> tuple:
    if oct_trace(x) != 0:
        raise ValueError("octonion is not trace zero")
    return (*x.v, x.a, *x.phi)


def v7_basis() -> list[tuple]:
    return [tuple(Fraction(int(i == j)) for j in range(7)) for i in range(7)]


def v7_bilinear(s: Sequence, t: Sequence):
    """Restriction of the octonion form to V7; works over Q(i) coordinates too."""
    return (-2 * s[3] * t[3]
            - (s[4] * t[0] + s[5] * t[1] + s[6] * t[2])
            - (t[4] * s[0] + t[5] * s[1] + t[6] * s[2]))


def v7_gram():
    return [[v7_bilinear(a, b) for b in v7_basis()] for a in v7_basis()]
