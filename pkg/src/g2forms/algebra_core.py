"""Exact scalars, Laurent polynomials in z and small dense matrices.

Everything here is immutable and built on :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction, "GaussianRational"]


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and decimal strings like "1/3" to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)) or isinstance(x, _RationalABC):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


class GaussianRational:
    """An element re + i*im of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0) -> None:
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(x, 0)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __eq__(self, other) -> bool:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __mul__(self, other) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __truediv__(self, other) -> "GaussianRational":
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        t = self * o.conjugate()
        return GaussianRational(t.re / n, t.im / n)

    def __rtruediv__(self, other) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


I = GaussianRational(0, 1)


def conj(x):
    """Complex conjugate of an exact scalar (identity on rationals)."""
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


# ---------------------------------------------------------------------------
# Laurent polynomials in z


class ZetaPoly:
    """Laurent polynomial sum_k coeffs[k] z^(shift + k) with rational coefficients."""

    __slots__ = ("shift", "coeffs")

    def __init__(self, coeffs: Iterable = (), shift: int = 0) -> None:
        cs = [as_fraction(c) for c in coeffs]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        cs = cs[lo:hi]
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "shift", int(shift) + lo if cs else 0)

    def __setattr__(self, name, value):
        raise AttributeError("ZetaPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c=1) -> "ZetaPoly":
        return cls([c], k)

    @classmethod
    def from_dict(cls, terms: dict) -> "ZetaPoly":
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        cs = [Fraction(0)] * (hi - lo + 1)
        for k, c in terms.items():
            cs[k - lo] += as_fraction(c)
        return cls(cs, lo)

    def to_dict(self) -> dict:
        return {self.shift + k: c for k, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        """Lowest exponent; raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("valuation of zero polynomial")
        return self.shift

    def degree(self) -> int:
        if not self.coeffs:
            return -1
        return self.shift + len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        j = k - self.shift
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    def __repr__(self) -> str:
        return f"ZetaPoly({[str(c) for c in self.coeffs]}, shift={self.shift})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in sorted(self.to_dict().items()):
            if k == 0:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(f"z^{k}")
            elif c == -1:
                parts.append(f"-z^{k}")
            else:
                parts.append(f"{c}*z^{k}")
        return " + ".join(parts).replace("+ -", "- ")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ZetaPoly([other])
        if not isinstance(other, ZetaPoly):
            return NotImplemented
        return self.shift == other.shift and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.shift, self.coeffs))

    def _coerce(self, other) -> "ZetaPoly":
        if isinstance(other, ZetaPoly):
            return other
        return ZetaPoly([as_fraction(other)])

    def __add__(self, other) -> "ZetaPoly":
        o = self._coerce(other)
        d = self.to_dict()
        for k, c in o.to_dict().items():
            d[k] = d.get(k, 0) + c
        return ZetaPoly.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "ZetaPoly":
        return ZetaPoly([-c for c in self.coeffs], self.shift)

    def __sub__(self, other) -> "ZetaPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ZetaPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "ZetaPoly":
        return poly_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ZetaPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = ZetaPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def shifted(self, k: int) -> "ZetaPoly":
        """Multiply by z^k."""
        return ZetaPoly(self.coeffs, self.shift + k)

    def divmod(self, other: "ZetaPoly") -> tuple["ZetaPoly", "ZetaPoly"]:
        """Laurent long division by powers of z from the top.

        The quotient is taken with respect to the ordinary polynomial parts
        after factoring out the lowest powers of z of both operands.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZetaPoly(), ZetaPoly()
        num = list(self.coeffs)
        den = list(other.coeffs)
        q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
        for i in range(len(num) - len(den), -1, -1):
            c = num[i + len(den) - 1] / den[-1]
            q[i] = c
            if c:
                for j, dj in enumerate(den):
                    num[i + j] -= c * dj
        quot = ZetaPoly(q, self.shift - other.shift)
        rem = ZetaPoly(num, self.shift)
        return quot, rem

    def exact_div(self, other: "ZetaPoly") -> "ZetaPoly":
        """Quotient, raising ArithmeticError unless the division is exact."""
        quot, rem = self.divmod(other)
        if not rem.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return quot

    def __call__(self, z):
        return sum((c * z ** (self.shift + k) for k, c in enumerate(self.coeffs)),
                   Fraction(0) if isinstance(z, (int, Fraction)) else 0)

    def to_json(self) -> dict:
        return {str(k): str(c) for k, c in sorted(self.to_dict().items())}


Z = ZetaPoly.monomial(1)
ONE = ZetaPoly([1])


def poly_mul(p: ZetaPoly, q: ZetaPoly) -> ZetaPoly:
    """Product of two Laurent polynomials by direct convolution."""
    if p.is_zero() or q.is_zero():
        return ZetaPoly()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return ZetaPoly(out, p.shift + q.shift)


# ---------------------------------------------------------------------------
# Dense matrices over Q or Q(i)


class Matrix:
    """Immutable rectangular matrix with exact entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]) -> None:
        rs = tuple(tuple(_exact(e) for e in r) for r in rows)
        if rs and any(len(r) != len(rs[0]) for r in rs):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls([[0] * c for _ in range(r)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "Matrix(" + repr([[str(e) for e in r] for r in self.rows]) + ")"

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows))) if self.rows else Matrix([])

    T = property(transpose)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            cols = list(zip(*other.rows))
            return Matrix([[_dot(r, c) for c in cols] for r in self.rows])
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def apply(self, vec: Sequence) -> tuple:
        return tuple(_dot(r, vec) for r in self.rows)

    def rank(self) -> int:
        return mat_rank(self)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("det of non-square matrix")
        a = [list(r) for r in self.rows]
        n = len(a)
        det = Fraction(1)
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            det = det * a[c][c]
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    f = a[r][c] / a[c][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return det

    def inverse(self) -> "Matrix":
        n = self.nrows
        sol = solve(self, Matrix.identity(n))
        if sol is None:
            raise ZeroDivisionError("singular matrix")
        return sol


def _exact(e):
    if isinstance(e, GaussianRational):
        return e if e.im != 0 else e.re
    return as_fraction(e)


def _dot(r, c):
    s = Fraction(0)
    for a, b in zip(r, c):
        if a and b:
            s = s + a * b
    return s


def rref(m: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c] if not isinstance(a[r][c], GaussianRational) else GaussianRational(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def mat_rank(m: Matrix) -> int:
    """Rank over the fraction field by exact elimination."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return len(rref(m)[1])


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """A solution X of A X = B, or None when the system is inconsistent."""
    aug = Matrix([list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)])
    red, piv = rref(aug)
    n = a.ncols
    if any(p >= n for p in piv):
        return None
    x = [[Fraction(0)] * b.ncols for _ in range(n)]
    for row, p in enumerate(piv):
        for j in range(b.ncols):
            x[p][j] = red[row][n + j]
    return Matrix(x)


def nullspace(m: Matrix) -> list[tuple]:
    """Basis of the right kernel {x : m x = 0}."""
    red, piv = rref(m)
    n = m.ncols
    free = [j for j in range(n) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in enumerate(piv):
            v[p] = -red[row][f]
        basis.append(tuple(v))
    return basis


def leading_minors(m: Matrix) -> list:
    """Determinants of the leading principal k x k submatrices, k = 1..n."""
    return [Matrix([r[:k] for r in m.rows[:k]]).det() for k in range(1, m.nrows + 1)]
