from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import fractions
from g2forms.algebra_core import (I, ONE, Z, GaussianRational, Matrix, ZetaPoly, leading_minors,
                                  mat_rank, nullspace, poly_mul, solve)
from g2forms.g2_lie import proj_matrix

polys = st.builds(ZetaPoly, st.lists(fractions(-5, 5), max_size=5), st.integers(-3, 3))


def test_difference_of_squares():
    assert poly_mul(ONE - Z, ONE + Z) == ONE - Z ** 2


def test_zero_annihilates():
    assert poly_mul(ONE + Z * 5, ZetaPoly()) == ZetaPoly()


def test_geometric_sum():
    assert poly_mul(ONE - Z, ONE + Z + Z ** 2) == ONE - Z ** 3


def test_trailing_zeros_stripped():
    p = ZetaPoly([0, 1, 2, 0, 0], shift=-1)
    assert p.coeffs == (1, 2) and p.shift == 0 and p.degree() == 1
    assert ZetaPoly([0, 0]).is_zero() and ZetaPoly([0, 0]).degree() == -1


def test_laurent_shift():
    p = ZetaPoly([3], -2)
    assert p.valuation() == -2 and (p * Z ** 2) == ZetaPoly([3])
    with pytest.raises(ValueError):
        ZetaPoly().valuation()


def test_exact_div():
    assert ((ONE - Z ** 3).exact_div(ONE - Z)) == ONE + Z + Z ** 2
    with pytest.raises(ArithmeticError):
        (ONE + Z).exact_div(ONE - Z)


def test_rank_examples():
    assert mat_rank(Matrix.identity(3)) == 3
    assert mat_rank(Matrix.zeros(4, 4)) == 0
    assert mat_rank(proj_matrix()) == 7
    assert proj_matrix().nrows == 7 and proj_matrix().ncols == 21


def test_gaussian_arithmetic():
    assert I * I == -1
    z = GaussianRational(Fraction(1, 2), 3)
    assert z * (GaussianRational(1) / z) == 1
    assert str(GaussianRational(1, -2)) == "1-2i"


def test_solve_and_nullspace():
    m = Matrix([[1, 2], [2, 4]])
    assert solve(m, Matrix([[1], [3]])) is None
    (k,) = nullspace(m)
    assert m.apply(k) == (0, 0)


def test_leading_minors():
    assert leading_minors(Matrix([[2, 1], [1, 2]])) == [2, 3]


@given(fractions(), st.integers(-50, 50), st.integers(1, 50))
def test_rational_exact(a, c, d):
    x = Fraction(c, d)
    assert (a + x) - x == a


@given(polys, polys, polys)
def test_poly_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_transpose(rows):
    m = Matrix(rows)
    assert mat_rank(m) == mat_rank(m.transpose())
