from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest

from g2forms import cubic_rings as cr
from g2forms import local_zeta as lz
from g2forms.algebra_core import ONE, Z, ZetaPoly
from g2forms.cubic_rings import FactorType
from g2forms.local_zeta import SplittingType

SPLIT, PARTIAL, INERT = SplittingType.SPLIT, SplittingType.PARTIAL, SplittingType.INERT
F = lz.DEFAULT_FORMS


def ident(p):
    return cr.identity_class(p)


@pytest.mark.parametrize("p", [5, 7])
def test_default_forms_have_their_type(p):
    for t, f in F.items():
        assert lz.splitting_type_of(f, p) == t
        lz.check_consistent(f, p, t)
    with pytest.raises(ValueError):
        lz.check_consistent(F[SPLIT], p, INERT)


def test_p_h_examples():
    p, f = 5, F[SPLIT]
    assert lz.p_h(ident(p), f) == ONE - Z
    assert lz.p_h(ident(p).scale(1), f) == Z * (ONE - Z ** 2)
    assert lz.p_h(cr.lattice_class(((p, 0), (0, 1)), p), f) == Z * (ONE - Z)
    with pytest.raises(ValueError):
        lz.p_h(cr.lattice_class(((p, 0), (0, 1)), p), F[INERT])


def test_coset_term():
    t = lz.coset_term(ident(5).scale(1), F[SPLIT])
    assert (t.v, t.c) == (2, 1) and t.poly == lz.p_poly(2, 1)


def test_b0():
    assert lz.b0(5).coeff(0) == 1
    assert lz.b0(5).coeff(3) == 30


@pytest.mark.parametrize("q", [5, 7, 11])
def test_n0_shift(q):
    a, c = lz.n0(q)
    assert lz.shift_s(a, -1, q) == lz.b0(q)
    assert lz.shift_s(c, -1, q) == ZetaPoly.monomial(2, -q)


def test_shift_round_trip():
    p = ZetaPoly([1, Fraction(2, 3), 5], -1)
    assert lz.shift_s(lz.shift_s(p, 2, 7), -2, 7) == p
    assert lz.shift_s(Z, 1, 5) == Z * Fraction(1, 5)


def test_hecke_translates():
    p = 5
    h = ident(p)
    assert sorted(map(str, lz.hecke_translate(h, "Tp"))) == sorted(map(str, cr.sublattices_index_p(h)))
    (c,) = lz.hecke_translate(h, "center_p")
    assert c == h.scale(1) and c.det_val == 2
    assert lz.hecke_translate(lz.hecke_translate(h, "center_p")[0], "Tp_inv") == lz.hecke_translate(h, "Tp")
    back = Counter(y for x in lz.hecke_translate(h, "Tp") for y in lz.hecke_translate(x, "Tp_inv"))
    assert back[h] == p + 1
    with pytest.raises(ValueError):
        lz.hecke_translate(h, "nope")


def test_m_h_split_identity():
    q = 5
    num = lz.crident_numerator(ident(q), F[SPLIT])
    assert num == ZetaPoly([1, q]) * (ONE - Z) ** 2 * ZetaPoly([1, 2])


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("c", [2, 3])
def test_inert_table_row(p, c):
    h = ident(p).scale(c)
    v = h.det_val
    assert lz.crident_numerator(h, F[INERT]) == ZetaPoly([1, p]).shifted(v - c) * (ONE - Z ** 3)


def _lcube_class(p):
    for h, c, v in cr.subring_enum(F[SPLIT], p, 4):
        if c == 0 and cr.class_factor_type(h, F[SPLIT]) == FactorType.LCUBE:
            return h
    raise AssertionError("no primitive l^3 class")


@pytest.mark.parametrize("p", [5, 7])
def test_lcube_row_vanishes(p):
    h0 = _lcube_class(p)
    for c in (0, 1, 2, 3):
        h = h0.scale(c)
        assert lz.crident_numerator(h, F[SPLIT]).is_zero()
        ok, lhs, rhs = lz.verify_crident(h, SPLIT, F[SPLIT], p)
        assert ok and lhs.is_zero() and rhs.is_zero()


def test_local_l_factors():
    assert lz.local_L_E(SPLIT) == (ONE - Z) ** 2
    assert lz.local_L_E(PARTIAL) == ONE - Z ** 2
    assert lz.local_L_E(INERT) == ONE + Z + Z ** 2
    # L(E, s) = zeta_E(s) / zeta(s)
    zeta_e = {SPLIT: (ONE - Z) ** 3, PARTIAL: (ONE - Z) * (ONE - Z ** 2), INERT: ONE - Z ** 3}
    for t in SplittingType:
        assert lz.local_L_E(t) * (ONE - Z) == zeta_e[t]


def test_crident_split_identity():
    ok, lhs, rhs = lz.verify_crident(ident(5), SPLIT, F[SPLIT], 5)
    assert ok and rhs == ZetaPoly([1, 2])


def test_crident_partial_high_content():
    p = 5
    h = ident(p).scale(2)
    ok, lhs, rhs = lz.verify_crident(h, PARTIAL, F[PARTIAL], p)
    assert ok and rhs == ZetaPoly([1, 1 - 1]).shifted(h.det_val - 2)


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("t", list(SplittingType))
def test_crident_sweep(p, t):
    rows = lz.crident_sweep(F[t], p, t, 4, 3)
    assert rows and all(r["ok"] for r in rows)
    assert {r["content"] for r in rows} >= {0, 1}


def test_extended_p_is_not_the_identity():
    # feeding the displayed P to non-ring translates breaks the content-zero case
    p = 5
    h = ident(p)
    num = lz.crident_numerator(h, F[INERT], p_of=lz.p_h_extended)
    with pytest.raises(ArithmeticError):
        num.exact_div(ZetaPoly([1, p])).exact_div(lz.local_L_E(INERT))


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("t", list(SplittingType))
def test_five_case_table(p, t):
    f = F[t]
    for h0, _, _ in lz.ring_classes(f, p, 3, 0):
        for c in (2, 3):
            h = h0.scale(c)
            ft = cr.class_factor_type(h, f)
            want = lz.crident_table_prediction(ft, h.det_val, c, p)
            assert lz.crident_numerator(h, f) == want


def test_table_prediction_shapes():
    q, v, c = 5, 6, 2
    base = ZetaPoly([1, q]).shifted(v - c)
    assert lz.crident_table_prediction(FactorType.L_Q, v, c, q) == base * (ONE - Z ** 2)
    assert lz.crident_table_prediction(FactorType.L1SQ_L2, v, c, q) == base * (ONE - Z) * (ONE - Z ** 2)
    assert lz.crident_table_prediction(FactorType.LCUBE, v, c, q).is_zero()


def test_dchi_examples():
    p = 5
    r = lz.exp_sum_dchi(p, 0, 0, F[SPLIT])
    assert r["ok"] and r["closed_form"] == 1
    r = lz.exp_sum_dchi(p, 1, 0, F[SPLIT])
    assert r["ok"] and r["closed_form"] == 2 and abs(r["raw"] - 2) < 1e-6
    for rr in (0, 1):
        r = lz.exp_sum_dchi(p, 2, rr, F[SPLIT])
        assert r["ok"] and abs(r["raw"]) < 1e-6


@pytest.mark.parametrize("t", list(SplittingType))
def test_dchi_small_grid(t):
    p = 5
    for k in (0, 1):
        for r in (0, 1, 2):
            res = lz.exp_sum_dchi(p, k, r, F[t])
            assert res["ok"], res


def test_dchi_cap():
    with pytest.raises(ValueError):
        lz.exp_sum_dchi(7, 3, 0, F[SPLIT])


def test_local_dirichlet_examples():
    p = 5
    (row,) = lz.local_dirichlet(F[SPLIT], p, SPLIT, 0, lambda key: "a")
    assert row["z_exp"] == 0 and row["coeff"] == "a"
    rows = lz.local_dirichlet(F[SPLIT], p, SPLIT, 1)
    assert sum(1 for r in rows if r["val_det"] == 1 and r["lambda_val"] == 0) == 3
    assert sum(1 for r in rows if r["val_det"] == 0 and r["lambda_val"] == 1) == 1
    assert len(rows) == 5


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("t", list(SplittingType))
def test_local_rows_vs_closure(p, t):
    rows = lz.local_dirichlet(F[t], p, t, 3)
    counts = Counter(r["val_det"] for r in rows if r["lambda_val"] == 0)
    for m in range(4):
        assert counts[m] == len(cr.subrings_by_closure(F[t], p, m))


def test_global_rows_examples():
    p = 5
    (row,) = lz.dirichlet_global_rows([(p, SPLIT, F[SPLIT])], 1)
    assert (row["index"], row["n"]) == (1, 1)
    rows = lz.dirichlet_global_rows([(p, SPLIT, F[SPLIT])], p)
    got = Counter((r["index"], r["n"]) for r in rows)
    assert got == Counter({(1, 1): 1, (p, 1): 3, (1, p): 1})


def test_global_rows_multiplicative():
    p1, p2, f = 5, 7, F[SPLIT]
    bound = p1 * p1 * p2
    rows = lz.dirichlet_global_rows([(p1, SPLIT, f), (p2, SPLIT, f)], bound)
    loc1 = lz.local_dirichlet(f, p1, SPLIT, 3)
    loc2 = lz.local_dirichlet(f, p2, SPLIT, 3)
    want = Counter()
    for a in loc1:
        for b in loc2:
            key = (a["index"] * b["index"], a["n"] * b["n"])
            if key[0] * key[1] <= bound:
                want[key] += 1
    assert Counter((r["index"], r["n"]) for r in rows) == want
