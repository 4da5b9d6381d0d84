"""Local unramified computation at a prime p, with z = p^-s.

Ring classes [h] carry P_h(z) = z^(v - c) (1 - z^(c + 1)) where v = val det h and
c is the content.  The Hecke-translated combination M_h, the polynomial B0 and
the local factor of L(E, s) combine into the cubic-ring identity checked by
verify_crident.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, Iterable, Sequence

import numpy as np

from .algebra_core import ONE, Z, ZetaPoly
from .cubic_rings import (FactorType, LatticeClass, check_fmax, content, count_p1_zeros,
                         epsilon, factor_type, identity_class, mat_val, n_zeros_of_class,
                         sublattices_index_p, subring_enum)


class SplittingType(str, enum.Enum):
    SPLIT = "split"
    PARTIAL = "partial"
    INERT = "inert"

    @classmethod
    def parse(cls, s: str) -> "SplittingType":
        try:
            return cls(s.lower())
        except ValueError:
            raise ValueError(f"unknown splitting type {s!r}") from None


EXPECTED_TYPE = {
    SplittingType.SPLIT: FactorType.L1L2L3,
    SplittingType.PARTIAL: FactorType.L_Q,
    SplittingType.INERT: FactorType.IRRED,
}


# one maximal order per splitting type, valid at p = 5 and 7
DEFAULT_FORMS = {
    SplittingType.SPLIT: (0, 1, -1, 0),
    SplittingType.PARTIAL: (1, 0, 2, 0),
    SplittingType.INERT: (1, 0, 1, 1),
}


def splitting_type_of(f_max: Sequence, p: int) -> SplittingType:
    ft = factor_type(f_max, p)
    for t, e in EXPECTED_TYPE.items():
        if e == ft:
            return t
    raise ValueError(f"form is not unramified at {p}")


def check_consistent(f_max: Sequence, p: int, t: SplittingType) -> None:
    check_fmax(f_max, p)
    if factor_type(f_max, p) != EXPECTED_TYPE[t]:
        raise ValueError(f"form {tuple(f_max)} does not have splitting type {t.value} at {p}")


@dataclass(frozen=True)
class CosetTerm:
    lattice: LatticeClass
    v: int
    c: int
    poly: ZetaPoly


def p_poly(v: int, c: int) -> ZetaPoly:
    """z^(v - c) (1 - z^(c + 1))."""
    return (ONE - ZetaPoly.monomial(c + 1)).shifted(v - c)


def p_h(h: LatticeClass, f_max: Sequence) -> ZetaPoly:
    c = content(h, f_max)
    if c < 0:
        raise ValueError(f"{h} is not a ring class")
    return p_poly(h.det_val, c)


def p_h_ring_only(h: LatticeClass, f_max: Sequence) -> ZetaPoly:
    """P_h for rings and 0 for every other class."""
    c = content(h, f_max)
    return p_poly(h.det_val, c) if c >= 0 else ZetaPoly()


def p_h_extended(h: LatticeClass, f_max: Sequence) -> ZetaPoly:
    """The displayed formula applied to any content, negative included."""
    return p_poly(h.det_val, content(h, f_max))


def coset_term(h: LatticeClass, f_max: Sequence) -> CosetTerm:
    c = content(h, f_max)
    return CosetTerm(h, h.det_val, c, p_poly(h.det_val, c))


def b0(q: int) -> ZetaPoly:
    return ZetaPoly([1, q + 1, q, q * q + q, q * q])


def n0(q: int) -> tuple[ZetaPoly, ZetaPoly]:
    """N0 = A(z) + C(z) T as the pair (A, C), T the Hecke operator symbol."""
    qf = Fraction(q)
    a = ZetaPoly([1, 1 / qf + 1, 1 / qf, 1 / qf ** 2 + 1 / qf, 1 / qf ** 2])
    c = ZetaPoly.monomial(2, -1 / qf)
    return a, c


def shift_s(poly: ZetaPoly, k: int, q: int) -> ZetaPoly:
    """Substitute s -> s + k, i.e. z -> q^-k z."""
    qf = Fraction(q)
    return ZetaPoly.from_dict({j: c * qf ** (-k * j) for j, c in poly.to_dict().items()})


def hecke_translate(h: LatticeClass, which: str) -> list[LatticeClass]:
    if which == "Tp":
        return sublattices_index_p(h)
    if which == "Tp_inv":
        return [x.scale(-1) for x in sublattices_index_p(h)]
    if which == "center_p":
        return [h.scale(1)]
    if which == "center_p_inv":
        return [h.scale(-1)]
    raise ValueError(f"unknown Hecke translate {which!r}")


def m_h(h: LatticeClass, f_max: Sequence, p: int | None = None,
        p_of: Callable[[LatticeClass, Sequence], ZetaPoly] = p_h_ring_only) -> ZetaPoly:
    """q^2 P_hp + q P_{h T(p)} + P_{h T(p^-1)} + P_{h p^-1} + (N(f_max . h) - 1) P_h."""
    q = h.p
    if p is not None and p != q:
        raise ValueError("prime mismatch")

    def total(classes: Iterable[LatticeClass]) -> ZetaPoly:
        out = ZetaPoly()
        for x in classes:
            out = out + p_of(x, f_max)
        return out

    return (total(hecke_translate(h, "center_p")) * (q * q)
            + total(hecke_translate(h, "Tp")) * q
            + total(hecke_translate(h, "Tp_inv"))
            + total(hecke_translate(h, "center_p_inv"))
            + p_of(h, f_max) * (n_zeros_of_class(h, f_max) - 1))


def crident_numerator(h: LatticeClass, f_max: Sequence,
                      p_of: Callable[[LatticeClass, Sequence], ZetaPoly] = p_h_ring_only) -> ZetaPoly:
    """B0 P_h - z^2 M_h."""
    q = h.p
    return b0(q) * p_h(h, f_max) - Z * Z * m_h(h, f_max, p_of=p_of)


def local_L_E(t: SplittingType) -> ZetaPoly:
    """L(E, s)^-1 as a polynomial in z."""
    if t == SplittingType.SPLIT:
        return (ONE - Z) * (ONE - Z)
    if t == SplittingType.PARTIAL:
        return ONE - Z * Z
    return ZetaPoly([1, 1, 1])


def n_fmax(t: SplittingType) -> int:
    return {SplittingType.SPLIT: 3, SplittingType.PARTIAL: 1, SplittingType.INERT: 0}[t]


def crident_rhs(h: LatticeClass, f_max: Sequence, t: SplittingType) -> ZetaPoly:
    c = content(h, f_max)
    if mat_val(h) != c:
        return ZetaPoly()
    return ZetaPoly([1, n_fmax(t) - epsilon(h)]).shifted(h.det_val - c)


def verify_crident(h: LatticeClass, t: SplittingType, f_max: Sequence,
                   p: int) -> tuple[bool, ZetaPoly, ZetaPoly]:
    """Both sides of (1 + qz)^-1 L(E, s) (B0 P_h - z^2 M_h) = 1[val = c] z^(v-c) (1 + (N - eps) z)."""
    check_consistent(f_max, p, t)
    if h.p != p:
        raise ValueError("prime mismatch")
    num = crident_numerator(h, f_max)
    lhs = num.exact_div(ZetaPoly([1, p])).exact_div(local_L_E(t))
    rhs = crident_rhs(h, f_max, t)
    return lhs == rhs, lhs, rhs


def crident_table_prediction(ftype: FactorType, v: int, c: int, q: int) -> ZetaPoly:
    """The factored value of B0 P_h - z^2 M_h for content c >= 2."""
    base = ZetaPoly([1, q]).shifted(v - c)
    one = ONE
    if ftype == FactorType.IRRED:
        return base * (one - Z ** 3)
    if ftype == FactorType.L_Q:
        return base * (one - Z ** 2)
    if ftype == FactorType.L1L2L3:
        return base * (one - Z) ** 2 * ZetaPoly([1, 2])
    if ftype == FactorType.L1SQ_L2:
        return base * (one - Z) * (one - Z ** 2)
    return ZetaPoly()


def ring_classes(f_max: Sequence, p: int, max_val: int, max_content: int | None = None) -> list:
    out = []
    for h, c, v in subring_enum(f_max, p, max_val):
        if max_content is None or c <= max_content:
            out.append((h, c, v))
    return out


def crident_sweep(f_max: Sequence, p: int, t: SplittingType, max_val: int,
                  max_content: int) -> list[dict]:
    rows = []
    for h, c, v in ring_classes(f_max, p, max_val, max_content):
        ok, lhs, rhs = verify_crident(h, t, f_max, p)
        rows.append({"hnf": h.hnf(), "content": c, "val_det": v, "lhs": lhs.to_json(),
                     "rhs": rhs.to_json(), "ok": ok})
    return rows


# ---------------------------------------------------------------------------
# the exponential sum D_chi


def _psi(num: np.ndarray, modulus: int) -> np.ndarray:
    return np.exp(2j * np.pi * (np.mod(num, modulus) / modulus))


def dchi_starred(p: int, k: int, r: int, f_max: Sequence) -> complex:
    """Sum over W(O)/p^k with the starred congruences of psi(<omega, (p^-r al, be, ga, de)>/p^k)."""
    a, b, c, d = (int(t) for t in f_max)
    if d % p ** r:
        raise ValueError("the starred sum needs p^r | d")
    dr = d // p ** r
    N = p ** k
    pr = p ** r
    rng = np.arange(N, dtype=np.int64)
    be, ga, de = np.meshgrid(rng, rng, rng, indexing="ij")
    total = 0j
    cond3 = np.mod(ga * ga - be * de, N) == 0
    for al in range(N):
        m = (cond3 & (np.mod(al * ga - pr * be * be, N) == 0)
             & (np.mod(al * de - pr * be * ga, N) == 0))
        if not m.any():
            continue
        num = a * de[m] - b * ga[m] + c * be[m] - dr * al
        total += complex(_psi(num, N).sum())
    return total


def dchi_raw(p: int, k: int, r: int, f_max: Sequence) -> complex:
    """The defining integral over W(F), reduced to a finite sum over a period cell.

    With j = k + r, alpha = A/p^j and beta, gamma, delta = B/p^k, G/p^k, D/p^k.  The
    integrand is invariant under W(O) translations, so the integral is the sum over
    A mod p^j and B, G, D mod p^k.  Returns the sum without the q^k prefactor.
    """
    a, b, c, d = (int(t) for t in f_max)
    j = k + r
    Pj, Pk, Pr = p ** j, p ** k, p ** r
    P2k = Pk * Pk
    rng = np.arange(Pk, dtype=np.int64)
    Bv, G, Dv = np.meshgrid(rng, rng, rng, indexing="ij")
    cond3 = np.mod(G * G - Bv * Dv, Pk) == 0
    base = np.mod((a * Dv - b * G + c * Bv) * Pr, Pj)
    total = 0j
    for A in range(Pj):
        m = (cond3
             & (np.mod(Pj * Bv * Bv - Pk * A * G, P2k) == 0)
             & (np.mod(Pk * A * Dv - Pj * Bv * G, P2k) == 0))
        if not m.any():
            continue
        total += complex(_psi(base[m] - d * A, Pj).sum())
    return total


def dchi_closed_form(p: int, k: int, r: int, f_max: Sequence) -> int:
    d = int(f_max[3])
    if d % p ** r:
        return 0
    if k == 0:
        return 1
    if k == 1:
        eps = 1 if r == 0 else 2
        return count_p1_zeros(f_max, p) - eps
    return 0


def exp_sum_dchi(p: int, k: int, r: int, f_max: Sequence, max_terms: int = 7 ** 8 * 25,
                 tol: float = 1e-6) -> dict:
    """Normalized D_chi from both finite sums, with the closed form for comparison.

    Both sums are divided by q^(j + k), so the closed form reads 1, N(f_max) - eps, 0
    for k = 0, 1, >= 2.  "ok" records agreement of every available route within tol.
    """
    check_fmax(f_max, p)
    if p ** (4 * k + r) > max_terms:
        raise ValueError("sum too large for the configured cap")
    q = p
    j = k + r
    raw = q ** k * dchi_raw(p, k, r, f_max) / q ** (j + k)
    closed = dchi_closed_form(p, k, r, f_max)
    starred = None
    if int(f_max[3]) % p ** r == 0:
        starred = q ** j * dchi_starred(p, k, r, f_max) / q ** (j + k)
    ok = abs(raw - closed) < tol and (starred is None or abs(starred - closed) < tol)
    return {"p": p, "k": k, "r": r, "fmax": list(f_max), "raw": raw, "starred": starred,
            "closed_form": closed, "ok": bool(ok)}


# ---------------------------------------------------------------------------
# Dirichlet series rows


def local_dirichlet(f_max: Sequence, p: int, t: SplittingType, max_val: int,
                    coeff_oracle: Callable = lambda key: 1) -> list[dict]:
    """Rows (ring class [x], lambda-valuation j) with v(x) + j <= max_val.

    The z-exponent of |lambda det x|^s is v + j and the weight |lambda^2 det x|^-2 is
    q^(2(2j + v)).  The coefficient is the oracle applied to the key (p, hnf of x, j),
    which names the ring Z + p^j T(x).
    """
    check_consistent(f_max, p, t)
    rows = []
    for h, c, v in subring_enum(f_max, p, max_val):
        for j in range(max_val - v + 1):
            key = (p, tuple(tuple(e) for e in h.hnf()), j)
            rows.append({
                "hnf": h.hnf(), "content": c, "val_det": v, "lambda_val": j,
                "z_exp": v + j, "weight": p ** (2 * (2 * j + v)),
                "index": p ** v, "n": p ** j,
                "coeff": coeff_oracle(key),
            })
    rows.sort(key=lambda r: (r["z_exp"], r["val_det"], r["hnf"]))
    return rows


def dirichlet_global_rows(edata: Sequence[tuple], bound: int,
                          coeff_oracle: Callable = lambda key: 1) -> list[dict]:
    """Multiplicative assembly of local rows, keeping index * n <= bound."""
    locals_ = []
    for p, t, f in edata:
        t = SplittingType.parse(t) if isinstance(t, str) else t
        maxv = 0
        while p ** (maxv + 1) <= bound:
            maxv += 1
        locals_.append((p, local_dirichlet(f, p, t, maxv, lambda key: key)))
    rows = []
    for combo in iproduct(*[rs for _, rs in locals_]):
        index = 1
        n = 1
        for r in combo:
            index *= r["index"]
            n *= r["n"]
        if index * n > bound:
            continue
        key = tuple(r["coeff"] for r in combo)
        rows.append({"index": index, "n": n, "local": [
            {"p": p, "hnf": r["hnf"], "lambda_val": r["lambda_val"]}
            for (p, _), r in zip(locals_, combo)], "coeff": coeff_oracle(key)})
    rows.sort(key=lambda r: (r["index"] * r["n"], r["index"], r["n"], str(r["local"])))
    return rows
