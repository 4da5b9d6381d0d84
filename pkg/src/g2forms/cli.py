"""Command line entry point: verification suites, tables and single evaluations.

Every command prints one JSON document (or a plain table without --json where
offered).  Keys are sorted, so identical flags give byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import cubic_rings as cr
from . import g2_lie as gl
from . import local_zeta as lz
from . import whittaker as wh
from .suites import SUITES, Config, jsonable, pmap, run_suite


class UsageError(Exception):
    """Bad flag values detected after parsing; reported with exit code 2."""


def _dump(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)


def _emit(obj) -> None:
    sys.stdout.write(_dump(obj) + "\n")


def _table(rows: Sequence[dict], cols: Sequence[str]) -> None:
    cells = [[str(jsonable(r[c])) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
    for row in cells:
        print("  ".join(x.ljust(w) for x, w in zip(row, widths)))


def parse_form(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected four comma separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"form coefficients must be integers: {text!r}") from None


def parse_real_form(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected four comma separated numbers, got {text!r}")
    try:
        return tuple(Fraction(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coefficient in {text!r}") from None


def parse_type(text: str) -> lz.SplittingType:
    try:
        return lz.SplittingType.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def parse_primes(text: str) -> list[tuple]:
    """"5:split,7:inert" or "5,7" (types read off the form)."""
    out = []
    for item in text.split(","):
        p, _, t = item.partition(":")
        try:
            p = int(p)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad prime {item!r}") from None
        out.append((p, parse_type(t) if t else None))
    return out


def _form_for(args, t: lz.SplittingType, p: int) -> tuple:
    f = args.fmax if args.fmax is not None else lz.DEFAULT_FORMS[t]
    try:
        lz.check_consistent(f, p, t)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return f


def _float(x) -> float:
    return float(x)


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    cfg = Config(seed=args.seed, ode_tol=args.ode_tol, ode_step=args.step,
                 bessel_tol=args.bessel_tol, mellin_tol=args.mellin_tol,
                 expsum_tol=args.expsum_tol, max_val=args.max_val,
                 max_content=args.max_content)
    if args.p is not None:
        cfg.primes = (args.p,)
    if args.type is not None:
        cfg.types = (args.type,)
    rep = run_suite(args.suite, cfg)
    _emit(rep.to_json(args.timing))
    return 0 if rep.ok else 1


def _subrings(args) -> dict:
    f = args.fmax if args.fmax is not None else lz.DEFAULT_FORMS[lz.SplittingType.SPLIT]
    try:
        return cr.subring_json(f, args.p, args.max_val)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _crident_rows(args) -> tuple[tuple, list[dict]]:
    f = _form_for(args, args.type, args.p)
    return f, lz.crident_sweep(f, args.p, args.type, args.max_val, args.max_content)


def _whittaker_grid(args) -> list[dict]:
    g = args.grid
    xs = np.linspace(-0.5, 0.5, g)
    ys = np.linspace(0.5, 2.0, g)
    rows = []
    for x in xs:
        for y in ys:
            params = wh.WhittakerParams(args.n, args.w, float(x), float(y), args.scale)
            for v in range(-args.n, args.n + 1):
                val = wh.whittaker_component(params, v)
                rows.append({"x": float(x), "y": float(y), "scale": args.scale, "component": v,
                             "value_re": val.real, "value_im": val.imag})
    return rows


def cmd_table(args) -> int:
    kind = args.kind
    if kind == "subrings":
        _emit(_subrings(args))
    elif kind == "crident":
        f, rows = _crident_rows(args)
        _emit({"p": args.p, "type": args.type, "fmax": list(f), "rows": rows})
    elif kind == "dirichlet":
        t = args.type
        f = _form_for(args, t, args.p)
        _emit({"p": args.p, "type": t, "fmax": list(f),
               "rows": lz.local_dirichlet(f, args.p, t, args.max_val)})
    elif kind == "whittaker":
        _check_w(args.w)
        _emit({"n": args.n, "w": [_float(t) for t in args.w], "rows": _whittaker_grid(args)})
    elif kind == "brackets":
        _emit({"labels": list(gl.LABELS), "rows": json.loads(gl.bracket_table_json())})
    return 0


def cmd_crident(args) -> int:
    f, rows = _crident_rows(args)
    ok = all(r["ok"] for r in rows)
    if args.json:
        _emit({"p": args.p, "type": args.type, "fmax": list(f), "rows": rows, "ok": ok})
    else:
        _table([{**r, "hnf": _hnf_text(r["hnf"])} for r in rows], ["hnf", "content", "val_det", "ok"])
        print(f"{sum(r['ok'] for r in rows)}/{len(rows)} classes satisfy the identity")
    return 0 if ok else 1


def cmd_expsum(args) -> int:
    try:
        res = lz.exp_sum_dchi(args.p, args.k, args.r, args.fmax, tol=args.tol)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(res)
    return 0 if res["ok"] else 1


def cmd_dirichlet(args) -> int:
    edata = []
    for p, t in args.primes:
        try:
            t = t if t is not None else lz.splitting_type_of(args.fmax, p)
            lz.check_consistent(args.fmax, p, t)
        except ValueError as e:
            raise UsageError(str(e)) from None
        edata.append((p, t, args.fmax))
    rows = lz.dirichlet_global_rows(edata, args.bound)
    if args.json:
        _emit({"fmax": list(args.fmax), "primes": [[p, t] for p, t, _ in edata],
               "bound": args.bound, "rows": rows})
    else:
        _table([{"index": r["index"], "n": r["n"],
                 "local": " ".join(f"{x['p']}:{_hnf_text(x['hnf'])}" for x in r["local"])}
                for r in rows], ["index", "n", "local"])
    return 0


def _hnf_text(h) -> str:
    return "[[" + ",".join(h[0]) + "],[" + ",".join(h[1]) + "]]"


def _check_w(w) -> None:
    try:
        if not wh.w_nonneg(w):
            raise UsageError("w is not >= 0: h_w has non-real roots")
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_whittaker(args) -> int:
    _check_w(args.w)
    try:
        params = wh.WhittakerParams(args.n, args.w, args.x, args.y, args.scale)
        vals = [(v, wh.whittaker_component(params, v)) for v in range(-args.n, args.n + 1)]
    except ValueError as e:
        raise UsageError(str(e)) from None
    rows = [{"component": v, "value_re": z.real, "value_im": z.imag} for v, z in vals]
    if args.json:
        _emit(rows)
    else:
        _table(rows, ["component", "value_re", "value_im"])
    return 0


def cmd_odecheck(args) -> int:
    _check_w(args.w)
    try:
        params = wh.WhittakerParams(args.n, args.w, args.x, args.y, args.scale)
        res = wh.ode_residuals(params, args.step)
    except ValueError as e:
        raise UsageError(str(e)) from None
    worst = {str(k): float(np.max(v)) for k, v in res.items()}
    ok = max(worst.values()) <= args.tol
    _emit({"n": args.n, "w": [_float(t) for t in args.w], "point": [args.x, args.y, args.scale],
           "step": args.step, "max_residual": worst, "tol": args.tol, "ok": ok})
    return 0 if ok else 1


def _arch_bessel(tol: float) -> list[dict]:
    cases = [(nu, float(x)) for nu in (0, 1, 2, 3, 0.5, 2.5) for x in np.geomspace(0.3, 20, 12)]
    out = pmap(lambda c: (c, max(wh.bessel_identity_residuals(*c))), cases)
    return [{"case": list(c), "residual": r, "ok": r <= tol} for c, r in out]


def _arch_mellin(tol: float) -> list[dict]:
    rows = []
    for s, mu, nu in ((s, mu, nu) for s in (2.0, 3.0, 4.5) for mu, nu in ((0, 0), (0.5, 0.5), (1.0, 0.3))):
        lhs, rhs = wh.mellin_kk(s, mu, nu)
        rows.append({"case": [s, mu, nu], "integral": lhs, "closed_form": rhs,
                     "ok": abs(lhs - rhs) <= tol * abs(rhs)})
    return rows


def _arch_multinomial(tol: float) -> list[dict]:
    rows = []
    for N in range(6):
        for x in (0.5, 1.5, 2.0, 4.0):
            lhs, rhs = wh.multinomial_bessel_check(N, 0, x)
            rows.append({"case": [N, x], "sum": lhs, "derivative": rhs,
                         "ok": abs(lhs - rhs) <= tol * abs(rhs)})
    return rows


def _arch_jnu(tol: float) -> list[dict]:
    rows = []
    for p_e in ((1, 0, -1, 0),):
        for nu in (2.0,):
            r1, r2, agree = wh.j_nu_two_resolutions(p_e, nu)
            rows.append({"case": [list(p_e), nu], "value": r1.value, "error": r1.error,
                         "second_resolution": r2.value, "ok": agree})
    return rows


def _arch_gamma(tol: float) -> list[dict]:
    rows = []
    for n in (2, 3, 4):
        for s in (3.5, 4.0, 6.0, 7.25):
            lhs, rhs = wh.arch_gamma_check(s, n)
            rows.append({"case": [s, n], "ratio": lhs, "predicted": rhs,
                         "ok": abs(lhs - rhs) <= tol * abs(rhs)})
    return rows


ARCH = {"bessel": (_arch_bessel, 1e-8), "mellin": (_arch_mellin, 1e-6),
        "multinomial": (_arch_multinomial, 1e-8), "jnu": (_arch_jnu, 1e-3),
        "gamma": (_arch_gamma, 1e-8)}


def cmd_archcheck(args) -> int:
    fn, default_tol = ARCH[args.suite]
    tol = args.tol if args.tol is not None else default_tol
    rows = fn(tol)
    ok = all(r["ok"] for r in rows)
    _emit({"suite": args.suite, "tol": tol, "rows": rows, "ok": ok})
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def _add_point(sp, with_grid: bool = False) -> None:
    sp.add_argument("--n", type=int, default=2, help="weight n >= 1")
    sp.add_argument("--w", type=parse_real_form, default=(0, 1, -1, 0),
                    help="character as cubic coefficients a,b,c,d")
    if not with_grid:
        sp.add_argument("--x", type=float, default=0.1)
        sp.add_argument("--y", type=float, default=1.3)
    sp.add_argument("--scale", type=float, default=0.7 if not with_grid else 1.0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="g2forms", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run an invariant suite and print a SuiteReport")
    v.add_argument("--suite", choices=SUITES + ("all",), required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--p", type=int, default=None, help="restrict prime-dependent checks to p")
    v.add_argument("--type", type=parse_type, default=None, help="split, partial or inert")
    v.add_argument("--max-val", type=int, default=6)
    v.add_argument("--max-content", type=int, default=3)
    v.add_argument("--ode-tol", type=float, default=1e-5)
    v.add_argument("--step", type=float, default=1e-4)
    v.add_argument("--bessel-tol", type=float, default=1e-8)
    v.add_argument("--mellin-tol", type=float, default=1e-6)
    v.add_argument("--expsum-tol", type=float, default=1e-6)
    v.add_argument("--timing", action="store_true", help="include wall time in the report")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="print a JSON table")
    t.add_argument("kind", choices=("subrings", "dirichlet", "crident", "whittaker", "brackets"))
    t.add_argument("--p", type=int, default=5)
    t.add_argument("--fmax", type=parse_form, default=None)
    t.add_argument("--type", type=parse_type, default=lz.SplittingType.SPLIT)
    t.add_argument("--max-val", type=int, default=2)
    t.add_argument("--max-content", type=int, default=3)
    t.add_argument("--grid", type=int, default=3)
    _add_point(t, with_grid=True)
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("crident", help="check the cubic-ring identity class by class")
    c.add_argument("--p", type=int, default=5)
    c.add_argument("--type", type=parse_type, default=lz.SplittingType.SPLIT)
    c.add_argument("--fmax", type=parse_form, default=None)
    c.add_argument("--max-content", type=int, default=3)
    c.add_argument("--max-val", type=int, default=6)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_crident)

    e = sub.add_parser("expsum", help="the exponential sum D_chi by brute force")
    e.add_argument("--p", type=int, default=5)
    e.add_argument("--k", type=int, default=1)
    e.add_argument("--r", type=int, default=0)
    e.add_argument("--fmax", type=parse_form, default=(0, 1, -1, 0))
    e.add_argument("--tol", type=float, default=1e-6)
    e.set_defaults(func=cmd_expsum)

    d = sub.add_parser("dirichlet", help="rows of the global Dirichlet series")
    d.add_argument("--fmax", type=parse_form, required=True)
    d.add_argument("--primes", type=parse_primes, required=True, help="e.g. 5:split,7:split")
    d.add_argument("--bound", type=int, default=35)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_dirichlet)

    w = sub.add_parser("whittaker", help="components of the generalized Whittaker function")
    _add_point(w)
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_whittaker)

    o = sub.add_parser("odecheck", help="residuals of the differential equations")
    _add_point(o)
    o.add_argument("--step", type=float, default=1e-4)
    o.add_argument("--tol", type=float, default=1e-5)
    o.set_defaults(func=cmd_odecheck)

    a = sub.add_parser("archcheck", help="archimedean identities")
    a.add_argument("--suite", choices=tuple(ARCH), required=True)
    a.add_argument("--tol", type=float, default=None)
    a.set_defaults(func=cmd_archcheck)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        ap.print_usage(sys.stderr)
        print(f"g2forms: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
