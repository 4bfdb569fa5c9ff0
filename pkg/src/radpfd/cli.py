"""Command-line interface.

Subcommands: constants, exact, asymptotic, integral, compare, figures,
disproof, check.  Global flags pick the precision in mantissa bits, the
output format, and an output directory.  Exit status is 0 on success,
1 when a computation or witness check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import mpmath as mp

from .contour import (
    QuadratureSpec,
    arc_spec,
    cauchy_oracle,
    check_lower_bound_inequality,
    check_monotone_exponent,
    constant_c,
    constant_c_euler_check,
    integral_approx_at,
    integral_approx_C,
    integral_approx_full,
    oracle_spec,
)
from .exact import decimal_str, exact_coefficients, float_coefficients, rational_str
from .report import (
    RunConfig,
    analyze_divergence,
    build_rows,
    emit_csv,
    emit_json,
    figure_configs,
    magnitude_series,
)
from .saddle import (
    H,
    argument_principle_count,
    asymptotic_C,
    saddle_constants,
    solve_saddle,
)
from .svg import line_chart

__all__ = ["main", "write_figures", "run_checks"]


def _add_range(p, n_from: int, n_to: int):
    p.add_argument("--from", dest="n_from", type=int, default=n_from, metavar="N")
    p.add_argument("--to", dest="n_to", type=int, default=n_to, metavar="N")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="radpfd",
        description="Partial-fraction coefficients of 1/((1-x)(1-x^2)...(1-x^N)): "
        "exact values, saddle-point asymptotics, contour integrals.",
    )
    top.add_argument("--prec-bits", type=int, default=256, help="working precision")
    top.add_argument(
        "--format", choices=("csv", "json", "svg"), default="csv", help="output format"
    )
    top.add_argument("--out", type=Path, default=None, help="output directory")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="saddle point and derived constants")
    p.add_argument("--digits", type=int, default=10)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("exact", help="exact coefficient C(N, l)")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--l", type=int, default=1)
    p.add_argument(
        "--float-exact",
        action="store_true",
        help="run the exact algorithm in high-precision floats instead of rationals",
    )
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("asymptotic", help="closed-form asymptotic main term")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--l", type=int, default=1)
    p.set_defaults(func=cmd_asymptotic)

    p = sub.add_parser("integral", help="arc-integral approximation")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--nodes", type=int, default=64)
    p.set_defaults(func=cmd_integral)

    p = sub.add_parser("compare", help="exact vs approximations over a range")
    _add_range(p, 1, 10)
    p.add_argument("--l", type=int, default=1)
    p.add_argument(
        "--modes",
        default="exact,asymptotic",
        help="comma-separated subset of exact,asymptotic,integral",
    )
    p.add_argument("--float-exact", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("figures", help="emit the standard comparison datasets")
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("disproof", help="peak growth analysis over a range")
    _add_range(p, 80, 150)
    p.add_argument("--l", type=int, default=1)
    p.set_defaults(func=cmd_disproof)

    p = sub.add_parser("check", help="run all numeric witness checks")
    p.set_defaults(func=cmd_check)
    return top


def cmd_constants(args) -> int:
    prec = args.prec_bits
    d = args.digits
    z0 = solve_saddle(prec)
    sd = saddle_constants(z0, prec)
    with mp.workprec(prec):
        rows = [
            ("z0", mp.nstr(sd.z0, d)),
            ("a", mp.nstr(sd.a, d)),
            ("rho", mp.nstr(sd.rho, d)),
            ("b", mp.nstr(sd.b, d)),
            ("theta", mp.nstr(sd.theta, d)),
            ("p", mp.nstr(sd.p, d)),
            ("alpha", mp.nstr(sd.alpha, d)),
            ("b^p", mp.nstr(sd.b**sd.p, d)),
        ]
    for name, value in rows:
        print(f"{name:6s} = {value}")
    return 0


def cmd_exact(args) -> int:
    if args.N < 1:
        raise ValueError("N must be a positive integer")
    if args.l > args.N:
        raise ValueError("l exceeds N: no such coefficient")
    if args.float_exact:
        value = float_coefficients(args.N, args.prec_bits)[args.l - 1]
        print(f"C({args.N}, {args.l}) = {mp.nstr(value, 17)}")
    else:
        q = exact_coefficients(args.N).coeff(args.l)
        print(f"C({args.N}, {args.l}) = {rational_str(q)} = {decimal_str(q)}")
    return 0


def cmd_asymptotic(args) -> int:
    prec = args.prec_bits
    sd = saddle_constants(solve_saddle(prec), prec)
    av = asymptotic_C(args.l, args.N, sd)
    print(f"asymptotic C({args.N}, {args.l}) = {mp.nstr(av.main_term, 17)}")
    print(f"H_{args.l}({args.N}) = {mp.nstr(av.H_value, 17)}")
    return 0


def cmd_integral(args) -> int:
    spec = arc_spec(nodes=args.nodes, precision=args.prec_bits)
    value = integral_approx_C(args.l, args.N, spec)
    print(f"integral C({args.N}, {args.l}) = {mp.nstr(value, 17)}")
    return 0


def cmd_compare(args) -> int:
    modes = frozenset(m.strip() for m in args.modes.split(",") if m.strip())
    cfg = RunConfig(
        precision_bits=args.prec_bits,
        n_from=args.n_from,
        n_to=args.n_to,
        l=args.l,
        output_format=args.format if args.format != "svg" else "csv",
        modes=modes,
    )
    if args.format == "svg":
        raise ValueError("compare emits tables; use csv or json")
    skipped = [N for N in range(cfg.n_from, cfg.n_to + 1) if cfg.l > N]
    if skipped and "exact" in modes:
        print(
            f"note: no exact coefficient for l = {cfg.l} at N = "
            f"{skipped[0]}..{skipped[-1]}; cells left empty",
            file=sys.stderr,
        )
    rows = build_rows(cfg, float_exact=args.float_exact)
    text = emit_json(rows) if args.format == "json" else emit_csv(rows)
    if args.out is not None:
        args.out.mkdir(parents=True, exist_ok=True)
        path = args.out / f"compare.{args.format}"
        path.write_text(text)
        print(str(path))
    else:
        sys.stdout.write(text)
    return 0


def write_figures(configs, out_dir: Path, fmt: str, emit_svg: bool):
    """Write each (stem, RunConfig, nodes) dataset to out_dir; returns paths."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    sd = None
    for stem, cfg, nodes in configs:
        if "asymptotic" in cfg.modes and sd is None:
            sd = saddle_constants(
                solve_saddle(cfg.precision_bits), cfg.precision_bits
            )
        rows = build_rows(cfg, sd=sd, integral_nodes=nodes)
        path = out_dir / f"{stem}.csv"
        path.write_text(emit_csv(rows))
        written.append(path)
        if emit_svg:
            other = "asymptotic" if "asymptotic" in cfg.modes else "integral"
            exact_pts = [
                (r.N, mp.mpf(r.exact_decimal)) for r in rows if r.exact_decimal
            ]
            other_pts = [
                (r.N, getattr(r, other)) for r in rows if getattr(r, other) is not None
            ]
            svg_path = out_dir / f"{stem}.svg"
            svg_path.write_text(
                line_chart(
                    [exact_pts, other_pts],
                    ["exact", other],
                    f"C(N, {cfg.l}): exact vs {other}, N = {cfg.n_from}..{cfg.n_to}",
                )
            )
            written.append(svg_path)
    return written


def cmd_figures(args) -> int:
    out_dir = args.out if args.out is not None else Path(".")
    paths = write_figures(
        figure_configs(args.prec_bits), out_dir, args.format, args.format == "svg"
    )
    for path in paths:
        print(str(path))
    return 0


def cmd_disproof(args) -> int:
    prec = args.prec_bits
    sd = saddle_constants(solve_saddle(prec), prec)
    if args.n_to - args.n_from < 2 * sd.p:
        raise ValueError("range too short: need at least two oscillation periods")
    series = magnitude_series(args.n_from, args.n_to, args.l, prec)
    rep = analyze_divergence(series, b=sd.b, p=sd.p, l=args.l)
    print(f"peak analysis: l = {rep.l}, N = {rep.n_from}..{rep.n_to}")
    print("peaks (N, |C|):")
    for n, mag in rep.peaks:
        print(f"  {n:4d}  {mp.nstr(mag, 8)}")
    print("spacings:", ", ".join(str(s) for s in rep.spacings))
    print("ratios:  ", ", ".join(mp.nstr(r, 6) for r in rep.ratios))
    if rep.growth is not None:
        print(f"growth last/first peak: {mp.nstr(rep.growth, 8)}")
        print(f"expected factor b^(span/2): {mp.nstr(rep.threshold, 8)}")
    print(f"verdict: {rep.verdict}")
    return 0


def run_checks(precision: int = 256):
    """All numeric witnesses as (name, ok, detail) triples."""
    results = []

    def add(name, ok, detail=""):
        results.append((name, bool(ok), detail))

    z0 = solve_saddle(precision)
    sd = saddle_constants(z0, precision)
    from .specfun import phi

    with mp.workprec(precision + 32):
        residual = abs(phi(z0, precision))
        add(
            "saddle residual small",
            residual < mp.mpf(2) ** (-(precision - 16)),
            f"|phi(z0)| = {mp.nstr(residual, 3)}",
        )
        add(
            "constants round to known digits",
            abs(sd.b - mp.mpf("1.07")) < 0.005
            and abs(sd.p - mp.mpf("31.96")) < 0.05
            and abs(sd.a - mp.mpf("1.79")) < 0.005
            and abs(sd.alpha - mp.mpf("0.028")) < 0.0005
            and abs(sd.b**sd.p - mp.mpf("8.81")) < 0.02,
            f"b = {mp.nstr(sd.b, 6)}, p = {mp.nstr(sd.p, 6)}, "
            f"b^p = {mp.nstr(sd.b**sd.p, 6)}",
        )
        add(
            "rho on the unit circle",
            abs(abs(sd.rho) - 1) < mp.mpf(2) ** (-(precision - 16)),
        )
        count = argument_principle_count(precision=128)
        add("one root in the unit disk around the guess", count == 1, f"count = {count}")
        h0 = H(1, mp.mpf(100), sd)
        h1 = H(1, mp.mpf(100) + sd.p, sd)
        add(
            "H periodic with period p",
            abs(h1 - h0) < mp.mpf(2) ** (-(precision // 2)),
            f"|H(100+p) - H(100)| = {mp.nstr(abs(h1 - h0), 3)}",
        )
        flips = 0
        prev = H(1, mp.mpf(100), sd) > 0
        steps = int(sd.p / mp.mpf("0.1"))
        for k in range(1, steps + 1):
            cur = H(1, mp.mpf(100) + k * mp.mpf("0.1"), sd) > 0
            if cur != prev:
                flips += 1
            prev = cur
        add("H changes sign twice per period", flips == 2, f"flips = {flips}")

    spec_small = QuadratureSpec(nodes=64, precision=128, radius=0.5, rule="trapezoid_periodic")
    o1 = cauchy_oracle(1, 1, spec_small)
    add(
        "oracle hand value C(1,1) = -1",
        abs(o1.value + 1) < mp.mpf("1e-20"),
        f"delta = {mp.nstr(abs(o1.value + 1), 3)}",
    )
    o2 = cauchy_oracle(2, 2, spec_small)
    add(
        "oracle hand value C(2,2) = 1/2",
        abs(o2.value - mp.mpf("0.5")) < mp.mpf("1e-20"),
    )
    exact20 = exact_coefficients(20).coeff(1)
    o20 = cauchy_oracle(1, 20, oracle_spec(20, precision=512))
    with mp.workprec(512):
        diff = abs(o20.value - (mp.mpf(exact20.numerator) / exact20.denominator))
    add("oracle matches exact at N = 20", diff < mp.mpf("1e-20"), f"diff = {mp.nstr(diff, 3)}")

    path = [5j + (complex(sd.z0) - 5j) * t / 199 for t in range(200)]
    add(
        "growth exponent monotone toward the saddle",
        check_monotone_exponent(path, precision=128).ok,
    )
    grid = [(u, x) for u in (0.01, 0.05, 0.1) for x in (0.0, -1e-3, -1e-2)]
    add("trig lower bound holds on sample grid", check_lower_bound_inequality(grid))
    add(
        "trig lower bound detector rejects inflated bound",
        not check_lower_bound_inequality(grid, rhs_scale=2.0),
    )
    c = constant_c(precision)
    add(
        "Euler constant c = 0.11262 to 5 decimals",
        abs(c - mp.mpf("0.11262")) < mp.mpf("0.5e-5"),
        f"c = {mp.nstr(c, 8)}",
    )
    dev = constant_c_euler_check()
    add(
        "c consistent with direct quadrature",
        dev < mp.mpf("1e-3"),
        f"relative deviation = {mp.nstr(dev, 3)}",
    )
    full = integral_approx_full(1, 20, arc_spec(64, precision))
    add(
        "arc integral real before the cast",
        abs(full.imag) < mp.mpf(2) ** (-(precision // 2)) * max(1, abs(full)),
        f"Im = {mp.nstr(abs(full.imag), 3)}",
    )
    v64 = integral_approx_at(1, 20, arc_spec(64, precision))
    v128 = integral_approx_at(1, 20, arc_spec(128, precision))
    add(
        "arc quadrature stable under node doubling",
        abs(v128 - v64) < mp.mpf("1e-10") * abs(v128),
        f"relative delta = {mp.nstr(abs(v128 - v64) / abs(v128), 3)}",
    )
    exact60 = exact_coefficients(60).coeff(1)
    v60 = integral_approx_C(1, 60, arc_spec(64, precision))
    with mp.workprec(precision):
        rel = abs(v60 - mp.mpf(exact60.numerator) / exact60.denominator) / abs(
            mp.mpf(exact60.numerator) / exact60.denominator
        )
    add(
        "arc integral within 10% of exact at N = 60",
        rel < mp.mpf("0.1"),
        f"relative error = {mp.nstr(rel, 3)}",
    )
    flat = [(n, mp.mpf(1)) for n in range(80, 151)]
    rep = analyze_divergence(flat, b=sd.b, p=sd.p)
    add(
        "divergence detector ignores constant input",
        rep.verdict == "no divergence detected",
    )
    return results


def cmd_check(args) -> int:
    results = run_checks(args.prec_bits)
    width = max(len(name) for name, _, _ in results)
    failures = 0
    for name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        line = f"{status}  {name:<{width}}"
        if detail:
            line += f"  {detail}"
        print(line)
        if not ok:
            failures += 1
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 1 if failures else 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
