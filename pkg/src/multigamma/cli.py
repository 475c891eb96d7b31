"""Command-line harness: verification suites, density tables, plot-ready data,
and single-point evaluation.

Exit codes: 0 all asserted checks pass; 1 at least one asserted check failed;
2 configuration error. All numeric output uses 17 significant digits.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .foundations import DomainError, SingularityError, max_order
from .multigamma import log_gn_shifted
from .pick_stieltjes import (
    complete_monotonicity_probe,
    density_d_n,
    f_n_eval,
    f_n_eval_vec,
    g_n_log_eval,
    stieltjes_reconstruct,
)
from .quadrature import QuadratureConfig
from .report import atomic_write_text, fmt17, report_csv, report_json
from .suite import SuiteConfig, run_suite


def _parse_floats(raw: str, count: int, what: str) -> tuple[float, ...]:
    parts = raw.split(",")
    if len(parts) != count:
        raise DomainError(f"{what} needs {count} comma-separated numbers, got {raw!r}")
    return tuple(float(p) for p in parts)


def _cmd_verify(args: argparse.Namespace) -> int:
    orders = tuple(int(p) for p in args.orders.split(","))
    region = _parse_floats(args.region, 4, "--region")
    quad = QuadratureConfig(
        tolerance=args.tolerance,
        cutoff_T=args.cutoff,
        levels=args.levels,
    )
    cfg = SuiteConfig(
        orders=orders,
        region=region,
        grid_resolution=args.resolution,
        quadrature=quad,
        output_format=args.format,
        seed=args.seed,
    )
    report = run_suite(cfg)
    for c in report.checks:
        res = f" residual={fmt17(c.residual)}" if c.residual is not None else ""
        tol = f" tol={fmt17(c.tolerance)}" if c.tolerance is not None else ""
        print(f"[{c.status.upper():8s}] {c.name}{res}{tol}")
    text = report_json(report) if args.format == "json" else report_csv(report)
    if args.out:
        atomic_write_text(args.out, text)
        print(f"report written to {args.out}")
    else:
        sys.stdout.write(text)
    return report.exit_code


def _cmd_density(args: argparse.Namespace) -> int:
    lo, hi = _parse_floats(args.range, 2, "--range")
    if not lo < hi:
        raise DomainError("--range A,B needs A < B")
    if args.steps < 2:
        raise DomainError("--steps must be >= 2")
    ts = np.linspace(lo, hi, args.steps)
    lines = ["t,d_value,interval_k,is_singular"]
    for t in ts:
        t = float(t)
        singular = t < 0.0 and abs(t - round(t)) < 1e-8
        k = int(math.ceil(-t)) if t < 0.0 else 0
        if singular:
            lines.append(f"{fmt17(t)},,{int(round(-t))},1")
            continue
        sample = density_d_n(t, args.n)
        val = sample if isinstance(sample, float) else sample.value
        lines.append(f"{fmt17(t)},{fmt17(val)},{k},0")
    text = "\n".join(lines) + "\n"
    if args.out:
        atomic_write_text(args.out, text)
        print(f"{args.steps} rows written to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _sidecar(path: str, payload: dict) -> None:
    atomic_write_text(path + ".json", json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _cmd_plot(args: argparse.Namespace) -> int:
    if not args.out:
        raise DomainError("plot requires --out PATH")
    n = args.n
    if args.kind == "im_f_heatmap":
        x0, x1, y0, y1 = _parse_floats(args.region, 4, "--region")
        if not (x0 < x1 and 0.0 < y0 < y1):
            raise DomainError("heatmap region must lie in the upper half plane")
        res = args.resolution
        xs = np.linspace(x0, x1, res)
        ys = np.linspace(y0, y1, res)
        rows = []
        min_val = math.inf
        for y in ys:
            vals = f_n_eval_vec(xs + 1j * y, n)
            for x, v in zip(xs, vals):
                rows.append(f"{fmt17(x)} {fmt17(y)} {fmt17(v.imag)}")
                min_val = min(min_val, v.imag)
            rows.append("")  # gnuplot block separator per scanline
        atomic_write_text(args.out, "\n".join(rows) + "\n")
        _sidecar(args.out, {
            "kind": args.kind, "order": n,
            "axes": ["Re z", "Im z", "Im f_n(z)"],
            "anchor": "pick-property-upper-half-plane",
            "region": [x0, x1, y0, y1], "resolution": res,
            "min_value": min_val,
        })
    elif args.kind == "reconstruction_residual":
        cutoffs = [float(c) for c in args.cutoffs.split(",")]
        rows = ["# cutoff_T residual tail_estimate"]
        z = complex(*_parse_floats(args.z, 2, "--z"))
        series = []
        for t_cut in cutoffs:
            cfg = QuadratureConfig(tolerance=args.tolerance, cutoff_T=t_cut)
            r = stieltjes_reconstruct(z, n, cfg)
            series.append(r.residual)
            rows.append(f"{fmt17(t_cut)} {fmt17(r.residual)} {fmt17(r.tail_estimate)}")
        atomic_write_text(args.out, "\n".join(rows) + "\n")
        _sidecar(args.out, {
            "kind": args.kind, "order": n,
            "axes": ["cutoff T", "residual", "tail estimate"],
            "anchor": "stieltjes-representation",
            "z": [z.real, z.imag], "residuals": series,
        })
    elif args.kind == "monotonicity":
        grid = np.linspace(0.5, 50.0, args.resolution)
        rep = complete_monotonicity_probe(n, args.max_deriv, grid)
        from .pick_stieltjes import _central_fd  # reuse the probe stencils

        cols = [grid]
        for m in range(1, args.max_deriv + 1):
            h = 1e-2 if m <= 4 else 10.0**-1.5
            cols.append(_central_fd(n, grid, m, h))
        rows = ["# x " + " ".join(f"d{m}" for m in range(1, args.max_deriv + 1))]
        for i in range(len(grid)):
            rows.append(" ".join(fmt17(c[i]) for c in cols))
        atomic_write_text(args.out, "\n".join(rows) + "\n")
        _sidecar(args.out, {
            "kind": args.kind, "order": n,
            "axes": ["x"] + [f"f^({m})(x)" for m in range(1, args.max_deriv + 1)],
            "anchor": "complete-monotonicity-of-derivative",
            "entries": {str(m): list(v) for m, v in rep.entries.items()},
        })
    elif args.kind == "boundary_phase":
        rows = ["# k phase_over_pi exact_formula_over_pi"]
        for k in range(1, args.kmax + 1):
            from .multigamma import boundary_log_gn

            bv = boundary_log_gn(-k + 0.5, n)
            exact = (-1) ** n * math.prod(range(k, k + n)) / math.factorial(n)
            rows.append(f"{k} {fmt17(bv.imag_part / math.pi)} {fmt17(exact)}")
        atomic_write_text(args.out, "\n".join(rows) + "\n")
        _sidecar(args.out, {
            "kind": args.kind, "order": n,
            "axes": ["k", "boundary phase / pi", "exact"],
            "anchor": "boundary-phase-pochhammer",
        })
    else:
        raise DomainError(f"unknown plot kind {args.kind!r}")
    print(f"plot data written to {args.out} (+ .json sidecar)")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    re_part, im_part = _parse_floats(args.z, 2, "--z")
    z = complex(re_part, im_part)
    if args.fn == "logGn":
        v = log_gn_shifted(z, args.n)
    elif args.fn == "fn":
        v = f_n_eval(z, args.n)
    elif args.fn == "gn":
        v = g_n_log_eval(z, args.n)
    else:
        raise DomainError(f"unknown function {args.fn!r}")
    print(f"{fmt17(v.real)} {fmt17(v.imag)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="multigamma",
        description=(
            "Barnes multiple Gamma functions, Pick ratio functions, and "
            "numerical verification of their Stieltjes representations. "
            "The order cap (default 6) can be overridden with MULTIGAMMA_MAX_ORDER."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--orders", default="1,2,3", help="comma-separated orders")
    v.add_argument("--region", default="-10,10,0.01,10", help="x0,x1,y0,y1 scan rectangle")
    v.add_argument("--resolution", type=int, default=64)
    v.add_argument("--tolerance", type=float, default=1e-9)
    v.add_argument("--cutoff", type=float, default=200.0)
    v.add_argument("--levels", type=int, default=8)
    v.add_argument("--seed", type=int, default=20260809)
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", default=None)
    v.set_defaults(func=_cmd_verify)

    d = sub.add_parser("density", help="emit a CSV table of the conjectured density")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--range", required=True, help="A,B sample range")
    d.add_argument("--steps", type=int, required=True)
    d.add_argument("--out", default=None)
    d.set_defaults(func=_cmd_density)

    pl = sub.add_parser("plot", help="emit gnuplot-ready columns plus a JSON sidecar")
    pl.add_argument(
        "--kind",
        required=True,
        choices=("im_f_heatmap", "reconstruction_residual", "monotonicity", "boundary_phase"),
    )
    pl.add_argument("--n", type=int, default=3)
    pl.add_argument("--region", default="-10,10,0.01,10")
    pl.add_argument("--resolution", type=int, default=100)
    pl.add_argument("--cutoffs", default="50,100,200")
    pl.add_argument("--z", default="2,0")
    pl.add_argument("--tolerance", type=float, default=1e-7)
    pl.add_argument("--max-deriv", type=int, default=3)
    pl.add_argument("--kmax", type=int, default=5)
    pl.add_argument("--out", default=None)
    pl.set_defaults(func=_cmd_plot)

    e = sub.add_parser("eval", help="evaluate one function at one point")
    e.add_argument("--fn", required=True, choices=("logGn", "fn", "gn"))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--z", required=True, help="RE,IM (logGn and gn use the shifted argument)")
    e.set_defaults(func=_cmd_eval)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, SingularityError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
