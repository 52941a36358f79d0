"""Command-line surface: verify, sweep, figure, prove, serve.

Exit codes are a stable contract: 0 success, 1 verification/proof failure,
2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction

from . import __version__
from .constructions import (
    ConstructionError,
    RightTriangle,
    build_configuration,
)
from .figures import FigureStyle, render_svg
from .numeric import ExactValueUnavailable
from .report import build_config_response, dumps_stable, parse_quantity
from .service import DEFAULT_PORT, serve
from .trig_symbolic import (
    CannotNormalizeError,
    RuleSet,
    TrigParseError,
    prove_identity_text,
)
from .verification import exact_identity_supported, run_verification

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _add_triangle_args(parser: argparse.ArgumentParser):
    parser.add_argument("--a", default="3", help="leg a (decimal or p/q), default 3")
    parser.add_argument("--b", default="4", help="leg b (decimal or p/q), default 4")
    parser.add_argument("--family", choices=("ziggurat", "pyramid"), default="ziggurat")


def _add_rule_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--no-angle-shift", dest="angle_shift", action="store_false")
    parser.add_argument("--no-angle-sum", dest="angle_sum", action="store_false")
    parser.add_argument("--no-double-sin", dest="double_sin", action="store_false")
    parser.add_argument("--allow-double-cos", dest="double_cos_paper", action="store_true")
    parser.add_argument("--no-double-cos", dest="double_cos_paper", action="store_false")
    parser.add_argument("--allow-pythagorean", dest="pythagorean", action="store_true")
    parser.add_argument("--no-pythagorean", dest="pythagorean", action="store_false")
    parser.set_defaults(angle_shift=True, angle_sum=True, double_sin=True,
                        double_cos_paper=True, pythagorean=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zigpyr",
        description="Verification workbench for parametric ziggurat and "
                    "pyramid area-rearrangement configurations.",
    )
    parser.add_argument("--version", action="version", version=f"zigpyr {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify one configuration")
    _add_triangle_args(p_verify)
    p_verify.add_argument("--theta", required=True, help="base angle in degrees")
    p_verify.add_argument("--exact", action="store_true",
                          help="zero-tolerance checks at a supported special angle")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_sweep = sub.add_parser("sweep", help="sweep the angle and tabulate residuals")
    _add_triangle_args(p_sweep)
    p_sweep.add_argument("--theta-min", type=float, required=True)
    p_sweep.add_argument("--theta-max", type=float, required=True)
    p_sweep.add_argument("--steps", type=int, required=True)
    p_sweep.add_argument("--format", choices=("text", "csv"), default="text")
    p_sweep.add_argument("--out", help="write the table to a file instead of stdout")
    p_sweep.add_argument("--plot", help="also render a residual/area figure (matplotlib)")

    p_figure = sub.add_parser("figure", help="render one configuration to SVG")
    _add_triangle_args(p_figure)
    p_figure.add_argument("--theta", required=True)
    p_figure.add_argument("--out", required=True, help="output SVG path")
    p_figure.add_argument("--size", type=int, default=640, help="canvas size in px")
    p_figure.add_argument("--no-areas", dest="show_areas", action="store_false")

    p_prove = sub.add_parser("prove", help="prove a trig identity 'LHS = RHS'")
    p_prove.add_argument("identity", help="identity text, e.g. 'cos(2t) = 2*cos(t)^2 - 1'")
    _add_rule_flags(p_prove)
    p_prove.add_argument("--format", choices=("text", "json"), default="text")

    p_serve = sub.add_parser("serve", help="run the local HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=DEFAULT_PORT)
    p_serve.add_argument("--ui", default="frontend",
                         help="static explorer directory to serve at / (if it exists)")

    return parser


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_verify(args) -> int:
    try:
        a = parse_quantity(args.a)
        b = parse_quantity(args.b)
        theta = parse_quantity(args.theta)
    except (ValueError, ZeroDivisionError):
        return _usage_error("a, b and theta must be decimal or p/q numbers")
    if a <= 0 or b <= 0:
        return _usage_error("a and b must be positive")
    if args.exact and not exact_identity_supported(float(theta), args.family):
        return _usage_error(
            f"--exact needs a supported special angle for {args.family} "
            f"(ziggurat: 60/90/108/120/135, pyramid: 45/60/72)")
    try:
        if args.format == "json":
            response = build_config_response(a, b, theta, args.family,
                                             exact_mode=args.exact)
            print(dumps_stable(response))
            return EXIT_OK if response["verification"]["passed"] else EXIT_CHECK_FAILED
        if args.exact:
            try:
                doc = build_configuration(RightTriangle(a, b), theta, args.family,
                                          exact=True)
            except ExactValueUnavailable:
                doc = build_configuration(RightTriangle(a, b), float(theta),
                                          args.family, exact=False)
            report = run_verification(doc, include_exact=True)
        else:
            doc = build_configuration(RightTriangle(a, b), float(theta),
                                      args.family, exact=False)
            report = run_verification(doc, include_exact="auto")
    except ConstructionError as exc:
        return _usage_error(str(exc))
    areas = doc.areas()
    print("areas: " + "  ".join(f"{k}={v:.9g}" for k, v in sorted(areas.items())))
    flags = [k for k, v in doc.degeneracy.as_dict().items() if v]
    print("degeneracy: " + (", ".join(flags) if flags else "none"))
    print(report.to_text())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


SWEEP_COLUMNS = ("theta", "area_a", "area_b", "area_c", "residual",
                 "flags", "central_parallelogram_audit")


def _sweep_rows(args):
    a = float(parse_quantity(args.a))
    b = float(parse_quantity(args.b))
    tri = RightTriangle(a, b)
    span = args.theta_max - args.theta_min
    for i in range(args.steps + 1):
        theta = args.theta_min + span * i / max(args.steps, 1)
        doc = build_configuration(tri, theta, args.family)
        report = run_verification(doc)
        areas = doc.areas()
        key = "ziggurat" if args.family == "ziggurat" else "pyramid"
        area_a, area_b, area_c = (areas[f"{key}_a"], areas[f"{key}_b"], areas[f"{key}_c"])
        additivity = report.record("theorem_additivity")
        if additivity.status == "degenerate-skip":
            residual = float("nan")
        else:
            residual = abs(area_c - area_a - area_b) / max(area_c, 1e-300)
        flags = ";".join(k for k, v in doc.degeneracy.as_dict().items() if v) or "-"
        audit = (report.record("central_parallelogram_formula").status
                 if args.family == "ziggurat" else additivity.status)
        yield {"theta": theta, "area_a": area_a, "area_b": area_b, "area_c": area_c,
               "residual": residual, "flags": flags,
               "central_parallelogram_audit": audit}


def cmd_sweep(args) -> int:
    if args.steps < 1:
        return _usage_error("--steps must be at least 1")
    if not args.theta_min < args.theta_max:
        return _usage_error("--theta-min must be below --theta-max")
    lo_ok = 0 < args.theta_min and args.theta_max < (90 if args.family == "pyramid" else 180)
    if not lo_ok:
        return _usage_error("theta range outside the constructible domain")
    rows = list(_sweep_rows(args))
    max_residual = max((r["residual"] for r in rows
                        if r["residual"] == r["residual"]), default=float("nan"))
    buffer = io.StringIO()
    if args.format == "csv":
        writer = csv.DictWriter(buffer, fieldnames=SWEEP_COLUMNS)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: (f"{v:.12g}" if isinstance(v, float) else v)
                             for k, v in row.items()})
    else:
        buffer.write(f"{'theta':>9} {'area_a':>12} {'area_b':>12} {'area_c':>12} "
                     f"{'residual':>10} {'audit':>12}  flags\n")
        for r in rows:
            buffer.write(
                f"{r['theta']:9.3f} {r['area_a']:12.6f} {r['area_b']:12.6f} "
                f"{r['area_c']:12.6f} {r['residual']:10.2e} "
                f"{r['central_parallelogram_audit']:>12}  {r['flags']}\n")
    table = buffer.getvalue()
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(table)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(table)
    summary = f"max residual: {max_residual:.3e}"
    print(summary if not args.out else f"{summary} ({len(rows)} rows -> {args.out})",
          file=sys.stdout if args.format == "text" and not args.out else sys.stderr)
    if args.plot:
        code = _write_sweep_plot(rows, args)
        if code != EXIT_OK:
            return code
    return EXIT_OK


def _write_sweep_plot(rows, args) -> int:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    thetas = [r["theta"] for r in rows]
    fig, (ax_area, ax_res) = plt.subplots(2, 1, figsize=(7, 7), sharex=True)
    for key, label in (("area_a", "over a"), ("area_b", "over b"), ("area_c", "over c")):
        ax_area.plot(thetas, [r[key] for r in rows], label=label)
    ax_area.set_ylabel("piece area")
    ax_area.legend()
    ax_area.set_title(f"{args.family} areas and additivity residual (a={args.a}, b={args.b})")
    residuals = [r["residual"] if r["residual"] == r["residual"] else None for r in rows]
    ax_res.semilogy(thetas, [r if r and r > 0 else 1e-18 for r in residuals], ".-")
    ax_res.set_xlabel("theta (degrees)")
    ax_res.set_ylabel("relative residual")
    fig.tight_layout()
    try:
        fig.savefig(args.plot)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    finally:
        plt.close(fig)
    print(f"plot written to {args.plot}", file=sys.stderr)
    return EXIT_OK


def cmd_figure(args) -> int:
    try:
        a = parse_quantity(args.a)
        b = parse_quantity(args.b)
        theta = float(parse_quantity(args.theta))
    except (ValueError, ZeroDivisionError):
        return _usage_error("a, b and theta must be decimal or p/q numbers")
    try:
        doc = build_configuration(RightTriangle(float(a), float(b)), theta, args.family)
    except ConstructionError as exc:
        return _usage_error(str(exc))
    style = FigureStyle(width=args.size, height=args.size, show_areas=args.show_areas)
    svg = render_svg(doc, style)
    try:
        with open(args.out, "w") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    flags = [k for k, v in doc.degeneracy.as_dict().items() if v]
    print(f"wrote {args.out}: {args.family} theta={theta:g} "
          f"({'degenerate: ' + ', '.join(flags) if flags else 'regular'})")
    return EXIT_OK


def cmd_prove(args) -> int:
    rules = RuleSet(
        angle_shift=args.angle_shift,
        angle_sum=args.angle_sum,
        double_sin=args.double_sin,
        double_cos_paper=args.double_cos_paper,
        pythagorean=args.pythagorean,
    )
    try:
        report = prove_identity_text(args.identity, rules)
    except TrigParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CannotNormalizeError as exc:
        print(f"cannot normalize: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(dumps_stable(report.to_dict()))
    else:
        print(f"identity: {report.lhs_text} = {report.rhs_text}")
        print(f"enabled rules: {', '.join(rules.enabled()) or 'none'}")
        print(f"rules fired: {', '.join(report.rules_used) or 'none'}")
        print(f"lhs normal form: {report.lhs_normal}")
        print(f"rhs normal form: {report.rhs_normal}")
        print(f"proved: {report.proved}")
    return EXIT_OK if report.proved else EXIT_CHECK_FAILED


def cmd_serve(args) -> int:
    serve(host=args.host, port=args.port, ui_dir=args.ui)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "verify": cmd_verify,
        "sweep": cmd_sweep,
        "figure": cmd_figure,
        "prove": cmd_prove,
        "serve": cmd_serve,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
