"""Command-line front end.

Subcommands: norms, constants, bound, nonvanishing, integrate, scan,
minmax, verify.  All numeric output uses 12 significant digits; values that
live in natural-log space are printed with a ``log:`` prefix.  Exit codes:
0 success, 1 verification failure, 2 usage error, 3 numerical failure.
The HD_LOG_LEVEL environment variable (error | info | debug) controls the
package logger.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys

import numpy as np

from . import bounds as bd
from . import harness as hn
from . import quadrature as qd
from . import series as se
from . import special as sp
from .errors import HardySeriesError, InvalidParameterError, InvalidSeriesError

log = logging.getLogger("hardyseries")

_BOUND_VARIANTS = (
    "t4", "t15", "t16", "t21", "t22", "t17", "t18", "t19", "t20",
    "t23", "t24", "t25", "t26", "t27", "t28", "t29", "t30", "l14",
)


def _fmt(x: float) -> str:
    return format(x, ".12g")


def _fmt_log(x: float) -> str:
    return "log:" + format(x, ".12g")


def _setup_logging() -> None:
    level = os.environ.get("HD_LOG_LEVEL", "error").lower()
    mapping = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(level=mapping.get(level, logging.ERROR),
                        format="%(levelname)s %(name)s: %(message)s")


def _load_series(path: str) -> se.DirichletSeries:
    with open(path, "r", encoding="utf-8") as fh:
        return se.series_from_json(fh.read())


def _write_out(path: str | None, payload: dict) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, default=float)
            fh.write("\n")


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------

def _cmd_constants(args) -> int:
    kc = sp.kappa_constants()
    chain = bd.hurwitz_anchor_chain()
    ab2 = bd.ab2_constants()
    rows = [
        ("classical_separation_constant", bd.CLASSICAL_C),
        ("kappa_half", kc.kappa_half),
        ("kappa_printed", kc.kappa_printed),
        ("kappa_alt", kc.kappa_alt),
        ("c0", kc.c0),
        ("exp_c0", math.exp(kc.c0)),
        ("zeta_1p7378", chain["zeta_1_plus_d"]),
        ("anchor_margin", chain["anchor_margin"]),
        ("anchor_chain_product", chain["product"]),
        ("ab2_plain", ab2["plain"]),
        ("ab2_folded", ab2["folded"]),
        ("riemann_window_asymptotic_d0.05",
         math.exp(-sp.EULER_GAMMA) * math.pi ** 2 / 24.0 * 0.05 ** 2),
    ]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{width}}  {_fmt(value)}")
    _write_out(args.out, {name: value for name, value in rows})
    return 0


def _cmd_norms(args) -> int:
    series = _load_series(args.series)
    p = bd.class_params(series)
    l1 = se.l1_norm_at(series, args.sigma if args.sigma is not None else series.sigma)
    l1v = l1.midpoint if isinstance(l1, se.Interval) else l1
    rows = [
        ("l2_norm", se.l2_norm(series)),
        ("l1_norm", l1v),
        ("separation_constant", p.c),
        ("lambda1", p.lambda1),
        ("lambert_floor_k", p.k),
    ]
    for name, value in rows:
        print(f"{name:<22}  {_fmt(value)}")
    _write_out(args.out, {name: value for name, value in rows})
    return 0


def _series_params(args, series):
    p = bd.class_params(series)
    l1 = se.l1_norm_at(series, series.sigma)
    norm1 = l1.upper if isinstance(l1, se.Interval) else l1
    return p, norm1, se.l2_norm(series)


def _write_report(path: str | None, report: bd.BoundReport) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")


def _cmd_bound(args) -> int:
    variant = args.variant.lower()
    if variant not in _BOUND_VARIANTS:
        print(f"unknown bound variant {variant!r}; choose from {_BOUND_VARIANTS}",
              file=sys.stderr)
        return 2
    delta = args.delta
    if variant in ("t27", "t28", "t29", "t30", "l14"):
        mapping = {"t27": "HurwitzLerch", "t28": "HurwitzLerch",
                   "t29": "Uniform", "t30": "Uniform", "l14": "DirichletL14"}
        kwargs = {}
        inputs = {"alpha": args.alpha, "delta": delta}
        if variant == "l14":
            if args.series is None:
                print("l14 needs --series for the coefficient sum", file=sys.stderr)
                return 2
            series = _load_series(args.series)
            n = np.arange(1, len(series))
            kwargs["coeff_sum"] = float(np.sum(
                np.abs(series.coefficients[1:]) ** 2 / (n + args.alpha)
            ))
            inputs["coeff_sum"] = kwargs["coeff_sum"]
        value = bd.hurwitz_lower_bound(args.alpha, delta, mapping[variant], **kwargs)
        print(f"{variant}_lower_bound  {_fmt_log(value)}")
        if variant == "l14":
            _write_report(args.out, bd.BoundReport(
                "L14", inputs, value, "lower", log_space=True))
        else:
            # the zeta-family window bounds sit outside the report id enum
            _write_out(args.out, {"variant": variant, "inputs": inputs,
                                  "bound_value": value, "log_space": True,
                                  "side": "lower"})
        return 0
    if args.series is None:
        print(f"{variant} needs --series", file=sys.stderr)
        return 2
    series = _load_series(args.series)
    p, norm1, norm2 = _series_params(args, series)
    inputs = {"sigma": series.sigma, "C": p.c, "lambda1": p.lambda1, "K": p.k,
              "delta": delta, "norm1": norm1, "norm2": norm2}
    if variant == "t4":
        value = bd.local_l2_bound(norm2, p.c, args.d)
        report = bd.BoundReport("T4", {"D": args.d, "C": p.c, "norm2": norm2},
                                value, "upper")
        print(f"t4_upper_bound  {_fmt(value)}")
        _write_report(args.out, report)
        return 0
    if variant in ("t15", "t16", "t21", "t22"):
        minus, plus = bd.short_interval_log_bounds(
            variant.upper(), delta, norm1=norm1, norm2=norm2,
            c=p.c, k=p.k, lambda1=p.lambda1, xi=args.xi,
        )
        report = bd.BoundReport(variant.upper(), inputs, minus, "upper",
                                notes="log-minus window integral bound")
        print(f"{variant}_logminus_bound  {_fmt(minus)}")
        if plus is not None:
            print(f"{variant}_logplus_bound   {_fmt(plus)}")
        _write_report(args.out, report)
        return 0
    value = bd.supnorm_lp_lower_bound(
        variant.upper(), delta, norm1=norm1, norm2=norm2,
        c=p.c, k=p.k, lambda1=p.lambda1,
    )
    inputs["p"] = args.p
    report = bd.BoundReport(variant.upper(), inputs, value, "lower",
                            log_space=True)
    print(f"{variant}_lower_bound  {_fmt_log(value)}")
    _write_report(args.out, report)
    return 0


def _cmd_nonvanishing(args) -> int:
    series = _load_series(args.series)
    series = se.normalize_leading(series)
    p, norm1, norm2 = _series_params(args, series)
    variant = args.variant or "H2"
    if variant not in ("H2", "L1", "BoundedCoeff"):
        print("variant must be H2, L1 or BoundedCoeff", file=sys.stderr)
        return 2
    if variant == "L1":
        norm = norm1 - 1.0
        rate = p.lambda1
    else:
        tail = series.coefficients[1:]
        norm = float(np.sqrt(np.sum(np.abs(tail) ** 2))) if variant == "H2" else 1.0
        rate = p.k if variant == "H2" else p.lambda1
    x = bd.nonvanishing_abscissa(norm, p.c, rate, args.xi, variant)
    print(f"x_xi           {_fmt(x)}")
    print(f"abscissa       {_fmt(series.sigma + x)}")
    print(f"guarantee      {_fmt(args.xi)} <= |L| <= {_fmt(2 - args.xi)}")
    _write_out(args.out, {"variant": variant, "xi": args.xi, "x_xi": x,
                          "abscissa": series.sigma + x})
    return 0


def _cmd_integrate(args) -> int:
    series = _load_series(args.series)
    sigma = args.sigma if args.sigma is not None else series.sigma
    ev = se.line_evaluator(series, sigma)
    interval = (args.t0, args.t0 + args.delta)
    if args.variant == "sup":
        value = qd.interval_sup(ev, sigma, interval)
        print(f"interval_sup  {_fmt(value)}")
        _write_out(args.out, {"kind": "sup", "value": value})
        return 0
    if args.variant in ("logplus", "logminus"):
        sign = "plus" if args.variant == "logplus" else "minus"
        r = qd.integrate_log(ev, sigma, interval, sign, 1e-8)
        print(f"log_{sign}_integral  {_fmt(r.value)}  (error <= {_fmt(r.error_estimate)})")
        _write_out(args.out, {"kind": f"log_{sign}", "value": r.value,
                              "error_estimate": r.error_estimate})
        return 0
    r = qd.integrate_abs_pow(ev, sigma, interval, args.p, 1e-9)
    print(f"abs_pow_integral  {_fmt(r.value)}  (error <= {_fmt(r.error_estimate)})")
    _write_out(args.out, {"kind": "abs_pow", "p": args.p, "value": r.value,
                          "error_estimate": r.error_estimate})
    return 0


def _result_to_exit(result: hn.ExperimentResult) -> int:
    print(f"experiment {result.experiment}: "
          f"{'PASS' if result.passed else 'FAIL'} ({len(result.rows)} rows)")
    for key, value in result.summary.items():
        if isinstance(value, float):
            print(f"  {key}: {_fmt(value)}")
        elif isinstance(value, dict):
            inner = ", ".join(
                f"{k}={_fmt(v) if isinstance(v, float) else v}"
                for k, v in value.items()
            )
            print(f"  {key}: {inner}")
        else:
            print(f"  {key}: {value}")
    return 0 if result.passed else 1


def _cmd_scan(args) -> int:
    experiment = "lerch_scan" if args.variant == "lerch" else "hurwitz_scan"
    cfg = hn.ExperimentConfig(
        experiment,
        seed=args.seed,
        alphas=(args.alpha,) if args.alpha is not None else (0.3, 0.5, 1.0),
        deltas=(args.delta,),
        t_start=args.t0,
        t_stop=args.t1,
        t_step=args.step,
        threads=args.threads,
        out=args.out,
    )
    return _result_to_exit(hn.dispatch(cfg))


def _cmd_minmax(args) -> int:
    cfg = hn.ExperimentConfig(
        "minmax", seed=args.seed, deltas=(args.delta,), m_norm=args.m,
        threads=args.threads, out=args.out,
    )
    return _result_to_exit(hn.dispatch(cfg))


def _cmd_verify(args) -> int:
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = hn.ExperimentConfig.from_json(fh.read())
        if args.experiment and args.experiment != cfg.experiment:
            cfg = hn.ExperimentConfig.from_json(json.dumps(
                {**json.loads(cfg.to_json()), "experiment": args.experiment}
            ))
    elif args.experiment:
        cfg = hn.ExperimentConfig(args.experiment, seed=args.seed,
                                  threads=args.threads)
    else:
        print("verify needs --experiment or --config", file=sys.stderr)
        return 2
    if args.out:
        cfg = hn.ExperimentConfig.from_json(json.dumps(
            {**json.loads(cfg.to_json()), "out": args.out}
        ))
    return _result_to_exit(hn.dispatch(cfg))


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardyseries",
        description="Explicit constants and verified inequalities for "
                    "generalized Dirichlet series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, series_required=False):
        p.add_argument("--series", required=series_required,
                       help="path to a series JSON document")
        p.add_argument("--out", help="write machine-readable output here")

    p = sub.add_parser("constants", help="print every named constant (T10, T21, "
                                         "T23, L14, L15 catalog entries)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("norms", help="norms and class parameters of a series")
    add_common(p, series_required=True)
    p.add_argument("--sigma", type=float, help="abscissa for the L1 norm")
    p.set_defaults(func=_cmd_norms)

    p = sub.add_parser("bound", help="evaluate a catalog bound (T4, T15-T26, "
                                     "T27-T30, L14)")
    add_common(p)
    p.add_argument("--variant", required=True,
                   help="bound id: " + ", ".join(_BOUND_VARIANTS))
    p.add_argument("--delta", type=float, default=0.05,
                   help="window length (short-interval bounds)")
    p.add_argument("--alpha", type=float, default=1.0,
                   help="shift parameter (T27-T30, L14)")
    p.add_argument("--d", type=float, default=1.0,
                   help="interval length D (T4) / anchor distance (T10-T12)")
    p.add_argument("--p", type=float, default=2.0, help="L^p exponent (T19-T26)")
    p.add_argument("--xi", type=float,
                   help="override the tuned level baked into T15/T16")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("nonvanishing",
                       help="nonvanishing abscissa x_xi (T13, T14, L13)")
    add_common(p, series_required=True)
    p.add_argument("--xi", type=float, required=True,
                   help="level in (0,1): xi <= |L| <= 2-xi beyond the abscissa")
    p.add_argument("--variant", help="H2 (T14), L1 (T13) or BoundedCoeff (L13)")
    p.set_defaults(func=_cmd_nonvanishing)

    p = sub.add_parser("integrate", help="window integrals of |L|^p or log|L|")
    add_common(p, series_required=True)
    p.add_argument("--sigma", type=float, help="line Re(s); defaults to series sigma")
    p.add_argument("--t0", type=float, default=0.0, help="window start")
    p.add_argument("--delta", type=float, default=0.05, help="window length")
    p.add_argument("--p", type=float, default=1.0, help="power for |L|^p")
    p.add_argument("--variant", default="abs",
                   choices=("abs", "logplus", "logminus", "sup"),
                   help="integrand: |L|^p, log+|L|, log-|L|, or the window sup")
    p.set_defaults(func=_cmd_integrate)

    p = sub.add_parser("scan", help="sliding-window zeta-family scans (T27-T30)")
    p.add_argument("--variant", default="hurwitz", choices=("hurwitz", "lerch"))
    p.add_argument("--alpha", type=float, help="single shift parameter")
    p.add_argument("--delta", type=float, default=0.05, help="window length")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--t1", type=float, default=10.0)
    p.add_argument("--step", type=float, default=0.025)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", help="CSV output path")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("minmax", help="window-sup minimization explorer (T18 floor)")
    p.add_argument("--delta", type=float, default=0.1)
    p.add_argument("--m", type=float, default=3.0, help="prescribed l2 norm")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_minmax)

    p = sub.add_parser("verify", help="run a verification experiment")
    p.add_argument("--experiment", choices=hn.EXPERIMENTS)
    p.add_argument("--config", help="ExperimentConfig JSON path")
    p.add_argument("--out", help="CSV output path")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    _setup_logging()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except (InvalidParameterError, InvalidSeriesError) as exc:
        log.error("invalid input: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HardySeriesError as exc:
        log.error("numerical failure: %s", exc)
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
