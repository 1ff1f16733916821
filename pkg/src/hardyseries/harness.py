"""End-to-end verification experiments.

Each experiment measures a quantity by quadrature or sampling and compares
it against the corresponding explicit bound, producing one CSV row per grid
point with the measured value, the bound (log space where the bound lives
there), the margin, and a pass flag.  Margins are defined so that pass
means margin >= -tolerance, and every margin is finite: comparisons against
astronomically small lower bounds happen in natural-log space.

Experiments are deterministic functions of (seed, config): reruns produce
bit-identical CSV files (runtime lives only in the JSON summary).
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass, field, replace
from typing import Callable

import numpy as np

from . import bounds as bd
from . import mollifier as mo
from . import quadrature as qd
from . import series as se
from . import special as sp
from .errors import HardySeriesError, InvalidParameterError

__all__ = [
    "EXPERIMENTS",
    "ExperimentConfig",
    "ExperimentResult",
    "dispatch",
    "run_constants",
    "run_hurwitz_scan",
    "run_lerch_scan",
    "run_minmax_explorer",
    "run_riemann_asymptotic",
    "run_soundness_sweep",
]

EXPERIMENTS = (
    "constants",
    "local_l2_sweep",
    "nonvanishing_sweep",
    "log_bound_sweep",
    "hurwitz_scan",
    "lerch_scan",
    "riemann_asymptotic",
    "minmax",
)

_SCAN_EXPERIMENTS = ("hurwitz_scan", "lerch_scan")


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    seed: int = 42
    alphas: tuple = (0.3, 0.5, 1.0)
    betas: tuple = (0.3, 0.7)
    deltas: tuple = (0.05,)
    t_start: float = 0.0
    t_stop: float = 1000.0
    t_step: float = 0.025
    tolerance: float = 1e-6
    n_series: int = 50
    n_terms: int = 20
    d_values: tuple = (1.0, 10.0)
    xis: tuple = (0.25, 0.5)
    p_values: tuple = (1.0, 2.0)
    m_norm: float = 3.0
    search_terms: int = 16
    orders: tuple = (1, 2, 3)
    restarts: int = 4
    threads: int = 1
    out: str | None = None

    def __post_init__(self) -> None:
        if self.experiment not in EXPERIMENTS:
            raise InvalidParameterError(
                f"experiment must be one of {EXPERIMENTS}, got {self.experiment!r}"
            )
        if not self.alphas or not self.deltas:
            raise InvalidParameterError("alpha and delta grids must be non-empty")
        if self.experiment in _SCAN_EXPERIMENTS:
            if any(d <= 0 or d > 0.05 for d in self.deltas):
                raise InvalidParameterError("scan deltas must lie in (0, 0.05]")
        if self.t_step <= 0 or self.t_stop < self.t_start:
            raise InvalidParameterError("bad T range")
        if self.tolerance <= 0:
            raise InvalidParameterError("tolerance must be positive")
        if self.threads < 1:
            raise InvalidParameterError("threads must be >= 1")

    @classmethod
    def from_json(cls, text: str) -> "ExperimentConfig":
        obj = json.loads(text)
        if not isinstance(obj, dict):
            raise InvalidParameterError("config document must be an object")
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(obj) - known
        if unknown:
            raise InvalidParameterError(f"unknown config fields: {sorted(unknown)}")
        for key in ("alphas", "betas", "deltas", "d_values", "xis", "p_values", "orders"):
            if key in obj:
                obj[key] = tuple(obj[key])
        return cls(**obj)

    def to_json(self) -> str:
        doc = asdict(self)
        for key, value in doc.items():
            if isinstance(value, tuple):
                doc[key] = list(value)
        return json.dumps(doc, indent=2)


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(float(value), ".17g")
    return str(value)


@dataclass
class ExperimentResult:
    experiment: str
    columns: list
    rows: list
    summary: dict = field(default_factory=dict)
    passed: bool = True

    def write_csv(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(",".join(self.columns) + "\n")
            for row in self.rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")

    def write_summary(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump({"experiment": self.experiment, "passed": self.passed,
                       "summary": self.summary}, fh, indent=2, default=float)
            fh.write("\n")

    @property
    def min_margin(self) -> float:
        if "margin" not in self.columns:
            return math.inf
        idx = self.columns.index("margin")
        return min((row[idx] for row in self.rows), default=math.inf)


# ---------------------------------------------------------------------------
# random series families
# ---------------------------------------------------------------------------

def _disc_samples(rng: np.random.Generator, n: int) -> np.ndarray:
    radii = np.sqrt(rng.uniform(0.0, 1.0, n))
    angles = rng.uniform(0.0, 2.0 * math.pi, n)
    return radii * np.exp(1j * angles)


def _random_classical(
    rng: np.random.Generator,
    n_terms: int,
    sigma: float = 0.5,
    bounded: bool = False,
    unit_tail: bool = False,
) -> se.DirichletSeries:
    """a_0 = 1 and the rest uniform on the unit disc; optionally clipped to
    |a_n| <= 1 (they already are) or rescaled so ||L - 1||_2 = 1."""
    n = int(rng.integers(2, n_terms + 1))
    coeffs = _disc_samples(rng, n)
    coeffs[0] = 1.0
    if unit_tail:
        tail = np.sqrt(np.sum(np.abs(coeffs[1:]) ** 2))
        if tail == 0.0:
            coeffs[1] = 0.5
            tail = 0.5
        coeffs[1:] /= tail
        if bounded:
            # keep |a_n| <= 1 while preserving the unit tail norm
            top = np.max(np.abs(coeffs[1:]))
            if top > 1.0:
                coeffs[1:] /= top
    return se.classical_polynomial(coeffs, sigma)


def _grid_moduli(series: se.DirichletSeries, sigma1: float, ts: np.ndarray) -> np.ndarray:
    lam = series.lambdas
    weights = series.coefficients * np.exp(-lam * sigma1)
    return np.abs(np.exp(-1j * np.outer(ts, lam)) @ weights)


# ---------------------------------------------------------------------------
# constants experiment
# ---------------------------------------------------------------------------

def run_constants(config: ExperimentConfig) -> ExperimentResult:
    """Reproduce every printed constant; two-sided rows carry |value - target|
    margins, one-sided rows the signed slack."""
    t0 = time.time()
    kc = sp.kappa_constants()
    chain = bd.hurwitz_anchor_chain()
    ab2 = bd.ab2_constants()
    frac = bd.consistency_fractions()
    zeta = sp.riemann_zeta(1.7378).real
    asym = math.exp(-sp.EULER_GAMMA) * math.pi ** 2 / 24.0 * 0.05 ** 2

    rows = []

    def close(name, value, target, tol):
        rows.append((name, value, target, tol, tol - abs(value - target),
                     abs(value - target) <= tol))

    def at_least(name, value, floor_v):
        rows.append((name, value, floor_v, 0.0, value - floor_v, value >= floor_v))

    close("classical_separation", bd.CLASSICAL_C, 1.02014, 1e-5)
    close("kappa_log_full", kc.kappa_printed, 0.2735187155, 1e-9)
    close("kappa_alt_log_full", kc.kappa_alt, 0.27918489270, 1e-9)
    close("c0_half_kappa_formula", kc.c0, 3.174092008, 1e-8)
    rows.append(("exp_c0_window", math.exp(kc.c0), 23.9, 0.01,
                 min(math.exp(kc.c0) - 23.89, 23.91 - math.exp(kc.c0)),
                 23.89 <= math.exp(kc.c0) <= 23.91))
    close("zeta_1p7378", zeta, 1.98357, 2e-5)
    at_least("anchor_margin", 2.0 - zeta, 0.01642)
    close("anchor_chain_product", chain["product"], 15.976, 0.05)
    close("ab2_folded", ab2["folded"] / 9.0e8, 1.0, 0.02)
    at_least("ab2_below_1e9", 1e9 - ab2["plain"], 0.0)
    rows.append(("fraction_7_6", 1.0 if frac["seven_sixths"] else 0.0, 1.0, 0.0,
                 0.0, frac["seven_sixths"]))
    rows.append(("fraction_1400_87", 1.0 if frac["hump_exponent"] else 0.0, 1.0,
                 0.0, 0.0, frac["hump_exponent"]))
    close("riemann_window_asymptotic", asym, 5.772e-4, 1e-7)

    columns = ["check", "measured", "target", "tolerance", "margin", "pass"]
    passed = all(r[-1] for r in rows)
    return ExperimentResult(
        "constants", columns, rows,
        {"runtime_s": time.time() - t0, "n_checks": len(rows)}, passed,
    )


# ---------------------------------------------------------------------------
# soundness sweeps (local L^2, nonvanishing, short-interval log bounds)
# ---------------------------------------------------------------------------

def _local_l2_rows(config: ExperimentConfig, rng) -> list:
    rows = []
    for idx in range(config.n_series):
        s = _random_classical(rng, config.n_terms)
        ev = se.line_evaluator(s, 0.5)
        norm2 = se.l2_norm(s)
        for d in config.d_values:
            bound = bd.local_l2_bound(norm2, bd.CLASSICAL_C, d)
            r = qd.integrate_abs_pow(ev, 0.5, (0.0, d), 2, tol=1e-7 * bound)
            limit = bound * (1.0 + 1e-6)
            rows.append(("T4", idx, d, r.value, bound, limit - r.value,
                         r.value <= limit))
    # single-term edge case: |L| = 1 identically
    one = se.classical_polynomial([1.0])
    ev = se.line_evaluator(one, 0.5)
    for d in config.d_values:
        bound = bd.local_l2_bound(1.0, bd.CLASSICAL_C, d)
        r = qd.integrate_abs_pow(ev, 0.5, (0.0, d), 2, tol=1e-9 * bound)
        rows.append(("T4", -1, d, r.value, bound, bound - r.value,
                     r.value <= bound * (1 + 1e-6)))
    return rows


def _nonvanishing_rows(config: ExperimentConfig, rng) -> list:
    rows = []
    ts = np.linspace(0.0, 100.0, 4001)
    for idx in range(config.n_series):
        s = _random_classical(rng, config.n_terms, unit_tail=True)
        bounded = _random_classical(rng, config.n_terms, unit_tail=True, bounded=True)
        p = bd.class_params(s)
        norm1_tail = se.l1_norm_at(s, 0.5) - 1.0
        for xi in config.xis:
            cases = [
                ("T14", s, bd.nonvanishing_abscissa(1.0, p.c, p.k, xi, "H2"), "H2", 1.0),
                ("T13", s, bd.nonvanishing_abscissa(norm1_tail, 0.0, p.lambda1, xi, "L1"), "L1", norm1_tail),
                ("L13", bounded, bd.nonvanishing_abscissa(1.0, p.c, p.lambda1, xi, "BoundedCoeff"), "BoundedCoeff", 1.0),
            ]
            for tid, target_series, x, variant, norm in cases:
                mods = _grid_moduli(target_series, 0.5 + x, ts)
                lo = float(np.min(mods))
                hi = float(np.max(mods))
                resid = (
                    bd.nonvanishing_residual(x, norm, p.c if variant != "L1" else 0.0,
                                             p.k if variant == "H2" else p.lambda1,
                                             xi, variant)
                    if variant in ("H2", "BoundedCoeff") else 0.0
                )
                cap = bd.nonvanishing_cap(norm, p.c, p.k, xi) if variant == "H2" else math.inf
                ok = (
                    lo >= xi - 1e-6
                    and (variant == "BoundedCoeff" or hi <= 2.0 - xi + 1e-6)
                    and resid <= 1e-10
                    and x <= cap + 1e-12
                )
                rows.append((tid, idx, xi, x, lo, hi, resid, lo - (xi - 1e-6), ok))
    return rows


def _measurements_for(series, delta, tol):
    ev = se.line_evaluator(series, 0.5)
    log_minus = qd.integrate_log(ev, 0.5, (0.0, delta), "minus", tol).value
    log_plus = qd.integrate_log(ev, 0.5, (0.0, delta), "plus", tol).value
    sup = qd.interval_sup(ev, 0.5, (0.0, delta), grid_n=64)
    lp = {
        p: (qd.integrate_abs_pow(ev, 0.5, (0.0, delta), p, tol * delta).value / delta)
        ** (1.0 / p)
        for p in (1.0, 2.0)
    }
    return log_minus, log_plus, sup, lp


def _log_bound_rows(config: ExperimentConfig, rng) -> list:
    rows = []
    kc_tol = 1e-3  # stated tolerance for the upper log-integral comparisons
    for idx in range(config.n_series):
        general = _random_classical(rng, config.n_terms)
        bounded = _random_classical(rng, config.n_terms, bounded=True, unit_tail=True)
        for delta in config.deltas:
            for family, s in (("general", general), ("bounded", bounded)):
                p = bd.class_params(s)
                norm1 = se.l1_norm_at(s, 0.5)
                norm2 = se.l2_norm(s)
                log_minus, log_plus, sup, lp = _measurements_for(s, delta, 1e-5)
                if family == "general":
                    variants = [("T15", dict(norm1=norm1, lambda1=p.lambda1)),
                                ("T16", dict(norm2=norm2, c=p.c, k=p.k))]
                    sup_variants = [("T17", dict(norm1=norm1, lambda1=p.lambda1)),
                                    ("T18", dict(norm2=norm2, k=p.k))]
                    lp_variants = [("T19", dict(norm1=norm1, lambda1=p.lambda1)),
                                   ("T20", dict(norm2=norm2, k=p.k))]
                else:
                    variants = [("T21", dict(norm2=norm2, c=p.c, k=p.k)),
                                ("T22", dict(norm1=norm1, c=p.c, k=p.k))]
                    sup_variants = [("T25", dict(norm2=norm2, c=p.c, k=p.k)),
                                    ("T26", dict(norm1=norm1, c=p.c, k=p.k))]
                    lp_variants = [("T23", dict(norm2=norm2, c=p.c, k=p.k)),
                                   ("T24", dict(norm1=norm1, c=p.c, k=p.k))]
                for tid, kwargs in variants:
                    minus_b, plus_b = bd.short_interval_log_bounds(tid, delta, **kwargs)
                    rows.append((tid + "_minus", idx, delta, log_minus, minus_b,
                                 minus_b + kc_tol - log_minus,
                                 log_minus <= minus_b + kc_tol))
                    if plus_b is not None:
                        rows.append((tid + "_plus", idx, delta, log_plus, plus_b,
                                     plus_b + kc_tol - log_plus,
                                     log_plus <= plus_b + kc_tol))
                for tid, kwargs in sup_variants:
                    lb = bd.supnorm_lp_lower_bound(tid, delta, **kwargs)
                    margin = math.log(sup) - lb
                    rows.append((tid + "_sup", idx, delta, sup, lb, margin,
                                 margin >= -config.tolerance))
                for tid, kwargs in lp_variants:
                    lb = bd.supnorm_lp_lower_bound(tid, delta, **kwargs)
                    for p_exp in config.p_values:
                        margin = math.log(lp[p_exp]) - lb
                        rows.append((f"{tid}_lp{p_exp:g}", idx, delta, lp[p_exp],
                                     lb, margin, margin >= -config.tolerance))
    rows.extend(_lemma14_rows(config))
    return rows


def _lemma14_rows(config: ExperimentConfig) -> list:
    """Truncated unit-coefficient zeta family against its window lower bound."""
    rows = []
    n_trunc = 512
    fam = se.hurwitz_family(1.0, n_terms=n_trunc, include_tail=False)
    coeff_sum = float(np.sum(1.0 / (np.arange(1, n_trunc) + 1.0)))
    ev = se.line_evaluator(fam, 0.5)
    for delta in config.deltas:
        if delta > 0.05:
            continue
        measured = qd.integrate_abs_pow(ev, 0.5, (0.0, delta), 1, 1e-8).value
        lb = bd.hurwitz_lower_bound(1.0, delta, "DirichletL14", coeff_sum=coeff_sum)
        margin = math.log(measured) - lb
        rows.append(("L14", -1, delta, measured, lb, margin,
                     margin >= -config.tolerance))
    return rows


def run_soundness_sweep(config: ExperimentConfig) -> ExperimentResult:
    """Seeded random-series sweeps behind the three sweep experiments."""
    t0 = time.time()
    rng = np.random.default_rng(config.seed)
    if config.experiment == "local_l2_sweep":
        rows = _local_l2_rows(config, rng)
        columns = ["check", "series_id", "d", "measured", "bound", "margin", "pass"]
    elif config.experiment == "nonvanishing_sweep":
        rows = _nonvanishing_rows(config, rng)
        columns = ["check", "series_id", "xi", "x_xi", "sampled_min",
                   "sampled_max", "residual", "margin", "pass"]
    elif config.experiment == "log_bound_sweep":
        rows = _log_bound_rows(config, rng)
        columns = ["check", "series_id", "delta", "measured", "bound", "margin", "pass"]
    else:
        raise InvalidParameterError(
            f"run_soundness_sweep does not handle {config.experiment!r}"
        )
    passed = all(r[-1] for r in rows)
    margin_idx = columns.index("margin")
    summary = {
        "runtime_s": time.time() - t0,
        "n_rows": len(rows),
        "min_margin": min(r[margin_idx] for r in rows),
        "failures": sum(0 if r[-1] else 1 for r in rows),
    }
    return ExperimentResult(config.experiment, columns, rows, summary, passed)


# ---------------------------------------------------------------------------
# zeta-family scans
# ---------------------------------------------------------------------------

def _window_integrals(mods: np.ndarray, nodes_per_window: int, stride: int, h: float):
    weights = np.ones(nodes_per_window)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    weights *= h / 3.0
    windows = np.lib.stride_tricks.sliding_window_view(mods, nodes_per_window)
    return windows[::stride] @ weights


def _scan_alpha(alpha: float, delta: float, config: ExperimentConfig):
    """Windowed integrals of |zeta(1+it, alpha)| over sliding T windows."""
    subdiv = 8  # grid intervals per window; t_step must align
    h = delta / subdiv
    stride = int(round(config.t_step / h))
    if abs(stride * h - config.t_step) > 1e-12:
        h = config.t_step / max(1, stride)
        stride = int(round(config.t_step / h))
    n_windows = int(math.floor((config.t_stop - config.t_start) / config.t_step)) + 1
    n_nodes = (n_windows - 1) * stride + subdiv + 1
    ts = config.t_start + h * np.arange(n_nodes)
    # the integrand has a pole at t = 0; nudge that node so every window
    # integral (a lower bound for the true, possibly divergent, value) is finite
    ts = np.where(np.abs(ts) < 1e-12, 1e-9, ts)
    mods = np.empty(n_nodes)
    band = 4000
    starts = list(range(0, n_nodes, band))

    def eval_band(lo: int) -> np.ndarray:
        return np.abs(
            sp.hurwitz_zeta_grid(alpha, ts[lo:lo + band], sigma=1.0, target_error=1e-9)
        )

    if config.threads > 1:
        # bands are independent; merging by band index keeps the result
        # identical to the sequential order regardless of scheduling
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            for lo, chunk in zip(starts, pool.map(eval_band, starts)):
                mods[lo:lo + band] = chunk
    else:
        for lo in starts:
            mods[lo:lo + band] = eval_band(lo)
    integrals = _window_integrals(mods, subdiv + 1, stride, h)
    t_values = config.t_start + config.t_step * np.arange(n_windows)
    return t_values, integrals[:n_windows]


def run_hurwitz_scan(config: ExperimentConfig) -> ExperimentResult:
    """Sliding-window integrals of |zeta(1+it, alpha)| against the log-space
    lower bounds, with the running minimum tracked per alpha."""
    t0 = time.time()
    rows = []
    summary: dict = {"runtime_s": 0.0}
    passed = True
    for alpha in config.alphas:
        for delta in config.deltas:
            t_values, integrals = _scan_alpha(alpha, delta, config)
            lb_fixed = bd.hurwitz_lower_bound(alpha, delta, "HurwitzLerch")
            lb_uniform = bd.hurwitz_lower_bound(alpha, delta, "Uniform")
            running = math.inf
            for t, val in zip(t_values, integrals):
                running = min(running, val)
                log_meas = math.log(val) if val > 0 else -math.inf
                m27 = log_meas - lb_fixed
                m29 = log_meas - lb_uniform
                ok = (
                    math.isfinite(m27)
                    and m27 >= -config.tolerance
                    and m29 >= -config.tolerance
                )
                passed = passed and ok
                rows.append((alpha, delta, float(t), float(val), lb_fixed,
                             lb_uniform, m27, m29, ok))
            key = f"alpha_{alpha:g}_delta_{delta:g}"
            summary[key] = {
                "running_min": float(running),
                "log_bound_fixed": lb_fixed,
                "log_bound_uniform": lb_uniform,
            }
            if alpha == 1.0:
                target = math.exp(-sp.EULER_GAMMA) * math.pi ** 2 / 24.0 * delta ** 2
                summary[key]["asymptotic_target"] = target
                summary[key]["min_over_target"] = float(running / target)
                in_window = bool(5.77e-4 <= running <= 1.0) if delta == 0.05 else True
                summary[key]["min_in_expected_window"] = in_window
                passed = passed and in_window
    columns = ["alpha", "delta", "t", "measured", "log_bound_fixed",
               "log_bound_uniform", "margin", "margin_uniform", "pass"]
    summary["runtime_s"] = time.time() - t0
    return ExperimentResult("hurwitz_scan", columns, rows, summary, passed)


def run_lerch_scan(config: ExperimentConfig) -> ExperimentResult:
    """Spot-grid of twisted-series window integrals against the shifted-
    parameter lower bound (the bound depends on the shift beta only)."""
    t0 = time.time()
    rows = []
    passed = True
    spots = np.arange(config.t_start, config.t_stop + 1e-12, config.t_step)
    for alpha in config.alphas:
        for beta in config.betas:
            for delta in config.deltas:
                lb = bd.hurwitz_lower_bound(beta, delta, "HurwitzLerch")
                for t_lo in spots:

                    def ev(s_val: complex) -> complex:
                        return sp.lerch_phi(alpha, beta, complex(1.0, s_val.imag), 1e-9)

                    val = qd.integrate_abs_pow(
                        ev, 1.0, (float(t_lo), float(t_lo) + delta), 1, 1e-8
                    ).value
                    margin = math.log(val) - lb if val > 0 else -math.inf
                    ok = math.isfinite(margin) and margin >= -config.tolerance
                    passed = passed and ok
                    rows.append((alpha, beta, delta, float(t_lo), val, lb, margin, ok))
    columns = ["alpha", "beta", "delta", "t", "measured", "log_bound", "margin", "pass"]
    summary = {"runtime_s": time.time() - t0, "n_rows": len(rows)}
    return ExperimentResult("lerch_scan", columns, rows, summary, passed)


def run_riemann_asymptotic(config: ExperimentConfig) -> ExperimentResult:
    """The sharp small-window asymptotic e^(-gamma) pi^2 delta^2 / 24."""
    t0 = time.time()
    rows = []
    for delta in config.deltas:
        target = math.exp(-sp.EULER_GAMMA) * math.pi ** 2 / 24.0 * delta ** 2
        if delta == 0.05:
            margin = 1e-7 - abs(target - 5.772e-4)
            ok = margin >= 0
        else:
            margin, ok = 0.0, True
        rows.append((delta, target, 5.772e-4 if delta == 0.05 else float("nan"),
                     margin, ok))
    columns = ["delta", "asymptotic_target", "printed_value", "margin", "pass"]
    passed = all(r[-1] for r in rows)
    return ExperimentResult(
        "riemann_asymptotic", columns, rows,
        {"runtime_s": time.time() - t0}, passed,
    )


# ---------------------------------------------------------------------------
# min-max explorer
# ---------------------------------------------------------------------------

def _zero_order_slopes(order: int, deltas=(0.1, 0.05, 0.025)) -> tuple[list, list]:
    a = se.one_minus_two_power_series(order, sigma=0.5)
    ev = se.line_evaluator(a, 1.0)
    sups = [qd.interval_sup(ev, 1.0, (0.0, d), grid_n=64) for d in deltas]
    slopes = [
        math.log(sups[i] / sups[i + 1]) / math.log(deltas[i] / deltas[i + 1])
        for i in range(len(deltas) - 1)
    ]
    return sups, slopes


def _project(coeffs: np.ndarray, m_norm: float) -> np.ndarray:
    out = coeffs.copy()
    out[0] = 1.0
    tail = math.sqrt(m_norm ** 2 - 1.0)
    cur = np.sqrt(np.sum(np.abs(out[1:]) ** 2))
    if cur == 0.0:
        out[1] = tail
    else:
        out[1:] *= tail / cur
    return out


def _search_min_sup(config: ExperimentConfig, rng, delta: float) -> list:
    """Random-restart coordinate descent over the fixed-norm slice."""
    results = []
    for restart in range(config.restarts):
        coeffs = _project(
            np.concatenate([[1.0], _disc_samples(rng, config.search_terms - 1)]),
            config.m_norm,
        )

        def sup_of(c) -> float:
            s = se.classical_polynomial(c, 0.5)
            ev = se.line_evaluator(s, 0.5)
            return qd.interval_sup(ev, 0.5, (0.0, delta), grid_n=32)

        best = sup_of(coeffs)
        step = 0.4
        for _ in range(6):  # sweeps
            improved = False
            for j in range(1, config.search_terms):
                for direction in (1.0, -1.0, 1.0j, -1.0j):
                    cand = coeffs.copy()
                    cand[j] = cand[j] + direction * step
                    cand = _project(cand, config.m_norm)
                    val = sup_of(cand)
                    if val < best:
                        best, coeffs, improved = val, cand, True
            if not improved:
                step *= 0.5
        results.append((restart, best))
    return results


def run_minmax_explorer(config: ExperimentConfig) -> ExperimentResult:
    """Witness family checks plus the minimal-window-sup search."""
    t0 = time.time()
    rows = []
    passed = True
    for order in config.orders:
        a = se.one_minus_two_power_series(order, sigma=0.5)
        norm2 = se.l2_norm(a)
        expected_sq = sum(
            math.comb(order, k) ** 2 * 4 ** k for k in range(order + 1)
        )
        sups, slopes = _zero_order_slopes(order)
        for slope in slopes:
            ok = abs(slope - order) <= 0.1
            passed = passed and ok
            rows.append(("witness_slope", order, slope, float(order),
                         0.1 - abs(slope - order), ok))
        norm_ok = abs(norm2 - math.sqrt(expected_sq)) < 1e-12
        passed = passed and norm_ok
        # the 3^order value quoted for this norm matches the coefficient
        # l1 sum, not the square-sum; flag the difference explicitly
        rows.append(("witness_norm", order, norm2, math.sqrt(expected_sq),
                     3.0 ** order - norm2, norm_ok))
    delta = config.deltas[0]
    rng = np.random.default_rng(config.seed)
    k = bd.lambda1_floor(bd.CLASSICAL_C, 0.5)
    lb = bd.supnorm_lp_lower_bound("T18", delta, norm2=config.m_norm, k=k)
    for restart, best in _search_min_sup(config, rng, delta):
        margin = math.log(best) - lb
        ok = margin >= -config.tolerance
        passed = passed and ok
        rows.append(("search_sup", restart, best, lb, margin, ok))
    columns = ["check", "index", "measured", "reference", "margin", "pass"]
    summary = {"runtime_s": time.time() - t0,
               "search_best": min((r[2] for r in rows if r[0] == "search_sup"),
                                  default=float("nan")),
               "t18_log_bound": lb}
    return ExperimentResult("minmax", columns, rows, summary, passed)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_RUNNERS: dict[str, Callable[[ExperimentConfig], ExperimentResult]] = {
    "constants": run_constants,
    "local_l2_sweep": run_soundness_sweep,
    "nonvanishing_sweep": run_soundness_sweep,
    "log_bound_sweep": run_soundness_sweep,
    "hurwitz_scan": run_hurwitz_scan,
    "lerch_scan": run_lerch_scan,
    "riemann_asymptotic": run_riemann_asymptotic,
    "minmax": run_minmax_explorer,
}


def dispatch(config: ExperimentConfig) -> ExperimentResult:
    result = _RUNNERS[config.experiment](config)
    if config.out:
        result.write_csv(config.out)
        result.write_summary(config.out + ".summary.json")
    return result
