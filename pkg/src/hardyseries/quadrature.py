"""Adaptive integration of |L|^p, log+/-|L|, and Poisson-weighted logs.

Plain adaptive Simpson with the 15-fold Richardson acceptance test per
panel, maximum recursion depth 20, and a hard cap of 2^20 panels.  The
integrands are analytic except for isolated log singularities at zeros of
L; there |L| itself stays continuous, so only the log needs a floor:
modulus below 1e-300 is clamped (log ~ -690.8, far below any bound of
interest) and the result is flagged.

``interval_sup`` is a grid-plus-refinement maximum and is reported as a
certified *lower* bound for the true supremum, which is the sound
direction for every inequality checked by this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidParameterError, QuadratureError

__all__ = [
    "IntegralResult",
    "integrate_abs_pow",
    "integrate_log",
    "interval_sup",
    "poisson_log_integral",
]

_MODULUS_FLOOR = 1e-300
_LOG_FLOOR = -math.log(_MODULUS_FLOOR)  # 690.77...
_MAX_DEPTH = 20
_PANEL_LIMIT = 2 ** 20

Evaluator = Callable[[complex], complex]


@dataclass(frozen=True)
class IntegralResult:
    value: float
    error_estimate: float
    subdivisions: int
    truncation_tail: float = 0.0
    flagged: bool = False

    def __post_init__(self) -> None:
        if not math.isfinite(self.error_estimate):
            raise QuadratureError("non-finite error estimate")


class _Panels:
    __slots__ = ("count", "flagged")

    def __init__(self) -> None:
        self.count = 1
        self.flagged = False


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(
    f: Callable[[float], float],
    a: float,
    b: float,
    fa: float,
    fm: float,
    fb: float,
    whole: float,
    tol: float,
    depth: int,
    panels: _Panels,
) -> tuple[float, float]:
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol or depth >= _MAX_DEPTH:
        if depth >= _MAX_DEPTH and abs(delta) > 15.0 * tol:
            panels.flagged = True
        return left + right + delta / 15.0, abs(delta) / 15.0
    panels.count += 1
    if panels.count > _PANEL_LIMIT:
        raise QuadratureError("adaptive Simpson exceeded the panel limit")
    lv, le = _adaptive(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, panels)
    rv, re_ = _adaptive(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, panels)
    return lv + rv, le + re_


def _integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    min_panels: int | None = None,
):
    # Pre-split on roughly the unit scale: the Simpson acceptance test can
    # alias on panels holding many oscillation periods, and the Dirichlet
    # frequencies in play are O(1).  Adaptivity then refines within panels.
    if min_panels is None:
        min_panels = max(8, min(4096, int(math.ceil(b - a))))
    panels = _Panels()
    edges = np.linspace(a, b, min_panels + 1)
    value = 0.0
    err = 0.0
    for lo, hi in zip(edges, edges[1:]):
        fa, fm, fb = f(lo), f(0.5 * (lo + hi)), f(hi)
        whole = _simpson(fa, fm, fb, hi - lo)
        v, e = _adaptive(
            f, lo, hi, fa, fm, fb, whole, tol * (hi - lo) / (b - a), 0, panels
        )
        value += v
        err += e
    return value, err, panels


def _check_interval(interval, tol: float) -> tuple[float, float]:
    a, b = float(interval[0]), float(interval[1])
    if not b > a:
        raise InvalidParameterError("integration interval must satisfy b > a")
    if tol <= 0:
        raise InvalidParameterError("tolerance must be positive")
    return a, b


def integrate_abs_pow(
    evaluator: Evaluator,
    sigma: float,
    interval,
    p: float,
    tol: float,
) -> IntegralResult:
    """Adaptive value of int_a^b |L(sigma + i t)|^p dt."""
    a, b = _check_interval(interval, tol)
    if p < 1:
        raise InvalidParameterError("p must be >= 1")

    def f(t: float) -> float:
        return abs(evaluator(complex(sigma, t))) ** p

    value, err, panels = _integrate(f, a, b, tol)
    return IntegralResult(value, err, panels.count, flagged=panels.flagged)


def integrate_log(
    evaluator: Evaluator,
    sigma: float,
    interval,
    sign: str,
    tol: float,
) -> IntegralResult:
    """Adaptive value of int_a^b log+|L| dt or int_a^b log-|L| dt.

    Both integrands are non-negative; log- = max(0, -log|L|).  Panels that
    sample a modulus below the 1e-300 floor contribute through the clamped
    value (<= panel_width * 690.8) and mark the result as flagged.
    """
    a, b = _check_interval(interval, tol)
    if sign not in ("plus", "minus"):
        raise InvalidParameterError("sign must be 'plus' or 'minus'")
    hit_floor = [False]

    def f(t: float) -> float:
        mod = abs(evaluator(complex(sigma, t)))
        if mod < _MODULUS_FLOOR:
            hit_floor[0] = True
            mod = _MODULUS_FLOOR
        lg = math.log(mod)
        return max(0.0, lg) if sign == "plus" else max(0.0, -lg)

    value, err, panels = _integrate(f, a, b, tol)
    return IntegralResult(
        value, err, panels.count, flagged=panels.flagged or hit_floor[0]
    )


def poisson_log_integral(
    evaluator: Evaluator,
    sigma: float,
    d: float,
    sign: str,
    tol: float,
    l1_norm: float,
    minus_tail_bound: float | None = None,
) -> IntegralResult:
    """(D/pi) int_R log+-|L(sigma+it)| / (D^2 + t^2) dt, adaptively truncated.

    The kernel integrates to one.  For the plus sign the tail beyond
    [-T, T] is bounded by log+(l1_norm) (1 - (2/pi) arctan(T/D)) and T
    grows until that is below tol/2.  For the minus sign the caller must
    supply ``minus_tail_bound``, an upper bound for the *whole* weighted
    log- integral (the anchor bounds produce one); the tail is then at most
    that bound minus the computed symmetric part, floored at zero.
    """
    if d <= 0:
        raise InvalidParameterError("D must be positive")
    if tol <= 0:
        raise InvalidParameterError("tolerance must be positive")
    if sign not in ("plus", "minus"):
        raise InvalidParameterError("sign must be 'plus' or 'minus'")
    if sign == "minus" and minus_tail_bound is None:
        raise InvalidParameterError(
            "minus sign needs minus_tail_bound (an anchor-based total bound)"
        )
    hit_floor = [False]

    def f(t: float) -> float:
        mod = abs(evaluator(complex(sigma, t)))
        if mod < _MODULUS_FLOOR:
            hit_floor[0] = True
            mod = _MODULUS_FLOOR
        lg = math.log(mod)
        part = max(0.0, lg) if sign == "plus" else max(0.0, -lg)
        return d / math.pi * part / (d * d + t * t)

    log_plus_norm = max(0.0, math.log(l1_norm)) if l1_norm > 0 else 0.0
    t_max = 8.0 * d
    if sign == "plus":
        # grow T until the pointwise bound log+ ||L||_1 closes the tail
        for _ in range(60):
            tail = log_plus_norm * (1.0 - 2.0 / math.pi * math.atan(t_max / d))
            if tail <= tol / 2.0 or log_plus_norm == 0.0:
                break
            t_max *= 2.0
        else:
            raise QuadratureError("plus-sign Poisson tail does not close")
        tail = log_plus_norm * (1.0 - 2.0 / math.pi * math.atan(t_max / d))
    value = 0.0
    err = 0.0
    subdivisions = 0
    flagged = False
    # symmetric octave panels: the kernel varies boundedly on each, so the
    # depth-limited recursion resolves even a very distant truncation point
    cuts = [0.0, 0.5 * d]
    while cuts[-1] < t_max:
        cuts.append(min(2.0 * cuts[-1], t_max))
    for lo, hi in zip(cuts, cuts[1:]):
        # resolution proportional to the segment's share of the kernel mass:
        # distant octaves contribute O(D/T) and need few base panels
        mass = (math.atan(hi / d) - math.atan(lo / d)) / math.pi
        base = max(8, min(512, int(math.ceil(hi - lo)), int(math.ceil(3000.0 * mass))))
        for seg in ((lo, hi), (-hi, -lo)):
            v, e, panels = _integrate(
                f, seg[0], seg[1], tol / (2 * len(cuts)), min_panels=base
            )
            value += v
            err += e
            subdivisions += panels.count
            flagged = flagged or panels.flagged
    if sign == "minus":
        tail = max(0.0, minus_tail_bound - value)
    return IntegralResult(
        value, err, subdivisions, truncation_tail=tail,
        flagged=flagged or hit_floor[0],
    )


def interval_sup(
    evaluator: Evaluator,
    sigma: float,
    interval,
    grid_n: int = 64,
) -> float:
    """Grid maximum of |L(sigma+it)| on [a, b], refined around the argmax.

    Two rounds of golden-section-style local refinement around the best
    grid point; the result is a lower bound for the true supremum.
    """
    a, b = float(interval[0]), float(interval[1])
    if not b > a:
        raise InvalidParameterError("interval must satisfy b > a")
    if grid_n < 16:
        raise InvalidParameterError("grid_n must be >= 16")

    def f(t: float) -> float:
        return abs(evaluator(complex(sigma, t)))

    h = (b - a) / grid_n
    best_t, best = a, f(a)
    t = a
    for i in range(1, grid_n + 1):
        t = a + i * h
        v = f(t)
        if v > best:
            best_t, best = t, v
    lo, hi = max(a, best_t - h), min(b, best_t + h)
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    for _ in range(2):
        # golden-section shrink of [lo, hi] around the running maximum
        for _ in range(24):
            x1 = hi - invphi * (hi - lo)
            x2 = lo + invphi * (hi - lo)
            f1, f2 = f(x1), f(x2)
            if f1 > best:
                best, best_t = f1, x1
            if f2 > best:
                best, best_t = f2, x2
            if f1 < f2:
                lo = x1
            else:
                hi = x2
        lo, hi = max(a, best_t - (hi - lo)), min(b, best_t + (hi - lo))
    return best
