"""Explicit constants and right-hand sides for the series inequalities.

Every bound in the catalog is computed here and wrapped in a
``BoundReport``.  Identifiers follow the internal catalog:

  T4          local mean square           int_0^D |L|^2 <= (D + 3 pi C) ||L||_2^2
  T6/T7/T9    shifted-tail decay          ||L_x - a_0||_1 upper bounds
  T10/L8      weighted log+               Poisson-kernel log+ integral bounds
  T11/T12     weighted log-               log+ bound minus log|anchor|
  T13/T14/L13 nonvanishing abscissa       x_xi with xi <= |L| <= 2 - xi beyond it
  T15/T16     short-interval log bounds   (general coefficients)
  T21/T22     short-interval log bounds   (|a_n| <= 1)
  T17-T20     sup / L^p lower bounds      exp(-...) forms
  T23-T26     sup / L^p lower bounds      (24 ||L||_2)^(-K0/delta) forms
  T27-T30,L14 zeta-family lower bounds    astronomically small; log space only

Lower bounds smaller than any representable float are always handled in
natural-log space; linear conversion is attempted only when |log| < 700.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import quadrature as qd
from . import series as se
from . import special as sp
from .errors import (
    InvalidParameterError,
    NearZeroAnchorError,
)

__all__ = [
    "BoundReport",
    "THEOREM_IDS",
    "ab2_constants",
    "class_params",
    "classical_l1_tail",
    "consistency_fractions",
    "hurwitz_anchor_chain",
    "hurwitz_lower_bound",
    "l1_tail_from_l2",
    "lambda1_floor",
    "local_l2_bound",
    "log_minus_weighted_bound",
    "log_plus_weighted_bound",
    "nonvanishing_abscissa",
    "nonvanishing_cap",
    "nonvanishing_residual",
    "short_interval_log_bounds",
    "supnorm_lp_lower_bound",
]

THEOREM_IDS = (
    "T4", "T6", "T7", "T8", "T9", "T10", "T11", "T12", "T13", "T14",
    "T15", "T16", "T17", "T18", "T19", "T20", "T21", "T22", "T23", "T24",
    "T25", "T26", "L13", "L14",
)

#: Separation constant of the classical exponents at the half-line,
#: 1 / (sqrt(2) log 2); also an upper bound for every alpha in (0, 1].
CLASSICAL_C = 1.0 / (math.sqrt(2.0) * math.log(2.0))

LOG2 = math.log(2.0)


@dataclass(frozen=True)
class BoundReport:
    theorem_id: str
    inputs: dict
    bound_value: float
    side: str  # "upper" | "lower"
    log_space: bool = False
    valid: bool = True
    notes: str = ""

    def __post_init__(self) -> None:
        if self.theorem_id not in THEOREM_IDS:
            raise InvalidParameterError(f"unknown theorem id {self.theorem_id!r}")
        if self.side not in ("upper", "lower"):
            raise InvalidParameterError("side must be 'upper' or 'lower'")
        if not math.isfinite(self.bound_value):
            raise InvalidParameterError("bound value must be finite")

    @property
    def linear_value(self) -> Optional[float]:
        """Linear-space value, or None when it would over/underflow."""
        if not self.log_space:
            return self.bound_value
        if abs(self.bound_value) < 700.0:
            return math.exp(self.bound_value)
        return None

    def to_json(self) -> str:
        return json.dumps(
            {
                "theorem_id": self.theorem_id,
                "inputs": self.inputs,
                "bound_value": self.bound_value,
                "log_space": self.log_space,
                "side": self.side,
                "valid": self.valid,
                "notes": self.notes,
            }
        )


# ---------------------------------------------------------------------------
# exponent floor and tail decay
# ---------------------------------------------------------------------------

def lambda1_floor(c: float, sigma: float) -> float:
    """K = W(sigma/C)/sigma for sigma > 0, continuous limit 1/C at sigma = 0."""
    if c <= 0:
        raise InvalidParameterError("C must be positive")
    if sigma < 0:
        raise InvalidParameterError("sigma must be >= 0")
    if sigma == 0.0:
        return 1.0 / c
    return sp.lambert_w0(sigma / c) / sigma


def l1_tail_from_l2(norm2_tail: float, c: float, rate: float, x: float) -> float:
    """sqrt(1 + C/(2x)) ||L - a_0||_2 e^(-rate x); rate is lambda_1 or K."""
    if x <= 0:
        raise InvalidParameterError("shift x must be positive")
    if norm2_tail < 0 or c < 0:
        raise InvalidParameterError("norm and C must be non-negative")
    return math.sqrt(1.0 + c / (2.0 * x)) * norm2_tail * math.exp(-rate * x)


def classical_l1_tail(norm2_tail: float, x: float) -> float:
    """Classical-exponent specialization: 2^-x sqrt(1 + 1/(x sqrt(8) log 2))."""
    if x <= 0:
        raise InvalidParameterError("shift x must be positive")
    return (
        2.0 ** (-x)
        * math.sqrt(1.0 + 1.0 / (x * math.sqrt(8.0) * LOG2))
        * norm2_tail
    )


def local_l2_bound(norm2: float, c: float, d: float) -> float:
    """(D + 3 pi C) ||L||_2^2 bounds int_0^D |L(sigma_1 + it)|^2 dt."""
    if d <= 0:
        raise InvalidParameterError("D must be positive")
    return (d + 3.0 * math.pi * c) * norm2 ** 2


# ---------------------------------------------------------------------------
# weighted logarithmic integrals
# ---------------------------------------------------------------------------

def log_plus_weighted_bound(
    d: float,
    mode: str,
    norm1: float | None = None,
    norm2: float | None = None,
    c: float | None = None,
) -> tuple[float, bool]:
    """Upper bound for (D/pi) int log+|L(sigma+it)| / (D^2+t^2) dt.

    H2 mode: kappa_half + (1/2) log(1 + 3 pi C / D) + log ||L||_2, valid
    only when non-negative (the returned flag).  L1 mode: log+ ||L||_1,
    always valid.
    """
    if d <= 0:
        raise InvalidParameterError("D must be positive")
    if mode == "H2":
        if norm2 is None or c is None:
            raise InvalidParameterError("H2 mode needs norm2 and C")
        kc = sp.kappa_constants()
        value = kc.kappa_half + 0.5 * math.log(1.0 + 3.0 * math.pi * c / d) + math.log(norm2)
        return value, value >= 0.0
    if mode == "L1":
        if norm1 is None:
            raise InvalidParameterError("L1 mode needs norm1")
        return max(0.0, math.log(norm1)) if norm1 > 0 else 0.0, True
    raise InvalidParameterError("mode must be 'H2' or 'L1'")


_ANCHOR_FLOOR = 1e-12


def log_minus_weighted_bound(
    series: se.DirichletSeries,
    d: float,
    mode: str,
    target_error: float = 1e-10,
) -> BoundReport:
    """log+ weighted bound minus log|L(sigma + D)|.

    Bounds the non-negative quantity (D/pi) int log-|L| / (D^2+t^2) dt.
    The anchor L(sigma + D) is evaluated numerically; moduli below 1e-12
    raise NearZeroAnchorError.
    """
    anchor = se.evaluate(series, series.sigma + d, target_error).value
    if abs(anchor) <= _ANCHOR_FLOOR:
        raise NearZeroAnchorError(
            f"|L(sigma + D)| = {abs(anchor):.3e} too small for a log bound"
        )
    norm2 = se.l2_norm(series)
    l1 = se.l1_norm_at(series, series.sigma)
    norm1 = l1.upper if isinstance(l1, se.Interval) else l1
    if mode == "H2":
        c = se.separation_constant(series)
        plus, valid = log_plus_weighted_bound(d, "H2", norm2=norm2, c=c)
        tid = "T11"
        inputs = {"D": d, "C": c, "norm2": norm2, "anchor": abs(anchor)}
    else:
        plus, valid = log_plus_weighted_bound(d, "L1", norm1=norm1)
        tid = "T12"
        inputs = {"D": d, "norm1": norm1, "anchor": abs(anchor)}
    return BoundReport(
        theorem_id=tid,
        inputs=inputs,
        bound_value=plus - math.log(abs(anchor)),
        side="upper",
        valid=valid,
    )


def hurwitz_anchor_chain(delta: float = 0.05, d: float = 0.7378) -> dict:
    """The assembled anchor-product chain behind the zeta-family L^1 bound.

    Returns every factor: the anchor window value zeta(1 + D), the margin
    2 - zeta(1 + D), the bracket kappa_half + log(1 + 3 pi C / D) -
    log(2 - zeta(1 + D)), the kernel factor pi (D + delta^2 / (4 D)), and
    their product (printed as 15.976 <= 16 at delta = 0.05; recomputation
    gives the kernel factor 2.3205 rather than the quoted 2.3198).
    """
    z = sp.riemann_zeta(1.0 + d, 1e-11).real
    margin = 2.0 - z
    if margin <= 0:
        raise NearZeroAnchorError("anchor 2 - zeta(1 + D) is not positive")
    kc = sp.kappa_constants()
    bracket = kc.kappa_half + math.log(1.0 + 3.0 * math.pi * CLASSICAL_C / d) - math.log(margin)
    kernel = math.pi * (d + delta ** 2 / (4.0 * d))
    return {
        "zeta_1_plus_d": z,
        "anchor_margin": margin,
        "bracket": bracket,
        "kernel_factor": kernel,
        "product": kernel * bracket,
        "c": CLASSICAL_C,
        "norm_coefficient": kernel,  # multiplies log ||L||_2 in the chain
    }


# ---------------------------------------------------------------------------
# nonvanishing abscissas
# ---------------------------------------------------------------------------

def _bisect_decreasing(fn, target: float, lo: float = 1e-9) -> float:
    """Root of the decreasing fn(x) = target; bracket doubled, then bisected."""
    if fn(lo) <= target:
        return lo
    hi = max(2.0 * lo, 1.0)
    for _ in range(200):
        if fn(hi) < target:
            break
        hi *= 2.0
    else:
        raise InvalidParameterError("no sign change found for the root bracket")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if fn(mid) > target:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-16 * max(1.0, hi):
            break
    return 0.5 * (lo + hi)


def nonvanishing_abscissa(
    norm: float,
    c: float,
    rate: float,
    xi: float,
    variant: str,
) -> float:
    """Shift x_xi with xi <= |L(s)| <= 2 - xi for Re(s) >= sigma + x_xi.

    variant "L1"  (tail norm ||L - 1||_1):  closed form log+(norm/(1-xi))/rate
    variant "H2"  (tail norm ||L - 1||_2):  root of
                  sqrt(1 + C/(2x)) e^(-rate x) norm = 1 - xi
    variant "BoundedCoeff" (|a_n| <= 1):    root of (1 + C/x) e^(-rate x) = 1 - xi
    """
    if not 0 < xi < 1:
        raise InvalidParameterError("xi must lie in (0, 1)")
    if norm < 0:
        raise InvalidParameterError("norm must be non-negative")
    if rate <= 0:
        raise InvalidParameterError("rate must be positive")
    target = 1.0 - xi
    if variant == "L1":
        if norm == 0.0:
            return 0.0
        return max(0.0, math.log(norm / target)) / rate
    if variant == "H2":
        if norm == 0.0:
            return 0.0
        if c == 0.0:
            return max(0.0, math.log(norm / target)) / rate
        return _bisect_decreasing(
            lambda x: math.sqrt(1.0 + c / (2.0 * x)) * math.exp(-rate * x) * norm,
            target,
        )
    if variant == "BoundedCoeff":
        if c < 0:
            raise InvalidParameterError("C must be non-negative")
        return _bisect_decreasing(
            lambda x: (1.0 + c / x) * math.exp(-rate * x), target
        )
    raise InvalidParameterError(f"unknown variant {variant!r}")


def nonvanishing_residual(
    x: float, norm: float, c: float, rate: float, xi: float, variant: str
) -> float:
    """|defining equation at x| for the root variants (diagnostics)."""
    target = 1.0 - xi
    if variant == "H2":
        return abs(math.sqrt(1.0 + c / (2.0 * x)) * math.exp(-rate * x) * norm - target)
    if variant == "BoundedCoeff":
        return abs((1.0 + c / x) * math.exp(-rate * x) - target)
    raise InvalidParameterError("residual defined for the root variants only")


def nonvanishing_cap(norm2_tail: float, c: float, k: float, xi: float) -> float:
    """The closed-form cap max(C, K^-1 log+(sqrt(3) norm / (sqrt(2)(1-xi)))).

    An upper bound for the H2-variant x_xi.
    """
    if not 0 < xi < 1:
        raise InvalidParameterError("xi must lie in (0, 1)")
    arg = math.sqrt(3.0) * norm2_tail / (math.sqrt(2.0) * (1.0 - xi))
    return max(c, max(0.0, math.log(arg)) / k if arg > 0 else 0.0)


def bounded_coeff_printed_caps(c: float, lambda1: float, xi: float) -> float:
    """max(C, lambda_1^-1 log+(2/(1-xi))) as printed for the bounded-coefficient
    variant; reported for comparison with the exact root, not asserted as a
    bound in either direction (the printed inequality direction is doubtful)."""
    return max(c, max(0.0, math.log(2.0 / (1.0 - xi))) / lambda1)


# ---------------------------------------------------------------------------
# short-interval log bounds
# ---------------------------------------------------------------------------

def theorem21_constants(
    c: float, k: float, delta: float, quarter_over_d: bool = False
) -> tuple[float, float]:
    """K0 = pi (max(C, log4/K) + delta^2/(4C)) and K1 = C0 K0.

    ``quarter_over_d`` switches the last term to delta^2/(4 D) with
    D = max(C, log4/K), the variant the derivation suggests; the printed
    form divides by 4C.  Both are exposed, the printed one is the default.
    """
    if delta <= 0:
        raise InvalidParameterError("delta must be positive")
    dval = max(c, math.log(4.0) / k)
    denom = dval if quarter_over_d else c
    k0 = math.pi * (dval + delta ** 2 / (4.0 * denom))
    k1 = sp.kappa_constants().c0 * k0
    return k0, k1


#: The tuned level behind the printed square-summable short-interval bound.
XI_DEFAULT_T16 = 1.0 - math.sqrt(3.0) / (math.e * math.sqrt(2.0))


def short_interval_log_bounds(
    variant: str,
    delta: float,
    norm1: float | None = None,
    norm2: float | None = None,
    c: float | None = None,
    k: float | None = None,
    lambda1: float | None = None,
    quarter_over_d: bool = False,
    xi: float | None = None,
) -> tuple[float, Optional[float]]:
    """(log- bound, log+ bound or None) for int_T^(T+delta) log+-|L| dt.

    variant "T15" (absolutely convergent, a_0 = 1):
        minus: pi ((log ||L||_1 + log 2)^2 / lambda_1 + delta^2 lambda_1)
        plus:  delta log ||L||_1
    variant "T16" (square-summable class, a_0 = 1):
        minus: pi ((log ||L||_2 + 1)^2 / K + delta^2 K)
        plus:  delta log(1 + 3 pi C / delta) + delta log ||L||_2
    variant "T21" (|a_n| <= 1): K0 + K1 log ||L||_2, no plus side
    variant "T22" (|a_n| <= 1, absolutely convergent):
        K0 (log 2 + log ||L||_1), no plus side

    The printed T15/T16 constants bake in the levels xi = 1/2 and
    xi = 1 - sqrt(3)/(e sqrt 2) respectively; passing ``xi`` overrides the
    level and evaluates the underlying anchor assembly
    pi (D + delta^2/(4D)) (log+ bound - log xi) with the matching
    nonvanishing distance D instead of the simplified printed form.
    """
    if delta <= 0:
        raise InvalidParameterError("delta must be positive")
    if xi is not None and not 0 < xi < 1:
        raise InvalidParameterError("xi must lie in (0, 1)")
    if variant == "T15":
        if norm1 is None or lambda1 is None:
            raise InvalidParameterError("T15 needs norm1 and lambda1")
        if norm1 < 1.0:
            raise InvalidParameterError("T15 assumes a_0 = 1, so norm1 >= 1")
        plus = delta * math.log(norm1)
        if xi is None:
            minus = math.pi * (
                (math.log(norm1) + LOG2) ** 2 / lambda1 + delta ** 2 * lambda1
            )
            return minus, plus
        dist = max(1e-12, math.log(norm1 / (1.0 - xi)) / lambda1)
        minus = math.pi * (dist + delta ** 2 / (4.0 * dist)) * (
            math.log(norm1) - math.log(xi)
        )
        return minus, plus
    if variant == "T16":
        if norm2 is None or c is None or k is None:
            raise InvalidParameterError("T16 needs norm2, C and K")
        if norm2 < 1.0:
            raise InvalidParameterError("T16 assumes a_0 = 1, so norm2 >= 1")
        plus = delta * math.log(1.0 + 3.0 * math.pi * c / delta) + delta * math.log(norm2)
        if xi is None:
            minus = math.pi * ((math.log(norm2) + 1.0) ** 2 / k + delta ** 2 * k)
            return minus, plus
        arg = math.sqrt(3.0) * norm2 / (math.sqrt(2.0) * (1.0 - xi))
        dist = max(c, max(0.0, math.log(arg)) / k, 1e-12)
        kc = sp.kappa_constants()
        minus = math.pi * (dist + delta ** 2 / (4.0 * dist)) * (
            kc.kappa_half
            + math.log(1.0 + 3.0 * math.pi * c / dist)
            + math.log(norm2)
            - math.log(xi)
        )
        return minus, plus
    if variant == "T21":
        if norm2 is None or c is None or k is None:
            raise InvalidParameterError("T21 needs norm2, C and K")
        k0, k1 = theorem21_constants(c, k, delta, quarter_over_d)
        return k0 + k1 * math.log(norm2), None
    if variant == "T22":
        if norm1 is None or c is None or k is None:
            raise InvalidParameterError("T22 needs norm1, C and K")
        k0, _ = theorem21_constants(c, k, delta, quarter_over_d)
        return k0 * (LOG2 + math.log(norm1)), None
    raise InvalidParameterError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# sup-norm and L^p lower bounds (natural-log space)
# ---------------------------------------------------------------------------

def supnorm_lp_lower_bound(
    variant: str,
    delta: float,
    norm1: float | None = None,
    norm2: float | None = None,
    c: float | None = None,
    k: float | None = None,
    lambda1: float | None = None,
    quarter_over_d: bool = False,
) -> float:
    """Natural log of the lower bound for inf_T of the window sup or the
    normalized L^p mean (delta^-1 int |L|^p)^(1/p); the bound itself does
    not depend on p.

    T17/T19: -pi ((log ||L||_1 + log 2)^2 / (lambda_1 delta) + delta lambda_1)
    T18/T20: -pi ((log ||L||_2 + 1)^2 / (K delta) + K delta)
    T23/T25: -(K0/delta) log(24 ||L||_2)
    T24/T26: -(K0/delta) log(2 ||L||_1)

    The absolutely-convergent L^p variant (T19) uses the L^1 norm its
    derivation rests on.
    """
    if delta <= 0:
        raise InvalidParameterError("delta must be positive")
    if variant in ("T17", "T19"):
        if norm1 is None or lambda1 is None:
            raise InvalidParameterError(f"{variant} needs norm1 and lambda1")
        return -math.pi * (
            (math.log(norm1) + LOG2) ** 2 / (lambda1 * delta) + delta * lambda1
        )
    if variant in ("T18", "T20"):
        if norm2 is None or k is None:
            raise InvalidParameterError(f"{variant} needs norm2 and K")
        return -math.pi * ((math.log(norm2) + 1.0) ** 2 / (k * delta) + k * delta)
    if variant in ("T23", "T25"):
        if norm2 is None or c is None or k is None:
            raise InvalidParameterError(f"{variant} needs norm2, C and K")
        k0, _ = theorem21_constants(c, k, delta, quarter_over_d)
        return -(k0 / delta) * math.log(24.0 * norm2)
    if variant in ("T24", "T26"):
        if norm1 is None or c is None or k is None:
            raise InvalidParameterError(f"{variant} needs norm1, C and K")
        k0, _ = theorem21_constants(c, k, delta, quarter_over_d)
        return -(k0 / delta) * math.log(2.0 * norm1)
    raise InvalidParameterError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# zeta-family lower bounds (log space)
# ---------------------------------------------------------------------------

_LN10 = math.log(10.0)


def hurwitz_lower_bound(
    alpha: float,
    delta: float,
    variant: str,
    coeff_sum: float | None = None,
) -> float:
    """Natural log of the window-integral lower bound for the zeta families.

    variant "HurwitzLerch": log of alpha^-1 (1 + alpha/delta)^(-7/(6 delta))
                            10^(-9/delta); for the twisted family pass the
                            shift parameter as ``alpha``.
    variant "Uniform":      log of delta^(7/(6 delta)) 10^(-9/delta)
                            (the infimum over the shift parameter).
    variant "DirichletL14": log of alpha^-1 (1 + alpha S)^(-29/(25 delta))
                            e^(-16/delta) with S = sum |a_n|^2/(n+alpha)
                            passed as ``coeff_sum``.
    Validity window 0 < delta <= 0.05.
    """
    if not 0 < delta <= 0.05:
        if delta <= 0:
            raise InvalidParameterError("delta must be positive")
        raise InvalidParameterError("bounds are stated for delta <= 0.05")
    if not 0 < alpha <= 1:
        raise InvalidParameterError("alpha must lie in (0, 1]")
    if variant == "HurwitzLerch":
        return (
            -math.log(alpha)
            - 7.0 / (6.0 * delta) * math.log(1.0 + alpha / delta)
            - 9.0 / delta * _LN10
        )
    if variant == "Uniform":
        return 7.0 / (6.0 * delta) * math.log(delta) - 9.0 / delta * _LN10
    if variant == "DirichletL14":
        if coeff_sum is None or coeff_sum < 0:
            raise InvalidParameterError("DirichletL14 needs coeff_sum >= 0")
        return (
            -math.log(alpha)
            - 29.0 / (25.0 * delta) * math.log(1.0 + alpha * coeff_sum)
            - 16.0 / delta
        )
    raise InvalidParameterError(f"unknown variant {variant!r}")


def consistency_fractions() -> dict:
    """Exact fraction identities the zeta-family constants rest on."""
    return {
        "seven_sixths": Fraction(175, 174) * Fraction(29, 25) == Fraction(7, 6),
        "hump_exponent": Fraction(175, 174) * 16 == Fraction(1400, 87),
    }


def ab2_constants() -> dict:
    """The folded mollifier constant: 90^(175/174) e^(1400/87) = 9.0e8 <= 1e9.

    The plain product 90 e^(1400/87) = 8.77e8 is also reported; the quoted
    9.0e8 decimal requires the 175/174 exponent on the 90.
    """
    plain = 90.0 * math.exp(1400.0 / 87.0)
    folded = 90.0 ** (175.0 / 174.0) * math.exp(1400.0 / 87.0)
    return {
        "plain": plain,
        "folded": folded,
        "below_1e9": folded <= 1e9 and plain <= 1e9,
    }


# ---------------------------------------------------------------------------
# class parameters from a series
# ---------------------------------------------------------------------------

def class_params(series: se.DirichletSeries) -> se.ClassParams:
    """(C, sigma, lambda_1, K) for a series with >= 2 terms."""
    c = se.separation_constant(series)
    lambda1 = series.lambda1
    k = min(lambda1_floor(c, max(series.sigma, 0.0)), lambda1)
    return se.ClassParams(c=c, sigma=series.sigma, lambda1=lambda1, k=k)
