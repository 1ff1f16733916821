"""Reference special-function evaluators.

Everything downstream that needs a zeta value gets it from here:

* ``lambert_w0``      principal branch of w -> w e^w on [0, inf)
* ``riemann_zeta``    Euler-Maclaurin, Re(s) > 0, s != 1
* ``hurwitz_zeta``    Euler-Maclaurin for sum (n+alpha)^-s, 0 < alpha <= 1
* ``lerch_phi``       sum e^(2 pi i n alpha) (n+beta)^-s, Re(s) >= 1
* ``kappa_constants`` the named constants used by the weighted log bounds

The Euler-Maclaurin remainder after M Bernoulli terms with cutoff N is
enveloped by the first omitted term times |s + 2M + 1| / (sigma + 2M + 1);
cutoffs are doubled until the bound closes, so every returned value carries
an explicit error budget.  Bernoulli numbers B_2 .. B_60 are generated
exactly once at import time from the integer recurrence.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import (
    InvalidParameterError,
    PoleError,
    PrecisionError,
)

__all__ = [
    "BERNOULLI_B2K",
    "KappaConstants",
    "ZetaEvalConfig",
    "bernoulli_b2k",
    "hurwitz_zeta",
    "hurwitz_zeta_grid",
    "kappa_constants",
    "lambert_w0",
    "lerch_phi",
    "riemann_zeta",
]

_MAX_BERNOULLI_TERMS = 30  # B_2 through B_60


def _bernoulli_even() -> tuple[float, ...]:
    # B_m via sum_{j<m} C(m+1, j) B_j = -(m+1) B_m, exact rational arithmetic.
    bs = [Fraction(1)]
    for m in range(1, 2 * _MAX_BERNOULLI_TERMS + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * bs[j]
        bs.append(-acc / (m + 1))
    return tuple(float(bs[2 * k]) for k in range(1, _MAX_BERNOULLI_TERMS + 1))


BERNOULLI_B2K: tuple[float, ...] = _bernoulli_even()

# B_2k / (2k)! precomputed alongside, used in every Euler-Maclaurin sum.
_B2K_OVER_FACT: tuple[float, ...] = tuple(
    BERNOULLI_B2K[k - 1] / math.factorial(2 * k)
    for k in range(1, _MAX_BERNOULLI_TERMS + 1)
)


def bernoulli_b2k(k: int) -> float:
    """B_{2k} for 1 <= k <= 30."""
    if not 1 <= k <= _MAX_BERNOULLI_TERMS:
        raise InvalidParameterError(f"B_2k available for 1 <= k <= 30, got k={k}")
    return BERNOULLI_B2K[k - 1]


@dataclass(frozen=True)
class ZetaEvalConfig:
    """Cutoff / correction-depth knobs for the Euler-Maclaurin evaluators."""

    cutoff: int = 64
    bernoulli_terms: int = 14
    target_error: float = 1e-12

    def __post_init__(self) -> None:
        if self.cutoff < 10:
            raise InvalidParameterError("cutoff N must be >= 10")
        if not 1 <= self.bernoulli_terms <= _MAX_BERNOULLI_TERMS:
            raise InvalidParameterError("bernoulli_terms M must be in [1, 30]")
        if not self.target_error > 0:
            raise InvalidParameterError("target_error must be positive")


_DEFAULT_CONFIG = ZetaEvalConfig()


# ---------------------------------------------------------------------------
# Lambert W, principal branch on [0, inf)
# ---------------------------------------------------------------------------

def lambert_w0(x: float) -> float:
    """Solve w e^w = x for w >= 0, given x >= 0.

    Newton iteration from w0 = log(1+x) (an upper start, so the iteration
    descends monotonically on this convex problem), with a Halley step as
    fallback if Newton ever stalls.  Residual tolerance 1e-14 relative to
    max(1, x).
    """
    if math.isnan(x) or x < 0:
        raise InvalidParameterError(f"lambert_w0 requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    w = math.log1p(x)
    tol = 1e-14 * max(1.0, x)
    for _ in range(100):
        ew = math.exp(w)
        resid = w * ew - x
        if abs(resid) <= tol:
            return w
        denom = ew * (w + 1.0)
        step = resid / denom
        # Halley fallback guards the (never observed on x >= 0) stall case.
        if not math.isfinite(step) or abs(step) > abs(w) + 1.0:
            step = resid / (denom - (w + 2.0) * resid / (2.0 * w + 2.0))
        w -= step
    if abs(w * math.exp(w) - x) <= 100 * tol:
        return w
    raise PrecisionError(f"lambert_w0 failed to converge for x={x}")


# ---------------------------------------------------------------------------
# Euler-Maclaurin core
# ---------------------------------------------------------------------------

def _hurwitz_em_raw(s: complex, alpha: float, n_cutoff: int, m_terms: int):
    """One Euler-Maclaurin pass; returns (value, remainder_bound)."""
    n = np.arange(n_cutoff)
    head = np.sum((n + alpha) ** (-s))
    na = n_cutoff + alpha
    value = head + na ** (1 - s) / (s - 1) + 0.5 * na ** (-s)
    rising = s  # (s)_1; updated to (s)_{2k+1} at the end of each loop pass
    for k in range(1, m_terms + 1):
        value += _B2K_OVER_FACT[k - 1] * rising * na ** (-s - 2 * k + 1)
        rising = rising * (s + 2 * k - 1) * (s + 2 * k)
    k = m_terms + 1
    omitted = abs(_B2K_OVER_FACT[k - 1]) * abs(rising) * na ** (-s.real - 2 * k + 1)
    envelope = abs(s + 2 * m_terms + 1) / (s.real + 2 * m_terms + 1)
    return complex(value), float(omitted * envelope)


def hurwitz_zeta(
    s: complex,
    alpha: float,
    target_error: float = 1e-12,
    config: ZetaEvalConfig | None = None,
) -> complex:
    """zeta(s, alpha) = sum_{n>=0} (n+alpha)^-s for Re(s) > 0, s != 1.

    Raises PoleError at s = 1 and PrecisionError if the remainder bound
    cannot be pushed below ``target_error`` (cutoff capped at 2^21).
    """
    value, _ = hurwitz_zeta_with_error(s, alpha, target_error, config)
    return value


def hurwitz_zeta_with_error(
    s: complex,
    alpha: float,
    target_error: float = 1e-12,
    config: ZetaEvalConfig | None = None,
) -> tuple[complex, float]:
    s = complex(s)
    if not 0 < alpha <= 1:
        raise InvalidParameterError(f"alpha must lie in (0, 1], got {alpha}")
    if s.real <= 0:
        raise InvalidParameterError(f"Euler-Maclaurin path needs Re(s) > 0, got {s}")
    if s == 1:
        raise PoleError("zeta(s, alpha) has its pole at s = 1")
    cfg = config or _DEFAULT_CONFIG
    tol = min(target_error, cfg.target_error)
    n_cutoff = max(cfg.cutoff, 16)
    m = cfg.bernoulli_terms
    for _ in range(22):
        value, bound = _hurwitz_em_raw(s, alpha, n_cutoff, m)
        if bound <= tol:
            return value, bound
        n_cutoff *= 2
        if n_cutoff > 2 ** 21:
            break
    raise PrecisionError(
        f"hurwitz_zeta: remainder bound {bound:.3e} > target {tol:.3e} at s={s}"
    )


def riemann_zeta(
    s: complex,
    target_error: float = 1e-12,
    config: ZetaEvalConfig | None = None,
) -> complex:
    """zeta(s) for Re(s) > 0, s != 1 (Euler-Maclaurin, alpha = 1)."""
    return hurwitz_zeta(s, 1.0, target_error, config)


def hurwitz_tail_sum(
    w: complex,
    alpha: float,
    start: int,
    target_error: float = 1e-12,
) -> tuple[complex, float]:
    """sum_{n >= start} (n + alpha)^-w with a certified bound, Re(w) > 1.

    Direct terms up to a cutoff, then the same Euler-Maclaurin closure as
    the zeta evaluators.  Used for the analytic tails of built-in series.
    """
    w = complex(w)
    if w.real <= 1:
        raise InvalidParameterError(f"tail sum diverges for Re(w) = {w.real}")
    m = 14
    n_cutoff = max(start, 32)
    for _ in range(18):
        na = n_cutoff + alpha
        closure = na ** (1 - w) / (w - 1) + 0.5 * na ** (-w)
        rising = w
        for k in range(1, m + 1):
            closure += _B2K_OVER_FACT[k - 1] * rising * na ** (-w - 2 * k + 1)
            rising = rising * (w + 2 * k - 1) * (w + 2 * k)
        k = m + 1
        omitted = abs(_B2K_OVER_FACT[k - 1]) * abs(rising) * na ** (-w.real - 2 * k + 1)
        bound = float(omitted * abs(w + 2 * m + 1) / (w.real + 2 * m + 1))
        if bound <= target_error:
            n = np.arange(start, n_cutoff)
            head = np.sum((n + alpha) ** (-w)) if n.size else 0j
            return complex(head + closure), bound
        n_cutoff *= 2
    raise PrecisionError(
        f"hurwitz_tail_sum: bound {bound:.3e} > target {target_error:.3e}"
    )


def hurwitz_zeta_grid(
    alpha: float,
    ts: np.ndarray,
    sigma: float = 1.0,
    target_error: float = 1e-9,
) -> np.ndarray:
    """Vectorized zeta(sigma + i t, alpha) on an array of ordinates.

    Picks a single (N, M) pair sized for the worst |t| in the block and
    verifies the remainder envelope there; inputs with sigma + i t == 1 are
    rejected.  Used by the scan harness where millions of values are needed.
    """
    ts = np.asarray(ts, dtype=float)
    if not 0 < alpha <= 1:
        raise InvalidParameterError(f"alpha must lie in (0, 1], got {alpha}")
    if sigma <= 0:
        raise InvalidParameterError("sigma must be positive")
    if sigma == 1.0 and np.any(ts == 0.0):
        raise PoleError("grid contains the pole s = 1")
    tmax = float(np.max(np.abs(ts))) if ts.size else 0.0
    m = 14
    n_cutoff = max(64, int(math.ceil(0.55 * (tmax + 2 * m + 1))))
    worst = complex(sigma, tmax)
    for _ in range(8):
        _, bound = _hurwitz_em_raw(worst, alpha, n_cutoff, m)
        if bound <= target_error:
            break
        n_cutoff *= 2
    else:
        raise PrecisionError("hurwitz_zeta_grid could not close the error bound")

    s = sigma + 1j * ts
    n = np.arange(n_cutoff)
    # chunk the outer product so the (points x cutoff) matrix stays modest
    out = np.empty(ts.shape, dtype=complex)
    chunk = max(1, int(4_000_000 // max(n_cutoff, 1)))
    na = n_cutoff + alpha
    for lo in range(0, ts.size, chunk):
        sv = s[lo:lo + chunk, None]
        head = np.sum((n[None, :] + alpha) ** (-sv), axis=1)
        sv = s[lo:lo + chunk]
        val = head + na ** (1 - sv) / (sv - 1) + 0.5 * na ** (-sv)
        rising = sv.copy()
        for k in range(1, m + 1):
            val += _B2K_OVER_FACT[k - 1] * rising * na ** (-sv - 2 * k + 1)
            rising = rising * (sv + 2 * k - 1) * (sv + 2 * k)
        out[lo:lo + chunk] = val
    return out


# ---------------------------------------------------------------------------
# Lerch zeta
# ---------------------------------------------------------------------------

def _lerch_tail_plan(s: complex, beta: float, gap: float, tol: float):
    """Choose (N, K) for the oscillatory tail so truncation + roundoff close.

    Truncation after K difference orders with head cutoff N is bounded by
    |(s)_K| ((N)^(-sigma-K) + (N)^(-sigma-K+1)/(sigma+K-1)) / gap^K, and the
    finite differences lose roughly C(K, K/2) eps / gap^(K+1) in absolute
    terms, so small gaps |1 - e^(2 pi i alpha)| force small K and large N.
    """
    sigma = s.real
    smag = abs(s)
    for k_order in (16, 12, 8, 5, 3, 2):
        n_cutoff = 64
        while n_cutoff <= 2 ** 21:
            rising = 1.0
            for j in range(k_order):
                rising *= abs(s + j) if j else max(smag, 1e-300)
            nb = n_cutoff + beta
            trunc = (
                rising
                * (nb ** (-sigma - k_order) + nb ** (-sigma - k_order + 1) / (sigma + k_order - 1))
                / gap ** k_order
            )
            roundoff = (
                math.comb(k_order, k_order // 2)
                * 2.3e-16
                * nb ** (-sigma)
                / gap ** (k_order + 1)
            )
            if trunc + roundoff <= tol:
                return n_cutoff, k_order, trunc + roundoff
            if roundoff > tol:
                break  # more head terms cannot fix the difference roundoff
            n_cutoff *= 2
    raise PrecisionError(
        f"lerch_phi: cannot reach target error {tol:.2e} for gap {gap:.3e}"
    )


def lerch_phi(
    alpha: float,
    beta: float,
    s: complex,
    target_error: float = 1e-10,
) -> complex:
    """phi(alpha, beta; s) = sum_{n>=0} e^(2 pi i n alpha) (n+beta)^-s.

    Valid for 0 < alpha, beta <= 1 and Re(s) >= 1, excluding the pole at
    (alpha, s) = (1, 1).  For alpha = 1 the twist is trivial and the value
    is zeta(s, beta).  Otherwise the head is summed directly and the tail
    sum_{m} z^m g(m) is folded by iterated Abel summation,

        sum = sum_{k<K} z^k D^k g(0) / (1-z)^(k+1) + remainder,

    whose remainder carries the explicit bound from ``_lerch_tail_plan``.
    """
    s = complex(s)
    if not (0 < alpha <= 1 and 0 < beta <= 1):
        raise InvalidParameterError("lerch_phi needs 0 < alpha, beta <= 1")
    if s.real < 1:
        raise InvalidParameterError(f"lerch_phi implemented for Re(s) >= 1, got {s}")
    if alpha == 1:
        if s == 1:
            raise PoleError("phi(1, beta; s) has a pole at s = 1")
        return hurwitz_zeta(s, beta, target_error)

    z = cmath.exp(2j * math.pi * alpha)
    gap = abs(1 - z)
    n_cutoff, k_order, _ = _lerch_tail_plan(s, beta, gap, target_error)

    n = np.arange(n_cutoff)
    head = np.sum(np.exp(2j * math.pi * alpha * n) * (n + beta) ** (-s))
    g = (np.arange(k_order + 1) + n_cutoff + beta) ** (-s)
    tail = 0j
    diff = g.astype(complex)
    zp = 1.0 + 0j
    for k in range(k_order):
        tail += zp * diff[0] / (1 - z) ** (k + 1)
        zp *= z
        diff = diff[1:] - diff[:-1]
    return complex(head + z ** n_cutoff * tail)


# ---------------------------------------------------------------------------
# Named constants
# ---------------------------------------------------------------------------

class KappaConstants(NamedTuple):
    """Constants for the Poisson-weighted log bounds.

    ``kappa_half`` is the value used inside every bound computed by this
    package; ``kappa_printed`` reproduces the decimal 0.2735187155, which
    equals 2 * kappa_half (the half-free expression); ``kappa_alt`` is the
    half-free value of the alternative window split, 0.27918489270; and
    ``c0`` = kappa_half + log(1 + 3 pi) + log 2 = 3.174092008.  Only the
    half-kappa branch makes c0 come out at that decimal, which is why it is
    the operational choice.
    """

    kappa_half: float
    kappa_printed: float
    kappa_alt: float
    c0: float


def kappa_constants() -> KappaConstants:
    kappa_half = 0.5 * math.log(math.tanh(math.pi) + 1.0 / math.pi)
    kappa_printed = math.log(math.tanh(math.pi) + 1.0 / math.pi)
    kappa_alt = math.log(1.0 / math.tanh(math.pi) + 1.0 / math.pi)
    c0 = kappa_half + math.log(1.0 + 3.0 * math.pi) + math.log(2.0)
    return KappaConstants(kappa_half, kappa_printed, kappa_alt, c0)


#: Alternative window-split constant including the one-half factor.
KAPPA_ALT_HALF: float = 0.5 * math.log(1.0 / math.tanh(math.pi) + 1.0 / math.pi)

#: Euler-Mascheroni constant (used by the sharp short-interval asymptotic).
EULER_GAMMA: float = 0.5772156649015329
