"""Classical and degenerate Euler zeta functions.

The classical alternating Hurwitz-type series

    zeta_E(s,x) = 2 sum_{m>=0} (-1)^m / (m+x)^s,        x > 0,

interpolates the Euler polynomials at negative integers,
zeta_E(-n,x) = E_n(x), which this module realizes constructively: the
exact Euler transformation of the divergent series terminates and yields
E_n(x) as its Abel sum.

The degenerate variant replaces e^(-t) weights by (1+lt)^(-...) kernels:

    zeta_E(s,x|l) = [ int_0^inf F(-t,x|-l) t^(s-1) dt ] / Gamma(s|l),
    F(-t,x|-l)    = 2 (1+lt)^(-x/l) / ((1+lt)^(-1/l) + 1),

with the equivalent series form 2 sum (-1)^m (m+x)^(-s)
Gamma(s|l/(m+x)) / Gamma(s|l).  Several independent evaluation routes are
provided (series, Mellin quadrature, integer closed form, split-integral
analytic continuation), and the suite checks them against each other.

At negative integers two closed-form candidates circulate:

    plain:   zeta_E(-n,x|l) = E_n(x|-l)
    scaled:  zeta_E(-n,x|l) = E_n(x|-l) / ((1+l)(1+2l)...(1+(n-1)l))

They coincide for n <= 1 and differ from n = 2 on.  The split-integral
representation makes the numerator's residue at s = -n equal to
(-1)^n E_n(x|-l)/n! and the denominator's equal to
(-1)^n (1+l)...(1+(n-1)l)/n!, so the limit of the ratio is the scaled
value; `discrepancy_experiment` confirms this numerically by Richardson
extrapolation toward the pole and reports which candidate matches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .exactcore import (
    RationalLike,
    as_rational,
    euler_poly_deg,
    euler_poly_deg_values,
    ffd,
)
from .gammadeg import (
    DOMAIN_MARGIN,
    deg_kernel,
    gamma_classical,
    gamma_deg,
)
from .numerics import (
    DomainError,
    QuadConfig,
    QuadResult,
    euler_transform_sum,
    quad_semi_infinite,
    quad_tail,
    richardson_limit,
)

__all__ = [
    "POLE_GUARD",
    "euler_zeta",
    "euler_zeta_mellin",
    "zeta_deg_int",
    "zeta_deg",
    "zeta_deg_mellin",
    "zeta_deg_neg",
    "zeta_deg_neg_plain",
    "gamma_deg_continued",
    "zeta_deg_continued",
    "DiscrepancyReport",
    "discrepancy_experiment",
]

# Continued evaluations refuse to come closer to a pole than this; values
# at the poles themselves are reached through richardson_limit only.
POLE_GUARD = 1e-3


def _require_positive_x(x: float) -> None:
    if not x > 0:
        raise DomainError(f"x must be > 0, got {x!r}")


def euler_zeta(s: Union[int, float], x, *, tol: float = 1e-12,
               max_terms: int = 500) -> Union[float, Fraction]:
    """Classical Euler zeta 2 sum (-1)^m (m+x)^(-s).

    For s = -n (integer n >= 0) the value is taken exactly: E_n(x) from
    the polynomial recurrence, cross-checked against the exact Euler
    transformation of the divergent series 2 sum (-1)^m (m+x)^n, which
    must terminate at the same rational number.  Returns a Fraction on
    this path.

    For other s the alternating series is summed with acceleration and a
    float comes back.
    """
    _require_positive_x(float(x))
    if float(s).is_integer() and s <= 0:
        n = int(round(-float(s)))
        xf = x if isinstance(x, Fraction) else Fraction(x)
        value = euler_poly_deg(n, 0)(xf)
        acc = euler_transform_sum(lambda m: (xf + m) ** n, exact=True,
                                  max_terms=n + 8)
        abel = 2 * acc.value
        if not acc.terminated_exactly or abel != value:
            raise ArithmeticError(
                f"Abel sum {abel} disagrees with E_{n}({xf}) = {value}"
            )
        return value
    xr = float(x)
    acc = euler_transform_sum(lambda m: (m + xr) ** (-s), tol=tol,
                              max_terms=max_terms)
    return 2.0 * acc.value


def euler_zeta_mellin(s: float, x: float, cfg: QuadConfig | None = None) -> QuadResult:
    """Classical Euler zeta via its Mellin-type integral representation.

    zeta_E(s,x) = (1/Gamma(s)) int_0^inf [2/(1+e^(-t))] e^(-xt) t^(s-1) dt
    for s > 0.  Cross-check path for `euler_zeta` at positive s.
    """
    if not s > 0:
        raise DomainError("Mellin path needs s > 0")
    _require_positive_x(x)
    cfg = cfg or QuadConfig()
    g = gamma_classical(s, cfg)

    def integrand(t: float) -> float:
        return 2.0 / (1.0 + math.exp(-t)) * math.exp(-x * t) * t ** (s - 1.0)

    q = quad_semi_infinite(integrand, cfg)
    return QuadResult(q.value / g, q.abs_error_estimate / g, q.subdivisions)


def zeta_deg_int(n: int, x: float, lam: float, *, tol: float = 1e-11,
                 max_terms: int = 400) -> float:
    """Degenerate Euler zeta at a positive integer s = n, closed-form terms.

    For lam in (0, 1/n) the gamma ratio in every series term collapses to
    a finite product, leaving

        2 sum_m (-1)^m (m+x)^(-n) prod_{j=1..n} (1-j*lam)/(1-j*lam/(m+x)),

    summed here with Euler acceleration; no quadrature is involved.
    """
    if not (isinstance(n, int) and n >= 1):
        raise DomainError("n must be a positive integer")
    _require_positive_x(x)
    if not 0.0 < lam < 1.0 / n:
        raise DomainError(f"lambda must lie in (0, 1/{n})")
    pnum = 1.0
    for j in range(1, n + 1):
        pnum *= 1.0 - j * lam

    def term(m: int) -> float:
        mpx = m + x
        den = 1.0
        for j in range(1, n + 1):
            den *= 1.0 - j * lam / mpx
        if den == 0.0:
            raise DomainError(f"term denominator vanishes at m={m}")
        return mpx**-n * pnum / den

    acc = euler_transform_sum(term, tol=tol, max_terms=max_terms)
    return 2.0 * acc.value


def zeta_deg(s: float, x: float, lam: float, cfg: QuadConfig | None = None, *,
             switchover: int = 32, tol: float = 1e-11,
             max_terms: int = 400) -> float:
    """Degenerate Euler zeta by its gamma-ratio series.

    Sums 2 sum (-1)^m (m+x)^(-s) Gamma(s|l/(m+x)) / Gamma(s|l).  The
    denominator gamma is integrated once.  Numerator gammas are integrated
    for m below the switchover index and replaced beyond it by the small-
    parameter expansion (mu = l/(m+x) -> 0)

        Gamma(s|mu) = Gamma(s) + mu/2 Gamma(s+2)
                      + mu^2 (Gamma(s+4)/8 - Gamma(s+3)/3)
                      + mu^3 (Gamma(s+4)/4 - Gamma(s+5)/6 + Gamma(s+6)/48)
                      + O(mu^4),

    from (1+mu t)^(-1/mu) = e^(-t) exp(mu t^2/2 - mu^2 t^3/3 + ...).  The
    expansion is only trusted after a mandatory agreement check against
    quadrature at the switchover index; on failure the switchover doubles
    and quadrature continues.
    """
    cfg = cfg or QuadConfig()
    _require_positive_x(x)
    if not (0.0 < lam < 1.0):
        raise DomainError("lambda must be in (0,1)")
    if not 0.0 < s < 1.0 / lam - DOMAIN_MARGIN:
        raise DomainError("need 0 < s < 1/lambda")
    if not lam < x:
        raise DomainError("need lambda < x so every term's gamma parameter is in (0,1)")
    denom = gamma_deg(s, lam, cfg).value
    g0 = gamma_classical(s, cfg)
    g2, g3, g4, g5, g6 = (gamma_classical(s + k, cfg) for k in (2, 3, 4, 5, 6))
    e1 = g2 / 2.0
    e2 = g4 / 8.0 - g3 / 3.0
    e3 = g4 / 4.0 - g5 / 6.0 + g6 / 48.0

    def expansion(mu: float) -> float:
        return g0 + mu * (e1 + mu * (e2 + mu * e3))

    state = {"cut": switchover, "validated": False}

    def gamma_num(m: int) -> float:
        mu = lam / (m + x)
        if state["validated"]:
            return expansion(mu)
        quad = gamma_deg(s, mu, cfg).value
        if m + 1 >= state["cut"]:
            if abs(quad - expansion(mu)) <= 1e-8 * max(1.0, abs(quad)):
                state["validated"] = True
            else:
                state["cut"] *= 2
        return quad

    def term(m: int) -> float:
        return (m + x) ** (-s) * gamma_num(m) / denom

    acc = euler_transform_sum(term, tol=tol, max_terms=max_terms)
    return 2.0 * acc.value


def deg_euler_zeta_kernel(x: float, lam: float):
    """The map t -> 2 (1+lt)^(-x/l) / ((1+lt)^(-1/l) + 1), decaying like t^(-x/l)."""
    inv = 1.0 / lam

    def kern(t: float) -> float:
        ell = math.log1p(lam * t) * inv
        return 2.0 * math.exp(-x * ell) / (math.exp(-ell) + 1.0)

    return kern


def zeta_deg_mellin(s: float, x: float, lam: float,
                    cfg: QuadConfig | None = None) -> QuadResult:
    """Degenerate Euler zeta by direct quadrature of its defining integral.

    Evaluates [int_0^inf F(-t,x|-l) t^(s-1) dt] / Gamma(s|l).  The kernel
    decays like t^(-x/l), so s < x/l - delta is enforced on top of the
    gamma domain.
    """
    cfg = cfg or QuadConfig()
    _require_positive_x(x)
    if not (0.0 < lam < 1.0):
        raise DomainError("lambda must be in (0,1)")
    if not 0.0 < s < min(1.0, x) / lam - DOMAIN_MARGIN:
        raise DomainError(
            f"need 0 < s < min(1/lambda, x/lambda) - delta, got s={s!r}"
        )
    kern = deg_euler_zeta_kernel(x, lam)
    num = quad_semi_infinite(lambda t: kern(t) * t ** (s - 1.0), cfg)
    den = gamma_deg(s, lam, cfg)
    value = num.value / den.value
    err = (num.abs_error_estimate + abs(value) * den.abs_error_estimate) / abs(den.value)
    return QuadResult(value, err, num.subdivisions + den.subdivisions)


def _neg_guards(n: int, lam: Fraction) -> None:
    if n < 0:
        raise DomainError("n must be >= 0")
    if not (0 < lam < 1):
        raise DomainError("lambda must be in (0,1)")


def zeta_deg_neg(n: int, x: RationalLike, lam: RationalLike) -> Fraction:
    """Exact value of the degenerate Euler zeta at s = -n (scaled candidate).

    E_n(x|-l) divided by (1+l)(1+2l)...(1+(n-1)l); the product is empty
    for n <= 1.  This is the candidate consistent with the analytic
    continuation (residue ratio of the split integrals).
    """
    lamf = as_rational(lam)
    xf = as_rational(x)
    _neg_guards(n, lamf)
    if not xf > 0:
        raise DomainError("x must be > 0")
    value = euler_poly_deg(n, -lamf)(xf)
    for j in range(1, n):
        value /= 1 + j * lamf
    return value


def zeta_deg_neg_plain(n: int, x: RationalLike, lam: RationalLike) -> Fraction:
    """The unscaled candidate at s = -n: E_n(x|-l) itself.

    Coincides with `zeta_deg_neg` for n <= 1 and differs beyond; see
    `discrepancy_experiment` for the numerical adjudication.
    """
    lamf = as_rational(lam)
    xf = as_rational(x)
    _neg_guards(n, lamf)
    if not xf > 0:
        raise DomainError("x must be > 0")
    return euler_poly_deg(n, -lamf)(xf)


# ---------------------------------------------------------------------------
# split-integral analytic continuation
#
# int_0^inf k(t) t^(s-1) dt = sum_m a_m/(s+m) + int_1^inf k(t) t^(s-1) dt
# where a_m are the Taylor coefficients of the kernel k at t = 0: the
# [0,1] piece is integrated termwise (the coefficient series converges
# geometrically well past t = 1), exposing the poles explicitly.
# ---------------------------------------------------------------------------

_COEFF_NEGLIGIBLE = 1e-24
_COEFF_DEPTH_STEP = 40
_COEFF_DEPTH_MAX = 600


@lru_cache(maxsize=None)
def _zeta_kernel_coeffs(x: Fraction, lam: Fraction) -> tuple[float, ...]:
    """Float Taylor coefficients (-1)^m E_m(x|-lam)/m! of F(-t,x|-lam)."""
    depth = 80
    while True:
        values = euler_poly_deg_values(depth, x, -lam)
        coeffs = []
        fact = 1
        for m, e in enumerate(values):
            if m > 0:
                fact *= m
            coeffs.append(float(Fraction((-1) ** m) * e / fact))
        if max(abs(c) for c in coeffs[-6:]) < _COEFF_NEGLIGIBLE or depth >= _COEFF_DEPTH_MAX:
            return tuple(coeffs)
        depth += _COEFF_DEPTH_STEP


@lru_cache(maxsize=None)
def _gamma_kernel_coeffs(lam: Fraction) -> tuple[float, ...]:
    """Float Taylor coefficients (-1|lam)_k / k! of (1+lam*t)^(-1/lam)."""
    depth = 80
    while True:
        coeffs = []
        num = Fraction(1)
        fact = 1
        for k in range(depth + 1):
            if k > 0:
                num *= Fraction(-1) - (k - 1) * lam
                fact *= k
            coeffs.append(float(num / fact))
        if max(abs(c) for c in coeffs[-6:]) < _COEFF_NEGLIGIBLE or depth >= _COEFF_DEPTH_MAX:
            return tuple(coeffs)
        depth += _COEFF_DEPTH_STEP


def _pole_distance_ok(s: float) -> None:
    nearest = round(s)
    if nearest <= 0 and abs(s - nearest) < POLE_GUARD:
        raise DomainError(
            f"s={s!r} is within {POLE_GUARD} of a pole; use richardson_limit"
        )


def _split_mellin(s: float, coeffs: tuple[float, ...], kern,
                  cfg: QuadConfig) -> tuple[float, float]:
    if s <= -(len(coeffs) - 5):
        raise DomainError(f"s={s!r} below the continued strip")
    pole_part = 0.0
    for m, a in enumerate(coeffs):
        pole_part += a / (s + m)
    tail = quad_tail(lambda t: kern(t) * t ** (s - 1.0), 1.0, cfg)
    return pole_part + tail.value, tail.abs_error_estimate


def gamma_deg_continued(s: float, lam: float,
                        cfg: QuadConfig | None = None) -> float:
    """Gamma(s|lam) continued left of 0 by the split-integral representation.

    Agrees with `gamma_deg` on 0 < s < 1/lam and is finite elsewhere away
    from the simple poles at non-positive integers (residues:
    `gamma_deg_residue`).
    """
    cfg = cfg or QuadConfig()
    if not (0.0 < lam < 1.0):
        raise DomainError("lambda must be in (0,1)")
    if not s < 1.0 / lam - DOMAIN_MARGIN:
        raise DomainError("s too close to the divergence threshold 1/lambda")
    _pole_distance_ok(s)
    lamf = Fraction(lam)
    value, _ = _split_mellin(s, _gamma_kernel_coeffs(lamf), deg_kernel(lam), cfg)
    return value


def zeta_deg_continued(s: float, x: float, lam: float,
                       cfg: QuadConfig | None = None) -> float:
    """Degenerate Euler zeta continued to negative s (away from poles).

    Both the numerator integral and Gamma(s|lam) are continued by the
    split-integral representation and divided; on the overlap s > 0 this
    reproduces `zeta_deg`.  The strip is -depth < s < x/lam - delta with
    the Taylor depth chosen automatically (the value is depth-independent
    because the [0,1] piece is integrated termwise to negligible
    truncation).
    """
    cfg = cfg or QuadConfig()
    _require_positive_x(x)
    if not (0.0 < lam < 1.0):
        raise DomainError("lambda must be in (0,1)")
    if not s < min(1.0, x) / lam - DOMAIN_MARGIN:
        raise DomainError("s too close to the tail-divergence threshold")
    _pole_distance_ok(s)
    xf = Fraction(x)
    lamf = Fraction(lam)
    num, _ = _split_mellin(s, _zeta_kernel_coeffs(xf, lamf),
                           deg_euler_zeta_kernel(x, lam), cfg)
    den, _ = _split_mellin(s, _gamma_kernel_coeffs(lamf), deg_kernel(lam), cfg)
    return num / den


@dataclass(frozen=True)
class DiscrepancyReport:
    """Outcome of adjudicating the two closed-form candidates at s = -n.

    winner is "scaled", "plain", or "inconclusive"; the gap is the margin
    between the two candidates' distances to the continued value, and the
    winner is only declared when it exceeds 3x the continuation error
    estimate.
    """

    n: int
    x: Fraction
    lam: Fraction
    value_scaled: Fraction
    value_plain: Fraction
    value_continued: float
    winner: str
    gap: float
    error_estimate: float


def discrepancy_experiment(n: int, x: RationalLike, lam: RationalLike,
                           cfg: QuadConfig | None = None) -> DiscrepancyReport:
    """Decide numerically which negative-integer closed form continues the zeta.

    Extrapolates zeta_deg_continued(-n+eps, x, lam) to eps -> 0 by
    Richardson (eps0 = 1e-2, ratio 2, 3 levels; all samples stay outside
    the pole guard) and compares the limit against the scaled and plain
    candidates.  Requires n >= 2 (the candidates coincide below) and
    x >= 1 (keeps the continuation strip comfortably wide).
    """
    if n < 2:
        raise DomainError("candidates coincide for n <= 1; nothing to decide")
    xf = as_rational(x)
    lamf = as_rational(lam)
    if not xf >= 1:
        raise DomainError("x must be >= 1")
    if not (0 < lamf < 1):
        raise DomainError("lambda must be in (0,1)")
    scaled = zeta_deg_neg(n, xf, lamf)
    plain = zeta_deg_neg_plain(n, xf, lamf)
    xr = float(xf)
    lr = float(lamf)

    def sample(eps: float) -> float:
        return zeta_deg_continued(-float(n) + eps, xr, lr, cfg)

    value = richardson_limit(sample, 1e-2, 2.0, 3)
    coarse = richardson_limit(sample, 1e-2, 2.0, 2)
    err_est = abs(value - coarse) + 1e-12
    d_scaled = abs(value - float(scaled))
    d_plain = abs(value - float(plain))
    gap = abs(d_plain - d_scaled)
    if gap <= 3.0 * err_est:
        winner = "inconclusive"
    elif d_scaled < d_plain:
        winner = "scaled"
    else:
        winner = "plain"
    return DiscrepancyReport(
        n=n,
        x=xf,
        lam=lamf,
        value_scaled=scaled,
        value_plain=plain,
        value_continued=value,
        winner=winner,
        gap=gap,
        error_estimate=err_est,
    )
