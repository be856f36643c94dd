"""Degenerate gamma function Gamma(s|l) = int_0^inf (1+lt)^(-1/l) t^(s-1) dt.

The kernel (1+lt)^(-1/l) decays only like t^(-1/l), so the integral
converges exactly for 0 < s < 1/l (with l in (0,1)); as l -> 0 the kernel
tends to e^(-t) and Gamma(s|l) -> Gamma(s).  This module provides the
quadrature evaluator, the exact closed form at positive integers

    Gamma(n|l) = (n-1)! / ((1-l)(1-2l)...(1-nl)),       0 < l < 1/n,

residual checks for the functional equation

    Gamma(s+1|l) = s (1-l)^(-(s+1)) Gamma(s | l/(1-l))

and its n-fold chained version, and the residues of Gamma(s|l) at
non-positive integers (the Taylor coefficients of the kernel at t = 0).

Direct quadrature is the normative evaluator; the functional equation is
exposed only as a residual check because chaining it moves l and can leave
the (0,1) domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactcore import RationalLike, TruncatedSeries, as_rational, ffd, kernel_series
from .numerics import DomainError, QuadConfig, QuadResult, quad_semi_infinite

__all__ = [
    "DOMAIN_MARGIN",
    "gamma_deg",
    "gamma_deg_closed",
    "gamma_classical",
    "funceq_residual",
    "funceq_chain_residual",
    "gamma_deg_via_chain",
    "ResidueValue",
    "gamma_deg_residue",
    "residue_closed_form",
]

# Margin delta keeping s away from the divergence threshold s = 1/lambda.
DOMAIN_MARGIN = 1e-6


def deg_kernel(lam: float):
    """The map t -> (1+lam*t)^(-1/lam), computed as exp(-log1p(lam*t)/lam)."""
    inv = 1.0 / lam
    return lambda t: math.exp(-math.log1p(lam * t) * inv)


def _check_domain(s: float, lam: float) -> None:
    if not (0.0 < lam < 1.0):
        raise DomainError(f"lambda must be in (0,1), got {lam!r}")
    if not s > 0.0:
        raise DomainError(f"s must be > 0, got {s!r}")
    if not s < 1.0 / lam - DOMAIN_MARGIN:
        raise DomainError(
            f"s={s!r} too close to the divergence threshold 1/lambda={1.0 / lam!r}"
        )


def gamma_deg(s: float, lam: float, cfg: QuadConfig | None = None) -> QuadResult:
    """Gamma(s|lam) by adaptive quadrature.

    Requires 0 < s < 1/lam - delta and lam in (0,1); outside that the
    integral diverges (or is about to) and a DomainError is raised rather
    than returning a huge number.
    """
    _check_domain(s, lam)
    kern = deg_kernel(lam)
    sm1 = s - 1.0
    return quad_semi_infinite(lambda t: kern(t) * t**sm1, cfg)


def gamma_deg_closed(n: int, lam: RationalLike) -> Fraction:
    """Exact Gamma(n|lam) = (n-1)! / prod_{j=1..n} (1-j*lam) for integer n >= 1.

    Valid on lam in (0, 1/n), matching the convergence domain of the
    integral; enforced strictly.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    lamf = as_rational(lam)
    if not (0 < lamf < Fraction(1, n)):
        raise DomainError(f"lambda must lie in (0, 1/{n}), got {lamf}")
    den = Fraction(1)
    for j in range(1, n + 1):
        den *= 1 - j * lamf
    return Fraction(math.factorial(n - 1)) / den


@lru_cache(maxsize=None)
def _gamma_classical_cached(s: float, cfg: QuadConfig) -> float:
    q = quad_semi_infinite(lambda t: math.exp(-t) * t ** (s - 1.0), cfg)
    return q.value


def gamma_classical(s: float, cfg: QuadConfig | None = None) -> float:
    """Classical Gamma(s) for s > 0: factorial at integers, quadrature otherwise.

    Deliberately self-contained (no special-function dependency) so the
    limit checks against Gamma(s|lam) stay within this library's own
    machinery.
    """
    if not s > 0:
        raise DomainError("classical gamma evaluated only for s > 0 here")
    if float(s).is_integer():
        return float(math.factorial(int(s) - 1))
    return _gamma_classical_cached(float(s), cfg or QuadConfig())


def funceq_residual(s: float, lam: float, cfg: QuadConfig | None = None) -> float:
    """Relative residual of Gamma(s+1|lam) = s (1-lam)^(-(s+1)) Gamma(s|lam/(1-lam)).

    Both sides are evaluated by independent quadratures.  Preconditions
    keep both integrals inside their convergence domains:
    0 < s, s+1 < 1/lam - delta, and s < (1-lam)/lam - delta.
    """
    if not s > 0:
        raise DomainError("s must be > 0")
    _check_domain(s + 1.0, lam)
    lam2 = lam / (1.0 - lam)
    _check_domain(s, lam2)
    lhs = gamma_deg(s + 1.0, lam, cfg).value
    rhs = s * (1.0 - lam) ** (-(s + 1.0)) * gamma_deg(s, lam2, cfg).value
    return abs(lhs - rhs) / abs(lhs)


def funceq_chain_residual(s: float, lam: float, n: int,
                          cfg: QuadConfig | None = None) -> float:
    """Relative residual of the n-fold chained functional equation.

    Checks
        Gamma(s+1|lam) / Gamma(s-(n+1) | lam/(1-(n+2)lam))
          = [s(s-1)...(s-(n+1))] / [(1-lam)...(1-(n+1)lam)]
            * (1-(n+2)lam)^(-(s-n))
    with both gammas from quadrature and the right side in closed form.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    if not s - (n + 1) > 0:
        raise DomainError("need s - (n+1) > 0")
    scale = 1.0 - (n + 2) * lam
    if not scale > 0:
        raise DomainError("need lambda < 1/(n+2)")
    lam2 = lam / scale
    _check_domain(s + 1.0, lam)
    _check_domain(s - (n + 1), lam2)
    lhs = gamma_deg(s + 1.0, lam, cfg).value / gamma_deg(s - (n + 1), lam2, cfg).value
    num = 1.0
    for j in range(n + 2):
        num *= s - j
    den = 1.0
    for j in range(1, n + 2):
        den *= 1.0 - j * lam
    rhs = num / den * scale ** (-(s - n))
    return abs(lhs - rhs) / abs(rhs)


def gamma_deg_via_chain(n: int, lam: float, cfg: QuadConfig | None = None) -> float:
    """Gamma(n+3|lam) reconstructed through the chained functional equation.

    Steps the argument down to 1 and evaluates only the remaining
    Gamma(1 | lam/(1-(n+2)lam)) by quadrature:

        Gamma(n+3|lam) = (n+2)! / [(1-lam)...(1-(n+1)lam)]
                         * (1-(n+2)lam)^(-2) * Gamma(1 | lam/(1-(n+2)lam)).

    Consistency path for `gamma_deg_closed(n+3, lam)`.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    scale = 1.0 - (n + 2) * lam
    if not (scale > 0 and lam < 1.0 / (n + 3)):
        raise DomainError("need lambda in (0, 1/(n+3))")
    den = 1.0
    for j in range(1, n + 2):
        den *= 1.0 - j * lam
    g1 = gamma_deg(1.0, lam / scale, cfg).value
    return math.factorial(n + 2) / den * scale**-2.0 * g1


@dataclass(frozen=True)
class ResidueValue:
    """Residue of Gamma(s|lam) at s = -n (exact rational)."""

    n: int
    lam: Fraction
    value: Fraction


def gamma_deg_residue(n: int, lam: RationalLike) -> ResidueValue:
    """Residue of Gamma(s|lam) at s = -n.

    Splitting the integral at t = 1 exposes simple poles at the
    non-positive integers with residues equal to the Taylor coefficients
    c_n(lam) of the kernel (1+lam*t)^(-1/lam) at t = 0.  The coefficient
    is extracted by exact series division, 1 / (1+lam*t)^(1/lam), which is
    an independent route from the closed product form
    (`residue_closed_form`); the two are compared in the test suite.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    lamf = as_rational(lam)
    one = TruncatedSeries([Fraction(1)], order=n)
    recip = one / kernel_series(1, lamf, n)
    return ResidueValue(n=n, lam=lamf, value=recip.coeff(n))


def residue_closed_form(n: int, lam: RationalLike) -> Fraction:
    """Closed form of the residue: (-1)^n (1+lam)(1+2lam)...(1+(n-1)lam) / n!.

    The product is empty for n <= 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    lamf = as_rational(lam)
    prod = Fraction(1)
    for j in range(1, n):
        prod *= 1 + j * lamf
    return Fraction((-1) ** n) * prod / math.factorial(n)
