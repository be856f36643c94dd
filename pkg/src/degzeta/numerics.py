"""Floating-point engines: adaptive quadrature, alternating-series
summation by the Euler transformation, and Richardson extrapolation.

The quadrature engine integrates over [0, inf) by splitting at a finite
point and compactifying the tail with u = 1/(1+t); both pieces are handled
by adaptive bisection with a nested Gauss-Kronrod 7-15 rule.  Truncating
the tail instead would be fragile here because the integrands of interest
decay only polynomially.

The Euler transformation rewrites sum_m (-1)^m a_m as

    sum_k (-1)^k (D^k a)_0 / 2^(k+1),      D = forward difference,

which accelerates convergent alternating series and, crucially, terminates
after finitely many terms when a_m is a polynomial in m, yielding the Abel
sum of the (divergent) series exactly.  Differences are taken in exact
rational arithmetic whenever the terms are Fractions.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

__all__ = [
    "DomainError",
    "NonConvergentError",
    "QuadConfig",
    "QuadResult",
    "AccelResult",
    "quad_finite",
    "quad_tail",
    "quad_semi_infinite",
    "euler_transform_sum",
    "richardson_limit",
]


class DomainError(ValueError):
    """A parameter or sample point lies outside the function's domain."""


class NonConvergentError(ArithmeticError):
    """The iteration budget was exhausted before the tolerance was met."""


@dataclass(frozen=True)
class QuadConfig:
    """Tolerances and budget for the adaptive quadrature engine.

    Defaults leave two orders of headroom over the 1e-8 checks the
    verification suite runs at.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000
    split_point: float = 1.0

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")
        if not self.split_point > 0:
            raise ValueError("split_point must be > 0")


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_error_estimate: float
    subdivisions: int


@dataclass(frozen=True)
class AccelResult:
    value: Union[float, Fraction]
    terms_used: int
    terminated_exactly: bool


# Gauss-Kronrod 7-15 pairs: (node, Gauss weight, Kronrod weight).
# Gauss weights are zero on the Kronrod-only nodes.
_GK15 = (
    (+0.949107912342759, 0.129484966168870, 0.063092092629979),
    (-0.949107912342759, 0.129484966168870, 0.063092092629979),
    (+0.741531185599394, 0.279705391489277, 0.140653259715525),
    (-0.741531185599394, 0.279705391489277, 0.140653259715525),
    (+0.405845151377397, 0.381830050505119, 0.190350578064785),
    (-0.405845151377397, 0.381830050505119, 0.190350578064785),
    (0.000000000000000, 0.417959183673469, 0.209482141084728),
    (+0.991455371120813, 0.000000000000000, 0.022935322010529),
    (-0.991455371120813, 0.000000000000000, 0.022935322010529),
    (+0.864864423359769, 0.000000000000000, 0.104790010322250),
    (-0.864864423359769, 0.000000000000000, 0.104790010322250),
    (+0.586087235467691, 0.000000000000000, 0.169004726639267),
    (-0.586087235467691, 0.000000000000000, 0.169004726639267),
    (+0.207784955007898, 0.000000000000000, 0.204432940075298),
    (-0.207784955007898, 0.000000000000000, 0.204432940075298),
)


def _gk_panel(f: Callable[[float], float], a: float, b: float) -> tuple[float, float]:
    """One Gauss-Kronrod panel on [a, b]: (K15 value, error estimate).

    The estimate follows the usual nested-rule heuristic: |K15 - G7|
    damped by the integral of |f - mean| so that nearly-singular panels
    are not reported as more accurate than they are.
    """
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    gauss = 0.0
    kronrod = 0.0
    samples = []
    for x, wg, wk in _GK15:
        t = c + h * x
        y = f(t)
        if not math.isfinite(y):
            raise DomainError(f"integrand evaluated non-finite at t={t!r}")
        gauss += wg * y
        kronrod += wk * y
        samples.append((wk, y))
    value = kronrod * h
    mean = kronrod / 2.0
    resabs = sum(wk * abs(y) for wk, y in samples) * h
    resasc = sum(wk * abs(y - mean) for wk, y in samples) * h
    diff = abs(kronrod - gauss) * h
    err = diff
    if resasc != 0.0 and diff != 0.0:
        err = resasc * min(1.0, (200.0 * diff / resasc) ** 1.5)
    err = max(err, 50.0 * 2.220446049250313e-16 * resabs)
    return value, err


def quad_finite(f: Callable[[float], float], a: float, b: float,
                cfg: QuadConfig | None = None) -> QuadResult:
    """Adaptive Gauss-Kronrod integration of f on the finite interval [a, b].

    Bisects the interval with the largest error estimate until the summed
    estimate meets max(abs_tol, rel_tol * |integral|).

    Raises:
        NonConvergentError: budget exhausted with the error above tolerance.
        DomainError: a sample evaluated to NaN or infinity.
    """
    cfg = cfg or QuadConfig()
    if not (math.isfinite(a) and math.isfinite(b) and b > a):
        raise DomainError("need finite bounds with b > a")
    val, err = _gk_panel(f, a, b)
    total_val = val
    total_err = err
    counter = 0
    heap = [(-err, counter, a, b, val, err)]
    subdivisions = 0
    while total_err > max(cfg.abs_tol, cfg.rel_tol * abs(total_val)):
        if subdivisions >= cfg.max_subdivisions:
            raise NonConvergentError(
                f"quadrature error {total_err:.3e} above tolerance after "
                f"{subdivisions} subdivisions"
            )
        _, _, lo, hi, v, e = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            # interval is at machine resolution; nothing left to refine
            raise NonConvergentError("interval underflow before reaching tolerance")
        v1, e1 = _gk_panel(f, lo, mid)
        v2, e2 = _gk_panel(f, mid, hi)
        total_val += v1 + v2 - v
        total_err += e1 + e2 - e
        counter += 1
        heapq.heappush(heap, (-e1, counter, lo, mid, v1, e1))
        counter += 1
        heapq.heappush(heap, (-e2, counter, mid, hi, v2, e2))
        subdivisions += 1
    return QuadResult(total_val, total_err, subdivisions)


def quad_tail(f: Callable[[float], float], a: float,
              cfg: QuadConfig | None = None) -> QuadResult:
    """Integral of f over [a, inf), a >= 0, via the map u = 1/(1+t).

    The substitution sends [a, inf) to (0, 1/(1+a)] and the integral to
    int_0^(1/(1+a)) f((1-u)/u) / u^2 du; the endpoint u = 0 is never
    sampled since Kronrod nodes are interior.
    """
    cfg = cfg or QuadConfig()
    if a < 0:
        raise DomainError("lower bound must be >= 0")

    def mapped(u: float) -> float:
        t = (1.0 - u) / u
        return f(t) / (u * u)

    return quad_finite(mapped, 0.0, 1.0 / (1.0 + a), cfg)


def quad_semi_infinite(f: Callable[[float], float],
                       cfg: QuadConfig | None = None) -> QuadResult:
    """Integral of f over (0, inf), split at cfg.split_point.

    The head [0, split] is integrated directly (integrable endpoint
    singularities like t^(s-1), s > 0, are resolved by bisection); the
    tail is compactified by u = 1/(1+t).  Error estimates and subdivision
    counts of the two pieces are summed.
    """
    cfg = cfg or QuadConfig()
    head = quad_finite(f, 0.0, cfg.split_point, cfg)
    tail = quad_tail(f, cfg.split_point, cfg)
    return QuadResult(
        head.value + tail.value,
        head.abs_error_estimate + tail.abs_error_estimate,
        head.subdivisions + tail.subdivisions,
    )


TermSource = Union[Callable[[int], Union[float, Fraction]], Sequence]


def _term_getter(a: TermSource) -> tuple[Callable[[int], object], int]:
    if callable(a):
        return a, -1
    seq = a
    return (lambda m: seq[m]), len(seq)


def euler_transform_sum(a: TermSource, *, tol: float = 1e-12,
                        max_terms: int = 400,
                        exact: bool = False) -> AccelResult:
    """Sum the alternating series sum_{m>=0} (-1)^m a_m by Euler's transformation.

    `a` is a callable m -> a_m or a sequence.  The transform value is
    sum_k (-1)^k (D^k a)_0 / 2^(k+1) with D the forward difference.

    With exact=True all differences are taken in rational arithmetic and
    the result is a Fraction; when a whole difference row vanishes (as it
    must once the row order exceeds the degree of a polynomial a_m) the
    sum has terminated exactly and equals the Abel sum of the series.
    The float path uses compensated summation of the transform terms.

    Raises:
        NonConvergentError: max_terms reached without meeting tol and
            without exact termination.
    """
    term_at, limit = _term_getter(a)
    budget = max_terms if limit < 0 else min(max_terms, limit)
    if budget < 1:
        raise ValueError("need at least one term")

    if exact:
        return _euler_transform_exact(term_at, budget, tol)
    return _euler_transform_float(term_at, budget, tol)


def _euler_transform_exact(term_at, budget: int, tol: float) -> AccelResult:
    rows: list[list[Fraction]] = []
    value = Fraction(0)
    small_streak = 0
    for n in range(budget):
        t = term_at(n)
        if isinstance(t, float):
            raise TypeError("exact path requires Fraction/int terms")
        if not rows:
            rows.append([Fraction(t)])
        else:
            rows[0].append(Fraction(t))
            for k in range(1, n + 1):
                if k == len(rows):
                    rows.append([])
                rows[k].append(rows[k - 1][-1] - rows[k - 1][-2])
        increment = Fraction((-1) ** n) * rows[n][0] / Fraction(2 ** (n + 1))
        value += increment
        # exact termination: an all-zero difference row (>= 2 entries) forces
        # every deeper row to vanish as well
        for k in range(n + 1):
            row = rows[k]
            if len(row) >= 2 and all(v == 0 for v in row):
                head = sum(
                    (Fraction((-1) ** j) * rows[j][0] / Fraction(2 ** (j + 1))
                     for j in range(k)),
                    Fraction(0),
                )
                return AccelResult(head, n + 1, True)
        if abs(float(increment)) <= tol * max(abs(float(value)), 1.0):
            small_streak += 1
            if small_streak >= 2:
                return AccelResult(value, n + 1, False)
        else:
            small_streak = 0
    raise NonConvergentError(f"no convergence or exact termination in {budget} terms")


def _euler_transform_float(term_at, budget: int, tol: float) -> AccelResult:
    diag: list[float] = []  # diag[i] = (D^i a)_{n-i} for the current n
    total = 0.0
    carry = 0.0  # Kahan compensation
    small_streak = 0
    for n in range(budget):
        t = float(term_at(n))
        if not math.isfinite(t):
            raise DomainError(f"term {n} is not finite")
        new = [t]
        for i in range(1, n + 1):
            new.append(new[i - 1] - diag[i - 1])
        diag = new
        increment = ((-1.0) ** n) * diag[n] / 2.0 ** (n + 1)
        y = increment - carry
        s = total + y
        carry = (s - total) - y
        total = s
        if abs(increment) <= tol * max(abs(total), 1.0):
            small_streak += 1
            if small_streak >= 2:
                return AccelResult(total, n + 1, False)
        else:
            small_streak = 0
    raise NonConvergentError(f"no convergence in {budget} terms")


def richardson_limit(f: Callable[[float], float], eps0: float,
                     ratio: float, levels: int) -> float:
    """Extrapolate lim_{eps->0+} f(eps) assuming f(eps) = L + c1*eps + c2*eps^2 + ...

    Samples f at eps0/ratio^i, i = 0..levels, and eliminates the powers
    eps^1..eps^levels, so any polynomial model of degree <= levels is
    reproduced exactly up to rounding.

    Raises:
        DomainError: a sample is non-finite.
    """
    if eps0 <= 0:
        raise ValueError("eps0 must be > 0")
    if ratio <= 1:
        raise ValueError("ratio must be > 1")
    if levels < 1:
        raise ValueError("levels must be >= 1")
    vals = []
    for i in range(levels + 1):
        y = f(eps0 / ratio**i)
        if not math.isfinite(y):
            raise DomainError(f"sample at eps={eps0 / ratio**i!r} is not finite")
        vals.append(y)
    for j in range(1, levels + 1):
        factor = ratio**j
        for i in range(levels, j - 1, -1):
            vals[i] = (factor * vals[i] - vals[i - 1]) / (factor - 1.0)
    return vals[levels]
