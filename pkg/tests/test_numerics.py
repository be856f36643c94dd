import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degzeta.numerics import (
    AccelResult,
    DomainError,
    NonConvergentError,
    QuadConfig,
    euler_transform_sum,
    quad_finite,
    quad_semi_infinite,
    quad_tail,
    richardson_limit,
)


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

def test_quad_exponential_is_one():
    q = quad_semi_infinite(lambda t: math.exp(-t))
    assert abs(q.value - 1.0) <= q.abs_error_estimate + 1e-12
    assert q.abs_error_estimate >= 0


def test_quad_polynomial_decay_closed_form():
    # int_0^inf (1+0.2 t)^-5 dt = 1/(0.2*4) = 1.25
    q = quad_semi_infinite(lambda t: (1.0 + 0.2 * t) ** -5)
    assert abs(q.value - 1.25) < 1e-10


def test_quad_sqrt_pi_with_endpoint_singularity():
    q = quad_semi_infinite(lambda t: math.exp(-t) * t ** (0.5 - 1.0))
    assert abs(q.value - math.sqrt(math.pi)) < 1e-9
    assert abs(q.value - math.sqrt(math.pi)) <= 2 * q.abs_error_estimate


def test_quad_split_point_invariance():
    # the two split choices must agree within their combined estimates
    def integrand(t):
        return math.exp(-math.log1p(0.1 * t) / 0.1) * t**3  # Gamma(4|0.1) shape

    a = quad_semi_infinite(integrand, QuadConfig(split_point=0.5))
    b = quad_semi_infinite(integrand, QuadConfig(split_point=2.0))
    assert abs(a.value - b.value) <= 10 * (a.abs_error_estimate + b.abs_error_estimate)


def test_quad_domain_error_on_nan():
    with pytest.raises(DomainError):
        quad_finite(lambda t: float("nan"), 0.0, 1.0)


def test_quad_nonconvergent_budget():
    cfg = QuadConfig(rel_tol=1e-14, abs_tol=1e-300, max_subdivisions=3)
    with pytest.raises(NonConvergentError):
        quad_finite(lambda t: t ** (-0.9), 0.0, 1.0, cfg)


def test_quad_tail_matches_closed_form():
    # int_1^inf t^-3 dt = 1/2
    q = quad_tail(lambda t: t**-3.0, 1.0)
    assert abs(q.value - 0.5) < 1e-11


def test_quad_config_validation():
    with pytest.raises(ValueError):
        QuadConfig(rel_tol=-1.0)
    with pytest.raises(ValueError):
        QuadConfig(max_subdivisions=0)


# ---------------------------------------------------------------------------
# Euler transformation
# ---------------------------------------------------------------------------

def test_all_ones_gives_half_exactly():
    r = euler_transform_sum(lambda m: F(1), exact=True)
    assert r.value == F(1, 2)
    assert r.terminated_exactly


def test_alternating_harmonic_ln2():
    r = euler_transform_sum(lambda m: 1.0 / (m + 1))
    assert abs(r.value - math.log(2.0)) < 1e-12
    assert r.terms_used <= 50
    assert not r.terminated_exactly


def test_linear_terms_abel_sum():
    # 2 * sum (-1)^m (m + 1/2) = E_1(1/2) = 0
    r = euler_transform_sum(lambda m: F(m) + F(1, 2), exact=True)
    assert r.terminated_exactly
    assert 2 * r.value == 0


def test_polynomial_termination_independent_of_max_terms():
    values = set()
    for max_terms in (6, 40, 400):
        r = euler_transform_sum(lambda m: (F(m) + F(1, 3)) ** 2, exact=True,
                                max_terms=max_terms)
        assert r.terminated_exactly
        values.add(r.value)
    assert len(values) == 1


@settings(max_examples=30, deadline=None)
@given(
    st.integers(min_value=0, max_value=4),
    st.fractions(min_value=F(1, 8), max_value=3, max_denominator=8),
)
def test_polynomial_abel_sum_matches_euler_polynomial(n, x):
    from degzeta.exactcore import euler_poly_classic

    r = euler_transform_sum(lambda m: (F(m) + x) ** n, exact=True)
    assert r.terminated_exactly
    assert 2 * r.value == euler_poly_classic(n)(x)


def test_exact_path_rejects_floats():
    with pytest.raises(TypeError):
        euler_transform_sum(lambda m: 1.0, exact=True)


def test_sequence_input_and_nonconvergence():
    with pytest.raises(NonConvergentError):
        euler_transform_sum([1.0, 0.5, 2.0], tol=1e-15)


def test_result_type():
    r = euler_transform_sum(lambda m: 1.0 / (m + 1) ** 2)
    assert isinstance(r, AccelResult)
    assert abs(r.value - math.pi**2 / 12.0) < 1e-12


# ---------------------------------------------------------------------------
# Richardson extrapolation
# ---------------------------------------------------------------------------

def test_richardson_linear_model_one_level():
    assert richardson_limit(lambda e: 3.0 + e, 0.1, 2.0, 1) == pytest.approx(3.0, abs=1e-14)


def test_richardson_quadratic_model():
    v = richardson_limit(lambda e: 1.0 + 2.0 * e + 5.0 * e * e, 0.1, 2.0, 3)
    assert abs(v - 1.0) < 1e-10


def test_richardson_sinc_limit():
    v = richardson_limit(lambda e: math.sin(e) / e, 0.1, 2.0, 5)
    assert abs(v - 1.0) < 1e-10


@settings(max_examples=30, deadline=None)
@given(st.lists(st.floats(min_value=-3, max_value=3), min_size=1, max_size=4))
def test_richardson_annihilates_polynomials(coeffs):
    levels = len(coeffs)

    def f(e):
        return 7.0 + sum(c * e ** (k + 1) for k, c in enumerate(coeffs))

    v = richardson_limit(f, 0.25, 2.0, levels)
    assert abs(v - 7.0) < 1e-9


def test_richardson_validation_and_domain():
    with pytest.raises(ValueError):
        richardson_limit(lambda e: e, -1.0, 2.0, 2)
    with pytest.raises(ValueError):
        richardson_limit(lambda e: e, 0.1, 1.0, 2)
    with pytest.raises(DomainError):
        richardson_limit(lambda e: float("inf"), 0.1, 2.0, 2)
