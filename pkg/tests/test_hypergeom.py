import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sig6.errors import DomainError, InvalidParams, NonConvergence
from sig6.hypergeom import (
    CLASSICAL,
    SIG6_HALF,
    SIG6_ONE,
    HyperParams,
    NeumaierSum,
    SeriesSpec,
    agm,
    f12_12_one,
    f16_56_half,
    gauss_2f1_series,
    wallis_integral,
)

# Frozen from mpmath.hyp2f1 at 30 digits.
F1212_HALF = 1.18034059901609622604533794056
F1212_099 = 2.35271581677974260110389329448
F1656_HALF_03 = 1.10709455193243053847430619969


def test_series_at_zero_is_one():
    assert gauss_2f1_series(SIG6_HALF, 0.0) == 1.0


def test_series_matches_agm_at_half():
    series = gauss_2f1_series(CLASSICAL, 0.5)
    assert series == pytest.approx(1.0 / agm(1.0, math.sqrt(0.5)), rel=1e-12)
    assert series == pytest.approx(F1212_HALF, rel=1e-14)


def test_series_matches_closed_form_trig():
    z = math.sin(0.3) ** 2
    assert gauss_2f1_series(SIG6_HALF, z) == pytest.approx(math.cos(0.2) / math.cos(0.3), rel=1e-13)


def test_series_polynomial_case_terminates():
    # a = -2 makes the series a quadratic: 1 + (a b / c) z + (a(a+1) b(b+1) / (c(c+1) 2)) z^2
    z = 0.3
    expected = 1 - 2 * 1.5 / 2.5 * z + (-2 * -1) * (1.5 * 2.5) / (2.5 * 3.5 * 2) * z * z
    assert gauss_2f1_series(HyperParams(-2, 1.5, 2.5), z) == pytest.approx(expected, rel=1e-15)


def test_series_negative_argument():
    # F(1, 1; 2; -z) = log(1 + z) / z
    z = 0.5
    assert gauss_2f1_series(HyperParams(1, 1, 2), -z) == pytest.approx(math.log1p(z) / z, rel=1e-14)


@pytest.mark.parametrize("c", [0, -1, -7])
def test_nonpositive_integer_c_rejected(c):
    with pytest.raises(InvalidParams):
        HyperParams(0.5, 0.5, c)


def test_tuple_params_accepted():
    assert gauss_2f1_series((0.5, 0.5, 1.0), 0.5) == gauss_2f1_series(CLASSICAL, 0.5)


@pytest.mark.parametrize("z", [1.0, -1.0, 1.5])
def test_series_outside_disc(z):
    with pytest.raises(DomainError):
        gauss_2f1_series(SIG6_ONE, z)


def test_series_budget_exhausted():
    with pytest.raises(NonConvergence):
        gauss_2f1_series(SIG6_ONE, 0.999, SeriesSpec(max_terms=100))


def test_series_spec_validation():
    with pytest.raises(ValueError):
        SeriesSpec(relative_tolerance=0.0)
    with pytest.raises(ValueError):
        SeriesSpec(max_terms=0)


def test_neumaier_recovers_cancelled_bits():
    acc = NeumaierSum()
    for x in (1.0, 1e100, 1.0, -1e100):
        acc.add(x)
    assert acc.value == 2.0


def test_closed_form_values():
    assert f16_56_half(0.0) == 1.0
    assert f16_56_half(0.5) == pytest.approx(math.sqrt(1.5), rel=1e-15)
    assert f16_56_half(0.3) == pytest.approx(F1656_HALF_03, rel=1e-14)
    assert f16_56_half(0.3) == pytest.approx(gauss_2f1_series(SIG6_HALF, 0.3), rel=1e-12)


def test_closed_form_complement_argument():
    z = 0.999
    assert f16_56_half(z, one_minus_z=1e-3) == pytest.approx(f16_56_half(z), rel=1e-12)


@pytest.mark.parametrize("z", [-0.1, 1.0, 2.0])
def test_closed_form_domain(z):
    with pytest.raises(DomainError):
        f16_56_half(z)


def test_closed_form_vs_series_grid():
    for i in range(100):
        z = 0.99 * i / 99
        closed = f16_56_half(z)
        assert abs(gauss_2f1_series(SIG6_HALF, z) - closed) <= 1e-12 * closed


def test_closed_form_strictly_increasing():
    values = [f16_56_half(0.999 * i / 499) for i in range(500)]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert values[0] == 1.0


def test_agm_route():
    assert f12_12_one(0.0) == 1.0
    assert f12_12_one(0.5) == pytest.approx(gauss_2f1_series(CLASSICAL, 0.5), rel=1e-12)
    assert f12_12_one(0.99) == pytest.approx(F1212_099, rel=1e-14)
    big = SeriesSpec(max_terms=5_000_000)
    assert f12_12_one(0.99) == pytest.approx(gauss_2f1_series(CLASSICAL, 0.99, big), rel=1e-9)


@pytest.mark.parametrize("m", [1.0, -0.01])
def test_agm_domain(m):
    with pytest.raises(DomainError):
        f12_12_one(m)


def test_series_vs_agm_grid():
    for i in range(50):
        m = 0.95 * i / 49
        assert gauss_2f1_series(CLASSICAL, m) == pytest.approx(f12_12_one(m), rel=1e-11)


def test_wallis_values():
    assert wallis_integral(0) == 0.5 * math.pi
    assert wallis_integral(1) == pytest.approx(math.pi / 4, rel=1e-16)
    assert wallis_integral(2) == pytest.approx(3 * math.pi / 16, rel=1e-16)
    with pytest.raises(DomainError):
        wallis_integral(-1)


@pytest.mark.parametrize("n", [1, 2, 5, 40, 300])
def test_wallis_ratio_and_factorial_form(n):
    ratio = wallis_integral(n) / wallis_integral(n - 1)
    assert ratio == pytest.approx((2 * n - 1) / (2 * n), rel=1e-15)
    exact = Fraction(math.factorial(2 * n), (2 ** n * math.factorial(n)) ** 2)
    assert wallis_integral(n) == pytest.approx(0.5 * math.pi * float(exact), rel=1e-13)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.0, max_value=0.95))
def test_closed_form_is_series_everywhere(z):
    assert gauss_2f1_series(SIG6_HALF, z) == pytest.approx(f16_56_half(z), rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.0, max_value=0.9))
def test_term_by_term_integration(xi):
    # (pi/2) F(1/6,5/6;1;xi) = sum of Wallis integrals weighted by the
    # coefficients of F(1/6,5/6;1/2;.), which is how K reduces to a series.
    a, b, c = 1 / 6, 5 / 6, 0.5
    coeff, total, n = 1.0, wallis_integral(0), 0
    while True:
        coeff *= (a + n) * (b + n) / ((c + n) * (n + 1)) * xi
        n += 1
        term = coeff * wallis_integral(n)
        total += term
        if term < 1e-17 * total:
            break
    assert total == pytest.approx(0.5 * math.pi * gauss_2f1_series(SIG6_ONE, xi), rel=1e-12)
