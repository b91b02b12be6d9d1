import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sig6 import core
from sig6.core import (
    Sig6Context,
    c6,
    complete_K_cubic_integral,
    complete_K_psi_integral,
    complete_K_quadrature,
    complete_K_series,
    cubic_endpoints,
    f_incomplete,
    phi,
    s6,
)
from sig6.errors import DomainError, NoConvergence
from sig6.hypergeom import f16_56_half
from sig6.modulus import Modulus
from sig6.weierstrass import build, complete_K_agm

# (pi/2) F(1/6, 5/6; 1; kk^2) from mpmath at 30 digits
K_REF = {
    0.3: 1.59143849288187311032764621281,
    0.5: 1.63416832181405191869060535745,
    0.6: 1.66960448106787438139021165981,
    0.9: 1.95059987395939203092251900132,
}
# f(T) at kk = 0.6 from mpmath quadrature of the hypergeometric integrand
F06 = {0.3: 0.300896113743450633433797090182, 1.0: 1.03105348856483531340020254087}


@pytest.fixture(scope="module")
def ctx06():
    return Sig6Context.create(0.6)


@pytest.fixture(scope="module", params=[0.3, 0.6, 0.9])
def ctx(request):
    return Sig6Context.create(request.param)


# -- Modulus ---------------------------------------------------------------

def test_modulus_derived_angles():
    m = Modulus(0.6)
    assert math.sin(m.alpha) == pytest.approx(0.6, abs=1e-15)
    assert 3 * m.beta == pytest.approx(2 * m.alpha, rel=1e-15)
    assert m.xi == pytest.approx(0.36, abs=1e-15)


def test_modulus_from_alpha_keeps_angle():
    m = Modulus.from_alpha(math.pi / 3)
    assert m.alpha == math.pi / 3
    assert m.beta == 2 * math.pi / 9
    assert m.kk == pytest.approx(math.sqrt(3) / 2, rel=1e-15)


def test_modulus_from_xi():
    assert Modulus.from_xi(0.25).kk == 0.5


@pytest.mark.parametrize("kk", [0.0, 1.0, -0.3, 1.5])
def test_modulus_domain(kk):
    with pytest.raises(DomainError):
        Modulus(kk)


def test_admissibility():
    assert Modulus(1e-6).admissible
    assert not Modulus(1e-8).admissible
    with pytest.raises(DomainError):
        Sig6Context.create(1e-9)
    with pytest.raises(DomainError):
        Sig6Context.create(1 - 1e-8)


# -- f, phi, s6, c6 ----------------------------------------------------------

def test_context_K(ctx):
    assert ctx.K > math.pi / 2
    assert math.isfinite(ctx.K)
    assert ctx.K == pytest.approx(K_REF[ctx.modulus.kk], rel=1e-14)


def test_context_falls_back_to_agm_near_one():
    c = Sig6Context.create(0.99999)
    assert c.K == pytest.approx(complete_K_agm(c.modulus), rel=1e-13)


def test_f_values(ctx06):
    assert f_incomplete(ctx06, 0.0) == 0.0
    assert f_incomplete(ctx06, math.pi / 2) == pytest.approx(ctx06.K, rel=1e-14)
    assert f_incomplete(ctx06, math.pi) == pytest.approx(2 * ctx06.K, rel=1e-15)
    for T, ref in F06.items():
        assert f_incomplete(ctx06, T) == pytest.approx(ref, rel=1e-14)


def test_f_degenerates_to_identity_for_tiny_modulus():
    c = Sig6Context.create(1e-6)
    for T in (0.1, 1.0, 2.5, -7.0, 30.0):
        assert f_incomplete(c, T) == pytest.approx(T, abs=1e-10)


def test_f_rejects_non_finite(ctx06):
    with pytest.raises(DomainError):
        f_incomplete(ctx06, math.inf)
    with pytest.raises(DomainError):
        phi(ctx06, math.nan)


def test_phi_values(ctx06):
    K = ctx06.K
    assert phi(ctx06, 0.0) == 0.0
    assert phi(ctx06, K) == pytest.approx(math.pi / 2, abs=1e-13)
    assert phi(ctx06, 2 * K) == pytest.approx(math.pi, abs=1e-13)


def test_s6_c6_landmarks(ctx06):
    K = ctx06.K
    assert s6(ctx06, 0.0) == 0.0 and c6(ctx06, 0.0) == 1.0
    assert s6(ctx06, K) == pytest.approx(1.0, abs=1e-12)
    assert c6(ctx06, K) == pytest.approx(0.0, abs=1e-12)
    assert s6(ctx06, 2 * K) == pytest.approx(0.0, abs=1e-12)
    assert c6(ctx06, 2 * K) == pytest.approx(-1.0, abs=1e-12)


def test_phi_residual_meets_inversion_tolerance(ctx):
    for i in range(41):
        u = -3 * ctx.K + 6 * ctx.K * i / 40
        T = phi(ctx, u)
        assert abs(f_incomplete(ctx, T) - u) <= 1e-11 * max(1.0, abs(u))


def test_phi_iteration_budget(ctx06):
    starved = Sig6Context(ctx06.modulus, ctx06.K, inversion_tolerance=1e-30, max_iterations=1)
    with pytest.raises(NoConvergence):
        phi(starved, 0.4)


def test_oddness_and_pythagoras(ctx):
    K = ctx.K
    for i in range(100):
        u = -3 * K + 6 * K * i / 99
        assert phi(ctx, -u) == -phi(ctx, u)
        assert s6(ctx, -u) == pytest.approx(-s6(ctx, u), abs=1e-12)
        assert c6(ctx, -u) == pytest.approx(c6(ctx, u), abs=1e-12)
        assert s6(ctx, u) ** 2 + c6(ctx, u) ** 2 == pytest.approx(1.0, abs=1e-12)


def test_f_shift_by_pi(ctx):
    for T in (0.2, 1.1, -0.7, 2.9):
        assert f_incomplete(ctx, T + math.pi) == pytest.approx(f_incomplete(ctx, T) + 2 * ctx.K, abs=1e-13)


def test_difference_quotients_bracketed_by_integrand(ctx):
    h = 1e-4
    upper = f16_56_half(ctx.modulus.xi)
    for i in range(30):
        T = -2.0 + 4.0 * i / 29
        dq = (f_incomplete(ctx, T + h) - f_incomplete(ctx, T - h)) / (2 * h)
        assert dq == pytest.approx(ctx.integrand(T), abs=1e-6)
        assert 1.0 - 1e-6 <= dq <= upper + 1e-6


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=-25.0, max_value=25.0), st.sampled_from([0.2, 0.7, 0.95]))
def test_round_trip_property(u, kk):
    c = _context(kk)
    assert abs(f_incomplete(c, phi(c, u)) - u) <= 1e-11 * max(1.0, abs(u))


@settings(max_examples=40, deadline=None)
@given(st.floats(min_value=-10.0, max_value=10.0), st.floats(min_value=-10.0, max_value=10.0))
def test_f_strictly_increasing(a, b):
    c = _context(0.8)
    if a < b:
        assert f_incomplete(c, a) < f_incomplete(c, b)


_CONTEXTS = {}


def _context(kk):
    if kk not in _CONTEXTS:
        _CONTEXTS[kk] = Sig6Context.create(kk)
    return _CONTEXTS[kk]


# -- complete integral routes ------------------------------------------------

def test_series_route_tiny_modulus():
    assert complete_K_series(Modulus(1e-8)) == pytest.approx(math.pi / 2, rel=1e-14)
    assert complete_K_quadrature(Modulus(1e-8)) == pytest.approx(math.pi / 2, rel=1e-14)


def test_series_and_quadrature_at_xi_half():
    m = Modulus.from_xi(0.5)
    assert complete_K_series(m) == pytest.approx(complete_K_quadrature(m), rel=1e-10)
    assert complete_K_series(m) == pytest.approx(1.72541090383481399562023244548, rel=1e-14)


def test_series_vs_agm_at_09():
    m = Modulus(0.9)
    assert complete_K_series(m) == pytest.approx(complete_K_agm(m), rel=1e-9)


def test_quadrature_vs_psi_at_03():
    m = Modulus(0.3)
    assert complete_K_quadrature(m) == pytest.approx(complete_K_psi_integral(m), rel=1e-9)


@pytest.mark.parametrize("kk, rel", [(0.5, 1e-9), (0.95, 1e-8)])
def test_psi_route(kk, rel):
    m = Modulus(kk)
    assert complete_K_psi_integral(m) == pytest.approx(complete_K_series(m), rel=rel)


def test_singular_routes_reject_tiny_modulus():
    with pytest.raises(DomainError):
        complete_K_psi_integral(Modulus(1e-6))
    with pytest.raises(DomainError):
        complete_K_cubic_integral(Modulus(1e-7))


def test_cubic_route():
    m = Modulus(0.6)
    assert complete_K_cubic_integral(m) == pytest.approx(complete_K_series(m), rel=1e-9)
    assert complete_K_cubic_integral(m) == pytest.approx(math.sqrt(1.5) * build(m).omega, rel=1e-9)


def test_cubic_endpoints_are_the_outer_roots():
    lower, upper = cubic_endpoints(Modulus.from_alpha(math.pi / 3))
    assert lower == pytest.approx(math.cos(8 * math.pi / 9), abs=1e-15)
    assert upper == pytest.approx(math.cos(4 * math.pi / 9), abs=1e-15)
    assert (lower, upper) == pytest.approx((-0.939693, 0.173648), abs=1e-6)
    d = build(Modulus(0.37))
    assert cubic_endpoints(Modulus(0.37)) == pytest.approx((d.e3, d.e2), abs=1e-15)


@pytest.mark.parametrize("kk", [round(0.1 * i, 1) for i in range(1, 10)])
def test_five_routes_agree(kk):
    m = Modulus(kk)
    routes = [
        complete_K_series(m),
        complete_K_quadrature(m),
        complete_K_psi_integral(m),
        complete_K_cubic_integral(m),
        complete_K_agm(m),
    ]
    assert max(routes) - min(routes) <= 1e-9 * min(routes)


def test_module_exports_routes():
    assert core.complete_K_series is complete_K_series
