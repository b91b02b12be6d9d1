"""Signature-six incomplete integral, its inverse, and the functions s6, c6.

For a modulus kk the incomplete integral is

    f(T) = integral over [0, T] of F(1/6, 5/6; 1/2; kk^2 sin(t)^2) dt,

phi is its inverse, s6 = sin(phi) and c6 = cos(phi). K = f(pi/2) has four
routes here (series, direct quadrature, psi-integral, cubic integral); the
fifth, through the classical AGM, is ``weierstrass.complete_K_agm``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from .errors import DomainError, NonConvergence, NoConvergence
from .hypergeom import SIG6_ONE, SeriesSpec, f16_56_half, gauss_2f1_series
from .modulus import KK_MAX, KK_MIN, Modulus
from .quadrature import QuadratureSpec, integrate_singular, integrate_smooth
from .weierstrass import complete_K_agm

log = logging.getLogger(__name__)

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class Sig6Context:
    """A modulus together with its complete integral K and tolerances.

    Build one with ``Sig6Context.create``; K is computed once there.
    """

    modulus: Modulus
    K: float
    series_spec: SeriesSpec = field(default_factory=SeriesSpec)
    quad_spec: QuadratureSpec = field(default_factory=QuadratureSpec)
    inversion_tolerance: float = 1e-13
    max_iterations: int = 100

    @classmethod
    def create(
        cls,
        modulus: Modulus | float,
        series_spec: SeriesSpec | None = None,
        quad_spec: QuadratureSpec | None = None,
        **kwargs,
    ) -> "Sig6Context":
        if not isinstance(modulus, Modulus):
            modulus = Modulus(modulus)
        modulus.require_admissible()
        series_spec = series_spec or SeriesSpec()
        quad_spec = quad_spec or QuadratureSpec()
        try:
            K = complete_K_series(modulus, series_spec)
        except NonConvergence:
            # kk very close to 1: the series needs more terms than allowed
            log.info("series K did not converge for kk=%r; using the AGM route", modulus.kk)
            K = complete_K_agm(modulus)
        return cls(modulus, K, series_spec, quad_spec, **kwargs)

    def integrand(self, t: float) -> float:
        """f'(t) = F(1/6, 5/6; 1/2; kk^2 sin(t)^2)."""
        return _sig6_integrand(self.modulus, t)


def _sig6_integrand(modulus: Modulus, t: float) -> float:
    s = math.sin(t)
    c = math.cos(t)
    kk = modulus.kk
    # 1 - kk^2 sin^2 t without cancellation near kk = 1, t = pi/2
    complement = c * c + (1.0 - kk) * (1.0 + kk) * s * s
    return f16_56_half(modulus.xi * s * s, one_minus_z=complement)


def _integral(ctx: Sig6Context, a: float, b: float) -> float:
    if b >= a:
        return integrate_smooth(ctx.integrand, a, b, ctx.quad_spec)
    return -integrate_smooth(ctx.integrand, b, a, ctx.quad_spec)


def f_incomplete(ctx: Sig6Context, T: float) -> float:
    """f(T); quadrature runs over at most [0, pi/2] after the shift f(T + pi) = f(T) + 2K."""
    if not math.isfinite(T):
        raise DomainError(f"T must be finite, got {T!r}")
    if T < 0.0:
        return -f_incomplete(ctx, -T)
    n = round(T / math.pi)
    r = T - n * math.pi
    return 2.0 * n * ctx.K + _integral(ctx, 0.0, r)


def _phi_reduced(ctx: Sig6Context, u: float, tol: float) -> float:
    """Solve f(T) = u for T in [0, pi/2], given 0 <= u <= K (up to rounding)."""
    if u == 0.0:
        return 0.0
    lo, hi = 0.0, _HALF_PI
    T = min(u / ctx.K, 1.0) * _HALF_PI
    fT = _integral(ctx, 0.0, T)
    for _ in range(ctx.max_iterations):
        g = fT - u
        if abs(g) <= tol:
            return T
        if g > 0.0:
            hi = T
        else:
            lo = T
        T_new = T - g / ctx.integrand(T)
        if not lo < T_new < hi:
            T_new = 0.5 * (lo + hi)
        # advance f incrementally over the short step
        fT += _integral(ctx, T, T_new)
        T = T_new
    raise NoConvergence(
        f"phi({u!r}) did not reach tolerance {tol:.1e} in {ctx.max_iterations} iterations"
    )


def phi(ctx: Sig6Context, u: float) -> float:
    """Inverse of ``f_incomplete``.

    u is brought into [-K, K] with phi(u + 2K) = phi(u) + pi, then the
    reduced equation is solved by Newton's method safeguarded by bisection.
    """
    if not math.isfinite(u):
        raise DomainError(f"u must be finite, got {u!r}")
    if u < 0.0:
        return -phi(ctx, -u)
    tol = ctx.inversion_tolerance * max(1.0, abs(u))
    two_k = 2.0 * ctx.K
    n = round(u / two_k)
    r = u - n * two_k
    if r < 0.0:
        T = -_phi_reduced(ctx, -r, tol)
    else:
        T = _phi_reduced(ctx, r, tol)
    return n * math.pi + T


def s6(ctx: Sig6Context, u: float) -> float:
    return math.sin(phi(ctx, u))


def c6(ctx: Sig6Context, u: float) -> float:
    return math.cos(phi(ctx, u))


def complete_K_series(modulus: Modulus, spec: SeriesSpec | None = None) -> float:
    """K = (pi/2) F(1/6, 5/6; 1; kk^2) by the hypergeometric series."""
    return _HALF_PI * gauss_2f1_series(SIG6_ONE, modulus.xi, spec)


def complete_K_quadrature(modulus: Modulus, spec: QuadratureSpec | None = None) -> float:
    """K straight from its definition as f(pi/2)."""
    return integrate_smooth(lambda t: _sig6_integrand(modulus, t), 0.0, _HALF_PI, spec)


def _require_singular_range(modulus: Modulus) -> None:
    if not KK_MIN < modulus.kk <= KK_MAX:
        raise DomainError(
            f"singular-integral routes need {KK_MIN} < kk <= {KK_MAX}, got {modulus.kk!r}"
        )


def complete_K_psi_integral(modulus: Modulus, spec: QuadratureSpec | None = None) -> float:
    """K = sqrt(2) * integral over (0, alpha) of cos(2psi/3) / sqrt(cos 2psi - cos 2alpha).

    The radicand is rewritten as 2 sin(alpha + psi) sin(alpha - psi) so
    that alpha - psi comes directly from the quadrature transform.
    """
    _require_singular_range(modulus)
    alpha = modulus.alpha

    def integrand(psi, _from_zero, to_alpha):
        return math.cos(2.0 * psi / 3.0) / math.sqrt(
            2.0 * math.sin(alpha + psi) * math.sin(to_alpha)
        )

    return math.sqrt(2.0) * integrate_singular(integrand, 0.0, alpha, spec, endpoint_distances=True)


def cubic_endpoints(modulus: Modulus) -> tuple[float, float]:
    """(cos(2(pi + alpha)/3), cos(2(pi - alpha)/3)), i.e. the roots e3 and e2."""
    alpha = modulus.alpha
    return math.cos(2.0 * (math.pi + alpha) / 3.0), math.cos(2.0 * (math.pi - alpha) / 3.0)


def complete_K_cubic_integral(modulus: Modulus, spec: QuadratureSpec | None = None) -> float:
    """K = sqrt(3/2) * integral of dx / sqrt(4x^3 - 3x - (1 - 2kk^2)) between the endpoints.

    The cubic vanishes at both endpoints; with its third root
    e1 = cos(2 alpha / 3) it is 4 (e1 - x)(x - lower)(upper - x), which is
    the form evaluated here.
    """
    _require_singular_range(modulus)
    lower, upper = cubic_endpoints(modulus)
    e1 = math.cos(2.0 * modulus.alpha / 3.0)

    def integrand(x, from_lower, to_upper):
        return 1.0 / math.sqrt(4.0 * (e1 - x) * from_lower * to_upper)

    return math.sqrt(1.5) * integrate_singular(integrand, lower, upper, spec, endpoint_distances=True)
