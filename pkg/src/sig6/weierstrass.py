"""Weierstrass data attached to a signature-six modulus.

The cubic is 4x^3 - 3x - (1 - 2kk^2), i.e. invariants g2 = 3 and
g3 = 1 - 2kk^2. Its roots have closed trigonometric forms in the rescaled
angle beta, and the real half-period omega satisfies K = sqrt(3/2) omega.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .hypergeom import complete_elliptic_k, f12_12_one
from .modulus import Modulus
from .quadrature import QuadratureSpec, integrate_singular

_SQRT3 = math.sqrt(3.0)
_TWO_PI_3 = 2.0 * math.pi / 3.0


@dataclass(frozen=True)
class WeierstrassData:
    g2: float
    g3: float
    delta: float
    e1: float
    e2: float
    e3: float
    omega: float

    @property
    def classical_m(self) -> float:
        """Squared classical modulus (e2 - e3) / (e1 - e3)."""
        return (self.e2 - self.e3) / (self.e1 - self.e3)


def roots(modulus: Modulus) -> tuple[float, float, float]:
    """e1 > e2 > e3 from their trigonometric forms; no cubic solver involved."""
    beta = modulus.beta
    return math.cos(beta), math.cos(beta - _TWO_PI_3), math.cos(beta + _TWO_PI_3)


def _omega(e1: float, e2: float, e3: float) -> float:
    span = e1 - e3
    m = (e2 - e3) / span
    if not 0.0 < m < 1.0:
        raise DomainError(f"classical parameter {m!r} outside (0, 1); roots not ordered")
    return complete_elliptic_k(m) / math.sqrt(span)


def build(modulus: Modulus) -> WeierstrassData:
    e1, e2, e3 = roots(modulus)
    xi = modulus.xi
    return WeierstrassData(
        g2=3.0,
        g3=1.0 - 2.0 * xi,
        delta=108.0 * xi * (1.0 - xi),
        e1=e1,
        e2=e2,
        e3=e3,
        omega=_omega(e1, e2, e3),
    )


def half_period_agm(data: WeierstrassData) -> float:
    """omega = K(m) / sqrt(e1 - e3) with m = (e2 - e3)/(e1 - e3), K(m) by AGM."""
    return _omega(data.e1, data.e2, data.e3)


def half_period_integral(data: WeierstrassData, spec: QuadratureSpec | None = None) -> float:
    """omega as the integral of 1/sqrt(4x^3 - 3x - g3) over (e3, e2).

    The cubic is taken in factored form 4 (e1 - x)(x - e3)(e2 - x) so the
    two singular factors come straight from the endpoint distances.
    """
    e1, e2, e3 = data.e1, data.e2, data.e3

    def integrand(x, from_e3, to_e2):
        return 1.0 / math.sqrt(4.0 * (e1 - x) * from_e3 * to_e2)

    return integrate_singular(integrand, e3, e2, spec, endpoint_distances=True)


def midpoint_relation_check(data: WeierstrassData) -> float:
    """Largest residual among the relations tying g2 = 3 to the roots.

    Checks 2(e1^2 + e2^2 + e3^2) = 3, -4(e2 e3 + e3 e1 + e1 e2) = 3 and
    (e1 - e3)^2 (1 - m + m^2) = 9/4 with m the classical parameter.
    """
    e1, e2, e3 = data.e1, data.e2, data.e3
    m = data.classical_m
    r_squares = 2.0 * (e1 * e1 + e2 * e2 + e3 * e3) - data.g2
    r_products = -4.0 * (e2 * e3 + e3 * e1 + e1 * e2) - data.g2
    r_span = (e1 - e3) ** 2 * (1.0 - m + m * m) - 0.75 * data.g2
    return max(abs(r_squares), abs(r_products), abs(r_span))


def classical_parameter(modulus: Modulus) -> float:
    """k^2 = 2 sin(beta) / (sin(beta) + sqrt(3) cos(beta))."""
    sb = math.sin(modulus.beta)
    return 2.0 * sb / (sb + _SQRT3 * math.cos(modulus.beta))


def complete_K_agm(modulus: Modulus) -> float:
    """K = (1 - k^2 + k^4)^(1/4) (pi/2) F(1/2, 1/2; 1; k^2), F by AGM."""
    m = classical_parameter(modulus)
    return (1.0 - m + m * m) ** 0.25 * 0.5 * math.pi * f12_12_one(m)
