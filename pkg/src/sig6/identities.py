"""The sextic modulus map and the hypergeometric identity it carries.

For the increasing bijection x -> xi of (0, 1) defined by

    4 xi (1 - xi) = (27/4) x^2 (1 - x)^2 / (1 - x + x^2)^3

there holds F(1/6, 5/6; 1; xi) = (1 - x + x^2)^(1/4) F(1/2, 1/2; 1; x).
Verification computes the left side by the Gauss series and the right
side by the AGM, so the two sides share no numerical machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .hypergeom import SIG6_ONE, SeriesSpec, f12_12_one, gauss_2f1_series
from .modulus import Modulus
from .weierstrass import classical_parameter


@dataclass(frozen=True)
class ModulusPair:
    """Classical parameter x = k^2 and its signature-six partner xi = kk^2."""

    x: float
    xi: float

    def shape_factor(self):
        """1 - x + x^2."""
        return 1 - self.x + self.x * self.x

    def map_residual(self) -> float:
        """4 xi (1 - xi) minus the sextic expression in x."""
        return 4.0 * self.xi * (1.0 - self.xi) - sextic_q(self.x)


@dataclass(frozen=True)
class IdentityPoint:
    x: float
    xi: float
    lhs: float
    rhs: float
    residual: float


@dataclass
class IdentityReport:
    points: list[IdentityPoint] = field(default_factory=list)
    threshold: float = 1e-9

    @property
    def max_relative_residual(self) -> float:
        return max((p.residual for p in self.points), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_relative_residual <= self.threshold

    def worst(self) -> IdentityPoint | None:
        return max(self.points, key=lambda p: p.residual, default=None)


def sextic_q(x: float) -> float:
    """(27/4) x^2 (1 - x)^2 / (1 - x + x^2)^3, which lies in [0, 1] on [0, 1]."""
    w = 1.0 - x + x * x
    return 6.75 * (x * (1.0 - x)) ** 2 / (w * w * w)


def map_x_to_xi(x: float) -> ModulusPair:
    """The increasing branch of xi(x).

    1 - Q factors as ((2 - x)(1 - 2x)(1 + x))^2 / (4 (1 - x + x^2)^3), so the
    signed root R = (2 - x)(1 - 2x)(1 + x) / (2 (1 - x + x^2)^(3/2)) is
    available without cancellation and xi = (1 - R) / 2. For x <= 1/2 the
    equivalent Q / (2 (1 + R)) keeps relative accuracy as x -> 0.
    """
    if not 0.0 < x < 1.0:
        raise DomainError(f"x must lie in (0, 1), got {x!r}")
    w = 1.0 - x + x * x
    r = (2.0 - x) * (1.0 - 2.0 * x) * (1.0 + x) / (2.0 * w * math.sqrt(w))
    if x <= 0.5:
        xi = sextic_q(x) / (2.0 * (1.0 + r))
    else:
        xi = 0.5 * (1.0 - r)
    return ModulusPair(x, xi)


def map_via_angles(modulus: Modulus) -> ModulusPair:
    """x = 2 sin(beta) / (sin(beta) + sqrt(3) cos(beta)) paired with xi = sin(alpha)^2."""
    return ModulusPair(classical_parameter(modulus), modulus.xi)


def _check_point(pair: ModulusPair, spec: SeriesSpec | None) -> IdentityPoint:
    x, xi = pair.x, pair.xi
    lhs = gauss_2f1_series(SIG6_ONE, xi, spec)
    rhs = (1.0 - x + x * x) ** 0.25 * f12_12_one(x)
    return IdentityPoint(x, xi, lhs, rhs, abs(lhs - rhs) / max(abs(rhs), 1.0))


def verify_sextic_identity(
    grid, spec: SeriesSpec | None = None, threshold: float = 1e-9
) -> IdentityReport:
    report = IdentityReport(threshold=threshold)
    for x in grid:
        report.points.append(_check_point(map_x_to_xi(x), spec))
    return report


def _require_p(p: float) -> None:
    if not 0.0 < p < 1.0:
        raise DomainError(f"p must lie in (0, 1), got {p!r}")


# The parametrizations below use integer constants only, so
# fractions.Fraction arguments give exact rational results.


def bbg_theorem_point(p: float) -> ModulusPair:
    """x = p(2 + p)/(1 + 2p), xi = (27/4) p^2 (1 + p)^2 / (1 + p + p^2)^3."""
    _require_p(p)
    w = 1 + p + p * p
    return ModulusPair(
        p * (2 + p) / (1 + 2 * p),
        27 * (p * (1 + p)) ** 2 / (4 * w * w * w),
    )


def bbg_corollary_point(p: float) -> ModulusPair:
    """Complementary parametrization: x = (1 - p^2)/(1 + 2p) and
    xi = (1/4) (1 - p)^2 (1 + 2p)^2 (2 + p)^2 / (1 + p + p^2)^3."""
    _require_p(p)
    w = 1 + p + p * p
    return ModulusPair(
        (1 - p) * (1 + p) / (1 + 2 * p),
        ((1 - p) * (1 + 2 * p) * (2 + p)) ** 2 / (4 * w * w * w),
    )


def bbg_shape_factor(p: float) -> float:
    """((1 + p + p^2) / (1 + 2p))^2, the common value of 1 - x + x^2 for both parametrizations."""
    return ((1 + p + p * p) / (1 + 2 * p)) ** 2


_BBG = {"theorem": bbg_theorem_point, "corollary": bbg_corollary_point}


def verify_bbg(
    grid, which: str = "theorem", spec: SeriesSpec | None = None, threshold: float = 1e-9
) -> IdentityReport:
    try:
        point = _BBG[which]
    except KeyError:
        raise ValueError(f"which must be 'theorem' or 'corollary', got {which!r}") from None
    report = IdentityReport(threshold=threshold)
    for p in grid:
        report.points.append(_check_point(point(p), spec))
    return report
