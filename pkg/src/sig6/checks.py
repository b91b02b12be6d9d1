"""Cross-route verification suites.

Each ``criterion_*`` function runs one suite and returns a ``Criterion``
holding its individual measurements. The CLI ``self-test`` command and the
acceptance tests both run ``run_all``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import core, identities, weierstrass
from .grids import linspace
from .hypergeom import SIG6_HALF, f16_56_half, gauss_2f1_series
from .modulus import Modulus

KK_GRID = tuple(round(0.1 * i, 1) for i in range(1, 10))
KK_PERIODIC = (0.3, 0.6, 0.9)
K_ROUTES = ("series", "quadrature", "psi", "cubic", "agm")
_SINGULAR_ROUTES = {"psi", "cubic"}


@dataclass(frozen=True)
class Measurement:
    label: str
    value: float
    threshold: float
    # "le": value <= threshold; "gt": value > threshold
    relation: str = "le"

    @property
    def passed(self) -> bool:
        if self.relation == "gt":
            return self.value > self.threshold
        return self.value <= self.threshold


@dataclass
class Criterion:
    number: int
    name: str
    measurements: list[Measurement] = field(default_factory=list)

    def add(self, label: str, value: float, threshold: float, relation: str = "le") -> None:
        self.measurements.append(Measurement(label, float(value), threshold, relation))

    @property
    def passed(self) -> bool:
        return all(m.passed for m in self.measurements)

    def worst(self) -> Measurement:
        """Failing measurement if any, else the one closest to its threshold."""
        failing = [m for m in self.measurements if not m.passed]
        if failing:
            return failing[0]
        le = [m for m in self.measurements if m.relation == "le" and m.threshold > 0]
        return max(le or self.measurements, key=lambda m: m.value / m.threshold)

    def summary(self) -> str:
        w = self.worst()
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] {self.number}. {self.name}: {len(self.measurements)} checks, "
            f"worst {w.label} = {w.value:.3e} (threshold {w.threshold:.0e})"
        )


def k_routes(modulus: Modulus) -> dict[str, float]:
    """K by every independent route."""
    return {
        "series": core.complete_K_series(modulus),
        "quadrature": core.complete_K_quadrature(modulus),
        "psi": core.complete_K_psi_integral(modulus),
        "cubic": core.complete_K_cubic_integral(modulus),
        "agm": weierstrass.complete_K_agm(modulus),
    }


def max_pairwise_relative(values: dict[str, float]) -> float:
    return max(
        abs(a - b) / max(abs(a), abs(b))
        for a, b in itertools.combinations(values.values(), 2)
    )


def criterion_k_routes() -> Criterion:
    crit = Criterion(1, "five-route agreement on K")
    for kk in KK_GRID:
        values = k_routes(Modulus(kk))
        for (na, a), (nb, b) in itertools.combinations(values.items(), 2):
            relaxed = kk in (0.1, 0.9) and ({na, nb} & _SINGULAR_ROUTES)
            crit.add(f"kk={kk} {na}/{nb}", abs(a - b) / max(abs(a), abs(b)), 1e-8 if relaxed else 1e-9)
    return crit


def criterion_sextic_identity() -> Criterion:
    crit = Criterion(2, "sextic hypergeometric identity, series vs AGM")
    report = identities.verify_sextic_identity(linspace(0.02, 0.9, 45))
    for pt in report.points:
        crit.add(f"x={pt.x:.4g}", pt.residual, 1e-9)
    return crit


def criterion_bbg() -> Criterion:
    crit = Criterion(3, "Berndt-Bhargava-Garvan parametrizations")
    grid = linspace(0.05, 0.95, 19)
    for which in ("theorem", "corollary"):
        report = identities.verify_bbg(grid, which)
        crit.add(f"{which} sweep max residual", report.max_relative_residual, 1e-9)

    half = Fraction(1, 2)
    thm = identities.bbg_theorem_point(half)
    cor = identities.bbg_corollary_point(half)
    anchors = [
        ("theorem x = 5/8", thm.x, Fraction(5, 8)),
        ("theorem xi = 243/343", thm.xi, Fraction(243, 343)),
        ("corollary x = 3/8", cor.x, Fraction(3, 8)),
        ("corollary xi = 100/343", cor.xi, Fraction(100, 343)),
        ("theorem 1-x+x^2 = 49/64", thm.shape_factor(), Fraction(49, 64)),
        ("corollary 1-x+x^2 = 49/64", cor.shape_factor(), Fraction(49, 64)),
    ]
    for label, got, want in anchors:
        crit.add(f"exact {label}", 0.0 if got == want else 1.0, 0.0)
    # float evaluation of the same anchors
    thm_f = identities.bbg_theorem_point(0.5)
    cor_f = identities.bbg_corollary_point(0.5)
    crit.add("float anchors", max(
        abs(thm_f.x - 5 / 8), abs(thm_f.xi - 243 / 343),
        abs(cor_f.x - 3 / 8), abs(cor_f.xi - 100 / 343),
        abs(thm_f.shape_factor() - 49 / 64), abs(cor_f.shape_factor() - 49 / 64),
    ), 1e-15)
    worst = 0.0
    for p in grid:
        t = identities.bbg_theorem_point(p)
        c = identities.bbg_corollary_point(p)
        worst = max(worst, abs(c.x - (1 - t.x)), abs(c.xi - (1 - t.xi)))
    crit.add("complementarity x->1-x, xi->1-xi", worst, 1e-13)
    return crit


def _u_grid(ctx: core.Sig6Context, lo: float, hi: float, count: int = 100) -> list[float]:
    return linspace(lo * ctx.K, hi * ctx.K, count)


def criterion_periodicity() -> Criterion:
    crit = Criterion(4, "quasi-period 2K and period 4K of s6, c6")
    for kk in KK_PERIODIC:
        ctx = core.Sig6Context.create(kk)
        K = ctx.K
        quasi = period = 0.0
        for u in _u_grid(ctx, -2.0, 6.0):
            s, c = core.s6(ctx, u), core.c6(ctx, u)
            quasi = max(quasi, abs(core.s6(ctx, u + 2 * K) + s), abs(core.c6(ctx, u + 2 * K) + c))
            period = max(period, abs(core.s6(ctx, u + 4 * K) - s), abs(core.c6(ctx, u + 4 * K) - c))
        crit.add(f"kk={kk} quasi-period 2K", quasi, 1e-10)
        crit.add(f"kk={kk} period 4K", period, 1e-10)
    return crit


def criterion_pythagorean() -> Criterion:
    crit = Criterion(5, "Pythagorean identity and boundary values")
    for kk in KK_PERIODIC:
        ctx = core.Sig6Context.create(kk)
        worst = max(
            abs(core.s6(ctx, u) ** 2 + core.c6(ctx, u) ** 2 - 1.0)
            for u in _u_grid(ctx, -2.0, 6.0)
        )
        crit.add(f"kk={kk} s6^2 + c6^2 - 1", worst, 1e-12)
        K = ctx.K
        boundary = max(
            abs(core.s6(ctx, 0.0)),
            abs(core.c6(ctx, 0.0) - 1.0),
            abs(core.s6(ctx, K) - 1.0),
            abs(core.c6(ctx, K)),
        )
        crit.add(f"kk={kk} boundary values at 0 and K", boundary, 1e-11)
    return crit


def criterion_round_trip() -> Criterion:
    crit = Criterion(6, "inversion round trip f(phi(u)) = u")
    for kk in KK_PERIODIC:
        ctx = core.Sig6Context.create(kk)
        worst = max(
            abs(core.f_incomplete(ctx, core.phi(ctx, u)) - u) / max(1.0, abs(u))
            for u in _u_grid(ctx, -3.0, 3.0)
        )
        crit.add(f"kk={kk} scaled round-trip error", worst, 1e-11)
    return crit


def criterion_closed_form() -> Criterion:
    crit = Criterion(7, "F(1/6,5/6;1/2;z) closed form vs series")
    worst = 0.0
    for z in linspace(0.0, 0.99, 100):
        closed = f16_56_half(z)
        worst = max(worst, abs(gauss_2f1_series(SIG6_HALF, z) - closed) / closed)
    crit.add("max relative difference on [0, 0.99]", worst, 1e-12)
    return crit


def criterion_weierstrass() -> Criterion:
    crit = Criterion(8, "Weierstrass roots, invariants and half-period")
    for kk in KK_GRID:
        mod = Modulus(kk)
        d = weierstrass.build(mod)
        e1, e2, e3 = d.e1, d.e2, d.e3
        crit.add(f"kk={kk} ordering e1>e2>e3", min(e1 - e2, e2 - e3), 0.0, "gt")
        crit.add(f"kk={kk} root sum", abs(e1 + e2 + e3), 1e-14)
        crit.add(f"kk={kk} e2e3+e3e1+e1e2 + 3/4", abs(e2 * e3 + e3 * e1 + e1 * e2 + 0.75), 1e-13)
        crit.add(f"kk={kk} e1e2e3 - g3/4", abs(e1 * e2 * e3 - (1 - 2 * kk * kk) / 4), 1e-13)
        crit.add(f"kk={kk} delta", d.delta, 0.0, "gt")
        crit.add(
            f"kk={kk} delta vs g2^3 - 27 g3^2",
            abs(d.delta - (d.g2 ** 3 - 27 * d.g3 ** 2)) / d.delta,
            1e-12,
        )
        crit.add(f"kk={kk} midpoint relations", weierstrass.midpoint_relation_check(d), 1e-12)
        omega_int = weierstrass.half_period_integral(d)
        crit.add(f"kk={kk} omega integral vs AGM", abs(omega_int - d.omega), 1e-8)
        K = core.complete_K_series(mod)
        crit.add(f"kk={kk} K vs sqrt(3/2) omega", abs(K - math.sqrt(1.5) * d.omega) / K, 1e-9)
    return crit


def criterion_modulus_map() -> Criterion:
    crit = Criterion(9, "sextic modulus map")
    xs = [i / 51 for i in range(1, 51)]
    xis = [identities.map_x_to_xi(x).xi for x in xs]
    min_step = min(b - a for a, b in zip(xis, xis[1:]))
    crit.add("strict monotonicity (min step)", min_step, 0.0, "gt")
    sym = max(abs(identities.map_x_to_xi(x).xi + identities.map_x_to_xi(1 - x).xi - 1) for x in xs)
    crit.add("symmetry xi(x) + xi(1-x) = 1", sym, 1e-12)
    crit.add("fixed point xi(1/2) = 1/2", abs(identities.map_x_to_xi(0.5).xi - 0.5), 1e-14)
    worst = 0.0
    for kk in KK_GRID:
        mod = Modulus(kk)
        pair = identities.map_via_angles(mod)
        worst = max(worst, abs(identities.map_x_to_xi(pair.x).xi - pair.xi))
    crit.add("map_x_to_xi vs angle parametrization", worst, 1e-12)
    return crit


SUITES = (
    criterion_k_routes,
    criterion_sextic_identity,
    criterion_bbg,
    criterion_periodicity,
    criterion_pythagorean,
    criterion_round_trip,
    criterion_closed_form,
    criterion_weierstrass,
    criterion_modulus_map,
)


def run_all() -> list[Criterion]:
    return [suite() for suite in SUITES]
