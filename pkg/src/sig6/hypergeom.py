"""Gauss hypergeometric functions used by the signature-six toolkit.

Three evaluation routes live here:

* ``gauss_2f1_series`` sums the defining power series with compensated
  (Neumaier) summation. It is the reference route for every
  hypergeometric value in the package.
* ``f16_56_half`` evaluates F(1/6, 5/6; 1/2; z) through its closed
  trigonometric form cos(2psi/3) / cos(psi), sin(psi)^2 = z.
* ``f12_12_one`` evaluates F(1/2, 1/2; 1; m) as 1 / AGM(1, sqrt(1 - m)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidParams, NonConvergence

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class SeriesSpec:
    """Truncation controls for ``gauss_2f1_series``."""

    relative_tolerance: float = 1e-14
    max_terms: int = 2_000_000

    def __post_init__(self):
        if not 0.0 < self.relative_tolerance < 1.0:
            raise ValueError("relative_tolerance must lie in (0, 1)")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


@dataclass(frozen=True)
class HyperParams:
    a: float
    b: float
    c: float

    def __post_init__(self):
        c = self.c
        if c <= 0 and c == math.floor(c):
            raise InvalidParams(f"c = {c} is zero or a negative integer")


SIG6_HALF = HyperParams(1 / 6, 5 / 6, 1 / 2)
SIG6_ONE = HyperParams(1 / 6, 5 / 6, 1.0)
CLASSICAL = HyperParams(0.5, 0.5, 1.0)


class NeumaierSum:
    """Running compensated sum (Kahan-Babuska-Neumaier)."""

    __slots__ = ("_s", "_c")

    def __init__(self, value: float = 0.0):
        self._s = float(value)
        self._c = 0.0

    def add(self, x: float) -> None:
        s = self._s
        t = s + x
        if abs(s) >= abs(x):
            self._c += (s - t) + x
        else:
            self._c += (x - t) + s
        self._s = t

    @property
    def value(self) -> float:
        return self._s + self._c


def gauss_2f1_series(params: HyperParams, z: float, spec: SeriesSpec | None = None) -> float:
    """Sum the Gauss series sum_n (a)_n (b)_n / ((c)_n n!) z^n.

    Terms follow the ratio recurrence, so no Pochhammer symbol is ever
    formed. Summation stops once the current term, and a geometric bound
    on the remaining tail, both fall below ``relative_tolerance`` times the
    partial sum.

    Raises
    ------
    DomainError
        If ``|z| >= 1``.
    NonConvergence
        If ``max_terms`` terms are summed without meeting the tolerance.
    """
    if spec is None:
        spec = SeriesSpec()
    if not isinstance(params, HyperParams):
        params = HyperParams(*params)
    if not abs(z) < 1.0:
        raise DomainError(f"series needs |z| < 1, got z = {z!r}")
    a, b, c = params.a, params.b, params.c
    tol = spec.relative_tolerance
    az = abs(z)
    # Past this index the term ratio moves monotonically toward z, which
    # makes the geometric tail bound below valid.
    settle = abs(a) + abs(b) + abs(c) + 2.0

    total = NeumaierSum(1.0)
    term = 1.0
    for n in range(spec.max_terms):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        term *= ratio
        if term == 0.0:
            return total.value
        total.add(term)
        if n < settle:
            continue
        s = abs(total.value)
        rho = max(abs(ratio), az)
        if rho < 1.0 and abs(term) <= tol * s and abs(term) * rho / (1.0 - rho) <= tol * s:
            return total.value
    raise NonConvergence(
        f"2F1{(a, b, c)} at z = {z!r}: no convergence within {spec.max_terms} terms"
    )


def f16_56_half(z: float, *, one_minus_z: float | None = None) -> float:
    """F(1/6, 5/6; 1/2; z) from its closed form, for 0 <= z < 1.

    With psi in [0, pi/2) and sin(psi)^2 = z the value is
    cos(2 psi / 3) / cos(psi). The cosine in the denominator is exactly
    sqrt(1 - z), so it is taken from there directly. Callers that know
    1 - z more accurately than the subtraction gives may pass it as
    ``one_minus_z``.
    """
    if not 0.0 <= z < 1.0:
        raise DomainError(f"F(1/6,5/6;1/2;z) closed form needs 0 <= z < 1, got {z!r}")
    if one_minus_z is None:
        one_minus_z = 1.0 - z
    elif not one_minus_z > 0.0:
        raise DomainError(f"one_minus_z must be positive, got {one_minus_z!r}")
    cz = math.sqrt(one_minus_z)
    psi = math.atan2(math.sqrt(z), cz)
    return math.cos(2.0 * psi / 3.0) / cz


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if a <= 0.0 or b <= 0.0:
        raise DomainError("agm needs positive arguments")
    while abs(a - b) > 4.0 * _EPS * a:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def f12_12_one(m: float) -> float:
    """F(1/2, 1/2; 1; m) = 1 / AGM(1, sqrt(1 - m)) for 0 <= m < 1."""
    if not 0.0 <= m < 1.0:
        raise DomainError(f"F(1/2,1/2;1;m) needs 0 <= m < 1, got {m!r}")
    return 1.0 / agm(1.0, math.sqrt(1.0 - m))


def complete_elliptic_k(m: float) -> float:
    """Classical complete elliptic integral of the first kind, parameter m = k^2."""
    return 0.5 * math.pi * f12_12_one(m)


def wallis_integral(n: int) -> float:
    """Integral of sin(t)^(2n) over [0, pi/2], i.e. (pi/2) (2n)! / (2^n n!)^2."""
    if n < 0:
        raise DomainError("wallis_integral needs n >= 0")
    value = 0.5 * math.pi
    for j in range(1, n + 1):
        value *= (2 * j - 1) / (2 * j)
    return value
