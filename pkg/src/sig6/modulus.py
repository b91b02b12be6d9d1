"""The signature-six modulus and its derived angles."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

KK_MIN = 1e-6
KK_MAX = 1.0 - 1e-6


@dataclass(frozen=True)
class Modulus:
    """Modulus kk in (0, 1) with modular angle alpha (kk = sin alpha),
    rescaled angle beta = 2 alpha / 3 and hypergeometric argument xi = kk^2.

    Only ``kk`` is normally supplied. ``alpha`` may be passed when it is
    known exactly, as ``Modulus.from_alpha`` does.
    """

    kk: float
    alpha: float | None = None
    beta: float = field(init=False, default=0.0)
    xi: float = field(init=False, default=0.0)

    def __post_init__(self):
        kk = self.kk
        if not (isinstance(kk, (int, float)) and 0.0 < kk < 1.0):
            raise DomainError(f"modulus must lie in (0, 1), got {kk!r}")
        alpha = self.alpha
        if alpha is None:
            alpha = math.atan2(kk, math.sqrt((1.0 - kk) * (1.0 + kk)))
        elif not 0.0 < alpha < 0.5 * math.pi:
            raise DomainError(f"modular angle must lie in (0, pi/2), got {alpha!r}")
        object.__setattr__(self, "kk", float(kk))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", 2.0 * alpha / 3.0)
        object.__setattr__(self, "xi", kk * kk)

    @classmethod
    def from_alpha(cls, alpha: float) -> "Modulus":
        return cls(math.sin(alpha), alpha)

    @classmethod
    def from_xi(cls, xi: float) -> "Modulus":
        if not 0.0 < xi < 1.0:
            raise DomainError(f"xi must lie in (0, 1), got {xi!r}")
        return cls(math.sqrt(xi))

    @property
    def admissible(self) -> bool:
        return KK_MIN <= self.kk <= KK_MAX

    def require_admissible(self) -> None:
        if not self.admissible:
            raise DomainError(
                f"modulus {self.kk!r} outside the admissible range [{KK_MIN}, {KK_MAX}]"
            )
