"""Signature-six elliptic toolkit.

Numerical evaluation and cross-verification of the signature-six
incomplete integral f, its inverse phi, the functions s6 = sin(phi) and
c6 = cos(phi), the complete integral K, the associated Weierstrass data,
and the hypergeometric identities linking F(1/6, 5/6; 1; .) to
F(1/2, 1/2; 1; .).
"""

from .core import (
    Sig6Context,
    c6,
    complete_K_cubic_integral,
    complete_K_psi_integral,
    complete_K_quadrature,
    complete_K_series,
    f_incomplete,
    phi,
    s6,
)
from .errors import (
    DomainError,
    InvalidParams,
    NoConvergence,
    NonConvergence,
    NonFiniteValue,
    Sig6Error,
    ToleranceNotMet,
)
from .hypergeom import HyperParams, SeriesSpec, f12_12_one, f16_56_half, gauss_2f1_series, wallis_integral
from .identities import ModulusPair, map_via_angles, map_x_to_xi, verify_bbg, verify_sextic_identity
from .modulus import Modulus
from .quadrature import QuadratureSpec, integrate_singular, integrate_smooth
from .weierstrass import WeierstrassData, complete_K_agm

__version__ = "0.1.0"
