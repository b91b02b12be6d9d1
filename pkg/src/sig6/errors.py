"""Exception types raised across the package."""


class Sig6Error(Exception):
    """Base class for every error raised by sig6."""


class DomainError(Sig6Error, ValueError):
    """Argument outside the domain where the function is defined."""


class InvalidParams(Sig6Error, ValueError):
    """Hypergeometric parameters rejected (c zero or a negative integer)."""


class NonConvergence(Sig6Error, ArithmeticError):
    """A series ran out of its term budget before reaching tolerance."""


class NoConvergence(NonConvergence):
    """An iterative solver exhausted its iteration budget."""


class ToleranceNotMet(Sig6Error, ArithmeticError):
    """A quadrature engine exhausted its refinement budget."""


class NonFiniteValue(Sig6Error, ArithmeticError):
    """An integrand returned inf or nan away from the endpoints."""
