"""Exception hierarchy.

``DomainError`` covers arguments outside a formula's region of validity
(CLI exit code 2); ``ConvergenceError`` covers numerical failures such as an
exhausted quadrature budget (exit code 3).
"""


class LerchError(Exception):
    """Base class for all package errors."""


class DomainError(LerchError, ValueError):
    """Arguments fall outside the region where a formula is defined."""


class PoleInRange(DomainError):
    """A summand denominator a*j + b vanishes for some 1 <= j <= n."""


class PoleAtNegativeInteger(DomainError):
    pass


class PoleAtNonPositiveInteger(DomainError):
    pass


class PoleAtOne(DomainError):
    pass


class PoleHit(DomainError):
    """A cot/coth kernel was evaluated within 1e-12 of a pole."""


class CothPole(DomainError):
    """coth(m u / 2) has a pole for some u in (0, 1]."""


class SingularSine(DomainError):
    pass


class NearSingularRegime(DomainError):
    """b is too close to a (half-)integer for the generic-b formula."""


class ExcludedRegion(DomainError):
    """Re(m) >= 0 and |Im(m)| >= 2*pi."""


class ImproperAtZero(DomainError):
    pass


class ZeroB(DomainError):
    pass


class DivergentSeries(DomainError):
    pass


class FormulaBreakdown(DomainError):
    pass


class ConvergenceError(LerchError, ArithmeticError):
    pass


class QuadratureFailure(ConvergenceError):
    pass


class BudgetExhausted(QuadratureFailure):
    """Tolerance not met within the evaluation budget.

    ``partial`` holds the best available :class:`QuadratureResult`.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NonFinite(QuadratureFailure):
    pass


class NoConvergence(ConvergenceError):
    pass
