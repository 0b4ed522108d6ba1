"""Exception hierarchy shared by all fracwell modules."""

from __future__ import annotations


class FracwellError(Exception):
    """Base class for every error raised by the package."""


class DomainError(FracwellError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleInParameter(DomainError):
    """A hypergeometric denominator parameter is a non-positive integer."""


class BranchPointArgument(DomainError):
    """Incomplete gamma with non-positive order requested at z = 0."""


class ClassicalEndpoint(DomainError):
    """alpha = 2 reached an operation that only exists for 0 < alpha < 2."""


class OutOfValidatedRange(DomainError):
    """The argument is outside the window in which the evaluation is trusted."""


class SingularOrigin(DomainError):
    """The eigenfunction diverges at x = 0."""


class AnchorDegenerate(FracwellError, ArithmeticError):
    """The pseudo-normalization anchor value is numerically zero."""


class NoConvergence(FracwellError, ArithmeticError):
    """A series or continued fraction did not converge within its term budget."""


class ToleranceNotMet(FracwellError, ArithmeticError):
    """Adaptive quadrature finished with an error estimate above tolerance."""

    def __init__(self, message: str, estimate: float):
        super().__init__(f"{message} (error estimate {estimate:.3e})")
        self.estimate = estimate


class SeriesOverflow(FracwellError, ArithmeticError):
    """Power-series coefficients outgrew what double precision can resolve."""


class WindowExhausted(FracwellError, LookupError):
    """Fewer zeros than requested inside the validated scan window."""

    def __init__(self, message: str, found: list[float] | None = None):
        super().__init__(message)
        self.found = list(found or [])


class SpectrumOrderError(FracwellError, RuntimeError):
    """Merged eigenvalues do not alternate in parity."""
