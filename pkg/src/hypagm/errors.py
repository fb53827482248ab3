"""Exception hierarchy shared by all modules.

Every failure mode maps onto one of two CLI exit classes: domain errors
(bad or degenerate input, exit code 2) and convergence errors (an
iteration or root-find that did not settle, exit code 3).
"""


class HypagmError(Exception):
    """Base class for all package errors."""


class DomainError(HypagmError, ValueError):
    """Input outside the domain of an operation."""


class ConvergenceError(HypagmError, RuntimeError):
    """An iterative procedure failed to reach its tolerance."""


class SingularCurve(DomainError):
    """The sextic has (numerically) repeated roots."""


class OrderingViolation(ConvergenceError):
    """A Richelot step broke the expected interlacing of roots."""


class NoConvergence(ConvergenceError):
    """Iteration cap reached."""


class ComplexUVW(DomainError):
    """The Richelot image roots of a conjugate-pair curve are not real."""


class UnsupportedOrdering(DomainError):
    """The u, v, w ordering matches neither supported case table."""


class DegenerateMap(DomainError):
    """The relabelling Moebius map sends a branchpoint to infinity."""


class PathThroughBranchpoint(DomainError):
    """An integration segment passes through a branchpoint."""


class ToleranceNotMet(ConvergenceError):
    """Adaptive quadrature could not certify the requested tolerance."""


class NoRoot(ConvergenceError):
    """A bracketed scalar equation has no root in the bracket."""


class RootLost(ConvergenceError):
    """Continuation could not bracket the next solution point."""


class SingularApproach(HypagmError):
    """Informational: continuation reached the neighbourhood of a singular curve."""


class NonRealC2(DomainError):
    """The normalisation period is not real, so beta cannot be recovered."""


class WeightTwoZero(DomainError):
    """The weight-2 invariant vanishes; absolute invariants are undefined."""
