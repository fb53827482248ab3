"""Gauss' arithmetic-geometric mean and the complete elliptic integral.

    int_0^{pi/2} dphi / sqrt(a^2 cos^2 phi + b^2 sin^2 phi) = pi / (2 M(a, b))
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernels
from .errors import DomainError, NoConvergence

__all__ = ["AgmTrace", "agm", "elliptic_integral"]

MAX_ITER = 60
_EPS = 2.220446049250313e-16


@dataclass
class AgmTrace:
    """History of an AGM run.

    Attributes
    ----------
    pairs : list of (float, float)
        ``(a_n, b_n)`` for ``n = 0..N``; after the first step
        ``a_n >= a_{n+1} >= b_{n+1} >= b_n``.
    limit : float
        The common limit ``M(a, b)``.
    iterations : int
        Number of mean steps performed.
    """

    pairs: list = field(default_factory=list)
    limit: float = math.nan
    iterations: int = 0


def _check(a: float, b: float) -> None:
    if not (a > 0 and b > 0) or not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"AGM needs finite a, b > 0 (got {a}, {b})")


def agm(a: float, b: float, maxit: int = MAX_ITER) -> AgmTrace:
    """Run the AGM and record every pair.

    Stops when ``|a_n - b_n| <= 4 eps a_n``.

    Raises
    ------
    DomainError
        If ``a <= 0`` or ``b <= 0``.
    NoConvergence
        If ``maxit`` steps do not reach the stopping rule (only possible for
        invalid input).
    """
    a, b = float(a), float(b)
    _check(a, b)
    tr = AgmTrace(pairs=[(a, b)])
    n = 0
    while abs(a - b) > 4.0 * _EPS * a:
        if n >= maxit:
            raise NoConvergence(f"AGM did not converge in {maxit} steps")
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        tr.pairs.append((a, b))
        n += 1
    tr.limit = a
    tr.iterations = n
    return tr


def elliptic_integral(a: float, b: float) -> float:
    """Complete elliptic integral ``pi / (2 M(a, b))``.

    Uses the compiled kernel when available.

    Examples
    --------
    >>> round(elliptic_integral(1.0, 1.0), 15) == round(math.pi / 2, 15)
    True
    """
    a, b = float(a), float(b)
    _check(a, b)
    m, _, status = kernels.agm_limit(a, b, MAX_ITER)
    if status != kernels.OK:
        raise NoConvergence("AGM did not converge")
    return math.pi / (2.0 * m)
