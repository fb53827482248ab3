"""Gauss hypergeometric function and the alpha = 0 closed forms.

Covers three things:
- :func:`hyp2f1` for real arguments ``z < 1``, aimed at the parameter sets
  ``(1/3, 2/3; 1)``, ``(1/3, 1/3; 1)``, ``(2/3, 2/3; 1)`` and ``(2/3, 1; 4/3)``;
- the eight sheet-1 integrals ``I_i, J_i`` of the trigonal curve
  ``w^3 = z^6 + b z^3 - 1`` at ``b = at^-3 - at^3``;
- the modular equation ``(2n - m)/(m + n) = F(t) / F(1 - t)`` with
  ``F = 2F1(1/3, 2/3; 1; .)`` and the resulting closed form for ``beta``.

Subscripts of ``I_i, J_i`` follow the differential ordering
``u1 = dz/w^2, u2 = z dz/w^2, u3 = z^2 dz/w^2, u4 = dz/w``; the identities
between them are most familiar in the ordering
``v1 = dz/w, v2 = dz/w^2, v3 = z dz/w^2, v4 = z^2 dz/w^2`` and are exposed in
that indexing by :meth:`ClosedFormSet.v_ordering`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, NoRoot
from .oracle import adaptive_gauss_legendre

__all__ = [
    "hyp2f1",
    "hyp2f1_complement",
    "hyp2f1_euler",
    "ClosedFormSet",
    "closed_forms",
    "modular_ratio",
    "solve_modular",
    "beta_cuberoot_closed_form",
    "beta_closed_form",
]

SERIES_MAX = 0.95
_C = 2.0 * math.pi / (3.0 * math.sqrt(3.0))


def _series(p: float, q: float, r: float, z: float, max_terms: int = 20000) -> float:
    term, total = 1.0, 1.0
    for n in range(max_terms):
        term *= (p + n) * (q + n) / ((r + n) * (n + 1.0)) * z
        total += term
        if abs(term) <= 1e-17 * abs(total):
            return total
    raise DomainError("hypergeometric series did not converge")


def _euler_setup(p: float, q: float, r: float) -> tuple[float, float, float]:
    # the integral representation needs r > q > 0; 2F1 is symmetric in (p, q)
    if r > q > 0:
        return p, q, r
    if r > p > 0:
        return q, p, r
    raise DomainError("Euler integral needs r > q > 0 for one of the upper parameters")


def hyp2f1_euler(p: float, q: float, r: float, z: float | None = None, *, s: float | None = None, tol: float = 1e-15) -> float:
    """Euler integral representation of ``2F1(p, q; r; z)``.

        F = Gamma(r) / (Gamma(q) Gamma(r - q)) int_0^1 x^(q-1) (1-x)^(r-q-1) (1 - z x)^(-p) dx

    Pass ``s = 1 - z`` instead of ``z`` to keep full accuracy for ``z`` near 1.
    Endpoint singularities are removed by ``x = u^(1/q)`` on ``[0, 1/2]`` and
    ``1 - x = v^(1/(r-q))`` on ``[1/2, 1]``.
    """
    p, q, r = _euler_setup(p, q, r)
    if s is None:
        if z is None:
            raise DomainError("give z or s = 1 - z")
        z, s = float(z), 1.0 - float(z)
    else:
        s = float(s)
        z = 1.0 - s
    if s <= 0:
        raise DomainError("Euler integral needs z < 1")
    e = r - q
    pref = math.gamma(r) / (math.gamma(q) * math.gamma(e))

    def base(x, one_minus_x):
        # 1 - z x = (1 - x) + s x, accurate when z is close to 1
        return (one_minus_x + s * x) ** (-p)

    u_max = 0.5**q
    v_max = 0.5**e

    def f_left(u):
        x = u ** (1.0 / q)
        return (1.0 / q) * (1.0 - x) ** (e - 1.0) * base(x, 1.0 - x)

    def f_right(v):
        omx = v ** (1.0 / e)
        x = 1.0 - omx
        return (1.0 / e) * x ** (q - 1.0) * base(x, omx)

    left, _ = adaptive_gauss_legendre(f_left, 0.0, u_max, tol)
    right, _ = adaptive_gauss_legendre(f_right, 0.0, v_max, tol)
    return float(pref * (left[0].real + right[0].real))


def hyp2f1(p: float, q: float, r: float, z: float) -> float:
    """Gauss hypergeometric function for real ``z < 1``.

    The series is summed directly for ``0 <= z <= 0.95``; negative arguments
    are first mapped into ``(0, 1)`` by the Pfaff transformation
    ``F(p,q;r;z) = (1-z)^(-p) F(p, r-q; r; z/(z-1))``; arguments above 0.95
    use the Euler integral.  No connection formula around ``z = 1`` is
    needed, which sidesteps the logarithmic case ``r = p + q``.

    Raises
    ------
    DomainError
        If ``z >= 1`` or ``r`` is a non-positive integer.
    """
    z = float(z)
    if r <= 0 and float(r).is_integer():
        raise DomainError("r must not be a non-positive integer")
    if not z < 1.0:
        raise DomainError("hyp2f1 is only provided for z < 1")
    if z == 0.0:
        return 1.0
    if z < 0.0:
        w = z / (z - 1.0)
        pre = (1.0 - z) ** (-p)
        if w <= SERIES_MAX:
            return pre * _series(p, r - q, r, w)
        # 1 - w = 1/(1 - z) exactly
        return pre * _hyp2f1_near_one(p, r - q, r, 1.0 / (1.0 - z))
    if z <= SERIES_MAX:
        return _series(p, q, r, z)
    return _hyp2f1_near_one(p, q, r, 1.0 - z)


def _hyp2f1_near_one(p: float, q: float, r: float, s: float) -> float:
    try:
        return hyp2f1_euler(p, q, r, s=s)
    except DomainError:
        # fall back on the other Pfaff form, which swaps the roles of p and q
        return hyp2f1_euler(q, p, r, s=s)


def hyp2f1_complement(p: float, q: float, r: float, s: float) -> float:
    """``2F1(p, q; r; 1 - s)`` evaluated without forming ``1 - s``."""
    s = float(s)
    if s <= 0:
        raise DomainError("need s > 0")
    if 1.0 - s <= SERIES_MAX:
        return hyp2f1(p, q, r, 1.0 - s)
    return _hyp2f1_near_one(p, q, r, s)


@dataclass(frozen=True)
class ClosedFormSet:
    """Closed forms of the sheet-1 integrals at ``alpha_tilde``.

    Attributes
    ----------
    alpha_tilde : float
        The real branchpoint ``at``; the other real branchpoint is ``-1/at``.
    t : float
        ``at^6 / (1 + at^6)``.
    b : float
        ``(1 - 2t) / sqrt(t (1 - t)) = at^-3 - at^3``.
    I, J : tuple of float
        ``I[i-1] = int_0^at u_i`` and ``J[i-1] = int_0^(-1/at) u_i``.
    """

    alpha_tilde: float
    t: float
    b: float
    I: tuple
    J: tuple

    @property
    def R(self) -> float:
        """``F(t) / F(1 - t) = I_2 / J_2 = -I_4 / J_4``."""
        return self.I[1] / self.J[1]

    def v_ordering(self) -> tuple[tuple, tuple]:
        """``(I, J)`` re-indexed to ``v1 = dz/w, v2 = dz/w^2, v3 = z dz/w^2, v4 = z^2 dz/w^2``.

        In this indexing the identities read ``I1/J1 = -I3/J3``,
        ``I2 + J2 = 0`` and ``I4 - J4 = I2``.
        """
        perm = (3, 0, 1, 2)
        return tuple(self.I[k] for k in perm), tuple(self.J[k] for k in perm)


def closed_forms(alpha_tilde: float) -> ClosedFormSet:
    """Evaluate the eight closed forms at ``alpha_tilde > 0``."""
    at = float(alpha_tilde)
    if not at > 0:
        raise DomainError("alpha_tilde must be positive")
    a6 = at**6
    t = a6 / (1.0 + a6)
    b = at**-3 - at**3
    K = 4.0 * math.pi**2 / (9.0 * math.gamma(2.0 / 3.0) ** 3)
    I1 = K * at / (1.0 + a6) ** (1.0 / 3.0)
    J1 = -I1
    I2 = _C * at**2 * hyp2f1(2 / 3, 2 / 3, 1.0, -a6)
    J2 = _C / at**2 * hyp2f1(2 / 3, 2 / 3, 1.0, -1.0 / a6)
    I3 = at**3 * hyp2f1(2 / 3, 1.0, 4 / 3, -a6)
    J3 = -(at**-3) * hyp2f1(2 / 3, 1.0, 4 / 3, -1.0 / a6)
    I4 = -_C * at * hyp2f1(1 / 3, 1 / 3, 1.0, -a6)
    J4 = _C / at * hyp2f1(1 / 3, 1 / 3, 1.0, -1.0 / a6)
    return ClosedFormSet(at, t, b, (I1, I2, I3, I4), (J1, J2, J3, J4))


def _F(t: float) -> float:
    return hyp2f1(1 / 3, 2 / 3, 1.0, t)


def modular_ratio(t: float) -> float:
    """``F(t) / F(1 - t)`` with ``F = 2F1(1/3, 2/3; 1; .)``; increasing in ``t``."""
    return hyp2f1_complement(1 / 3, 2 / 3, 1.0, 1.0 - t) / hyp2f1_complement(1 / 3, 2 / 3, 1.0, t)


def _ratio_from_s(s: float) -> float:
    # ratio at t = 1 - s, evaluated without cancellation
    return hyp2f1_complement(1 / 3, 2 / 3, 1.0, s) / hyp2f1(1 / 3, 2 / 3, 1.0, s)


def _parse_ratio(ratio) -> float:
    if isinstance(ratio, str):
        ratio = Fraction(ratio)
    return float(ratio)


def solve_modular(ratio, tol: float = 1e-15) -> tuple[float, float]:
    """Solve ``F(t) / F(1 - t) = ratio`` for ``t`` and return ``(t, b)``.

    Works with ``s = min(t, 1 - t)`` on a logarithmic scale so that roots
    close to ``t = 1`` keep full relative accuracy in ``1 - t`` (needed for
    ``b = (1 - 2t) / sqrt(t (1 - t))``).  Bracketing uses Brent's method,
    followed by a Newton polish.

    Raises
    ------
    NoRoot
        If ``ratio <= 0`` or the root lies outside ``s > 1e-300``.
    """
    R = _parse_ratio(ratio)
    if not R > 0:
        raise NoRoot("ratio must be positive")
    if R == 1.0:
        return 0.5, 0.0
    big = R if R > 1 else 1.0 / R  # solve for t > 1/2, i.e. small s = 1 - t

    def g(logs: float) -> float:
        return math.log(_ratio_from_s(math.exp(logs))) - math.log(big)

    lo, hi = -600.0, math.log(0.5)
    if g(hi) > 0 or g(lo) < 0:
        raise NoRoot(f"no root for ratio {R}")
    logs = brentq(g, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
    # Newton polish in log s with a central-difference derivative
    h = 1e-6
    for _ in range(2):
        d = (g(logs + h) - g(logs - h)) / (2 * h)
        if d == 0:
            break
        step = g(logs) / d
        logs -= step
        if abs(step) < tol:
            break
    s = math.exp(logs)
    t_big = 1.0 - s
    b_big = (1.0 - 2.0 * t_big) / math.sqrt(t_big * s)
    if R > 1:
        return t_big, b_big
    return s, -b_big


def beta_cuberoot_closed_form(n: int, m: int, t: float) -> float:
    """``beta^(1/3) = -(n + m) (2 pi / (3 sqrt 3)) a / (1 + a^6)^(1/3) F(t)``, ``a^6 = t/(1-t)``."""
    if not 0.0 < t < 1.0:
        raise DomainError("t must lie in (0, 1)")
    a6 = t / (1.0 - t)
    a = a6 ** (1.0 / 6.0)
    return -(n + m) * _C * a / (1.0 + a6) ** (1.0 / 3.0) * _F(t)


def beta_closed_form(n: int, m: int, t: float) -> float:
    """The cube of :func:`beta_cuberoot_closed_form`."""
    return beta_cuberoot_closed_form(n, m, t) ** 3
