"""Igusa invariants of genus-2 sextics and the chi_30 elliptic-subcover test.

A genus-2 curve has a degree-2 elliptic subcover exactly when the modular
form ``chi_30`` vanishes at its period matrix.  Two routes are provided:

- :func:`chi30_monopole`, the factored closed form on the family
  ``Y^2 = (X^3 + a X + g)^2 + 4``;
- :func:`chi30_generic`, obtained for any sextic by matching its absolute
  invariants against the normal form ``Y^2 = X^6 - s1 X^4 + s2 X^2 - 1``
  (curves with an extra involution) and eliminating ``(u, v) = (s1 s2, s1^3 + s2^3)``
  numerically.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.optimize import brentq

from .core import monopole_sextic_coeffs
from .curve import CurveFamily, ESIntegers, TETRAHEDRAL_MINUS, TETRAHEDRAL_PLUS, es_constraints
from .errors import DomainError, WeightTwoZero

__all__ = [
    "InvariantSet",
    "relative_invariants",
    "absolute_invariants",
    "invariants",
    "monopole_invariants",
    "monopole_closed_form_invariants",
    "normal_form_invariants",
    "chi30_inner",
    "chi30_monopole",
    "chi30_generic",
    "intersect_with_solutions",
]

_PAIRS = list(itertools.combinations(range(6), 2))


def _matchings(items):
    if not items:
        yield []
        return
    first = items[0]
    for k in items[1:]:
        rest = [x for x in items if x not in (first, k)]
        for m in _matchings(rest):
            yield [(first, k)] + m


_MATCHINGS = list(_matchings(list(range(6))))  # 15 perfect matchings
_TRIANGLES = [(A, tuple(x for x in range(6) if x not in A)) for A in itertools.combinations(range(6), 3) if 0 in A]  # 10 splits


@dataclass(frozen=True)
class InvariantSet:
    """Relative invariants ``j2, j4, j6, j10`` and absolute ``i1, i2, i3``.

    Under ``x -> lambda x`` applied to all roots ``j_w`` scales by
    ``lambda^(3w)``; the absolute invariants do not change.
    """

    j2: float
    j4: float
    j6: float
    j10: float
    i1: float = math.nan
    i2: float = math.nan
    i3: float = math.nan

    @property
    def relative(self) -> np.ndarray:
        return np.array([self.j2, self.j4, self.j6, self.j10])

    @property
    def absolute(self) -> np.ndarray:
        return np.array([self.i1, self.i2, self.i3])


def relative_invariants(roots, leading: float = 1.0) -> np.ndarray:
    """``(j2, j4, j6, j10)`` from root-difference sums over matchings and triangle splits.

    Raises
    ------
    DomainError
        If the roots are not six, or the invariants come out non-real
        (root set not closed under conjugation).
    """
    r = np.asarray(roots, dtype=complex)
    if r.shape != (6,):
        raise DomainError("need exactly six roots")
    d = np.zeros((6, 6), dtype=complex)
    for i, j in _PAIRS:
        d[i, j] = d[j, i] = (r[i] - r[j]) ** 2
    j2 = sum(d[m[0]] * d[m[1]] * d[m[2]] for m in _MATCHINGS)
    j4 = 0.0j
    j6 = 0.0j
    for A, B in _TRIANGLES:
        tri = d[A[0], A[1]] * d[A[1], A[2]] * d[A[2], A[0]] * d[B[0], B[1]] * d[B[1], B[2]] * d[B[2], B[0]]
        j4 += tri
        for s in itertools.permutations(B):
            j6 += tri * d[A[0], s[0]] * d[A[1], s[1]] * d[A[2], s[2]]
    j10 = np.prod([d[i, j] for i, j in _PAIRS])
    a0 = float(leading)
    vals = np.array([a0**2 * j2, a0**4 * j4, a0**6 * j6, a0**10 * j10])
    scale = max(1.0, float(np.max(np.abs(r)))) ** np.array([6, 12, 18, 30]) * np.abs(np.array([a0**2, a0**4, a0**6, a0**10]))
    if np.any(np.abs(vals.imag) > 1e-10 * np.maximum(scale, np.abs(vals))):
        raise DomainError("invariants are not real; roots must be closed under conjugation")
    return vals.real


def absolute_invariants(j) -> np.ndarray:
    """``i1 = 144 j4 / j2^2``, ``i2 = -1728 (j2 j4 - 3 j6) / j2^3``, ``i3 = 486 j10 / j2^5``.

    Raises
    ------
    WeightTwoZero
        If ``j2`` vanishes relative to the other invariants.
    """
    j2, j4, j6, j10 = (float(x) for x in j)
    ref = max(abs(j4) ** 0.5, abs(j6) ** (1 / 3), abs(j10) ** 0.2, 1e-300)
    if abs(j2) <= 1e-12 * ref:
        raise WeightTwoZero("j2 = 0; absolute invariants undefined")
    return np.array([144.0 * j4 / j2**2, -1728.0 * (j2 * j4 - 3.0 * j6) / j2**3, 486.0 * j10 / j2**5])


def invariants(roots, leading: float = 1.0) -> InvariantSet:
    """Relative and (when ``j2 != 0``) absolute invariants of a sextic."""
    j = relative_invariants(roots, leading)
    try:
        i = absolute_invariants(j)
    except WeightTwoZero:
        i = np.full(3, math.nan)
    return InvariantSet(*j, *i)


def monopole_invariants(a: float, g: float) -> InvariantSet:
    """Invariants of ``(X^3 + a X + g)^2 + 4`` from its roots."""
    return invariants(np.roots(monopole_sextic_coeffs(a, g)))


def monopole_closed_form_invariants(a: float, g: float) -> np.ndarray:
    """Polynomial closed forms of ``(j2, j4, j6, j10)`` on the monopole family."""
    a3, g2 = a**3, g * g
    j2 = -32 * a3 - 216 * g2 - 960
    j4 = 64 * a3 * a3 + 864 * a3 * g2 - 2496 * a3 + 2916 * g2 * g2 + 18144 * g2 + 25920
    j6 = (
        -157464 * g2**3 - 1749600 * g2**2 - 6397056 * g2 - 7672320 - 69984 * a3 * g2**2
        - 285120 * a3 * g2 - 10368 * a3 * a3 * g2 + 648960 * a3 - 3840 * a3 * a3 - 512 * a3**3
    )
    j10 = -47775744 - 23887872 * g2 - 884736 * a3 * g2 + 3538944 * a3 - 2985984 * g2 * g2 - 65536 * a3 * a3
    return np.array([j2, j4, j6, j10], dtype=float)


def normal_form_invariants(u: complex, v: complex) -> np.ndarray:
    """``(j2, j4, j6, j10)`` of ``X^6 - s1 X^4 + s2 X^2 - 1`` in terms of ``u = s1 s2``, ``v = s1^3 + s2^3``."""
    return np.array(
        [
            240 + 16 * u,
            48 * v + 4 * u * u + 1620 - 504 * u,
            119880 - 20664 * u + 96 * v - 424 * u * u + 160 * u * v + 24 * u**3,
            64 * (27 - 18 * u - u * u + 4 * v) ** 2,
        ]
    )


def chi30_inner(a: float, g: float) -> float:
    """The bracket whose square enters :func:`chi30_monopole`."""
    a3, g2 = a**3, g * g
    return (
        -8000000 + 1146000 * a3 - 53088 * a3 * a3 + 784 * a3**3 - 6480000 * g2 + 327240 * a3 * g2
        + 7128 * g2 * a3 * a3 - 1749600 * g2 * g2 - 10935 * g2 * g2 * a3 - 157464 * g2**3
    )


def chi30_monopole(a: float, g: float) -> float:
    """``g^2 a^6 (inner)^2``: vanishes iff the monopole curve has an elliptic involution quotient."""
    return g * g * a**6 * chi30_inner(a, g) ** 2


def chi30_generic(roots, leading: float = 1.0) -> float:
    """Elimination form of ``chi_30`` for an arbitrary sextic.

    The first absolute invariant fixes ``v`` as a quadratic in ``u``; the
    second then gives a cubic in ``u``.  For each of its roots ``u_k`` the
    mismatch ``e_k = i3(u_k, v_k) - i3`` is formed and the product of the
    three mismatches is returned.  It vanishes exactly when some normal
    form matches all three absolute invariants.

    Raises
    ------
    WeightTwoZero
        If ``j2 = 0``.
    """
    I1, I2, I3 = absolute_invariants(relative_invariants(roots, leading))
    j2 = np.array([240.0, 16.0])
    j2sq = npoly.polymul(j2, j2)
    j4 = (I1 / 144.0) * j2sq
    v = npoly.polysub(j4, [1620.0, -504.0, 4.0]) / 48.0
    j6 = npoly.polyadd(npoly.polyadd([119880.0, -20664.0, -424.0, 24.0], 96.0 * v), npoly.polymul([0.0, 160.0], v))
    cubic = npoly.polysub(-1728.0 * npoly.polysub(npoly.polymul(j2, j4), 3.0 * j6), I2 * npoly.polymul(j2, j2sq))
    us = npoly.polyroots(cubic)
    prod = 1.0 + 0.0j
    for uk in us:
        jn = normal_form_invariants(uk, npoly.polyval(uk, v))
        prod *= 486.0 * jn[3] / jn[0] ** 5 - I3
    return float(prod.real)


def _default_integers(g: float) -> ESIntegers:
    return TETRAHEDRAL_PLUS[2] if g > 0 else TETRAHEDRAL_MINUS[2]


def _constraint_g(a: float, g_lo: float, g_hi: float, z: ESIntegers) -> float:
    def f(g):
        return es_constraints(CurveFamily(a, g), z)[0].real

    lo, hi = min(g_lo, g_hi), max(g_lo, g_hi)
    pad = max(1e-6, 0.5 * (hi - lo))
    lo, hi = lo - pad, hi + pad
    return brentq(f, lo, hi, xtol=1e-14, maxiter=200)


def intersect_with_solutions(solutions, integers: ESIntegers | None = None, refine: bool = True, xtol: float = 1e-10) -> list:
    """Points where the solution curve meets ``chi_30 = 0``.

    ``chi_30`` is a square on the family, so zeros are located as sign
    changes of :func:`chi30_inner` along the polyline of solutions (the
    factors ``g^2`` and ``a^6`` only vanish at the ends of the family).
    Each bracket is refined by root-finding in ``a`` with ``g`` kept on the
    constraint curve.

    Parameters
    ----------
    solutions : sequence
        Objects with ``a`` and ``g`` attributes, or ``(a, g)`` pairs, ordered
        along the branch.
    integers : ESIntegers, optional
        Integers of the branch; by default chosen from the sign of ``g``.
    refine : bool
        If False, return the linear interpolation of each bracket.
    """
    pts = [(p.a, p.g) if hasattr(p, "a") else (float(p[0]), float(p[1])) for p in solutions]
    out = []
    for (a0, g0), (a1, g1) in zip(pts, pts[1:]):
        h0, h1 = chi30_inner(a0, g0), chi30_inner(a1, g1)
        if h0 == 0.0:
            out.append((a0, g0))
            continue
        if h0 * h1 > 0:
            continue
        s = h0 / (h0 - h1)
        a_lin, g_lin = a0 + s * (a1 - a0), g0 + s * (g1 - g0)
        if not refine or a0 == a1:
            out.append((a_lin, g_lin))
            continue
        z = integers or _default_integers(g0)

        def on_curve(a):
            t = (a - a0) / (a1 - a0)
            gp = g0 + t * (g1 - g0)
            return _constraint_g(a, gp - abs(g1 - g0), gp + abs(g1 - g0), z)

        ar = brentq(lambda a: chi30_inner(a, on_curve(a)), min(a0, a1), max(a0, a1), xtol=xtol)
        out.append((ar, on_curve(ar)))
    return out
