"""Polynomial primitives shared by the numeric modules.

Quadratic factors, the Richelot bracket, the coefficient determinant of a
triple of quadratics, and the branchpoints of the monopole quotient curve
``y^2 = (x^3 + a x + g)^2 + 4``.

Polynomials are stored as ascending coefficient arrays ``c[0] + c[1] x + ...``
(the :mod:`numpy.polynomial.polynomial` convention) unless stated otherwise.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DomainError, SingularCurve

__all__ = [
    "MonicQuadratic",
    "QuadTriple",
    "bracket",
    "delta_det",
    "uvw_polys",
    "fundamental_identity_residual",
    "monopole_sextic_coeffs",
    "monopole_sextic_roots",
    "normalized_discriminant",
    "monopole_closed_form_roots",
]

_REAL_TOL = 1e-9


def _check_finite(*zs: complex) -> None:
    for z in zs:
        if not (np.isfinite(np.real(z)) and np.isfinite(np.imag(z))):
            raise DomainError(f"non-finite scalar {z!r}")


@dataclass(frozen=True)
class MonicQuadratic:
    """Monic quadratic ``(x - r1)(x - r2)`` with real coefficients.

    Either both roots are real or ``r2 == conj(r1)``.
    """

    r1: complex
    r2: complex

    def __post_init__(self) -> None:
        _check_finite(self.r1, self.r2)
        r1, r2 = complex(self.r1), complex(self.r2)
        scale = max(1.0, abs(r1), abs(r2))
        both_real = abs(r1.imag) <= _REAL_TOL * scale and abs(r2.imag) <= _REAL_TOL * scale
        conjugate = abs(r1 - r2.conjugate()) <= _REAL_TOL * scale
        if not (both_real or conjugate):
            raise DomainError("quadratic factor must have real or conjugate roots")

    @property
    def coeffs(self) -> np.ndarray:
        """Real ascending coefficients ``(r1 r2, -(r1 + r2), 1)``."""
        r1, r2 = complex(self.r1), complex(self.r2)
        return np.array([(r1 * r2).real, -(r1 + r2).real, 1.0])

    def __call__(self, x):
        return (x - self.r1) * (x - self.r2)


@dataclass(frozen=True)
class QuadTriple:
    """Three monic quadratics ``P, Q, R`` defining ``y^2 + P Q R = 0``."""

    P: MonicQuadratic
    Q: MonicQuadratic
    R: MonicQuadratic

    def __post_init__(self) -> None:
        roots = self.roots()
        scale = max(1.0, float(np.max(np.abs(roots))))
        for i, j in itertools.combinations(range(6), 2):
            if abs(roots[i] - roots[j]) <= 1e-14 * scale:
                raise SingularCurve("repeated branchpoint in quadratic triple")

    @classmethod
    def from_roots(cls, roots) -> "QuadTriple":
        """Build from six roots ordered ``(a, a', b, b', c, c')``."""
        r = [complex(z) for z in roots]
        if len(r) != 6:
            raise DomainError("expected six roots")
        return cls(MonicQuadratic(r[0], r[1]), MonicQuadratic(r[2], r[3]), MonicQuadratic(r[4], r[5]))

    def roots(self) -> np.ndarray:
        return np.array([self.P.r1, self.P.r2, self.Q.r1, self.Q.r2, self.R.r1, self.R.r2], dtype=complex)

    def is_real(self) -> bool:
        r = self.roots()
        return bool(np.all(np.abs(r.imag) <= _REAL_TOL * max(1.0, np.max(np.abs(r)))))

    def coeff_matrix(self) -> np.ndarray:
        return np.vstack([self.P.coeffs, self.Q.coeffs, self.R.coeffs])


def bracket(f, g) -> np.ndarray:
    """Richelot bracket ``[f, g] = f' g - g' f``.

    Parameters
    ----------
    f, g : array_like
        Ascending coefficients of polynomials of degree at most two.

    Returns
    -------
    ndarray
        Ascending coefficients of the bracket, padded to length 3.  For
        quadratics the cubic terms cancel, so the result has degree at most two.
    """
    f = np.asarray(getattr(f, "coeffs", f), dtype=float)
    g = np.asarray(getattr(g, "coeffs", g), dtype=float)
    out = npoly.polysub(npoly.polymul(npoly.polyder(f), g), npoly.polymul(npoly.polyder(g), f))
    out = np.atleast_1d(out)
    res = np.zeros(max(3, out.size))
    res[: out.size] = out
    return res[:3] if np.allclose(res[3:], 0.0) else res


def delta_det(t: QuadTriple) -> float:
    """Determinant of the coefficients of ``P, Q, R`` in the basis ``(1, x, x^2)``."""
    return float(np.linalg.det(t.coeff_matrix()))


def uvw_polys(t: QuadTriple) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The dual triple ``U = [Q, R], V = [R, P], W = [P, Q]``."""
    return bracket(t.Q, t.R), bracket(t.R, t.P), bracket(t.P, t.Q)


def fundamental_identity_residual(t: QuadTriple, x: complex, z: complex) -> float:
    """Normalised residual of ``P(x)U(z) + Q(x)V(z) + R(x)W(z) + (x - z)^2 Delta``.

    The identity is exact, so the residual measures rounding only.
    """
    U, V, W = uvw_polys(t)
    D = delta_det(t)
    terms = [
        t.P(x) * npoly.polyval(z, U),
        t.Q(x) * npoly.polyval(z, V),
        t.R(x) * npoly.polyval(z, W),
        (x - z) ** 2 * D,
    ]
    scale = max(abs(v) for v in terms)
    if scale == 0.0:
        return 0.0
    return float(abs(sum(terms)) / scale)


def monopole_sextic_coeffs(a: float, g: float) -> np.ndarray:
    """Descending coefficients of ``(x^3 + a x + g)^2 + 4``."""
    return np.array([1.0, 0.0, 2 * a, 2 * g, a * a, 2 * a * g, g * g + 4.0])


def normalized_discriminant(roots) -> float:
    """``prod_{i<j} |r_i - r_j|^2`` divided by ``scale^30``, with ``scale = max(1, max|r|)``.

    Homogeneous of degree zero under root scaling, so a fixed threshold is
    meaningful for any size of coefficients.
    """
    r = np.asarray(roots, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(r))))
    d = np.array([abs(r[i] - r[j]) / scale for i, j in itertools.combinations(range(r.size), 2)])
    return float(np.prod(d * d))


def monopole_sextic_roots(a: float, g: float, singular_tol: float = 1e-10) -> np.ndarray:
    """Branchpoints ``B1..B6`` of the monopole quotient curve.

    Roots come from the companion matrix and are labelled operationally:
    the three roots in the lower half plane, sorted by real part, are
    ``B4, B5, B6``; their conjugates are ``B3, B2, B1``.  The pairing
    ``B6 = conj(B1)``, ``B5 = conj(B2)``, ``B4 = conj(B3)`` then holds exactly.

    Raises
    ------
    SingularCurve
        If the normalised discriminant is below ``singular_tol``.
    """
    _check_finite(a, g)
    coeffs = monopole_sextic_coeffs(a, g)
    roots = np.roots(coeffs)
    if normalized_discriminant(roots) < singular_tol:
        raise SingularCurve(f"monopole curve is singular at (a, g) = ({a}, {g})")
    # (x^3 + a x + g)^2 + 4 > 0 on the real line, so no root is real.
    lower = sorted((z for z in roots if z.imag < 0), key=lambda z: z.real)
    if len(lower) != 3:
        raise SingularCurve("could not split roots into conjugate pairs")
    B4, B5, B6 = lower
    B3, B2, B1 = B4.conjugate(), B5.conjugate(), B6.conjugate()
    return np.array([B1, B2, B3, B4, B5, B6], dtype=complex)


def monopole_closed_form_roots(a: float, g: float) -> np.ndarray:
    """Cardano-type closed forms for the six branchpoints (cross-check only).

    With ``delta_pm = -108 (g +- 2i) + 12 sqrt(12 a^3 + 81 (g +- 2i)^2)`` and
    ``u = rho^k delta^{1/3}``, the roots of ``x^3 + a x + g = -+ 2i`` are
    ``u / 6 - 2 a / u``.  The returned order follows the labelling
    ``(B1..B6) = ((-, rho), (+, rho), (-, 1), (+, 1), (-, rho^2), (+, rho^2))``,
    which agrees with :func:`monopole_sextic_roots` for ``a, g > 0``; for other
    signs the branch choices permute the labels.
    """
    if a == 0:
        raise DomainError("closed forms degenerate at a = 0")
    rho = cmath.exp(2j * cmath.pi / 3)
    out = []
    for sgn, k in ((-1, 1), (1, 1), (-1, 0), (1, 0), (-1, 2), (1, 2)):
        s = g + sgn * 2j
        delta = -108 * s + 12 * cmath.sqrt(12 * a**3 + 81 * s * s)
        u = rho**k * delta ** (1 / 3)
        out.append(u / 6 - 2 * a / u)
    return np.array(out, dtype=complex)
