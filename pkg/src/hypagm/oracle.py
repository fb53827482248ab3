"""Brute-force quadrature oracle.

Slow, independent evaluation of every integral that the AGM formulas
produce: straight-segment integrals of ``S(x) dx / y`` on hyperelliptic
curves, sheet-1 integrals on the trigonal curve ``w^3 = z^6 + b z^3 - 1``,
and the complete elliptic integral.

Branch convention
-----------------
For six roots grouped in pairs ``(r0, r1), (r2, r3), (r4, r5)`` and
``y^2 = L * prod(x - r_k)`` we use

    y(x) = c * prod_k (x - m_k) * sqrt(1 - d_k^2 / (x - m_k)^2),

with ``m_k`` and ``d_k`` the midpoint and half-difference of pair ``k`` and
``c = -i sqrt(-L)`` for negative real ``L`` (so ``y ~ -i x^3`` for the
Richelot normalisation ``y^2 + PQR = 0``), ``c = sqrt(L)`` otherwise.  Each
factor is analytic off the straight segment joining its pair, so the cuts
are exactly these three segments.  On a cut the value is the limit taken from
the direction ``exp(i pi / 4)``: from above on a horizontal cut and from
the right on a vertical one.  See :func:`paired_branch`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DomainError, PathThroughBranchpoint, ToleranceNotMet

__all__ = [
    "paired_branch",
    "adaptive_gauss_legendre",
    "SegmentIntegrand",
    "hyperelliptic_segment",
    "segment_integral",
    "trigonal_sheet1",
    "elliptic_quadrature",
]

_NE = np.exp(0.25j * np.pi)
_ROUND_FLOOR = 256 * np.finfo(float).eps
_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _GL_CACHE:
        _GL_CACHE[n] = np.polynomial.legendre.leggauss(n)
    return _GL_CACHE[n]


def _lead_factor(lead: complex) -> complex:
    lead = complex(lead)
    if lead.imag == 0.0 and lead.real < 0.0:
        return -1j * np.sqrt(-lead.real)
    return complex(np.sqrt(lead))


def paired_branch(x, roots, lead: complex = -1.0, nudge: float = 1e-13):
    """Evaluate ``y`` in the paired-cut convention.

    Parameters
    ----------
    x : array_like
        Evaluation points.
    roots : array_like
        Six roots ordered as three pairs ``(r0, r1), (r2, r3), (r4, r5)``.
    lead : complex
        Leading coefficient ``L`` of ``y^2 = L prod(x - r_k)``.
    nudge : float
        Relative size of the north-east displacement used to pick the bank
        on a cut.  Values on a cut are accurate to about ``nudge`` relative.
    """
    r = np.asarray(roots, dtype=complex)
    x = np.asarray(x, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(r))))
    xs = x + nudge * scale * _NE
    val = np.full(xs.shape, _lead_factor(lead), dtype=complex)
    for k in range(0, r.size, 2):
        m = 0.5 * (r[k] + r[k + 1])
        d = 0.5 * (r[k + 1] - r[k])
        z = xs - m
        val = val * z * np.sqrt(1.0 - (d * d) / (z * z))
    return val


def adaptive_gauss_legendre(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    tol: float = 1e-13,
    order: int = 20,
    max_intervals: int = 4000,
) -> tuple[np.ndarray, float]:
    """Globally adaptive Gauss-Legendre quadrature.

    ``f`` maps a 1-D array of nodes to an array of shape ``(k, nodes)`` or
    ``(nodes,)``; all ``k`` components are integrated together.  An interval
    is accepted when the ``order``-point rule on it agrees with the sum over
    its two halves to within its length share of ``tol * max(1, |I|)``.

    Returns
    -------
    value : ndarray
        Integral estimate (shape ``(k,)`` or scalar array).
    err : float
        Sum of the accepted local error estimates.
    """
    xg, wg = _gl(order)

    def rule(a: float, b: float) -> np.ndarray:
        h = 0.5 * (b - a)
        vals = np.atleast_2d(f(a + h * (xg + 1.0)))
        return h * (vals @ wg)

    total_len = hi - lo
    if total_len == 0.0:
        v = np.atleast_2d(f(np.array([lo])))
        return np.zeros(v.shape[0], dtype=complex), 0.0
    whole = rule(lo, hi)
    stack = [(lo, hi, whole)]
    acc = np.zeros_like(whole)
    err = 0.0
    scale = max(1.0, float(np.max(np.abs(whole))))
    n_int = 0
    while stack:
        a, b, est = stack.pop()
        mid = 0.5 * (a + b)
        left, right = rule(a, mid), rule(mid, b)
        refined = left + right
        diff = float(np.max(np.abs(refined - est)))
        # local share of the budget, floored at the rounding level of the rule itself
        share = max(tol * scale * (b - a) / total_len, _ROUND_FLOOR * float(np.max(np.abs(left) + np.abs(right))))
        n_int += 1
        if diff <= share or (b - a) < 1e-14 * total_len:
            acc = acc + refined
            err += diff
            continue
        if n_int > max_intervals:
            raise ToleranceNotMet(f"adaptive quadrature exceeded {max_intervals} intervals (err ~ {diff:.2e})")
        stack.append((a, mid, left))
        stack.append((mid, b, right))
    return acc, err


@dataclass(frozen=True)
class SegmentIntegrand:
    """Data of a straight-segment hyperelliptic integral.

    Attributes
    ----------
    roots : tuple of complex
        The six branchpoints, ordered in pairs for the default anchor.
    numerators : tuple of tuple of float
        Ascending coefficients of one or more numerator polynomials.
    p, q : complex
        Segment endpoints.
    lead : complex
        Leading coefficient of the sextic.
    anchor : tuple (point, value) or None
        A point on the segment and the value of ``y`` there.  ``None`` uses
        :func:`paired_branch` at the midpoint.
    """

    roots: tuple
    numerators: tuple
    p: complex
    q: complex
    lead: complex = -1.0
    anchor: tuple | None = None


def _continuous_root_product(base: complex, step: np.ndarray, roots: np.ndarray, mid: complex) -> np.ndarray:
    """``prod sqrt(x - r)`` at ``x = base + step``, continuous along a segment through ``mid``.

    ``x - r`` is formed as ``(base - r) + step`` so that it keeps full relative
    accuracy when ``base`` is itself a root.
    """
    val = np.ones(np.shape(step), dtype=complex)
    for r in roots:
        ref = mid - r
        phi = np.angle(ref)
        rot = np.exp(-1j * phi)
        val = val * np.exp(0.5j * phi) * np.sqrt(((base - r) + step) * rot)
    return val


def hyperelliptic_segment(s: SegmentIntegrand, tol: float = 1e-13, margin: float = 1e-9):
    """Integrate ``S(x) dx / y`` along the straight segment from ``p`` to ``q``.

    ``y`` is continued along the segment from the anchor.  Square-root
    singularities at branchpoint endpoints are removed by the substitutions
    ``s = tau^2`` on the first half of the segment and ``1 - s = tau^2`` on the
    second, followed by adaptive Gauss-Legendre quadrature in ``tau``.

    Returns
    -------
    value : complex or ndarray
        One value per numerator (a scalar if a single numerator was given).
    err : float
        Error estimate.

    Raises
    ------
    PathThroughBranchpoint
        If a branchpoint lies in the interior of the segment.
    """
    roots = np.asarray(s.roots, dtype=complex)
    p, q = complex(s.p), complex(s.q)
    nums = np.atleast_2d(np.asarray(s.numerators, dtype=complex))
    single = np.asarray(s.numerators).ndim == 1
    if p == q:
        z = np.zeros(nums.shape[0], dtype=complex)
        return (z[0] if single else z), 0.0
    L = q - p
    for r in roots:
        if min(abs(r - p), abs(r - q)) <= margin * abs(L):
            continue  # endpoint branchpoints are handled by the substitution
        sr = (r - p) / L
        if 0.0 < sr.real < 1.0 and abs(sr.imag) < margin:
            raise PathThroughBranchpoint(f"branchpoint {r} lies on segment [{p}, {q}]")
    mid = 0.5 * (p + q)
    lead_c = _lead_factor(s.lead)
    if s.anchor is None:
        a_pt, a_val = mid, complex(paired_branch(mid, roots, s.lead))
    else:
        a_pt, a_val = complex(s.anchor[0]), complex(s.anchor[1])
    y_a = lead_c * _continuous_root_product(a_pt, np.zeros(1), roots, mid)[0]
    sign = 1.0 if abs(y_a - a_val) <= abs(y_a + a_val) else -1.0

    def integrand_half(second: bool):
        def f(tau):
            if second:
                base, step = q, -(tau * tau) * L
            else:
                base, step = p, (tau * tau) * L
            x = base + step
            y = sign * lead_c * _continuous_root_product(base, step, roots, mid)
            num = np.array([npoly.polyval(x, c) for c in nums])
            return num / y * (L * 2.0 * tau)

        return f

    tmax = np.sqrt(0.5)
    v1, e1 = adaptive_gauss_legendre(integrand_half(False), 0.0, tmax, tol)
    v2, e2 = adaptive_gauss_legendre(integrand_half(True), 0.0, tmax, tol)
    val = v1 + v2
    return (val[0] if single else val), e1 + e2


def segment_integral(roots, numerator, p, q, lead=-1.0, anchor=None, tol=1e-13) -> complex:
    """Convenience wrapper returning only the value of :func:`hyperelliptic_segment`."""
    s = SegmentIntegrand(tuple(np.asarray(roots, dtype=complex)), tuple(np.asarray(numerator, dtype=float)), p, q, lead, anchor)
    return hyperelliptic_segment(s, tol)[0]


def _trigonal_f(z: np.ndarray, b: float) -> np.ndarray:
    z3 = z**3
    return z3 * z3 + b * z3 - 1.0


def _trigonal_branchpoints(b: float) -> np.ndarray:
    rho = np.exp(2j * np.pi / 3)
    out = []
    for c in np.roots([1.0, b, -1.0]):  # z^3 = c
        base = np.abs(c) ** (1.0 / 3.0) * np.exp(1j * np.angle(complex(c)) / 3.0)
        out.extend(base * rho**k for k in range(3))
    return np.array(out, dtype=complex)


def trigonal_sheet1(k: int, m: int, upper: complex, b: float, tol: float = 1e-12, grid: int = 4001) -> complex:
    """``int_0^upper z^k dz / w^m`` on sheet 1 of ``w^3 = z^6 + b z^3 - 1``.

    Sheet 1 is the sheet on which ``w`` is real at ``z = 0`` (there
    ``w = -1``).  ``w`` is continued along the straight path by choosing, on
    a fine grid, the cube root nearest to the previous value; quadrature
    nodes then take the cube root nearest to the interpolated tracked value.
    If ``upper`` is a branchpoint the endpoint singularity ``(1 - s)^(-m/3)``
    is removed by ``1 - s = tau^3`` and ``w / tau`` is tracked instead of
    ``w``, which stays bounded away from zero.

    Raises
    ------
    DomainError
        For ``k`` outside ``0..2`` or ``m`` outside ``1..2``.
    """
    if k not in (0, 1, 2) or m not in (1, 2):
        raise DomainError("trigonal oracle supports k in 0..2 and m in 1..2")
    upper = complex(upper)
    if upper == 0:
        return 0j
    rho = np.exp(2j * np.pi / 3)
    rots = np.array([1.0, rho, rho * rho])
    lam = _trigonal_branchpoints(b)
    dist = np.abs(lam - upper)
    end_is_bp = float(dist.min()) < 1e-10 * max(1.0, abs(upper))
    others = np.delete(lam, int(np.argmin(dist))) if end_is_bp else lam

    def scaled_f(tau: np.ndarray) -> np.ndarray:
        # f / tau^3 when the endpoint is a branchpoint (z - upper = -tau^3 upper), f otherwise
        if end_is_bp:
            z = (1.0 - tau**3) * upper
            val = -upper * np.ones_like(z)
            for lk in others:
                val = val * (z - lk)
            return val
        return _trigonal_f((1.0 - tau) * upper, b)

    def principal_cbrt(v: np.ndarray) -> np.ndarray:
        return np.abs(v) ** (1.0 / 3.0) * np.exp(1j * np.angle(v) / 3.0)

    # one sequential tracking pass from z = 0 (tau = 1) towards the endpoint (tau = 0)
    tg = np.linspace(1.0, 0.0, grid)
    base = principal_cbrt(scaled_f(tg))
    tracked = np.empty_like(base)
    prev = -1.0 + 0j  # sheet 1: w(0) = -1
    for i in range(tg.size):
        cands = base[i] * rots
        prev = cands[np.argmin(np.abs(cands - prev))]
        tracked[i] = prev
    tg_up, tr_up = tg[::-1], tracked[::-1]

    def w_of(tau: np.ndarray) -> np.ndarray:
        guess = np.interp(tau, tg_up, tr_up.real) + 1j * np.interp(tau, tg_up, tr_up.imag)
        cands = principal_cbrt(scaled_f(tau))[None, :] * rots[:, None]
        pick = np.argmin(np.abs(cands - guess[None, :]), axis=0)
        v = cands[pick, np.arange(tau.size)]
        return v * tau if end_is_bp else v

    def f(tau):
        if end_is_bp:
            s_par, ds = 1.0 - tau**3, 3.0 * tau**2
            z = s_par * upper
            v = w_of(tau) / tau  # w / tau; combine powers of tau analytically
            return z**k / v**m * tau ** (2 - m) * 3.0 * upper
        z = (1.0 - tau) * upper
        return z**k / w_of(tau) ** m * upper

    val, _ = adaptive_gauss_legendre(f, 0.0, 1.0, tol, order=30)
    return complex(val[0])


def elliptic_quadrature(a: float, b: float, tol: float = 1e-15) -> float:
    """``int_0^{pi/2} dphi / sqrt(a^2 cos^2 phi + b^2 sin^2 phi)`` by adaptive Gauss-Legendre."""
    if a <= 0 or b <= 0:
        raise DomainError("elliptic quadrature needs a, b > 0")

    def f(phi):
        c, s = np.cos(phi), np.sin(phi)
        return 1.0 / np.sqrt(a * a * c * c + b * b * s * s)

    val, _ = adaptive_gauss_legendre(f, 0.0, 0.5 * np.pi, tol)
    return float(val[0].real)
