"""Richelot (Bost-Mestre) AGM for genus-2 curves with six real branchpoints.

The curve is ``y^2 + P(x) Q(x) R(x) = 0`` with ``P = (x-a)(x-a')``,
``Q = (x-b)(x-b')``, ``R = (x-c)(x-c')`` and ``a<a'<b<b'<c<c'``.  Each step
replaces the roots by those of the bracket triple ``[Q,R], [R,P], [P,Q]``.
The pairs shrink to limits ``alpha, beta, gamma``, and the integrals of
``S(x) dx / y`` between paired roots become

    I(a, a') = pi T S(alpha) / ((alpha - beta)(alpha - gamma))   (and cyclically),

with ``T`` the product of the step factors ``t_n``.

Branch of ``y``: the paired-cut convention of :mod:`hypagm.oracle`
(``y ~ -i x^3``, cuts ``[a,a'], [b,b'], [c,c']``, values on a cut taken from
above).  On ``(a,a')`` and ``(c,c')`` this is ``+sqrt(-PQR)``, on ``(b,b')``
it is ``-sqrt(-PQR)``; the sum ``I(a,a') + I(b,b') + I(c,c')`` then vanishes.
On the gaps ``(a',b)`` and ``(b',c)`` it is ``-i sqrt(PQR)`` and ``+i sqrt(PQR)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

from . import kernels
from .core import QuadTriple, uvw_polys
from .errors import DegenerateMap, DomainError, NoConvergence, OrderingViolation
from .oracle import paired_branch

__all__ = [
    "LABELS",
    "RichelotState",
    "IntegralTable",
    "uvw_roots",
    "richelot_step",
    "run_agm",
    "canonical_integrals",
    "MobiusRecord",
    "mobius_relabel",
    "gap_integrals",
    "consecutive_integrals",
    "real_integral_table",
    "correspondence_images",
]

#: Labels of the seven table entries, in a fixed order.
LABELS = ("aa'", "bb'", "cc'", "ab", "a'b'", "bc", "b'c'")

#: Index pairs into ``(a, a', b, b', c, c')`` for each label.
LABEL_INDEX = {"aa'": (0, 1), "bb'": (2, 3), "cc'": (4, 5), "ab": (0, 2), "a'b'": (1, 3), "bc": (2, 4), "b'c'": (3, 5)}

_ORDER_TOL = 1e-13


def _as_roots(t) -> np.ndarray:
    if isinstance(t, QuadTriple):
        return t.roots()
    r = np.asarray(t)
    if r.shape != (6,):
        raise DomainError("expected six roots (a, a', b, b', c, c')")
    return r


def _real_ordered(t) -> np.ndarray:
    r = _as_roots(t)
    if np.iscomplexobj(r):
        if np.max(np.abs(r.imag)) > 1e-12 * max(1.0, float(np.max(np.abs(r)))):
            raise DomainError("real-branchpoint AGM needs real roots")
        r = r.real
    r = np.asarray(r, dtype=float)
    if not np.all(np.diff(r) > 0):
        raise DomainError("roots must be distinct and ordered a<a'<b<b'<c<c'")
    return r


def _poly_eval(S, x):
    return npoly.polyval(x, np.asarray(S, dtype=complex))


@dataclass
class RichelotState:
    """Roots at step ``n`` with the running product of the ``t_k``."""

    roots: tuple
    t_product: float = 1.0
    step: int = 0
    history: list = field(default_factory=list)


@dataclass
class IntegralTable:
    """The seven branchpoint-to-branchpoint integrals for one numerator ``S``.

    Attributes
    ----------
    entries : dict
        Maps each label in :data:`LABELS` to a complex value.
    numerator : tuple
        Ascending coefficients of ``S``.
    roots : tuple
        The six roots ``(a, a', b, b', c, c')`` the table refers to.
    """

    entries: dict
    numerator: tuple
    roots: tuple = ()

    def __getitem__(self, key: str) -> complex:
        return self.entries[key]

    def as_array(self) -> np.ndarray:
        return np.array([self.entries[k] for k in LABELS], dtype=complex)


def uvw_roots(r):
    """Roots of the bracket triple and the step factor.

    Parameters
    ----------
    r : array_like
        ``(a, a', b, b', c, c')``, real or complex.

    Returns
    -------
    roots : tuple
        ``(u, u', v, v', w, w')``, the roots of ``[Q,R], [R,P], [P,Q]``.
    delta : complex
        The coefficient determinant.
    t : complex
        ``2 sqrt(Delta) / sqrt((b+b'-a-a')(c+c'-b-b')(c+c'-a-a'))`` (principal roots).
    """
    a, a1, b, b1, c, c1 = (complex(x) for x in r)
    A = np.sqrt((b - c) * (b - c1) * (b1 - c) * (b1 - c1))
    B = np.sqrt((c - a) * (c - a1) * (c1 - a) * (c1 - a1))
    C = np.sqrt((a - b) * (a - b1) * (a1 - b) * (a1 - b1))
    dab, dbc, dac = b + b1 - a - a1, c + c1 - b - b1, c + c1 - a - a1
    u, u1 = (c * c1 - b * b1 - A) / dbc, (c * c1 - b * b1 + A) / dbc
    v, v1 = (c * c1 - a * a1 - B) / dac, (c * c1 - a * a1 + B) / dac
    w, w1 = (b * b1 - a * a1 - C) / dab, (b * b1 - a * a1 + C) / dab
    D = a * a1 * ((c + c1) - (b + b1)) - b * b1 * ((c + c1) - (a + a1)) + c * c1 * ((b + b1) - (a + a1))
    t = 2.0 * np.sqrt(complex(D)) / np.sqrt(complex(dab * dbc * dac))
    return (u, u1, v, v1, w, w1), D, t


def richelot_step(s: RichelotState) -> RichelotState:
    """One real Richelot step.

    The new roots ``(v, w, w', u, u', v')`` interlace the old ones as
    ``a<=v<=w<=a'<=b<=w'<=u<=b'<=c<=u'<=v'<=c'``.

    Raises
    ------
    OrderingViolation
        If the interlacing fails beyond a relative ``1e-13`` slack.
    """
    r = _real_ordered(np.asarray(s.roots, dtype=float))
    (u, u1, v, v1, w, w1), D, t = uvw_roots(r)
    new = np.array([v, w, w1, u, u1, v1])
    if np.max(np.abs(new.imag)) > 1e-12 * max(1.0, float(np.max(np.abs(r)))):
        raise OrderingViolation("non-real Richelot image roots")
    new = new.real
    a, a1, b, b1, c, c1 = r
    chain = [a, new[0], new[1], a1, b, new[2], new[3], b1, c, new[4], new[5], c1]
    slack = _ORDER_TOL * max(1.0, float(np.max(np.abs(r))))
    if any(chain[i] > chain[i + 1] + slack for i in range(len(chain) - 1)):
        raise OrderingViolation(f"interlacing broken at step {s.step}: {chain}")
    return RichelotState(tuple(new), s.t_product * float(np.real(t)), s.step + 1, s.history + [tuple(r)])


def run_agm(t, tol: float = 1e-14, maxit: int = 40):
    """Iterate to convergence.

    Returns
    -------
    limits : tuple of float
        ``(alpha, beta, gamma)``.
    T : float
        Product of the step factors.
    steps : int
        Number of Richelot steps.

    Raises
    ------
    NoConvergence, OrderingViolation
    """
    r = _real_ordered(t)
    al, be, ga, T, steps, status = kernels.richelot_run(tuple(float(x) for x in r), tol, maxit)
    if status == kernels.NO_CONVERGENCE:
        raise NoConvergence(f"Richelot AGM did not converge in {maxit} steps")
    if status in (kernels.ORDERING, kernels.RADICAND):
        raise OrderingViolation("Richelot iteration left the real ordered regime")
    return (al, be, ga), T, steps


def canonical_integrals(t, S=(1.0,), tol: float = 1e-14):
    """``I(a,a'), I(b,b'), I(c,c')`` for the numerator ``S`` (ascending coefficients)."""
    (al, be, ga), T, _ = run_agm(t, tol)
    k = math.pi * T
    return (
        complex(k * _poly_eval(S, al) / ((al - be) * (al - ga))),
        complex(k * _poly_eval(S, be) / ((be - al) * (be - ga))),
        complex(k * _poly_eval(S, ga) / ((ga - al) * (ga - be))),
    )


@dataclass(frozen=True)
class MobiusRecord:
    """The map ``f(x) = 1 / (2x - s)``, ``s = a + a'``, and its effect on the curve.

    Attributes
    ----------
    s : float
        ``a + a'``.
    images : tuple
        ``f`` of ``(a, a', b, b', c, c')``.
    sorted_images : tuple
        Image roots in increasing order:
        ``f(a) < f(c') < f(c) < f(b') < f(b) < f(a')``.
    prod_images : float
        Product of all six images (negative).
    """

    s: float
    images: tuple
    sorted_images: tuple
    prod_images: float

    def forward(self, x):
        return 1.0 / (2.0 * np.asarray(x) - self.s)

    def inverse(self, X):
        return 0.5 * (1.0 / np.asarray(X) + self.s)


def mobius_relabel(t) -> MobiusRecord:
    """Apply ``x -> 1/(2x - a - a')``.

    Under this map ``S(x) dx / y`` becomes, up to a sign fixed pointwise in
    :func:`gap_integrals`, ``sqrt(prod f(r_k)) (-4 c0 X - 2 c1 (1 + s X)) dX / Y``
    for ``S = c0 + c1 x``, where ``Y^2 + prod (X - f(r_k)) = 0``.

    Raises
    ------
    DegenerateMap
        If ``a + a'`` equals twice a root.
    """
    r = _real_ordered(t)
    s = float(r[0] + r[1])
    den = 2.0 * r - s
    if np.any(np.abs(den) <= 1e-300):
        raise DegenerateMap("a + a' coincides with twice a root")
    im = 1.0 / den
    order = np.array([0, 5, 4, 3, 2, 1])
    srt = im[order]
    if not np.all(np.diff(srt) > 0):
        raise DegenerateMap("image roots not in the expected order")
    return MobiusRecord(s, tuple(im), tuple(srt), float(np.prod(im)))


def _transform_numerator(S, s: float) -> np.ndarray:
    c = np.zeros(2, dtype=complex)
    S = np.asarray(S, dtype=complex)
    c[: min(2, S.size)] = S[:2]
    if S.size > 2 and np.any(S[2:] != 0):
        raise DomainError("numerator must have degree <= 1")
    # -4 c0 X - 2 c1 (1 + s X) in ascending coefficients
    return np.array([-2.0 * c[1], -4.0 * c[0] - 2.0 * c[1] * s])


def gap_integrals(t, S=(1.0,), tol: float = 1e-14):
    """``I(a', b)`` and ``I(b', c)`` via the Moebius relabelling.

    ``(a', b)`` maps onto the third image pair ``(f(b), f(a'))`` and
    ``(b', c)`` onto the second image pair ``(f(c), f(b'))``; both become
    canonical integrals of the image curve.  The overall sign of the pulled
    back differential is fixed by comparing the two integrands at one
    interior point of each gap.
    """
    r = _real_ordered(t)
    rec = mobius_relabel(r)
    Sx = np.asarray(S, dtype=complex)
    num_X = _transform_numerator(Sx, rec.s)
    img = np.asarray(rec.sorted_images)
    _, Ib_img, Ic_img = canonical_integrals(img, num_X, tol)
    k = np.sqrt(complex(rec.prod_images))
    out = []
    for (i, j), I_img in (((1, 2), Ic_img), ((3, 4), Ib_img)):
        x0 = 0.5 * (r[i] + r[j])
        X0 = float(rec.forward(x0))
        dXdx = -2.0 * X0 * X0
        lhs = _poly_eval(Sx, x0) / paired_branch(x0, r)  # integrand in x per unit dx
        rhs = k * _poly_eval(num_X, X0) / paired_branch(X0, img) * dXdx
        sign = 1.0 if abs(lhs - rhs) <= abs(lhs + rhs) else -1.0
        # orientation: x from left to right maps to X from right to left
        out.append(-sign * k * I_img)
    return complex(out[0]), complex(out[1])


def consecutive_integrals(t, S=(1.0,), tol: float = 1e-14) -> np.ndarray:
    """The five integrals between consecutive real roots, left to right."""
    Ia, Ib, Ic = canonical_integrals(t, S, tol)
    Jab, Jbc = gap_integrals(t, S, tol)
    return np.array([Ia, Jab, Ib, Jbc, Ic], dtype=complex)


def real_integral_table(t, S=(1.0,), tol: float = 1e-14) -> IntegralTable:
    """Seven-entry table for a real curve.

    Non-adjacent entries follow the real axis just above the cuts, so e.g.
    ``I(a, b) = I(a, a') + I(a', b)``.
    """
    r = _real_ordered(t)
    c = consecutive_integrals(r, S, tol)
    e = {
        "aa'": c[0],
        "bb'": c[2],
        "cc'": c[4],
        "ab": c[0] + c[1],
        "a'b'": c[1] + c[2],
        "bc": c[2] + c[3],
        "b'c'": c[3] + c[4],
    }
    return IntegralTable(e, tuple(np.asarray(S, dtype=complex)), tuple(r))


def correspondence_images(t: QuadTriple, x: complex) -> np.ndarray:
    """The two abscissas ``z`` with ``P(x) U(z) + Q(x) V(z) = 0``.

    For ``x`` a root of ``P`` both images are the roots of ``V``, so
    ``z_1(a) = z_1(a')`` and ``z_2(a) = z_2(a')``.  Returned sorted by real part.
    """
    U, V, _ = uvw_polys(t)
    poly = t.P(x) * np.asarray(U, dtype=complex) + t.Q(x) * np.asarray(V, dtype=complex)
    z = npoly.polyroots(poly)
    return np.array(sorted(z, key=lambda v: (v.real, v.imag)), dtype=complex)
