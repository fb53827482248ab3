"""The genus-2 quotient monopole curve and its Ercolani-Sinha functionals.

The curve is ``Y^2 = (X^3 + a X + g)^2 + 4`` (the normalisation ``beta = 1``
of ``y^2 = (x^3 + alpha x + gamma)^2 + 4 beta^2`` under
``X = beta^(-1/3) x``, ``Y = y / beta``, ``a = beta^(-2/3) alpha``,
``g = gamma / beta``).

Periods are computed in two steps.  First the seven-entry table of
``S(x) dx / y`` integrals is evaluated for the relabelled roots, with
``y^2 + PQR = 0`` in the paired-cut convention of :mod:`hypagm.oracle`
(``y ~ -i X^3``).  Then every cycle period is a fixed integer
combination of table entries (:data:`PERIOD_COMBINATIONS`).  The monopole
branch ``Y = i y`` (``Y ~ X^3``) turns ``dX / Y`` into ``-i dX / y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complex_richelot import full_integral_table
from .core import monopole_sextic_roots
from .errors import DomainError
from .oracle import SegmentIntegrand, hyperelliptic_segment, paired_branch

__all__ = [
    "CurveFamily",
    "Arc",
    "CycleBasis",
    "ESIntegers",
    "TETRAHEDRAL_PLUS",
    "TETRAHEDRAL_MINUS",
    "PERIOD_COMBINATIONS",
    "CYCLE_NAMES",
    "richelot_labels",
    "cycle_basis",
    "cycle_periods",
    "literal_arc_periods",
    "es_constraints",
]

CYCLE_NAMES = ("a0", "a1", "b0", "b1")

#: Each cycle period as a combination of ``2 I(xy)`` over the table labels
#: ``aa', ab, bb', b'c'``.  Derived once from the arc lists of
#: :func:`cycle_basis` and gated by the literal-arc oracle in the tests.
PERIOD_COMBINATIONS = {
    "a0": {"aa'": 3, "ab": 1, "bb'": 1, "b'c'": -1},
    "a1": {"aa'": -1, "bb'": -1, "b'c'": 1},
    "b0": {"aa'": 1, "ab": 1},
    "b1": {"aa'": 1, "ab": 1, "b'c'": -1},
}

_NUMERATORS = np.array([[1.0, 0.0], [0.0, 1.0]])  # u1 = dX/Y, u2 = X dX/Y


@dataclass(frozen=True)
class CurveFamily:
    """A member of the monopole family at ``beta = 1``.

    Parameters
    ----------
    a, g : float
        Normalised parameters.
    raw : tuple of float, optional
        The un-normalised ``(alpha, beta, gamma)`` when the curve was built
        by :meth:`from_raw`.
    """

    a: float
    g: float
    raw: tuple | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.g)):
            raise DomainError("a and g must be finite")

    @classmethod
    def from_raw(cls, alpha: float, beta: float, gamma: float) -> "CurveFamily":
        """Rescale ``(alpha, beta, gamma)`` to ``(a, g) = (beta^(-2/3) alpha, gamma / beta)``."""
        if not beta > 0:
            raise DomainError("beta must be positive")
        return cls(alpha * beta ** (-2.0 / 3.0), gamma / beta, (float(alpha), float(beta), float(gamma)))

    def to_raw(self, beta: float) -> tuple[float, float, float]:
        """``(alpha, beta, gamma)`` for a given ``beta > 0``."""
        if not beta > 0:
            raise DomainError("beta must be positive")
        return self.a * beta ** (2.0 / 3.0), float(beta), self.g * beta

    def roots(self) -> np.ndarray:
        """``B1..B6``; raises :class:`~hypagm.errors.SingularCurve` near singular curves."""
        return monopole_sextic_roots(self.a, self.g)


@dataclass(frozen=True)
class Arc:
    """Straight segment from ``B_start`` to ``B_end`` (1-based labels).

    ``sheet`` 1 means the paired-cut branch at the segment midpoint; sheet 2
    is its negative.
    """

    start: int
    end: int
    sheet: int = 1

    @property
    def sign(self) -> int:
        return 1 if self.sheet == 1 else -1


@dataclass(frozen=True)
class CycleBasis:
    """Arc expansions of the projected basis ``a0, a1, b0, b1``.

    Every cycle is a closed loop around a pair of branchpoints, so its arcs
    come in sheet-1 / sheet-2 pairs; the second half of each pair is stored
    implicitly (the factor 2 in the period).
    """

    cycles: dict

    def arcs(self, name: str) -> tuple:
        return self.cycles[name]


@dataclass(frozen=True)
class ESIntegers:
    """Integers of ``c = n0 a0 + 3 n a1 + 3 m0 b0 + 3 m b1``."""

    n0: int
    n: int
    m0: int
    m: int

    def weights(self) -> np.ndarray:
        """Coefficients of ``(a0, a1, b0, b1)`` in ``c``."""
        return np.array([self.n0, 3 * self.n, 3 * self.m0, 3 * self.m], dtype=float)

    @classmethod
    def parse(cls, text: str) -> "ESIntegers":
        parts = [int(p) for p in text.replace(" ", "").split(",")]
        if len(parts) != 4:
            raise DomainError("integers must be 'n0,n,m0,m'")
        return cls(*parts)


#: Tetrahedral starting points and their integer vectors.
TETRAHEDRAL_PLUS = (0.0, 5.0 * math.sqrt(2.0), ESIntegers(4, 1, -3, 1))
TETRAHEDRAL_MINUS = (0.0, -5.0 * math.sqrt(2.0), ESIntegers(5, 1, -3, 0))


def richelot_labels(c: CurveFamily) -> np.ndarray:
    """Roots in Richelot order ``(a, a', b, b', c, c') = (B4, B3, B5, B2, B6, B1)``."""
    B = c.roots()
    return np.array([B[3], B[2], B[4], B[1], B[5], B[0]], dtype=complex)


def cycle_basis(c: CurveFamily) -> CycleBasis:
    """Arc lists of the four cycles for this member of the family.

    For ``g < 0`` the straight segment from ``B6`` to ``B4`` crosses the
    ``(B5, B2)`` cut, so the midpoint branch there sits on the other sheet
    and the arc is recorded with sheet 2.
    """
    ca = 1 if c.g >= 0 else 2
    flip = {1: 2, 2: 1}
    return CycleBasis(
        {
            "a1": (Arc(2, 6, 1),),
            "b1": (Arc(6, 4, flip[ca]),),
            "a0": (Arc(3, 4, 2), Arc(6, 4, flip[ca]), Arc(6, 1, 2)),
            "b0": (Arc(3, 4, 2), Arc(5, 4, 2)),
        }
    )


def _combine(table_u1, table_u2) -> np.ndarray:
    out = np.zeros((2, 4), dtype=complex)
    for k, tab in enumerate((table_u1, table_u2)):
        for j, name in enumerate(CYCLE_NAMES):
            out[k, j] = sum(2.0 * w * tab[lab] for lab, w in PERIOD_COMBINATIONS[name].items())
    return out


def cycle_periods(c: CurveFamily, tol: float = 1e-14) -> np.ndarray:
    """Periods of ``u1 = dX/Y`` and ``u2 = X dX/Y`` over ``(a0, a1, b0, b1)``.

    Returns
    -------
    ndarray, shape (2, 4)
        Row ``k`` holds the periods of ``u_{k+1}``, in the monopole branch
        ``Y ~ +X^3``.
    """
    r = richelot_labels(c)
    t1, t2 = full_integral_table(r, _NUMERATORS, tol=tol)
    return -1j * _combine(t1, t2)


def literal_arc_periods(c: CurveFamily, tol: float = 1e-12) -> np.ndarray:
    """Same as :func:`cycle_periods` but by direct quadrature along the arcs."""
    B = c.roots()
    r = richelot_labels(c)  # the branch needs the cut pairing
    basis = cycle_basis(c)
    out = np.zeros((2, 4), dtype=complex)
    for j, name in enumerate(CYCLE_NAMES):
        for arc in basis.arcs(name):
            p, q = B[arc.start - 1], B[arc.end - 1]
            mid = 0.5 * (p + q)
            pt = mid + 1e-9 * np.exp(0.25j * np.pi)
            anchor = (pt, paired_branch(pt, r, lead=-1.0))
            v, _ = hyperelliptic_segment(SegmentIntegrand(tuple(r), tuple(map(tuple, _NUMERATORS)), p, q, -1.0, anchor), tol)
            out[:, j] += 2.0 * arc.sign * np.asarray(v)
    return -1j * out


def es_constraints(c: CurveFamily, z: ESIntegers, periods: np.ndarray | None = None) -> tuple[complex, complex]:
    """``(c1, c2) = (oint_c dX/Y, oint_c X dX/Y)``; ``c2 = 6 beta^(1/3)`` on solutions."""
    P = cycle_periods(c) if periods is None else periods
    v = P @ z.weights()
    return complex(v[0]), complex(v[1])
