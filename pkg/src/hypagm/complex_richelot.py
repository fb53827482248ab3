"""AGM for genus-2 curves whose branchpoints form three conjugate pairs.

For roots ``a' = conj(a)``, ``b' = conj(b)``, ``c' = conj(c)`` (negative
imaginary member first, pairs ordered by real part) the Richelot formulas
still produce six *real* roots ``u, u', v, v', w, w'``.  One step therefore
lands on a real curve ``C'`` whose roots, sorted, are
``a1 < a1' < b1 < b1' < c1 < c1'``.  Every entry of the seven-entry table of
the original curve is ``t0`` times a half-integer combination of the five
consecutive integrals on ``C'``

    J = (I'(a1,a1'), I'(a1',b1), I'(b1,b1'), I'(b1',c1), I'(c1,c1')),

with the combination depending only on how ``u, v, w`` interlace.  Two
orderings occur for the monopole family:

``Case2``  ``u < v < w < u' < v' < w'``  (observed for ``a > 0``)
``Case1``  ``w < v < u < w' < v' < u'``  (observed for ``a < 0``)

Both tables are stated in :data:`CASE_TABLES`; every coefficient was checked
against the quadrature oracle in the paired-cut convention of
:mod:`hypagm.oracle`.  Other orderings are reported as ``Unsupported``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ComplexUVW, DomainError, UnsupportedOrdering
from .oracle import hyperelliptic_segment, SegmentIntegrand
from .richelot import LABEL_INDEX, LABELS, IntegralTable, consecutive_integrals, uvw_roots

__all__ = ["Case", "OrderingCase", "CASE_TABLES", "classify", "full_integral_table", "oracle_integral_table"]


class Case(str, enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    UNSUPPORTED = "Unsupported"


#: Rows: table entries in :data:`LABELS` order; columns: coefficients of ``J``
#: (consecutive integrals on ``C'``); every entry is ``t0 * row . J``.
CASE_TABLES = {
    Case.CASE2: np.array(
        [
            [0, 1, 0, 0, 0],  # aa'
            [0, -1, 0, 1, 0],  # bb'
            [0, 0, 0, -1, 0],  # cc'
            [0.5, 0, 0, 0.5, 0],  # ab
            [0.5, 0, 0, -0.5, 0],  # a'b'
            [0.5, -0.5, 0.5, 0, 0],  # bc
            [0.5, 0.5, 0.5, 0, 0],  # b'c'
        ]
    ),
    Case.CASE1: np.array(
        [
            [-1, 0, 0, 0, 0],  # aa'
            [0, 0, -1, 0, 0],  # bb'
            [1, 0, 1, 0, 0],  # cc'
            [-0.5, 0.5, -0.5, 0, 0],  # ab
            [0.5, 0.5, 0.5, 0, 0],  # a'b'
            [0.5, 0, 0, 0.5, 0],  # bc
            [-0.5, 0, 0, 0.5, 0],  # b'c'
        ]
    ),
}

#: Relative ``|Delta|`` below which the first step is treated as degenerate.
DEGENERATE_TOL = 5e-4

_ORDER_PATTERNS = {
    # indices into (u, u', v, v', w, w') listed in increasing order
    Case.CASE2: (0, 2, 4, 1, 3, 5),
    Case.CASE1: (4, 2, 0, 5, 3, 1),
}


@dataclass(frozen=True)
class OrderingCase:
    """Result of :func:`classify`.

    Attributes
    ----------
    tag : Case
    uvw : tuple of float
        ``(u, u', v, v', w, w')``.
    t0 : complex
        Step factor of the first Richelot step.
    delta : float
        Coefficient determinant of the original triple.
    degenerate : bool
        True when ``|Delta|`` is so small that the image curve collapses
        (the pencil degenerates, as at ``a = 0`` on the monopole family).
    """

    tag: Case
    uvw: tuple
    t0: complex
    delta: float
    degenerate: bool = False


def _check_pairs(r: np.ndarray) -> None:
    scale = max(1.0, float(np.max(np.abs(r))))
    for k in range(0, 6, 2):
        if abs(r[k] - np.conj(r[k + 1])) > 1e-9 * scale:
            raise DomainError("roots must come in conjugate pairs (a, conj a), ...")
        if r[k].imag >= 0:
            raise DomainError("negative-imaginary member of each pair must come first")
    re = r[::2].real
    if not (re[0] < re[1] < re[2]):
        raise DomainError("pairs must be ordered by increasing real part")


def _uvw_real(r: np.ndarray):
    (u, u1, v, v1, w, w1), D, _ = uvw_roots(r)
    vals = np.array([u, u1, v, v1, w, w1], dtype=complex)
    scale = max(1.0, float(np.max(np.abs(vals))))
    if np.max(np.abs(vals.imag)) > 1e-8 * scale:
        raise ComplexUVW(f"Richelot image roots are not real: {vals}")
    a, a1, b, b1, c, c1 = r
    dab = (b + b1 - a - a1).real
    dbc = (c + c1 - b - b1).real
    dac = (c + c1 - a - a1).real
    Dr = float(np.real(D))
    t0 = 2.0 * np.sqrt(complex(Dr)) / np.sqrt(complex(dab * dbc * dac))
    return vals.real, Dr, t0, dab * dbc * dac


def classify(roots, degenerate_tol: float = DEGENERATE_TOL) -> OrderingCase:
    """Determine which case table applies.

    Parameters
    ----------
    roots : array_like
        ``(a, a', b, b', c, c')`` in conjugate pairs, negative imaginary
        member first, pairs ordered by real part.
    degenerate_tol : float
        ``|Delta|`` relative to the product of the pair-sum differences below
        which the step is flagged as degenerate.  The rounding error of the
        AGM path grows like ``1e-18 / (|Delta| / den)^2``, so the default
        keeps it near ``1e-11``.  A degenerate configuration is tagged
        ``Case1`` and :func:`full_integral_table` falls back to quadrature.
    """
    r = np.asarray(roots, dtype=complex)
    _check_pairs(r)
    vals, D, t0, den = _uvw_real(r)
    degenerate = abs(D) <= degenerate_tol * abs(den)
    uvw = tuple(float(x) for x in vals)
    if degenerate:
        return OrderingCase(Case.CASE1, uvw, t0, D, True)
    for tag, pat in _ORDER_PATTERNS.items():
        seq = vals[list(pat)]
        if np.all(np.diff(seq) > 0):
            return OrderingCase(tag, uvw, t0, D, False)
    return OrderingCase(Case.UNSUPPORTED, uvw, t0, D, False)


def _as_numerators(S) -> tuple[np.ndarray, bool]:
    arr = np.asarray(S, dtype=complex)
    return np.atleast_2d(arr), arr.ndim == 1


def oracle_integral_table(roots, S=(1.0,), tol: float = 1e-13):
    """Seven-entry table from straight-segment quadrature (paired-cut branch)."""
    r = np.asarray(roots, dtype=complex)
    nums, single = _as_numerators(S)
    vals = {}
    for lab in LABELS:
        i, j = LABEL_INDEX[lab]
        v, _ = hyperelliptic_segment(SegmentIntegrand(tuple(r), tuple(map(tuple, nums)), r[i], r[j]), tol)
        vals[lab] = np.atleast_1d(v)
    tables = [IntegralTable({k: complex(vals[k][n]) for k in LABELS}, tuple(nums[n]), tuple(r)) for n in range(nums.shape[0])]
    return tables[0] if single else tables


def full_integral_table(roots, S=(1.0,), *, fallback: bool = True, tol: float = 1e-14):
    """Seven-entry table via one Richelot step to a real curve.

    Parameters
    ----------
    roots : array_like
        Conjugate-paired roots as for :func:`classify`.
    S : array_like
        Ascending numerator coefficients (degree <= 1), or a 2-D array of
        several numerators.
    fallback : bool
        When the first step is degenerate, compute the table with the
        quadrature oracle instead of raising.

    Raises
    ------
    UnsupportedOrdering
        If the ``u, v, w`` ordering matches neither case.
    """
    r = np.asarray(roots, dtype=complex)
    oc = classify(r)
    nums, single = _as_numerators(S)
    if oc.degenerate:
        if not fallback:
            raise UnsupportedOrdering("degenerate first Richelot step (Delta ~ 0)")
        return oracle_integral_table(r, S)
    if oc.tag is Case.UNSUPPORTED:
        raise UnsupportedOrdering(f"unsupported u,v,w ordering: (u,u',v,v',w,w') = {oc.uvw}")
    rp = np.sort(np.asarray(oc.uvw))
    M = CASE_TABLES[oc.tag]
    tables = []
    for n in range(nums.shape[0]):
        J = consecutive_integrals(rp, nums[n], tol)
        vals = oc.t0 * (M @ J)
        tables.append(IntegralTable(dict(zip(LABELS, (complex(v) for v in vals))), tuple(nums[n]), tuple(r)))
    return tables[0] if single else tables
