"""Continuation of the Ercolani-Sinha solution curve in the ``(a, g)`` plane.

Starting from a tetrahedral point, ``a`` is stepped on a grid and for every
new ``a`` the first constraint ``Re c1(a, g) = 0`` is solved for ``g`` by
Brent's method inside a window around the linear prediction from the two
previous points.  The second constraint then gives ``beta``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .core import monopole_sextic_roots, normalized_discriminant
from .curve import TETRAHEDRAL_MINUS, TETRAHEDRAL_PLUS, CurveFamily, ESIntegers, es_constraints
from .errors import DomainError, NonRealC2, RootLost, SingularApproach, SingularCurve, ToleranceNotMet

__all__ = [
    "SolutionPoint",
    "TraceResult",
    "AsymptoticRow",
    "evaluate_point",
    "start_point",
    "trace",
    "recover_beta",
    "asymptotic_curve",
    "asymptotic_compare",
]

log = logging.getLogger(__name__)

RE_TOL = 1e-10
IM_TOL = 1e-8
DEFAULT_STEP = 0.05
FINE_STEP = 0.005
FINE_INTERVAL = (2.8, 3.0)
SINGULAR_TOL = 1e-5
SCAN_POINTS = 5
MAX_EXPAND = 6


@dataclass(frozen=True)
class SolutionPoint:
    """A point of the solution curve.

    Attributes
    ----------
    a, g : float
        Normalised curve parameters.
    beta : float
        ``(c2 / 6)^3``.
    residual_c1 : complex
        ``c1`` at ``(a, g)``.
    integers : ESIntegers
    c2 : complex
        ``oint_c X dX / Y`` at ``(a, g)``.
    """

    a: float
    g: float
    beta: float
    residual_c1: complex
    integers: ESIntegers
    c2: complex = complex("nan")

    def raw(self) -> tuple[float, float, float]:
        """Un-normalised ``(alpha, beta, gamma)``."""
        return CurveFamily(self.a, self.g).to_raw(self.beta)


@dataclass
class TraceResult:
    """Points of a trace plus the reason it stopped early, if any."""

    points: list = field(default_factory=list)
    terminal: SingularApproach | None = None

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, k):
        return self.points[k]


def recover_beta(c2: complex, im_tol: float = IM_TOL) -> float:
    """``beta = (c2 / 6)^3`` from the second constraint ``c2 = 6 beta^(1/3)``.

    Raises
    ------
    NonRealC2
        If ``|Im c2|`` exceeds ``im_tol * max(1, |c2|)``.
    """
    c2 = complex(c2)
    if abs(c2.imag) > im_tol * max(1.0, abs(c2)):
        raise NonRealC2(f"c2 = {c2} is not real")
    return (c2.real / 6.0) ** 3


def evaluate_point(a: float, g: float, z: ESIntegers) -> SolutionPoint:
    """Evaluate both constraints at ``(a, g)`` and package the result."""
    c1, c2 = es_constraints(CurveFamily(a, g), z)
    return SolutionPoint(float(a), float(g), recover_beta(c2), c1, z, c2)


def start_point(name: str) -> SolutionPoint:
    """``'tetrahedral+'`` or ``'tetrahedral-'``."""
    table = {"tetrahedral+": TETRAHEDRAL_PLUS, "tetrahedral-": TETRAHEDRAL_MINUS}
    if name not in table:
        raise DomainError(f"unknown start {name!r}; use one of {sorted(table)}")
    a, g, z = table[name]
    return evaluate_point(a, g, z)


def _next_step(a: float, direction: int, step: float, fine_step: float, fine: tuple) -> float:
    lo, hi = fine
    cand = a + direction * step
    if lo < cand < hi or lo < a + direction * fine_step < hi:
        return fine_step
    return step


def _root_in_window(f, g_pred: float, width: float, scan: int):
    """Sign changes of ``f`` on a grid over ``g_pred +- width``; root nearest the prediction."""
    grid = np.linspace(g_pred - width, g_pred + width, scan)
    vals = np.array([f(x) for x in grid])
    idx = [k for k in range(scan - 1) if vals[k] == 0 or vals[k] * vals[k + 1] < 0]
    if not idx:
        return None
    centres = [0.5 * (grid[k] + grid[k + 1]) for k in idx]
    best = int(np.argmin([abs(c - g_pred) for c in centres]))
    if len(idx) > 1:
        log.warning("several g brackets near %.12g: %s; keeping the nearest", g_pred, centres)
    k = idx[best]
    return grid[k], grid[k + 1]


def trace(
    start: SolutionPoint,
    direction: int = 1,
    step: float = DEFAULT_STEP,
    n_points: int | None = None,
    *,
    a_limit: float | None = None,
    fine_step: float = FINE_STEP,
    fine_interval: tuple = FINE_INTERVAL,
    re_tol: float = RE_TOL,
    im_tol: float = IM_TOL,
    singular_tol: float = SINGULAR_TOL,
    window_factor: float = 10.0,
) -> TraceResult:
    """Follow the solution curve from ``start``.

    Parameters
    ----------
    start : SolutionPoint
        Must satisfy the first constraint to ``re_tol``.
    direction : {+1, -1}
        Direction of travel in ``a``.
    step : float
        Default ``a`` step; ``fine_step`` is used inside ``fine_interval``.
    n_points : int, optional
        Maximum number of new points (the start is not counted).
    a_limit : float, optional
        Stop before ``a`` passes this value.
    singular_tol : float
        Stop with :class:`SingularApproach` when the normalised discriminant
        at the predicted point falls below this.
    window_factor : float
        Half-width of the first ``g`` window in units of ``step^2``.

    Returns
    -------
    TraceResult
        ``points[0]`` is ``start``.  ``terminal`` is set when the trace
        stopped next to a singular curve.

    Raises
    ------
    RootLost
        If no sign change of ``Re c1`` is found after widening the window.
    ToleranceNotMet
        If a converged point fails the residual check.
    """
    if direction not in (1, -1):
        raise DomainError("direction must be +1 or -1")
    if not step > 0 or not fine_step > 0:
        raise DomainError("steps must be positive")
    if abs(start.residual_c1.real) > re_tol:
        raise DomainError("start point does not satisfy the first constraint")
    z = start.integers
    res = TraceResult([start])
    while n_points is None or len(res.points) <= n_points:
        p = res.points[-1]
        eps = _next_step(p.a, direction, step, fine_step, fine_interval)
        a_new = round(p.a + direction * eps, 12)
        if a_limit is not None and direction * (a_new - a_limit) > 1e-12:
            break
        if len(res.points) >= 2:
            q = res.points[-2]
            g_pred = p.g + (p.g - q.g) * (a_new - p.a) / (p.a - q.a)
        else:
            g_pred = p.g
        try:
            disc = normalized_discriminant(monopole_sextic_roots(a_new, g_pred, singular_tol=0.0))
        except SingularCurve:
            disc = 0.0
        if disc < singular_tol:
            res.terminal = SingularApproach(f"near-singular curve predicted at (a, g) = ({a_new:.6g}, {g_pred:.6g}), discriminant {disc:.3g}")
            break

        def f(g, a=a_new):
            return es_constraints(CurveFamily(a, g), z)[0].real

        try:
            width = window_factor * eps * eps
            br = None
            for _ in range(MAX_EXPAND + 1):
                br = _root_in_window(f, g_pred, width, SCAN_POINTS)
                if br is not None:
                    break
                width *= 2.0
            if br is None:
                raise RootLost(f"no sign change of Re c1 near g = {g_pred:.12g} at a = {a_new:.12g}")
            g_new = brentq(f, br[0], br[1], xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
        except SingularCurve as exc:
            res.terminal = SingularApproach(f"singular curve met while solving at a = {a_new:.6g}: {exc}")
            break
        pt = evaluate_point(a_new, g_new, z)
        if abs(pt.residual_c1.real) > re_tol or abs(pt.residual_c1.imag) > im_tol:
            raise ToleranceNotMet(f"residual {pt.residual_c1} at (a, g) = ({a_new}, {g_new})")
        res.points.append(pt)
    return res


@dataclass(frozen=True)
class AsymptoticRow:
    """One comparison row: traced ``(alpha, gamma)`` against the prediction."""

    a: float
    g: float
    alpha: float
    gamma: float
    gamma_pred: float
    log_discrepancy: float


def asymptotic_curve(b: float) -> tuple[float, float]:
    """``(alpha, gamma) = (pi^2/4 - 3 b^2, 2 b (b^2 + pi^2/4))``."""
    q = math.pi**2 / 4.0
    return q - 3.0 * b * b, 2.0 * b * (b * b + q)


def asymptotic_compare(points) -> list:
    """Compare un-normalised traced points with the asymptotic curve.

    For each point, ``b >= 0`` is solved from ``alpha = pi^2/4 - 3 b^2`` and
    the predicted ``|gamma|`` is compared with the traced one on a log scale.
    Points with ``alpha > pi^2/4`` have no real ``b`` and get ``nan``.
    """
    rows = []
    q = math.pi**2 / 4.0
    for p in points:
        alpha, _, gamma = p.raw()
        if alpha <= q:
            b = math.sqrt((q - alpha) / 3.0)
            gp = asymptotic_curve(b)[1]
            d = abs(math.log(abs(gamma)) - math.log(gp)) if gamma != 0 and gp > 0 else math.nan
        else:
            gp, d = math.nan, math.nan
        rows.append(AsymptoticRow(p.a, p.g, alpha, gamma, gp, d))
    return rows
