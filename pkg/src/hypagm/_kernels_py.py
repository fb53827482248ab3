"""Pure-Python reference implementation of the hot AGM loops.

Mirrors :mod:`hypagm._kernels` (the compiled module) function for function;
:mod:`hypagm.kernels` picks one of the two at import time.
"""

from __future__ import annotations

import math

# status codes shared with the compiled kernels
OK = 0
NO_CONVERGENCE = 1
ORDERING = 2
RADICAND = 3


def agm_limit(a: float, b: float, maxit: int = 60) -> tuple[float, int, int]:
    """Arithmetic-geometric mean of ``a, b > 0``.

    Returns ``(limit, iterations, status)``; stops when
    ``|a_n - b_n| <= 4 eps a_n``.
    """
    eps = 2.220446049250313e-16
    n = 0
    while abs(a - b) > 4.0 * eps * a:
        if n >= maxit:
            return 0.5 * (a + b), n, NO_CONVERGENCE
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        n += 1
    return a, n, OK


def richelot_run(r, tol: float = 1e-14, maxit: int = 40):
    """Iterate the real Richelot step on ordered roots ``a<a'<b<b'<c<c'``.

    Returns ``(alpha, beta, gamma, T, steps, status)`` where ``alpha, beta,
    gamma`` are the pairwise limits (midpoints of the final pairs) and
    ``T`` is the product of the ``t_n``.
    """
    a, a1, b, b1, c, c1 = (float(x) for x in r)
    T = 1.0
    steps = 0
    while True:
        scale = max(1.0, abs(a), abs(c1))
        gap = max(a1 - a, b1 - b, c1 - c)
        if gap <= tol * scale:
            break
        if steps >= maxit:
            return 0.5 * (a + a1), 0.5 * (b + b1), 0.5 * (c + c1), T, steps, NO_CONVERGENCE
        rA = (b - c) * (b - c1) * (b1 - c) * (b1 - c1)
        rB = (c - a) * (c - a1) * (c1 - a) * (c1 - a1)
        rC = (a - b) * (a - b1) * (a1 - b) * (a1 - b1)
        dab = b + b1 - a - a1
        dbc = c + c1 - b - b1
        dac = c + c1 - a - a1
        # Delta = det of (aa', -(a+a'), 1; bb', ...; cc', ...)
        D = (a * a1 * (-(b + b1) + (c + c1)) - b * b1 * (-(a + a1) + (c + c1)) + c * c1 * (-(a + a1) + (b + b1)))
        if rA < 0 or rB < 0 or rC < 0 or D <= 0:
            return 0.5 * (a + a1), 0.5 * (b + b1), 0.5 * (c + c1), T, steps, RADICAND
        A, B, C = math.sqrt(rA), math.sqrt(rB), math.sqrt(rC)
        u = (c * c1 - b * b1 - A) / dbc
        u1 = (c * c1 - b * b1 + A) / dbc
        v = (c * c1 - a * a1 - B) / dac
        v1 = (c * c1 - a * a1 + B) / dac
        w = (b * b1 - a * a1 - C) / dab
        w1 = (b * b1 - a * a1 + C) / dab
        T *= 2.0 * math.sqrt(D) / math.sqrt(dab * dbc * dac)
        slack = 1e-13 * scale
        if not (v <= w + slack and w <= w1 + slack and w1 <= u + slack and u <= u1 + slack and u1 <= v1 + slack):
            return 0.5 * (a + a1), 0.5 * (b + b1), 0.5 * (c + c1), T, steps + 1, ORDERING
        a, a1, b, b1, c, c1 = v, w, w1, u, u1, v1
        steps += 1
    return 0.5 * (a + a1), 0.5 * (b + b1), 0.5 * (c + c1), T, steps, OK


def agm_limits_batch(a_vals, b_vals, maxit: int = 60):
    """Vector of AGM limits for paired sequences of positive inputs."""
    return [agm_limit(float(x), float(y), maxit)[0] for x, y in zip(a_vals, b_vals)]
