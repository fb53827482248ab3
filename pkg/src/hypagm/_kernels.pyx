# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot AGM loops (see ``_kernels_py`` for the reference)."""

from libc.math cimport sqrt, fabs

cdef int OK = 0
cdef int NO_CONVERGENCE = 1
cdef int ORDERING = 2
cdef int RADICAND = 3
cdef double EPS = 2.220446049250313e-16


cdef inline double _max3(double x, double y, double z) nogil:
    cdef double m = x
    if y > m:
        m = y
    if z > m:
        m = z
    return m


cpdef tuple agm_limit(double a, double b, int maxit=60):
    cdef int n = 0
    cdef double an
    while fabs(a - b) > 4.0 * EPS * a:
        if n >= maxit:
            return 0.5 * (a + b), n, NO_CONVERGENCE
        an = 0.5 * (a + b)
        b = sqrt(a * b)
        a = an
        n += 1
    return a, n, OK


cpdef tuple richelot_run(r, double tol=1e-14, int maxit=40):
    cdef double a = r[0], a1 = r[1], b = r[2], b1 = r[3], c = r[4], c1 = r[5]
    cdef double T = 1.0, scale, gap, rA, rB, rC, dab, dbc, dac, D
    cdef double A, B, C, u, u1, v, v1, w, w1, slack
    cdef int steps = 0
    while True:
        scale = _max3(1.0, fabs(a), fabs(c1))
        gap = _max3(a1 - a, b1 - b, c1 - c)
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
        D = a * a1 * (-(b + b1) + (c + c1)) - b * b1 * (-(a + a1) + (c + c1)) + c * c1 * (-(a + a1) + (b + b1))
        if rA < 0 or rB < 0 or rC < 0 or D <= 0:
            return 0.5 * (a + a1), 0.5 * (b + b1), 0.5 * (c + c1), T, steps, RADICAND
        A = sqrt(rA)
        B = sqrt(rB)
        C = sqrt(rC)
        u = (c * c1 - b * b1 - A) / dbc
        u1 = (c * c1 - b * b1 + A) / dbc
        v = (c * c1 - a * a1 - B) / dac
        v1 = (c * c1 - a * a1 + B) / dac
        w = (b * b1 - a * a1 - C) / dab
        w1 = (b * b1 - a * a1 + C) / dab
        T *= 2.0 * sqrt(D) / sqrt(dab * dbc * dac)
        slack = 1e-13 * scale
        if not (v <= w + slack and w <= w1 + slack and w1 <= u + slack and u <= u1 + slack and u1 <= v1 + slack):
            return 0.5 * (a + a1), 0.5 * (b + b1), 0.5 * (c + c1), T, steps + 1, ORDERING
        a, a1, b, b1, c, c1 = v, w, w1, u, u1, v1
        steps += 1
    return 0.5 * (a + a1), 0.5 * (b + b1), 0.5 * (c + c1), T, steps, OK


def agm_limits_batch(a_vals, b_vals, int maxit=60):
    cdef list out = []
    cdef double x, y
    for x, y in zip(a_vals, b_vals):
        out.append(agm_limit(x, y, maxit)[0])
    return out
