"""AGM periods of genus-2 curves and the charge-3 cyclic monopole constraints.

Modules
-------
core
    Quadratic triples with their brackets; the monopole sextic.
elliptic
    Gauss' AGM and the complete elliptic integral.
richelot
    Richelot AGM for six real branchpoints, with Moebius relabelling.
complex_richelot
    Extension to three complex-conjugate pairs of branchpoints.
oracle
    Independent adaptive quadrature used as ground truth.
hypergeometric
    2F1 with the trigonal closed forms; the modular equation.
curve
    Cycle periods and constraints of the quotient monopole curve.
solver
    Continuation of the solution curve and beta recovery.
igusa
    Igusa invariants and the chi_30 subcover test.
cli
    Command-line interface.
"""

from .errors import *  # noqa: F401,F403
from .kernels import BACKEND
from .elliptic import agm, elliptic_integral
from .richelot import canonical_integrals, real_integral_table, run_agm
from .complex_richelot import classify, full_integral_table
from .hypergeometric import closed_forms, hyp2f1, solve_modular
from .curve import CurveFamily, ESIntegers, cycle_periods, es_constraints
from .solver import recover_beta, start_point, trace
from .igusa import chi30_monopole, invariants

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "agm",
    "elliptic_integral",
    "canonical_integrals",
    "real_integral_table",
    "run_agm",
    "classify",
    "full_integral_table",
    "closed_forms",
    "hyp2f1",
    "solve_modular",
    "CurveFamily",
    "ESIntegers",
    "cycle_periods",
    "es_constraints",
    "recover_beta",
    "start_point",
    "trace",
    "chi30_monopole",
    "invariants",
]
