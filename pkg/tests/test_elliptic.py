import math
import subprocess
import sys

import numpy as np
import pytest

from hypagm import kernels
from hypagm.elliptic import agm, elliptic_integral
from hypagm.errors import DomainError
from hypagm.oracle import elliptic_quadrature

# mpmath references at 30 digits: pi / (2 agm(a, b))
FROZEN = [(1.0, math.sqrt(2.0), 1.3110287771460598566), (0.1, 10.0, 0.59915893405069963469), (3.0, 4.0, 0.45111540538849205559)]


@pytest.mark.parametrize("a,b,ref", FROZEN)
def test_frozen_values(a, b, ref):
    assert abs(elliptic_integral(a, b) - ref) < 1e-15
    assert abs(elliptic_quadrature(a, b) - ref) < 1e-14


def test_trace_monotone():
    tr = agm(1.0, 9.0)
    assert tr.pairs[0] == (1.0, 9.0)
    for (a0, b0), (a1, b1) in zip(tr.pairs[1:], tr.pairs[2:]):
        assert a0 >= a1 >= b1 >= b0
    assert tr.iterations <= 6
    assert abs(tr.limit - tr.pairs[-1][1]) <= 4 * np.finfo(float).eps * tr.limit


@pytest.mark.parametrize("a,b", [(0, 1), (-1, 2), (1, math.inf), (math.nan, 1)])
def test_domain(a, b):
    with pytest.raises(DomainError):
        elliptic_integral(a, b)
    with pytest.raises(DomainError):
        agm(a, b)


def test_symmetric():
    assert elliptic_integral(2.0, 5.0) == pytest.approx(elliptic_integral(5.0, 2.0), rel=1e-15)


def test_kernel_agreement(kernel_module):
    for a, b in [(1, 2), (0.1, 10), (7, 7)]:
        m, n, status = kernel_module.agm_limit(a, b, 60)
        assert status == kernels.OK
        assert abs(math.pi / (2 * m) - elliptic_quadrature(a, b)) < 1e-14


def test_kernel_nonconvergence_status(kernel_module):
    _, n, status = kernel_module.agm_limit(1.0, 1e6, 1)
    assert status == kernels.NO_CONVERGENCE


def test_env_var_forces_python_backend():
    out = subprocess.run(
        [sys.executable, "-c", "import hypagm.kernels as k; print(k.BACKEND)"],
        env={"HYPAGM_PURE_PYTHON": "1", "PATH": ""},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
