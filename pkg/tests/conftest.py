import numpy as np
import pytest

from hypagm import _kernels_py

try:
    from hypagm import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    BACKENDS.append(pytest.param(_kernels_c, id="cython"))


@pytest.fixture(params=BACKENDS)
def kernel_module(request):
    """Each available kernel implementation in turn."""
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_real_sextic(rng, lo=-5.0, hi=5.0, min_gap=0.05):
    """Six sorted real roots with a minimum separation."""
    while True:
        r = np.sort(rng.uniform(lo, hi, 6))
        if np.min(np.diff(r)) > min_gap:
            return r


@pytest.fixture
def real_sextic(rng):
    """Factory for random ordered real sextics."""
    return lambda **kw: random_real_sextic(rng, **kw)


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report(capsys):
    """Record and print one ``criterion N: PASS/FAIL`` line."""

    def report(n, ok, detail=""):
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}".rstrip()
        _ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
        return ok

    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
