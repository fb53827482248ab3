"""Kernel backend selection.

The compiled extension :mod:`hypagm._kernels` is used when it was built;
otherwise, or when the environment variable ``HYPAGM_PURE_PYTHON`` is set
to a non-empty value other than ``0``, the reference implementation in
:mod:`hypagm._kernels_py` is used.  ``BACKEND`` names the active choice.
"""

from __future__ import annotations

import os

from . import _kernels_py

_force_pure = os.environ.get("HYPAGM_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _kernels_py
        BACKEND = "python"

agm_limit = _impl.agm_limit
richelot_run = _impl.richelot_run
agm_limits_batch = _impl.agm_limits_batch

OK = _kernels_py.OK
NO_CONVERGENCE = _kernels_py.NO_CONVERGENCE
ORDERING = _kernels_py.ORDERING
RADICAND = _kernels_py.RADICAND

__all__ = ["BACKEND", "agm_limit", "richelot_run", "agm_limits_batch", "OK", "NO_CONVERGENCE", "ORDERING", "RADICAND"]
