"""Compare the compiled and pure-Python AGM kernels.

Run with ``python benchmarks/bench_kernels.py [--n N] [--repeat R]``.
Prints the best wall time per backend and the speed-up; also checks that
both backends agree to rounding.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from hypagm import _kernels_py

try:
    from hypagm import _kernels
except ImportError:  # extension not built
    _kernels = None


def _workload(n: int, seed: int):
    rng = np.random.default_rng(seed)
    ab = rng.uniform(0.1, 10.0, size=(n, 2))
    sextics = np.sort(rng.uniform(-5.0, 5.0, size=(n, 6)), axis=1)
    return ab, sextics


def _run(mod, ab, sextics):
    def agm():
        mod.agm_limits_batch(ab[:, 0], ab[:, 1])

    def richelot():
        for r in sextics:
            mod.richelot_run(r)

    return agm, richelot


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=20000)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    ab, sextics = _workload(args.n, args.seed)
    backends = {"python": _kernels_py}
    if _kernels is not None:
        backends["cython"] = _kernels
    else:
        print("compiled kernels not built; timing the Python fallback only")
    times = {}
    for name, mod in backends.items():
        agm, richelot = _run(mod, ab, sextics)
        times[name] = (
            min(timeit.repeat(agm, number=1, repeat=args.repeat)),
            min(timeit.repeat(richelot, number=1, repeat=args.repeat)),
        )
        print(f"{name:>7}: agm {times[name][0] * 1e3:9.2f} ms   richelot {times[name][1] * 1e3:9.2f} ms   (n = {args.n})")
    if "cython" in times:
        sp = [p / c for p, c in zip(times["python"], times["cython"])]
        print(f"speed-up: agm x{sp[0]:.1f}   richelot x{sp[1]:.1f}")
        ref = np.array(_kernels_py.agm_limits_batch(ab[:, 0], ab[:, 1]))
        fast = np.array(_kernels.agm_limits_batch(ab[:, 0], ab[:, 1]))
        rel = np.max(np.abs(fast - ref) / ref)
        diff = max(
            max(abs(x - y) for x, y in zip(_kernels_py.richelot_run(r)[:4], _kernels.richelot_run(r)[:4]))
            for r in sextics[:200]
        )
        print(f"max relative AGM difference {rel:.2e}; max Richelot limit difference {diff:.2e}")


if __name__ == "__main__":
    main()
