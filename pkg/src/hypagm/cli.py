"""Command-line interface.

Exit codes: 0 success, 2 domain error, 3 convergence failure, 64 usage
error.  Relative output paths are placed under ``$HYPAGM_OUTPUT_DIR`` when
that variable is set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import ConvergenceError, DomainError, HypagmError

__all__ = ["main", "build_parser", "format_number", "emit_records", "read_solutions", "TRACE_HEADER"]

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_USAGE = 64

OUTPUT_DIR_ENV = "HYPAGM_OUTPUT_DIR"
TRACE_HEADER = ("a", "g", "beta", "re_c1", "im_c1", "re_c2")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: D102 - argparse hook
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def format_number(x) -> str:
    """Fifteen significant digits, ``.`` decimal point, no locale."""
    return format(float(x), ".15g")


def _resolve(path: str | None) -> Path | None:
    if path is None or path == "-":
        return None
    p = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _flatten(record: dict) -> dict:
    out = {}
    for k, v in record.items():
        if isinstance(v, complex):
            out[f"re_{k}"] = v.real
            out[f"im_{k}"] = v.imag
        elif isinstance(v, np.generic):
            out[k] = v.item()
        else:
            out[k] = v
    return out


def emit_records(records: list, fmt: str, path: str | None = None, header: tuple | None = None) -> str:
    """Serialise a list of flat records as CSV or JSON.

    CSV numbers carry 15 significant digits; JSON uses the shortest
    round-tripping float representation, so ``json.loads`` returns the
    original values.
    """
    rows = [_flatten(r) for r in records]
    if fmt == "json":
        text = json.dumps(rows if len(rows) != 1 else rows[0], indent=2, allow_nan=True) + "\n"
    else:
        cols = list(header) if header else (list(rows[0].keys()) if rows else [])
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([format_number(r[c]) if isinstance(r[c], (int, float)) and not isinstance(r[c], bool) else r[c] for c in cols])
        text = buf.getvalue()
    p = _resolve(path)
    if p is None:
        sys.stdout.write(text)
    else:
        p.write_text(text, encoding="utf-8")
    return text


def _floats(text: str) -> list:
    return [float(x) for x in text.split(",") if x.strip()]


def _complexes(text: str) -> list:
    return [complex(x.replace(" ", "").replace("i", "j")) for x in text.split(",") if x.strip()]


def read_solutions(path: str) -> list:
    """``(a, g)`` pairs from a CSV with ``a`` and ``g`` columns."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"a", "g"} <= set(reader.fieldnames):
            raise DomainError("solutions file needs 'a' and 'g' columns")
        return [(float(r["a"]), float(r["g"])) for r in reader]


# ---------------------------------------------------------------- commands


def _cmd_agm(args):
    from .elliptic import agm, elliptic_integral

    tr = agm(args.a, args.b)
    return [{"a": args.a, "b": args.b, "M": tr.limit, "integral": elliptic_integral(args.a, args.b), "iterations": tr.iterations}]


def _cmd_richelot(args):
    from .richelot import canonical_integrals, real_integral_table, run_agm

    if args.roots:
        r = np.sort(np.array(_floats(args.roots)))
    else:
        r = np.sort(np.random.default_rng(args.seed).uniform(-5.0, 5.0, 6))
    if r.size != 6:
        raise DomainError("need six real roots")
    S = tuple(_floats(args.numerator))
    (al, be, ga), T, steps = run_agm(r, tol=args.tol)
    Ia, Ib, Ic = canonical_integrals(r, S, tol=args.tol)
    rec = {"roots": ",".join(format_number(x) for x in r), "alpha": al, "beta": be, "gamma": ga, "T": T, "steps": steps, "I_a": Ia, "I_b": Ib, "I_c": Ic}
    if args.table:
        tab = real_integral_table(r, S, tol=args.tol)
        rec.update({f"I({k})": complex(v) for k, v in tab.entries.items()})
    return [rec]


def _cmd_periods(args):
    from .curve import CYCLE_NAMES, CurveFamily, cycle_periods

    P = cycle_periods(CurveFamily(args.a, args.g))
    return [{"differential": k + 1, **{name: complex(P[k, j]) for j, name in enumerate(CYCLE_NAMES)}} for k in range(2)]


def _cmd_oracle(args):
    from .oracle import segment_integral

    r = _complexes(args.roots)
    if len(r) != 6:
        raise DomainError("need six roots (a, a', b, b', c, c')")
    v = segment_integral(r, _floats(args.numerator), r[args.start], r[args.end], lead=args.lead, tol=args.tol)
    return [{"start": args.start, "end": args.end, "value": complex(v)}]


def _cmd_modular(args):
    from .hypergeometric import beta_cuberoot_closed_form, solve_modular

    t, b = solve_modular(args.ratio)
    rec = {"ratio": float(Fraction(args.ratio)), "t": t, "b": b}
    if args.n is not None and args.m is not None:
        rec["beta_cuberoot"] = beta_cuberoot_closed_form(args.n, args.m, t)
    return [rec]


def _cmd_es_check(args):
    from .curve import CurveFamily, ESIntegers, es_constraints
    from .solver import recover_beta

    z = ESIntegers.parse(args.integers)
    c1, c2 = es_constraints(CurveFamily(args.a, args.g), z)
    try:
        beta = recover_beta(c2, args.im_tol)
    except DomainError:
        beta = math.nan
    return [{"a": args.a, "g": args.g, "c1": c1, "c2": c2, "beta": beta}]


def _cmd_trace(args):
    from .solver import start_point, trace

    res = trace(
        start_point(args.start),
        args.direction,
        args.step,
        args.steps,
        a_limit=args.a_limit,
        fine_step=args.fine_step,
        re_tol=args.re_tol,
        im_tol=args.im_tol,
        singular_tol=args.singular_tol,
    )
    rows = [{"a": p.a, "g": p.g, "beta": p.beta, "re_c1": p.residual_c1.real, "im_c1": p.residual_c1.imag, "re_c2": p.c2.real} for p in res]
    if res.terminal is not None:
        print(f"# stopped: {res.terminal}", file=sys.stderr)
    if args.plot_data:
        series = {"a_g": [[p.a, p.g] for p in res], "alpha_gamma": [[p.raw()[0], p.raw()[2]] for p in res]}
        sys.stdout.write(json.dumps(series) + "\n")
    if args.out or not args.plot_data:
        emit_records(rows, args.format or "csv", args.out, TRACE_HEADER)
    return None


def _cmd_invariants(args):
    from .igusa import chi30_generic, chi30_inner, chi30_monopole, monopole_invariants
    from .core import monopole_sextic_coeffs

    inv = monopole_invariants(args.a, args.g)
    rec = {"a": args.a, "g": args.g, "j2": inv.j2, "j4": inv.j4, "j6": inv.j6, "j10": inv.j10, "i1": inv.i1, "i2": inv.i2, "i3": inv.i3}
    rec["chi30"] = chi30_monopole(args.a, args.g)
    rec["chi30_inner"] = chi30_inner(args.a, args.g)
    try:
        rec["chi30_generic"] = chi30_generic(np.roots(monopole_sextic_coeffs(args.a, args.g)))
    except DomainError:
        rec["chi30_generic"] = math.nan
    return [rec]


def _cmd_elliptic_points(args):
    from .curve import ESIntegers
    from .igusa import intersect_with_solutions

    pts = read_solutions(args.solutions)
    z = ESIntegers.parse(args.integers) if args.integers else None
    out = []
    for sign in (1, -1):  # a file may hold both branches; keep them apart
        branch = [p for p in pts if sign * p[1] > 0]
        out += intersect_with_solutions(branch, z, refine=not args.no_refine)
    return [{"a": a, "g": g} for a, g in out]


def _cmd_verify(args):
    from .curve import TETRAHEDRAL_MINUS, TETRAHEDRAL_PLUS, CurveFamily, es_constraints
    from .hypergeometric import beta_cuberoot_closed_form, solve_modular
    from .solver import recover_beta

    t, _ = solve_modular(Fraction(1, 2))
    closed = beta_cuberoot_closed_form(1, 1, t)
    recs = []
    for name, (a, g, z) in (("tetrahedral+", TETRAHEDRAL_PLUS), ("tetrahedral-", TETRAHEDRAL_MINUS)):
        c1, c2 = es_constraints(CurveFamily(a, g), z)
        beta = recover_beta(c2)
        recs.append(
            {
                "point": name,
                "a": a,
                "g": g,
                "abs_c1": abs(c1),
                "beta": beta,
                "beta_closed_form": closed**3,
                "rel_err_abs_beta": abs(abs(beta) - abs(closed**3)) / abs(closed**3),
            }
        )
    return recs


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hypagm", description="AGM periods of genus-2 curves and the cyclic 3-monopole constraints.")
    p.add_argument("--format", choices=("csv", "json"), default=None, help="output format (default: json, csv for trace)")
    p.add_argument("--out", default=None, help="output file (relative to $HYPAGM_OUTPUT_DIR when set)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised inputs")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("agm", help="elliptic AGM and complete elliptic integral")
    s.add_argument("--a", type=float, required=True)
    s.add_argument("--b", type=float, required=True)
    s.set_defaults(func=_cmd_agm)

    s = sub.add_parser("richelot", help="Richelot AGM for six real branchpoints")
    s.add_argument("--roots", default=None, help="comma-separated roots; random if omitted (see --seed)")
    s.add_argument("--numerator", default="1", help="ascending numerator coefficients")
    s.add_argument("--tol", type=float, default=1e-14)
    s.add_argument("--table", action="store_true", help="also print the seven-entry table")
    s.set_defaults(func=_cmd_richelot)

    s = sub.add_parser("periods", help="cycle periods of the monopole curve")
    s.add_argument("--a", type=float, required=True)
    s.add_argument("--g", type=float, required=True)
    s.set_defaults(func=_cmd_periods)

    s = sub.add_parser("oracle-integral", help="quadrature between two branchpoints")
    s.add_argument("--roots", required=True, help="six roots, complex as 1+2j")
    s.add_argument("--start", type=int, required=True, help="0-based index of the start root")
    s.add_argument("--end", type=int, required=True)
    s.add_argument("--numerator", default="1")
    s.add_argument("--lead", type=float, default=-1.0, help="y^2 = lead * prod (x - r)")
    s.add_argument("--tol", type=float, default=1e-13)
    s.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("modular", help="solve the cubic modular equation")
    s.add_argument("--ratio", required=True, help="e.g. 2 or 1/2")
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--m", type=int, default=None)
    s.set_defaults(func=_cmd_modular)

    s = sub.add_parser("es-check", help="evaluate both Ercolani-Sinha functionals")
    s.add_argument("--a", type=float, required=True)
    s.add_argument("--g", type=float, required=True)
    s.add_argument("--integers", required=True, help="n0,n,m0,m")
    s.add_argument("--im-tol", type=float, default=1e-8)
    s.set_defaults(func=_cmd_es_check)

    s = sub.add_parser("trace", help="continue the solution curve")
    s.add_argument("--start", choices=("tetrahedral+", "tetrahedral-"), default="tetrahedral+")
    s.add_argument("--steps", type=int, default=None, help="maximum number of new points")
    s.add_argument("--step", type=float, default=0.05)
    s.add_argument("--fine-step", type=float, default=0.005)
    s.add_argument("--direction", type=int, choices=(1, -1), default=1)
    s.add_argument("--a-limit", type=float, default=None)
    s.add_argument("--re-tol", type=float, default=1e-10)
    s.add_argument("--im-tol", type=float, default=1e-8)
    s.add_argument("--singular-tol", type=float, default=1e-5)
    s.add_argument("--plot-data", action="store_true", help="print (a, g) and (alpha, gamma) series as JSON")
    s.add_argument("--out", dest="out", default=None)
    s.set_defaults(func=_cmd_trace)

    s = sub.add_parser("invariants", help="Igusa invariants and chi_30 of the monopole curve")
    s.add_argument("--a", type=float, required=True)
    s.add_argument("--g", type=float, required=True)
    s.set_defaults(func=_cmd_invariants)

    s = sub.add_parser("elliptic-points", help="intersect a traced curve with chi_30 = 0")
    s.add_argument("--solutions", required=True, help="CSV with a and g columns")
    s.add_argument("--integers", default=None, help="n0,n,m0,m (default: from the sign of g)")
    s.add_argument("--no-refine", action="store_true")
    s.set_defaults(func=_cmd_elliptic_points)

    s = sub.add_parser("verify-tetrahedral", help="check both tetrahedral points")
    s.set_defaults(func=_cmd_verify)
    return p


def main(argv=None) -> int:
    """Entry point; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        records = args.func(args)
        if records is not None:
            emit_records(records, args.format or "json", args.out)
        return EXIT_OK
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except HypagmError as exc:  # informational states surfaced as domain errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
