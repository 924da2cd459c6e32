"""Command-line front end: exact numbers, certified roots, moment tables,
identity verification suites, distances to the limit law, and the CDF
comparison data behind the convergence figure.

Exit codes: 0 success, 1 verification or computation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from math import factorial

import numpy as np

from . import combinatorics, limit_law, measures, polynomials, serialize, series


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation: everything a command needs, parsed up front."""

    command: str
    n_values: tuple[int, ...] = ()
    p_max: int = 5
    n_max: int = 30
    order: int = 30
    tol: Fraction = polynomials.DEFAULT_TOL
    out: str | None = None
    format: str = "pretty"
    # numbers
    kind: str | None = None
    n: int | None = None
    k: int | None = None
    p: int | None = None
    # verify
    suite: str | None = None
    # figure grid
    t_min: float = 1e-3
    t_max: float = 1e3
    points: int = 601


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}")
    if not values or any(v < 1 for v in values):
        raise UsageError(f"expected positive integers, got {text!r}")
    return values


def _parse_tol(text: str) -> Fraction:
    try:
        tol = Fraction(Decimal(text))
    except (InvalidOperation, ValueError):
        raise UsageError(f"invalid tolerance {text!r}")
    if tol <= 0:
        raise UsageError("tolerance must be positive")
    return tol


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    command = args.command
    kwargs: dict = {"command": command}
    if hasattr(args, "n") and command != "numbers" and args.n is not None:
        kwargs["n_values"] = _parse_int_list(args.n)
    if hasattr(args, "tol"):
        kwargs["tol"] = _parse_tol(args.tol)
    if hasattr(args, "out"):
        kwargs["out"] = args.out
    if hasattr(args, "format"):
        kwargs["format"] = args.format
    if command == "numbers":
        kwargs.update(kind=args.kind, n=args.n, k=args.k, p=args.p)
    if command == "moments":
        if args.p_max < 1:
            raise UsageError("--p-max must be >= 1")
        kwargs["p_max"] = args.p_max
    if command == "verify":
        if args.n_max < 1:
            raise UsageError("--n-max must be >= 1")
        if args.order < 1:
            raise UsageError("--order must be >= 1")
        kwargs.update(suite=args.suite, n_max=args.n_max, order=args.order)
    if command == "figure":
        if args.points < 2 or args.t_min <= 0 or args.t_max <= args.t_min:
            raise UsageError("grid needs t_max > t_min > 0 and at least 2 points")
        kwargs.update(t_min=args.t_min, t_max=args.t_max, points=args.points)
    return RunConfig(**kwargs)


@contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _u_intervals(n: int, tol: Fraction) -> tuple[polynomials.RootInterval, ...]:
    return polynomials.refined_u_roots(n, tol)


def _mu_atoms(intervals) -> list[float]:
    # atoms of the root measure on [0, inf): -x = 1/u - 1
    return sorted(float(1 / iv.midpoint() - 1) for iv in intervals)


def cmd_numbers(cfg: RunConfig) -> int:
    if cfg.kind == "eulerian":
        if cfg.n is None:
            raise UsageError("numbers eulerian requires --n")
        if cfg.n < 1:
            raise UsageError("--n must be >= 1 for eulerian")
        if cfg.k is not None:
            print(combinatorics.eulerian(cfg.n, cfg.k))
        else:
            row = combinatorics.eulerian_row(cfg.n)
            if cfg.format == "csv":
                serialize.write_csv(
                    sys.stdout, ("k", "value"), ((str(k + 1), str(v)) for k, v in enumerate(row))
                )
            else:
                print(",".join(str(v) for v in row))
    elif cfg.kind == "stirling2":
        if cfg.n is None:
            raise UsageError("numbers stirling2 requires --n")
        if cfg.n < 0:
            raise UsageError("--n must be >= 0 for stirling2")
        if cfg.k is not None:
            print(combinatorics.stirling2(cfg.n, cfg.k))
        else:
            row = combinatorics.stirling2_row(cfg.n)
            if cfg.format == "csv":
                serialize.write_csv(
                    sys.stdout, ("k", "value"), ((str(k), str(v)) for k, v in enumerate(row))
                )
            else:
                print(",".join(str(v) for v in row))
    elif cfg.kind == "norlund":
        if cfg.p is None:
            raise UsageError("numbers norlund requires --p")
        if cfg.p < 0:
            raise UsageError("--p must be >= 0 for norlund")
        value = combinatorics.norlund_integral(cfg.p)
        if cfg.format == "csv":
            serialize.write_csv(
                sys.stdout, ("p", "value"), [(str(cfg.p), serialize.format_rational(value))]
            )
        else:
            print(serialize.format_rational(value))
    return 0


def cmd_roots(cfg: RunConfig) -> int:
    with _open_out(cfg.out) as out:
        rows = []
        for n in cfg.n_values:
            rows.extend(serialize.roots_csv_rows(n, _u_intervals(n, cfg.tol)))
        serialize.write_csv(out, serialize.ROOTS_HEADER, rows)
    return 0


def cmd_moments(cfg: RunConfig) -> int:
    with _open_out(cfg.out) as out:
        rows = []
        for n in cfg.n_values:
            if cfg.p_max > n:
                raise UsageError(f"--p-max must be <= n (got p_max={cfg.p_max}, n={n})")
            intervals = _u_intervals(n, cfg.tol)
            atoms = measures.EmpiricalMeasure.from_points(float(iv.midpoint()) for iv in intervals)
            exact = [m / (n + 1) for m in measures.exact_power_sums(n, cfg.p_max)]
            reports = measures.numeric_moments(atoms, cfg.p_max, Fraction(n + 1), exact=exact)
            rows.extend(serialize.moments_csv_rows(n, reports))
        serialize.write_csv(out, serialize.MOMENTS_HEADER, rows)
    return 0


def _verify_theorem2(n_max: int) -> tuple[bool, int, str]:
    instances = 0
    for n in range(1, n_max + 1):
        sums = measures.exact_power_sums(n, n)
        for p in range(1, n + 1):
            if sums[p - 1] != (n + 1) * measures.moment_reference(p):
                return False, instances, f"n={n} p={p}: {sums[p - 1]} != (n+1)*(-1)^p N_p/p!"
            instances += 1
    return True, instances, ""


def _verify_lemma_st_n(n_max: int) -> tuple[bool, int, str]:
    instances = 0
    for n in range(1, n_max + 1):
        for p in range(1, n + 1):
            rep = combinatorics.verify_stirling_norlund(n, p)
            if not rep.holds:
                return False, instances, f"n={n} p={p}: lhs={rep.lhs} rhs={rep.rhs}"
            instances += 1
    return True, instances, ""


def _verify_egf(order: int) -> tuple[bool, int, str]:
    via_egf = series.norlund_from_egf(order)
    via_integral = combinatorics.norlund_numbers(order)
    instances = 0
    for p, (a, b) in enumerate(zip(via_egf, via_integral)):
        if a != b:
            return False, instances, f"N_{p}: egf route {a} != integral route {b}"
        instances += 1
    for j in range(1, min(10, order) + 1):
        if not series.verify_stirling_egf(j, order):
            return False, instances, f"stirling column egf failed at j={j}"
        instances += 1
    return True, instances, ""


def _verify_eulerian_stirling(n_max: int) -> tuple[bool, int, str]:
    instances = 0
    for n in range(1, n_max + 1):
        for p in range(n + 1):
            rep = combinatorics.verify_eulerian_stirling_sum(n, p)
            if not rep.holds:
                return False, instances, f"n={n} p={p}: lhs={rep.lhs} rhs={rep.rhs}"
            instances += 1
    return True, instances, ""


def _verify_symmetry(n_max: int) -> tuple[bool, int, str]:
    instances = 0
    for n in range(1, n_max + 1):
        row = combinatorics.eulerian_row(n)
        for k in range(1, n + 1):
            if row[k - 1] != row[n - k]:
                return False, instances, f"A({n},{k}) != A({n},{n + 1 - k})"
            instances += 1
        if sum(row) != factorial(n):
            return False, instances, f"row {n} does not sum to {n}!"
        instances += 1
    return True, instances, ""


def cmd_verify(cfg: RunConfig) -> int:
    runners = {
        "theorem2": lambda: _verify_theorem2(cfg.n_max),
        "lemma-st-n": lambda: _verify_lemma_st_n(cfg.n_max),
        "egf": lambda: _verify_egf(cfg.order),
        "eulerian-stirling": lambda: _verify_eulerian_stirling(cfg.n_max),
        "symmetry": lambda: _verify_symmetry(cfg.n_max),
    }
    ok, instances, detail = runners[cfg.suite]()
    if ok:
        print(f"PASS {cfg.suite} ({instances} identity instances)")
        return 0
    print(f"FAIL {cfg.suite} after {instances} instances: {detail}", file=sys.stderr)
    return 1


def cmd_dist(cfg: RunConfig) -> int:
    rows = []
    for n in cfg.n_values:
        atoms = measures.EmpiricalMeasure.from_points(_mu_atoms(_u_intervals(n, cfg.tol)))
        rows.append((n, measures.ks_distance(atoms, limit_law.cdf_mu)))
    with _open_out(cfg.out) as out:
        if cfg.format == "csv":
            serialize.write_csv(out, ("n", "ks"), ((str(n), serialize.format_float(d)) for n, d in rows))
        else:
            for n, d in rows:
                print(f"n={n}  ks={d:.6f}", file=out)
    return 0


def cmd_figure(cfg: RunConfig) -> int:
    grid = np.logspace(np.log10(cfg.t_min), np.log10(cfg.t_max), cfg.points)
    try:
        measures_by_n = {
            n: measures.EmpiricalMeasure.from_points(_mu_atoms(_u_intervals(n, cfg.tol)))
            for n in cfg.n_values
        }
    except polynomials.RootCountMismatch as exc:
        print(f"root isolation failed: {exc}", file=sys.stderr)
        return 1
    header = ["t", "cdf_limit"] + [f"cdf_n{n}" for n in cfg.n_values]
    rows = []
    for t in grid:
        t = float(t)
        row = [serialize.format_float(t), serialize.format_float(limit_law.cdf_mu(t))]
        row.extend(
            serialize.format_float(measures.empirical_cdf(measures_by_n[n], t))
            for n in cfg.n_values
        )
        rows.append(row)
    with _open_out(cfg.out) as out:
        serialize.write_csv(out, header, rows)
    return 0


_COMMANDS = {
    "numbers": cmd_numbers,
    "roots": cmd_roots,
    "moments": cmd_moments,
    "verify": cmd_verify,
    "dist": cmd_dist,
    "figure": cmd_figure,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerian-roots",
        description="Exact Eulerian-polynomial roots, Norlund identities, and the log-Cauchy limit law.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_numbers = sub.add_parser("numbers", help="print exact combinatorial numbers")
    p_numbers.add_argument("kind", choices=("eulerian", "stirling2", "norlund"))
    p_numbers.add_argument("--n", type=int, default=None)
    p_numbers.add_argument("--k", type=int, default=None)
    p_numbers.add_argument("--p", type=int, default=None)
    p_numbers.add_argument("--format", choices=("pretty", "csv"), default="pretty")

    p_roots = sub.add_parser("roots", help="isolate and refine u-roots, emit CSV")
    p_roots.add_argument("--n", required=True, help="comma-separated list of n values")
    p_roots.add_argument("--tol", default="1e-30")
    p_roots.add_argument("--out", default=None)

    p_moments = sub.add_parser("moments", help="numeric vs exact normalized moments, emit CSV")
    p_moments.add_argument("--n", required=True)
    p_moments.add_argument("--p-max", type=int, default=5)
    p_moments.add_argument("--tol", default="1e-30")
    p_moments.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="run an exact identity suite")
    p_verify.add_argument(
        "suite",
        choices=("theorem2", "lemma-st-n", "egf", "eulerian-stirling", "symmetry"),
    )
    p_verify.add_argument("--n-max", type=int, default=30)
    p_verify.add_argument("--order", type=int, default=30)

    p_dist = sub.add_parser("dist", help="Kolmogorov-Smirnov distance to the limit law")
    p_dist.add_argument("--n", required=True)
    p_dist.add_argument("--tol", default="1e-30")
    p_dist.add_argument("--out", default=None)
    p_dist.add_argument("--format", choices=("pretty", "csv"), default="pretty")

    p_figure = sub.add_parser("figure", help="CDF comparison grid for the convergence figure")
    p_figure.add_argument("--n", default="10,100")
    p_figure.add_argument("--t-min", type=float, default=1e-3)
    p_figure.add_argument("--t-max", type=float, default=1e3)
    p_figure.add_argument("--points", type=int, default=601)
    p_figure.add_argument("--tol", default="1e-30")
    p_figure.add_argument("--out", default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        polynomials._worker_cap()
        cfg = _config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except (UsageError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except polynomials.RootCountMismatch as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
