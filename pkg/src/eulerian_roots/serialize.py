"""Stable text encodings: rationals as num/den, floats at 17 significant
digits, and the CSV row schemas shared by the CLI and the library."""

from __future__ import annotations

import csv
from fractions import Fraction
from typing import IO, Iterable, Sequence

from .measures import MomentReport
from .polynomials import RootInterval
from .series import TruncatedSeries

__all__ = [
    "format_rational",
    "parse_rational",
    "format_float",
    "write_csv",
    "series_csv_rows",
    "roots_csv_rows",
    "moments_csv_rows",
    "grid_csv_rows",
]


def format_rational(q: Fraction) -> str:
    """Always num/den, e.g. 251/30, -1/2, 3/1."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def format_float(x: float) -> str:
    return f"{x:.17g}"


def write_csv(out: IO[str], header: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)


SERIES_HEADER = ("index", "coefficient")


def series_csv_rows(ts: TruncatedSeries) -> list[tuple[str, str]]:
    return [(str(i), format_rational(c)) for i, c in enumerate(ts.coeffs)]


ROOTS_HEADER = ("n", "k", "u_lo", "u_hi", "u_mid_float", "x_mid_float", "exact_flag")


def roots_csv_rows(n: int, intervals: Sequence[RootInterval]) -> list[tuple[str, ...]]:
    rows = []
    for k, iv in enumerate(intervals, start=1):
        u_mid = iv.midpoint()
        if iv.exact_point is not None:
            x_mid = 1 - 1 / iv.exact_point
        else:
            x_mid = (2 - 1 / iv.lo - 1 / iv.hi) / 2
        rows.append(
            (
                str(n),
                str(k),
                format_rational(iv.lo),
                format_rational(iv.hi),
                format_float(float(u_mid)),
                format_float(float(x_mid)),
                "1" if iv.exact_point is not None else "0",
            )
        )
    return rows


MOMENTS_HEADER = ("n", "p", "exact", "numeric", "reference", "abs_error")


def moments_csv_rows(n: int, reports: Sequence[MomentReport]) -> list[tuple[str, ...]]:
    rows = []
    for rep in reports:
        rows.append(
            (
                str(n),
                str(rep.p),
                format_rational(rep.exact) if rep.exact is not None else "",
                format_float(rep.numeric),
                format_rational(rep.reference),
                format_float(rep.abs_error),
            )
        )
    return rows


GRID_HEADER = ("t", "density", "cdf")


def grid_csv_rows(ts: Sequence[float], densities: Sequence[float], cdfs: Sequence[float]) -> list[tuple[str, ...]]:
    return [
        (format_float(t), format_float(d), format_float(c))
        for t, d, c in zip(ts, densities, cdfs)
    ]
