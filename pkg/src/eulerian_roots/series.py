"""Truncated formal power series over exact rationals.

Used to realize the generating-function route to Norlund numbers and to check
the column generating functions of Stirling numbers against the recurrence
route. All coefficients are ``fractions.Fraction``; truncation order is always
explicit and operations truncate to the shorter operand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .combinatorics import stirling2_row

__all__ = [
    "TruncatedSeries",
    "series_mul",
    "series_div",
    "log1p",
    "exp_series",
    "norlund_from_egf",
    "verify_stirling_egf",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """Formal power series truncated at a fixed order (inclusive).

    ``coeffs[i]`` is the coefficient of t**i; the tuple always has exactly
    ``order + 1`` entries.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")

    @classmethod
    def from_coeffs(cls, values: Iterable[Fraction | int], order: int) -> TruncatedSeries:
        vals = [Fraction(v) for v in values][: order + 1]
        vals.extend(Fraction(0) for _ in range(order + 1 - len(vals)))
        return cls(tuple(vals))

    @classmethod
    def constant(cls, value: Fraction | int, order: int) -> TruncatedSeries:
        return cls.from_coeffs([value], order)

    @classmethod
    def identity(cls, order: int) -> TruncatedSeries:
        """The series t."""
        return cls.from_coeffs([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def truncate(self, order: int) -> TruncatedSeries:
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        k = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(k + 1)))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        k = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(k + 1)))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __truediv__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_div(self, other)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the smaller input order."""
    k = min(a.order, b.order)
    out = [Fraction(0)] * (k + 1)
    for i, ca in enumerate(a.coeffs[: k + 1]):
        if not ca:
            continue
        for j in range(k + 1 - i):
            cb = b.coeffs[j]
            if cb:
                out[i + j] += ca * cb
    return TruncatedSeries(tuple(out))


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Quotient q with q*b == a up to truncation; b must have nonzero constant term."""
    if b.coeffs[0] == 0:
        raise ZeroDivisionError("series division by a series with zero constant term")
    k = min(a.order, b.order)
    inv0 = 1 / b.coeffs[0]
    out: list[Fraction] = []
    for i in range(k + 1):
        acc = a.coeffs[i]
        for j in range(1, i + 1):
            if b.coeffs[j]:
                acc -= b.coeffs[j] * out[i - j]
        out.append(acc * inv0)
    return TruncatedSeries(tuple(out))


def log1p(order: int) -> TruncatedSeries:
    """log(1+t) = sum_{q>=1} (-1)^(q+1) t^q / q, up to the given order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [Fraction(0)] + [Fraction((-1) ** (q + 1), q) for q in range(1, order + 1)]
    return TruncatedSeries(tuple(coeffs))


def exp_series(a: TruncatedSeries) -> TruncatedSeries:
    """Exponential of a series with zero constant term."""
    if a.coeffs[0] != 0:
        raise ValueError("exp needs a zero constant term")
    k = a.order
    out = [Fraction(1)] + [Fraction(0)] * k
    # b' = a'.b termwise: n*b_n = sum_{j=1..n} j*a_j*b_{n-j}
    for n in range(1, k + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            if a.coeffs[j]:
                acc += j * a.coeffs[j] * out[n - j]
        out[n] = acc / n
    return TruncatedSeries(tuple(out))


def norlund_from_egf(max_p: int) -> list[Fraction]:
    """[N_0, ..., N_max_p] read off the exponential generating function
    t / ((1+t) log(1+t)).

    The formal factor t is cancelled against log(1+t) by an explicit
    coefficient shift, never by evaluation at 0.
    """
    if max_p < 0:
        raise ValueError("max_p must be >= 0")
    order = max_p
    # log(1+t)/t, i.e. log1p shifted down one degree
    shifted = TruncatedSeries(tuple(Fraction((-1) ** q, q + 1) for q in range(order + 1)))
    one_plus_t = TruncatedSeries.from_coeffs([1, 1], order)
    denom = series_mul(one_plus_t, shifted)
    egf = series_div(TruncatedSeries.constant(1, order), denom)
    return [factorial(q) * egf[q] for q in range(order + 1)]


def verify_stirling_egf(j: int, order: int) -> bool:
    """Check that (e^x - 1)^j / j! has coefficients S(n,j)/n! up to the order."""
    if j < 1:
        raise ValueError("j must be >= 1")
    if order < j:
        raise ValueError("order must be >= j")
    expm1 = exp_series(TruncatedSeries.identity(order)) - TruncatedSeries.constant(1, order)
    power = TruncatedSeries.constant(1, order)
    for _ in range(j):
        power = series_mul(power, expm1)
    scale = Fraction(1, factorial(j))
    for n in range(order + 1):
        expected = Fraction(stirling2_row(n)[j], factorial(n)) if j <= n else Fraction(0)
        if scale * power[n] != expected:
            return False
    return True


def series_coefficients(ts: TruncatedSeries) -> Sequence[Fraction]:
    """The full coefficient tuple, constant term first."""
    return ts.coeffs
