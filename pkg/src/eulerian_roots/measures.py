"""Empirical root measures, exact power sums, and distances to a reference law.

The exact side works over Fractions via Newton's identities in the
elementary-to-power-sum direction; the numeric side wraps sorted float64
atoms with uniform weights.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence

from .combinatorics import norlund_integral, u_elementary

__all__ = [
    "EmpiricalMeasure",
    "MomentReport",
    "exact_power_sums",
    "moment_reference",
    "numeric_moments",
    "empirical_cdf",
    "ks_distance",
]


@dataclass(frozen=True)
class EmpiricalMeasure:
    """Uniform-weight atomic probability measure on sorted float64 points."""

    atoms: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.atoms:
            raise ValueError("empirical measure needs at least one atom")
        if any(a > b for a, b in zip(self.atoms, self.atoms[1:])):
            raise ValueError("atoms must be sorted non-decreasing")

    @classmethod
    def from_points(cls, points: Iterable[float]) -> EmpiricalMeasure:
        return cls(tuple(sorted(float(p) for p in points)))

    @property
    def n(self) -> int:
        return len(self.atoms)


def exact_power_sums(n: int, p_max: int) -> list[Fraction]:
    """Power sums m_1..m_p_max of the u-roots for a given n, computed exactly
    from the Stirling-form elementary symmetric functions via Newton's
    identities: m_p = (-1)^(p-1) p e_p + sum_{i<p} (-1)^(p-1+i) e_{p-i} m_i."""
    if not 1 <= p_max <= n:
        raise ValueError("need 1 <= p_max <= n")
    e = [u_elementary(n, p) for p in range(p_max + 1)]
    m: list[Fraction] = []
    for p in range(1, p_max + 1):
        acc = (-1) ** (p - 1) * p * e[p]
        for i in range(1, p):
            acc += (-1) ** (p - 1 + i) * e[p - i] * m[i - 1]
        m.append(acc)
    return m


def moment_reference(p: int) -> Fraction:
    """The n-independent normalized moment target (-1)^p N_p / p!."""
    return (-1) ** p * norlund_integral(p) / factorial(p)


@dataclass(frozen=True)
class MomentReport:
    """One moment comparison: numeric estimate against the exact target."""

    p: int
    numeric: float
    reference: Fraction
    abs_error: float
    exact: Fraction | None = None


def numeric_moments(
    measure: EmpiricalMeasure,
    p_max: int,
    rescale: Fraction,
    exact: Sequence[Fraction] | None = None,
) -> list[MomentReport]:
    """Moment reports sum(atoms^p)/rescale against the reference (-1)^p N_p/p!.

    ``exact`` optionally supplies the exact normalized moments (index p-1) to
    carry alongside the float estimates.
    """
    if p_max < 1:
        raise ValueError("p_max must be >= 1")
    rescale = Fraction(rescale)
    if rescale <= 0:
        raise ValueError("rescale must be positive")
    scale = float(rescale)
    reports = []
    for p in range(1, p_max + 1):
        numeric = math.fsum(a**p for a in measure.atoms) / scale
        reference = moment_reference(p)
        exact_p = exact[p - 1] if exact is not None else None
        reports.append(MomentReport(p, numeric, reference, abs(numeric - float(reference)), exact_p))
    return reports


def empirical_cdf(measure: EmpiricalMeasure, t: float) -> float:
    """Right-continuous step CDF: fraction of atoms <= t."""
    return bisect.bisect_right(measure.atoms, t) / measure.n


def ks_distance(measure: EmpiricalMeasure, cdf: Callable[[float], float]) -> float:
    """Kolmogorov-Smirnov statistic between the atomic measure and a
    continuous reference CDF: sup_i max(|F(a_i) - i/n|, |F(a_i) - (i-1)/n|)."""
    n = measure.n
    worst = 0.0
    for i, a in enumerate(measure.atoms, start=1):
        f = cdf(a)
        worst = max(worst, abs(f - i / n), abs(f - (i - 1) / n))
    return worst
