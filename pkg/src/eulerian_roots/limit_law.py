"""The two limiting laws: the compactly supported law on [0, 1] whose moments
are the normalized Norlund numbers, and its heavy-tailed image on [0, inf),
the law of exp(pi*Z) for Z standard Cauchy.

Stieltjes transforms use the convention S(t) = integral of 1/(x - t), with the
principal branch of the logarithm; evaluation on the support cut raises
DomainError rather than silently picking a side.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import factorial, pi

from scipy.integrate import quad

from .combinatorics import norlund_integral

__all__ = [
    "DomainError",
    "density_mu",
    "cdf_mu",
    "moment_nu",
    "stieltjes_nu",
    "stieltjes_mu",
    "inverse_stieltjes_mass",
]

# points this close to the real axis count as on the branch cut
_CUT_TOL = 1e-12
# switch to the moment series inside this disk around the removable point t=-1
_SERIES_RADIUS = 1e-6


class DomainError(ValueError):
    """Stieltjes transform evaluated on the support of its measure."""


def density_mu(t: float) -> float:
    """Density 1/(t (log^2 t + pi^2)) on t > 0, zero elsewhere."""
    if t <= 0.0:
        return 0.0
    lg = math.log(t)
    return 1.0 / (t * (lg * lg + pi * pi))


def cdf_mu(t: float) -> float:
    """Distribution function of exp(pi*Z), Z standard Cauchy:
    1/2 + arctan(log(t)/pi)/pi on t > 0, zero elsewhere."""
    if t <= 0.0:
        return 0.0
    return 0.5 + math.atan(math.log(t) / pi) / pi


def moment_nu(p: int) -> Fraction:
    """Exact p-th moment of the [0,1]-supported law: (-1)^p N_p / p!."""
    if p < 0:
        raise ValueError("p must be >= 0")
    return (-1) ** p * norlund_integral(p) / factorial(p)


def stieltjes_nu(t: complex) -> complex:
    """S(t) = 1/(t (t-1) log(1 - 1/t)), analytic off the segment [0, 1]."""
    t = complex(t)
    if abs(t.imag) <= _CUT_TOL and -_CUT_TOL <= t.real <= 1.0 + _CUT_TOL:
        raise DomainError(f"{t} lies on the support segment [0, 1]")
    return 1.0 / (t * (t - 1.0) * cmath.log(1.0 - 1.0 / t))


@lru_cache(maxsize=None)
def _nu_moment_floats(count: int) -> tuple[float, ...]:
    return tuple(float(moment_nu(p)) for p in range(1, count + 1))


def stieltjes_mu(t: complex) -> complex:
    """S(t) = -1/(1+t) + 1/(t log(-t)), analytic off the ray [0, inf).

    The two terms share a cancelling simple pole at t = -1 (log(-t) vanishes
    there); a short moment-series expansion takes over inside a small disk so
    the evaluation stays accurate through the removable point.
    """
    t = complex(t)
    if abs(t.imag) <= _CUT_TOL and t.real >= -_CUT_TOL:
        raise DomainError(f"{t} lies on the support ray [0, inf)")
    h = t + 1.0
    if abs(h) < _SERIES_RADIUS:
        # S(-1 + h) = sum_{p>=1} m_p h^(p-1) with m_p the normalized moments
        acc = complex(0.0)
        hp = complex(1.0)
        for m in _nu_moment_floats(8):
            acc += m * hp
            hp *= h
        return acc
    return -1.0 / h + 1.0 / (t * cmath.log(-t))


def inverse_stieltjes_mass(a: float, b: float, eps: float) -> float:
    """Approximate mass on [a, b] by (1/pi) times the integral of the
    imaginary part of the transform evaluated just above the real axis."""
    if a > b:
        raise ValueError("need a <= b")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if a == b:
        return 0.0
    value, _ = quad(
        lambda lam: stieltjes_mu(complex(lam, eps)).imag,
        a,
        b,
        epsabs=1e-12,
        limit=400,
    )
    return value / pi
