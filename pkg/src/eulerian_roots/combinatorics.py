"""Exact combinatorial numbers and the identities that tie them together.

Everything here is integer or rational arithmetic at arbitrary precision:
plain ``int`` for Eulerian and Stirling numbers, ``fractions.Fraction`` for
Norlund numbers and identity values. No floating point is used anywhere in
this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "eulerian",
    "eulerian_row",
    "stirling2",
    "stirling2_row",
    "norlund_integral",
    "norlund_numbers",
    "u_elementary",
    "IdentityReport",
    "verify_stirling_norlund",
    "verify_eulerian_stirling_sum",
]


@lru_cache(maxsize=None)
def eulerian_row(n: int) -> tuple[int, ...]:
    """Row ``(A(n,1), ..., A(n,n))`` of the Eulerian triangle."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return (1,)
    prev = eulerian_row(n - 1)
    row = []
    for k in range(1, n + 1):
        # A(n,k) = k*A(n-1,k) + (n-k+1)*A(n-1,k-1)
        val = k * prev[k - 1] if k <= n - 1 else 0
        if k >= 2:
            val += (n - k + 1) * prev[k - 2]
        row.append(val)
    return tuple(row)


def eulerian(n: int, k: int) -> int:
    """Eulerian number A(n,k): permutations of {1..n} with exactly k-1 descents.

    Out-of-range k yields 0.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1 or k > n:
        return 0
    return eulerian_row(n)[k - 1]


@lru_cache(maxsize=None)
def stirling2_row(n: int) -> tuple[int, ...]:
    """Row ``(S(n,0), ..., S(n,n))`` of the second-kind Stirling triangle."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return (1,)
    prev = stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        # S(n,k) = k*S(n-1,k) + S(n-1,k-1)
        row[k] = (k * prev[k] if k <= n - 1 else 0) + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n,k), with S(0,0)=1 and S(n,0)=0 for n>=1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return stirling2_row(n)[k]


@lru_cache(maxsize=None)
def _falling_product_coeffs(p: int) -> tuple[int, ...]:
    """Ascending integer coefficients of (x-1)(x-2)...(x-p); the empty product is 1."""
    coeffs = [1]
    for j in range(1, p + 1):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= j * c
        coeffs = nxt
    return tuple(coeffs)


def norlund_integral(p: int) -> Fraction:
    """Norlund number N_p, by expanding (x-1)...(x-p) and integrating over [0,1].

    N_0 = 1 by convention. This integral expansion is the canonical route;
    the generating-function route in :mod:`eulerian_roots.series` must agree
    with it exactly.
    """
    if p < 0:
        raise ValueError("p must be >= 0")
    coeffs = _falling_product_coeffs(p)
    return sum((Fraction(c, i + 1) for i, c in enumerate(coeffs)), Fraction(0))


def norlund_numbers(p_max: int) -> list[Fraction]:
    """The list [N_0, ..., N_p_max] via the integral route."""
    return [norlund_integral(p) for p in range(p_max + 1)]


def u_elementary(n: int, p: int) -> Fraction:
    """Elementary symmetric function e_{n,p} of the transformed Eulerian roots
    u = 1/(1-x), in closed form: (n-p)!/n! * S(n+1, n-p+1)."""
    if not 0 <= p <= n:
        raise ValueError("need 0 <= p <= n")
    return Fraction(factorial(n - p) * stirling2(n + 1, n - p + 1), factorial(n))


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of an exact identity check, carrying both side values."""

    holds: bool
    lhs: Fraction
    rhs: Fraction

    def __bool__(self) -> bool:
        return self.holds


def verify_stirling_norlund(n: int, p: int) -> IdentityReport:
    """Check sum_{i=0}^{n-p} C(p+i-1,i) S(n,p+i) N_i == (p/n) S(n,p) exactly."""
    if not 1 <= p <= n:
        raise ValueError("need 1 <= p <= n")
    row = stirling2_row(n)
    lhs = sum(
        (comb(p + i - 1, i) * row[p + i] * norlund_integral(i) for i in range(n - p + 1)),
        Fraction(0),
    )
    rhs = Fraction(p, n) * row[p]
    return IdentityReport(lhs == rhs, lhs, rhs)


def verify_eulerian_stirling_sum(n: int, p: int) -> IdentityReport:
    """Check sum_{k=p}^{n} C(k,p) A(n,k) == (n-p)! S(n+1, n-p+1) exactly."""
    if not 0 <= p <= n:
        raise ValueError("need 0 <= p <= n")
    row = eulerian_row(n)
    lhs = sum(comb(k, p) * row[k - 1] for k in range(max(p, 1), n + 1))
    rhs = factorial(n - p) * stirling2(n + 1, n - p + 1)
    return IdentityReport(lhs == rhs, Fraction(lhs), Fraction(rhs))
