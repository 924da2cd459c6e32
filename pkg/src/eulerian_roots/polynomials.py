"""Eulerian polynomials, their u-transformed counterparts, and certified
real-root isolation over exact rationals.

Roots are isolated in u = 1/(1-x) coordinates, where the whole spectrum lives
in (0, 1]; the exact map x = 1 - 1/u then recovers the original roots without
losing the enormous dynamic range (the most negative x-root grows like -2^n).

The Sturm machinery runs on integer coefficient lists obtained by clearing
denominators: every remainder is reduced to its primitive part, which keeps
coefficient growth polynomial and is sign-faithful (all rescalings are by
positive rationals). Sign evaluations at rational points are exact integer
arithmetic; no floating point enters any bracketing decision.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .combinatorics import eulerian_row, u_elementary

__all__ = [
    "DensePoly",
    "RootInterval",
    "RootCountMismatch",
    "eulerian_poly",
    "u_poly",
    "sturm_isolate",
    "refine_root",
    "roots_x_from_u",
    "isolated_u_roots",
    "refined_u_roots",
    "DEFAULT_TOL",
]

DEFAULT_TOL = Fraction(1, 10**30)


class RootCountMismatch(RuntimeError):
    """The Sturm root count disagrees with the expected number of roots."""


@dataclass(frozen=True)
class DensePoly:
    """Dense univariate polynomial with exact rational coefficients, ascending
    degree, trailing zeros stripped (the zero polynomial has no coefficients)."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, values) -> DensePoly:
        vals = [Fraction(v) for v in values]
        while vals and vals[-1] == 0:
            vals.pop()
        return cls(tuple(vals))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> DensePoly:
        return DensePoly(tuple(i * c for i, c in enumerate(self.coeffs) if i >= 1))

    def deflate_linear(self, root: Fraction) -> DensePoly:
        """Exact synthetic division by (x - root); root must be an exact root."""
        if not self.coeffs:
            raise ValueError("cannot deflate the zero polynomial")
        d = self.degree
        out = [Fraction(0)] * d
        acc = self.coeffs[d]
        for i in range(d - 1, -1, -1):
            out[i] = acc
            acc = self.coeffs[i] + acc * root
        if acc != 0:
            raise ValueError(f"{root} is not an exact root (remainder {acc})")
        return DensePoly(tuple(out))


@dataclass(frozen=True)
class RootInterval:
    """Closed rational interval certified to contain exactly one simple root.

    For exactly-known roots, lo == hi == exact_point and the polynomial
    vanishes there identically.
    """

    lo: Fraction
    hi: Fraction
    exact_point: Fraction | None = None

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")
        if self.exact_point is not None and not self.lo <= self.exact_point <= self.hi:
            raise ValueError("exact point outside the interval")

    @classmethod
    def exact(cls, point: Fraction) -> RootInterval:
        point = Fraction(point)
        return cls(point, point, point)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        if self.exact_point is not None:
            return self.exact_point
        return (self.lo + self.hi) / 2


def eulerian_poly(n: int) -> DensePoly:
    """The degree-n Eulerian polynomial: zero constant term, monic, row n of
    the Eulerian triangle as coefficients."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return DensePoly.from_coeffs((0, *eulerian_row(n)))


def u_poly(n: int) -> DensePoly:
    """Monic degree-n polynomial whose roots are u = 1/(1-x) over the roots x
    of the degree-n Eulerian polynomial; coefficient of y^(n-p) is (-1)^p times
    the elementary symmetric function e_{n,p} in Stirling closed form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = [Fraction(0)] * (n + 1)
    for p in range(n + 1):
        coeffs[n - p] = (-1) ** p * u_elementary(n, p)
    return DensePoly(tuple(coeffs))


# ---------------------------------------------------------------------------
# integer-core Sturm machinery
# ---------------------------------------------------------------------------


def _int_coeffs(p: DensePoly) -> tuple[int, ...]:
    """Clear denominators: primitive integer coefficient list, same roots/signs."""
    if not p.coeffs:
        return ()
    scale = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * scale) for c in p.coeffs]
    return tuple(_primitive(ints))


def _content(cs: list[int]) -> int:
    g = 0
    for c in cs:
        if c:
            g = gcd(g, c)
            if g == 1:
                return 1
    return g or 1


def _primitive(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    g = _content(cs)
    if g > 1:
        cs = [c // g for c in cs]
    return cs


def _derivative_int(cs) -> list[int]:
    return [i * c for i, c in enumerate(cs)][1:]


def _prem_neg_primitive(a, b) -> list[int]:
    """Primitive part of -rem(a, b), rescaled only by positive rationals so
    the sign structure of the Sturm sequence is preserved."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    e = da - db + 1
    r = list(a)
    steps = 0
    while r and len(r) - 1 >= db:
        dr = len(r) - 1
        top = r[-1]
        r = [lb * c for c in r]
        k = dr - db
        for i in range(db + 1):
            r[i + k] -= top * b[i]
        while r and r[-1] == 0:
            r.pop()
        steps += 1
    if steps < e and r:
        m = lb ** (e - steps)
        r = [c * m for c in r]
    # overall multiplier is lb**e; flip once more unless that was negative
    if not (lb < 0 and e % 2 == 1):
        r = [-c for c in r]
    return _primitive(r)


def _sturm_chain(cs) -> list[list[int]]:
    f = _primitive(list(cs))
    chain = [f]
    g = _primitive(_derivative_int(f))
    while g:
        chain.append(g)
        g = _prem_neg_primitive(chain[-2], chain[-1])
    return chain


def _sign_at(cs, num: int, den: int) -> int:
    """Exact sign of the integer polynomial at num/den (den > 0)."""
    d = len(cs) - 1
    acc = 0
    dp = 1
    for i in range(d, -1, -1):
        acc = acc * num + cs[i] * dp
        if i:
            dp *= den
    return (acc > 0) - (acc < 0)


def _variations(chain, point: Fraction) -> int:
    """Sign variations of the chain at a rational point, zeros skipped."""
    num, den = point.numerator, point.denominator
    count = 0
    prev = 0
    for cs in chain:
        sg = _sign_at(cs, num, den)
        if sg == 0:
            continue
        if prev and sg != prev:
            count += 1
        prev = sg
    return count


def _isolate_core(ints, lo: Fraction, hi: Fraction, expected: int) -> list[RootInterval]:
    """Isolate all roots in (lo, hi]; the zero-skipping variation count makes
    the half-open convention exact even when an endpoint is itself a root."""
    if not ints or len(ints) == 1:
        if expected != 0:
            raise RootCountMismatch(f"expected {expected} roots, polynomial has none")
        return []
    chain = _sturm_chain(list(ints))
    f = chain[0]
    v_lo, v_hi = _variations(chain, lo), _variations(chain, hi)
    total = v_lo - v_hi
    if total != expected:
        raise RootCountMismatch(f"Sturm count {total} in ({lo}, {hi}] but expected {expected}")
    out: list[RootInterval] = []
    stack = [(lo, hi, v_lo, v_hi)]
    splits = 0
    max_splits = 512 * (len(ints) + 1) + 8192
    while stack:
        a, b, va, vb = stack.pop()
        cnt = va - vb
        if cnt == 0:
            continue
        if cnt == 1:
            if _sign_at(f, b.numerator, b.denominator) == 0:
                out.append(RootInterval.exact(b))
            else:
                out.append(RootInterval(a, b))
            continue
        splits += 1
        if splits > max_splits:
            raise RuntimeError("root isolation did not converge; input may not be squarefree")
        m = (a + b) / 2
        vm = _variations(chain, m)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out


def sturm_isolate(p: DensePoly, lo: Fraction, hi: Fraction) -> list[RootInterval]:
    """Isolate every root of p in (lo, hi] into pairwise-disjoint intervals,
    one simple root each; raises RootCountMismatch unless the Sturm count in
    the interval equals the degree."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError("need lo < hi")
    return _isolate_core(_int_coeffs(p), lo, hi, max(p.degree, 0))


def _refine_core(ints, iv: RootInterval, tol: Fraction) -> RootInterval:
    if iv.exact_point is not None:
        return iv
    lo, hi = iv.lo, iv.hi
    s_hi = _sign_at(ints, hi.numerator, hi.denominator)
    if s_hi == 0:
        return RootInterval.exact(hi)
    s_lo = _sign_at(ints, lo.numerator, lo.denominator)
    while s_lo == 0:
        # lo itself is a (different, uncounted) root; step inside the interval
        probe = lo + (hi - lo) / 2
        sp = _sign_at(ints, probe.numerator, probe.denominator)
        if sp == 0:
            return RootInterval.exact(probe)
        if sp != s_hi:
            lo, s_lo = probe, sp
        else:
            hi = probe
    while hi - lo > tol:
        m = (lo + hi) / 2
        sm = _sign_at(ints, m.numerator, m.denominator)
        if sm == 0:
            return RootInterval.exact(m)
        if sm == s_lo:
            lo = m
        else:
            hi = m
    return RootInterval(lo, hi)


def refine_root(p: DensePoly, iv: RootInterval, tol: Fraction) -> RootInterval:
    """Shrink an isolating interval by sign bisection until its width is at
    most tol; exactly-known roots pass through unchanged. The returned
    endpoints evaluate with strictly opposite signs."""
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    return _refine_core(_int_coeffs(p), iv, tol)


def roots_x_from_u(u_roots) -> list[RootInterval]:
    """Map u-root intervals back to x-root intervals through the exact
    increasing bijection x = 1 - 1/u; the exact root u = 1 maps to x = 0."""
    out = []
    for iv in u_roots:
        if iv.exact_point is not None:
            x = 1 - 1 / iv.exact_point
            out.append(RootInterval.exact(x))
            continue
        if iv.lo <= 0:
            raise ValueError("u interval must lie strictly inside (0, 1]")
        out.append(RootInterval(1 - 1 / iv.lo, 1 - 1 / iv.hi))
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out


# ---------------------------------------------------------------------------
# cached end-to-end pipeline for the u-root family
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _u_int_deflated(n: int) -> tuple[int, ...]:
    """Primitive integer coefficients of u_poly(n) with the exact root u = 1
    divided out, so isolation never sees a root on the search boundary."""
    ints = list(_int_coeffs(u_poly(n)))
    d = len(ints) - 1
    out = [0] * d
    acc = ints[d]
    for i in range(d - 1, -1, -1):
        out[i] = acc
        acc = ints[i] + acc
    if acc != 0:
        raise AssertionError("u = 1 is not a root; construction bug")
    return tuple(out)


@lru_cache(maxsize=None)
def isolated_u_roots(n: int) -> tuple[RootInterval, ...]:
    """All n u-roots of u_poly(n): the exact root 1 plus n-1 isolated simple
    roots in (0, 1), sorted increasingly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    roots = [RootInterval.exact(Fraction(1))]
    if n > 1:
        roots.extend(_isolate_core(_u_int_deflated(n), Fraction(0), Fraction(1), n - 1))
    roots.sort(key=lambda iv: (iv.lo, iv.hi))
    if len(roots) != n:
        raise RootCountMismatch(f"got {len(roots)} roots for n={n}")
    return tuple(roots)


def _worker_cap() -> int:
    raw = os.environ.get("EULERIAN_ROOTS_THREADS")
    if raw is None:
        return 0
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"EULERIAN_ROOTS_THREADS must be a non-negative integer, got {raw!r}")
    if cap < 0:
        raise ValueError("EULERIAN_ROOTS_THREADS must be >= 0")
    return cap


def refined_u_roots(
    n: int,
    tol: Fraction = DEFAULT_TOL,
    x_width: Fraction | None = None,
) -> tuple[RootInterval, ...]:
    """Isolated u-roots refined to width <= tol, always pushed off 0 so the
    map to x-coordinates is finite; when x_width is given, each interval is
    additionally refined until its image under x = 1 - 1/u has width at most
    x_width (needed when the x-roots themselves are consumed numerically,
    since the width blows up by a factor 1/u^2)."""
    return _refined_u_roots_cached(
        n, Fraction(tol), None if x_width is None else Fraction(x_width)
    )


@lru_cache(maxsize=None)
def _refined_u_roots_cached(
    n: int, tol: Fraction, x_width: Fraction | None
) -> tuple[RootInterval, ...]:
    _worker_cap()  # the cap contract is validated here; refinement runs serially
    ints = _u_int_deflated(n) if n > 1 else None
    out = []
    for iv in isolated_u_roots(n):
        if iv.exact_point is None:
            iv = _refine_core(ints, iv, tol)
        while iv.exact_point is None and iv.lo <= 0:
            iv = _refine_core(ints, iv, iv.width / 2)
        if x_width is not None:
            while iv.exact_point is None and iv.width > x_width * iv.lo * iv.hi:
                iv = _refine_core(ints, iv, x_width * iv.lo * iv.lo)
        out.append(iv)
    return tuple(out)
