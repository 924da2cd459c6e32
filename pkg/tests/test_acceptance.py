"""End-to-end acceptance gate.

Each test pins one shipping criterion at its stated tolerance and prints a
single PASS/FAIL line (run with ``pytest -s tests/test_acceptance.py`` to see
them). The expensive n=100 root pipeline is computed once and shared.
"""

import csv
import itertools
import math
import time
from fractions import Fraction
from math import factorial

import pytest
from scipy.integrate import quad

from eulerian_roots import combinatorics as cb
from eulerian_roots import limit_law, measures, polynomials, series
from eulerian_roots.cli import main as cli_main


def _report(num: int, ok: bool, detail: str = "") -> None:
    print(f"\nACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, detail


def test_criterion_1_theorem2_exact_suite():
    t0 = time.monotonic()
    checked = 0
    for n in range(1, 61):
        sums = measures.exact_power_sums(n, n)
        for p in range(1, n + 1):
            assert sums[p - 1] / (n + 1) == measures.moment_reference(p), (n, p)
            checked += 1
    elapsed = time.monotonic() - t0
    _report(1, checked == 1830 and elapsed < 60, f"{checked} exact instances in {elapsed:.2f}s")


def test_criterion_2_first_five_moments():
    expected = [
        Fraction(1, 2),
        Fraction(5, 12),
        Fraction(3, 8),
        Fraction(251, 720),
        Fraction(95, 288),
    ]
    got = [measures.moment_reference(p) for p in range(1, 6)]
    _report(2, got == expected, f"moments {['%s' % g for g in got]}")


def test_criterion_3_stirling_norlund_suite():
    t0 = time.monotonic()
    checked = 0
    for n in range(1, 41):
        for p in range(1, n + 1):
            assert cb.verify_stirling_norlund(n, p).holds, (n, p)
            checked += 1
    elapsed = time.monotonic() - t0
    _report(3, checked == 820 and elapsed < 30, f"{checked} exact instances in {elapsed:.2f}s")


def test_criterion_4_norlund_three_routes():
    via_integral = cb.norlund_numbers(40)
    via_egf = series.norlund_from_egf(40)
    m = measures.exact_power_sums(40, 40)
    via_moments = [Fraction(1)] + [
        (-1) ** p * factorial(p) * m[p - 1] / 41 for p in range(1, 41)
    ]
    ok = via_integral == via_egf == via_moments
    _report(4, ok, "integral, EGF and moment routes agree exactly for p <= 40")


def test_criterion_5_root_pipeline_n100(roots100):
    t0 = time.monotonic()
    ok_count = len(roots100) == 100

    atoms = measures.EmpiricalMeasure.from_points(float(iv.midpoint()) for iv in roots100)
    reports = measures.numeric_moments(atoms, 10, Fraction(101))
    worst_moment = max(r.abs_error for r in reports)

    target = -(2**100) + 101
    budget = Fraction(abs(target), 10**9) / 100 / 2
    tightened = polynomials.refined_u_roots(100, polynomials.DEFAULT_TOL, budget)
    x_intervals = polynomials.roots_x_from_u(list(tightened))
    x_sum = sum(iv.midpoint() for iv in x_intervals)
    rel_err = abs(Fraction(x_sum) - target) / abs(target)

    elapsed = time.monotonic() - t0
    ok = ok_count and worst_moment <= 1e-9 and rel_err <= Fraction(1, 10**9)
    _report(
        5,
        ok,
        f"100 roots, moment err {worst_moment:.2e}, x-sum rel err {float(rel_err):.2e} "
        f"({elapsed:.1f}s after isolation)",
    )


def test_criterion_6_reflection_symmetry(roots100):
    tol = Fraction(1, 10**12)
    worst = Fraction(0)
    for n in (10, 50, 100):
        ivs = roots100 if n == 100 else polynomials.refined_u_roots(n)
        mids = [iv.midpoint() for iv in ivs if iv.exact_point != 1]
        for a, b in zip(mids, reversed(mids)):
            worst = max(worst, abs(a + b - 1))
    _report(6, worst <= tol, f"worst |u + u' - 1| = {float(worst):.2e} over n in {{10,50,100}}")


def test_criterion_7_figure_reproduction(roots100, tmp_path):
    out = tmp_path / "figure.csv"
    rc = cli_main(["figure", "--n", "10,100", "--out", str(out)])
    assert rc == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["t", "cdf_limit", "cdf_n10", "cdf_n100"]
    data = [[float(x) for x in row] for row in rows[1:]]
    monotone = all(
        all(a[col] <= b[col] for a, b in zip(data, data[1:])) for col in (1, 2, 3)
    )
    half_at_one = any(row[0] == 1.0 and row[1] == 0.5 for row in data)

    def mu_atoms(ivs):
        return sorted(float(1 / iv.midpoint() - 1) for iv in ivs)

    ks10 = measures.ks_distance(
        measures.EmpiricalMeasure.from_points(mu_atoms(polynomials.refined_u_roots(10))),
        limit_law.cdf_mu,
    )
    ks100 = measures.ks_distance(
        measures.EmpiricalMeasure.from_points(mu_atoms(roots100)), limit_law.cdf_mu
    )
    grid10 = max(abs(r[2] - r[1]) for r in data)
    grid100 = max(abs(r[3] - r[1]) for r in data)
    ok = monotone and half_at_one and ks100 < ks10 and grid100 < grid10
    _report(7, ok, f"KS(mu100)={ks100:.4f} < KS(mu10)={ks10:.4f}; columns monotone")


def test_criterion_8_cdf_density_consistency():
    a = 1e-6

    def quad_increment(t):
        value, _ = quad(
            lambda s: limit_law.density_mu(math.exp(s)) * math.exp(s),
            math.log(a),
            math.log(t),
            epsabs=1e-13,
            limit=400,
        )
        return value

    worst = max(
        abs((limit_law.cdf_mu(t) - limit_law.cdf_mu(a)) - quad_increment(t))
        for t in (0.5, 1.0, 2.0, 10.0)
    )
    ok = worst <= 1e-10 and limit_law.cdf_mu(1.0) == 0.5
    _report(8, ok, f"max |closed form - quadrature of density| = {worst:.2e}; cdf(1) = 0.5 exactly")


def test_criterion_9_inverse_stieltjes_convergence():
    target = limit_law.cdf_mu(2.0) - limit_law.cdf_mu(0.5)
    errors = [
        abs(limit_law.inverse_stieltjes_mass(0.5, 2.0, eps) - target)
        for eps in (1e-2, 1e-3, 1e-4)
    ]
    ok = errors[0] > errors[1] > errors[2] and errors[2] <= 1e-3
    _report(9, ok, f"errors along the eps ladder: {', '.join(f'{e:.2e}' for e in errors)}")


def test_criterion_10_brute_force_oracles():
    ok = True
    for n in range(1, 9):
        row = [0] * n
        for perm in itertools.permutations(range(n)):
            row[sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])] += 1
        ok = ok and list(cb.eulerian_row(n)) == row

    for n in range(0, 11):
        counts = [0] * (n + 1)
        if n == 0:
            counts[0] = 1
        else:
            stack = [(0, 1)]
            while stack:
                prefix_max, pos = stack.pop()
                if pos == n:
                    counts[prefix_max + 1] += 1
                    continue
                for v in range(prefix_max + 2):
                    stack.append((max(prefix_max, v), pos + 1))
        ok = ok and list(cb.stirling2_row(n)) == counts
    _report(10, ok, "descent and set-partition enumerations match exactly")
