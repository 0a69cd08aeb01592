"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report.  Tolerances are fixed here and nowhere else.
"""

import math
import statistics
import time

from wrightfn import wright
from wrightfn.cli import BENCH_ROWS
from wrightfn.selftest import (
    airy_ai_oracle,
    check_branch_continuity,
    check_derivative_identity,
    check_oracle_grid,
    check_quadrature_convergence,
    check_recurrence,
    erfc_oracle,
    hyp0f2_series,
)
from wrightfn.special import erfc_w, hyp0f2_w, mwright

W1 = 2.404825557695773


def _report(number, title, ok, detail):
    print(f"ACCEPTANCE {number:>2} {title}: {'PASS' if ok else 'FAIL'}  ({detail})")
    assert ok, f"criterion {number}: {detail}"


def test_c01_oracle_equivalence_grid():
    t0 = time.perf_counter()
    group = check_oracle_grid()
    elapsed = time.perf_counter() - t0
    ok = group.ok and group.total >= 1000 and elapsed < 60.0
    _report(1, "oracle-equivalence grid", ok,
            f"{group.passed}/{group.total} points within 1e-8, "
            f"worst {group.worst:.2e}, {group.skipped} skipped, {elapsed:.1f}s")


def test_c02_erfc_identity():
    worst = 0.0
    for i in range(81):
        x = -4.0 + 0.1 * i
        worst = max(worst, abs(erfc_w(x) - erfc_oracle(x)))
    _report(2, "erfc identity", worst <= 1e-9,
            f"max |erfc_w - midpoint oracle| = {worst:.2e} over 81 points")


def test_c03_first_bessel_zero():
    value = wright(1.0, 1.0, -W1 * W1 / 4.0).value
    _report(3, "first zero of J0", abs(value) <= 1e-8,
            f"|W(1,1|-w1^2/4)| = {abs(value):.2e}")


def test_c04_trigonometric_identity():
    # Table row realized at the negated argument: W(1, 3/2 | -x) equals
    # sin(2 sqrt(x))/sqrt(pi x) for x > 0 (the positive-argument function
    # is the sinh analogue).
    worst = 0.0
    for x in (1.0, 2.5, math.pi ** 2, 15.0):
        ref = math.sin(2.0 * math.sqrt(x)) / math.sqrt(math.pi * x)
        worst = max(worst, abs(wright(1.0, 1.5, -x).value - ref))
    _report(4, "trigonometric identity", worst <= 1e-8,
            f"max residual {worst:.2e} over 4 arguments")


def test_c05_residue_polynomial_exactness():
    eps = 2.220446049250313e-16
    worst = 0.0
    for z in (-10.0, -1.0, 0.0, 1.0, 10.0):
        worst = max(worst, abs(wright(-1.0, 2.0, z).value - (1.0 + z))
                    / max(1.0, abs(1.0 + z)))
    for n in (1, 2, 3):
        for z in (-10.0, -1.0, 0.0, 1.0, 10.0):
            worst = max(worst, abs(wright(float(-n), 1.0, z).value - 1.0))
    _report(5, "residue polynomial exactness", worst <= eps,
            f"worst relative deviation {worst:.2e}")


def test_c06_airy_identity():
    worst = 0.0
    for i in range(13):
        z = 3.0 * i / 12.0
        ref = 3.0 ** (2.0 / 3.0) * airy_ai_oracle(z / 3.0 ** (1.0 / 3.0))
        worst = max(worst, abs(mwright(1.0 / 3.0, z) - ref))
    _report(6, "Airy identity", worst <= 1e-7,
            f"max |M_1/3 - Airy series| = {worst:.2e} over 13 points")


def test_c07_recurrence_and_derivative():
    rec = check_recurrence()
    der = check_derivative_identity()
    ok = rec.ok and der.ok and rec.total >= 1000 and der.total == 900
    _report(7, "recurrence and derivative identities", ok,
            f"recurrence {rec.passed}/{rec.total} (worst {rec.worst:.2e}, "
            f"{rec.skipped} skipped), derivative {der.passed}/{der.total} "
            f"(worst {der.worst:.2e})")


def test_c08_hypergeometric_equivalence():
    worst = 0.0
    for i in range(17):
        x = -4.0 + 0.5 * i
        worst = max(worst, abs(hyp0f2_w(x) - hyp0f2_series(0.5, 1.0, x / 4.0)))
    _report(8, "0F2 equivalence", worst <= 1e-8,
            f"max residual {worst:.2e} over 17 points")


def test_c09_quadrature_convergence_order():
    group = check_quadrature_convergence()
    _report(9, "DE convergence order", group.ok,
            f"{group.passed}/{group.total} level ratios >= 10, "
            f"final error {group.worst:.2e}")


def test_c10_benchmark_latency():
    worst = 0.0
    for label, _, (a, b, z) in BENCH_ROWS:
        wright(a, b, z)  # warm up
        times = []
        for _ in range(101):
            t0 = time.perf_counter()
            wright(a, b, z)
            times.append(time.perf_counter() - t0)
        worst = max(worst, statistics.median(times))
    _report(10, "benchmark latency", worst <= 10e-3,
            f"slowest median {worst * 1e6:.0f} microseconds over 6 rows, "
            f"101 repetitions each")


def test_c11_branch_boundary_continuity():
    group = check_branch_continuity()
    _report(11, "branch-boundary continuity at b=1", group.ok,
            f"worst pairwise difference {group.worst:.2e}")
