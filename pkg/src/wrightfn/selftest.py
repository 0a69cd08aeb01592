"""Built-in verification suites.

Every check compares the integral-based evaluator against something that
does not share code with it: the defining series, closed forms, or plain
midpoint integration.  The CLI ``selftest`` subcommand runs all groups;
the test suite asserts on the same functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import wright
from .dequad import DEFAULT_CONFIG, TransformKind, generate_nodes, integrate_compact
from .series import SeriesDivergence, wright_series
from .special import bessel_i, bessel_j, erfc_w, hyp0f2_w, mwright

A_GRID = (-0.9, -0.5, -1.0 / 3.0, 0.0, 1.0 / 3.0, 0.5, 1.0, 2.0)
B_GRID = (-1.5, -0.5, 0.5, 1.0, 1.5, 3.0)
ORACLE_GRID_MIN_POINTS = 1000

_FD_STEP = 1e-5
FIRST_J0_ZERO = 2.404825557695773


def z_grid(n: int = 25, lo: float = -3.0, hi: float = 3.0) -> list[float]:
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


@dataclass
class GroupResult:
    """Outcome of one verification group."""

    name: str
    passed: int = 0
    total: int = 0
    worst: float = 0.0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, residual: float, bound: float, label: str):
        self.total += 1
        self.worst = max(self.worst, residual)
        if residual <= bound:
            self.passed += 1
        elif len(self.failures) < 8:
            self.failures.append(f"{label}: residual {residual:.3e} > {bound:.1e}")

    def fail(self, label: str):
        self.total += 1
        if len(self.failures) < 8:
            self.failures.append(label)


# ---------------------------------------------------------------------------
# independent oracles

_ERFC_PANELS = 1_000_000
_ERFC_XMAX = 4.0
_ERFC_STRIDE = _ERFC_PANELS // 40  # panels per 0.1 step
_erfc_table: list[float] | None = None


def _gauss_prefix_table() -> list[float]:
    """Midpoint-rule prefix sums of exp(-t^2) over [0, 4], 10^6 panels.

    Entry i holds the integral from 0 to 0.1*i, so every multiple of 0.1
    lands exactly on a panel boundary.
    """
    global _erfc_table
    if _erfc_table is None:
        h = _ERFC_XMAX / _ERFC_PANELS
        acc = 0.0
        table = [0.0]
        for j in range(_ERFC_PANELS):
            t = (j + 0.5) * h
            acc += math.exp(-t * t)
            if (j + 1) % _ERFC_STRIDE == 0:
                table.append(acc * h)
        _erfc_table = table
    return _erfc_table


def erfc_oracle(x: float) -> float:
    """erfc at a multiple of 0.1 in [-4, 4], from midpoint integration."""
    table = _gauss_prefix_table()
    i = round(abs(x) * 10.0)
    if abs(abs(x) - 0.1 * i) > 1e-12 or i >= len(table):
        raise ValueError("oracle is tabulated on multiples of 0.1 in [-4, 4]")
    tail = 1.0 - 2.0 / math.sqrt(math.pi) * table[i]
    return tail if x >= 0.0 else 2.0 - tail


def airy_ai_oracle(x: float) -> float:
    """Ai(x) from its two Maclaurin branches (entire, fast for |x| <~ 5)."""
    c1 = 1.0 / (3.0 ** (2.0 / 3.0) * math.gamma(2.0 / 3.0))
    c2 = 1.0 / (3.0 ** (1.0 / 3.0) * math.gamma(1.0 / 3.0))
    x3 = x * x * x
    f = term = 1.0
    for k in range(80):
        term *= x3 / ((3 * k + 2) * (3 * k + 3))
        f += term
        if abs(term) < 1e-18 * abs(f):
            break
    g = term = x
    for k in range(80):
        term *= x3 / ((3 * k + 3) * (3 * k + 4))
        g += term
        if abs(term) < 1e-18 * max(abs(g), 1e-30):
            break
    return c1 * f - c2 * g


def hyp0f2_series(b1: float, b2: float, w: float) -> float:
    """0F2(; b1, b2; w) by direct summation."""
    total = term = 1.0
    for k in range(200):
        term *= w / ((b1 + k) * (b2 + k) * (k + 1))
        total += term
        if abs(term) < 1e-18 * max(abs(total), 1e-30):
            return total
    raise ArithmeticError("0F2 series did not settle")


# ---------------------------------------------------------------------------
# verification groups

def check_oracle_grid(z_points: int = 25) -> GroupResult:
    """wright() against the defining series on the (a, b, z) grid.

    Points the series oracle refuses (cancellation beyond double
    precision, all at a = -0.9 with larger |z|) are skipped and counted;
    the group fails if fewer than 1000 comparable points remain.
    """
    group = GroupResult("oracle-grid")
    zs = z_grid(z_points)
    for a in A_GRID:
        for b in B_GRID:
            for z in zs:
                try:
                    ref = wright_series(a, b, z).value
                except SeriesDivergence:
                    group.skipped += 1
                    continue
                label = f"W({a:.3g},{b:.3g}|{z:.3g})"
                try:
                    wv = wright(a, b, z)
                except OverflowError:
                    group.fail(label + ": overflow where the series converges")
                    continue
                if not wv.converged:
                    group.fail(label + ": quadrature did not converge")
                    continue
                residual = abs(wv.value - ref) / max(1.0, abs(ref))
                group.record(residual, 1e-8, label)
    if z_points >= 25 and group.total < ORACLE_GRID_MIN_POINTS:
        group.fail(f"only {group.total} comparable grid points, need "
                   f"{ORACLE_GRID_MIN_POINTS}")
    return group


def _wright_value(a, b, z):
    wv = wright(a, b, z)
    if not wv.converged:
        raise ArithmeticError("not converged")
    return wv.value


def check_derivative_identity(z_points: int = 25) -> GroupResult:
    """d/dz W(a, b | z) = W(a, a+b | z), by central differences."""
    group = GroupResult("derivative-identity")
    zs = z_grid(z_points)
    for a in A_GRID:
        if a <= -0.5:
            continue
        for b in B_GRID:
            for z in zs:
                fd = (_wright_value(a, b, z + _FD_STEP)
                      - _wright_value(a, b, z - _FD_STEP)) / (2.0 * _FD_STEP)
                direct = _wright_value(a, a + b, z)
                residual = abs(fd - direct) / max(1.0, abs(direct))
                group.record(residual, 1e-5,
                             f"d/dz W({a:.3g},{b:.3g}|{z:.3g})")
    return group


def check_recurrence(z_points: int = 25) -> GroupResult:
    """W(a, b-1 | z) = (b-1) W(a, b | z) + a z W(a, a+b | z).

    Points where any of the three evaluations leaves the double range
    (a = -0.9 with large negative z) are skipped and counted.
    """
    group = GroupResult("recurrence")
    zs = z_grid(z_points)
    for a in A_GRID:
        for b in B_GRID:
            for z in zs:
                try:
                    lhs = _wright_value(a, b - 1.0, z)
                    rhs = (b - 1.0) * _wright_value(a, b, z) \
                        + a * z * _wright_value(a, a + b, z)
                except (OverflowError, ArithmeticError):
                    group.skipped += 1
                    continue
                residual = abs(lhs - rhs) / max(1.0, abs(lhs))
                group.record(residual, 1e-8,
                             f"recurrence({a:.3g},{b:.3g},{z:.3g})")
    return group


def check_branch_continuity() -> GroupResult:
    """The three b-branches at a = -1/2, z = 1 must agree across b = 1."""
    group = GroupResult("branch-continuity")
    bs = (1.0 - 1e-9, 1.0, 1.0 + 1e-9)
    values = []
    for b in bs:
        try:
            values.append(_wright_value(-0.5, b, 1.0))
        except (ArithmeticError, OverflowError):
            group.fail(f"W(-1/2, {b!r} | 1) did not converge")
            values.append(math.nan)
    for i, j in ((0, 1), (1, 2), (0, 2)):
        diff = abs(values[i] - values[j])
        group.record(diff if math.isfinite(diff) else math.inf, 1e-6,
                     f"b={bs[i]!r} vs b={bs[j]!r}")
    return group


def check_polynomial_exactness() -> GroupResult:
    """W(-1, 2 | z) = 1 + z and W(-n, 1 | z) = 1, exactly."""
    group = GroupResult("polynomial-exactness")
    for z in (-10.0, -1.0, 0.0, 1.0, 10.0):
        diff = abs(_wright_value(-1.0, 2.0, z) - (1.0 + z))
        group.record(diff, 4e-16 * max(1.0, abs(1.0 + z)), f"W(-1,2|{z:.3g})")
    for n in (1, 2, 3):
        for z in (-10.0, 0.5, 10.0):
            diff = abs(_wright_value(float(-n), 1.0, z) - 1.0)
            group.record(diff, 0.0, f"W(-{n},1|{z:.3g})")
    return group


def check_arc_doubling() -> GroupResult:
    """Doubling the half-range arc integral must reproduce the full range."""
    from .core import arc_integrand

    group = GroupResult("arc-evenness")
    cases = ((1.0, 1.0, 1.0, 1.0), (2.0, 1.0, -4.0, 2.0),
             (-0.5, 1.5, 1.0, 1.0), (-0.9, 3.0, -1.5, 4.0), (0.5, -0.5, 2.0, 1.5))
    for a, b, z, eps in cases:
        f = lambda phi: arc_integrand(a, b, z, eps, phi)
        full = integrate_compact(f, -math.pi, math.pi)
        half = integrate_compact(f, 0.0, math.pi)
        residual = abs(full.value - 2.0 * half.value)
        bound = 1e-10 * max(1.0, abs(full.value))
        group.record(residual, bound, f"arc({a:.3g},{b:.3g},{z:.3g},eps={eps:.3g})")
    return group


def check_special_identities() -> GroupResult:
    """Closed-form / series identities for the derived special functions."""
    group = GroupResult("special-identities")

    # erfc against midpoint integration of the Gaussian density
    for i in range(81):
        x = -4.0 + 0.1 * i
        residual = abs(erfc_w(x) - erfc_oracle(x))
        group.record(residual, 1e-9, f"erfc({x:.1f})")

    # erfc reflection
    for x in (0.5, 1.0, 2.0):
        residual = abs(erfc_w(x) + erfc_w(-x) - 2.0)
        group.record(residual, 1e-10, f"erfc-reflection({x})")

    # M_{1/3} against the Airy series
    for i in range(13):
        z = 3.0 * i / 12.0
        ref = 3.0 ** (2.0 / 3.0) * airy_ai_oracle(z / 3.0 ** (1.0 / 3.0))
        residual = abs(mwright(1.0 / 3.0, z) - ref)
        group.record(residual, 1e-7, f"airy({z:.3g})")

    # M_{1/2} closed form exp(-z^2/4)/sqrt(pi)
    for z in (0.0, 0.7, 2.0):
        ref = math.exp(-z * z / 4.0) / math.sqrt(math.pi)
        residual = abs(mwright(0.5, z) - ref)
        group.record(residual, 1e-10, f"mwright-gauss({z})")

    # M' + (z/2) M = 0 for the half-order Mainardi function
    for i in range(10):
        z = 0.2 + 2.8 * i / 9.0
        md = (mwright(0.5, z + _FD_STEP) - mwright(0.5, z - _FD_STEP)) / (2.0 * _FD_STEP)
        residual = abs(md + 0.5 * z * mwright(0.5, z))
        group.record(residual, 1e-5, f"mwright-ode({z:.3g})")

    # 0F2 equivalence for W(2, 1 | x)
    for i in range(17):
        x = -4.0 + 0.5 * i
        residual = abs(hyp0f2_w(x) - hyp0f2_series(0.5, 1.0, x / 4.0))
        group.record(residual, 1e-8, f"0F2({x:.3g})")

    # first zero of J0
    group.record(abs(bessel_j(0.0, FIRST_J0_ZERO)), 1e-8, "J0-zero")

    # trigonometric closed form of W(1, 3/2 | -x)
    for x in (1.0, 2.5, math.pi ** 2, 15.0):
        ref = math.sin(2.0 * math.sqrt(x)) / math.sqrt(math.pi * x)
        residual = abs(_wright_value(1.0, 1.5, -x) - ref)
        group.record(residual, 1e-8, f"trig({x:.4g})")

    # J_{1/2} elementary form
    for x in (0.5, math.pi / 2.0, 3.0):
        ref = math.sqrt(2.0 / (math.pi * abs(x))) * math.sin(x)
        residual = abs(bessel_j(0.5, x) - ref)
        group.record(residual, 1e-9, f"J-half({x:.3g})")

    # order-0 Bessel functions against the series oracle
    for i in range(17):
        x = -4.0 + 0.5 * i
        ref = wright_series(1.0, 1.0, -0.25 * x * x).value
        group.record(abs(bessel_j(0.0, x) - ref), 1e-8, f"J0({x:.3g})")
        ref = wright_series(1.0, 1.0, 0.25 * x * x).value
        group.record(abs(bessel_i(0.0, x) - ref) / max(1.0, abs(ref)),
                     1e-8, f"I0({x:.3g})")
    return group


def check_quadrature_convergence() -> GroupResult:
    """Per-level error for exp(-x) on (0, inf) must shrink >= 10x per level
    until it reaches 100 machine epsilons."""
    group = GroupResult("dequad-convergence")
    floor = 100.0 * 2.220446049250313e-16
    errors = []
    for level in range(6):
        table = generate_nodes(TransformKind.SEMI_INFINITE, level)
        h = DEFAULT_CONFIG.base_step / 2 ** level
        s = h * sum(w * math.exp(-x)
                    for x, w in zip(table.abscissas, table.weights))
        errors.append(abs(s - 1.0))
    for lev in range(1, len(errors)):
        if errors[lev - 1] <= floor:
            break
        ratio = errors[lev - 1] / max(errors[lev], 1e-300)
        ok = ratio >= 10.0 or errors[lev] <= floor
        group.total += 1
        if ok:
            group.passed += 1
        else:
            group.failures.append(
                f"level {lev}: error ratio {ratio:.2f} < 10")
        group.worst = max(group.worst, errors[lev])
    return group


def run_all(z_points: int = 25) -> list[GroupResult]:
    """Every verification group, in a fixed order."""
    return [
        check_oracle_grid(z_points),
        check_derivative_identity(z_points),
        check_recurrence(z_points),
        check_branch_continuity(),
        check_polynomial_exactness(),
        check_arc_doubling(),
        check_special_identities(),
        check_quadrature_convergence(),
    ]
