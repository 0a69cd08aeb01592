"""Reference summation of the defining series of W(a, b | z).

Slow but independent of the integral machinery, which makes it the test
oracle of choice for small and moderate |z|.  For -1 < a < 0 the terms
can grow enormously before they decay; when the cancellation would eat
the result the oracle refuses instead of returning noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import reciprocal_gamma

# A partial sum is trusted only while the largest intermediate term keeps
# roughly nine digits of the result intact: max|term| * eps stays below
# 1e-9 * max(1, |sum|).
_CANCELLATION_LIMIT = 1e6


class SeriesDivergence(ArithmeticError):
    """The series did not settle inside its reliable region."""


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    tail_bound: float  # |last term added|


def wright_series(a: float, b: float, z: float,
                  max_terms: int = 500, tol: float = 1e-15) -> SeriesResult:
    """Sum z**k / (k! Gamma(a k + b)) with compensated accumulation.

    Stops once two consecutive terms fall below ``tol`` times the partial
    sum.  Terms whose gamma argument sits on a pole contribute exactly 0.
    Raises :class:`SeriesDivergence` when ``max_terms`` is exhausted or
    (for a < 0) when intermediate terms overwhelm the final sum.
    """
    if not a > -1.0:
        raise ValueError("series requires a > -1")
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    if not tol > 0.0:
        raise ValueError("tol must be positive")

    total = 0.0
    comp = 0.0  # Neumaier correction
    power = 1.0  # z**k / k!
    largest = 0.0
    last = 0.0
    below = 0
    used = 0
    for k in range(max_terms):
        if k:
            power *= z / k
        term = power * reciprocal_gamma(a * k + b)
        if not math.isfinite(term):
            raise SeriesDivergence(
                f"term {k} of W({a}, {b} | {z}) left the double range")
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        last = abs(term)
        largest = max(largest, last)
        used = k + 1
        if last <= tol * max(abs(total + comp), 1e-300):
            below += 1
            if below >= 2 and used >= 3:
                break
        else:
            below = 0

    value = total + comp
    if below < 2:
        raise SeriesDivergence(
            f"W({a}, {b} | {z}): tail {last:.3e} after {used} terms")
    if a < 0.0 and largest > _CANCELLATION_LIMIT * max(1.0, abs(value)):
        raise SeriesDivergence(
            f"W({a}, {b} | {z}): cancellation {largest:.3e} vs {value:.3e}")
    return SeriesResult(value=value, terms_used=used, tail_bound=last)
