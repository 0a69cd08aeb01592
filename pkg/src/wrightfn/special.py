"""Classical special functions expressed through W(a, b | z).

Each function is a thin prefactor around one Wright evaluation; together
they double as the identity suite that exercises every dispatch branch.
"""

from __future__ import annotations

from .core import wright
from .dequad import DEFAULT_CONFIG


def _value(a, b, z):
    wv = wright(a, b, z, DEFAULT_CONFIG)
    if not wv.converged:
        raise ArithmeticError(
            f"W({a}, {b} | {z}) did not converge (estimate {wv.error_estimate:.3e})")
    return wv.value


def mwright(a: float, z: float) -> float:
    """Mainardi function M_a(z) = W(-a, 1-a | -z), for 0 < a < 1."""
    if not 0.0 < a < 1.0:
        raise ValueError("mwright requires 0 < a < 1")
    return _value(-a, 1.0 - a, -z)


def mwright_integral(a: float, x: float) -> float:
    """Integral of M_a from -inf to x, which equals W(-a, 1 | x)."""
    if not 0.0 < a < 1.0:
        raise ValueError("mwright_integral requires 0 < a < 1")
    return _value(-a, 1.0, x)


def gaussian_derivative(n: int, x: float) -> float:
    """n-th derivative of exp(-x**2/4)/sqrt(pi), as W(-1/2, (1-n)/2 | x)."""
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    return _value(-0.5, (1.0 - n) / 2.0, x)


def bessel_j(nu: float, x: float) -> float:
    """Bessel J_nu(x) via (x/2)**nu W(1, nu+1 | -x**2/4).

    For non-integer nu and x < 0 the true function is complex; here the
    prefactor uses |x|, which makes the returned branch the even
    extension of the positive-axis values.  Integer orders use (x/2)**nu
    as is and keep the usual parity.
    """
    w = _value(1.0, nu + 1.0, -0.25 * x * x)
    if nu == round(nu):
        return (0.5 * x) ** int(round(nu)) * w
    return (0.5 * abs(x)) ** nu * w


def bessel_i(nu: float, x: float) -> float:
    """Modified Bessel I_nu(x) via (x/2)**nu W(1, nu+1 | x**2/4)."""
    w = _value(1.0, nu + 1.0, 0.25 * x * x)
    if nu == round(nu):
        return (0.5 * x) ** int(round(nu)) * w
    return (0.5 * abs(x)) ** nu * w


def erfc_w(x: float) -> float:
    """Complementary error function, erfc(x) = W(-1/2, 1 | -2x)."""
    return _value(-0.5, 1.0, -2.0 * x)


def hyp0f2_w(x: float) -> float:
    """W(2, 1 | x), equal to the hypergeometric 0F2(; 1/2, 1; x/4)."""
    return _value(2.0, 1.0, x)
