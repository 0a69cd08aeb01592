"""Tests for the derived special functions."""

import math

import pytest

from wrightfn.selftest import airy_ai_oracle, erfc_oracle
from wrightfn.special import (
    bessel_i,
    bessel_j,
    erfc_w,
    gaussian_derivative,
    hyp0f2_w,
    mwright,
    mwright_integral,
)

W1 = 2.404825557695773


def _gauss_tail(x, far=14.0, panels=200_000):
    # (2/sqrt(pi)) * integral of exp(-t^2) over [x, far], midpoint rule
    h = (far - x) / panels
    s = sum(math.exp(-((x + (j + 0.5) * h) ** 2)) for j in range(panels))
    return 2.0 / math.sqrt(math.pi) * s * h


# ---------------------------------------------------------------------------
# Mainardi function

def test_mwright_half_order_is_gaussian():
    assert mwright(0.5, 0.0) == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-12)
    assert mwright(0.5, 2.0) == pytest.approx(0.2075537487102974, rel=1e-11)


def test_mwright_third_order_is_airy():
    got = mwright(1.0 / 3.0, 0.0)
    assert got == pytest.approx(0.7384881116216483, rel=1e-11)  # 1/Gamma(2/3)
    assert got == pytest.approx(
        3.0 ** (2.0 / 3.0) * airy_ai_oracle(0.0), rel=1e-11)


def test_mwright_rejects_order_outside_unit_interval():
    with pytest.raises(ValueError):
        mwright(0.0, 1.0)
    with pytest.raises(ValueError):
        mwright(1.0, 1.0)


def test_mwright_integral_values():
    assert mwright_integral(0.5, 0.0) == pytest.approx(1.0, abs=1e-12)
    assert mwright_integral(0.5, 2.0) == pytest.approx(1.842700792949715, rel=1e-12)
    # far tail, against midpoint integration of the Gaussian density
    tail = _gauss_tail(5.0)
    assert mwright_integral(0.5, -10.0) == pytest.approx(tail, abs=1e-13)


# ---------------------------------------------------------------------------
# Gaussian derivatives

def test_gaussian_derivative_values():
    assert gaussian_derivative(0, 0.0) == pytest.approx(
        1.0 / math.sqrt(math.pi), rel=1e-12)
    assert abs(gaussian_derivative(1, 0.0)) <= 1e-12
    # closed form of the second derivative at x = 3/2
    assert gaussian_derivative(2, 1.5) == pytest.approx(
        0.02009159591235023, rel=1e-9)
    with pytest.raises(ValueError):
        gaussian_derivative(-1, 0.0)


# ---------------------------------------------------------------------------
# Bessel functions

def test_bessel_j_values():
    assert bessel_j(0.0, 0.0) == pytest.approx(1.0, abs=1e-14)
    assert abs(bessel_j(0.0, W1)) <= 1e-8
    assert bessel_j(0.5, math.pi / 2.0) == pytest.approx(2.0 / math.pi, rel=1e-11)


def test_bessel_j_half_order_is_even_extension_on_negative_axis():
    # |x| prefactor convention: non-integer orders return the even
    # extension of the positive-axis branch
    for x in (-2.0, -0.7):
        assert bessel_j(0.5, x) == pytest.approx(bessel_j(0.5, -x), rel=1e-12)
        expected = math.sqrt(2.0 / (math.pi * abs(x))) * math.sin(abs(x))
        assert bessel_j(0.5, x) == pytest.approx(expected, rel=1e-11)


def test_bessel_j_integer_order_keeps_sign():
    assert bessel_j(1, -1.5) == pytest.approx(-bessel_j(1, 1.5), rel=1e-11)


def test_bessel_i_values():
    assert bessel_i(0.0, 0.0) == pytest.approx(1.0, abs=1e-14)
    assert bessel_i(0.0, 2.0) == pytest.approx(2.279585302336067, rel=1e-11)
    assert bessel_i(1.0, 2.0) == pytest.approx(1.5906368546373288, rel=1e-11)


# ---------------------------------------------------------------------------
# error function

def test_erfc_values():
    assert erfc_w(0.0) == pytest.approx(1.0, abs=1e-13)
    assert erfc_w(-1.0) == pytest.approx(1.842700792949715, rel=1e-12)
    assert erfc_w(1.0) == pytest.approx(erfc_oracle(1.0), abs=1e-10)


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
def test_erfc_reflection(x):
    assert erfc_w(x) + erfc_w(-x) == pytest.approx(2.0, abs=1e-11)


# ---------------------------------------------------------------------------
# hypergeometric 0F2

def test_hyp0f2_values():
    assert hyp0f2_w(0.0) == pytest.approx(1.0, abs=1e-14)
    assert hyp0f2_w(1.0) == pytest.approx(1.5210658505136305, rel=1e-11)
    assert hyp0f2_w(-4.0) == pytest.approx(-0.6812192709354947, rel=1e-10)
