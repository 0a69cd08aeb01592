"""Wright function W(a, b | z) for real arguments.

The Hankel-contour representation of W is deformed into two rays hugging
the negative real axis plus a circular arc of radius ``eps`` around the
origin.  For real arguments everything collapses to real integrals:

* ``radial_integrand`` -- density of the ray contribution I_r(eps),
* ``arc_integrand``    -- density of the arc contribution P(eps),
* ``substituted_integrand`` -- I_r after the substitution r**a -> u,
  preferable for a > 0.

``wright`` picks the combination appropriate for (a, b) and evaluates the
pieces with the double-exponential engine from :mod:`wrightfn.dequad`.
For negative integer a (with positive integer b) the contour closes
around the origin and W degenerates to a polynomial in z, handled exactly
by ``residue_polynomial``.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .dequad import DEFAULT_CONFIG, QuadratureConfig, integrate_compact, integrate_semiinfinite

_EPS = sys.float_info.epsilon
_SNAP = 4.0 * _EPS  # floating-point window for branch snapping

# The stationary-phase radius |a z|**(1/(a+1)) is only meaningful for
# a > 0.  For a < 0 it explodes as a -> -1 and inflates the arc kernel
# beyond double precision, so there it is capped; any radius >= 1 gives a
# valid contour for a < 0.
_NEG_A_RADIUS_CAP = 4.0

# For a < 0 and b just below 1 the radial integrand carries r**(-b) mass
# at radii far below the smallest double, which a fixed-precision
# quadrature cannot see (it is what turns into the "+1" arc term at
# b = 1).  Within this gap below 1 the eps > 0 split is used instead.
_RADIAL_SAFE_GAP = 0.125


class BranchKind(enum.Enum):
    RESIDUE_POLYNOMIAL = "ResiduePolynomial"
    NEG_A_B_BELOW1 = "NegA_bBelow1"
    NEG_A_B_EQUAL1 = "NegA_bEqual1"
    NEG_A_B_ABOVE1 = "NegA_bAbove1"
    ZERO_A = "ZeroA"
    POS_A = "PosA"


@dataclass(frozen=True)
class Branch:
    """Dispatch case for one (a, b) pair; n, m only set for the polynomial case."""

    kind: BranchKind
    n: int | None = None
    m: int | None = None

    def __str__(self):
        if self.kind is BranchKind.RESIDUE_POLYNOMIAL:
            return f"ResiduePolynomial({self.n},{self.m})"
        return self.kind.value


@dataclass(frozen=True)
class WrightParams:
    """Admissible parameter pair: a > -1, or a a negative integer with
    b a positive integer (polynomial extension of the domain)."""

    a: float
    b: float

    def __post_init__(self):
        _check_admissible(self.a, self.b)


@dataclass(frozen=True)
class WrightValue:
    """One Wright function evaluation with its quadrature bookkeeping."""

    value: float
    error_estimate: float
    branch: Branch
    n_evals: int
    converged: bool


def _check_admissible(a: float, b: float) -> Branch | None:
    """Validate (a, b); returns the residue branch when a is a negative integer."""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("parameters must be finite")
    na = round(a)
    if abs(a - na) <= _SNAP and na <= -1.0:
        nb = round(b)
        if abs(b - nb) <= _SNAP and nb >= 1.0:
            return Branch(BranchKind.RESIDUE_POLYNOMIAL, n=int(-na), m=int(nb))
        raise ValueError("b must be a positive integer for negative integer a")
    if a <= -1.0:
        raise ValueError(f"a must exceed -1 (or be a negative integer), got {a}")
    return None


def classify(a: float, b: float, z: float) -> Branch:
    """Assign (a, b) its dispatch case.

    b counts as exactly 1 (and a as exactly 0, or a negative integer)
    within a 4-ulp window, so parameters produced by floating arithmetic
    do not fall into a neighbouring branch.
    """
    if not math.isfinite(z):
        raise ValueError("z must be finite")
    residue = _check_admissible(a, b)
    if residue is not None:
        return residue
    if abs(a) <= _SNAP:
        return Branch(BranchKind.ZERO_A)
    if a < 0.0:
        if abs(b - 1.0) <= _SNAP:
            return Branch(BranchKind.NEG_A_B_EQUAL1)
        if b < 1.0:
            return Branch(BranchKind.NEG_A_B_BELOW1)
        return Branch(BranchKind.NEG_A_B_ABOVE1)
    return Branch(BranchKind.POS_A)


# ---------------------------------------------------------------------------
# reciprocal gamma

# Lanczos coefficients, g = 607/128, 15 terms (Godfrey's set).
_LANCZOS_G = 4.7421875
_LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517, -59.597960355475491248, 14.136097974741747174,
    -0.49191381609762019978, 0.33994649984811888699e-4,
    0.46523628927048575665e-4, -0.98374475304879564677e-4,
    0.15808870322491248884e-3, -0.21026444172410488319e-3,
    0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4, -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def _lanczos_gamma(x: float) -> float:
    # Valid for x >= 0.5; overflows to inf far outside the accuracy contract.
    t = x + _LANCZOS_G - 0.5
    s = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        s += _LANCZOS_COEF[i] / (x - 1.0 + i)
    try:
        return _SQRT_TWO_PI * t ** (x - 0.5) * math.exp(-t) * s
    except OverflowError:
        return math.inf


def _sinpi(x: float) -> float:
    # sin(pi x) with the integer part removed first, so accuracy near the
    # zeros does not degrade with |x|.
    m = round(x)
    s = math.sin(math.pi * (x - m))
    return -s if int(m) & 1 else s


def reciprocal_gamma(b: float) -> float:
    """1 / Gamma(b), entire in b; exactly 0 at 0, -1, -2, ...

    Lanczos approximation for b >= 0.5, reflection
    ``1/Gamma(b) = sin(pi b) Gamma(1 - b) / pi`` below.
    """
    if math.isnan(b):
        return math.nan
    if b == math.floor(b):
        if b <= 0.0:
            return 0.0
        if b <= 171.0:  # factorial stays in range; correctly rounded
            return 1.0 / math.factorial(int(b) - 1)
    if b >= 0.5:
        return 1.0 / _lanczos_gamma(b)
    return _sinpi(b) / math.pi * _lanczos_gamma(1.0 - b)


# ---------------------------------------------------------------------------
# contour-piece integrands

def radial_integrand(a: float, b: float, z: float, r: float) -> float:
    """Ray-pair density: (1/pi) r**(-b) exp(cos(pi a) z/r**a - r)
    sin(sin(pi a) z/r**a + pi b).  Overflow of the exponent propagates."""
    if not r > 0.0:
        raise ValueError("r must be positive")
    zra = z / r ** a
    return (math.exp(math.cos(math.pi * a) * zra - r)
            * math.sin(math.sin(math.pi * a) * zra + math.pi * b)
            / r ** b) / math.pi


def arc_integrand(a: float, b: float, z: float, eps: float, phi: float) -> float:
    """Arc density at angle phi on the circle of radius eps.

    Even in phi: the exponent is built from cosines and the phase
    ``eps sin(phi) - z sin(a phi)/eps**a + (1 - b) phi`` is odd, entering
    through a cosine.
    """
    if not eps > 0.0:
        raise ValueError("eps must be positive")
    za = z / eps ** a
    amplitude = math.exp(eps * math.cos(phi) + math.cos(a * phi) * za)
    phase = eps * math.sin(phi) - za * math.sin(a * phi) + (1.0 - b) * phi
    return eps ** (1.0 - b) / (2.0 * math.pi) * amplitude * math.cos(phase)


def substituted_integrand(a: float, b: float, z: float, u: float) -> float:
    """Ray-pair density after r**a -> u, for a > 0:
    (1/(pi a)) u**((1-b)/a - 1) sin(sin(pi a) z/u + pi b)
    exp(cos(pi a) z/u - u**(1/a))."""
    if not a > 0.0:
        raise ValueError("a must be positive")
    if not u > 0.0:
        raise ValueError("u must be positive")
    return (u ** ((1.0 - b) / a - 1.0)
            * math.sin(math.sin(math.pi * a) * z / u + math.pi * b)
            * math.exp(math.cos(math.pi * a) * z / u - u ** (1.0 / a))
            ) / (math.pi * a)


# ---------------------------------------------------------------------------
# closed forms and diagnostics

def residue_polynomial(n: int, m: int) -> list[float]:
    """Coefficients (ascending powers of z) of W(-n, m | z).

    The closed contour picks out the residue at the origin, i.e. the
    coefficient of xi**(m-1) in exp(xi + z xi**n).  Expanding
    (xi + z xi**n)**j / j! gives the z**i coefficient C(j, i)/j! with
    j = (m-1) - i(n-1), valid while j >= i.  Computed in exact rational
    arithmetic; the returned list always has length m.
    """
    if not (isinstance(n, int) and isinstance(m, int)):
        raise ValueError("n and m must be integers")
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    coeffs = [0.0] * m
    for i in range(m):
        j = (m - 1) - i * (n - 1)
        if 0 <= j and i <= j:
            coeffs[i] = float(Fraction(math.comb(j, i), math.factorial(j)))
    return coeffs


def holder_exponent(a: float, b: float, z: float, xi: float) -> float:
    """Logarithmic-derivative diagnostic of the kernel, -a z / xi**a + xi - b.

    Tends to -b as xi -> 0 for a < 0; purely diagnostic, the evaluation
    path never calls it.
    """
    if xi == 0.0:
        raise ValueError("xi must be nonzero")
    return -a * z / xi ** a + xi - b


def stationary_point(a: float, z: float) -> float:
    """Radius |a z|**(1/(a+1)) at which the kernel phase is stationary
    to first order (returns the modulus; 0 when a or z vanishes)."""
    if a == -1.0:
        raise ValueError("a = -1 has no stationary radius")
    if z == 0.0 or a == 0.0:
        return 0.0
    return abs(a * z) ** (1.0 / (a + 1.0))


# ---------------------------------------------------------------------------
# assembly

def _horner(coeffs: list[float], z: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _arc_radius(a: float, z: float) -> float:
    radius = stationary_point(a, z)
    if a < 0.0:
        radius = min(radius, _NEG_A_RADIUS_CAP)
    return max(radius, 1.0)


def _arc_part(a, b, z, eps, config):
    # P(eps) over [-pi, pi], computed as twice [0, pi] by evenness.
    res = integrate_compact(lambda phi: arc_integrand(a, b, z, eps, phi),
                            0.0, math.pi, config)
    return 2.0 * res.value, 2.0 * res.error_estimate, res.n_evals, res.converged


def wright(a: float, b: float, z: float,
           config: QuadratureConfig = DEFAULT_CONFIG) -> WrightValue:
    """Evaluate the Wright function W(a, b | z).

    Dispatch:

    * negative integer a: exact polynomial (Horner on ``residue_polynomial``);
    * a = 0: ``exp(z) / Gamma(b)``;
    * a < 0, b < 1: radial integral from 0 (integrable origin);
    * a < 0, b = 1: radial integral from 0, plus 1 (the arc limit);
    * a < 0, b > 1: radial from eps plus arc of radius eps;
    * a > 0: substituted radial from eps**a plus arc of radius eps,
      with eps = max(|a z|**(1/(a+1)), 1).

    z = 0 short-circuits to 1/Gamma(b) in every branch.  Error estimates
    of the component quadratures are summed.  Quadrature non-convergence
    is reported through ``converged``; integrand overflow (|z| beyond the
    representable exponent range for these parameters) raises
    ``OverflowError`` rather than returning a clipped value.
    """
    branch = classify(a, b, z)
    kind = branch.kind
    if kind is BranchKind.RESIDUE_POLYNOMIAL:
        # exact for every z, including 0: leading coefficient is the
        # correctly rounded 1/Gamma(m)
        value = _horner(residue_polynomial(branch.n, branch.m), z)
        return WrightValue(value, 0.0, branch, 0, True)

    if z == 0.0:
        return WrightValue(reciprocal_gamma(b), 0.0, branch, 0, True)

    if kind is BranchKind.ZERO_A:
        return WrightValue(math.exp(z) * reciprocal_gamma(b), 0.0, branch, 0, True)

    if kind is BranchKind.POS_A:
        eps = _arc_radius(a, z)
        ray = integrate_semiinfinite(lambda u: substituted_integrand(a, b, z, u),
                                     eps ** a, config)
        arc_v, arc_e, arc_n, arc_ok = _arc_part(a, b, z, eps, config)
        return WrightValue(ray.value + arc_v, ray.error_estimate + arc_e,
                           branch, ray.n_evals + arc_n, ray.converged and arc_ok)

    # a < 0 from here on
    if kind is BranchKind.NEG_A_B_EQUAL1:
        ray = integrate_semiinfinite(lambda r: radial_integrand(a, b, z, r),
                                     0.0, config)
        return WrightValue(ray.value + 1.0, ray.error_estimate, branch,
                           ray.n_evals, ray.converged)

    if kind is BranchKind.NEG_A_B_BELOW1 and b <= 1.0 - _RADIAL_SAFE_GAP:
        ray = integrate_semiinfinite(lambda r: radial_integrand(a, b, z, r),
                                     0.0, config)
        return WrightValue(ray.value, ray.error_estimate, branch,
                           ray.n_evals, ray.converged)

    # b > 1, or close enough below 1 that the origin mass is unresolvable
    eps = _arc_radius(a, z)
    ray = integrate_semiinfinite(lambda r: radial_integrand(a, b, z, r),
                                 eps, config)
    arc_v, arc_e, arc_n, arc_ok = _arc_part(a, b, z, eps, config)
    return WrightValue(ray.value + arc_v, ray.error_estimate + arc_e,
                       branch, ray.n_evals + arc_n, ray.converged and arc_ok)
