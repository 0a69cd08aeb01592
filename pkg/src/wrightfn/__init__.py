"""Wright function W(a, b | z) for real arguments.

Evaluation goes through the deformed Hankel contour: a radial integral
along the negative axis plus a circular arc around the origin, both
computed with double-exponential quadrature.  The defining series is
kept alongside as an independent cross-check.
"""

from .core import (
    Branch,
    BranchKind,
    WrightParams,
    WrightValue,
    arc_integrand,
    classify,
    holder_exponent,
    radial_integrand,
    reciprocal_gamma,
    residue_polynomial,
    stationary_point,
    substituted_integrand,
    wright,
)
from .dequad import (
    DEFAULT_CONFIG,
    NodeTable,
    QuadratureConfig,
    QuadratureResult,
    TransformKind,
    generate_nodes,
    integrate_compact,
    integrate_semiinfinite,
)
from .series import SeriesDivergence, SeriesResult, wright_series
from .special import (
    bessel_i,
    bessel_j,
    erfc_w,
    gaussian_derivative,
    hyp0f2_w,
    mwright,
    mwright_integral,
)

__version__ = "0.1.0"

__all__ = [
    "Branch", "BranchKind", "WrightParams", "WrightValue",
    "arc_integrand", "classify", "holder_exponent", "radial_integrand",
    "reciprocal_gamma", "residue_polynomial", "stationary_point",
    "substituted_integrand", "wright",
    "DEFAULT_CONFIG", "NodeTable", "QuadratureConfig", "QuadratureResult",
    "TransformKind", "generate_nodes", "integrate_compact",
    "integrate_semiinfinite",
    "SeriesDivergence", "SeriesResult", "wright_series",
    "bessel_i", "bessel_j", "erfc_w", "gaussian_derivative", "hyp0f2_w",
    "mwright", "mwright_integral",
    "__version__",
]
