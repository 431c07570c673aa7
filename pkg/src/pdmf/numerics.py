"""Standard-normal CDF and quantile.

The CDF is evaluated through the complementary error function, which keeps
full relative accuracy in the lower tail (the quantile polish depends on it).
The quantile uses a rational initial guess followed by Halley refinement
against the CDF, giving |cdf(quantile(y)) - y| at machine level, far inside
the 1e-9 contract.
"""

import math

from .errors import DomainError

__all__ = ["std_normal_cdf", "std_normal_pdf", "std_normal_quantile"]

_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

# Past |x| = 40 the tail mass (~1e-350) is below double-precision range;
# membership evaluation needs hard 0/1 at the support edges.
CDF_SATURATION = 40.0

# Rational approximation for the normal quantile (Acklam's coefficients).
_A = (
    -3.969683028665376e01,
    2.209460984245205e02,
    -2.759285104469687e02,
    1.383577518672690e02,
    -3.066479806614716e01,
    2.506628277459239e00,
)
_B = (
    -5.447609879822406e01,
    1.615858368580409e02,
    -1.556989798598866e02,
    6.680131188771972e01,
    -1.328068155288572e01,
)
_C = (
    -7.784894002430293e-03,
    -3.223964580411365e-01,
    -2.400758277161838e00,
    -2.549732539343734e00,
    4.374664141464968e00,
    2.938163982698783e00,
)
_D = (
    7.784695709041462e-03,
    3.224671290700398e-01,
    2.445134137142996e00,
    3.754408661907416e00,
)
_P_LOW = 0.02425


def std_normal_cdf(x: float) -> float:
    """Cumulative distribution of the standard normal, absolute error <= 1e-12.

    Saturates to exactly 0.0 for x <= -40 and 1.0 for x >= 40.  Raises
    DomainError on non-finite input.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"std_normal_cdf requires a finite argument, got {x!r}")
    if x <= -CDF_SATURATION:
        return 0.0
    if x >= CDF_SATURATION:
        return 1.0
    return 0.5 * math.erfc(-x / _SQRT2)


def std_normal_pdf(x: float) -> float:
    """Density of the standard normal."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"std_normal_pdf requires a finite argument, got {x!r}")
    return _INV_SQRT_2PI * math.exp(-0.5 * x * x)


def _quantile_guess(y: float) -> float:
    if y < _P_LOW:
        q = math.sqrt(-2.0 * math.log(y))
        return (
            ((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]
        ) / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0)
    if y > 1.0 - _P_LOW:
        q = math.sqrt(-2.0 * math.log(1.0 - y))
        return -(
            ((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]
        ) / ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0)
    q = y - 0.5
    r = q * q
    return (
        (((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5])
        * q
        / (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0)
    )


def std_normal_quantile(y: float) -> float:
    """Inverse of std_normal_cdf on (0, 1).

    Rational initial guess polished with two Halley steps; the result
    satisfies |std_normal_cdf(q) - y| within a few ulps of y.  Raises
    DomainError for y outside the open interval (the true infimum is
    infinite there and callers must handle that limit themselves).
    """
    y = float(y)
    if not 0.0 < y < 1.0:
        raise DomainError(f"std_normal_quantile requires 0 < y < 1, got {y!r}")
    x = _quantile_guess(y)
    for _ in range(2):
        density = std_normal_pdf(x)
        if density == 0.0:
            break
        u = (std_normal_cdf(x) - y) / density
        x -= u / (1.0 + 0.5 * x * u)
    return x
