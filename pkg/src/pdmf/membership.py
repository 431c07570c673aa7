"""Membership evaluation for density-induced fuzzy numbers.

A fuzzy number here is a support triple a <= b <= c together with machinery
that maps each side of the support through an auxiliary function and reads
the membership grade off a density's CDF:

    f(x) = 0                        x <= a or x >= c
    f(x) = P_left(h((x-a)/(b-a)))   a < x < b
    f(b) = 1
    f(x) = P_right(h((c-x)/(c-b)))  b < x < c

``PdmfSpec`` carries the general form; ``GPdmf`` is the five-parameter
tangent/Gaussian specialization on which the arithmetic in :mod:`.algebra`
operates.
"""

import math
from dataclasses import dataclass

import numpy as np

from .auxiliary import TANGENT, AuxiliaryFunction, _tangent, validate_laf
from .densities import GaussianKernel, StepPdf
from .errors import DomainError
from .numerics import std_normal_cdf

__all__ = [
    "GPdmf",
    "MembershipValidation",
    "PdmfSpec",
    "check_monotone_fuzzy_number",
    "eval_gpdmf",
    "eval_membership",
    "membership",
    "sample_curve",
]

# Below this unit-interval offset the auxiliary value is past any
# representable magnitude (tan overflows); the limit value is forced.
SATURATION_EPS = 1e-12

_LAF_CHECK_GRID = 1001


def _check_support(a: float, b: float, c: float) -> tuple[float, float, float]:
    a, b, c = float(a), float(b), float(c)
    if not (math.isfinite(a) and math.isfinite(b) and math.isfinite(c)):
        raise DomainError(f"support must be finite, got ({a!r}, {b!r}, {c!r})")
    if not a <= b <= c:
        raise DomainError(f"support must be ordered a <= b <= c, got ({a}, {b}, {c})")
    return a, b, c


@dataclass(frozen=True)
class GPdmf:
    """Tangent/Gaussian fuzzy number: support (a, b, c) and side means."""

    a: float
    b: float
    c: float
    mu_left: float
    mu_right: float

    def __post_init__(self):
        a, b, c = _check_support(self.a, self.b, self.c)
        ml, mr = float(self.mu_left), float(self.mu_right)
        if not (math.isfinite(ml) and math.isfinite(mr)):
            raise DomainError(f"means must be finite, got ({ml!r}, {mr!r})")
        for name, value in zip(("a", "b", "c", "mu_left", "mu_right"), (a, b, c, ml, mr)):
            object.__setattr__(self, name, value)

    @property
    def components(self) -> tuple[float, float, float, float, float]:
        return (self.a, self.b, self.c, self.mu_left, self.mu_right)

    def to_spec(self) -> "PdmfSpec":
        return PdmfSpec(
            self.a,
            self.b,
            self.c,
            TANGENT,
            GaussianKernel(self.mu_left),
            GaussianKernel(self.mu_right),
        )


@dataclass(frozen=True)
class PdmfSpec:
    """General fuzzy number: support, auxiliary function, two densities.

    Custom auxiliary functions must clear :func:`validate_laf`; the two
    built-in kinds are trusted.
    """

    a: float
    b: float
    c: float
    h: AuxiliaryFunction
    p_left: GaussianKernel | StepPdf
    p_right: GaussianKernel | StepPdf

    def __post_init__(self):
        a, b, c = _check_support(self.a, self.b, self.c)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if self.h.kind not in ("tangent", "quantile"):
            report = validate_laf(self.h, _LAF_CHECK_GRID)
            if not report.passed:
                raise DomainError(
                    "custom auxiliary function failed validation: "
                    + "; ".join(report.lines())
                )


def _eval_piecewise(a, b, c, x, left_value, right_value) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"membership argument must be finite, got {x!r}")
    if x == b:
        return 1.0
    if x <= a or x >= c:
        return 0.0
    if x < b:
        u = (x - a) / (b - a)
        if u < SATURATION_EPS:
            return 0.0
        if u > 1.0 - SATURATION_EPS:
            return 1.0
        return left_value(u)
    u = (c - x) / (c - b)
    if u < SATURATION_EPS:
        return 0.0
    if u > 1.0 - SATURATION_EPS:
        return 1.0
    return right_value(u)


def eval_membership(spec: PdmfSpec, x: float) -> float:
    """Membership grade of x under a general density-induced fuzzy number."""
    return _eval_piecewise(
        spec.a,
        spec.b,
        spec.c,
        x,
        lambda u: spec.p_left.cdf(spec.h(u)),
        lambda u: spec.p_right.cdf(spec.h(u)),
    )


def eval_gpdmf(num: GPdmf, x: float) -> float:
    """Membership grade of x under the tangent/Gaussian form.

    Identical (bit for bit) to evaluating the equivalent PdmfSpec: both
    paths compute std_normal_cdf(tan(pi*u - pi/2) - mu) on the live side.
    """
    return _eval_piecewise(
        num.a,
        num.b,
        num.c,
        x,
        lambda u: std_normal_cdf(_tangent(u) - num.mu_left),
        lambda u: std_normal_cdf(_tangent(u) - num.mu_right),
    )


def membership(number: PdmfSpec | GPdmf, x: float) -> float:
    """Membership grade of x; dispatches on the number's representation."""
    if isinstance(number, GPdmf):
        return eval_gpdmf(number, x)
    if isinstance(number, PdmfSpec):
        return eval_membership(number, x)
    raise DomainError(f"expected PdmfSpec or GPdmf, got {type(number).__name__}")


def _support(number: PdmfSpec | GPdmf) -> tuple[float, float, float]:
    if not isinstance(number, (PdmfSpec, GPdmf)):
        raise DomainError(f"expected PdmfSpec or GPdmf, got {type(number).__name__}")
    return number.a, number.b, number.c


def sample_curve(number: PdmfSpec | GPdmf, n: int) -> list[tuple[float, float]]:
    """n uniform samples over the support widened by 10%, plus a, b and c.

    Always returns n + 3 (x, membership) pairs sorted by x; the support
    points are injected verbatim so the peak and the feet are never missed
    by the uniform grid.
    """
    n = int(n)
    if n < 2:
        raise DomainError(f"sample_curve requires n >= 2, got {n}")
    a, b, c = _support(number)
    margin = 0.1 * (c - a)
    xs = [float(x) for x in np.linspace(a - margin, c + margin, n)]
    xs.extend((a, b, c))
    xs.sort()
    return [(x, membership(number, x)) for x in xs]


@dataclass(frozen=True)
class MembershipValidation:
    """Grid evidence that a membership function has the one-peak shape."""

    nondecreasing_left: bool
    nonincreasing_right: bool
    peak_is_one: bool
    zero_outside_support: bool
    within_unit_range: bool
    grid_size: int

    @property
    def passed(self) -> bool:
        return (
            self.nondecreasing_left
            and self.nonincreasing_right
            and self.peak_is_one
            and self.zero_outside_support
            and self.within_unit_range
        )

    def lines(self) -> list[str]:
        def verdict(ok: bool) -> str:
            return "pass" if ok else "FAIL"

        return [
            f"nondecreasing on rising side ({self.grid_size}-point grid): "
            f"{verdict(self.nondecreasing_left)}",
            f"nonincreasing on falling side: {verdict(self.nonincreasing_right)}",
            f"peak value is 1: {verdict(self.peak_is_one)}",
            f"zero outside the support: {verdict(self.zero_outside_support)}",
            f"range within [0, 1]: {verdict(self.within_unit_range)}",
        ]


def check_monotone_fuzzy_number(
    number: PdmfSpec | GPdmf, grid_size: int
) -> MembershipValidation:
    """Sample-based checks of monotone structure, normality, support and range.

    Reports failures rather than raising.
    """
    grid_size = int(grid_size)
    if grid_size < 3:
        raise DomainError(f"grid_size must be >= 3, got {grid_size}")
    a, b, c = _support(number)

    left = [membership(number, float(x)) for x in np.linspace(a, b, grid_size)]
    right = [membership(number, float(x)) for x in np.linspace(b, c, grid_size)]
    width = max(c - a, 1.0)
    outside = [
        membership(number, x)
        for x in (a - 2.0 * width, a - 0.01 * width, c + 0.01 * width, c + 2.0 * width)
    ]

    values = left + right + outside
    return MembershipValidation(
        nondecreasing_left=all(v2 >= v1 for v1, v2 in zip(left, left[1:])),
        nonincreasing_right=all(v2 <= v1 for v1, v2 in zip(right, right[1:])),
        peak_is_one=membership(number, b) == 1.0,
        zero_outside_support=all(v == 0.0 for v in outside),
        within_unit_range=all(0.0 <= v <= 1.0 for v in values),
        grid_size=grid_size,
    )
