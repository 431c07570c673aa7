"""Probability densities whose CDFs drive membership evaluation.

Two families are supported: the unit-variance Gaussian kernel, and
piecewise-constant densities assembled so that their CDF interpolates
prescribed (position, cumulative-mass) pairs exactly.
"""

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .numerics import std_normal_cdf, std_normal_pdf

__all__ = [
    "GaussianKernel",
    "StepPdf",
    "build_multi_step_pdf",
    "build_two_step_pdf",
]

_MASS_TOL = 1e-12


@dataclass(frozen=True)
class GaussianKernel:
    """Normal density with unit standard deviation and mean ``mu``."""

    mu: float

    def __post_init__(self):
        if not math.isfinite(float(self.mu)):
            raise DomainError(f"GaussianKernel mean must be finite, got {self.mu!r}")
        object.__setattr__(self, "mu", float(self.mu))

    def pdf(self, t: float) -> float:
        return std_normal_pdf(t - self.mu)

    def cdf(self, z: float) -> float:
        """Mass at or below z; saturates exactly like std_normal_cdf."""
        return std_normal_cdf(z - self.mu)


class StepPdf:
    """Piecewise-constant density: ``densities[i]`` on (breakpoints[i], breakpoints[i+1]].

    Zero outside the support.  Total mass must be 1 within 1e-12.  The CDF is
    the piecewise-linear interpolant of the cumulative knot table; knots built
    through :func:`build_multi_step_pdf` are therefore hit exactly.
    """

    __slots__ = ("breakpoints", "densities", "_cumulative")

    def __init__(
        self,
        breakpoints: Sequence[float],
        densities: Sequence[float],
        *,
        cumulative: Sequence[float] | None = None,
    ):
        bp = tuple(float(z) for z in breakpoints)
        dens = tuple(float(d) for d in densities)
        if len(bp) < 2:
            raise DomainError("StepPdf needs at least two breakpoints")
        if len(dens) != len(bp) - 1:
            raise DomainError(
                f"expected {len(bp) - 1} densities for {len(bp)} breakpoints, "
                f"got {len(dens)}"
            )
        if not all(math.isfinite(z) for z in bp):
            raise DomainError("breakpoints must be finite")
        if any(z2 <= z1 for z1, z2 in zip(bp, bp[1:])):
            raise DomainError("breakpoints must be strictly increasing")
        if any(not math.isfinite(d) or d < 0.0 for d in dens):
            raise DomainError("densities must be finite and nonnegative")

        if cumulative is None:
            acc = [0.0]
            for d, z1, z2 in zip(dens, bp, bp[1:]):
                acc.append(acc[-1] + d * (z2 - z1))
            cum = tuple(acc)
        else:
            cum = tuple(float(v) for v in cumulative)
            if len(cum) != len(bp):
                raise DomainError("cumulative table must match breakpoints")
            if cum[0] != 0.0 or any(v2 < v1 for v1, v2 in zip(cum, cum[1:])):
                raise DomainError("cumulative table must be nondecreasing from 0")
        if abs(cum[-1] - 1.0) > _MASS_TOL:
            raise DomainError(
                f"total mass must be 1 within {_MASS_TOL}, got {cum[-1]!r}"
            )

        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "densities", dens)
        object.__setattr__(self, "_cumulative", cum)

    def __setattr__(self, name, value):
        raise AttributeError("StepPdf is immutable")

    def __repr__(self) -> str:
        return f"StepPdf(breakpoints={self.breakpoints}, densities={self.densities})"

    @classmethod
    def from_cdf_knots(
        cls, breakpoints: Sequence[float], cdf_values: Sequence[float]
    ) -> "StepPdf":
        """Build the density whose CDF passes through (breakpoint, value) knots.

        ``cdf_values`` must run nondecreasing from 0 to 1; the knot table is
        stored verbatim, so the CDF reproduces every knot value exactly.
        """
        bp = [float(z) for z in breakpoints]
        cum = [float(v) for v in cdf_values]
        if len(cum) != len(bp):
            raise DomainError("one cdf value per breakpoint is required")
        if not cum or cum[0] != 0.0 or cum[-1] != 1.0:
            raise DomainError("cdf knots must start at 0 and end at 1")
        dens = [
            (v2 - v1) / (z2 - z1)
            for v1, v2, z1, z2 in zip(cum, cum[1:], bp, bp[1:])
        ]
        return cls(bp, dens, cumulative=cum)

    @property
    def total_mass(self) -> float:
        return math.fsum(
            d * (z2 - z1)
            for d, z1, z2 in zip(self.densities, self.breakpoints, self.breakpoints[1:])
        )

    def pdf(self, t: float) -> float:
        t = float(t)
        bp = self.breakpoints
        if t <= bp[0] or t > bp[-1]:
            return 0.0
        return self.densities[bisect_left(bp, t) - 1]

    def cdf(self, z: float) -> float:
        """Mass at or below z: 0 left of the support, 1 right of it."""
        z = float(z)
        if math.isnan(z):
            raise DomainError("cdf argument must not be NaN")
        bp = self.breakpoints
        cum = self._cumulative
        if z <= bp[0]:
            return 0.0
        if z >= bp[-1]:
            return 1.0
        i = bisect_left(bp, z)
        if bp[i] == z:
            return cum[i]
        value = cum[i - 1] + self.densities[i - 1] * (z - bp[i - 1])
        # Clamp so floating-point drift can never break monotonicity.
        return min(max(value, cum[i - 1]), cum[i])


def _check_control_sequences(zs: Sequence[float], ys: Sequence[float]):
    if len(zs) == 0:
        raise DomainError("at least one control pair is required")
    if len(zs) != len(ys):
        raise DomainError("zs and ys must have equal length")
    if not all(math.isfinite(float(z)) for z in zs):
        raise DomainError("zs must be finite")
    for i, (z1, z2) in enumerate(zip(zs, zs[1:])):
        if not z2 > z1:
            raise DomainError(f"zs must be strictly increasing: zs[{i + 1}] <= zs[{i}]")
    for i, y in enumerate(ys):
        if not 0.0 < float(y) < 1.0:
            raise DomainError(f"ys must lie in (0, 1): ys[{i}] = {y!r}")
    for i, (y1, y2) in enumerate(zip(ys, ys[1:])):
        if not y2 > y1:
            raise DomainError(f"ys must be strictly increasing: ys[{i + 1}] <= ys[{i}]")


def build_multi_step_pdf(zs: Sequence[float], ys: Sequence[float]) -> StepPdf:
    """Step density whose CDF hits y_i at z_i for every control pair.

    Unit-width cells are padded on to each end carrying mass ys[0] and
    1 - ys[-1]; interior cells carry the slope (y_{i+1}-y_i)/(z_{i+1}-z_i).
    """
    zs = [float(z) for z in zs]
    ys = [float(y) for y in ys]
    _check_control_sequences(zs, ys)
    breakpoints = [zs[0] - 1.0, *zs, zs[-1] + 1.0]
    knots = [0.0, *ys, 1.0]
    return StepPdf.from_cdf_knots(breakpoints, knots)


def build_two_step_pdf(z: float, y: float) -> StepPdf:
    """Two-cell density with mass y on (z-1, z] and 1-y on (z, z+1]."""
    return build_multi_step_pdf([z], [y])
