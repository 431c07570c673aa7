"""Auxiliary functions: strictly increasing maps from (0,1) onto the real line.

A left auxiliary function (LAF) carries the rising side of a fuzzy number's
support onto the density axis; the falling side reuses the same function with
the argument reflected, so the right-hand map is never an independent object.
Two generators are built in: the tangent map and the shifted normal quantile.
Custom generators are accepted but should clear :func:`validate_laf` before
being trusted inside a membership function.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .numerics import std_normal_quantile

__all__ = [
    "AuxiliaryFunction",
    "LafValidation",
    "TANGENT",
    "left_map",
    "quantile_h",
    "quantile_laf",
    "right_map",
    "tangent_h",
    "validate_laf",
]

_HALF_PI = 0.5 * math.pi

# Divergence at the interval ends has no canonical rate, so two pragmatic
# probes are used: a raw magnitude threshold, and a multi-scale sweep that
# demands the values keep moving outward by at least _DIVERGENCE_MARGIN per
# decade of approach.  Slowly diverging generators (the normal quantile grows
# like sqrt(-2 ln u)) clear the sweep but can never clear a 1e6 magnitude bar.
_DIVERGENCE_OFFSETS = (1e-2, 1e-4, 1e-6)
_DIVERGENCE_MARGIN = 0.05

# Continuity is probed away from the divergent ends: on a fixed central
# window, refining the grid tenfold must shrink the largest jump.
_CONTINUITY_WINDOW = (0.01, 0.99)
_CONTINUITY_FLOOR = 1e-6


def _check_unit_open(u: float, name: str = "u") -> float:
    u = float(u)
    if not 0.0 < u < 1.0:
        raise DomainError(f"{name} must lie in the open interval (0, 1), got {u!r}")
    return u


def _tangent(u: float) -> float:
    return math.tan(math.pi * u - _HALF_PI)


def tangent_h(u: float) -> float:
    """Tangent generator tan(pi*u - pi/2), mapping (0,1) onto the reals."""
    return _tangent(_check_unit_open(u))


def quantile_h(u: float, mu: float) -> float:
    """Shifted normal quantile mu + Q(u); inverts the Gaussian CDF with mean mu."""
    u = _check_unit_open(u)
    mu = float(mu)
    if not math.isfinite(mu):
        raise DomainError(f"mu must be finite, got {mu!r}")
    return mu + std_normal_quantile(u)


class AuxiliaryFunction:
    """Immutable wrapper around a generator h: (0,1) -> R.

    ``kind`` tags the two built-ins ("tangent", "quantile") so downstream
    code can trust them without re-validation; anything else is "custom".
    """

    __slots__ = ("kind", "mu", "_fn")

    def __init__(
        self,
        fn: Callable[[float], float],
        kind: str = "custom",
        mu: float | None = None,
    ):
        object.__setattr__(self, "_fn", fn)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "mu", mu)

    def __setattr__(self, name, value):
        raise AttributeError("AuxiliaryFunction is immutable")

    def __call__(self, u: float) -> float:
        return float(self._fn(_check_unit_open(u)))

    def __repr__(self) -> str:
        if self.kind == "quantile":
            return f"AuxiliaryFunction(kind='quantile', mu={self.mu})"
        return f"AuxiliaryFunction(kind={self.kind!r})"


TANGENT = AuxiliaryFunction(_tangent, kind="tangent")


def quantile_laf(mu: float) -> AuxiliaryFunction:
    """Auxiliary function u -> mu + Q(u) for a fixed finite mean."""
    mu = float(mu)
    if not math.isfinite(mu):
        raise DomainError(f"mu must be finite, got {mu!r}")
    return AuxiliaryFunction(
        lambda u: mu + std_normal_quantile(u), kind="quantile", mu=mu
    )


def left_map(x: float, a: float, b: float, h: AuxiliaryFunction) -> float:
    """h applied to the unit-rescaled coordinate (x-a)/(b-a); rising side."""
    a, b, x = float(a), float(b), float(x)
    if not a < b:
        raise DomainError(f"left_map requires a < b, got a={a}, b={b}")
    if not a < x < b:
        raise DomainError(f"left_map requires a < x < b, got x={x} outside ({a}, {b})")
    return h((x - a) / (b - a))


def right_map(x: float, b: float, c: float, h: AuxiliaryFunction) -> float:
    """h applied to the reflected coordinate (c-x)/(c-b); decreasing in x."""
    b, c, x = float(b), float(c), float(x)
    if not b < c:
        raise DomainError(f"right_map requires b < c, got b={b}, c={c}")
    if not b < x < c:
        raise DomainError(f"right_map requires b < x < c, got x={x} outside ({b}, {c})")
    return h((c - x) / (c - b))


@dataclass(frozen=True)
class LafValidation:
    """Outcome of the three auxiliary-function checks on a sample grid."""

    strictly_increasing: bool
    diverges_at_bounds: bool
    continuous: bool
    grid_size: int

    @property
    def passed(self) -> bool:
        return self.strictly_increasing and self.diverges_at_bounds and self.continuous

    def lines(self) -> list[str]:
        def verdict(ok: bool) -> str:
            return "pass" if ok else "FAIL"

        return [
            f"strict monotonicity ({self.grid_size}-point grid): "
            f"{verdict(self.strictly_increasing)}",
            f"boundary divergence: {verdict(self.diverges_at_bounds)}",
            f"continuity sweep: {verdict(self.continuous)}",
        ]


def _diverges(h: AuxiliaryFunction, edge_offset: float, threshold: float) -> bool:
    lo = h(edge_offset)
    hi = h(1.0 - edge_offset)
    if lo < -threshold and hi > threshold:
        return True
    offsets = [e for e in _DIVERGENCE_OFFSETS if e > edge_offset] + [edge_offset]
    left = [h(e) for e in offsets]
    right = [h(1.0 - e) for e in offsets]
    still_falling = all(
        nxt <= prev - _DIVERGENCE_MARGIN for prev, nxt in zip(left, left[1:])
    )
    still_rising = all(
        nxt >= prev + _DIVERGENCE_MARGIN for prev, nxt in zip(right, right[1:])
    )
    return still_falling and still_rising


def _max_step(h: AuxiliaryFunction, lo: float, hi: float, n: int) -> float:
    values = [h(float(u)) for u in np.linspace(lo, hi, n)]
    return max(abs(v2 - v1) for v1, v2 in zip(values, values[1:]))


def validate_laf(
    h: AuxiliaryFunction,
    grid_size: int,
    *,
    divergence_threshold: float = 1e6,
    edge_offset: float = 1e-8,
) -> LafValidation:
    """Probe an auxiliary function for monotonicity, divergence and continuity.

    Failures are reported, never raised.  ``grid_size`` points are laid out
    uniformly on (edge_offset, 1 - edge_offset).
    """
    grid_size = int(grid_size)
    if grid_size < 3:
        raise DomainError(f"grid_size must be >= 3, got {grid_size}")

    grid = np.linspace(edge_offset, 1.0 - edge_offset, grid_size)
    values = [h(float(u)) for u in grid]
    increasing = all(v2 > v1 for v1, v2 in zip(values, values[1:]))

    diverges = _diverges(h, edge_offset, divergence_threshold)

    lo, hi = _CONTINUITY_WINDOW
    coarse = _max_step(h, lo, hi, grid_size)
    fine = _max_step(h, lo, hi, 10 * grid_size)
    continuous = fine <= max(0.5 * coarse, _CONTINUITY_FLOOR)

    return LafValidation(
        strictly_increasing=increasing,
        diverges_at_bounds=diverges,
        continuous=continuous,
        grid_size=grid_size,
    )
