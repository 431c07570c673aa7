"""Determine fuzzy-number parameters from prescribed control points.

Three constructions are provided:

* the tangent/Gaussian side means from one control point per side; the
  defining CDF equation inverts in closed form because the standard-normal
  CDF is strictly monotone, so each mean is the auxiliary value at the
  control abscissa minus the normal quantile of the control ordinate;
* a step-density fuzzy number interpolating any finite family of control
  points exactly;
* the triangular number realized with a Gaussian kernel by taking the
  shifted quantile itself as auxiliary function (the shift cancels).
"""

import math
from dataclasses import dataclass
from typing import Sequence

from .auxiliary import TANGENT, AuxiliaryFunction, left_map, quantile_laf, right_map
from .densities import GaussianKernel, build_multi_step_pdf
from .errors import DomainError
from .membership import GPdmf, PdmfSpec
from .numerics import std_normal_quantile

__all__ = [
    "ControlPoint",
    "fit_gpdmf",
    "fit_mu_left",
    "fit_mu_right",
    "fit_step_pdmf",
    "triangular_as_pdmf",
]


@dataclass(frozen=True)
class ControlPoint:
    """A prescribed (abscissa, membership) pair; the ordinate must be interior.

    y = 0 or y = 1 would force an infinite quantile and is rejected.
    """

    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not math.isfinite(x):
            raise DomainError(f"control abscissa must be finite, got {x!r}")
        if not 0.0 < y < 1.0:
            raise DomainError(f"control ordinate must lie in (0, 1), got {y!r}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)


def fit_mu_left(a: float, b: float, point: ControlPoint) -> float:
    """Left-side Gaussian mean driving the curve through ``point`` on (a, b)."""
    a, b = float(a), float(b)
    if not a < point.x < b:
        raise DomainError(
            f"left control point must satisfy a < x < b, got x={point.x} "
            f"outside ({a}, {b})"
        )
    return left_map(point.x, a, b, TANGENT) - std_normal_quantile(point.y)


def fit_mu_right(b: float, c: float, point: ControlPoint) -> float:
    """Right-side Gaussian mean driving the curve through ``point`` on (b, c)."""
    b, c = float(b), float(c)
    if not b < point.x < c:
        raise DomainError(
            f"right control point must satisfy b < x < c, got x={point.x} "
            f"outside ({b}, {c})"
        )
    return right_map(point.x, b, c, TANGENT) - std_normal_quantile(point.y)


def fit_gpdmf(
    a: float, b: float, c: float, left: ControlPoint, right: ControlPoint
) -> GPdmf:
    """Unique tangent/Gaussian number through one control point per side."""
    a, b, c = float(a), float(b), float(c)
    if not a < left.x < b < right.x < c:
        raise DomainError(
            "control points must satisfy a < P.x < b < Q.x < c, got "
            f"a={a}, P.x={left.x}, b={b}, Q.x={right.x}, c={c}"
        )
    return GPdmf(a, b, c, fit_mu_left(a, b, left), fit_mu_right(b, c, right))


def _check_left_points(a: float, b: float, points: Sequence[ControlPoint]):
    if len(points) == 0:
        raise DomainError("at least one left control point is required")
    for i, p in enumerate(points):
        if not a < p.x < b:
            raise DomainError(
                f"lefts[{i}].x = {p.x} must lie strictly inside ({a}, {b})"
            )
    for i, (p1, p2) in enumerate(zip(points, points[1:])):
        if not p2.x > p1.x:
            raise DomainError(
                f"lefts must be strictly increasing in x: lefts[{i + 1}].x <= lefts[{i}].x"
            )
        if not p2.y > p1.y:
            raise DomainError(
                f"lefts must be strictly increasing in y: lefts[{i + 1}].y <= lefts[{i}].y"
            )


def _check_right_points(b: float, c: float, points: Sequence[ControlPoint]):
    if len(points) == 0:
        raise DomainError("at least one right control point is required")
    for j, q in enumerate(points):
        if not b < q.x < c:
            raise DomainError(
                f"rights[{j}].x = {q.x} must lie strictly inside ({b}, {c})"
            )
    for j, (q1, q2) in enumerate(zip(points, points[1:])):
        if not q2.x > q1.x:
            raise DomainError(
                f"rights must be strictly increasing in x: rights[{j + 1}].x <= rights[{j}].x"
            )
        if not q2.y < q1.y:
            raise DomainError(
                f"rights must be strictly decreasing in y: rights[{j + 1}].y >= rights[{j}].y"
            )


def fit_step_pdmf(
    a: float,
    b: float,
    c: float,
    lefts: Sequence[ControlPoint],
    rights: Sequence[ControlPoint],
    h: AuxiliaryFunction = TANGENT,
) -> PdmfSpec:
    """Step-density fuzzy number whose curve passes through every control point.

    Left points must rise in both coordinates; right points rise in x while
    falling in y.  Each side's points are mapped through the auxiliary
    function and interpolated by a step density; the right side is re-sorted
    ascending because the reflected map reverses orientation.
    """
    a, b, c = float(a), float(b), float(c)
    if not a < b < c:
        raise DomainError(f"support must satisfy a < b < c, got ({a}, {b}, {c})")
    lefts = list(lefts)
    rights = list(rights)
    _check_left_points(a, b, lefts)
    _check_right_points(b, c, rights)

    p_left = build_multi_step_pdf(
        [left_map(p.x, a, b, h) for p in lefts], [p.y for p in lefts]
    )
    p_right = build_multi_step_pdf(
        [right_map(q.x, b, c, h) for q in reversed(rights)],
        [q.y for q in reversed(rights)],
    )
    return PdmfSpec(a, b, c, h, p_left, p_right)


def triangular_as_pdmf(a: float, b: float, c: float, mu: float) -> PdmfSpec:
    """Triangular fuzzy number realized with a Gaussian kernel of mean ``mu``.

    The auxiliary function is u -> mu + Q(u), so the kernel's CDF undoes it
    and the membership is linear on both sides regardless of ``mu``.
    """
    a, b, c = float(a), float(b), float(c)
    if not a < b < c:
        raise DomainError(f"support must satisfy a < b < c, got ({a}, {b}, {c})")
    mu = float(mu)
    if not math.isfinite(mu):
        raise DomainError(f"mu must be finite, got {mu!r}")
    kernel = GaussianKernel(mu)
    return PdmfSpec(a, b, c, quantile_laf(mu), kernel, kernel)
