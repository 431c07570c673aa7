"""Arithmetic on tangent/Gaussian fuzzy numbers.

The operations act purely on the five-parameter representation; membership
functions are never sampled.  Negative scalars reverse the support and swap
the side means so the result stays ordered.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .membership import GPdmf

__all__ = [
    "EquationSolution",
    "add",
    "approx_equal",
    "scale",
    "solve_add_equation",
    "sub",
]


def add(b1: GPdmf, b2: GPdmf) -> GPdmf:
    """Componentwise sum of supports and side means."""
    return GPdmf(
        b1.a + b2.a,
        b1.b + b2.b,
        b1.c + b2.c,
        b1.mu_left + b2.mu_left,
        b1.mu_right + b2.mu_right,
    )


def scale(factor: float, number: GPdmf) -> GPdmf:
    """Scalar multiple; a negative factor mirrors the support and swaps means."""
    factor = float(factor)
    if not math.isfinite(factor):
        raise DomainError(f"scale factor must be finite, got {factor!r}")
    if factor >= 0.0:
        return GPdmf(
            factor * number.a,
            factor * number.b,
            factor * number.c,
            factor * number.mu_left,
            factor * number.mu_right,
        )
    return GPdmf(
        factor * number.c,
        factor * number.b,
        factor * number.a,
        factor * number.mu_right,
        factor * number.mu_left,
    )


def sub(b1: GPdmf, b2: GPdmf) -> GPdmf:
    """Difference: support feet cross over and the side means swap roles."""
    return GPdmf(
        b1.a - b2.c,
        b1.b - b2.b,
        b1.c - b2.a,
        b1.mu_left - b2.mu_right,
        b1.mu_right - b2.mu_left,
    )


# Reassociation slack for the recovery flags: (x - y) + y need not return x.
_RESIDUAL_TOL = 1e-12


@dataclass(frozen=True)
class EquationSolution:
    """Solution of b2 (+) X = b1 together with its substitution residual.

    ``residual`` is add(b2, solution) minus b1, componentwise.  The mean
    components always cancel; the support triple generally does not (it only
    does when b2 is crisp), so the discrepancy is surfaced rather than hidden.
    """

    solution: GPdmf
    residual: tuple[float, float, float, float, float]

    @property
    def mu_recovered(self) -> bool:
        return all(abs(r) <= _RESIDUAL_TOL for r in self.residual[3:])

    @property
    def support_recovered(self) -> bool:
        return all(abs(r) <= _RESIDUAL_TOL for r in self.residual[:3])


def solve_add_equation(b1: GPdmf, b2: GPdmf) -> EquationSolution:
    """Solve b2 (+) X = b1 by direct subtraction and report the residual."""
    solution = sub(b1, b2)
    recovered = add(b2, solution)
    residual = tuple(r - t for r, t in zip(recovered.components, b1.components))
    return EquationSolution(solution=solution, residual=residual)


def approx_equal(b1: GPdmf, b2: GPdmf, tol: float) -> bool:
    """True iff all five components agree within ``tol``."""
    tol = float(tol)
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    return all(
        abs(x - y) <= tol for x, y in zip(b1.components, b2.components)
    )
