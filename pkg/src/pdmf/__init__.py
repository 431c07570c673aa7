"""Fuzzy numbers with membership functions induced by probability densities.

The membership grade on each side of the peak is the CDF of a probability
density evaluated at the image of an auxiliary function that stretches the
side interval over the whole real line.  The tangent/Gaussian specialization
(``GPdmf``) admits closed-form fitting from control points and a
componentwise arithmetic with a linear-algebra structure.
"""

from .algebra import (
    EquationSolution,
    add,
    approx_equal,
    scale,
    solve_add_equation,
    sub,
)
from .auxiliary import (
    TANGENT,
    AuxiliaryFunction,
    LafValidation,
    left_map,
    quantile_h,
    quantile_laf,
    right_map,
    tangent_h,
    validate_laf,
)
from .densities import GaussianKernel, StepPdf, build_multi_step_pdf, build_two_step_pdf
from .errors import DocumentError, DomainError
from .fitting import (
    ControlPoint,
    fit_gpdmf,
    fit_mu_left,
    fit_mu_right,
    fit_step_pdmf,
    triangular_as_pdmf,
)
from .membership import (
    GPdmf,
    MembershipValidation,
    PdmfSpec,
    check_monotone_fuzzy_number,
    eval_gpdmf,
    eval_membership,
    membership,
    sample_curve,
)
from .numerics import std_normal_cdf, std_normal_pdf, std_normal_quantile

__version__ = "0.1.0"

__all__ = [
    "AuxiliaryFunction",
    "ControlPoint",
    "DocumentError",
    "DomainError",
    "EquationSolution",
    "GPdmf",
    "GaussianKernel",
    "LafValidation",
    "MembershipValidation",
    "PdmfSpec",
    "StepPdf",
    "TANGENT",
    "add",
    "approx_equal",
    "build_multi_step_pdf",
    "build_two_step_pdf",
    "check_monotone_fuzzy_number",
    "eval_gpdmf",
    "eval_membership",
    "fit_gpdmf",
    "fit_mu_left",
    "fit_mu_right",
    "fit_step_pdmf",
    "left_map",
    "membership",
    "quantile_h",
    "quantile_laf",
    "right_map",
    "sample_curve",
    "scale",
    "solve_add_equation",
    "std_normal_cdf",
    "std_normal_pdf",
    "std_normal_quantile",
    "sub",
    "tangent_h",
    "triangular_as_pdmf",
    "validate_laf",
]
