"""Eigenfunctions of -u'' = alpha u+ - beta u- with Dirichlet conditions.

The package constructs the normalized piecewise-sine eigenfunctions
attached to the spectrum curves of this problem, evaluates their norms,
distances and scalar products in closed form, certifies every closed form
against an independent adaptive-quadrature oracle, and runs the summation
criteria under which these systems form a Riesz basis of L2(0, pi).
"""

__version__ = "0.1.0"

from .spectrum import (
    BumpLengths,
    FucikPoint,
    complete_point,
    curve_residual,
    diagonal_point,
    gamma_line_point,
    make_point,
)
from .eigenfunction import FucikEigenfunction, SineMode, breakpoints, build, evaluate
from .quadrature import PiecewiseIntegrand, inner_numeric, integrate
from .closedform import (
    ClosedFormValue,
    bump_route_inner,
    dist_sq_to_sine,
    inner_cross_index,
    inner_same_index,
    norm_sq,
)
from .nearness import (
    BranchRule,
    FinitePerturbation,
    GammaLine,
    NearnessReport,
    PowerFamily,
    bound_Cn,
    corollary_cn_cap,
    kato_weakened_term,
    region_boundary,
    theorem1_check,
    theorem2_check,
    zeta,
)
from .paleywiener import (
    AntiperiodicFunction,
    DilationOperator,
    PaleyWienerBudget,
    E_gamma,
    E_gamma_extended,
    Tk_norm,
    antiperiodic_extend,
    apply_Tk,
    budget,
    ck_bound,
    dilation_factor,
    fourier_Ak,
    gamma_admissible_max,
    theoremD_residual,
)
from .grammatrix import (
    GramTruncation,
    build_gram,
    extreme_eigenvalues,
    jacobi_eigenvalues,
    riesz_scan,
)

__all__ = [
    "__version__",
    "BumpLengths", "FucikPoint", "complete_point", "curve_residual",
    "diagonal_point", "gamma_line_point", "make_point",
    "FucikEigenfunction", "SineMode", "breakpoints", "build", "evaluate",
    "PiecewiseIntegrand", "inner_numeric", "integrate",
    "ClosedFormValue", "bump_route_inner", "dist_sq_to_sine",
    "inner_cross_index", "inner_same_index", "norm_sq",
    "BranchRule", "FinitePerturbation", "GammaLine", "NearnessReport",
    "PowerFamily", "bound_Cn", "corollary_cn_cap", "kato_weakened_term",
    "region_boundary", "theorem1_check", "theorem2_check", "zeta",
    "AntiperiodicFunction", "DilationOperator", "PaleyWienerBudget",
    "E_gamma", "E_gamma_extended", "Tk_norm", "antiperiodic_extend",
    "apply_Tk", "budget", "ck_bound", "dilation_factor", "fourier_Ak",
    "gamma_admissible_max", "theoremD_residual",
    "GramTruncation", "build_gram", "extreme_eigenvalues",
    "jacobi_eigenvalues", "riesz_scan",
]
