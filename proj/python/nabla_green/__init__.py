"""Nabla fractional difference equations: solvers, Green's functions and oracle checks."""

from ._core import (
    BoundarySpec,
    DegenerateDenominator,
    DomainError,
    FracOperator,
    GreensFunction,
    GridFunction,
    InvalidArgument,
    NablaError,
    NearSingular,
    SingularSystem,
    __version__,
    apply,
    build_greens,
    caputo_difference,
    cauchy_matrix,
    compare_greens,
    conjugate_greens_closed_form,
    d_matrix,
    dense_solve_ivp,
    frac_integral,
    greens_solve,
    homogeneous_basis,
    nabla,
    residual,
    rising,
    rl_difference,
    solve_bvp,
    solve_ivp,
    taylor_monomial,
    variation_of_constants,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
