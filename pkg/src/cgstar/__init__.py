"""Symbolic and numeric engine for s-parameterized ordering correspondences.

Exact operator/phase polynomial algebra, the ordering transform and its
inverse, both star products with Bopp-operator evaluations, a truncated
Fock-space numeric oracle, and quasiprobability grids.
"""

from .exactnum import ExactComplex, Rational, as_rational, parse_rational
from .ccr import (
    OperatorPoly,
    adjoint_deriv,
    commutator,
    formal_deriv,
    multiply,
    normal_order,
    s_basis_decompose,
    s_order_expand,
)
from .phase import PhasePoly, QuadFrame, alpha_to_quad, eval_at, poisson, quad_to_alpha
from .correspondence import (
    SContext,
    cg,
    deformed_bracket,
    hsbs_apply,
    hstar,
    icg,
    nogo_witness,
    odot,
    psbo_apply,
    shift_operator,
    shift_phase,
    star,
    star_commutator,
)
from .exprio import ParseError, lower, parse, parse_poly, poly_from_json, poly_to_json, print_canonical
from .quasigrid import GridField, GridSpec, gaussian_smooth, integrate_grid, quasiprob, state_build

__version__ = "0.1.0"

__all__ = [
    "ExactComplex",
    "GridField",
    "GridSpec",
    "OperatorPoly",
    "ParseError",
    "PhasePoly",
    "QuadFrame",
    "Rational",
    "SContext",
    "adjoint_deriv",
    "alpha_to_quad",
    "as_rational",
    "cg",
    "commutator",
    "deformed_bracket",
    "eval_at",
    "formal_deriv",
    "gaussian_smooth",
    "hsbs_apply",
    "hstar",
    "icg",
    "integrate_grid",
    "lower",
    "multiply",
    "nogo_witness",
    "normal_order",
    "odot",
    "parse",
    "parse_poly",
    "parse_rational",
    "poisson",
    "poly_from_json",
    "poly_to_json",
    "print_canonical",
    "psbo_apply",
    "quad_to_alpha",
    "quasiprob",
    "s_basis_decompose",
    "s_order_expand",
    "shift_operator",
    "shift_phase",
    "star",
    "star_commutator",
    "state_build",
]
