"""Exact enumeration and certification of rational solutions of
``f(z+1) = R(z, f(z))`` and ``f'(z) = R(z, f(z))``.
"""

from .bounds import (
    BoundCertificate,
    HeightBound,
    certify,
    count_bound,
    degree_bound,
    form_count_bound,
    height_bound,
    per_degree_component_bound,
)
from .equation import DIFFERENCE, DIFFERENTIAL, REq, format_req, req_from_forms
from .errors import (
    BudgetExhausted,
    CommonFactor,
    DivisionByZeroExpression,
    HypothesisViolated,
    MalmquistError,
    NonIntegerExponent,
    ParseError,
    SingularSystem,
    UndefinedComposition,
    ZeroDenominator,
)
from .forms import BiForm, form_compose
from .groebner import GroebnerBasis, MonOrder, buchberger
from .heights import HeightReport, height_poly, height_projective, height_ratfunc, height_req
from .mpoly import MPoly
from .parser import EquationSpec, parse_equation, parse_ratfunc
from .poly import RatFunc, UPoly, poly_gcd, ratfunc_reduce
from .resultant import bezout_cofactors, resultant, sylvester_matrix
from .solver import (
    SolutionReport,
    SolveOptions,
    brute_force_oracle,
    extract_solutions,
    solve_all,
    verify_solution,
)
from .system import CoeffSystem, build_system

__version__ = "0.1.0"
