"""Exact differential forms over prime fields.

The package implements the calculus of algebraic differential forms in
characteristic p: the p-closedness test for exactness, a constructive
integrator for p-closed forms, the rational/irrational and completely
integrable/restricted splits, and the Cartier operator with its canonical
inverse gamma0.
"""

from .audit import run_audit
from .cartier import (
    CohomologyWitness,
    cartier,
    class_representative,
    gamma0,
    same_class,
)
from .errors import (
    ArityMismatch,
    DegreeMismatch,
    DegreeOverflow,
    DegreeZero,
    DivisionByZero,
    FpFormsError,
    IndexOutOfRange,
    InternalError,
    InternalResidual,
    MathDomainError,
    NonPolynomial,
    NotClosed,
    NotPClosed,
    NotPthPower,
    ObstructedAntiderivative,
    ParseError,
    PrimeMismatch,
    PrimeOutOfRange,
    SystemTooLarge,
    VariableOutOfRange,
    ZeroDenominator,
)
from .forms import (
    DiffForm,
    basis_form,
    coefficient_form,
    exterior_derivative,
    insert_index,
    is_closed,
    merge_indices,
    remove_index,
    sorted_index_sign,
    wedge,
    zero_form,
)
from .operators import (
    SplitCT,
    SplitRI,
    corollary_condition,
    irrational_part,
    is_p_closed,
    o_operator,
    o_operator_expanded,
    p_closed_failure,
    p_decompose_step,
    p_operator,
    phi,
    split_complete_restricted,
    split_rational_irrational,
)
from .parser import parse_form
from .poincare import (
    IntegrationResult,
    exactness_oracle,
    integrate,
    integrate_with_residual,
)
from .poly import (
    DEFAULT_MAX_DEGREE,
    MultiPoly,
    max_degree_limit,
    set_max_degree,
    variables,
)
from .printer import doc_to_form, form_to_doc, form_to_text, print_form
from .ratfun import RatFun, clear_denominators, make_ratfun, rat_partial
from .scalar import MAX_PRIME, Prime, Scalar, factorial_mod, inv, is_prime

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "CohomologyWitness",
    "DEFAULT_MAX_DEGREE",
    "DegreeMismatch",
    "DegreeOverflow",
    "DegreeZero",
    "DiffForm",
    "DivisionByZero",
    "FpFormsError",
    "IndexOutOfRange",
    "IntegrationResult",
    "InternalError",
    "InternalResidual",
    "MAX_PRIME",
    "MathDomainError",
    "MultiPoly",
    "NonPolynomial",
    "NotClosed",
    "NotPClosed",
    "NotPthPower",
    "ObstructedAntiderivative",
    "ParseError",
    "Prime",
    "PrimeMismatch",
    "PrimeOutOfRange",
    "RatFun",
    "Scalar",
    "SplitCT",
    "SplitRI",
    "SystemTooLarge",
    "VariableOutOfRange",
    "ZeroDenominator",
    "basis_form",
    "cartier",
    "class_representative",
    "clear_denominators",
    "coefficient_form",
    "corollary_condition",
    "doc_to_form",
    "exactness_oracle",
    "exterior_derivative",
    "factorial_mod",
    "form_to_doc",
    "form_to_text",
    "gamma0",
    "insert_index",
    "integrate",
    "integrate_with_residual",
    "inv",
    "irrational_part",
    "is_closed",
    "is_p_closed",
    "is_prime",
    "make_ratfun",
    "max_degree_limit",
    "merge_indices",
    "o_operator",
    "o_operator_expanded",
    "p_closed_failure",
    "p_decompose_step",
    "p_operator",
    "parse_form",
    "phi",
    "print_form",
    "rat_partial",
    "remove_index",
    "run_audit",
    "same_class",
    "set_max_degree",
    "sorted_index_sign",
    "split_complete_restricted",
    "split_rational_irrational",
    "variables",
    "wedge",
    "zero_form",
]
