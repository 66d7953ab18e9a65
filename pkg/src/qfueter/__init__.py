"""Quaternionic size, complex structures and Fueter-regular polynomial functions."""

from .adjugate import (
    abc_criterion,
    adjugate,
    complex_det,
    complex_pair_coefficients,
    det_M_identity,
    hermitian_M,
    is_rl_biregular,
    jac,
    rl_biregular_via_det,
)
from .errors import DomainError, NotRegularError, ParseError, SemanticError
from .forms import (
    classify_complex_linearity,
    closed_form_A,
    direct_A_matrix,
    is_complex_linear,
    max_eigen_holomorphy_check,
    size,
    structure_matrices,
)
from .fueter import (
    QPolynomialFunction,
    classify_at,
    classify_function,
    conformal_affine_recover,
    crf_left,
    crf_right,
    differential_at,
    holomorphy_criterion,
    structure_field,
)
from .linmap import (
    RealLinearMap,
    bar_theta_map,
    conj_map,
    decompose_bar_theta,
    from_bar_theta,
    is_left_regular,
    is_right_regular,
    qdot_left,
    qdot_right,
    rank,
)
from .parser import parse_function, parse_map, parse_quaternion, print_function
from .polynomial import Polynomial
from .quaternion import (
    I,
    J,
    K,
    ONE,
    STANDARD_BASIS,
    ZERO,
    ImaginaryUnit,
    OrthonormalBasis,
    Quaternion,
    bar_theta,
    theta,
)

__all__ = [
    "abc_criterion",
    "adjugate",
    "complex_det",
    "complex_pair_coefficients",
    "det_M_identity",
    "hermitian_M",
    "is_rl_biregular",
    "jac",
    "rl_biregular_via_det",
    "DomainError",
    "NotRegularError",
    "ParseError",
    "SemanticError",
    "classify_complex_linearity",
    "closed_form_A",
    "direct_A_matrix",
    "is_complex_linear",
    "max_eigen_holomorphy_check",
    "size",
    "structure_matrices",
    "QPolynomialFunction",
    "classify_at",
    "classify_function",
    "conformal_affine_recover",
    "crf_left",
    "crf_right",
    "differential_at",
    "holomorphy_criterion",
    "structure_field",
    "RealLinearMap",
    "bar_theta_map",
    "conj_map",
    "decompose_bar_theta",
    "from_bar_theta",
    "is_left_regular",
    "is_right_regular",
    "qdot_left",
    "qdot_right",
    "rank",
    "parse_function",
    "parse_map",
    "parse_quaternion",
    "print_function",
    "Polynomial",
    "I",
    "J",
    "K",
    "ONE",
    "STANDARD_BASIS",
    "ZERO",
    "ImaginaryUnit",
    "OrthonormalBasis",
    "Quaternion",
    "bar_theta",
    "theta",
]

__version__ = "0.1.0"
