"""Exact branching of Hermitian monogenic polynomials over the Gaussian rationals."""
from .bases import (
    BranchNode,
    CertificationError,
    Dim2BasisElement,
    base_basis,
    basis,
    basis_dim2,
    branch_children,
    build_basis,
    dimension,
    fischer_basis,
    theorem2_check,
)
from .calculus import (
    SpaceLabel,
    SpinorPolynomial,
    dirac_J,
    dirac_z,
    dirac_zdagger,
    euclidean_dirac,
    gram_matrix,
    hermitian_dirac,
    inner_product,
    is_hermitian_monogenic,
    label_of,
    laplacian,
    mult_vector,
)
from .exact import GaussianRational, ScalarPolynomial
from .factors import BranchCase, OperatorPolynomial, SideConditionError, fischer_factor, s_poly, x_factor
from .fock import SpinorElement, WittWord
from .jacobi import Q, jacobi, qpoly
from .report import Report
from .serialize import deserialize, emit_latex, serialize

__version__ = "0.1.0"

__all__ = [
    "BranchCase",
    "BranchNode",
    "CertificationError",
    "Dim2BasisElement",
    "GaussianRational",
    "OperatorPolynomial",
    "Q",
    "Report",
    "ScalarPolynomial",
    "SideConditionError",
    "SpaceLabel",
    "SpinorElement",
    "SpinorPolynomial",
    "WittWord",
    "base_basis",
    "basis",
    "basis_dim2",
    "branch_children",
    "build_basis",
    "deserialize",
    "dimension",
    "dirac_J",
    "dirac_z",
    "dirac_zdagger",
    "emit_latex",
    "euclidean_dirac",
    "fischer_basis",
    "fischer_factor",
    "gram_matrix",
    "hermitian_dirac",
    "inner_product",
    "is_hermitian_monogenic",
    "jacobi",
    "label_of",
    "laplacian",
    "mult_vector",
    "qpoly",
    "s_poly",
    "serialize",
    "theorem2_check",
    "x_factor",
]
