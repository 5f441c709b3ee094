"""Exact dimensions of spaces of Jacobi cusp forms from branching data."""

from fractions import Fraction

from ._core import (
    BranchingScheme,
    DimensionResult,
    LemmaCheckReport,
    Rational,
    ReducedForm,
    SFunctionTriple,
    SuiteReport,
    classical_dim_cusp_forms,
    dim_corollary_gammaN,
    dim_gammaN_4m_divides_N,
    dim_jacobi,
    dim_theorem1,
    dim_theorem2,
    dim_theorem3,
    dim_theorem4,
    divisors,
    enumerate_reduced_forms,
    euler_phi,
    gamma0_scheme,
    gamma1_scheme,
    hurwitz_h1,
    hurwitz_hn,
    is_squarefree,
    kronecker_symbol,
    lemma_check,
    lifting_identity_check,
    p_even,
    principal_congruence_scheme,
    psi_index,
    run_equivalence_suite,
    run_identity_suite,
    run_lemma_suite,
    run_lifting_suite,
    s_ell,
    s_identity_dim,
    s_par,
    s_top,
    s_triple,
    skew_dim_conjecture,
    square_part,
)

__all__ = [
    "BranchingScheme",
    "DimensionResult",
    "LemmaCheckReport",
    "Rational",
    "ReducedForm",
    "SFunctionTriple",
    "SuiteReport",
    "as_fraction",
    "classical_dim_cusp_forms",
    "dim_corollary_gammaN",
    "dim_gammaN_4m_divides_N",
    "dim_jacobi",
    "dim_theorem1",
    "dim_theorem2",
    "dim_theorem3",
    "dim_theorem4",
    "divisors",
    "enumerate_reduced_forms",
    "euler_phi",
    "gamma0_scheme",
    "gamma1_scheme",
    "hurwitz_h1",
    "hurwitz_hn",
    "is_squarefree",
    "kronecker_symbol",
    "lemma_check",
    "lifting_identity_check",
    "p_even",
    "principal_congruence_scheme",
    "psi_index",
    "run_equivalence_suite",
    "run_identity_suite",
    "run_lemma_suite",
    "run_lifting_suite",
    "s_ell",
    "s_identity_dim",
    "s_par",
    "s_top",
    "s_triple",
    "skew_dim_conjecture",
    "square_part",
]


def as_fraction(value):
    """Convert a Rational (or a DimensionResult's value) to fractions.Fraction."""
    if isinstance(value, DimensionResult):
        value = value.value
    return Fraction(value.num, value.den)
