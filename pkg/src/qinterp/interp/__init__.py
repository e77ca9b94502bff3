"""Interpolation polynomials at ``q = t``: one-variable basis, ``F_lambda``, matrices and identities."""

from .divisibility import Certificate, divisibility_certificate, divisibility_sweep, one_row_certificate
from .fpoly import (
    F_poly,
    F_poly_determinant,
    cross_check_F,
    from_nonsymmetric,
    leading_term_check,
    nonsymmetric_coeffs,
    one_row_partial_expansion,
)
from .hopf import (
    d_entry_hopf,
    gram_matrix,
    homfly_coeffs,
    homfly_stable,
    hopf_norm,
    one_row_coeffs,
    orthogonality_failures,
    schur_coefficients,
    staircase_schur,
)
from .matrices import (
    CMatrix,
    DMatrix,
    build_c_matrix,
    build_d_matrix,
    c_entry,
    compare_routes,
    d_entry_okounkov,
    diag_checked,
    diag_value,
    identity_check,
    interpolate_sym,
    prefetch,
    stable_c_entry,
    vanishing_check,
)
from .onevar import (
    binomial_shift_expand,
    binomial_shift_product,
    check_f_uni,
    f_at_q_power,
    f_norm,
    f_uni,
    from_f_coeffs,
    monomial_to_f,
    newton_1d,
    newton_orthogonality_check,
)
from .stability import (
    add_column_check,
    inv_eN_check,
    inv_eN_series,
    mul_by_eN,
    mul_by_eN_check,
    restrict_last_var,
    restricted_expected,
    restriction_check,
    stability_sweep,
    stable_c_failures,
    x_inverse_node_values,
)

__all__ = [
    "CMatrix",
    "Certificate",
    "DMatrix",
    "F_poly",
    "F_poly_determinant",
    "add_column_check",
    "binomial_shift_expand",
    "binomial_shift_product",
    "build_c_matrix",
    "build_d_matrix",
    "c_entry",
    "check_f_uni",
    "compare_routes",
    "cross_check_F",
    "d_entry_hopf",
    "d_entry_okounkov",
    "diag_checked",
    "diag_value",
    "divisibility_certificate",
    "divisibility_sweep",
    "f_at_q_power",
    "f_norm",
    "f_uni",
    "from_f_coeffs",
    "from_nonsymmetric",
    "gram_matrix",
    "homfly_coeffs",
    "homfly_stable",
    "hopf_norm",
    "identity_check",
    "interpolate_sym",
    "inv_eN_check",
    "inv_eN_series",
    "leading_term_check",
    "monomial_to_f",
    "mul_by_eN",
    "mul_by_eN_check",
    "newton_1d",
    "newton_orthogonality_check",
    "nonsymmetric_coeffs",
    "one_row_certificate",
    "one_row_coeffs",
    "one_row_partial_expansion",
    "orthogonality_failures",
    "prefetch",
    "restrict_last_var",
    "restricted_expected",
    "restriction_check",
    "schur_coefficients",
    "stability_sweep",
    "stable_c_entry",
    "stable_c_failures",
    "staircase_schur",
    "vanishing_check",
    "x_inverse_node_values",
]
