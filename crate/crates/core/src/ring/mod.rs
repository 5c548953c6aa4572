//! The polynomial ring `F[x_{n×n}]`, the ideal `I_n` and its quotient.

mod basis;
mod ideal;
mod marching;
mod membership;
mod monomial;
mod normal_form;
mod polynomial;
mod text;

pub use basis::{evaluation_determinant, evaluation_matrix, hilbert_series, shadow_monomial, standard_monomial_basis};
pub use ideal::{
    column_sum, ideal_generators, injection_sum_a, injection_sum_b, linear_generators, point_ideal_generators, row_sum,
};
pub use marching::{marching_rewrite, MarchingAxis, MarchingRewrite};
pub use membership::ideal_membership;
pub use monomial::{compare_variables, toeplitz_compare, variable_key, variables_descending, GridMonomial};
pub use normal_form::{is_shadow_monomial, normal_form, Reducer};
pub use polynomial::Polynomial;
pub use text::{parse_polynomial, parse_subset_pair, polynomial_from_json, polynomial_to_json, JsonTerm};
