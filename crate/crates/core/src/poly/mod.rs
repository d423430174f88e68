//! Exact multivariate polynomials over `Q` and `Q(i)`.

mod context;
mod field;
mod matrix;
mod monomial;
mod parse;
mod polynomial;
mod random;

pub use context::{ChartKind, Ctx, VariableContext};
pub use field::{int, rat, Field, Gaussian, Rational};
pub use matrix::{column_subsets, determinant, jacobian_matrix, maximal_minors, PolyMatrix};
pub use monomial::Monomial;
pub use parse::parse;
pub use polynomial::{CPoly, Polynomial};
pub use random::{monomials_up_to, random_linear_form, random_polynomial, COEFF_DEN, COEFF_NUM};

pub(crate) use polynomial::same_ctx;
