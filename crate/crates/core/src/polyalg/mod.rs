//! Exact polynomial algebra over the rationals.

pub mod fitting;
pub mod groebner;
pub mod ideal;
pub mod laurent;
pub mod linear;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod snf;

pub use fitting::{fitting_ideal, fitting_ideal_poly, minors_ideal, minors_ideal_poly};
pub use groebner::{groebner_basis, normal_form, Budget};
pub use ideal::{union_of_subspaces, Ideal};
pub use laurent::LaurentPoly;
pub use linear::LinearSubspace;
pub use matrix::{minors, LaurentMatrix, Matrix, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use snf::{smith_normal_form, Snf};

pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Default variable names `prefix1 .. prefixn`.
pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
