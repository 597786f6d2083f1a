//! Exact rational arithmetic, bivariate polynomials in `α, t`, the f→h
//! substitution and the γ-basis.

mod gamma;
mod poly2;
mod rational;

use thiserror::Error;

pub use gamma::{gamma_expand, gamma_extract, gamma_extract_degree, GammaVector};
pub use poly2::{Exponent, Poly2, TermRecord};
pub use rational::{binomial, factorial, format_rational, is_integer, parse_rational, rat, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous of degree {expected}; offending terms {offending:?}")]
    Inhomogeneous { expected: u32, offending: Vec<Exponent> },
    #[error("expected degree {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("polynomial is not symmetric in α and t")]
    Asymmetric,
    #[error("γ-vector of degree {n} needs {expected} entries, got {found}")]
    GammaLength { n: u32, expected: usize, found: usize },
    #[error("γ-extraction left a nonzero residual {0}")]
    NonzeroResidual(String),
}
