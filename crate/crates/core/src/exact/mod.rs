//! Exact rational linear algebra: matrices over `BigRational`, integer
//! characteristic polynomials, and the matrix predicates (regularity,
//! orthogonality, level, decomposability) used by the switching code.

mod charpoly;
mod matrix;
mod poly;
mod predicates;

pub use charpoly::{charpoly, charpoly_berkowitz, charpoly_integer};
pub use matrix::{RatMatrix, ScaledMatrix};
pub use poly::IntPolynomial;
pub use predicates::{
    decomposition_blocks, is_decomposable, is_orthogonal, is_regular_orthogonal, level,
};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds the rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry ({row}, {col}) is not an integer")]
    NonIntegral { row: usize, col: usize },
}
