//! Exact arithmetic: rationals, polynomials, truncated series, linear algebra
//! and projective predicates over the rationals.

pub mod linalg;
pub mod poly;
pub mod projective;
pub mod rational;
pub mod resultant;
pub mod series;
pub mod upoly;

pub use poly::Polynomial;
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use series::{MultiBranchElement, TruncatedSeries};
pub use upoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("incidence violated: {0}")]
    Incidence(String),
    #[error("degenerate conic (zero determinant)")]
    DegenerateConic,
    #[error("no value bound for variable {0:?}")]
    MissingBinding(String),
    #[error("truncation orders differ: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("branch counts differ: {left} vs {right}")]
    BranchCountMismatch { left: usize, right: usize },
    #[error("zero vector is not a projective point")]
    ZeroVector,
    #[error("parse error: {0}")]
    Parse(String),
}
