//! Exact arithmetic kernel.
//!
//! Coefficient atoms are arbitrary-precision rationals
//! ([`num_rational::BigRational`]); on top of them sit the radical extension
//! ring [`Radical`] (ℚ-linear combinations of √r for squarefree r), dense
//! polynomials [`HPoly`] in the deformation parameter h, and dense matrices
//! [`PolyMatrix`] over those polynomials. All four are kept in a canonical
//! normal form so that structural equality coincides with mathematical
//! equality.

pub mod halfint;
pub mod hpoly;
pub mod matrix;
pub mod radical;
pub mod rational;

pub use halfint::{HalfInt, ParseHalfIntError};
pub use hpoly::HPoly;
pub use matrix::PolyMatrix;
pub use radical::{squarefree_decompose, Radical};
pub use rational::{factorial, rat, rat_int, BigRational};

use thiserror::Error;

/// Errors raised by the kernel operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("expected a positive integer, got {0}")]
    NonPositive(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not unipotent upper triangular: offending entry at ({row}, {col})")]
    NotUnipotent { row: usize, col: usize },
    #[error("matrix of dimension {dim} is not nilpotent")]
    NotNilpotent { dim: usize },
    #[error("cannot take a square root of the negative value {0}")]
    NegativeRadicand(String),
}
