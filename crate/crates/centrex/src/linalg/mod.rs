//! Exact linear algebra over the rationals.
//!
//! Everything downstream (ideals, chain complexes, reflectors) reduces to
//! row echelon computations on [`RatMatrix`], so this module keeps a small
//! trusted surface: scalars, dense matrices, canonical subspaces and
//! quotient maps with chosen linear sections.

mod matrix;
mod rational;
mod subspace;

pub use matrix::RatMatrix;
pub use rational::Rational;
pub use subspace::{QuotientMap, Subspace};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
    #[error("vector does not lie in the subspace")]
    NotInSubspace,
    #[error("linear system has no solution")]
    NoSolution,
}
