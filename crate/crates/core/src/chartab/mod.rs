//! Exact character tables.
//!
//! Values are first computed in a prime field `F_p` with `p ≡ 1 (mod e)`,
//! `e` the group exponent, by splitting the common eigenspaces of the class
//! matrices. They are then lifted to sums of roots of unity.

mod dixon;
pub mod field;
mod indicators;
mod lift;

use thiserror::Error;

pub use dixon::{burnside_dixon, class_mult_coeffs, CharacterTableModP};
pub use indicators::{dual_involution, fs_indicator, fs_indicators, fusion_coefficients};
pub use lift::{lift_to_cyclotomic, CharacterTable, CyclotomicValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharTableError {
    #[error("no suitable prime below 2^31")]
    NoPrime,
    #[error("class matrices could not be simultaneously diagonalized")]
    NotDiagonalizable,
    #[error("eigenvector does not give an integral degree")]
    BadDegree,
    #[error("lifted value out of range at row {row}, column {class}")]
    BadLift { row: usize, class: usize },
    #[error("Frobenius-Schur sum of irreducible {0} is not 0 or ±1")]
    BadIndicator(usize),
    #[error("irreducible {0} has no dual in the table")]
    NoDual(usize),
}
