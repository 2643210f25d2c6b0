//! Cayley-table groups and the structure computed from them.

mod abelian;
mod classes;
mod deform;
mod group;
mod isomorphism;
mod quotient;
mod subgroups;

use thiserror::Error;

pub use abelian::{abelian_invariants, characters_of_abelian, AbelianStructure, DualGroup};
pub use classes::ConjugacyClasses;
pub use deform::deform_by_cocycle;
pub use group::{FiniteGroup, OrderProfile, FULL_CHECK_ORDER, MAX_ORDER};
pub use isomorphism::{are_isomorphic, Distinction, IsoOutcome};
pub use quotient::{derived_subgroup, Quotient};
pub use subgroups::{normal_closure, normal_subgroups, SubgroupSet};


#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator {index} is not a permutation of its degree")]
    NotAPermutation { index: usize },
    #[error("group order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("multiplication is not associative at ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("bad action: {0}")]
    BadAction(String),
    #[error("element set is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not abelian")]
    NotAbelian,
    #[error("internal error: {0}")]
    Internal(String),
}
