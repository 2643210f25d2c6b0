//! Fusion data, based rings and Witt rings.
//!
//! For a symmetric fusion category the Witt ring has a `Z2`-basis of the
//! simples `X_i` with `i = i*` and `d_i = 1`, and the product of two basis
//! elements is their fusion product reduced mod 2 and projected back onto
//! the span of the basis.

mod based;
mod double;
mod fusion;
mod iso;

use thiserror::Error;

pub use crate::roots::RootOfUnity;
pub use based::{grothendieck_ring, witt_basis, witt_ring, BasedRing, Coefficients, WittRing, ASSOC_CHECK_SIZE};
pub use double::{double_abelian_witt, double_witt_of_group, DoubleWitt};
pub use fusion::{
    rep_g_from_table, rep_g_fusion_data, rep_g_u_fusion_data, vec_z2_fixture, FusionData, VecZ2Braiding,
};
pub use iso::{based_ring_isomorphism, fingerprint, FINGERPRINT_SIZE};

use crate::chartab::CharTableError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("invalid fusion data: {0}")]
    InvalidData(String),
    #[error("unknown fixture {0:?}; expected b0, b1, bi or b-i")]
    UnknownFixture(String),
    #[error("u must be a central element of order at most 2")]
    NotCentralInvolution,
    #[error("Witt rings of doubles of nonabelian groups are out of scope")]
    NonabelianDouble,
    #[error("structure constants are not associative")]
    NotAssociative,
    #[error(transparent)]
    CharTable(CharTableError),
}
