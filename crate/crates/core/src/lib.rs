//! Witt rings of representation categories of finite groups.
//!
//! The crate turns group descriptions (finite presentations or permutation
//! generators) into concrete Cayley tables, computes exact character tables
//! by the Burnside–Dixon method, and builds the Grothendieck ring and the
//! Witt ring of `Rep(G)`. These invariants, together with element-order
//! statistics and the normal abelian subgroups that could carry an
//! Etingof–Gelaki deformation, are used to certify that pairs of finite
//! groups are not isocategorical.
//!
//! Module map:
//!
//! * [`presentations`]: group file grammar and Todd–Coxeter coset enumeration.
//! * [`groups`]: Cayley-table groups, classes, subgroups, isomorphism, deformation.
//! * [`chartab`]: character tables mod p, cyclotomic lifts, Frobenius–Schur indicators.
//! * [`witt`]: fusion data, based rings, Witt rings, abelian Drinfeld doubles.
//! * [`ekg`]: 2-cocycle data and the order-64 Izumi–Kosaki pair.
//! * [`screen`]: invariant bundles, rigidity screen, pair verdicts, corpus reports.
//! * [`cli`]: the `wittlab` command-line front end.

#![allow(clippy::needless_range_loop)]

pub mod chartab;
pub mod cli;
pub mod ekg;
pub mod groups;
pub mod presentations;
pub mod screen;
pub mod witt;

mod error;
mod roots;

pub use error::Error;

pub use chartab::{CharacterTable, CharacterTableModP, CyclotomicValue};
pub use groups::{AbelianStructure, ConjugacyClasses, FiniteGroup, OrderProfile, SubgroupSet};
pub use presentations::{GroupFile, GroupSource, PermGenSet, Presentation};
pub use witt::{BasedRing, FusionData, RootOfUnity, WittRing};

/// Loads a group file from disk and realizes it as a [`FiniteGroup`].
pub fn load_group(path: &std::path::Path) -> Result<FiniteGroup, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file = presentations::parse_group_file(&text, &path.display().to_string())?;
    file.realize(presentations::DEFAULT_MAX_COSETS)
}
