//! Invariant bundles, the rigidity screen, pair verdicts and corpus reports.
//!
//! Two groups are separated when any of the following differ: order,
//! Grothendieck ring, Witt ring, number of self-dual irreducibles, element
//! order statistics. Past that, the normal abelian subgroups of order `4^m`
//! carrying a skew-symmetric invariant form are compared by type; central
//! ones are left out of that comparison.

mod compare;
mod cor14;
mod report;

pub use compare::{compare_bundles, compare_pair, CandidateComparison, EqualityFlags, PairVerdict, Verdict, Witness};
pub use cor14::{cor14_screen, Candidate, RigidityEvidence};
pub use report::{screen_corpus, screen_corpus_with, CandidateLine, FileError, GroupLine, Report, ScreenOptions, Status, Summary};

use crate::chartab::{burnside_dixon, fs_indicators};
use crate::groups::{FiniteGroup, OrderProfile};
use crate::witt::{fingerprint, grothendieck_ring, rep_g_from_table, witt_ring, BasedRing, FusionError};
use crate::Error;

/// Everything the screen knows about one group.
#[derive(Debug, Clone)]
pub struct InvariantBundle {
    pub name: String,
    pub group: FiniteGroup,
    pub profile: OrderProfile,
    pub degrees: Vec<usize>,
    pub indicators: Vec<i8>,
    pub self_dual: usize,
    pub k0: BasedRing,
    pub witt: BasedRing,
    pub k0_fingerprint: Option<String>,
    pub witt_fingerprint: Option<String>,
    pub evidence: RigidityEvidence,
}

impl InvariantBundle {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn class_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn witt_rank(&self) -> usize {
        self.witt.len()
    }
}

pub fn invariant_bundle(g: &FiniteGroup) -> Result<InvariantBundle, Error> {
    let table = burnside_dixon(g)?;
    let fd = rep_g_from_table(&table)?;
    let witt = witt_ring(&fd)?
        .ring
        .ok_or_else(|| FusionError::InvalidData("Rep(G) must be symmetric".into()))?;
    let k0 = grothendieck_ring(&table)?;
    Ok(InvariantBundle {
        name: g.name().map_or_else(|| format!("G{}", g.order()), str::to_string),
        group: g.clone(),
        profile: g.order_profile(),
        degrees: table.degrees.clone(),
        indicators: fs_indicators(&table)?,
        self_dual: fd.self_dual_count(),
        k0_fingerprint: fingerprint(&k0),
        witt_fingerprint: fingerprint(&witt),
        k0,
        witt,
        evidence: cor14_screen(g),
    })
}
