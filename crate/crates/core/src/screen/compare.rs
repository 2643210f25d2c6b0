use serde::Serialize;

use super::{invariant_bundle, InvariantBundle};
use crate::groups::{are_isomorphic, FiniteGroup};
use crate::witt::based_ring_isomorphism;
use crate::Error;

/// The invariant that separates two groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    Order,
    GrothendieckRing,
    WittRing,
    SelfDualCount,
    OrderProfile,
    /// The non-central candidate subgroups have no type in common.
    CandidateSubgroups,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Witness::Order => "order",
            Witness::GrothendieckRing => "Grothendieck ring",
            Witness::WittRing => "Witt ring",
            Witness::SelfDualCount => "self-dual count",
            Witness::OrderProfile => "order profile",
            Witness::CandidateSubgroups => "candidate subgroups",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "witness", rename_all = "kebab-case")]
pub enum Verdict {
    NotIsocategorical(Witness),
    Undecided,
}

impl Verdict {
    pub fn witness(&self) -> Option<Witness> {
        match self {
            Verdict::NotIsocategorical(w) => Some(*w),
            Verdict::Undecided => None,
        }
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Verdict::Undecided)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EqualityFlags {
    pub order: bool,
    pub k0: bool,
    pub witt: bool,
    pub self_dual: bool,
    pub profile: bool,
}

/// Types of the non-central candidates on each side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateComparison {
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
    /// Some central candidate was left out on at least one side.
    pub central_excluded: bool,
    /// Set when both lists are empty and the groups were tested for isomorphism.
    pub isomorphic: Option<bool>,
}

impl CandidateComparison {
    pub fn disjoint(&self) -> bool {
        !self.left.iter().any(|t| self.right.contains(t))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub left: String,
    pub right: String,
    pub equal: EqualityFlags,
    pub candidates: Option<CandidateComparison>,
    pub verdict: Verdict,
}

fn candidate_types(b: &InvariantBundle) -> Vec<Vec<usize>> {
    let mut t: Vec<Vec<usize>> = b.evidence.non_central().map(|c| c.factors().to_vec()).collect();
    t.sort();
    t
}

pub fn compare_bundles(a: &InvariantBundle, b: &InvariantBundle) -> PairVerdict {
    let order = a.order() == b.order();
    let equal = EqualityFlags {
        order,
        k0: order && based_ring_isomorphism(&a.k0, &b.k0).is_some(),
        witt: order && based_ring_isomorphism(&a.witt, &b.witt).is_some(),
        self_dual: a.self_dual == b.self_dual,
        profile: a.profile == b.profile,
    };
    let failed = [
        (equal.order, Witness::Order),
        (equal.k0, Witness::GrothendieckRing),
        (equal.witt, Witness::WittRing),
        (equal.self_dual, Witness::SelfDualCount),
        (equal.profile, Witness::OrderProfile),
    ]
    .into_iter()
    .find(|(ok, _)| !ok);
    let mut out = PairVerdict {
        left: a.name.clone(),
        right: b.name.clone(),
        equal,
        candidates: None,
        verdict: Verdict::Undecided,
    };
    if let Some((_, w)) = failed {
        out.verdict = Verdict::NotIsocategorical(w);
        return out;
    }
    let mut cmp = CandidateComparison {
        left: candidate_types(a),
        right: candidate_types(b),
        central_excluded: a.evidence.candidates.iter().chain(&b.evidence.candidates).any(|c| c.central),
        isomorphic: None,
    };
    if cmp.disjoint() {
        // Empty lists are vacuously disjoint; fall back to isomorphism.
        let separated = if cmp.left.is_empty() && cmp.right.is_empty() {
            let iso = are_isomorphic(&a.group, &b.group).is_isomorphic();
            cmp.isomorphic = Some(iso);
            !iso
        } else {
            true
        };
        if separated {
            out.verdict = Verdict::NotIsocategorical(Witness::CandidateSubgroups);
        }
    }
    out.candidates = Some(cmp);
    out
}

pub fn compare_pair(g: &FiniteGroup, h: &FiniteGroup) -> Result<PairVerdict, Error> {
    Ok(compare_bundles(&invariant_bundle(g)?, &invariant_bundle(h)?))
}
