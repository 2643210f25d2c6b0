use serde::Serialize;

use super::FusionError;
use crate::groups::{abelian_invariants, characters_of_abelian, AbelianStructure, FiniteGroup, SubgroupSet};

/// Simples `(g, ψ)` of the double of an abelian group that are self-dual
/// with symmetric self-pairing, i.e. `g^2 = 1`, `ψ^2 = 1` and `ψ(g) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleWitt {
    pub factors: Vec<usize>,
    /// `(coordinates of g, exponent vector of ψ)`.
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    /// Rank of the additive Witt group over `Z2`.
    pub rank: usize,
    /// The double's braiding is not symmetric, so only the group is given.
    pub group_only: bool,
}

pub fn double_abelian_witt(a: &AbelianStructure) -> DoubleWitt {
    let dual = characters_of_abelian(a);
    let involutive = |v: &[usize]| a.scale(v, 2).iter().all(|&x| x == 0);
    let mut pairs = Vec::new();
    for g in a.all_coordinates().filter(|g| involutive(g)) {
        for psi in dual.characters.iter().filter(|p| involutive(p)) {
            if dual.evaluate(psi, &g).is_one() {
                pairs.push((g.clone(), psi.clone()));
            }
        }
    }
    DoubleWitt {
        factors: a.factors.clone(),
        rank: pairs.len(),
        pairs,
        group_only: true,
    }
}

/// [`double_abelian_witt`] for a whole group; nonabelian groups are out of
/// scope.
pub fn double_witt_of_group(g: &FiniteGroup) -> Result<DoubleWitt, FusionError> {
    if !g.is_abelian() {
        return Err(FusionError::NonabelianDouble);
    }
    let whole = SubgroupSet::generated(g, g.generators());
    let a = abelian_invariants(g, &whole).map_err(|e| FusionError::InvalidData(e.to_string()))?;
    Ok(double_abelian_witt(&a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        let rank = |g: FiniteGroup| double_witt_of_group(&g).unwrap().rank;
        assert_eq!(rank(FiniteGroup::cyclic(2)), 3);
        assert_eq!(rank(FiniteGroup::cyclic(3)), 1);
        assert_eq!(rank(FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2))), 10);
        assert_eq!(rank(FiniteGroup::trivial()), 1);
    }

    #[test]
    fn nonabelian_rejected() {
        let z3 = FiniteGroup::cyclic(3);
        let s3 = FiniteGroup::semidirect_product(&z3, &FiniteGroup::cyclic(2), &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        assert_eq!(double_witt_of_group(&s3), Err(FusionError::NonabelianDouble));
    }
}
