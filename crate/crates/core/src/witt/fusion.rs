use std::str::FromStr;

use serde::Serialize;

use super::FusionError;
use crate::chartab::{burnside_dixon, dual_involution, fs_indicators, fusion_coefficients, CharacterTableModP};
use crate::groups::FiniteGroup;
use crate::roots::RootOfUnity;

/// Simple objects, duals, self-duality scalars and fusion rules of a
/// braided fusion category. Index 0 is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FusionData {
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// `d_i`; set to 1 on simples that are not self-dual.
    pub d: Vec<RootOfUnity>,
    /// `fusion[i][j][k]`: multiplicity of `X_k` in `X_i ⊗ X_j`.
    pub fusion: Vec<Vec<Vec<u32>>>,
    pub symmetric: bool,
    /// Degrees of the simples, when they come from a group.
    pub degrees: Option<Vec<usize>>,
}

impl FusionData {
    pub fn new(
        labels: Vec<String>,
        dual: Vec<usize>,
        d: Vec<RootOfUnity>,
        fusion: Vec<Vec<Vec<u32>>>,
        symmetric: bool,
    ) -> Result<Self, FusionError> {
        let r = labels.len();
        let bad = |msg: String| Err(FusionError::InvalidData(msg));
        if r == 0 || dual.len() != r || d.len() != r || fusion.len() != r {
            return bad("inconsistent sizes".into());
        }
        if fusion.iter().any(|a| a.len() != r || a.iter().any(|b| b.len() != r)) {
            return bad("fusion tensor is not r x r x r".into());
        }
        if dual[0] != 0 {
            return bad("the unit is not self-dual".into());
        }
        for i in 0..r {
            if dual[i] >= r || dual[dual[i]] != i {
                return bad(format!("duality is not an involution at {}", labels[i]));
            }
            for j in 0..r {
                if fusion[0][i][j] != u32::from(i == j) {
                    return bad("unit row is not the identity".into());
                }
                if fusion[i][j][0] != u32::from(j == dual[i]) {
                    return bad(format!("unit multiplicity in {} x {} disagrees with duality", labels[i], labels[j]));
                }
            }
            if symmetric && dual[i] == i && d[i].as_sign().is_none() {
                return bad(format!("self-dual {} has d = {} under a symmetric braiding", labels[i], d[i]));
            }
        }
        Ok(Self {
            labels,
            unit: 0,
            dual,
            d,
            fusion,
            symmetric,
            degrees: None,
        })
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// `d_i d_{i*} = 1`.
    pub fn is_weakly_symmetric(&self, i: usize) -> bool {
        (self.d[i] * self.d[self.dual[i]]).is_one()
    }

    pub fn self_dual_count(&self) -> usize {
        (0..self.rank()).filter(|&i| self.dual[i] == i).count()
    }
}

/// `Rep(G)` from a character table: `d_i` is the Frobenius–Schur indicator
/// on self-dual irreducibles.
pub fn rep_g_from_table(t: &CharacterTableModP) -> Result<FusionData, FusionError> {
    rep_with_twist(t, None)
}

pub fn rep_g_fusion_data(g: &FiniteGroup) -> Result<FusionData, FusionError> {
    rep_g_from_table(&burnside_dixon(g)?)
}

/// `Rep(G, u)` for a central involution `u`: `d_i = ν2(i) u_i`, where `u`
/// acts on the `i`-th irreducible by the scalar `u_i`.
pub fn rep_g_u_fusion_data(g: &FiniteGroup, u: usize) -> Result<FusionData, FusionError> {
    if u >= g.order() || !g.is_central(u) || g.mul(u, u) != 0 {
        return Err(FusionError::NotCentralInvolution);
    }
    rep_with_twist(&burnside_dixon(g)?, Some(u))
}

fn rep_with_twist(t: &CharacterTableModP, u: Option<usize>) -> Result<FusionData, FusionError> {
    let f = t.field();
    let r = t.len();
    let dual = dual_involution(t)?;
    let nu = fs_indicators(t)?;
    let fusion = fusion_coefficients(t)?;
    let mut d = Vec::with_capacity(r);
    for i in 0..r {
        let twist = match u {
            Some(u) => {
                let k = t.classes.class_of[u];
                let scalar = f.signed(f.div(t.values[i][k], t.degrees[i] as u64));
                match scalar {
                    1 => 1,
                    -1 => -1,
                    _ => return Err(FusionError::NotCentralInvolution),
                }
            }
            None => 1,
        };
        d.push(if dual[i] == i {
            RootOfUnity::sign(nu[i] as i32 * twist > 0)
        } else {
            RootOfUnity::ONE
        });
    }
    let labels = (1..=r).map(|i| format!("χ{i}")).collect();
    let mut fd = FusionData::new(labels, dual, d, fusion, true)?;
    fd.degrees = Some(t.degrees.clone());
    Ok(fd)
}

/// The four braidings on the pointed categories with simples `Z2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VecZ2Braiding {
    /// Trivial associator, braiding `+1`.
    B0,
    /// Trivial associator, braiding `(-1)^{|v||w|}`.
    B1,
    /// Nontrivial associator, braiding `i^{|v||w|}`.
    BI,
    /// Nontrivial associator, braiding `(-i)^{|v||w|}`.
    BMinusI,
}

impl FromStr for VecZ2Braiding {
    type Err = FusionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "b0" => Ok(Self::B0),
            "b1" => Ok(Self::B1),
            "bi" => Ok(Self::BI),
            "b-i" => Ok(Self::BMinusI),
            other => Err(FusionError::UnknownFixture(other.to_string())),
        }
    }
}

pub fn vec_z2_fixture(id: VecZ2Braiding) -> FusionData {
    let (d2, symmetric) = match id {
        VecZ2Braiding::B0 => (RootOfUnity::ONE, true),
        VecZ2Braiding::B1 => (RootOfUnity::MINUS_ONE, true),
        VecZ2Braiding::BI => (RootOfUnity::new(1, 4), false),
        VecZ2Braiding::BMinusI => (RootOfUnity::new(3, 4), false),
    };
    let fusion = (0..2)
        .map(|i| (0..2).map(|j| (0..2).map(|k| u32::from((i + j) % 2 == k)).collect()).collect())
        .collect();
    FusionData::new(
        vec!["1".into(), "g".into()],
        vec![0, 1],
        vec![RootOfUnity::ONE, d2],
        fusion,
        symmetric,
    )
    .expect("fixture data is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures() {
        let bi = vec_z2_fixture("bi".parse().unwrap());
        assert!(!bi.is_weakly_symmetric(1));
        assert!(bi.is_weakly_symmetric(0));
        let b1 = vec_z2_fixture(VecZ2Braiding::B1);
        assert!(b1.is_weakly_symmetric(1));
        assert!("b2".parse::<VecZ2Braiding>().is_err());
    }

    #[test]
    fn symmetric_self_dual_scalar_must_be_a_sign() {
        let fusion = vec![
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 0]],
        ];
        let err = FusionData::new(
            vec!["1".into(), "g".into()],
            vec![0, 1],
            vec![RootOfUnity::ONE, RootOfUnity::new(1, 4)],
            fusion,
            true,
        );
        assert!(matches!(err, Err(FusionError::InvalidData(_))));
    }

    #[test]
    fn rep_z2_u() {
        let g = FiniteGroup::cyclic(2);
        let plain = rep_g_fusion_data(&g).unwrap();
        assert_eq!(rep_g_u_fusion_data(&g, 0).unwrap(), plain);
        let twisted = rep_g_u_fusion_data(&g, 1).unwrap();
        assert_eq!(twisted.d, vec![RootOfUnity::ONE, RootOfUnity::MINUS_ONE]);
        assert_eq!(rep_g_u_fusion_data(&FiniteGroup::cyclic(4), 1), Err(FusionError::NotCentralInvolution));
    }
}
