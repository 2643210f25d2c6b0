use serde::Serialize;

use super::{FusionData, FusionError};
use crate::chartab::{fusion_coefficients, CharTableError, CharacterTableModP};
use crate::roots::RootOfUnity;

/// Basis sizes up to this get a full associativity check.
pub const ASSOC_CHECK_SIZE: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Coefficients {
    Z,
    Z2,
}

/// A ring with a distinguished basis and structure constants
/// `b_i b_j = sum_k constants[i][j][k] b_k`. Index `unit` is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasedRing {
    pub coefficients: Coefficients,
    pub labels: Vec<String>,
    pub unit: usize,
    pub constants: Vec<Vec<Vec<u32>>>,
    pub commutative: bool,
}

impl BasedRing {
    pub fn new(
        coefficients: Coefficients,
        labels: Vec<String>,
        unit: usize,
        mut constants: Vec<Vec<Vec<u32>>>,
    ) -> Result<Self, FusionError> {
        let m = labels.len();
        if constants.len() != m || constants.iter().any(|a| a.len() != m || a.iter().any(|b| b.len() != m)) {
            return Err(FusionError::InvalidData("structure constants have the wrong shape".into()));
        }
        if coefficients == Coefficients::Z2 {
            constants.iter_mut().flatten().flatten().for_each(|c| *c %= 2);
        }
        let ring = Self {
            commutative: (0..m).all(|i| (0..m).all(|j| constants[i][j] == constants[j][i])),
            coefficients,
            labels,
            unit,
            constants,
        };
        for j in 0..m {
            for k in 0..m {
                let e = u32::from(j == k);
                if ring.constants[unit][j][k] != e || ring.constants[j][unit][k] != e {
                    return Err(FusionError::InvalidData("unit law fails".into()));
                }
            }
        }
        if m <= ASSOC_CHECK_SIZE && !ring.is_associative() {
            return Err(FusionError::NotAssociative);
        }
        Ok(ring)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    fn reduce(&self, x: u64) -> u64 {
        match self.coefficients {
            Coefficients::Z => x,
            Coefficients::Z2 => x % 2,
        }
    }

    /// `(b_i b_j) b_k = b_i (b_j b_k)` for all basis triples.
    pub fn is_associative(&self) -> bool {
        let m = self.len();
        let c = &self.constants;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let left: u64 = (0..m).map(|t| c[i][j][t] as u64 * c[t][k][l] as u64).sum();
                        let right: u64 = (0..m).map(|t| c[j][k][t] as u64 * c[i][t][l] as u64).sum();
                        if self.reduce(left) != self.reduce(right) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Product of two basis elements as a coefficient vector.
    pub fn product(&self, i: usize, j: usize) -> &[u32] {
        &self.constants[i][j]
    }
}

/// `{i : i = i*, d_i = 1}`.
pub fn witt_basis(fd: &FusionData) -> Vec<usize> {
    (0..fd.rank()).filter(|&i| fd.dual[i] == i && fd.d[i].is_one()).collect()
}

/// The Witt ring as a based ring over `Z2`.
///
/// When the braiding is not symmetric only the additive group is known:
/// `ring` is `None` and `group_only` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WittRing {
    pub basis: Vec<usize>,
    pub d: Vec<RootOfUnity>,
    pub ring: Option<BasedRing>,
    pub group_only: bool,
}

impl WittRing {
    /// Dimension over `Z2`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// Basis from [`witt_basis`]; product `x·y = p(xy)`, the fusion product
/// mod 2 with non-basis components discarded.
pub fn witt_ring(fd: &FusionData) -> Result<WittRing, FusionError> {
    let basis = witt_basis(fd);
    assert!(basis.first() == Some(&fd.unit), "d of the unit is 1");
    let d = basis.iter().map(|&i| fd.d[i]).collect();
    if !fd.symmetric {
        return Ok(WittRing {
            basis,
            d,
            ring: None,
            group_only: true,
        });
    }
    let constants = basis
        .iter()
        .map(|&a| {
            basis
                .iter()
                .map(|&b| basis.iter().map(|&c| fd.fusion[a][b][c] % 2).collect())
                .collect()
        })
        .collect();
    let labels = basis.iter().map(|&i| fd.labels[i].clone()).collect();
    let ring = BasedRing::new(Coefficients::Z2, labels, 0, constants)?;
    Ok(WittRing {
        basis,
        d,
        ring: Some(ring),
        group_only: false,
    })
}

/// `K0(Rep G)` over `Z`, basis the irreducibles.
pub fn grothendieck_ring(t: &CharacterTableModP) -> Result<BasedRing, FusionError> {
    let constants = fusion_coefficients(t)?;
    let labels = (1..=t.len()).map(|i| format!("χ{i}")).collect();
    BasedRing::new(Coefficients::Z, labels, 0, constants)
}

impl From<CharTableError> for FusionError {
    fn from(e: CharTableError) -> Self {
        FusionError::CharTable(e)
    }
}
