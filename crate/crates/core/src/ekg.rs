//! Two-cocycles of a quotient `Q = G/A` with values in a normal abelian
//! subgroup `A`, and the order-64 Izumi–Kosaki pair.
//!
//! `A` is written additively through its coordinates (see
//! [`AbelianStructure`]). `Q` acts on `A` by `q·a = s(q) a s(q)^-1` for the
//! chosen section `s`, and a table `b` is a cocycle when
//! `p·b(q,r) + b(p,qr) = b(pq,r) + b(p,q)` and `b(1,q) = b(q,1) = 0`.

use thiserror::Error;

use crate::groups::{
    abelian_invariants, deform_by_cocycle, AbelianStructure, FiniteGroup, GroupError, Quotient, SubgroupSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("cocycle is not normalized at ({p}, {q})")]
    NotNormalized { p: usize, q: usize },
    #[error("cocycle identity fails at ({p}, {q}, {r})")]
    NotACocycle { p: usize, q: usize, r: usize },
    #[error("cocycle data does not match the group: {0}")]
    Mismatch(String),
}

/// Extension data `A -> G -> Q` plus a table `b: Q x Q -> A`.
#[derive(Debug, Clone)]
pub struct CocycleData {
    pub quotient: FiniteGroup,
    /// `G -> Q`.
    pub projection: Vec<usize>,
    /// `Q -> G`, with `section[0] = 0`.
    pub section: Vec<usize>,
    pub subgroup: SubgroupSet,
    pub structure: AbelianStructure,
    /// `action[q][j]`: coordinates of `q` applied to the `j`-th generator of `A`.
    pub action: Vec<Vec<Vec<usize>>>,
    /// `values[p][q]`: coordinates of `b(p, q)`.
    pub values: Vec<Vec<Vec<usize>>>,
}

impl CocycleData {
    /// The zero cocycle for a normal abelian subgroup of `g`.
    ///
    /// Cosets are represented by their minimal element.
    pub fn trivial(g: &FiniteGroup, a: &SubgroupSet) -> Result<Self, CocycleError> {
        let structure = abelian_invariants(g, a)?;
        let Quotient {
            group: quotient,
            projection,
            section,
        } = Quotient::new(g, a)?;
        let action = section
            .iter()
            .map(|&s| {
                structure
                    .generators
                    .iter()
                    .map(|&x| {
                        let y = g.mul(g.mul(s, x), g.inv(s));
                        structure.coordinates(y).expect("A is normal").to_vec()
                    })
                    .collect()
            })
            .collect();
        let zero = vec![0; structure.factors.len()];
        let m = quotient.order();
        Ok(Self {
            values: vec![vec![zero; m]; m],
            quotient,
            projection,
            section,
            subgroup: a.clone(),
            structure,
            action,
        })
    }

    /// Replaces the table; the shape must be `|Q| x |Q|`.
    pub fn with_values(mut self, values: Vec<Vec<Vec<usize>>>) -> Result<Self, CocycleError> {
        let m = self.quotient.order();
        let k = self.structure.factors.len();
        if values.len() != m || values.iter().any(|row| row.len() != m || row.iter().any(|v| v.len() != k)) {
            return Err(CocycleError::Mismatch("table has the wrong shape".into()));
        }
        self.values = values;
        Ok(self)
    }

    pub fn value(&self, p: usize, q: usize) -> &[usize] {
        &self.values[p][q]
    }

    /// `b(p, q)` as an element of `G`.
    pub fn value_element(&self, p: usize, q: usize) -> usize {
        self.structure.element(&self.values[p][q])
    }

    /// `q·a` in coordinates.
    pub fn act(&self, q: usize, a: &[usize]) -> Vec<usize> {
        let mut out = vec![0; a.len()];
        for (j, &c) in a.iter().enumerate() {
            out = self.structure.add(&out, &self.structure.scale(&self.action[q][j], c));
        }
        out
    }

    /// `b + δc` for a 1-cochain `c: Q -> A`, where
    /// `(δc)(p, q) = p·c(q) - c(pq) + c(p)`.
    pub fn perturbed_by_coboundary(&self, c: &[Vec<usize>]) -> Result<Self, CocycleError> {
        let m = self.quotient.order();
        if c.len() != m {
            return Err(CocycleError::Mismatch("cochain has the wrong length".into()));
        }
        let a = &self.structure;
        let values = (0..m)
            .map(|p| {
                (0..m)
                    .map(|q| {
                        let pq = self.quotient.mul(p, q);
                        let d = a.add(&a.add(&self.act(p, &c[q]), &a.neg(&c[pq])), &c[p]);
                        a.add(&self.values[p][q], &d)
                    })
                    .collect()
            })
            .collect();
        self.clone().with_values(values)
    }
}

/// Checks normalization and the cocycle identity over all triples,
/// reporting the first failure.
pub fn verify_cocycle(c: &CocycleData) -> Result<(), CocycleError> {
    let q = &c.quotient;
    let a = &c.structure;
    for p in 0..q.order() {
        for (x, y) in [(0, p), (p, 0)] {
            if c.value(x, y).iter().any(|&v| v != 0) {
                return Err(CocycleError::NotNormalized { p: x, q: y });
            }
        }
    }
    for p in 0..q.order() {
        for s in 0..q.order() {
            let ps = q.mul(p, s);
            for r in 0..q.order() {
                let lhs = a.add(&c.act(p, c.value(s, r)), c.value(p, q.mul(s, r)));
                let rhs = a.add(c.value(ps, r), c.value(p, s));
                if lhs != rhs {
                    return Err(CocycleError::NotACocycle { p, q: s, r });
                }
            }
        }
    }
    Ok(())
}

/// The order-64 Izumi–Kosaki pair.
#[derive(Debug, Clone)]
pub struct IzumiKosaki {
    pub group: FiniteGroup,
    pub cocycle: CocycleData,
    pub deformed: FiniteGroup,
}

/// `Q = <q1, q2> = Z2 x Z2` acting on `A = <a1, a2> = Z4 x Z4`.
///
/// `q_i` fixes `a_i` and sends `a_{i+1}` to `a_i^2 a_{i+1}` (indices mod 2).
/// The cocycle is `b(q1^t1 q2^t2, q1^r1 q2^r2) = a1^(2 t1 r1) a2^(2 t2 r2)`,
/// with `t_i, r_i` in `{0, 1}`.
pub fn izumi_kosaki() -> Result<IzumiKosaki, CocycleError> {
    let z4 = FiniteGroup::cyclic(4);
    let a = z4.direct_product(&z4);
    let z2 = FiniteGroup::cyclic(2);
    let q = z2.direct_product(&z2);
    // A: (x, y) = a1^x a2^y at index 4x + y. Q: q1^t q2^u at index 2t + u.
    let act = |t: usize, u: usize| -> Vec<usize> {
        (0..16)
            .map(|i| {
                let (x, y) = (i / 4, i % 4);
                let (x, y) = if t == 1 { ((x + 2 * y) % 4, y) } else { (x, y) };
                let (x, y) = if u == 1 { (x, (y + 2 * x) % 4) } else { (x, y) };
                4 * x + y
            })
            .collect()
    };
    let action: Vec<Vec<usize>> = (0..4).map(|k| act(k / 2, k % 2)).collect();
    let group = FiniteGroup::semidirect_product(&a, &q, &action)?.with_name("G3");
    let sub = SubgroupSet::generated(&group, &[4, 1]);
    let cocycle = CocycleData::trivial(&group, &sub)?;
    // Coordinates of a1 and a2 in the computed structure of A.
    let (a1, a2) = (
        cocycle.structure.coordinates(4).expect("a1 in A").to_vec(),
        cocycle.structure.coordinates(1).expect("a2 in A").to_vec(),
    );
    let st = &cocycle.structure;
    // Q elements of the quotient are numbered by minimal coset element;
    // the semidirect layout puts q1^t q2^u at 16 * (2t + u).
    let bits = |qi: usize| -> (usize, usize) {
        let k = cocycle.section[qi] / 16;
        (k / 2, k % 2)
    };
    let m = cocycle.quotient.order();
    let values = (0..m)
        .map(|p| {
            (0..m)
                .map(|r| {
                    let ((t1, t2), (r1, r2)) = (bits(p), bits(r));
                    st.add(&st.scale(&a1, 2 * t1 * r1), &st.scale(&a2, 2 * t2 * r2))
                })
                .collect()
        })
        .collect();
    let cocycle = cocycle.with_values(values)?;
    let deformed = deform_by_cocycle(&group, &sub, &cocycle)?.with_name("G3_b");
    Ok(IzumiKosaki {
        group,
        cocycle,
        deformed,
    })
}
