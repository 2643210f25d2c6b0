use serde::Serialize;

use super::field::{charpoly, choose_prime, nullspace, roots, rref, Fp, Matrix};
use super::CharTableError;
use crate::groups::{ConjugacyClasses, FiniteGroup};

/// Irreducible characters as values in `F_p`.
///
/// Rows are irreducibles ordered by degree and then by value vector; row 0
/// is the trivial character. Columns follow the class order.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTableModP {
    pub p: u64,
    /// Smallest primitive root mod `p`.
    pub z: u64,
    pub order: usize,
    #[serde(skip)]
    pub classes: ConjugacyClasses,
    pub values: Vec<Vec<u64>>,
    pub degrees: Vec<usize>,
}

impl CharacterTableModP {
    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `a[i][j][k]`: number of pairs `(x, y)` in `C_i x C_j` with `xy = z_k`.
pub fn class_mult_coeffs(c: &ConjugacyClasses, g: &FiniteGroup) -> Vec<Vec<Vec<u32>>> {
    let r = c.len();
    let mut a = vec![vec![vec![0u32; r]; r]; r];
    for j in 0..r {
        let m = class_matrix(c, g, j);
        for i in 0..r {
            for k in 0..r {
                a[i][j][k] = m[i][k];
            }
        }
    }
    a
}

/// `M_j[i][k] = a[i][j][k]`, counted as `sum over y in C_j of [z_k y^-1 in C_i]`.
fn class_matrix(c: &ConjugacyClasses, g: &FiniteGroup, j: usize) -> Vec<Vec<u32>> {
    let r = c.len();
    let mut m = vec![vec![0u32; r]; r];
    for k in 0..r {
        let z = c.representatives[k];
        for &y in &c.members[j] {
            m[c.class_of[g.mul(z, g.inv(y))]][k] += 1;
        }
    }
    m
}

/// Splits a common eigenspace (RREF rows `basis` with `pivots`) by the
/// eigenvalues of `m` restricted to it.
fn split(f: Fp, m: &Matrix, basis: &Matrix, pivots: &[usize]) -> Result<Vec<(Matrix, Vec<usize>)>, CharTableError> {
    let d = basis.len();
    // image of each basis vector, read off at the pivots
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..m.len())
                .map(|i| m[i].iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y))))
                .collect()
        })
        .collect();
    // x[t][s]: coordinate t of M b_s
    let x: Matrix = (0..d).map(|t| (0..d).map(|s| images[s][pivots[t]]).collect()).collect();
    let lambdas = roots(f, &charpoly(f, &x));
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in lambdas {
        let shifted: Matrix = (0..d)
            .map(|t| (0..d).map(|s| if t == s { f.sub(x[t][s], lambda) } else { x[t][s] }).collect())
            .collect();
        let coords = nullspace(f, &shifted);
        total += coords.len();
        let mut vecs: Matrix = coords
            .iter()
            .map(|c| {
                (0..m.len())
                    .map(|i| (0..d).fold(0, |acc, s| f.add(acc, f.mul(c[s], basis[s][i]))))
                    .collect()
            })
            .collect();
        let piv = rref(f, &mut vecs);
        out.push((vecs, piv));
    }
    if total != d {
        return Err(CharTableError::NotDiagonalizable);
    }
    Ok(out)
}

/// Character table mod `p` by simultaneous diagonalization of the class
/// matrices.
pub fn burnside_dixon(g: &FiniteGroup) -> Result<CharacterTableModP, CharTableError> {
    let n = g.order();
    let classes = ConjugacyClasses::new(g);
    let r = classes.len();
    let p = choose_prime(classes.exponent, n).ok_or(CharTableError::NoPrime)?;
    let f = Fp::new(p);
    let identity: Matrix = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces: Vec<(Matrix, Vec<usize>)> = vec![(identity, (0..r).collect())];
    for j in 1..r {
        if spaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let m: Matrix = class_matrix(&classes, g, j)
            .into_iter()
            .map(|row| row.into_iter().map(u64::from).collect())
            .collect();
        let mut next = Vec::with_capacity(spaces.len());
        for (basis, pivots) in spaces {
            if basis.len() == 1 {
                next.push((basis, pivots));
            } else {
                next.extend(split(f, &m, &basis, &pivots)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(CharTableError::NotDiagonalizable);
    }
    let mut rows: Vec<(usize, Vec<u64>)> = Vec::with_capacity(r);
    for (basis, _) in spaces {
        let w = &basis[0];
        if w[0] == 0 {
            return Err(CharTableError::NotDiagonalizable);
        }
        let w0 = f.inv(w[0]);
        let omega: Vec<u64> = w.iter().map(|&x| f.mul(x, w0)).collect();
        let s = (0..r).fold(0, |acc, i| {
            let t = f.mul(omega[i], omega[classes.inverse_class[i]]);
            f.add(acc, f.div(t, classes.sizes[i] as u64))
        });
        if s == 0 {
            return Err(CharTableError::BadDegree);
        }
        let d2 = f.div(n as u64 % p, s) as usize;
        let d = (1..).take_while(|d| d * d <= n).find(|d| d * d == d2).ok_or(CharTableError::BadDegree)?;
        let values = (0..r)
            .map(|i| f.div(f.mul(omega[i], d as u64), classes.sizes[i] as u64))
            .collect();
        rows.push((d, values));
    }
    rows.sort();
    let degrees: Vec<usize> = rows.iter().map(|(d, _)| *d).collect();
    if degrees.iter().map(|d| d * d).sum::<usize>() != n || degrees.iter().any(|d| !n.is_multiple_of(*d)) {
        return Err(CharTableError::BadDegree);
    }
    Ok(CharacterTableModP {
        p,
        z: f.primitive_root(),
        order: n,
        classes,
        values: rows.into_iter().map(|(_, v)| v).collect(),
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d8() -> FiniteGroup {
        let z4 = FiniteGroup::cyclic(4);
        let inv: Vec<usize> = (0..4).map(|x| (4 - x) % 4).collect();
        FiniteGroup::semidirect_product(&z4, &FiniteGroup::cyclic(2), &[(0..4).collect(), inv]).unwrap()
    }

    #[test]
    fn coefficient_identities() {
        let g = d8();
        let c = ConjugacyClasses::new(&g);
        let a = class_mult_coeffs(&c, &g);
        let r = c.len();
        for j in 0..r {
            for k in 0..r {
                assert_eq!(a[0][j][k], u32::from(j == k));
            }
        }
        for i in 0..r {
            for j in 0..r {
                let total: usize = (0..r).map(|k| a[i][j][k] as usize * c.sizes[k]).sum();
                assert_eq!(total, c.sizes[i] * c.sizes[j]);
            }
        }
        // independent of the representative: recount with the largest member
        for k in 0..r {
            let z = *c.members[k].last().unwrap();
            for i in 0..r {
                for j in 0..r {
                    let count = c.members[i]
                        .iter()
                        .filter(|&&x| c.class_of[g.mul(g.inv(x), z)] == j)
                        .count();
                    assert_eq!(count as u32, a[i][j][k]);
                }
            }
        }
    }

    #[test]
    fn z2_coefficients() {
        let g = FiniteGroup::cyclic(2);
        let c = ConjugacyClasses::new(&g);
        assert_eq!(class_mult_coeffs(&c, &g)[1][1][0], 1);
    }

    #[test]
    fn degrees_of_small_groups() {
        assert_eq!(burnside_dixon(&FiniteGroup::cyclic(2)).unwrap().degrees, vec![1, 1]);
        assert_eq!(burnside_dixon(&d8()).unwrap().degrees, vec![1, 1, 1, 1, 2]);
        assert_eq!(burnside_dixon(&FiniteGroup::trivial()).unwrap().degrees, vec![1]);
        let z3 = FiniteGroup::cyclic(3);
        let s3 = FiniteGroup::semidirect_product(&z3, &FiniteGroup::cyclic(2), &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        assert_eq!(burnside_dixon(&s3).unwrap().degrees, vec![1, 1, 2]);
    }

    #[test]
    fn orthogonality() {
        let g = d8();
        let t = burnside_dixon(&g).unwrap();
        let f = t.field();
        let c = &t.classes;
        for i in 0..t.len() {
            assert_eq!(t.values[i][0], t.degrees[i] as u64);
            for j in 0..t.len() {
                let s = (0..c.len()).fold(0, |acc, k| {
                    let v = f.mul(t.values[i][k], t.values[j][c.inverse_class[k]]);
                    f.add(acc, f.mul(v, c.sizes[k] as u64))
                });
                assert_eq!(s, if i == j { 8 } else { 0 });
            }
        }
    }
}
