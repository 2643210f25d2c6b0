use std::fmt;

use serde::Serialize;

use super::{CharTableError, CharacterTableModP};

/// `sum_k multiplicities[k] * ζ_order^k`, stored without canonical reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicValue {
    pub order: usize,
    pub multiplicities: Vec<u32>,
}

impl CyclotomicValue {
    /// Image in `F_p` under `ζ_order -> z^((p-1)/order)`.
    pub fn reduce(&self, p: u64, z: u64) -> u64 {
        let f = super::field::Fp::new(p);
        let theta = f.pow(z, (p - 1) / self.order as u64);
        let mut acc = 0;
        let mut power = 1;
        for &m in &self.multiplicities {
            acc = f.add(acc, f.mul(m as u64 % p, power));
            power = f.mul(power, theta);
        }
        acc
    }

    /// Complex value, for display and sanity checks.
    pub fn approx(&self) -> (f64, f64) {
        let step = std::f64::consts::TAU / self.order as f64;
        self.multiplicities.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, &m)| {
            let a = step * k as f64;
            (re + m as f64 * a.cos(), im + m as f64 * a.sin())
        })
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let (re, im) = self.approx();
        let r = re.round();
        ((re - r).abs() < 1e-6 && im.abs() < 1e-6).then_some(r as i64)
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.as_integer() {
            return write!(f, "{v}");
        }
        let mut first = true;
        for (k, &m) in self.multiplicities.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m > 1 {
                write!(f, "{m}*")?;
            }
            if k == 0 {
                write!(f, "1")?;
            } else {
                write!(f, "ζ{}^{}", self.order, k)?;
            }
        }
        Ok(())
    }
}

/// Exact character values over the integers of a cyclotomic field.
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub modp: CharacterTableModP,
    /// `values[i][k]`: value of irreducible `i` on class `k`.
    pub values: Vec<Vec<CyclotomicValue>>,
    pub exponent: usize,
}

impl CharacterTable {
    pub fn degrees(&self) -> &[usize] {
        &self.modp.degrees
    }
}

/// Recovers each value as a sum of roots of unity of the element order:
/// `μ_k = m^-1 sum_j χ(g^j) θ^(-jk)` in `F_p`, lifted into `[0, degree]`.
pub fn lift_to_cyclotomic(t: &CharacterTableModP) -> Result<CharacterTable, CharTableError> {
    let f = t.field();
    let c = &t.classes;
    let mut values = Vec::with_capacity(t.len());
    for (i, row) in t.values.iter().enumerate() {
        let deg = t.degrees[i];
        let mut out = Vec::with_capacity(c.len());
        for k in 0..c.len() {
            let m = c.element_orders[k];
            let theta_inv = f.inv(f.pow(t.z, (t.p - 1) / m as u64));
            let m_inv = f.inv(m as u64);
            let powers: Vec<u64> = (0..m).map(|j| row[c.power(k, j as i64)]).collect();
            let mut mults = Vec::with_capacity(m);
            for s in 0..m {
                let step = f.pow(theta_inv, s as u64);
                let mut acc = 0;
                let mut w = 1;
                for &v in &powers {
                    acc = f.add(acc, f.mul(v, w));
                    w = f.mul(w, step);
                }
                let mu = f.mul(acc, m_inv);
                if mu as usize > deg {
                    return Err(CharTableError::BadLift { row: i, class: k });
                }
                mults.push(mu as u32);
            }
            out.push(CyclotomicValue {
                order: m,
                multiplicities: mults,
            });
        }
        values.push(out);
    }
    Ok(CharacterTable {
        exponent: c.exponent,
        modp: t.clone(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::burnside_dixon;
    use crate::groups::FiniteGroup;

    #[test]
    fn cyclic_four() {
        let g = FiniteGroup::cyclic(4);
        let t = lift_to_cyclotomic(&burnside_dixon(&g).unwrap()).unwrap();
        // trivial row
        assert!(t.values[0].iter().all(|v| v.as_integer() == Some(1)));
        // some row sends the generator (class of element 1) to ζ4
        let k = t.modp.classes.class_of[1];
        let zeta4 = CyclotomicValue {
            order: 4,
            multiplicities: vec![0, 1, 0, 0],
        };
        assert!(t.values.iter().any(|row| row[k] == zeta4));
        for (i, row) in t.values.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(v.reduce(t.modp.p, t.modp.z), t.modp.values[i][k]);
            }
        }
    }

    #[test]
    fn display() {
        let v = CyclotomicValue {
            order: 8,
            multiplicities: vec![0, 1, 0, 0, 0, 0, 0, 1],
        };
        assert_eq!(v.to_string(), "ζ8^1 + ζ8^7");
        assert!((v.approx().0 - 2f64.sqrt()).abs() < 1e-9);
        let w = CyclotomicValue {
            order: 4,
            multiplicities: vec![0, 1, 0, 1],
        };
        assert_eq!(w.to_string(), "0");
    }
}
