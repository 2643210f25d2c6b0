use super::{CharTableError, CharacterTableModP};

/// Second Frobenius–Schur indicator `|G|^-1 sum_g χ_i(g^2)`.
pub fn fs_indicator(t: &CharacterTableModP, i: usize) -> Result<i8, CharTableError> {
    let f = t.field();
    let c = &t.classes;
    let s = (0..c.len()).fold(0, |acc, k| {
        f.add(acc, f.mul(c.sizes[k] as u64, t.values[i][c.power(k, 2)]))
    });
    match f.signed(f.div(s, t.order as u64 % t.p)) {
        v @ -1..=1 => Ok(v as i8),
        _ => Err(CharTableError::BadIndicator(i)),
    }
}

pub fn fs_indicators(t: &CharacterTableModP) -> Result<Vec<i8>, CharTableError> {
    (0..t.len()).map(|i| fs_indicator(t, i)).collect()
}

/// `i -> i*` with `χ_{i*}(g) = χ_i(g^-1)`.
pub fn dual_involution(t: &CharacterTableModP) -> Result<Vec<usize>, CharTableError> {
    let inv = &t.classes.inverse_class;
    (0..t.len())
        .map(|i| {
            let conj: Vec<u64> = inv.iter().map(|&k| t.values[i][k]).collect();
            t.values.iter().position(|row| *row == conj).ok_or(CharTableError::NoDual(i))
        })
        .collect()
}

/// `N[i][j][k]`: multiplicity of irreducible `k` in `χ_i ⊗ χ_j`.
pub fn fusion_coefficients(t: &CharacterTableModP) -> Result<Vec<Vec<Vec<u32>>>, CharTableError> {
    let f = t.field();
    let c = &t.classes;
    let r = t.len();
    let n_inv = f.inv(t.order as u64 % t.p);
    let weighted: Vec<Vec<u64>> = t
        .values
        .iter()
        .map(|row| (0..c.len()).map(|k| f.mul(row[c.inverse_class[k]], c.sizes[k] as u64)).collect())
        .collect();
    let mut out = vec![vec![vec![0u32; r]; r]; r];
    for i in 0..r {
        for j in i..r {
            let prod: Vec<u64> = (0..c.len()).map(|k| f.mul(t.values[i][k], t.values[j][k])).collect();
            for k in 0..r {
                let s = prod
                    .iter()
                    .zip(&weighted[k])
                    .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                let v = f.mul(s, n_inv);
                if v >= t.p.div_ceil(2) {
                    return Err(CharTableError::BadLift { row: i, class: j });
                }
                out[i][j][k] = v as u32;
                out[j][i][k] = v as u32;
            }
        }
    }
    Ok(out)
}
