//! Small dense linear algebra on character bases.

use super::character::{coord_bit, Gf2Char, ZChar};

/// Rank of a list of `GF(2)` vectors.
pub fn gf2_rank(vectors: &[Gf2Char]) -> usize {
    let mut basis: Vec<u32> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut x = v.bits();
        for &b in &basis {
            // basis kept with distinct leading bits, sorted descending
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

pub fn gf2_is_basis(vectors: &[Gf2Char], n: usize) -> bool {
    vectors.len() == n && gf2_rank(vectors) == n
}

/// Dual basis `s_1..s_n` of `t_1..t_n` under `<s_j, t_i> = delta_ij`.
///
/// Returns `None` when the input is not a basis of `GF(2)^n`.
pub fn gf2_dual_basis(vectors: &[Gf2Char], n: usize) -> Option<Vec<Gf2Char>> {
    if vectors.len() != n {
        return None;
    }
    let mut rows: Vec<u32> = vectors.iter().map(|v| v.bits()).collect();
    let mut aug: Vec<u32> = (0..n).map(coord_bit).collect();
    for col in 0..n {
        let bit = coord_bit(col);
        let pivot = (col..n).find(|&r| rows[r] & bit != 0)?;
        rows.swap(col, pivot);
        aug.swap(col, pivot);
        for r in 0..n {
            if r != col && rows[r] & bit != 0 {
                rows[r] ^= rows[col];
                aug[r] ^= aug[col];
            }
        }
    }
    // aug now holds the rows of A^{-1}; s_j is its j-th column.
    let dual = (0..n)
        .map(|j| {
            let bits = (0..n)
                .filter(|&i| aug[i] & coord_bit(j) != 0)
                .fold(0u32, |acc, i| acc | coord_bit(i));
            Gf2Char::from_bits(bits).expect("column of an invertible matrix is nonzero")
        })
        .collect();
    Some(dual)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn int_det(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Determinant of the matrix whose rows are the given characters.
pub fn char_det(chars: &[&ZChar]) -> i128 {
    let rows: Vec<Vec<i64>> = chars.iter().map(|c| c.coords().to_vec()).collect();
    int_det(&rows)
}

/// Inverse of a unimodular integer matrix together with its determinant (±1).
///
/// Returns `None` unless the matrix is square with determinant ±1.
pub fn unimodular_inverse(rows: &[Vec<i64>]) -> Option<(i64, Vec<Vec<i64>>)> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return None;
    }
    let det = int_det(rows);
    if det != 1 && det != -1 {
        return None;
    }
    if n == 1 {
        return Some((det as i64, vec![vec![det as i64]]));
    }
    // inverse = adj / det = det * adj for det = ±1
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = rows
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != i)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let cof = int_det(&minor) * if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[i][j] = i64::try_from(cof * det).ok()?;
        }
    }
    Some((det as i64, inv))
}

/// Dual basis of a unimodular set of characters: `s_j` is the `j`-th column of
/// `A^{-1}` where `A` has the characters as rows. Also returns `det A`.
pub fn z_dual_basis(chars: &[&ZChar]) -> Option<(i64, Vec<ZChar>)> {
    let rows: Vec<Vec<i64>> = chars.iter().map(|c| c.coords().to_vec()).collect();
    let (det, inv) = unimodular_inverse(&rows)?;
    let n = rows.len();
    let dual = (0..n)
        .map(|j| ZChar::new((0..n).map(|i| inv[i][j]).collect()).expect("invertible column"))
        .collect();
    Some((det, dual))
}
