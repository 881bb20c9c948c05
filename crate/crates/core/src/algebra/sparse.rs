//! Sparse incremental column elimination with a tracked transform.
//!
//! Columns are added one at a time and reduced against pivot columns keyed by
//! their leading (smallest) row. Every step is a unimodular column operation,
//! so the transforms of the columns that reduce to zero form a basis of the
//! kernel lattice, not just of the rational kernel.

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};

pub type SparseVec = Vec<(usize, i64)>;

/// `x + k * y` for sorted sparse vectors.
fn axpy(x: &[(usize, i64)], k: i64, y: &[(usize, i64)]) -> Result<SparseVec> {
    lin2(1, x, k, y)
}

/// `a * x + b * y` for sorted sparse vectors.
fn lin2(a: i64, x: &[(usize, i64)], b: i64, y: &[(usize, i64)]) -> Result<SparseVec> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let mul = |k: i64, v: i64| k.checked_mul(v).ok_or(Error::Overflow);
    while i < x.len() || j < y.len() {
        let (idx, val) = match (x.get(i), y.get(j)) {
            (Some(&(xi, xv)), Some(&(yi, _))) if xi < yi => {
                i += 1;
                (xi, mul(a, xv)?)
            }
            (Some(&(xi, _)), Some(&(yi, yv))) if yi < xi => {
                j += 1;
                (yi, mul(b, yv)?)
            }
            (Some(&(xi, xv)), Some(&(_, yv))) => {
                i += 1;
                j += 1;
                (xi, mul(a, xv)?.checked_add(mul(b, yv)?).ok_or(Error::Overflow)?)
            }
            (Some(&(xi, xv)), None) => {
                i += 1;
                (xi, mul(a, xv)?)
            }
            (None, Some(&(yi, yv))) => {
                j += 1;
                (yi, mul(b, yv)?)
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((idx, val));
        }
    }
    Ok(out)
}

struct Pivot {
    column: SparseVec,
    transform: SparseVec,
}

/// Result of an integer kernel computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntKernel {
    pub rank: usize,
    /// Lattice basis of the kernel; vectors indexed by column.
    pub basis: Vec<SparseVec>,
}

/// Kernel lattice of the integer matrix with the given sparse columns.
///
/// Each column must be sorted by row index with no zero entries.
pub fn integer_kernel(columns: &[SparseVec]) -> Result<IntKernel> {
    let mut pivots: HashMap<usize, Pivot> = HashMap::new();
    let mut basis = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut c = col.clone();
        let mut t: SparseVec = vec![(j, 1)];
        loop {
            let Some(&(lead, q)) = c.first() else {
                basis.push(t);
                break;
            };
            let Some(pivot) = pivots.get_mut(&lead) else {
                pivots.insert(lead, Pivot { column: c, transform: t });
                break;
            };
            let p = pivot.column[0].1;
            if q % p == 0 {
                let k = -(q / p);
                c = axpy(&c, k, &pivot.column)?;
                t = axpy(&t, k, &pivot.transform)?;
            } else {
                let eg = p.extended_gcd(&q);
                let (g, a, b) = (eg.gcd, eg.x, eg.y);
                let new_col = lin2(a, &pivot.column, b, &c)?;
                let new_tr = lin2(a, &pivot.transform, b, &t)?;
                c = lin2(q / g, &pivot.column, -(p / g), &c)?;
                t = lin2(q / g, &pivot.transform, -(p / g), &t)?;
                pivot.column = new_col;
                pivot.transform = new_tr;
            }
        }
    }
    Ok(IntKernel { rank: pivots.len(), basis })
}

/// Kernel of a `GF(2)` matrix given by the row supports of its columns.
///
/// Same incremental scheme as [`integer_kernel`]; the pivot order differs from
/// the dense left-to-right elimination, which makes it a useful cross-check.
pub fn gf2_kernel(columns: &[Vec<usize>]) -> (usize, Vec<Vec<usize>>) {
    fn xor(x: &[usize], y: &[usize]) -> Vec<usize> {
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => {
                    out.push(x[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(y[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend_from_slice(&y[j..]);
        out
    }

    let mut pivots: HashMap<usize, (Vec<usize>, Vec<usize>)> = HashMap::new();
    let mut basis = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let mut c = col.clone();
        let mut t = vec![j];
        loop {
            let Some(&lead) = c.first() else {
                basis.push(t);
                break;
            };
            match pivots.get(&lead) {
                Some((pc, pt)) => {
                    c = xor(&c, pc);
                    t = xor(&t, pt);
                }
                None => {
                    pivots.insert(lead, (c, t));
                    break;
                }
            }
        }
    }
    (pivots.len(), basis)
}
