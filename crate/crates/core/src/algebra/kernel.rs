//! Kernels of `d ∘ dual` and the image criteria built on them.

use std::collections::HashMap;

use serde::Serialize;

use super::bitmatrix::BitMatrix;
use super::character::{Gf2Char, Space, ZChar};
use super::ext::{ExtMonomial, ExtPolynomial};
use super::gf2::{Gf2Monomial, Gf2Polynomial};
use super::linalg::gf2_rank;
use super::sparse::{gf2_kernel, integer_kernel, SparseVec};
use crate::error::{Error, Result};

/// Default cap on the rank accepted by [`kernel_space`].
pub const DEFAULT_MAX_RANK: usize = 5;

/// Ranks above this use sparse elimination; the dense matrix would not fit.
const DENSE_RANK_LIMIT: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Gf2,
    ZExterior,
}

/// Faithful polynomials `g` of rank `n` with `d(g*) = 0`.
#[derive(Debug, Clone)]
pub struct KernelSpace {
    pub n: usize,
    pub flavor: Flavor,
    pub dim: usize,
    /// Primal-space basis of the kernel.
    pub basis: Vec<Gf2Polynomial>,
    /// Number of faithful monomials (columns of the `d ∘ dual` matrix).
    pub columns: usize,
    /// Number of degree `n - 1` monomials hit by `d ∘ dual` (rows).
    pub rows: usize,
}

/// Outcome of an image-membership check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImageCheck {
    pub in_image: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl ImageCheck {
    fn yes() -> Self {
        ImageCheck { in_image: true, reason: None }
    }

    fn no(reason: &str) -> Self {
        ImageCheck { in_image: false, reason: Some(reason.to_string()) }
    }
}

/// All unordered bases of `GF(2)^n`, each as a sorted monomial, in increasing order.
pub fn faithful_gf2_monomials(n: usize) -> Vec<Gf2Monomial> {
    fn extend(all: &[Gf2Char], start: usize, n: usize, current: &mut Vec<Gf2Char>, out: &mut Vec<Gf2Monomial>) {
        if current.len() == n {
            out.push(Gf2Monomial::new(current.clone()).expect("increasing"));
            return;
        }
        for i in start..all.len() {
            current.push(all[i]);
            if gf2_rank(current) == current.len() {
                extend(all, i + 1, n, current, out);
            }
            current.pop();
        }
    }
    let all = Gf2Char::all(n);
    let mut out = Vec::new();
    extend(&all, 0, n, &mut Vec::new(), &mut out);
    out
}

/// Columns of the `d ∘ dual` matrix on faithful monomials: for each monomial,
/// the row indices of the faces of its dual. Rows are numbered in first-seen order.
pub fn gf2_differential_columns(n: usize, monomials: &[Gf2Monomial]) -> Result<(usize, Vec<Vec<usize>>)> {
    let mut row_index: HashMap<Gf2Monomial, usize> = HashMap::new();
    let mut columns = Vec::with_capacity(monomials.len());
    for m in monomials {
        let dual = m.dual(n)?;
        let mut col: Vec<usize> = dual
            .faces()
            .map(|face| {
                let next = row_index.len();
                *row_index.entry(face).or_insert(next)
            })
            .collect();
        col.sort_unstable();
        columns.push(col);
    }
    Ok((row_index.len(), columns))
}

fn estimated_columns(n: usize) -> Option<u128> {
    // |GL_n(F_2)| / n!
    let mut order: u128 = 1;
    for i in 0..n as u32 {
        order = order.checked_mul(2u128.checked_pow(n as u32)? - (1u128 << i))?;
    }
    Some(order / (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))?)
}

/// Basis and dimension of the space of faithful `g` with `d(g*) = 0` over `GF(2)`.
pub fn kernel_space(n: usize, max_rank: usize) -> Result<KernelSpace> {
    if n == 0 {
        return Err(Error::Invalid("rank must be at least 1".into()));
    }
    if n > max_rank {
        let estimate = match estimated_columns(n) {
            Some(cols) => format!("~{cols} columns of the d∘dual matrix"),
            None => "a d∘dual matrix too large to count in 128 bits".to_string(),
        };
        return Err(Error::Resource { what: format!("rank {n} exceeds the maximum {max_rank}"), estimate });
    }
    let monomials = faithful_gf2_monomials(n);
    let (rows, columns) = gf2_differential_columns(n, &monomials)?;
    let supports = if n <= DENSE_RANK_LIMIT {
        let mut m = BitMatrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for &r in col {
                m.flip(r, c);
            }
        }
        m.nullspace()
    } else {
        gf2_kernel(&columns).1
    };
    let basis = supports
        .into_iter()
        .map(|s| Gf2Polynomial::from_monomials(n, Space::Primal, s.into_iter().map(|i| monomials[i].clone())))
        .collect::<Vec<_>>();
    Ok(KernelSpace { n, flavor: Flavor::Gf2, dim: basis.len(), basis, columns: monomials.len(), rows })
}

/// Membership of a top-degree `GF(2)` polynomial in the image of the fixed-point map.
pub fn in_image(g: &Gf2Polynomial) -> ImageCheck {
    match g.is_faithful() {
        Err(Error::NotTopDegree { .. }) => return ImageCheck::no("not top-degree"),
        Err(_) | Ok(false) => return ImageCheck::no("not faithful"),
        Ok(true) => {}
    }
    let dual = match g.space() {
        Space::Primal => g.dual(),
        Space::Dual => return ImageCheck::no("not a primal polynomial"),
    };
    match dual {
        Ok(d) if d.differential().is_zero() => ImageCheck::yes(),
        Ok(_) => ImageCheck::no("d(g*) != 0"),
        Err(_) => ImageCheck::no("not faithful"),
    }
}

/// Exterior counterpart of [`in_image`].
pub fn in_image_unitary(g: &ExtPolynomial) -> ImageCheck {
    match g.is_faithful() {
        Err(Error::NotTopDegree { .. }) => return ImageCheck::no("not top-degree"),
        Err(_) | Ok(false) => return ImageCheck::no("not faithful"),
        Ok(true) => {}
    }
    if g.space() != Space::Primal {
        return ImageCheck::no("not a primal polynomial");
    }
    match g.dual() {
        Ok(d) if d.differential().is_zero() => ImageCheck::yes(),
        Ok(_) => ImageCheck::no("d(g*) != 0"),
        Err(_) => ImageCheck::no("not faithful"),
    }
}

/// Bounds on the weight windows enumerated over `Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowLimits {
    pub max_rank: usize,
    pub max_weight: i64,
}

impl Default for WindowLimits {
    fn default() -> Self {
        WindowLimits { max_rank: 3, max_weight: 2 }
    }
}

/// The faithful exterior monomials with entries in `[-w, w]` and the integer
/// matrix of `d ∘ dual` on their span.
#[derive(Debug, Clone)]
pub struct UnitaryWindow {
    pub n: usize,
    pub weight_bound: i64,
    pub monomials: Vec<ExtMonomial>,
    pub columns: Vec<SparseVec>,
    pub rows: usize,
}

impl UnitaryWindow {
    pub fn new(n: usize, weight_bound: i64, limits: WindowLimits) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("rank must be at least 1".into()));
        }
        if weight_bound < 0 {
            return Err(Error::Invalid("weight bound must be nonnegative".into()));
        }
        if n > limits.max_rank || weight_bound > limits.max_weight {
            let side = (weight_bound as u128) * 2 + 1;
            let estimate = match side.checked_pow(n as u32) {
                Some(total) => format!("{} characters, up to {} candidate monomials", total - 1, binomial(total - 1, n as u128)),
                None => "more characters than fit in 128 bits".to_string(),
            };
            return Err(Error::Resource {
                what: format!(
                    "window (rank {n}, weight {weight_bound}) exceeds limits (rank {}, weight {})",
                    limits.max_rank, limits.max_weight
                ),
                estimate,
            });
        }
        let all = window_chars(n, weight_bound);
        let monomials = unimodular_subsets(&all, n);
        let mut row_index: HashMap<ExtMonomial, usize> = HashMap::new();
        let mut columns = Vec::with_capacity(monomials.len());
        for m in &monomials {
            let image = ExtPolynomial::from_terms(n, Space::Primal, [(1, m.clone())]).dual()?.differential();
            let mut col: SparseVec = image
                .terms()
                .map(|(face, c)| {
                    let next = row_index.len();
                    (*row_index.entry(face.clone()).or_insert(next), c)
                })
                .collect();
            col.sort_unstable();
            columns.push(col);
        }
        Ok(UnitaryWindow { n, weight_bound, monomials, columns, rows: row_index.len() })
    }

    /// Integral basis of the kernel inside the window.
    pub fn kernel_basis(&self) -> Result<Vec<ExtPolynomial>> {
        let kernel = integer_kernel(&self.columns)?;
        Ok(kernel
            .basis
            .into_iter()
            .map(|v| {
                ExtPolynomial::from_terms(self.n, Space::Primal, v.into_iter().map(|(i, c)| (c, self.monomials[i].clone())))
            })
            .collect())
    }

    /// Size of the smallest set of columns that is linearly dependent with all
    /// coefficients nonzero, searched up to `limit` columns. `None` when no
    /// such set of size `<= limit` exists. This is the smallest possible number
    /// of monomials of a nonzero kernel element.
    pub fn min_dependent_support(&self, limit: usize) -> Option<usize> {
        if limit >= 1 && self.columns.iter().any(|c| c.is_empty()) {
            return Some(1);
        }
        if limit >= 2 {
            let mut seen: HashMap<SparseVec, usize> = HashMap::new();
            for col in &self.columns {
                let normalized = normalize_direction(col);
                if seen.insert(normalized, 0).is_some() {
                    return Some(2);
                }
            }
        }
        (3..=limit).find(|&k| has_dependent_subset(&self.columns, k))
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

pub(crate) fn window_chars(n: usize, w: i64) -> Vec<ZChar> {
    let side = 2 * w + 1;
    let total = side.pow(n as u32);
    let mut out: Vec<ZChar> = (0..total)
        .filter_map(|mut code| {
            let coords: Vec<i64> = (0..n)
                .map(|_| {
                    let c = code % side - w;
                    code /= side;
                    c
                })
                .collect();
            ZChar::new(coords).ok()
        })
        .collect();
    out.sort();
    out
}

/// Unordered `n`-subsets of `chars` with determinant ±1, as canonical monomials.
fn unimodular_subsets(chars: &[ZChar], n: usize) -> Vec<ExtMonomial> {
    fn extend(chars: &[ZChar], start: usize, n: usize, current: &mut Vec<ZChar>, out: &mut Vec<ExtMonomial>) {
        if current.len() == n {
            let m = ExtMonomial::from_set(current.clone()).expect("distinct");
            if m.is_faithful(n) {
                out.push(m);
            }
            return;
        }
        for i in start..chars.len() {
            // a unimodular set is primitive at every step: gcd of minors is 1
            current.push(chars[i].clone());
            if partial_is_primitive(current) {
                extend(chars, i + 1, n, current, out);
            }
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(chars, 0, n, &mut Vec::new(), &mut out);
    out
}

/// A set of vectors extends to a basis of `Z^n` only if its maximal minors have gcd 1.
pub(crate) fn partial_is_primitive(vectors: &[ZChar]) -> bool {
    let k = vectors.len();
    let n = vectors[0].rank();
    if k == n {
        return true;
    }
    let mut g: i128 = 0;
    for cols in combinations(n, k) {
        let rows: Vec<Vec<i64>> = vectors.iter().map(|v| cols.iter().map(|&c| v.coords()[c]).collect()).collect();
        g = num_integer::gcd(g, super::linalg::int_det(&rows));
        if g == 1 {
            return true;
        }
    }
    g == 1
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Scales a nonzero sparse vector to a canonical representative of its line.
fn normalize_direction(v: &SparseVec) -> SparseVec {
    let g = v.iter().fold(0i64, |acc, &(_, x)| num_integer::gcd(acc, x));
    let sign = if v.first().map(|&(_, x)| x < 0).unwrap_or(false) { -1 } else { 1 };
    v.iter().map(|&(i, x)| (i, sign * x / g)).collect()
}

/// Whether some `k` columns admit a dependency with all `k` coefficients nonzero.
fn has_dependent_subset(columns: &[SparseVec], k: usize) -> bool {
    combinations(columns.len(), k).into_iter().any(|idx| {
        let subset: Vec<SparseVec> = idx.iter().map(|&i| columns[i].clone()).collect();
        let kernel = integer_kernel(&subset).expect("small subsets do not overflow");
        // a circuit: one-dimensional kernel with full support
        kernel.basis.len() == 1 && kernel.basis[0].len() == k
    })
}

/// Integral basis of the weight-bounded window of the unitary kernel.
pub fn kernel_sample_unitary(n: usize, weight_bound: i64, limits: WindowLimits) -> Result<Vec<ExtPolynomial>> {
    if weight_bound == 0 {
        return Ok(Vec::new());
    }
    UnitaryWindow::new(n, weight_bound, limits)?.kernel_basis()
}
