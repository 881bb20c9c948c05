//! Bordism classes identified with their fixed-point polynomials.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::character::{Gf2Char, Space, ZChar};
use crate::algebra::ext::ExtPolynomial;
use crate::algebra::gf2::{Gf2Monomial, Gf2Polynomial};
use crate::algebra::kernel::{in_image, in_image_unitary, kernel_space, UnitaryWindow, WindowLimits, DEFAULT_MAX_RANK};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassFlavor {
    #[serde(rename = "unoriented-z2torus")]
    Unoriented,
    #[serde(rename = "unitary-toric")]
    Unitary,
}

/// A class of `Z_n((Z_2)^n)` or of the unitary toric bordism group, stored as
/// its (primal) fixed-point polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BordismClass {
    Unoriented(Gf2Polynomial),
    Unitary(ExtPolynomial),
}

impl BordismClass {
    pub fn unoriented(g: Gf2Polynomial) -> Result<Self> {
        let check = in_image(&g);
        if !check.in_image {
            return Err(Error::NotInKernel(check.reason.unwrap_or_default()));
        }
        Ok(BordismClass::Unoriented(g))
    }

    pub fn unitary(g: ExtPolynomial) -> Result<Self> {
        let check = in_image_unitary(&g);
        if !check.in_image {
            return Err(Error::NotInKernel(check.reason.unwrap_or_default()));
        }
        Ok(BordismClass::Unitary(g))
    }

    pub fn zero(flavor: ClassFlavor, n: usize) -> Self {
        match flavor {
            ClassFlavor::Unoriented => BordismClass::Unoriented(Gf2Polynomial::zero(n, Space::Primal)),
            ClassFlavor::Unitary => BordismClass::Unitary(ExtPolynomial::zero(n, Space::Primal)),
        }
    }

    pub fn flavor(&self) -> ClassFlavor {
        match self {
            BordismClass::Unoriented(_) => ClassFlavor::Unoriented,
            BordismClass::Unitary(_) => ClassFlavor::Unitary,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            BordismClass::Unoriented(g) => g.rank(),
            BordismClass::Unitary(g) => g.rank(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            BordismClass::Unoriented(g) => g.is_zero(),
            BordismClass::Unitary(g) => g.is_zero(),
        }
    }

    /// Disjoint union.
    pub fn add(&self, other: &BordismClass) -> Result<BordismClass> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        match (self, other) {
            (BordismClass::Unoriented(a), BordismClass::Unoriented(b)) => Ok(BordismClass::Unoriented(a.add(b)?)),
            (BordismClass::Unitary(a), BordismClass::Unitary(b)) => Ok(BordismClass::Unitary(a.add(b)?)),
            _ => Err(Error::FlavorMismatch),
        }
    }

    /// Cartesian product; `self` acts through the first `rank(self)` coordinates.
    pub fn multiply(&self, other: &BordismClass) -> Result<BordismClass> {
        match (self, other) {
            (BordismClass::Unoriented(a), BordismClass::Unoriented(b)) => {
                Ok(BordismClass::Unoriented(a.block_product(b)?))
            }
            (BordismClass::Unitary(a), BordismClass::Unitary(b)) => Ok(BordismClass::Unitary(a.block_product(b)?)),
            _ => Err(Error::FlavorMismatch),
        }
    }

    /// Moves the first `split` coordinates after the remaining ones, so that
    /// `multiply(a, b)` maps to `multiply(b, a)` for `split = rank(a)`.
    pub fn swap_conjugate(&self, split: usize) -> Result<BordismClass> {
        let n = self.rank();
        if split > n {
            return Err(Error::Invalid(format!("split {split} exceeds rank {n}")));
        }
        let swap = |c: &[i64]| -> Vec<i64> { c[split..].iter().chain(&c[..split]).copied().collect() };
        match self {
            BordismClass::Unoriented(g) => Ok(BordismClass::Unoriented(
                g.map_chars(n, |c| Gf2Char::from_coords(&swap(&c.coords(n))).expect("nonzero"))?,
            )),
            BordismClass::Unitary(g) => Ok(BordismClass::Unitary(
                g.map_chars(n, |c| ZChar::new(swap(c.coords())).expect("nonzero"))?,
            )),
        }
    }

    /// The mod-2 reduction of a unitary class.
    pub fn reduce(&self) -> Result<BordismClass> {
        match self {
            BordismClass::Unitary(g) => Ok(BordismClass::Unoriented(g.mod2_reduce()?)),
            BordismClass::Unoriented(_) => Err(Error::FlavorMismatch),
        }
    }
}

/// Outcome of searching a weight window for a lift of one basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeEntry {
    pub target: Gf2Polynomial,
    /// A window kernel element reducing to `target`, if one exists.
    pub preimage: Option<ExtPolynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurjectivityReport {
    pub n: usize,
    pub weight_bound: i64,
    pub kernel_dim: usize,
    /// Rank over `GF(2)` of the reductions of the window's kernel.
    pub image_rank: usize,
    pub entries: Vec<ProbeEntry>,
}

impl SurjectivityReport {
    pub fn hits(&self) -> usize {
        self.entries.iter().filter(|e| e.preimage.is_some()).count()
    }

    /// Every basis element was lifted, so the window already surjects.
    pub fn complete(&self) -> bool {
        self.hits() == self.entries.len()
    }
}

/// For each basis element of the `GF(2)` kernel, a unitary kernel element in
/// the weight window reducing to it. Misses only say the window is too small.
pub fn surjectivity_probe(n: usize, weight_bound: i64, limits: WindowLimits) -> Result<SurjectivityReport> {
    let space = kernel_space(n, DEFAULT_MAX_RANK)?;
    let lifts = if weight_bound == 0 {
        Vec::new()
    } else {
        UnitaryWindow::new(n, weight_bound, limits)?.kernel_basis()?
    };
    let mut reduced = Vec::with_capacity(lifts.len());
    for g in &lifts {
        reduced.push(g.mod2_reduce()?);
    }
    // GF(2) elimination on the reductions, remembering which lifts were combined
    let mut index: HashMap<Gf2Monomial, usize> = HashMap::new();
    let mut support = |p: &Gf2Polynomial| -> Vec<usize> {
        let mut v: Vec<usize> = p
            .monomials()
            .map(|m| {
                let next = index.len();
                *index.entry(m.clone()).or_insert(next)
            })
            .collect();
        v.sort_unstable();
        v
    };
    let mut pivots: HashMap<usize, (Vec<usize>, Vec<usize>)> = HashMap::new();
    for (k, r) in reduced.iter().enumerate() {
        let (v, t) = reduce_against(&pivots, support(r), vec![k]);
        if let Some(&lead) = v.first() {
            pivots.insert(lead, (v, t));
        }
    }
    let image_rank = pivots.len();
    let entries = space
        .basis
        .iter()
        .map(|b| {
            let (rest, combo) = reduce_against(&pivots, support(b), Vec::new());
            let preimage = rest.is_empty().then(|| {
                combo
                    .iter()
                    .try_fold(ExtPolynomial::zero(n, Space::Primal), |acc, &k| acc.add(&lifts[k]))
                    .expect("same rank")
            });
            ProbeEntry { target: b.clone(), preimage }
        })
        .collect();
    Ok(SurjectivityReport { n, weight_bound, kernel_dim: space.dim, image_rank, entries })
}

fn reduce_against(
    pivots: &HashMap<usize, (Vec<usize>, Vec<usize>)>,
    mut v: Vec<usize>,
    mut t: Vec<usize>,
) -> (Vec<usize>, Vec<usize>) {
    while let Some(&lead) = v.first() {
        let Some((pv, pt)) = pivots.get(&lead) else {
            break;
        };
        v = xor_sorted(&v, pv);
        t = xor_sorted(&t, pt);
    }
    (v, t)
}

fn xor_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(*x);
                i += 1;
            }
            (Some(_), Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (Some(x), None) => {
                out.push(*x);
                i += 1;
            }
            (None, Some(y)) => {
                out.push(*y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ext::ExtMonomial;

    fn g2(c: &[i64]) -> Gf2Char {
        Gf2Char::from_coords(c).unwrap()
    }

    fn z(c: &[i64]) -> ZChar {
        ZChar::new(c.to_vec()).unwrap()
    }

    fn rp2() -> BordismClass {
        let (a, b, c) = (g2(&[1, 0]), g2(&[0, 1]), g2(&[1, 1]));
        let g = Gf2Polynomial::from_monomials(
            2,
            Space::Primal,
            [vec![a, b], vec![a, c], vec![b, c]].map(|m| Gf2Monomial::new(m).unwrap()),
        );
        BordismClass::unoriented(g).unwrap()
    }

    fn unitary(n: usize, sets: &[&[&[i64]]]) -> BordismClass {
        let g = ExtPolynomial::from_terms(
            n,
            Space::Primal,
            sets.iter().map(|s| (1, ExtMonomial::from_set(s.iter().map(|c| z(c)).collect()).unwrap())),
        );
        BordismClass::unitary(g).unwrap()
    }

    fn cp1() -> BordismClass {
        unitary(1, &[&[&[1]], &[&[-1]]])
    }

    fn cp2() -> BordismClass {
        unitary(2, &[&[&[1, 0], &[0, 1]], &[&[-1, 0], &[-1, 1]], &[&[0, -1], &[1, -1]]])
    }

    #[test]
    fn addition() {
        assert!(rp2().add(&rp2()).unwrap().is_zero());
        let zero = BordismClass::zero(ClassFlavor::Unoriented, 2);
        assert_eq!(rp2().add(&zero).unwrap(), rp2());
        let BordismClass::Unitary(two) = cp1().add(&cp1()).unwrap() else { panic!() };
        assert_eq!(two.len(), 2);
        assert!(two.terms().all(|(_, c)| c == 2));
        assert!(in_image_unitary(&two).in_image);
        assert_eq!(rp2().add(&cp1()), Err(Error::RankMismatch(2, 1)));
    }

    #[test]
    fn products() {
        let BordismClass::Unoriented(p) = rp2().multiply(&rp2()).unwrap() else { panic!() };
        assert_eq!((p.rank(), p.len()), (4, 9));
        assert!(in_image(&p).in_image);
        let square = cp1().multiply(&cp1()).unwrap();
        let expected = unitary(2, &[&[&[1, 0], &[0, 1]], &[&[1, 0], &[0, -1]], &[&[-1, 0], &[0, 1]], &[&[-1, 0], &[0, -1]]]);
        assert_eq!(square, expected);
        let zero = BordismClass::zero(ClassFlavor::Unitary, 1);
        assert!(zero.multiply(&cp2()).unwrap().is_zero());
    }

    #[test]
    fn swaps() {
        let a = cp1();
        let b = cp2();
        let ab = a.multiply(&b).unwrap();
        let ba = b.multiply(&a).unwrap();
        assert_eq!(ab.swap_conjugate(1).unwrap(), ba);
        assert_eq!(ab.swap_conjugate(1).unwrap().swap_conjugate(2).unwrap(), ab);
        assert_ne!(ab, ba);
        let sym = cp1().multiply(&cp1()).unwrap();
        assert_eq!(sym.swap_conjugate(1).unwrap(), sym);
    }

    #[test]
    fn reductions() {
        assert!(cp1().reduce().unwrap().is_zero());
        assert!(cp1().multiply(&cp1()).unwrap().reduce().unwrap().is_zero());
        assert_eq!(cp2().reduce().unwrap(), rp2());
        assert_eq!(rp2().reduce(), Err(Error::FlavorMismatch));
    }

    #[test]
    fn rejects_non_kernel_polynomials() {
        let g = Gf2Polynomial::from_monomials(1, Space::Primal, [Gf2Monomial::new(vec![g2(&[1])]).unwrap()]);
        assert!(matches!(BordismClass::unoriented(g), Err(Error::NotInKernel(_))));
    }

    #[test]
    fn probe_small_ranks() {
        let r1 = surjectivity_probe(1, 1, WindowLimits::default()).unwrap();
        assert_eq!((r1.kernel_dim, r1.entries.len()), (0, 0));
        let r2 = surjectivity_probe(2, 1, WindowLimits::default()).unwrap();
        assert_eq!(r2.kernel_dim, 1);
        assert!(r2.complete());
        let lift = r2.entries[0].preimage.clone().unwrap();
        assert!(in_image_unitary(&lift).in_image);
        assert_eq!(lift.mod2_reduce().unwrap(), r2.entries[0].target);
    }
}
