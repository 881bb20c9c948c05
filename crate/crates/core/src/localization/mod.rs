//! Fixed-point localization: integrality of `Σ f(τ) / χ(τ)` and equivariant
//! Chern numbers.

pub mod poly;
pub mod symmetric;

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::character::Space;
use crate::algebra::ext::ExtPolynomial;
use crate::algebra::gf2::Gf2Polynomial;
use crate::algebra::kernel::in_image_unitary;
use crate::algebra::linalg::{gf2_rank, int_det};
use crate::algebra::Gf2Char;
use crate::error::{Error, Result};
use poly::{normalize_form, Coeff, Gf2, MPoly};
pub use symmetric::{monomial_basis, partitions_up_to, SymmetricFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointFlavor {
    Gf2,
    Z,
}

/// One isolated fixed point: its tangent weights and, over `Z`, a sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedPoint {
    pub sign: i8,
    pub weights: Vec<Vec<i64>>,
}

/// Tangent representations at the fixed points of an action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointData {
    n: usize,
    flavor: PointFlavor,
    points: Vec<FixedPoint>,
}

impl FixedPointData {
    /// Validates that each point carries a basis of weights (mod 2 for `gf2`).
    pub fn new(n: usize, flavor: PointFlavor, points: Vec<FixedPoint>) -> Result<Self> {
        for p in &points {
            if p.sign != 1 && p.sign != -1 {
                return Err(Error::Invalid("fixed point sign must be ±1".into()));
            }
            if p.weights.len() != n {
                return Err(Error::NotTopDegree { degree: p.weights.len(), rank: n });
            }
            if let Some(w) = p.weights.iter().find(|w| w.len() != n) {
                return Err(Error::CharacterLength { expected: n, got: w.len() });
            }
            let faithful = match flavor {
                PointFlavor::Gf2 => {
                    if p.weights.iter().flatten().any(|&c| c != 0 && c != 1) {
                        return Err(Error::Invalid("gf2 weights must have coordinates 0 or 1".into()));
                    }
                    let chars: Vec<Gf2Char> =
                        p.weights.iter().map(|w| Gf2Char::from_coords(w)).collect::<Result<_>>()?;
                    gf2_rank(&chars) == n
                }
                PointFlavor::Z => int_det(&p.weights).abs() == 1,
            };
            if !faithful {
                return Err(Error::NotABasis);
            }
        }
        Ok(FixedPointData { n, flavor, points })
    }

    /// One point per monomial of a primal polynomial.
    pub fn from_gf2(g: &Gf2Polynomial) -> Result<Self> {
        if g.space() != Space::Primal {
            return Err(Error::SpaceMismatch { expected: "primal" });
        }
        let n = g.rank();
        let points = g
            .monomials()
            .map(|m| FixedPoint { sign: 1, weights: m.chars().iter().map(|c| c.coords(n)).collect() })
            .collect();
        FixedPointData::new(n, PointFlavor::Gf2, points)
    }

    /// `|c|` points of sign `sign(c)` for each term `c·m` of a primal polynomial.
    pub fn from_ext(g: &ExtPolynomial) -> Result<Self> {
        if g.space() != Space::Primal {
            return Err(Error::SpaceMismatch { expected: "primal" });
        }
        let mut points = Vec::new();
        for (m, c) in g.terms() {
            let weights: Vec<Vec<i64>> = m.chars().iter().map(|w| w.coords().to_vec()).collect();
            for _ in 0..c.unsigned_abs() {
                points.push(FixedPoint { sign: c.signum() as i8, weights: weights.clone() });
            }
        }
        FixedPointData::new(g.rank(), PointFlavor::Z, points)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> PointFlavor {
        self.flavor
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }
}

/// `Σ_p sign(p) · h(p) / χ(p)` with `χ(p)` the product of the weights at `p`,
/// brought over the common denominator of all distinct weight lines.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalizedSum<C: Coeff> {
    pub numerator: MPoly<C>,
    /// The distinct linear forms whose product is the denominator.
    pub denominator: Vec<Vec<i64>>,
    /// `numerator / denominator` when the division is exact.
    pub quotient: Option<MPoly<C>>,
}

impl<C: Coeff> LocalizedSum<C> {
    pub fn is_polynomial(&self) -> bool {
        self.quotient.is_some()
    }
}

/// Forms are compared after `canon`, which must make `w` and `-w` equal; it
/// returns the sign `ε` with `w = ε · canon(w)`.
fn localize<C: Coeff>(
    n: usize,
    points: &[FixedPoint],
    canon: impl Fn(&[i64]) -> (i64, Vec<i64>),
    signed: bool,
    numerator_at: impl Fn(&[MPoly<C>]) -> MPoly<C>,
) -> LocalizedSum<C> {
    let lines: BTreeSet<Vec<i64>> = points.iter().flat_map(|p| p.weights.iter().map(|w| canon(w).1)).collect();
    let lines: Vec<Vec<i64>> = lines.into_iter().collect();
    let forms: Vec<MPoly<C>> = lines.iter().map(|l| MPoly::linear(l)).collect();
    let mut numerator = MPoly::zero(n);
    for p in points {
        let args: Vec<MPoly<C>> = p.weights.iter().map(|w| MPoly::linear(w)).collect();
        let mut eps: i64 = if signed { p.sign as i64 } else { 1 };
        let mut at_point = vec![false; lines.len()];
        for w in &p.weights {
            let (s, line) = canon(w);
            eps *= s;
            at_point[lines.binary_search(&line).expect("collected above")] = true;
        }
        let cofactor = forms
            .iter()
            .zip(&at_point)
            .filter(|(_, &here)| !here)
            .fold(MPoly::one(n), |acc, (f, _)| acc.mul(f));
        numerator = numerator.add(&numerator_at(&args).mul(&cofactor).scale(&C::from_i64(eps)));
    }
    let quotient = forms.iter().try_fold(numerator.clone(), |acc, f| acc.div_linear(f));
    LocalizedSum { numerator, denominator: lines, quotient }
}

fn require(data: &FixedPointData, flavor: PointFlavor) -> Result<()> {
    if data.flavor != flavor {
        return Err(Error::FlavorMismatch);
    }
    Ok(())
}

/// `Σ f(τ)/χ(τ)` over `GF(2)`.
pub fn localized_sum_gf2(data: &FixedPointData, f: &SymmetricFunction) -> Result<LocalizedSum<Gf2>> {
    require(data, PointFlavor::Gf2)?;
    let n = data.n;
    Ok(localize(n, &data.points, |w| (1, w.iter().map(|c| c.rem_euclid(2)).collect()), false, |args| {
        f.evaluate(n, args)
    }))
}

/// Whether `Σ f(τ)/χ(τ)` is a polynomial over `GF(2)`.
pub fn integrality_check_gf2(data: &FixedPointData, f: &SymmetricFunction) -> Result<bool> {
    Ok(localized_sum_gf2(data, f)?.is_polynomial())
}

/// `Σ [sign] f(τ)/χ(τ)` over `Q`; signs are used only when `signed`.
pub fn localized_sum_z(data: &FixedPointData, f: &SymmetricFunction, signed: bool) -> Result<LocalizedSum<BigRational>> {
    require(data, PointFlavor::Z)?;
    let n = data.n;
    Ok(localize(n, &data.points, normalize_form, signed, |args| f.evaluate(n, args)))
}

/// Whether `Σ f(τ)/χ(τ)` is a polynomial with integer coefficients. The
/// default (unsigned) sum ignores the point signs.
pub fn integrality_check_z(data: &FixedPointData, f: &SymmetricFunction, signed: bool) -> Result<bool> {
    let sum = localized_sum_z(data, f, signed)?;
    Ok(sum.quotient.as_ref().is_some_and(|q| q.is_integral()))
}

/// `Σ_p sign(p) e_1(w_p)^i e_2(w_p)^j / Π w_p`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChernNumber {
    pub i: u32,
    pub j: u32,
    pub sum: LocalizedSum<BigRational>,
}

impl ChernNumber {
    pub fn is_polynomial(&self) -> bool {
        self.sum.is_polynomial()
    }

    /// Polynomial with integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.sum.quotient.as_ref().is_some_and(|q| q.is_integral())
    }

    /// The number itself when the sum is a constant.
    pub fn value(&self) -> Option<BigRational> {
        self.sum.quotient.as_ref().and_then(|q| q.as_constant())
    }

    pub fn vanishes(&self) -> bool {
        self.sum.quotient.as_ref().is_some_and(|q| q.is_zero())
    }
}

pub fn equivariant_chern_number(data: &FixedPointData, i: u32, j: u32) -> Result<ChernNumber> {
    require(data, PointFlavor::Z)?;
    let n = data.n;
    let c1 = SymmetricFunction::elementary(1);
    let c2 = SymmetricFunction::elementary(2);
    let sum = localize(n, &data.points, normalize_form, true, |args| {
        c1.evaluate(n, args).pow(i).mul(&c2.evaluate(n, args).pow(j))
    });
    Ok(ChernNumber { i, j, sum })
}

/// Whether every equivariant Chern number with `i + 2j <= degree_cap` vanishes.
pub fn vanishing_test(g: &ExtPolynomial, degree_cap: u32) -> Result<bool> {
    let check = in_image_unitary(g);
    if !check.in_image {
        return Err(Error::NotInKernel(check.reason.unwrap_or_default()));
    }
    let data = FixedPointData::from_ext(g)?;
    for j in 0..=degree_cap / 2 {
        for i in 0..=degree_cap - 2 * j {
            if !equivariant_chern_number(&data, i, j)?.vanishes() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Support sizes of kernel samples against the bound `⌈n/2⌉ + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinFixedPointsReport {
    pub n: usize,
    pub bound: usize,
    pub samples: usize,
    pub nonzero: usize,
    pub min_support: Option<usize>,
    /// Indices of nonzero samples with fewer monomials than the bound.
    pub violations: Vec<usize>,
    pub passed: bool,
}

pub fn min_fixed_points_bound(n: usize) -> usize {
    n.div_ceil(2) + 1
}

pub fn min_fixed_points_check(n: usize, samples: &[ExtPolynomial]) -> MinFixedPointsReport {
    let bound = min_fixed_points_bound(n);
    let mut violations = Vec::new();
    let mut min_support = None;
    let mut nonzero = 0;
    for (k, g) in samples.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        nonzero += 1;
        let s = g.len();
        min_support = Some(min_support.map_or(s, |m: usize| m.min(s)));
        if s < bound {
            violations.push(k);
        }
    }
    MinFixedPointsReport {
        n,
        bound,
        samples: samples.len(),
        nonzero,
        min_support,
        passed: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn gf2_data(points: &[&[&[i64]]]) -> FixedPointData {
        let pts = points
            .iter()
            .map(|p| FixedPoint { sign: 1, weights: p.iter().map(|w| w.to_vec()).collect() })
            .collect();
        FixedPointData::new(points.first().map_or(1, |p| p.len()), PointFlavor::Gf2, pts).unwrap()
    }

    fn z_data(n: usize, points: &[(i8, &[&[i64]])]) -> FixedPointData {
        let pts = points
            .iter()
            .map(|(s, p)| FixedPoint { sign: *s, weights: p.iter().map(|w| w.to_vec()).collect() })
            .collect();
        FixedPointData::new(n, PointFlavor::Z, pts).unwrap()
    }

    fn cp2() -> FixedPointData {
        z_data(2, &[(1, &[&[1, 0], &[0, 1]]), (1, &[&[-1, 0], &[-1, 1]]), (1, &[&[0, -1], &[1, -1]])])
    }

    #[test]
    fn rp2_sum_of_reciprocals_is_polynomial() {
        let rp2 = gf2_data(&[&[&[1, 0], &[0, 1]], &[&[1, 0], &[1, 1]], &[&[0, 1], &[1, 1]]]);
        assert!(integrality_check_gf2(&rp2, &SymmetricFunction::one()).unwrap());
        let single = gf2_data(&[&[&[1, 0], &[0, 1]]]);
        assert!(!integrality_check_gf2(&single, &SymmetricFunction::one()).unwrap());
        assert!(integrality_check_gf2(&single, &SymmetricFunction::elementary(2)).unwrap());
    }

    #[test]
    fn z_integrality() {
        let cp1 = z_data(1, &[(1, &[&[1]]), (1, &[&[-1]])]);
        assert!(integrality_check_z(&cp1, &SymmetricFunction::one(), false).unwrap());
        let single = z_data(1, &[(1, &[&[1]])]);
        assert!(!integrality_check_z(&single, &SymmetricFunction::one(), false).unwrap());
        let cp1xcp1 = z_data(
            2,
            &[
                (1, &[&[1, 0], &[0, 1]]),
                (1, &[&[1, 0], &[0, -1]]),
                (1, &[&[-1, 0], &[0, 1]]),
                (1, &[&[-1, 0], &[0, -1]]),
            ],
        );
        assert!(integrality_check_z(&cp1xcp1, &SymmetricFunction::elementary(1), false).unwrap());
    }

    #[test]
    fn chern_numbers_of_projective_spaces() {
        // x/x + (-x)/(-x) = 2
        let cp1 = z_data(1, &[(1, &[&[1]]), (1, &[&[-1]])]);
        assert_eq!(equivariant_chern_number(&cp1, 1, 0).unwrap().value(), Some(q(2)));
        // (x+y)^2/(xy) + (y-2x)^2/(x(x-y)) + (x-2y)^2/(y(y-x)) = 9 and 1 + 1 + 1 = 3
        assert_eq!(equivariant_chern_number(&cp2(), 2, 0).unwrap().value(), Some(q(9)));
        assert_eq!(equivariant_chern_number(&cp2(), 0, 1).unwrap().value(), Some(q(3)));
        // below the top degree the sum is zero
        let low = equivariant_chern_number(&cp2(), 1, 0).unwrap();
        assert!(low.vanishes());
        let empty = FixedPointData::new(2, PointFlavor::Z, vec![]).unwrap();
        assert!(equivariant_chern_number(&empty, 3, 1).unwrap().vanishes());
    }

    #[test]
    fn chern_sums_above_top_degree_are_homogeneous() {
        let c = equivariant_chern_number(&cp2(), 3, 1).unwrap();
        let p = c.sum.quotient.unwrap();
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(3));
        assert!(p.is_integral());
    }

    #[test]
    fn non_faithful_points_are_rejected() {
        let bad = FixedPointData::new(1, PointFlavor::Z, vec![FixedPoint { sign: 1, weights: vec![vec![2]] }]);
        assert_eq!(bad, Err(Error::NotABasis));
    }

    #[test]
    fn report_counts() {
        let r = min_fixed_points_check(2, &[]);
        assert!(r.passed && r.min_support.is_none());
        assert_eq!(min_fixed_points_bound(1), 2);
        assert_eq!(min_fixed_points_bound(3), 3);
    }
}
