//! Sparse multivariate polynomials over `GF(2)` or `Q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Field operations needed by [`MPoly`].
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Division by a nonzero element.
    fn div(&self, other: &Self) -> Self;
}

/// An element of `GF(2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gf2(pub bool);

impl Coeff for Gf2 {
    fn zero() -> Self {
        Gf2(false)
    }
    fn one() -> Self {
        Gf2(true)
    }
    fn from_i64(v: i64) -> Self {
        Gf2(v.rem_euclid(2) == 1)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn add(&self, other: &Self) -> Self {
        Gf2(self.0 ^ other.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn mul(&self, other: &Self) -> Self {
        Gf2(self.0 & other.0)
    }
    fn div(&self, other: &Self) -> Self {
        assert!(other.0, "division by zero in GF(2)");
        *self
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
}

pub type Exponent = Vec<u32>;

/// A polynomial in `nvars` variables, stored as exponent vector → nonzero coefficient.
#[derive(Clone, PartialEq)]
pub struct MPoly<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, C::one())
    }

    /// The linear form `Σ coeffs[i] x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = MPoly::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, C::from_i64(c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Exponent, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                *old = old.add(&c);
                if old.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &MPoly<C>) -> MPoly<C> {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &C) -> MPoly<C> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mul(k));
        }
        out
    }

    pub fn mul(&self, other: &MPoly<C>) -> MPoly<C> {
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MPoly<C> {
        (0..k).fold(MPoly::one(self.nvars), |acc, _| acc.mul(self))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// The coefficient of the constant term.
    pub fn constant_term(&self) -> C {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(C::zero)
    }

    /// Exact division by a nonzero linear form; `None` when it does not divide.
    ///
    /// Long division in the first variable `x_k` the form involves; the
    /// remainder is what substituting the root of the form for `x_k` leaves.
    pub fn div_linear(&self, form: &MPoly<C>) -> Option<MPoly<C>> {
        let (k, lead) = form.terms.iter().find_map(|(e, c)| e.iter().position(|&x| x == 1).map(|k| (k, c.clone())))?;
        let mut rest = form.clone();
        let mut unit = vec![0; self.nvars];
        unit[k] = 1;
        rest.terms.remove(&unit);
        if rest.terms.keys().any(|e| e[k] != 0) {
            return None;
        }
        let mut rem = self.clone();
        let mut quotient = MPoly::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().filter(|(e, _)| e[k] > 0).max_by_key(|(e, _)| e[k]).map(|(e, c)| (e.clone(), c.clone())) {
            let mut qe = e.clone();
            qe[k] -= 1;
            let qc = c.div(&lead);
            // rem -= qc * x^qe * (lead x_k + rest)
            rem.terms.remove(&e);
            for (re, rc) in &rest.terms {
                let te: Exponent = qe.iter().zip(re).map(|(a, b)| a + b).collect();
                rem.add_term(te, rc.mul(&qc).neg());
            }
            quotient.add_term(qe, qc);
        }
        rem.is_zero().then_some(quotient)
    }
}

impl MPoly<BigRational> {
    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The constant value when the polynomial has degree at most 0.
    pub fn as_constant(&self) -> Option<BigRational> {
        (self.degree().unwrap_or(0) == 0).then(|| self.constant_term())
    }
}

impl<C: Coeff> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{c:?}*x^{e:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Sign-normalized linear form: first nonzero coefficient positive.
pub(crate) fn normalize_form(coeffs: &[i64]) -> (i64, Vec<i64>) {
    let sign = coeffs.iter().find(|&&c| c != 0).map(|c| c.signum()).unwrap_or(1);
    (sign, coeffs.iter().map(|c| c * sign).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = MPoly<BigRational>;

    #[test]
    fn division_by_linear_forms() {
        let x = Q::linear(&[1, 0]);
        let y = Q::linear(&[0, 1]);
        let x_minus_y = Q::linear(&[1, -1]);
        // x^2 - y^2 = (x - y)(x + y)
        let p = x.mul(&x).add(&y.mul(&y).scale(&BigRational::from_i64(-1)));
        let q = p.div_linear(&x_minus_y).unwrap();
        assert_eq!(q, Q::linear(&[1, 1]));
        assert!(p.div_linear(&x).is_none());
        assert!(x.add(&Q::one(2)).div_linear(&x).is_none());
    }

    #[test]
    fn division_over_gf2() {
        type P = MPoly<Gf2>;
        let a = P::linear(&[1, 0]);
        let b = P::linear(&[0, 1]);
        let c = P::linear(&[1, 1]);
        // a b (a + b) / (a + b) = a b
        let p = a.mul(&b).mul(&c);
        assert_eq!(p.div_linear(&c).unwrap(), a.mul(&b));
        // a^2 + b^2 = (a + b)^2 over GF(2)
        let sq = a.mul(&a).add(&b.mul(&b));
        assert_eq!(sq.div_linear(&c).unwrap(), c);
        assert!(a.mul(&a).add(&b).div_linear(&c).is_none());
    }

    #[test]
    fn degrees_and_constants() {
        let x = Q::linear(&[1, 2]);
        assert_eq!(x.pow(3).degree(), Some(3));
        assert!(x.pow(3).is_homogeneous());
        assert_eq!(Q::constant(2, BigRational::from_i64(9)).as_constant(), Some(BigRational::from_i64(9)));
        assert_eq!(Q::zero(2).as_constant(), Some(BigRational::from_i64(0)));
        assert_eq!(normalize_form(&[0, -2, 1]), (-1, vec![0, 2, -1]));
    }
}
