//! The free exterior algebra over `Z` on the characters of `T^n`.
//!
//! Monomials are stored with their characters strictly increasing; writing a
//! wedge in any other order folds the sorting sign into the coefficient.
//!
//! Coefficient of a primal monomial is read as a signed count of fixed points
//! with that weight set. The dual therefore carries `det A` of the canonically
//! ordered weight matrix on the way to the dual space and the matching
//! determinant on the way back, which keeps `dual` an involution.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::character::{Space, ZChar};
use super::gf2::{Gf2Monomial, Gf2Polynomial};
use super::linalg::{char_det, z_dual_basis};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtMonomial(Vec<ZChar>);

/// Sorts `chars` and returns the sign of the sorting permutation.
fn sort_with_sign(chars: &mut [ZChar]) -> i64 {
    let mut sign = 1;
    // insertion sort, counting transpositions
    for i in 1..chars.len() {
        let mut j = i;
        while j > 0 && chars[j - 1] > chars[j] {
            chars.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

impl ExtMonomial {
    /// Canonicalizes the wedge `c_1 ∧ ... ∧ c_k`, returning the permutation sign.
    pub fn from_wedge(mut chars: Vec<ZChar>) -> Result<(i64, ExtMonomial)> {
        let sign = sort_with_sign(&mut chars);
        if chars.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedCharacter);
        }
        Ok((sign, ExtMonomial(chars)))
    }

    /// Canonical monomial on an unordered set of characters.
    pub fn from_set(chars: Vec<ZChar>) -> Result<ExtMonomial> {
        Self::from_wedge(chars).map(|(_, m)| m)
    }

    pub fn one() -> Self {
        ExtMonomial(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn chars(&self) -> &[ZChar] {
        &self.0
    }

    pub fn is_faithful(&self, n: usize) -> bool {
        self.0.len() == n && {
            let refs: Vec<&ZChar> = self.0.iter().collect();
            char_det(&refs).abs() == 1
        }
    }

    /// Determinant of the matrix of characters in canonical order.
    pub fn det(&self) -> i128 {
        let refs: Vec<&ZChar> = self.0.iter().collect();
        char_det(&refs)
    }

    fn dual_wedge(&self) -> Result<(i64, ExtMonomial)> {
        let refs: Vec<&ZChar> = self.0.iter().collect();
        let (_, dual) = z_dual_basis(&refs).ok_or(Error::NotABasis)?;
        ExtMonomial::from_wedge(dual)
    }

    pub fn map_chars(&self, f: impl Fn(&ZChar) -> ZChar) -> Result<ExtMonomial> {
        ExtMonomial::from_set(self.0.iter().map(f).collect())
    }
}

impl fmt::Debug for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|c| format!("{c:?}")).collect();
        write!(f, "{}", parts.join("∧"))
    }
}

/// Integer combination of canonical wedge monomials; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtPolynomial {
    n: usize,
    space: Space,
    terms: BTreeMap<ExtMonomial, i64>,
}

impl ExtPolynomial {
    pub fn zero(n: usize, space: Space) -> Self {
        ExtPolynomial { n, space, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&ExtMonomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &ExtMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: i64, m: ExtMonomial) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    /// Adds `coeff * (c_1 ∧ ... ∧ c_k)` for characters in the given order.
    pub fn add_wedge(&mut self, coeff: i64, chars: Vec<ZChar>) -> Result<()> {
        for c in &chars {
            if c.rank() != self.n {
                return Err(Error::CharacterLength { expected: self.n, got: c.rank() });
            }
        }
        let (sign, m) = ExtMonomial::from_wedge(chars)?;
        self.add_term(sign * coeff, m);
        Ok(())
    }

    pub fn from_terms(n: usize, space: Space, terms: impl IntoIterator<Item = (i64, ExtMonomial)>) -> Self {
        let mut p = ExtPolynomial::zero(n, space);
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn add(&self, other: &ExtPolynomial) -> Result<ExtPolynomial> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        if self.space != other.space {
            return Err(Error::SpaceMismatch { expected: self.space.as_str() });
        }
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(c, m.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> ExtPolynomial {
        ExtPolynomial::from_terms(self.n, self.space, self.terms.iter().map(|(m, &c)| (c * k, m.clone())))
    }

    fn check_top_degree(&self) -> Result<()> {
        match self.terms.keys().find(|m| m.degree() != self.n) {
            Some(m) => Err(Error::NotTopDegree { degree: m.degree(), rank: self.n }),
            None => Ok(()),
        }
    }

    /// True iff every monomial's characters form a basis of `Z^n` (det ±1).
    pub fn is_faithful(&self) -> Result<bool> {
        self.check_top_degree()?;
        Ok(self.terms.keys().all(|m| m.is_faithful(self.n)))
    }

    /// Dual polynomial; see the module docs for the sign rule.
    pub fn dual(&self) -> Result<ExtPolynomial> {
        self.check_top_degree()?;
        let mut out = ExtPolynomial::zero(self.n, self.space.flip());
        for (m, &c) in &self.terms {
            let (sign, dual) = m.dual_wedge()?;
            let det = match self.space {
                Space::Primal => m.det(),
                Space::Dual => dual.det(),
            } as i64;
            out.add_term(c * sign * det, dual);
        }
        Ok(out)
    }

    /// `d(s_1 ∧ ... ∧ s_k) = Σ (-1)^{i+1} s_1 ∧ ... ŝ_i ... ∧ s_k`, `d(s) = 1`, `d(1) = 0`.
    pub fn differential(&self) -> ExtPolynomial {
        let mut out = ExtPolynomial::zero(self.n, self.space);
        for (m, &c) in &self.terms {
            for skip in 0..m.degree() {
                let sign = if skip % 2 == 0 { 1 } else { -1 };
                let face: Vec<ZChar> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, ch)| ch.clone())
                    .collect();
                out.add_term(sign * c, ExtMonomial(face));
            }
        }
        out
    }

    /// Reduces coordinates and coefficients mod 2.
    ///
    /// Fails when a monomial stops being square-free (never happens for
    /// faithful input: a unimodular matrix stays invertible mod 2).
    pub fn mod2_reduce(&self) -> Result<Gf2Polynomial> {
        let mut out = Gf2Polynomial::zero(self.n, self.space);
        for (m, &c) in &self.terms {
            let chars = m
                .0
                .iter()
                .map(|ch| ch.reduce_mod2().ok_or(Error::NotSquareFree))
                .collect::<Result<Vec<_>>>()?;
            let reduced = Gf2Monomial::new(chars).map_err(|_| Error::NotSquareFree)?;
            if c.rem_euclid(2) == 1 {
                out.toggle(reduced);
            }
        }
        Ok(out)
    }

    /// Product of weight sets under the block embedding (`self` in the first
    /// `n1` coordinates). Coefficients multiply; no wedge reordering sign.
    pub fn block_product(&self, other: &ExtPolynomial) -> Result<ExtPolynomial> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch { expected: self.space.as_str() });
        }
        let n = self.n + other.n;
        let mut out = ExtPolynomial::zero(n, self.space);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let mut chars: Vec<ZChar> = a.0.iter().map(|c| c.embed(0, n)).collect();
                chars.extend(b.0.iter().map(|c| c.embed(self.n, n)));
                out.add_term(ca * cb, ExtMonomial::from_set(chars)?);
            }
        }
        Ok(out)
    }

    /// Applies a lattice map to every character, keeping coefficients.
    pub fn map_chars(&self, n: usize, f: impl Fn(&ZChar) -> ZChar) -> Result<ExtPolynomial> {
        let mut out = ExtPolynomial::zero(n, self.space);
        for (m, &c) in &self.terms {
            out.add_term(c, m.map_chars(&f)?);
        }
        Ok(out)
    }
}

impl fmt::Debug for ExtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}·{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
