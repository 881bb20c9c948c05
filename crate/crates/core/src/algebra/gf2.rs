//! Square-free polynomials over `GF(2)` in the characters of `(Z_2)^n`.

use std::collections::BTreeSet;
use std::fmt;

use super::character::{Gf2Char, Space};
use super::linalg::{gf2_dual_basis, gf2_is_basis};
use crate::error::{Error, Result};

/// A square-free product of distinct characters, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Monomial(Vec<Gf2Char>);

impl Gf2Monomial {
    pub fn new(mut chars: Vec<Gf2Char>) -> Result<Self> {
        chars.sort_unstable();
        if chars.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedCharacter);
        }
        Ok(Gf2Monomial(chars))
    }

    /// The empty product `1`.
    pub fn one() -> Self {
        Gf2Monomial(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn chars(&self) -> &[Gf2Char] {
        &self.0
    }

    pub fn is_faithful(&self, n: usize) -> bool {
        gf2_is_basis(&self.0, n)
    }

    pub fn dual(&self, n: usize) -> Result<Gf2Monomial> {
        let dual = gf2_dual_basis(&self.0, n).ok_or(Error::NotABasis)?;
        Gf2Monomial::new(dual)
    }

    /// Product of monomials; `None` if a character would repeat.
    pub fn mul(&self, other: &Gf2Monomial) -> Option<Gf2Monomial> {
        let mut chars = self.0.clone();
        chars.extend_from_slice(&other.0);
        Gf2Monomial::new(chars).ok()
    }

    /// Monomials obtained by deleting one character.
    pub fn faces(&self) -> impl Iterator<Item = Gf2Monomial> + '_ {
        (0..self.0.len()).map(move |skip| {
            Gf2Monomial(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, c)| *c)
                    .collect(),
            )
        })
    }

    pub fn map_chars(&self, f: impl Fn(Gf2Char) -> Gf2Char) -> Result<Gf2Monomial> {
        Gf2Monomial::new(self.0.iter().map(|&c| f(c)).collect())
    }
}

impl fmt::Debug for Gf2Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for c in &self.0 {
            write!(f, "{c:?}")?;
        }
        Ok(())
    }
}

/// A formal sum of square-free monomials with coefficients in `GF(2)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Polynomial {
    n: usize,
    space: Space,
    terms: BTreeSet<Gf2Monomial>,
}

impl Gf2Polynomial {
    pub fn zero(n: usize, space: Space) -> Self {
        Gf2Polynomial { n, space, terms: BTreeSet::new() }
    }

    /// Sums the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials(n: usize, space: Space, monomials: impl IntoIterator<Item = Gf2Monomial>) -> Self {
        let mut p = Gf2Polynomial::zero(n, space);
        for m in monomials {
            p.toggle(m);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn monomials(&self) -> impl ExactSizeIterator<Item = &Gf2Monomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Gf2Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Adds one copy of `m`.
    pub fn toggle(&mut self, m: Gf2Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add(&self, other: &Gf2Polynomial) -> Result<Gf2Polynomial> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        if self.space != other.space {
            return Err(Error::SpaceMismatch { expected: self.space.as_str() });
        }
        Ok(Gf2Polynomial {
            n: self.n,
            space: self.space,
            terms: self.terms.symmetric_difference(&other.terms).cloned().collect(),
        })
    }

    fn check_top_degree(&self) -> Result<()> {
        match self.terms.iter().find(|m| m.degree() != self.n) {
            Some(m) => Err(Error::NotTopDegree { degree: m.degree(), rank: self.n }),
            None => Ok(()),
        }
    }

    /// True iff every monomial's characters form a basis of `GF(2)^n`.
    pub fn is_faithful(&self) -> Result<bool> {
        self.check_top_degree()?;
        Ok(self.terms.iter().all(|m| m.is_faithful(self.n)))
    }

    /// Replaces every monomial by the product of its dual basis.
    pub fn dual(&self) -> Result<Gf2Polynomial> {
        self.check_top_degree()?;
        let mut out = Gf2Polynomial::zero(self.n, self.space.flip());
        for m in &self.terms {
            out.toggle(m.dual(self.n)?);
        }
        Ok(out)
    }

    /// The deletion differential; `d(s) = 1` and `d(1) = 0`.
    pub fn differential(&self) -> Gf2Polynomial {
        let mut out = Gf2Polynomial::zero(self.n, self.space);
        for m in &self.terms {
            for face in m.faces() {
                out.toggle(face);
            }
        }
        out
    }

    /// Product under the block embedding: `self` in coordinates `0..n1`,
    /// `other` in `n1..n1 + n2`.
    pub fn block_product(&self, other: &Gf2Polynomial) -> Result<Gf2Polynomial> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch { expected: self.space.as_str() });
        }
        let n = self.n + other.n;
        let mut out = Gf2Polynomial::zero(n, self.space);
        for a in &self.terms {
            for b in &other.terms {
                let shifted = b.map_chars(|c| c.shift(self.n))?;
                let m = a.mul(&shifted).expect("blocks are disjoint");
                out.toggle(m);
            }
        }
        Ok(out)
    }

    /// Applies a map to every character; the map must keep monomials square-free.
    pub fn map_chars(&self, n: usize, f: impl Fn(Gf2Char) -> Gf2Char) -> Result<Gf2Polynomial> {
        let mut out = Gf2Polynomial::zero(n, self.space);
        for m in &self.terms {
            out.toggle(m.map_chars(&f)?);
        }
        Ok(out)
    }
}

impl fmt::Debug for Gf2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|m| format!("{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
