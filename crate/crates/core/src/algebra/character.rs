//! Characters of `(Z_2)^n` and `T^n` (and their cocharacters).
//!
//! Both flavors are ordered lexicographically on their coordinate vectors.
//! That order fixes the canonical form of every monomial in the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank representable by a [`Gf2Char`].
pub const MAX_GF2_RANK: usize = 32;

/// Which side of the character/cocharacter pairing a polynomial lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Primal,
    Dual,
}

impl Space {
    pub fn flip(self) -> Space {
        match self {
            Space::Primal => Space::Dual,
            Space::Dual => Space::Primal,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Space::Primal => "primal",
            Space::Dual => "dual",
        }
    }
}

/// A nonzero vector of `GF(2)^n`, `n <= 32`.
///
/// Coordinate `i` is stored at bit `31 - i`, so the integer order of the
/// packed word is the lexicographic order of the coordinate vector and does
/// not depend on `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Char(u32);

#[inline]
pub(crate) fn coord_bit(i: usize) -> u32 {
    1u32 << (31 - i)
}

impl Gf2Char {
    /// Wraps packed bits; `None` for the zero vector.
    pub fn from_bits(bits: u32) -> Option<Self> {
        (bits != 0).then_some(Gf2Char(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Unit vector `e_i`.
    pub fn unit(i: usize) -> Self {
        Gf2Char(coord_bit(i))
    }

    /// Builds a character from residues; any odd value reads as 1.
    pub fn from_coords(coords: &[i64]) -> Result<Self> {
        if coords.len() > MAX_GF2_RANK {
            return Err(Error::CharacterLength { expected: MAX_GF2_RANK, got: coords.len() });
        }
        let bits = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| c.rem_euclid(2) == 1)
            .fold(0u32, |acc, (i, _)| acc | coord_bit(i));
        Gf2Char::from_bits(bits).ok_or(Error::ZeroCharacter)
    }

    pub fn coord(self, i: usize) -> u8 {
        ((self.0 >> (31 - i)) & 1) as u8
    }

    pub fn coords(self, n: usize) -> Vec<i64> {
        (0..n).map(|i| self.coord(i) as i64).collect()
    }

    /// Largest coordinate index that is set, plus one.
    pub fn support_len(self) -> usize {
        32 - self.0.trailing_zeros() as usize
    }

    /// The pairing `<self, other>` in `GF(2)`.
    pub fn pair(self, other: Gf2Char) -> u8 {
        ((self.0 & other.0).count_ones() & 1) as u8
    }

    /// Sum in `GF(2)^n`; `None` when the result is zero.
    pub fn add(self, other: Gf2Char) -> Option<Gf2Char> {
        Gf2Char::from_bits(self.0 ^ other.0)
    }

    /// Moves coordinates `0..len` to `offset..offset + len`.
    pub fn shift(self, offset: usize) -> Gf2Char {
        Gf2Char(self.0 >> offset)
    }

    /// All nonzero vectors of `GF(2)^n` in increasing order.
    pub fn all(n: usize) -> Vec<Gf2Char> {
        let mut out: Vec<Gf2Char> = (1u64..(1u64 << n))
            .map(|low| {
                let bits = (0..n)
                    .filter(|&i| low & (1 << i) != 0)
                    .fold(0u32, |acc, i| acc | coord_bit(i));
                Gf2Char(bits)
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Debug for Gf2Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.support_len().max(1);
        write!(f, "(")?;
        for i in 0..n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.coord(i))?;
        }
        write!(f, ")")
    }
}

/// A nonzero vector of `Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZChar(Vec<i64>);

impl ZChar {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.iter().all(|&c| c == 0) {
            return Err(Error::ZeroCharacter);
        }
        Ok(ZChar(coords))
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ZChar(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> ZChar {
        ZChar(self.0.iter().map(|c| -c).collect())
    }

    pub fn pair(&self, other: &ZChar) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// Coordinate-wise reduction mod 2; `None` if every coordinate is even.
    pub fn reduce_mod2(&self) -> Option<Gf2Char> {
        Gf2Char::from_coords(&self.0).ok()
    }

    /// Places this character in coordinates `offset..offset + rank` of `Z^total`.
    pub fn embed(&self, offset: usize, total: usize) -> ZChar {
        let mut v = vec![0; total];
        v[offset..offset + self.0.len()].copy_from_slice(&self.0);
        ZChar(v)
    }

    /// `Some(k)` when `self - other = k * dir`.
    pub fn congruence_multiple(&self, other: &ZChar, dir: &ZChar) -> Option<i64> {
        let diff: Vec<i64> = self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect();
        let pivot = dir.0.iter().position(|&c| c != 0)?;
        if diff[pivot] % dir.0[pivot] != 0 {
            return None;
        }
        let k = diff[pivot] / dir.0[pivot];
        diff.iter().zip(&dir.0).all(|(d, a)| *d == k * a).then_some(k)
    }
}

impl fmt::Debug for ZChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_order_is_lexicographic() {
        let a = Gf2Char::from_coords(&[1, 0]).unwrap();
        let b = Gf2Char::from_coords(&[0, 1]).unwrap();
        let c = Gf2Char::from_coords(&[1, 1]).unwrap();
        assert!(b < a && a < c);
        assert_eq!(Gf2Char::all(2), vec![b, a, c]);
        assert_eq!(c.coords(2), vec![1, 1]);
    }

    #[test]
    fn zero_characters_are_rejected() {
        assert_eq!(Gf2Char::from_coords(&[0, 2]), Err(Error::ZeroCharacter));
        assert_eq!(ZChar::new(vec![0, 0]), Err(Error::ZeroCharacter));
    }

    #[test]
    fn congruence_multiple() {
        let a = ZChar::new(vec![1, 2]).unwrap();
        let b = ZChar::new(vec![-1, 2]).unwrap();
        let x = ZChar::unit(2, 0);
        assert_eq!(a.congruence_multiple(&b, &x), Some(2));
        assert_eq!(a.congruence_multiple(&b, &ZChar::unit(2, 1)), None);
    }
}
