//! Symmetric functions as integer combinations of monomial symmetric functions.

use super::poly::{Coeff, MPoly};
use crate::error::{Error, Result};

/// `Σ c_μ m_μ`; partitions are stored with positive parts in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricFunction {
    terms: Vec<(i64, Vec<u32>)>,
}

impl SymmetricFunction {
    pub fn from_terms(terms: Vec<(i64, Vec<u32>)>) -> Result<Self> {
        let mut out = Vec::with_capacity(terms.len());
        for (c, mut parts) in terms {
            if parts.contains(&0) {
                return Err(Error::Invalid("partition parts must be positive".into()));
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            out.push((c, parts));
        }
        Ok(SymmetricFunction { terms: out })
    }

    /// The monomial symmetric function `m_μ`.
    pub fn monomial(parts: Vec<u32>) -> Result<Self> {
        SymmetricFunction::from_terms(vec![(1, parts)])
    }

    /// The constant `1 = m_∅`.
    pub fn one() -> Self {
        SymmetricFunction { terms: vec![(1, Vec::new())] }
    }

    /// The elementary symmetric function `e_k = m_{1^k}`.
    pub fn elementary(k: usize) -> Self {
        SymmetricFunction { terms: vec![(1, vec![1; k])] }
    }

    pub fn terms(&self) -> &[(i64, Vec<u32>)] {
        &self.terms
    }

    /// Largest degree of a term.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(_, p)| p.iter().sum()).max().unwrap_or(0)
    }

    /// Substitutes the given polynomials for the variables.
    pub fn evaluate<C: Coeff>(&self, nvars: usize, args: &[MPoly<C>]) -> MPoly<C> {
        let mut out = MPoly::zero(nvars);
        for (c, parts) in &self.terms {
            if parts.len() > args.len() {
                continue;
            }
            let mut exps = parts.clone();
            exps.resize(args.len(), 0);
            for perm in distinct_permutations(exps) {
                let term = perm
                    .iter()
                    .zip(args)
                    .filter(|(&e, _)| e > 0)
                    .fold(MPoly::one(nvars), |acc, (&e, a)| acc.mul(&a.pow(e)));
                out = out.add(&term.scale(&C::from_i64(*c)));
            }
        }
        out
    }
}

/// Every distinct rearrangement of `v`, in lexicographic order.
fn distinct_permutations(mut v: Vec<u32>) -> Vec<Vec<u32>> {
    v.sort_unstable();
    let mut out = vec![v.clone()];
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("v[i] qualifies");
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
}

/// All partitions of every degree `0..=max_degree` with at most `max_parts` parts.
pub fn partitions_up_to(max_degree: u32, max_parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, parts_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..=max_degree {
        go(d, d, max_parts, &mut Vec::new(), &mut out);
    }
    out
}

/// `m_μ` for every partition from [`partitions_up_to`].
pub fn monomial_basis(max_degree: u32, max_parts: usize) -> Vec<SymmetricFunction> {
    partitions_up_to(max_degree, max_parts)
        .into_iter()
        .map(|p| SymmetricFunction { terms: vec![(1, p)] })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(vec![1, 0, 0]), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(distinct_permutations(vec![2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(vec![]).len(), 1);
    }

    #[test]
    fn partition_counts() {
        // p(0..=4) = 1, 1, 2, 3, 5
        assert_eq!(partitions_up_to(4, 4).len(), 12);
        // at most two parts: 1, 1, 2, 2, 3
        assert_eq!(partitions_up_to(4, 2).len(), 9);
    }

    #[test]
    fn evaluation_in_two_variables() {
        type Q = MPoly<BigRational>;
        let x = Q::linear(&[1, 0]);
        let y = Q::linear(&[0, 1]);
        let args = [x.clone(), y.clone()];
        // m_(2,1)(x, y) = x^2 y + x y^2
        let m21 = SymmetricFunction::monomial(vec![1, 2]).unwrap().evaluate(2, &args);
        assert_eq!(m21, x.pow(2).mul(&y).add(&x.mul(&y.pow(2))));
        // e_2 = x y; e_3 vanishes in two variables
        assert_eq!(SymmetricFunction::elementary(2).evaluate(2, &args), x.mul(&y));
        assert!(SymmetricFunction::elementary(3).evaluate(2, &args).is_zero());
        assert_eq!(SymmetricFunction::one().evaluate(2, &args), Q::one(2));
        assert!(SymmetricFunction::monomial(vec![0]).is_err());
    }
}
