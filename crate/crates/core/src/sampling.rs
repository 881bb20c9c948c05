//! Random inputs for property checks and the verification suite.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::character::{Space, ZChar};
use crate::algebra::ext::{ExtMonomial, ExtPolynomial};
use crate::algebra::gf2::Gf2Polynomial;
use crate::algebra::kernel::{faithful_gf2_monomials, KernelSpace};
use crate::bordism::BordismClass;
use crate::error::Result;
use crate::polytope::{
    connected_sum, random_gf2_coloring, random_z_coloring_within, simplex_product, torus_graph_from_pair, ColoredPolytope,
    SimplePolytope,
};

/// A random composition of `n` into positive parts.
pub fn random_composition<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut rest = n;
    while rest > 0 {
        let p = rng.gen_range(1..=rest);
        parts.push(p);
        rest -= p;
    }
    parts
}

/// A product of simplices of dimension `n`, sometimes summed with a second one.
pub fn random_simple_polytope<R: Rng>(n: usize, rng: &mut R) -> Result<SimplePolytope> {
    let p = simplex_product(&random_composition(n, rng))?;
    if !rng.gen_bool(0.3) {
        return Ok(p);
    }
    let q = simplex_product(&random_composition(n, rng))?;
    let (v1, v2) = (rng.gen_range(0..p.num_vertices()), rng.gen_range(0..q.num_vertices()));
    let pairing = random_pairing(&p, v1, &q, v2, rng);
    Ok(connected_sum(&p, v1, &q, v2, &pairing)?.polytope)
}

/// A random `GF(2)^n`-colored polytope of dimension `n`.
pub fn random_small_cover<R: Rng>(n: usize, rng: &mut R) -> Result<ColoredPolytope> {
    loop {
        let p = random_simple_polytope(n, rng)?;
        let fixed = vec![None; p.num_facets()];
        if let Some(colors) = random_gf2_coloring(&p, &fixed, rng)? {
            return ColoredPolytope::gf2(p, colors);
        }
    }
}

/// Placements tried on one polytope before drawing another.
const COLORING_BUDGET: usize = 20_000;

/// A random quasitoric pair of dimension `n` with entries in `[-weight_bound, weight_bound]`.
pub fn random_quasitoric<R: Rng>(n: usize, weight_bound: i64, rng: &mut R) -> Result<ColoredPolytope> {
    loop {
        let p = random_simple_polytope(n, rng)?;
        let fixed = vec![None; p.num_facets()];
        if let Some(colors) = random_z_coloring_within(&p, weight_bound, &fixed, COLORING_BUDGET, rng)? {
            return ColoredPolytope::z(p, colors);
        }
    }
}

/// A sum of up to `max_terms` random faithful monomials of rank `n`.
pub fn random_faithful_gf2<R: Rng>(n: usize, max_terms: usize, space: Space, rng: &mut R) -> Gf2Polynomial {
    let all = faithful_gf2_monomials(n);
    let k = rng.gen_range(1..=max_terms.max(1));
    Gf2Polynomial::from_monomials(n, space, (0..k).map(|_| all[rng.gen_range(0..all.len())].clone()))
}

/// A random nonempty subset sum of the kernel basis; zero when the kernel is.
pub fn random_kernel_gf2<R: Rng>(space: &KernelSpace, rng: &mut R) -> Gf2Polynomial {
    let mut g = Gf2Polynomial::zero(space.n, Space::Primal);
    if space.basis.is_empty() {
        return g;
    }
    while g.is_zero() {
        for b in &space.basis {
            if rng.gen_bool(0.5) {
                g = g.add(b).expect("same rank");
            }
        }
    }
    g
}

/// A random basis of `Z^n`: the identity under random elementary row operations.
pub fn random_unimodular<R: Rng>(n: usize, max_abs: i64, rng: &mut R) -> Vec<ZChar> {
    let mut rows: Vec<Vec<i64>> = (0..n).map(|i| ZChar::unit(n, i).coords().to_vec()).collect();
    for _ in 0..3 * n {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let k = if rng.gen_bool(0.5) { 1 } else { -1 };
        let next: Vec<i64> = rows[i].iter().zip(&rows[j]).map(|(a, b)| a + k * b).collect();
        if next.iter().all(|c| c.abs() <= max_abs) {
            rows[i] = next;
        }
    }
    for r in rows.iter_mut() {
        if rng.gen_bool(0.5) {
            r.iter_mut().for_each(|c| *c = -*c);
        }
    }
    rows.into_iter().map(|r| ZChar::new(r).expect("rows of an invertible matrix")).collect()
}

/// A random faithful exterior polynomial of rank `n`.
pub fn random_faithful_ext<R: Rng>(n: usize, max_terms: usize, space: Space, rng: &mut R) -> ExtPolynomial {
    let mut g = ExtPolynomial::zero(n, space);
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let m = ExtMonomial::from_set(random_unimodular(n, 2, rng)).expect("basis vectors are distinct");
        g.add_term(rng.gen_range(-3..=3), m);
    }
    g
}

/// A random exterior polynomial of rank `n` with monomials of any degree `<= n`.
pub fn random_ext<R: Rng>(n: usize, max_terms: usize, weight_bound: i64, rng: &mut R) -> ExtPolynomial {
    let mut g = ExtPolynomial::zero(n, Space::Primal);
    for _ in 0..rng.gen_range(0..=max_terms) {
        let degree = rng.gen_range(0..=n);
        let mut chars: Vec<ZChar> = Vec::new();
        while chars.len() < degree {
            let coords: Vec<i64> = (0..n).map(|_| rng.gen_range(-weight_bound..=weight_bound)).collect();
            if let Ok(c) = ZChar::new(coords) {
                if !chars.contains(&c) {
                    chars.push(c);
                }
            }
        }
        g.add_wedge(rng.gen_range(-3..=3), chars).expect("distinct characters of rank n");
    }
    g
}

/// An unoriented class: a kernel combination or the tangent data of a small cover.
pub fn random_unoriented_class<R: Rng>(space: &KernelSpace, rng: &mut R) -> Result<BordismClass> {
    let g = if rng.gen_bool(0.5) {
        random_kernel_gf2(space, rng)
    } else {
        random_small_cover(space.n, rng)?.coloring_polynomial()?.dual()?
    };
    BordismClass::unoriented(g)
}

/// A unitary class: a signed sum of torus polynomials of quasitoric pairs.
pub fn random_unitary_class<R: Rng>(n: usize, rng: &mut R) -> Result<BordismClass> {
    let mut g = ExtPolynomial::zero(n, Space::Primal);
    for _ in 0..rng.gen_range(1..=2) {
        let pair = random_quasitoric(n, 1, rng)?;
        let term = torus_graph_from_pair(&pair)?.polynomial()?;
        g = g.add(&term.scale(if rng.gen_bool(0.5) { 1 } else { -1 }))?;
    }
    BordismClass::unitary(g)
}

/// Picks a random vertex-facet pairing for a connected sum at `v1` and `v2`.
pub fn random_pairing<R: Rng>(p1: &SimplePolytope, v1: usize, p2: &SimplePolytope, v2: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let mut at2 = p2.vertices()[v2].clone();
    at2.shuffle(rng);
    p1.vertices()[v1].iter().copied().zip(at2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::kernel::{in_image, in_image_unitary, kernel_space};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn samplers_produce_valid_objects() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=3 {
            assert_eq!(random_composition(n, &mut rng).iter().sum::<usize>(), n);
            let basis = random_unimodular(n, 2, &mut rng);
            assert!(ExtMonomial::from_set(basis).unwrap().is_faithful(n));
            let g = random_small_cover(n, &mut rng).unwrap().coloring_polynomial().unwrap().dual().unwrap();
            assert!(in_image(&g).in_image);
            assert!(random_faithful_ext(n, 4, Space::Primal, &mut rng).is_faithful().unwrap());
            assert!(random_faithful_gf2(n, 4, Space::Dual, &mut rng).is_faithful().unwrap());
        }
        let class = random_unitary_class(2, &mut rng).unwrap();
        assert_eq!(class.rank(), 2);
        let space = kernel_space(3, 5).unwrap();
        let g = random_kernel_gf2(&space, &mut rng);
        assert!(!g.is_zero() && in_image(&g).in_image);
        let pair = random_quasitoric(2, 1, &mut rng).unwrap();
        assert!(in_image_unitary(&torus_graph_from_pair(&pair).unwrap().polynomial().unwrap()).in_image);
    }
}
