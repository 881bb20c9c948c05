use bordism_core::algebra::kernel::{faithful_gf2_monomials, kernel_space};
use bordism_core::algebra::linalg::gf2_dual_basis;
use bordism_core::algebra::{in_image, in_image_unitary, ExtMonomial, ExtPolynomial, Gf2Char, Gf2Monomial, Gf2Polynomial, Space, ZChar};
use bordism_core::sampling;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Random square-free `GF(2)` polynomial of rank `n` with monomials of any degree `<= n`.
fn random_gf2(n: usize, rng: &mut StdRng) -> Gf2Polynomial {
    let all = Gf2Char::all(n);
    let monomials = (0..rng.gen_range(0..8)).map(|_| {
        let k = rng.gen_range(0..=n);
        Gf2Monomial::new(all.choose_multiple(rng, k).copied().collect()).unwrap()
    });
    Gf2Polynomial::from_monomials(n, Space::Primal, monomials)
}

/// Rank of a dense `GF(2)` matrix, eliminating columns from the last to the first.
fn rank_reverse_pivots(mut rows: Vec<Vec<bool>>, cols: usize) -> usize {
    let mut rank = 0;
    for c in (0..cols).rev() {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= *y);
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn kernel_dims_match_an_independent_elimination() {
    for n in 1..=3 {
        let monomials = faithful_gf2_monomials(n);
        let images: Vec<Gf2Polynomial> = monomials
            .iter()
            .map(|m| Gf2Polynomial::from_monomials(n, Space::Primal, [m.clone()]).dual().unwrap().differential())
            .collect();
        let mut faces: Vec<Gf2Monomial> = images.iter().flat_map(|p| p.monomials().cloned()).collect();
        faces.sort();
        faces.dedup();
        let rows: Vec<Vec<bool>> =
            faces.iter().map(|f| images.iter().map(|p| p.contains(f)).collect()).collect();
        let nullity = monomials.len() - rank_reverse_pivots(rows, monomials.len());
        assert_eq!(kernel_space(n, 5).unwrap().dim, nullity, "n = {n}");
    }
}

#[test]
fn dual_rows_invert_the_character_matrix() {
    for n in 1..=4 {
        for m in faithful_gf2_monomials(n) {
            let dual = gf2_dual_basis(m.chars(), n).unwrap();
            for (i, a) in m.chars().iter().enumerate() {
                for (j, b) in dual.iter().enumerate() {
                    assert_eq!(a.pair(*b), u8::from(i == j));
                }
            }
            assert!(m.dual(n).unwrap().is_faithful(n));
        }
    }
}

#[test]
fn single_monomial_is_rejected_and_cp1_accepted() {
    let x = ZChar::new(vec![1]).unwrap();
    let single = ExtPolynomial::from_terms(1, Space::Primal, [(1, ExtMonomial::from_set(vec![x.clone()]).unwrap())]);
    assert_eq!(in_image_unitary(&single).reason.as_deref(), Some("d(g*) != 0"));
    let mut cp1 = single.clone();
    cp1.add_term(1, ExtMonomial::from_set(vec![x.neg()]).unwrap());
    assert!(in_image_unitary(&cp1).in_image);
    let doubled = cp1.add(&cp1).unwrap();
    assert!(in_image_unitary(&doubled).in_image);
    assert_eq!(doubled.coefficient(&ExtMonomial::from_set(vec![x]).unwrap()), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_squared_vanishes(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = StdRng::seed_from_u64(seed);
        prop_assert!(random_gf2(n, &mut rng).differential().differential().is_zero());
        prop_assert!(sampling::random_ext(n, 6, 2, &mut rng).differential().differential().is_zero());
    }

    #[test]
    fn dual_is_an_involution(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = sampling::random_faithful_gf2(n, 6, Space::Primal, &mut rng);
        prop_assert_eq!(g.dual().unwrap().dual().unwrap(), g);
        let e = sampling::random_faithful_ext(n, 6, Space::Dual, &mut rng);
        prop_assert_eq!(e.dual().unwrap().dual().unwrap(), e);
    }

    #[test]
    fn dual_ignores_input_order(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut chars = sampling::random_unimodular(n, 2, &mut rng);
        let a = ExtPolynomial::from_terms(n, Space::Primal, [(1, ExtMonomial::from_set(chars.clone()).unwrap())]);
        chars.shuffle(&mut rng);
        let b = ExtPolynomial::from_terms(n, Space::Primal, [(1, ExtMonomial::from_set(chars).unwrap())]);
        prop_assert_eq!(b.dual().unwrap(), a.dual().unwrap());
    }

    #[test]
    fn reduction_commutes_with_dual_and_d(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = sampling::random_faithful_ext(n, 6, Space::Primal, &mut rng);
        prop_assert_eq!(g.dual().unwrap().mod2_reduce().unwrap(), g.mod2_reduce().unwrap().dual().unwrap());
        prop_assert_eq!(g.differential().mod2_reduce().unwrap(), g.mod2_reduce().unwrap().differential());
    }

    #[test]
    fn unitary_membership_survives_reduction(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let class = sampling::random_unitary_class(n, &mut rng).unwrap();
        let bordism_core::bordism::BordismClass::Unitary(g) = class else { unreachable!() };
        prop_assert!(in_image_unitary(&g).in_image);
        let r = g.mod2_reduce().unwrap();
        prop_assert!(r.is_zero() || in_image(&r).in_image);
    }
}
