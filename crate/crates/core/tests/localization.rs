use bordism_core::algebra::kernel::kernel_space;
use bordism_core::algebra::Space;
use bordism_core::bordism::BordismClass;
use bordism_core::examples;
use bordism_core::localization::{
    equivariant_chern_number, integrality_check_gf2, integrality_check_z, monomial_basis, vanishing_test, FixedPointData,
    SymmetricFunction,
};
use bordism_core::polytope::torus_graph_from_pair;
use bordism_core::sampling;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn unitary(seed: u64, n: usize) -> bordism_core::algebra::ExtPolynomial {
    let mut rng = StdRng::seed_from_u64(seed);
    match sampling::random_unitary_class(n, &mut rng).unwrap() {
        BordismClass::Unitary(g) => g,
        BordismClass::Unoriented(_) => unreachable!(),
    }
}

#[test]
fn basic_manifolds_have_nonvanishing_numbers() {
    for cp in [examples::cp1(), examples::cp2(), examples::cp1_squared()] {
        let g = torus_graph_from_pair(&cp).unwrap().polynomial().unwrap();
        let n = g.rank() as u32;
        assert!(!vanishing_test(&g, 2 * n).unwrap());
    }
}

#[test]
fn signed_count_is_the_top_number() {
    let g = torus_graph_from_pair(&examples::cp2()).unwrap().polynomial().unwrap();
    let data = FixedPointData::from_ext(&g).unwrap();
    // c_1^2 and c_2 of the projective plane
    let c11 = equivariant_chern_number(&data, 2, 0).unwrap();
    let c2 = equivariant_chern_number(&data, 0, 1).unwrap();
    assert_eq!(c11.value(), Some(BigRational::from_integer(9.into())));
    assert_eq!(c2.value(), Some(BigRational::from_integer(3.into())));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn top_elementary_function_is_always_integral(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let e_n = SymmetricFunction::elementary(n);
        let g = sampling::random_faithful_gf2(n, 6, Space::Primal, &mut rng);
        prop_assert!(integrality_check_gf2(&FixedPointData::from_gf2(&g).unwrap(), &e_n).unwrap());
        let z = sampling::random_faithful_ext(n, 6, Space::Primal, &mut rng);
        let data = FixedPointData::from_ext(&z).unwrap();
        prop_assert!(integrality_check_z(&data, &e_n, true).unwrap());
        prop_assert!(integrality_check_z(&data, &e_n, false).unwrap());
    }

    #[test]
    fn kernel_elements_integrate_every_symmetric_function(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let space = kernel_space(n, 5).unwrap();
        let g = sampling::random_kernel_gf2(&space, &mut rng);
        let data = FixedPointData::from_gf2(&g).unwrap();
        for f in monomial_basis(n as u32 + 1, n) {
            prop_assert!(integrality_check_gf2(&data, &f).unwrap());
        }
    }

    #[test]
    fn chern_numbers_have_the_expected_degree(seed in any::<u64>(), n in 1usize..=3, i in 0u32..=4, j in 0u32..=2) {
        let g = unitary(seed, n);
        let data = FixedPointData::from_ext(&g).unwrap();
        let c = equivariant_chern_number(&data, i, j).unwrap();
        let q = c.sum.quotient.expect("kernel elements give polynomials");
        prop_assert!(q.is_homogeneous());
        if i + 2 * j < n as u32 {
            prop_assert!(q.is_zero());
        } else if let Some(d) = q.degree() {
            prop_assert_eq!(d, i + 2 * j - n as u32);
        }
        prop_assert!(q.is_integral());
    }
}
