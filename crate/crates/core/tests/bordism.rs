use bordism_core::algebra::kernel::{kernel_space, WindowLimits};
use bordism_core::algebra::{ExtMonomial, ZChar};
use bordism_core::bordism::{surjectivity_probe, BordismClass, ClassFlavor};
use bordism_core::examples;
use bordism_core::polytope::torus_graph_from_pair;
use bordism_core::sampling;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn class_of(cp: &bordism_core::polytope::ColoredPolytope) -> BordismClass {
    BordismClass::unitary(torus_graph_from_pair(cp).unwrap().polynomial().unwrap()).unwrap()
}

#[test]
fn cp1_plus_cp1() {
    let cp1 = class_of(&examples::cp1());
    let BordismClass::Unitary(g) = cp1.add(&cp1).unwrap() else { unreachable!() };
    let x = ZChar::new(vec![1]).unwrap();
    assert_eq!(g.coefficient(&ExtMonomial::from_set(vec![x.clone()]).unwrap()), 2);
    assert_eq!(g.coefficient(&ExtMonomial::from_set(vec![x.neg()]).unwrap()), 2);
    assert_eq!(g.len(), 2);
}

#[test]
fn complex_lines_reduce_to_zero() {
    let cp1 = class_of(&examples::cp1());
    assert!(cp1.reduce().unwrap().is_zero());
    assert!(cp1.multiply(&cp1).unwrap().reduce().unwrap().is_zero());
    assert!(class_of(&examples::cp1_squared()).reduce().unwrap().is_zero());
}

#[test]
fn rank_one_probe_is_vacuous() {
    let report = surjectivity_probe(1, 1, WindowLimits::default()).unwrap();
    assert_eq!(report.kernel_dim, 0);
    assert!(report.entries.is_empty());
    assert!(report.complete());
}

#[test]
fn zero_classes() {
    let z = BordismClass::zero(ClassFlavor::Unitary, 2);
    assert!(z.is_zero());
    assert_eq!(z.rank(), 2);
    let cp2 = class_of(&examples::cp2());
    assert_eq!(cp2.add(&z).unwrap(), cp2);
    assert!(cp2.add(&cp2.multiply(&BordismClass::zero(ClassFlavor::Unitary, 0)).unwrap()).is_ok());
}

fn pair(seed: u64) -> (BordismClass, BordismClass, BordismClass) {
    let mut rng = StdRng::seed_from_u64(seed);
    if rng.gen_bool(0.5) {
        let spaces = [kernel_space(1, 5).unwrap(), kernel_space(2, 5).unwrap()];
        let pick = |rng: &mut StdRng| sampling::random_unoriented_class(&spaces[rng.gen_range(0..2)], rng).unwrap();
        let a = pick(&mut rng);
        let b = pick(&mut rng);
        let c = sampling::random_unoriented_class(&kernel_space(b.rank(), 5).unwrap(), &mut rng).unwrap();
        (a, b, c)
    } else {
        let a = sampling::random_unitary_class(rng.gen_range(1..=2), &mut rng).unwrap();
        let b = sampling::random_unitary_class(rng.gen_range(1..=2), &mut rng).unwrap();
        let c = sampling::random_unitary_class(b.rank(), &mut rng).unwrap();
        (a, b, c)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative_and_distributive(seed in any::<u64>()) {
        let (a, b, c) = pair(seed);
        prop_assert_eq!(
            a.multiply(&b).unwrap().multiply(&c).unwrap(),
            a.multiply(&b.multiply(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.multiply(&b.add(&c).unwrap()).unwrap(),
            a.multiply(&b).unwrap().add(&a.multiply(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn swapping_twice_is_the_identity(seed in any::<u64>()) {
        let (a, b, _) = pair(seed);
        let ab = a.multiply(&b).unwrap();
        let ba = ab.swap_conjugate(a.rank()).unwrap();
        prop_assert_eq!(&ba, &b.multiply(&a).unwrap());
        prop_assert_eq!(ba.swap_conjugate(b.rank()).unwrap(), ab);
    }

    #[test]
    fn reduction_is_a_ring_map(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let a = sampling::random_unitary_class(n, &mut rng).unwrap();
        let b = sampling::random_unitary_class(n, &mut rng).unwrap();
        let c = sampling::random_unitary_class(rng.gen_range(1..=2), &mut rng).unwrap();
        let r = |x: &BordismClass| x.reduce().unwrap();
        prop_assert_eq!(r(&a.add(&b).unwrap()), r(&a).add(&r(&b)).unwrap());
        prop_assert_eq!(r(&a.multiply(&c).unwrap()), r(&a).multiply(&r(&c)).unwrap());
        prop_assert_eq!(r(&a).flavor(), ClassFlavor::Unoriented);
    }
}
