//! The bundled verification suite: ten numbered checks with fixed tolerances.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::algebra::character::Space;
use crate::algebra::kernel::{in_image, in_image_unitary, kernel_space, UnitaryWindow, WindowLimits, DEFAULT_MAX_RANK};
use crate::bordism::{surjectivity_probe, BordismClass};
use crate::error::Result;
use crate::examples;
use crate::localization::{
    equivariant_chern_number, integrality_check_gf2, min_fixed_points_bound, monomial_basis, FixedPointData,
};
use crate::polytope::{
    bott_generators, connected_sum, one_skeleton, product, random_gf2_coloring, span_rank, torus_graph_from_pair,
    ColoredPolytope, DEFAULT_BOTT_MAX_RANK,
};
use crate::sampling;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Wall time; left out of JSON so reports stay deterministic.
    #[serde(skip)]
    pub seconds: f64,
}

impl CriterionReport {
    /// One human-readable line.
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("criterion {:>2} {:<28} {status} ({:.2}s) {}", self.id, self.name, self.seconds, self.detail)
    }
}

pub const NAMES: [&str; 10] = [
    "dimensions",
    "generator-span",
    "rp2-chain",
    "equivalence-sampling",
    "product-and-sum-formulas",
    "unitary-oracles",
    "chern-numbers",
    "fixed-point-lower-bound",
    "reduction-homomorphism",
    "noncommutativity",
];

/// Runs criterion `id` (1 to 10); errors count as failures.
pub fn run_criterion(id: u8, seed: u64) -> CriterionReport {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(seed ^ u64::from(id));
    let outcome = match id {
        1 => dimensions(),
        2 => generator_span(),
        3 => rp2_chain(),
        4 => equivalence_sampling(&mut rng),
        5 => formulas(&mut rng),
        6 => unitary_oracles(&mut rng),
        7 => chern_numbers(),
        8 => fixed_point_bound(),
        9 => reduction(&mut rng),
        10 => noncommutativity(&mut rng),
        _ => Ok((false, format!("no criterion {id}"))),
    };
    let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionReport {
        id,
        name: NAMES.get(usize::from(id).wrapping_sub(1)).copied().unwrap_or("unknown"),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    (1..=10).map(|id| run_criterion(id, seed)).collect()
}

type Outcome = Result<(bool, String)>;

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, Duration)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed()))
}

fn dimensions() -> Outcome {
    let expected = [0, 1, 13, 510];
    let mut dims = Vec::new();
    let mut slowest = Duration::ZERO;
    for n in 1..=4 {
        let (space, t) = timed(|| kernel_space(n, DEFAULT_MAX_RANK))?;
        dims.push(space.dim);
        if n == 4 {
            slowest = t;
        }
    }
    let ok = dims == expected && slowest < Duration::from_secs(10);
    Ok((ok, format!("dims {dims:?}, expected {expected:?}; n=4 took {:.2}s (limit 10s)", slowest.as_secs_f64())))
}

fn generator_span() -> Outcome {
    let mut ranks = Vec::new();
    let mut t4 = Duration::ZERO;
    for n in [3, 4] {
        let (rank, t) = timed(|| {
            let polys: Vec<_> = bott_generators(n, DEFAULT_BOTT_MAX_RANK)?.into_iter().map(|g| g.polynomial).collect();
            span_rank(&polys)
        })?;
        ranks.push(rank);
        t4 = t;
    }
    let ok = ranks == [13, 510] && t4 < Duration::from_secs(300);
    Ok((ok, format!("span ranks {ranks:?}, expected [13, 510]; n=4 took {:.2}s (limit 300s)", t4.as_secs_f64())))
}

fn rp2_chain() -> Outcome {
    let cp = examples::rp2();
    let g = cp.coloring_polynomial()?.dual()?;
    let image = in_image(&g).in_image;
    let skeleton = one_skeleton(&cp)?.polynomial() == g;
    let data = FixedPointData::from_gf2(&g)?;
    let basis = monomial_basis(6, 2);
    let mut failures = 0;
    for f in &basis {
        if !integrality_check_gf2(&data, f)? {
            failures += 1;
        }
    }
    let ok = image && skeleton && failures == 0;
    Ok((
        ok,
        format!("in_image {image}, equals 1-skeleton {skeleton}, integrality failures {failures}/{}", basis.len()),
    ))
}

fn equivalence_sampling(rng: &mut StdRng) -> Outcome {
    let space = kernel_space(3, DEFAULT_MAX_RANK)?;
    let basis = monomial_basis(6, 3);
    let (mut in_kernel, mut forward, mut converse) = (0, 0, 0);
    let samples = 240;
    for k in 0..samples {
        let g = if k % 2 == 0 {
            sampling::random_kernel_gf2(&space, rng)
        } else {
            sampling::random_faithful_gf2(3, 10, Space::Primal, rng)
        };
        let member = in_image(&g).in_image;
        let data = FixedPointData::from_gf2(&g)?;
        let mut integral = true;
        for f in &basis {
            if !integrality_check_gf2(&data, f)? {
                integral = false;
                break;
            }
        }
        in_kernel += usize::from(member);
        forward += usize::from(member && !integral);
        converse += usize::from(!member && integral);
    }
    Ok((
        forward == 0,
        format!(
            "{samples} samples, {in_kernel} in image; forward disagreements {forward}, converse disagreements {converse}"
        ),
    ))
}

fn formulas(rng: &mut StdRng) -> Outcome {
    let mut product_failures = 0;
    for _ in 0..50 {
        let n1 = rng.gen_range(1..=3);
        let n2 = rng.gen_range(1..=4 - n1);
        let a = sampling::random_small_cover(n1, rng)?;
        let b = sampling::random_small_cover(n2, rng)?;
        let mut colors = a.coloring().reduce_mod2()?;
        colors.extend(b.coloring().reduce_mod2()?.iter().map(|c| c.shift(n1)));
        let prod = ColoredPolytope::gf2(product(a.polytope(), b.polytope()), colors)?;
        if prod.coloring_polynomial()? != a.coloring_polynomial()?.block_product(&b.coloring_polynomial()?)? {
            product_failures += 1;
        }
    }
    let mut sum_failures = 0;
    let mut sums = 0;
    while sums < 50 {
        let n = rng.gen_range(1..=4);
        let a = sampling::random_small_cover(n, rng)?;
        let p2 = sampling::random_simple_polytope(n, rng)?;
        let v1 = rng.gen_range(0..a.polytope().num_vertices());
        let v2 = rng.gen_range(0..p2.num_vertices());
        let pairing = sampling::random_pairing(a.polytope(), v1, &p2, v2, rng);
        let ca = a.coloring().reduce_mod2()?;
        let mut fixed = vec![None; p2.num_facets()];
        for &(f1, f2) in &pairing {
            fixed[f2] = Some(ca[f1]);
        }
        let Some(cb) = random_gf2_coloring(&p2, &fixed, rng)? else {
            continue;
        };
        let b = ColoredPolytope::gf2(p2, cb.clone())?;
        let sum = connected_sum(a.polytope(), v1, b.polytope(), v2, &pairing)?;
        let mut colors = vec![None; sum.polytope.num_facets()];
        for (f, to) in sum.facet_map1.iter().enumerate() {
            if let Some(t) = to {
                colors[*t] = Some(ca[f]);
            }
        }
        for (f, to) in sum.facet_map2.iter().enumerate() {
            if let Some(t) = to {
                colors[*t] = Some(cb[f]);
            }
        }
        let colors: Vec<_> = colors.into_iter().map(|c| c.expect("every facet comes from a summand")).collect();
        let glued = ColoredPolytope::gf2(sum.polytope, colors)?;
        if glued.coloring_polynomial()? != a.coloring_polynomial()?.add(&b.coloring_polynomial()?)? {
            sum_failures += 1;
        }
        sums += 1;
    }
    Ok((
        product_failures == 0 && sum_failures == 0,
        format!("product failures {product_failures}/50, connected-sum failures {sum_failures}/50"),
    ))
}

fn unitary_oracles(rng: &mut StdRng) -> Outcome {
    let mut members = Vec::new();
    for cp in [examples::cp1(), examples::cp1_squared(), examples::cp2()] {
        members.push(in_image_unitary(&torus_graph_from_pair(&cp)?.polynomial()?).in_image);
    }
    let mut dd_failures = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4);
        let g = sampling::random_ext(n, 6, 2, rng);
        if !g.differential().differential().is_zero() {
            dd_failures += 1;
        }
    }
    let mut dual_failures = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4);
        let space = if rng.gen_bool(0.5) { Space::Primal } else { Space::Dual };
        let g = sampling::random_faithful_ext(n, 5, space, rng);
        if g.dual()?.dual()? != g {
            dual_failures += 1;
        }
    }
    let ok = members.iter().all(|&m| m) && dd_failures == 0 && dual_failures == 0;
    Ok((
        ok,
        format!("CP1/CP1xCP1/CP2 in image {members:?}; d∘d failures {dd_failures}/1000; dual involution failures {dual_failures}/1000"),
    ))
}

fn chern_numbers() -> Outcome {
    let start = Instant::now();
    let value = |cp: &ColoredPolytope, i, j| -> Result<Option<BigRational>> {
        let data = FixedPointData::from_ext(&torus_graph_from_pair(cp)?.polynomial()?)?;
        Ok(equivariant_chern_number(&data, i, j)?.value())
    };
    let got = [value(&examples::cp1(), 1, 0)?, value(&examples::cp2(), 2, 0)?, value(&examples::cp2(), 0, 1)?];
    let elapsed = start.elapsed();
    let expected: Vec<Option<BigRational>> = [2, 9, 3].iter().map(|&v| Some(BigRational::from_integer(BigInt::from(v)))).collect();
    let shown: Vec<String> = got.iter().map(|v| v.as_ref().map_or("none".into(), |q| q.to_string())).collect();
    Ok((
        got[..] == expected[..] && elapsed < Duration::from_secs(1),
        format!("c1[CP1] = {}, c1^2[CP2] = {}, c2[CP2] = {}; expected 2, 9, 3", shown[0], shown[1], shown[2]),
    ))
}

fn fixed_point_bound() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 1..=3 {
        let bound = min_fixed_points_bound(n);
        let window = UnitaryWindow::new(n, 2, WindowLimits::default())?;
        let below = window.min_dependent_support(bound - 1);
        ok &= below.is_none();
        parts.push(format!("n={n}: {} monomials, bound {bound}, smaller support {below:?}", window.monomials.len()));
    }
    Ok((ok, parts.join("; ")))
}

fn reduction(rng: &mut StdRng) -> Outcome {
    let mut failures = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=2);
        let a = sampling::random_unitary_class(n, rng)?;
        let b = sampling::random_unitary_class(n, rng)?;
        let additive = a.add(&b)?.reduce()? == a.reduce()?.add(&b.reduce()?)?;
        let multiplicative = a.multiply(&b)?.reduce()? == a.reduce()?.multiply(&b.reduce()?)?;
        failures += usize::from(!additive || !multiplicative);
    }
    let cp2 = BordismClass::unitary(torus_graph_from_pair(&examples::cp2())?.polynomial()?)?;
    let rp2 = BordismClass::unoriented(examples::rp2().coloring_polynomial()?.dual()?)?;
    let cp2_to_rp2 = cp2.reduce()? == rp2;
    let probe = surjectivity_probe(2, 1, WindowLimits::default())?;
    let ok = failures == 0 && cp2_to_rp2 && probe.complete() && probe.image_rank == probe.kernel_dim;
    Ok((
        ok,
        format!(
            "homomorphism failures {failures}/100; reduce(CP2) = RP2 {cp2_to_rp2}; probe n=2 hits {}/{} (image rank {})",
            probe.hits(),
            probe.entries.len(),
            probe.image_rank
        ),
    ))
}

fn noncommutativity(rng: &mut StdRng) -> Outcome {
    let spaces = [kernel_space(2, DEFAULT_MAX_RANK)?, kernel_space(3, DEFAULT_MAX_RANK)?];
    let mut failures = 0;
    let mut noncommuting = 0;
    for _ in 0..100 {
        let (a, b) = if rng.gen_bool(0.5) {
            let sa = &spaces[rng.gen_range(0..2)];
            let sb = &spaces[rng.gen_range(0..2)];
            (sampling::random_unoriented_class(sa, rng)?, sampling::random_unoriented_class(sb, rng)?)
        } else {
            let (na, nb) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
            (sampling::random_unitary_class(na, rng)?, sampling::random_unitary_class(nb, rng)?)
        };
        let ab = a.multiply(&b)?;
        let ba = b.multiply(&a)?;
        failures += usize::from(ab.swap_conjugate(a.rank())? != ba);
        noncommuting += usize::from(ab != ba);
    }
    let cp1 = BordismClass::unitary(torus_graph_from_pair(&examples::cp1())?.polynomial()?)?;
    let cp2 = BordismClass::unitary(torus_graph_from_pair(&examples::cp2())?.polynomial()?)?;
    let witness = cp1.multiply(&cp2)? != cp2.multiply(&cp1)?;
    Ok((
        failures == 0 && witness,
        format!("swap identity failures {failures}/100 ({noncommuting} pairs do not commute); CP1 x CP2 != CP2 x CP1 {witness}"),
    ))
}
