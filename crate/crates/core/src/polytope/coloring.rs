//! Facet colorings of simple polytopes and their coloring polynomials.

use std::cell::Cell;
use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;

use super::simple::{product, simplex, SimplePolytope};
use crate::algebra::character::{coord_bit, Gf2Char, Space, ZChar};
use crate::algebra::gf2::{Gf2Monomial, Gf2Polynomial};
use crate::algebra::kernel::{partial_is_primitive, window_chars};
use crate::algebra::linalg::{char_det, gf2_rank};
use crate::error::{Error, Result};

/// Largest rank accepted by [`bott_generators`] unless raised by the caller.
pub const DEFAULT_BOTT_MAX_RANK: usize = 4;

/// A color for every facet, either in `GF(2)^n` or in `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coloring {
    Gf2(Vec<Gf2Char>),
    Z(Vec<ZChar>),
}

impl Coloring {
    pub fn len(&self) -> usize {
        match self {
            Coloring::Gf2(c) => c.len(),
            Coloring::Z(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coordinate-wise reduction of a `Z` coloring; `GF(2)` colorings are returned as is.
    pub fn reduce_mod2(&self) -> Result<Vec<Gf2Char>> {
        match self {
            Coloring::Gf2(c) => Ok(c.clone()),
            Coloring::Z(c) => c.iter().map(|x| x.reduce_mod2().ok_or(Error::ZeroCharacter)).collect(),
        }
    }
}

/// A simple polytope with a characteristic function that is a basis at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredPolytope {
    polytope: SimplePolytope,
    coloring: Coloring,
}

impl ColoredPolytope {
    pub fn new(polytope: SimplePolytope, coloring: Coloring) -> Result<Self> {
        let n = polytope.dim();
        if coloring.len() != polytope.num_facets() {
            return Err(Error::Invalid(format!(
                "coloring has {} colors for {} facets",
                coloring.len(),
                polytope.num_facets()
            )));
        }
        let bad: Vec<usize> = match &coloring {
            Coloring::Gf2(colors) => {
                if let Some(c) = colors.iter().find(|c| c.support_len() > n) {
                    return Err(Error::CharacterLength { expected: n, got: c.support_len() });
                }
                bad_vertices(&polytope, |v| gf2_vertex_ok(colors, v, n))
            }
            Coloring::Z(colors) => {
                if let Some(c) = colors.iter().find(|c| c.rank() != n) {
                    return Err(Error::CharacterLength { expected: n, got: c.rank() });
                }
                bad_vertices(&polytope, |v| z_vertex_ok(colors, v, n))
            }
        };
        if !bad.is_empty() {
            return Err(Error::InvalidColoring(bad));
        }
        Ok(ColoredPolytope { polytope, coloring })
    }

    pub fn gf2(polytope: SimplePolytope, colors: Vec<Gf2Char>) -> Result<Self> {
        ColoredPolytope::new(polytope, Coloring::Gf2(colors))
    }

    pub fn z(polytope: SimplePolytope, colors: Vec<ZChar>) -> Result<Self> {
        ColoredPolytope::new(polytope, Coloring::Z(colors))
    }

    pub fn polytope(&self) -> &SimplePolytope {
        &self.polytope
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn rank(&self) -> usize {
        self.polytope.dim()
    }

    /// The same polytope with its coloring reduced mod 2.
    pub fn reduce_mod2(&self) -> Result<ColoredPolytope> {
        ColoredPolytope::gf2(self.polytope.clone(), self.coloring.reduce_mod2()?)
    }

    /// Sum over vertices of the product of the facet colors there (dual space).
    pub fn coloring_polynomial(&self) -> Result<Gf2Polynomial> {
        match &self.coloring {
            Coloring::Gf2(colors) => Ok(polynomial_of(&self.polytope, colors)),
            Coloring::Z(_) => Err(Error::FlavorMismatch),
        }
    }
}

fn bad_vertices(p: &SimplePolytope, ok: impl Fn(&[usize]) -> bool) -> Vec<usize> {
    p.vertices().iter().enumerate().filter(|(_, v)| !ok(v)).map(|(i, _)| i).collect()
}

fn gf2_vertex_ok(colors: &[Gf2Char], facets: &[usize], n: usize) -> bool {
    let at: Vec<Gf2Char> = facets.iter().map(|&f| colors[f]).collect();
    at.len() == n && gf2_rank(&at) == n
}

fn z_vertex_ok(colors: &[ZChar], facets: &[usize], n: usize) -> bool {
    let at: Vec<&ZChar> = facets.iter().map(|&f| &colors[f]).collect();
    at.len() == n && char_det(&at).abs() == 1
}

/// Coloring polynomial of a valid `GF(2)` coloring.
pub fn coloring_polynomial(p: &SimplePolytope, colors: &[Gf2Char]) -> Result<Gf2Polynomial> {
    ColoredPolytope::gf2(p.clone(), colors.to_vec())?.coloring_polynomial()
}

fn polynomial_of(p: &SimplePolytope, colors: &[Gf2Char]) -> Gf2Polynomial {
    Gf2Polynomial::from_monomials(
        p.dim(),
        Space::Dual,
        p.vertices()
            .iter()
            .map(|v| Gf2Monomial::new(v.iter().map(|&f| colors[f]).collect()).expect("basis colors are distinct")),
    )
}

/// Depth-first search over facet colorings, assigning facets in index order.
struct Search<'a, C> {
    polytope: &'a SimplePolytope,
    /// Vertices incident to each facet.
    incident: Vec<Vec<usize>>,
    candidates: Vec<C>,
    partial_ok: &'a dyn Fn(&[&C]) -> bool,
    /// Candidate placements left before the search gives up.
    budget: Cell<usize>,
}

impl<'a, C: Clone> Search<'a, C> {
    fn new(polytope: &'a SimplePolytope, candidates: Vec<C>, partial_ok: &'a dyn Fn(&[&C]) -> bool) -> Self {
        let mut incident = vec![Vec::new(); polytope.num_facets()];
        for (i, v) in polytope.vertices().iter().enumerate() {
            for &f in v {
                incident[f].push(i);
            }
        }
        Search { polytope, incident, candidates, partial_ok, budget: Cell::new(usize::MAX) }
    }

    fn with_budget(self, budget: usize) -> Self {
        self.budget.set(budget);
        self
    }

    /// Whether the colors assigned so far around the vertices of `facet` are still extendable.
    fn consistent(&self, assigned: &[Option<C>], facet: usize) -> bool {
        self.incident[facet].iter().all(|&v| {
            let at: Vec<&C> = self.polytope.vertices()[v].iter().filter_map(|&f| assigned[f].as_ref()).collect();
            (self.partial_ok)(&at)
        })
    }

    fn run(
        &self,
        assigned: &mut Vec<Option<C>>,
        facet: usize,
        rng: &mut Option<&mut dyn rand::RngCore>,
        visit: &mut dyn FnMut(&[C]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if facet == assigned.len() {
            let full: Vec<C> = assigned.iter().map(|c| c.clone().expect("all assigned")).collect();
            return visit(&full);
        }
        if assigned[facet].is_some() {
            return self.run(assigned, facet + 1, rng, visit);
        }
        let mut order: Vec<usize> = (0..self.candidates.len()).collect();
        if let Some(r) = rng.as_deref_mut() {
            order.shuffle(r);
        }
        for i in order {
            if self.budget.get() == 0 {
                return ControlFlow::Break(());
            }
            self.budget.set(self.budget.get() - 1);
            assigned[facet] = Some(self.candidates[i].clone());
            if self.consistent(assigned, facet) {
                self.run(assigned, facet + 1, rng, visit)?;
            }
        }
        assigned[facet] = None;
        ControlFlow::Continue(())
    }

    fn start(
        &self,
        fixed: &[Option<C>],
        rng: Option<&mut dyn rand::RngCore>,
        visit: &mut dyn FnMut(&[C]) -> ControlFlow<()>,
    ) -> Result<()> {
        let m = self.polytope.num_facets();
        if fixed.len() > m {
            return Err(Error::Invalid(format!("{} fixed colors for {m} facets", fixed.len())));
        }
        let mut assigned: Vec<Option<C>> = fixed.to_vec();
        assigned.resize(m, None);
        if !(0..m).all(|f| self.consistent(&assigned, f)) {
            return Ok(());
        }
        let mut rng = rng;
        let _ = self.run(&mut assigned, 0, &mut rng, visit);
        Ok(())
    }
}

fn gf2_partial(n: usize) -> impl Fn(&[&Gf2Char]) -> bool {
    move |at: &[&Gf2Char]| {
        let v: Vec<Gf2Char> = at.iter().map(|c| **c).collect();
        v.len() <= n && gf2_rank(&v) == v.len()
    }
}

fn z_partial(n: usize) -> impl Fn(&[&ZChar]) -> bool {
    move |at: &[&ZChar]| match at.len() {
        0 => true,
        k if k == n => char_det(at).abs() == 1,
        k if k < n => partial_is_primitive(&at.iter().map(|c| (*c).clone()).collect::<Vec<_>>()),
        _ => false,
    }
}

/// Calls `visit` on every valid `GF(2)^n` coloring of `p` extending `fixed`
/// (entry `f` pins facet `f`), in lexicographic order of the color lists.
pub fn for_each_gf2_coloring(
    p: &SimplePolytope,
    fixed: &[Option<Gf2Char>],
    mut visit: impl FnMut(&[Gf2Char]) -> ControlFlow<()>,
) -> Result<()> {
    let n = p.dim();
    let ok = gf2_partial(n);
    Search::new(p, Gf2Char::all(n), &ok).start(fixed, None, &mut visit)
}

/// A uniformly shuffled search for one valid `GF(2)^n` coloring extending `fixed`.
pub fn random_gf2_coloring<R: Rng>(p: &SimplePolytope, fixed: &[Option<Gf2Char>], rng: &mut R) -> Result<Option<Vec<Gf2Char>>> {
    let n = p.dim();
    let ok = gf2_partial(n);
    let mut found = None;
    Search::new(p, Gf2Char::all(n), &ok).start(fixed, Some(rng), &mut |c: &[Gf2Char]| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// A random unimodular `Z^n` coloring with entries in `[-weight_bound, weight_bound]`.
pub fn random_z_coloring<R: Rng>(
    p: &SimplePolytope,
    weight_bound: i64,
    fixed: &[Option<ZChar>],
    rng: &mut R,
) -> Result<Option<Vec<ZChar>>> {
    random_z_coloring_within(p, weight_bound, fixed, usize::MAX, rng)
}

/// Like [`random_z_coloring`], but gives up with `None` after `budget`
/// candidate placements.
pub fn random_z_coloring_within<R: Rng>(
    p: &SimplePolytope,
    weight_bound: i64,
    fixed: &[Option<ZChar>],
    budget: usize,
    rng: &mut R,
) -> Result<Option<Vec<ZChar>>> {
    let n = p.dim();
    let ok = z_partial(n);
    let mut found = None;
    let search = Search::new(p, window_chars(n, weight_bound), &ok).with_budget(budget);
    search.start(fixed, Some(rng), &mut |c: &[ZChar]| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Partitions of `n` into positive parts, parts nonincreasing, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Product of simplices with the given dimensions.
pub fn simplex_product(dims: &[usize]) -> Result<SimplePolytope> {
    let (first, rest) = dims.split_first().ok_or_else(|| Error::Invalid("no factors".into()))?;
    rest.iter().try_fold(simplex(*first)?, |acc, &k| Ok(product(&acc, &simplex(k)?)))
}

/// One colored product of simplices per distinct coloring polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottGenerator {
    pub factors: Vec<usize>,
    pub polytope: SimplePolytope,
    pub coloring: Vec<Gf2Char>,
    pub polynomial: Gf2Polynomial,
}

/// All ordered bases of `GF(2)^n`, each as the images of `e_1..e_n`.
fn ordered_bases(n: usize) -> Vec<Vec<Gf2Char>> {
    fn go(n: usize, all: &[Gf2Char], cur: &mut Vec<Gf2Char>, out: &mut Vec<Vec<Gf2Char>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for &c in all {
            cur.push(c);
            if gf2_rank(cur) == cur.len() {
                go(n, all, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &Gf2Char::all(n), &mut Vec::new(), &mut out);
    out
}

/// Image of `c` under the linear map sending `e_i` to `basis[i]`.
fn apply_linear(basis: &[Gf2Char], c: Gf2Char) -> Gf2Char {
    let bits = basis
        .iter()
        .enumerate()
        .filter(|&(i, _)| c.bits() & coord_bit(i) != 0)
        .fold(0u32, |acc, (_, b)| acc ^ b.bits());
    Gf2Char::from_bits(bits).expect("invertible map")
}

/// Coloring polynomials of every `GF(2)^n` coloring of every product of
/// simplices of total dimension `n`, deduplicated and sorted by polynomial.
///
/// Colorings are enumerated with the facets at the first vertex pinned to the
/// standard basis; every other coloring is the image of one of those under
/// `GL_n(GF(2))`, which acts compatibly on the polynomials.
pub fn bott_generators(n: usize, max_rank: usize) -> Result<Vec<BottGenerator>> {
    if n == 0 {
        return Err(Error::Invalid("rank must be at least 1".into()));
    }
    if n > max_rank {
        return Err(Error::Resource {
            what: format!("rank {n} exceeds the generator cap {max_rank}"),
            estimate: match gl_order(n) {
                Some(frames) => format!("{} partitions, |GL_{n}(2)| = {frames} frames", partition_count(n)),
                None => format!("{} partitions, |GL_{n}(2)| beyond 128 bits", partition_count(n)),
            },
        });
    }
    let frames = ordered_bases(n);
    let mut found: BTreeMap<Gf2Polynomial, BottGenerator> = BTreeMap::new();
    for factors in partitions(n) {
        let p = simplex_product(&factors)?;
        let mut fixed = vec![None; p.num_facets()];
        for (i, &f) in p.vertices()[0].iter().enumerate() {
            fixed[f] = Some(Gf2Char::unit(i));
        }
        let mut pinned: HashMap<Gf2Polynomial, Vec<Gf2Char>> = HashMap::new();
        for_each_gf2_coloring(&p, &fixed, |colors| {
            pinned.entry(polynomial_of(&p, colors)).or_insert_with(|| colors.to_vec());
            ControlFlow::Continue(())
        })?;
        for colors in pinned.into_values() {
            for frame in &frames {
                let moved: Vec<Gf2Char> = colors.iter().map(|&c| apply_linear(frame, c)).collect();
                let poly = polynomial_of(&p, &moved);
                found.entry(poly.clone()).or_insert_with(|| BottGenerator {
                    factors: factors.clone(),
                    polytope: p.clone(),
                    coloring: moved,
                    polynomial: poly,
                });
            }
        }
    }
    Ok(found.into_values().collect())
}

fn gl_order(n: usize) -> Option<u128> {
    let top = 2u128.checked_pow(n as u32)?;
    (0..n as u32).try_fold(1u128, |acc, i| acc.checked_mul(top - (1u128 << i)))
}

fn partition_count(n: usize) -> u128 {
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] = ways[total].saturating_add(ways[total - part]);
        }
    }
    ways[n]
}

/// Dimension of the span of the duals of the given dual-space polynomials.
pub fn span_rank(polys: &[Gf2Polynomial]) -> Result<usize> {
    let mut index: HashMap<Gf2Monomial, usize> = HashMap::new();
    let mut pivots: HashMap<usize, Vec<usize>> = HashMap::new();
    for p in polys {
        let primal = p.dual()?;
        let mut v: Vec<usize> = primal
            .monomials()
            .map(|m| {
                let next = index.len();
                *index.entry(m.clone()).or_insert(next)
            })
            .collect();
        v.sort_unstable();
        while let Some(&lead) = v.first() {
            match pivots.get(&lead) {
                Some(pv) => v = symmetric_difference(&v, pv),
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    Ok(pivots.len())
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn ch(c: &[i64]) -> Gf2Char {
        Gf2Char::from_coords(c).unwrap()
    }

    #[test]
    fn rp2_coloring_polynomial() {
        let (a, b, c) = (ch(&[1, 0]), ch(&[0, 1]), ch(&[1, 1]));
        let g = coloring_polynomial(&simplex(2).unwrap(), &[a, b, c]).unwrap();
        let expected = Gf2Polynomial::from_monomials(
            2,
            Space::Dual,
            [vec![a, b], vec![a, c], vec![b, c]].map(|m| Gf2Monomial::new(m).unwrap()),
        );
        assert_eq!(g, expected);
    }

    #[test]
    fn cancellations() {
        let one = ch(&[1]);
        assert!(coloring_polynomial(&simplex(1).unwrap(), &[one, one]).unwrap().is_zero());
        let square = product(&simplex(1).unwrap(), &simplex(1).unwrap());
        let (x, y) = (ch(&[1, 0]), ch(&[0, 1]));
        assert!(coloring_polynomial(&square, &[x, x, y, y]).unwrap().is_zero());
    }

    #[test]
    fn invalid_coloring_lists_vertices() {
        let (a, b) = (ch(&[1, 0]), ch(&[0, 1]));
        // facets 0 and 1 share a color: vertex {0, 1} fails
        let err = coloring_polynomial(&simplex(2).unwrap(), &[a, a, b]).unwrap_err();
        let s2 = simplex(2).unwrap();
        let bad = s2.vertex_index(&[0, 1]).unwrap();
        assert_eq!(err, Error::InvalidColoring(vec![bad]));
    }

    #[test]
    fn enumeration_counts() {
        // Δ²: any three distinct nonzero vectors of GF(2)^2, in any order: 3! = 6
        let mut count = 0;
        for_each_gf2_coloring(&simplex(2).unwrap(), &[], |_| {
            count += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(count, 6);
        // the square: 6 choices for the colors at one vertex, then 3 for the
        // two opposite facets (c3 = c2 leaves 2 for c1, c3 = c0 + c2 leaves 1)
        let square = product(&simplex(1).unwrap(), &simplex(1).unwrap());
        let mut count = 0;
        for_each_gf2_coloring(&square, &[], |_| {
            count += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(count, 18);
    }

    #[test]
    fn random_colorings_are_valid() {
        let mut rng = StdRng::seed_from_u64(7);
        let p = product(&simplex(2).unwrap(), &simplex(1).unwrap());
        for _ in 0..10 {
            let c = random_gf2_coloring(&p, &[], &mut rng).unwrap().unwrap();
            ColoredPolytope::gf2(p.clone(), c).unwrap();
            let z = random_z_coloring(&p, 1, &[], &mut rng).unwrap().unwrap();
            ColoredPolytope::z(p.clone(), z).unwrap();
        }
        assert_eq!(random_z_coloring_within(&p, 1, &[], 0, &mut rng).unwrap(), None);
    }

    #[test]
    fn partition_lists() {
        assert_eq!(partitions(1), vec![vec![1]]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(4).len(), 5);
        for n in 1..=12 {
            assert_eq!(partition_count(n), partitions(n).len() as u128);
        }
        assert!(matches!(bott_generators(99, 4), Err(Error::Resource { .. })));
    }

    #[test]
    fn small_bott_generators() {
        let g1 = bott_generators(1, 4).unwrap();
        assert_eq!(g1.len(), 1);
        assert!(g1[0].polynomial.is_zero());
        let g2 = bott_generators(2, 4).unwrap();
        let polys: Vec<Gf2Polynomial> = g2.iter().map(|g| g.polynomial.clone()).collect();
        assert_eq!(span_rank(&polys).unwrap(), 1);
        assert!(matches!(bott_generators(5, 4), Err(Error::Resource { .. })));
    }
}
