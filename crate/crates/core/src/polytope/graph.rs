//! Regular graphs with edges colored by nonzero vectors of `GF(2)^n`.

use super::coloring::{ColoredPolytope, Coloring};
use crate::algebra::character::{Gf2Char, Space};
use crate::algebra::gf2::{Gf2Monomial, Gf2Polynomial};
use crate::algebra::linalg::{gf2_dual_basis, gf2_rank};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphEdge {
    pub u: usize,
    pub v: usize,
    pub alpha: Gf2Char,
}

/// An `n`-valent graph with a `GF(2)^n` edge coloring satisfying (P1) and (P2).
///
/// Multiple edges between the same pair of vertices are allowed; loops are not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    num_vertices: usize,
    edges: Vec<GraphEdge>,
}

impl ColoredGraph {
    pub fn new(n: usize, num_vertices: usize, edges: Vec<GraphEdge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("rank must be at least 1".into()));
        }
        for e in &edges {
            if e.u >= num_vertices || e.v >= num_vertices {
                return Err(Error::InvalidGraph(format!("edge ({}, {}) leaves the vertex range", e.u, e.v)));
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", e.u)));
            }
            if e.alpha.support_len() > n {
                return Err(Error::CharacterLength { expected: n, got: e.alpha.support_len() });
            }
        }
        let g = ColoredGraph { n, num_vertices, edges };
        for v in 0..num_vertices {
            let colors = g.colors_at(v);
            if colors.len() != n {
                return Err(Error::InvalidGraph(format!("vertex {v} has degree {}, expected {n}", colors.len())));
            }
            if gf2_rank(&colors) != n {
                return Err(Error::InvalidGraph(format!("(P1) fails at vertex {v}: colors are not a basis")));
            }
        }
        for (i, e) in g.edges.iter().enumerate() {
            if project(&g.colors_at(e.u), e.alpha) != project(&g.colors_at(e.v), e.alpha) {
                return Err(Error::InvalidGraph(format!(
                    "(P2) fails on edge {i} ({}, {}): colors differ modulo {:?}",
                    e.u, e.v, e.alpha
                )));
            }
        }
        Ok(g)
    }

    /// The graph with no vertices, representing the zero class.
    pub fn empty(n: usize) -> Self {
        ColoredGraph { n, num_vertices: 0, edges: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    /// The multiset `α(E_v)`.
    pub fn colors_at(&self, v: usize) -> Vec<Gf2Char> {
        self.edges.iter().filter(|e| e.u == v || e.v == v).map(|e| e.alpha).collect()
    }

    /// `Σ_v Π_{x ∈ E_v} α(x)`, a primal polynomial.
    pub fn polynomial(&self) -> Gf2Polynomial {
        Gf2Polynomial::from_monomials(
            self.n,
            Space::Primal,
            (0..self.num_vertices).map(|v| Gf2Monomial::new(self.colors_at(v)).expect("(P1) colors are distinct")),
        )
    }

    pub fn disjoint_union(&self, other: &ColoredGraph) -> Result<ColoredGraph> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let shift = self.num_vertices;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| GraphEdge { u: e.u + shift, v: e.v + shift, alpha: e.alpha }));
        Ok(ColoredGraph { n: self.n, num_vertices: shift + other.num_vertices, edges })
    }
}

/// Sorted images of `colors` in `GF(2)^n / <a>`, each class named by its smaller member.
fn project(colors: &[Gf2Char], a: Gf2Char) -> Vec<u32> {
    let mut out: Vec<u32> = colors.iter().map(|c| c.bits().min(c.bits() ^ a.bits())).collect();
    out.sort_unstable();
    out
}

/// The colored 1-skeleton: the edge leaving vertex `u` away from facet `F`
/// gets the element of the dual basis of `λ` at `u` that belongs to `F`.
pub fn one_skeleton(cp: &ColoredPolytope) -> Result<ColoredGraph> {
    let Coloring::Gf2(colors) = cp.coloring() else {
        return Err(Error::FlavorMismatch);
    };
    let p = cp.polytope();
    let n = p.dim();
    let adjacency = p.adjacency();
    let mut edges = Vec::new();
    for (u, neighbours) in adjacency.iter().enumerate() {
        let facets = &p.vertices()[u];
        let at: Vec<Gf2Char> = facets.iter().map(|&f| colors[f]).collect();
        let dual = gf2_dual_basis(&at, n).ok_or_else(|| Error::InvalidColoring(vec![u]))?;
        for &(v, missing) in neighbours {
            if u < v {
                let k = facets.iter().position(|&f| f == missing).expect("missing facet is at u");
                edges.push(GraphEdge { u, v, alpha: dual[k] });
            }
        }
    }
    ColoredGraph::new(n, p.num_vertices(), edges)
}

/// Whether the two graphs represent the same class, i.e. have equal polynomials.
pub fn graphs_equivalent(a: &ColoredGraph, b: &ColoredGraph) -> bool {
    a.n == b.n && a.polynomial() == b.polynomial()
}
