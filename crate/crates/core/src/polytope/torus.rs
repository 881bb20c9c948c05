//! Torus graphs: `Z^n`-weighted regular graphs with an orientation.

use std::collections::VecDeque;

use super::coloring::{ColoredPolytope, Coloring};
use super::graph::{ColoredGraph, GraphEdge};
use crate::algebra::character::{Space, ZChar};
use crate::algebra::ext::{ExtMonomial, ExtPolynomial};
use crate::algebra::linalg::{char_det, z_dual_basis};
use crate::error::{Error, Result};

/// An edge `u - v` with the weights of both orientations: `alpha` on `u → v`
/// and `alpha_rev` on `v → u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusEdge {
    pub u: usize,
    pub v: usize,
    pub alpha: ZChar,
    pub alpha_rev: ZChar,
}

/// A torus graph with optional orientation `σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusGraph {
    n: usize,
    num_vertices: usize,
    edges: Vec<TorusEdge>,
    sigma: Option<Vec<i8>>,
}

impl TorusGraph {
    /// Checks the three axioms, and the orientation relation when `sigma` is given.
    pub fn new(n: usize, num_vertices: usize, edges: Vec<TorusEdge>, sigma: Option<Vec<i8>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("rank must be at least 1".into()));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.u >= num_vertices || e.v >= num_vertices {
                return Err(Error::InvalidGraph(format!("edge {i} leaves the vertex range")));
            }
            if e.u == e.v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", e.u)));
            }
            for a in [&e.alpha, &e.alpha_rev] {
                if a.rank() != n {
                    return Err(Error::CharacterLength { expected: n, got: a.rank() });
                }
            }
            if e.alpha_rev != e.alpha && e.alpha_rev != e.alpha.neg() {
                return Err(Error::InvalidGraph(format!("axiom (1) fails on edge {i}: reversed weight is not ±α")));
            }
        }
        let g = TorusGraph { n, num_vertices, edges, sigma: None };
        for v in 0..num_vertices {
            let at = g.weights_at(v);
            if at.len() != n {
                return Err(Error::InvalidGraph(format!("vertex {v} has degree {}, expected {n}", at.len())));
            }
            if char_det(&at.iter().collect::<Vec<_>>()).abs() != 1 {
                return Err(Error::InvalidGraph(format!("axiom (2) fails at vertex {v}: weights are not a basis")));
            }
        }
        for (i, e) in g.edges.iter().enumerate() {
            let (at_u, at_v) = (g.weights_at(e.u), g.weights_at(e.v));
            if !congruent_matching(&at_u, &at_v, &e.alpha) {
                return Err(Error::InvalidGraph(format!(
                    "axiom (3) fails on edge {i}: no matching modulo {:?}",
                    e.alpha
                )));
            }
        }
        match sigma {
            None => Ok(g),
            Some(s) => g.with_sigma(s),
        }
    }

    fn with_sigma(mut self, sigma: Vec<i8>) -> Result<Self> {
        if sigma.len() != self.num_vertices || sigma.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Invalid("sigma must assign ±1 to every vertex".into()));
        }
        for e in &self.edges {
            if flip_across(e) * sigma[e.u] != sigma[e.v] {
                return Err(Error::NonOrientable);
            }
        }
        self.sigma = Some(sigma);
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[TorusEdge] {
        &self.edges
    }

    pub fn sigma(&self) -> Option<&[i8]> {
        self.sigma.as_deref()
    }

    /// `α(E_v)`: the weights of the edges leaving `v`.
    pub fn weights_at(&self, v: usize) -> Vec<ZChar> {
        self.edges
            .iter()
            .flat_map(|e| {
                let out = if e.u == v { Some(e.alpha.clone()) } else { None };
                let back = if e.v == v { Some(e.alpha_rev.clone()) } else { None };
                out.into_iter().chain(back)
            })
            .collect()
    }

    /// Connected components; each can flip its orientation independently, so
    /// a valid graph has `2^components` orientations.
    pub fn components(&self) -> usize {
        let mut comp = vec![usize::MAX; self.num_vertices];
        let mut count = 0;
        for start in 0..self.num_vertices {
            if comp[start] == usize::MAX {
                self.flood(start, count, &mut comp);
                count += 1;
            }
        }
        count
    }

    fn flood(&self, start: usize, label: usize, comp: &mut [usize]) {
        comp[start] = label;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for e in &self.edges {
                for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                    if a == x && comp[b] == usize::MAX {
                        comp[b] = label;
                        queue.push_back(b);
                    }
                }
            }
        }
    }

    /// Propagates `σ` from `σ = +1` at the smallest vertex of each component.
    pub fn orient(&self) -> Result<TorusGraph> {
        let mut sigma: Vec<Option<i8>> = vec![None; self.num_vertices];
        for start in 0..self.num_vertices {
            if sigma[start].is_some() {
                continue;
            }
            sigma[start] = Some(1);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let sx = sigma[x].expect("visited");
                for e in &self.edges {
                    let f = flip_across(e);
                    for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                        if a != x {
                            continue;
                        }
                        match sigma[b] {
                            None => {
                                sigma[b] = Some(f * sx);
                                queue.push_back(b);
                            }
                            Some(sb) if sb != f * sx => return Err(Error::NonOrientable),
                            Some(_) => {}
                        }
                    }
                }
            }
        }
        let mut out = self.clone();
        out.sigma = Some(sigma.into_iter().map(|s| s.expect("every vertex reached")).collect());
        Ok(out)
    }

    /// `Σ_v σ(v) · [α(E_v)]` in the primal exterior algebra.
    pub fn polynomial(&self) -> Result<ExtPolynomial> {
        let sigma = self.sigma.as_ref().ok_or(Error::MissingOrientation)?;
        let mut out = ExtPolynomial::zero(self.n, Space::Primal);
        for (v, &s) in sigma.iter().enumerate() {
            out.add_term(s as i64, ExtMonomial::from_set(self.weights_at(v))?);
        }
        Ok(out)
    }

    /// The `GF(2)^n`-colored graph obtained by reducing every weight mod 2.
    pub fn reduce_mod2(&self) -> Result<ColoredGraph> {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let alpha = e.alpha.reduce_mod2().ok_or(Error::NotSquareFree)?;
                Ok(GraphEdge { u: e.u, v: e.v, alpha })
            })
            .collect::<Result<Vec<_>>>()?;
        ColoredGraph::new(self.n, self.num_vertices, edges)
    }
}

/// `σ(v) / σ(u)` forced by `σ(u) α(e) = -σ(v) α(ē)`.
fn flip_across(e: &TorusEdge) -> i8 {
    if e.alpha_rev == e.alpha {
        -1
    } else {
        1
    }
}

/// Whether some bijection pairs each of `from` with a member of `to` that is
/// congruent to it modulo `Z · dir`.
fn congruent_matching(from: &[ZChar], to: &[ZChar], dir: &ZChar) -> bool {
    if from.len() != to.len() {
        return false;
    }
    let adj: Vec<Vec<usize>> = from
        .iter()
        .map(|a| (0..to.len()).filter(|&j| a.congruence_multiple(&to[j], dir).is_some()).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; to.len()];
    fn augment(i: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|k| augment(k, adj, seen, owner)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    (0..from.len()).all(|i| augment(i, &adj, &mut vec![false; to.len()], &mut owner))
}

/// The oriented torus graph of a quasitoric pair: the weight of the edge
/// leaving `u` away from facet `F` is the dual-basis element of `λ` at `u`
/// belonging to `F`.
pub fn torus_graph_from_pair(cp: &ColoredPolytope) -> Result<TorusGraph> {
    let Coloring::Z(colors) = cp.coloring() else {
        return Err(Error::FlavorMismatch);
    };
    let p = cp.polytope();
    let weight = |u: usize, missing: usize| -> Result<ZChar> {
        let facets = &p.vertices()[u];
        let at: Vec<&ZChar> = facets.iter().map(|&f| &colors[f]).collect();
        let (_, dual) = z_dual_basis(&at).ok_or_else(|| Error::InvalidColoring(vec![u]))?;
        let k = facets.iter().position(|&f| f == missing).expect("missing facet is at the vertex");
        Ok(dual[k].clone())
    };
    let mut edges = Vec::new();
    for (u, neighbours) in p.adjacency().iter().enumerate() {
        for &(v, missing_u) in neighbours {
            if u < v {
                let missing_v = p.adjacency()[v].iter().find(|&&(w, _)| w == u).expect("symmetric").1;
                edges.push(TorusEdge { u, v, alpha: weight(u, missing_u)?, alpha_rev: weight(v, missing_v)? });
            }
        }
    }
    TorusGraph::new(p.dim(), p.num_vertices(), edges, None)?.orient()
}
