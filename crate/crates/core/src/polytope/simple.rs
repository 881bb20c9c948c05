//! Abstract simple polytopes as vertex-facet incidence structures.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// A simple `n`-polytope given by the `n` facets meeting at each vertex.
///
/// Geometric realizability is not checked; every formula in this crate only
/// uses incidences.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplePolytope {
    dim: usize,
    num_facets: usize,
    vertices: Vec<Vec<usize>>,
}

impl SimplePolytope {
    /// Validates simplicity, regularity and connectivity of the incidence data.
    pub fn new(dim: usize, num_facets: usize, vertices: Vec<Vec<usize>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidPolytope("dimension must be at least 1".into()));
        }
        let mut sorted = Vec::with_capacity(vertices.len());
        for (i, v) in vertices.into_iter().enumerate() {
            let mut v = v;
            v.sort_unstable();
            v.dedup();
            if v.len() != dim {
                return Err(Error::InvalidPolytope(format!("vertex {i} lies on {} facets, expected {dim}", v.len())));
            }
            if let Some(&f) = v.iter().find(|&&f| f >= num_facets) {
                return Err(Error::InvalidPolytope(format!("vertex {i} uses facet {f} of {num_facets}")));
            }
            sorted.push(v);
        }
        let p = SimplePolytope { dim, num_facets, vertices: sorted };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = self.vertices.clone();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPolytope("repeated vertex".into()));
        }
        if self.vertices.is_empty() {
            return Err(Error::InvalidPolytope("no vertices".into()));
        }
        let mut used = vec![false; self.num_facets];
        for v in &self.vertices {
            for &f in v {
                used[f] = true;
            }
        }
        if let Some(f) = used.iter().position(|u| !u) {
            return Err(Error::InvalidPolytope(format!("facet {f} contains no vertex")));
        }
        for (ridge, owners) in self.ridges() {
            if owners.len() != 2 {
                return Err(Error::InvalidPolytope(format!(
                    "facet set {ridge:?} lies in {} vertices, expected 2",
                    owners.len()
                )));
            }
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPolytope("graph is disconnected".into()));
        }
        Ok(())
    }

    /// Every `(n-1)`-subset of a vertex's facets with the vertices containing it.
    fn ridges(&self) -> BTreeMap<Vec<usize>, Vec<usize>> {
        let mut map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            for skip in 0..self.dim {
                let ridge: Vec<usize> = v.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &f)| f).collect();
                map.entry(ridge).or_default().push(i);
            }
        }
        map
    }

    /// For each vertex, its neighbours together with the facet at the vertex
    /// that does not contain the connecting edge.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (ridge, owners) in self.ridges() {
            if let [a, b] = owners[..] {
                let missing = |v: usize| *self.vertices[v].iter().find(|f| !ridge.contains(f)).expect("n facets");
                adj[a].push((b, missing(a)));
                adj[b].push((a, missing(b)));
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .ridges()
            .into_values()
            .filter_map(|o| match o[..] {
                [a, b] => Some((a.min(b), a.max(b))),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_facets(&self) -> usize {
        self.num_facets
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Index of the vertex with exactly this facet set.
    pub fn vertex_index(&self, facets: &[usize]) -> Option<usize> {
        let mut key = facets.to_vec();
        key.sort_unstable();
        self.vertices.iter().position(|v| *v == key)
    }
}

/// The `k`-simplex: `k + 1` facets, one vertex per `k`-subset of them.
pub fn simplex(k: usize) -> Result<SimplePolytope> {
    if k == 0 {
        return Err(Error::InvalidPolytope("simplex dimension must be at least 1".into()));
    }
    let vertices = (0..=k).rev().map(|skip| (0..=k).filter(|&f| f != skip).collect()).collect();
    SimplePolytope::new(k, k + 1, vertices)
}

/// Cartesian product; the second factor's facets are numbered after the first's.
pub fn product(p1: &SimplePolytope, p2: &SimplePolytope) -> SimplePolytope {
    let offset = p1.num_facets;
    let vertices = p1
        .vertices
        .iter()
        .flat_map(|u| {
            p2.vertices.iter().map(move |v| {
                let mut w = u.clone();
                w.extend(v.iter().map(|f| f + offset));
                w
            })
        })
        .collect();
    SimplePolytope { dim: p1.dim + p2.dim, num_facets: p1.num_facets + p2.num_facets, vertices }
}

/// A connected sum with the facet relabelings of both summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectedSum {
    pub polytope: SimplePolytope,
    /// New index of each facet of the first summand (`None` if it vanished).
    pub facet_map1: Vec<Option<usize>>,
    pub facet_map2: Vec<Option<usize>>,
}

/// Connected sum at `v1` and `v2`; `pairing` matches each facet at `v1` with a
/// facet at `v2`, and every matched couple becomes one facet.
pub fn connected_sum(
    p1: &SimplePolytope,
    v1: usize,
    p2: &SimplePolytope,
    v2: usize,
    pairing: &[(usize, usize)],
) -> Result<ConnectedSum> {
    if p1.dim != p2.dim {
        return Err(Error::NonSimpleSum(format!("dimensions {} and {} differ", p1.dim, p2.dim)));
    }
    let (Some(at1), Some(at2)) = (p1.vertices.get(v1), p2.vertices.get(v2)) else {
        return Err(Error::NonSimpleSum("vertex index out of range".into()));
    };
    let mut left: Vec<usize> = pairing.iter().map(|&(a, _)| a).collect();
    let mut right: Vec<usize> = pairing.iter().map(|&(_, b)| b).collect();
    left.sort_unstable();
    right.sort_unstable();
    if left != *at1 || right != *at2 {
        return Err(Error::NonSimpleSum("pairing is not a bijection between the facets at the two vertices".into()));
    }
    // provisional labels: p1 keeps its own, p2's paired facets take their partner's
    let mut raw2 = vec![0usize; p2.num_facets];
    let mut next = p1.num_facets;
    for (f, slot) in raw2.iter_mut().enumerate() {
        *slot = match pairing.iter().find(|&&(_, b)| b == f) {
            Some(&(a, _)) => a,
            None => {
                next += 1;
                next - 1
            }
        };
    }
    let mut raw_vertices: Vec<Vec<usize>> = p1
        .vertices
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != v1)
        .map(|(_, v)| v.clone())
        .collect();
    raw_vertices.extend(
        p2.vertices
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != v2)
            .map(|(_, v)| v.iter().map(|&f| raw2[f]).collect()),
    );
    // drop facets left without vertices
    let mut used = vec![false; next];
    for v in &raw_vertices {
        for &f in v {
            used[f] = true;
        }
    }
    let mut compact = vec![None; next];
    let mut count = 0;
    for (f, u) in used.iter().enumerate() {
        if *u {
            compact[f] = Some(count);
            count += 1;
        }
    }
    let vertices = raw_vertices
        .into_iter()
        .map(|v| v.into_iter().map(|f| compact[f].expect("used")).collect())
        .collect();
    let polytope = SimplePolytope::new(p1.dim, count, vertices).map_err(|e| Error::NonSimpleSum(e.to_string()))?;
    Ok(ConnectedSum {
        polytope,
        facet_map1: (0..p1.num_facets).map(|f| compact[f]).collect(),
        facet_map2: raw2.iter().map(|&f| compact[f]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplices() {
        let s1 = simplex(1).unwrap();
        assert_eq!((s1.num_facets(), s1.num_vertices()), (2, 2));
        let s2 = simplex(2).unwrap();
        assert_eq!((s2.num_facets(), s2.num_vertices()), (3, 3));
        assert_eq!(s2.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        let s3 = simplex(3).unwrap();
        assert_eq!((s3.num_facets(), s3.num_vertices()), (4, 4));
        assert_eq!(s3.edges().len(), 6);
        assert!(simplex(0).is_err());
    }

    #[test]
    fn products() {
        let s1 = simplex(1).unwrap();
        let s2 = simplex(2).unwrap();
        let square = product(&s1, &s1);
        assert_eq!((square.num_facets(), square.num_vertices(), square.edges().len()), (4, 4, 4));
        let prism = product(&s1, &s2);
        assert_eq!((prism.num_facets(), prism.num_vertices()), (5, 6));
        let pp = product(&s2, &s2);
        assert_eq!((pp.num_facets(), pp.num_vertices()), (6, 9));
        // products satisfy the polytope checks
        SimplePolytope::new(pp.dim(), pp.num_facets(), pp.vertices().to_vec()).unwrap();
    }

    fn identity_pairing(p1: &SimplePolytope, v1: usize, p2: &SimplePolytope, v2: usize) -> Vec<(usize, usize)> {
        p1.vertices()[v1].iter().copied().zip(p2.vertices()[v2].iter().copied()).collect()
    }

    #[test]
    fn connected_sums() {
        let s2 = simplex(2).unwrap();
        let sum = connected_sum(&s2, 0, &s2, 1, &identity_pairing(&s2, 0, &s2, 1)).unwrap();
        assert_eq!((sum.polytope.num_facets(), sum.polytope.num_vertices()), (4, 4));
        let s3 = simplex(3).unwrap();
        let sum = connected_sum(&s3, 0, &s3, 0, &identity_pairing(&s3, 0, &s3, 0)).unwrap();
        // triangular prism
        assert_eq!((sum.polytope.num_facets(), sum.polytope.num_vertices()), (5, 6));
        let s1 = simplex(1).unwrap();
        let sum = connected_sum(&s1, 0, &s1, 0, &identity_pairing(&s1, 0, &s1, 0)).unwrap();
        assert_eq!((sum.polytope.num_facets(), sum.polytope.num_vertices()), (2, 2));
    }

    #[test]
    fn bad_pairing_is_rejected() {
        let s2 = simplex(2).unwrap();
        assert!(matches!(connected_sum(&s2, 0, &s2, 0, &[(0, 0)]), Err(Error::NonSimpleSum(_))));
    }

    #[test]
    fn invalid_incidences() {
        // a vertex with the wrong number of facets
        assert!(SimplePolytope::new(2, 3, vec![vec![0, 1], vec![1]]).is_err());
        // two triangles sharing nothing: disconnected
        let mut v = simplex(2).unwrap().vertices().to_vec();
        v.extend(v.clone().into_iter().map(|x: Vec<usize>| x.iter().map(|f| f + 3).collect()));
        assert!(SimplePolytope::new(2, 6, v).is_err());
    }
}
