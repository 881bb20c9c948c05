//! JSON wire formats for polynomials, polytopes, graphs, fixed-point data and classes.
//!
//! Output goes through [`serde_json::Value`], whose maps keep keys sorted, so
//! re-serializing a parsed document reproduces it byte for byte.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::character::{Gf2Char, Space, ZChar};
use crate::algebra::ext::ExtPolynomial;
use crate::algebra::gf2::{Gf2Monomial, Gf2Polynomial};
use crate::bordism::{BordismClass, ClassFlavor};
use crate::error::{Error, Result};
use crate::localization::poly::{Coeff, MPoly};
use crate::localization::{FixedPoint, FixedPointData, PointFlavor, SymmetricFunction};
use crate::polytope::{ColoredGraph, ColoredPolytope, Coloring, GraphEdge, SimplePolytope, TorusEdge, TorusGraph};

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn to_canonical_string<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value).map_err(|e| Error::Invalid(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Invalid(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

/// Decodes a document, reporting shape errors as [`Error::Malformed`].
pub fn from_value<T: DeserializeOwned>(value: Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::Malformed(e.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ring {
    #[serde(rename = "gf2")]
    Gf2,
    #[serde(rename = "z-ext")]
    ZExt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: i64,
    pub chars: Vec<Vec<i64>>,
}

/// Polynomial JSON; `flavor` is present only on classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub n: usize,
    pub ring: Ring,
    pub space: Space,
    pub terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flavor: Option<ClassFlavor>,
}

/// A polynomial over either ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyPolynomial {
    Gf2(Gf2Polynomial),
    Ext(ExtPolynomial),
}

impl AnyPolynomial {
    pub fn rank(&self) -> usize {
        match self {
            AnyPolynomial::Gf2(g) => g.rank(),
            AnyPolynomial::Ext(g) => g.rank(),
        }
    }

    pub fn space(&self) -> Space {
        match self {
            AnyPolynomial::Gf2(g) => g.space(),
            AnyPolynomial::Ext(g) => g.space(),
        }
    }

    pub fn dual(&self) -> Result<AnyPolynomial> {
        Ok(match self {
            AnyPolynomial::Gf2(g) => AnyPolynomial::Gf2(g.dual()?),
            AnyPolynomial::Ext(g) => AnyPolynomial::Ext(g.dual()?),
        })
    }

    pub fn differential(&self) -> AnyPolynomial {
        match self {
            AnyPolynomial::Gf2(g) => AnyPolynomial::Gf2(g.differential()),
            AnyPolynomial::Ext(g) => AnyPolynomial::Ext(g.differential()),
        }
    }

    pub fn from_json(doc: &PolynomialJson) -> Result<AnyPolynomial> {
        let n = doc.n;
        for t in &doc.terms {
            if t.chars.len() > n {
                return Err(Error::NotTopDegree { degree: t.chars.len(), rank: n });
            }
            if let Some(c) = t.chars.iter().find(|c| c.len() != n) {
                return Err(Error::CharacterLength { expected: n, got: c.len() });
            }
        }
        match doc.ring {
            Ring::Gf2 => {
                let mut g = Gf2Polynomial::zero(n, doc.space);
                for t in &doc.terms {
                    if t.coeff != 1 {
                        return Err(Error::Invalid("gf2 coefficients must be 1".into()));
                    }
                    g.toggle(Gf2Monomial::new(gf2_chars(&t.chars)?)?);
                }
                Ok(AnyPolynomial::Gf2(g))
            }
            Ring::ZExt => {
                let mut g = ExtPolynomial::zero(n, doc.space);
                for t in &doc.terms {
                    let chars = t.chars.iter().map(|c| ZChar::new(c.clone())).collect::<Result<_>>()?;
                    g.add_wedge(t.coeff, chars)?;
                }
                Ok(AnyPolynomial::Ext(g))
            }
        }
    }

    pub fn to_json(&self) -> PolynomialJson {
        match self {
            AnyPolynomial::Gf2(g) => {
                let n = g.rank();
                let terms = g
                    .monomials()
                    .map(|m| TermJson { coeff: 1, chars: m.chars().iter().map(|c| c.coords(n)).collect() })
                    .collect();
                PolynomialJson { n, ring: Ring::Gf2, space: g.space(), terms, flavor: None }
            }
            AnyPolynomial::Ext(g) => {
                let terms = g
                    .terms()
                    .map(|(m, c)| TermJson { coeff: c, chars: m.chars().iter().map(|z| z.coords().to_vec()).collect() })
                    .collect();
                PolynomialJson { n: g.rank(), ring: Ring::ZExt, space: g.space(), terms, flavor: None }
            }
        }
    }
}

fn gf2_char(coords: &[i64]) -> Result<Gf2Char> {
    if coords.iter().any(|&c| c != 0 && c != 1) {
        return Err(Error::Invalid("gf2 coordinates must be 0 or 1".into()));
    }
    Gf2Char::from_coords(coords)
}

fn gf2_chars(coords: &[Vec<i64>]) -> Result<Vec<Gf2Char>> {
    coords.iter().map(|c| gf2_char(c)).collect()
}

pub fn polynomial_from_value(value: Value) -> Result<AnyPolynomial> {
    AnyPolynomial::from_json(&from_value(value)?)
}

pub fn polynomial_to_value(g: &AnyPolynomial) -> Value {
    serde_json::to_value(g.to_json()).expect("polynomial JSON is serializable")
}

/// Reads a class; a missing `flavor` is inferred from the ring.
pub fn class_from_value(value: Value) -> Result<BordismClass> {
    let doc: PolynomialJson = from_value(value)?;
    let expected = match doc.ring {
        Ring::Gf2 => ClassFlavor::Unoriented,
        Ring::ZExt => ClassFlavor::Unitary,
    };
    if doc.flavor.is_some_and(|f| f != expected) {
        return Err(Error::FlavorMismatch);
    }
    if doc.space != Space::Primal {
        return Err(Error::SpaceMismatch { expected: "primal" });
    }
    match AnyPolynomial::from_json(&doc)? {
        AnyPolynomial::Gf2(g) => BordismClass::unoriented(g),
        AnyPolynomial::Ext(g) => BordismClass::unitary(g),
    }
}

pub fn class_to_value(class: &BordismClass) -> Value {
    let mut doc = match class {
        BordismClass::Unoriented(g) => AnyPolynomial::Gf2(g.clone()).to_json(),
        BordismClass::Unitary(g) => AnyPolynomial::Ext(g.clone()).to_json(),
    };
    doc.flavor = Some(class.flavor());
    serde_json::to_value(doc).expect("class JSON is serializable")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringTarget {
    Gf2,
    Z,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringJson {
    pub target: ColoringTarget,
    pub map: BTreeMap<String, Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeJson {
    pub dim: usize,
    pub facets: usize,
    pub vertices: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<ColoringJson>,
}

/// A polytope and, when the document has one, its coloring.
pub fn polytope_from_value(value: Value) -> Result<(SimplePolytope, Option<Coloring>)> {
    let doc: PolytopeJson = from_value(value)?;
    let p = SimplePolytope::new(doc.dim, doc.facets, doc.vertices)?;
    let Some(col) = doc.coloring else {
        return Ok((p, None));
    };
    let mut by_facet: Vec<Option<Vec<i64>>> = vec![None; doc.facets];
    for (key, coords) in col.map {
        let f: usize = key.parse().map_err(|_| Error::Malformed(format!("facet key {key:?} is not an index")))?;
        if f >= doc.facets {
            return Err(Error::Invalid(format!("facet {f} out of range")));
        }
        if coords.len() != doc.dim {
            return Err(Error::CharacterLength { expected: doc.dim, got: coords.len() });
        }
        by_facet[f] = Some(coords);
    }
    let coords: Vec<Vec<i64>> = by_facet
        .into_iter()
        .enumerate()
        .map(|(f, c)| c.ok_or_else(|| Error::Invalid(format!("facet {f} has no color"))))
        .collect::<Result<_>>()?;
    let coloring = match col.target {
        ColoringTarget::Gf2 => Coloring::Gf2(gf2_chars(&coords)?),
        ColoringTarget::Z => Coloring::Z(coords.into_iter().map(ZChar::new).collect::<Result<_>>()?),
    };
    Ok((p, Some(coloring)))
}

pub fn colored_polytope_from_value(value: Value) -> Result<ColoredPolytope> {
    match polytope_from_value(value)? {
        (p, Some(c)) => ColoredPolytope::new(p, c),
        (_, None) => Err(Error::Invalid("polytope has no coloring".into())),
    }
}

pub fn polytope_to_value(p: &SimplePolytope, coloring: Option<&Coloring>) -> Value {
    let n = p.dim();
    let coloring = coloring.map(|c| {
        let (target, coords): (_, Vec<Vec<i64>>) = match c {
            Coloring::Gf2(cs) => (ColoringTarget::Gf2, cs.iter().map(|x| x.coords(n)).collect()),
            Coloring::Z(cs) => (ColoringTarget::Z, cs.iter().map(|x| x.coords().to_vec()).collect()),
        };
        ColoringJson { target, map: coords.into_iter().enumerate().map(|(f, c)| (f.to_string(), c)).collect() }
    });
    let doc = PolytopeJson { dim: n, facets: p.num_facets(), vertices: p.vertices().to_vec(), coloring };
    serde_json::to_value(doc).expect("polytope JSON is serializable")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    pub alpha: Vec<i64>,
}

/// Graph JSON. Torus graphs list each edge once per orientation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub vertices: usize,
    pub edges: Vec<EdgeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<i8>>,
}

pub fn colored_graph_from_value(value: Value) -> Result<ColoredGraph> {
    let doc: GraphJson = from_value(value)?;
    if doc.sigma.is_some() {
        return Err(Error::InvalidGraph("sigma is only meaningful on torus graphs".into()));
    }
    let edges = doc
        .edges
        .iter()
        .map(|e| {
            if e.alpha.len() != doc.n {
                return Err(Error::CharacterLength { expected: doc.n, got: e.alpha.len() });
            }
            Ok(GraphEdge { u: e.u, v: e.v, alpha: gf2_char(&e.alpha)? })
        })
        .collect::<Result<_>>()?;
    ColoredGraph::new(doc.n, doc.vertices, edges)
}

pub fn colored_graph_to_value(g: &ColoredGraph) -> Value {
    let n = g.rank();
    let edges = g.edges().iter().map(|e| EdgeJson { u: e.u, v: e.v, alpha: e.alpha.coords(n) }).collect();
    let doc = GraphJson { n, vertices: g.num_vertices(), edges, sigma: None };
    serde_json::to_value(doc).expect("graph JSON is serializable")
}

/// Pairs the `k`-th `u → v` entry with the `k`-th `v → u` entry.
pub fn torus_graph_from_value(value: Value) -> Result<TorusGraph> {
    let doc: GraphJson = from_value(value)?;
    let mut pending: HashMap<(usize, usize), VecDeque<(usize, usize, ZChar)>> = HashMap::new();
    let mut edges = Vec::new();
    for e in doc.edges {
        if e.alpha.len() != doc.n {
            return Err(Error::CharacterLength { expected: doc.n, got: e.alpha.len() });
        }
        if e.u == e.v {
            return Err(Error::InvalidGraph(format!("loop at vertex {}", e.u)));
        }
        let alpha = ZChar::new(e.alpha)?;
        match pending.get_mut(&(e.u, e.v)).and_then(|q| q.pop_front()) {
            Some((u, v, first)) => edges.push((u, v, first, alpha)),
            None => pending.entry((e.v, e.u)).or_default().push_back((e.u, e.v, alpha)),
        }
    }
    if let Some((u, v, _)) = pending.values().flatten().next() {
        return Err(Error::InvalidGraph(format!("edge {u} -> {v} has no reverse orientation")));
    }
    let edges = edges.into_iter().map(|(u, v, alpha, alpha_rev)| TorusEdge { u, v, alpha, alpha_rev }).collect();
    TorusGraph::new(doc.n, doc.vertices, edges, doc.sigma)
}

pub fn torus_graph_to_value(g: &TorusGraph) -> Value {
    let edges = g
        .edges()
        .iter()
        .flat_map(|e| {
            [
                EdgeJson { u: e.u, v: e.v, alpha: e.alpha.coords().to_vec() },
                EdgeJson { u: e.v, v: e.u, alpha: e.alpha_rev.coords().to_vec() },
            ]
        })
        .collect();
    let doc = GraphJson { n: g.rank(), vertices: g.num_vertices(), edges, sigma: g.sigma().map(<[i8]>::to_vec) };
    serde_json::to_value(doc).expect("graph JSON is serializable")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointJson {
    pub sign: i8,
    pub weights: Vec<Vec<i64>>,
}

/// Fixed-point JSON; `n` may be omitted when there is at least one point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedPointJson {
    pub flavor: PointFlavor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub points: Vec<PointJson>,
}

pub fn fixed_points_from_value(value: Value) -> Result<FixedPointData> {
    let doc: FixedPointJson = from_value(value)?;
    let n = match (doc.n, doc.points.first()) {
        (Some(n), _) => n,
        (None, Some(p)) => p.weights.len(),
        (None, None) => return Err(Error::Invalid("empty fixed-point data needs \"n\"".into())),
    };
    let points = doc.points.into_iter().map(|p| FixedPoint { sign: p.sign, weights: p.weights }).collect();
    FixedPointData::new(n, doc.flavor, points)
}

pub fn fixed_points_to_value(data: &FixedPointData) -> Value {
    let points = data.points().iter().map(|p| PointJson { sign: p.sign, weights: p.weights.clone() }).collect();
    let doc = FixedPointJson { flavor: data.flavor(), n: Some(data.rank()), points };
    serde_json::to_value(doc).expect("fixed-point JSON is serializable")
}

/// `Σ c_μ m_μ`; coefficients default to 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetricJson {
    pub monomial_partitions: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<i64>>,
}

pub fn symmetric_from_value(value: Value) -> Result<SymmetricFunction> {
    let doc: SymmetricJson = from_value(value)?;
    let coeffs = match doc.coefficients {
        Some(c) if c.len() != doc.monomial_partitions.len() => {
            return Err(Error::Invalid("one coefficient per partition is required".into()))
        }
        Some(c) => c,
        None => vec![1; doc.monomial_partitions.len()],
    };
    SymmetricFunction::from_terms(coeffs.into_iter().zip(doc.monomial_partitions).collect())
}

/// An exact rational: a JSON integer when it fits, otherwise a `"p/q"` string.
pub fn rational_to_value(q: &BigRational) -> Value {
    match q.is_integer().then(|| q.to_integer().to_i64()).flatten() {
        Some(v) => Value::from(v),
        None => Value::from(q.to_string()),
    }
}

/// `{"nvars": k, "terms": [{"coeff": c, "exponents": [..]}]}` in exponent order.
pub fn mpoly_to_value(p: &MPoly<BigRational>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .filter(|(_, c)| !Coeff::is_zero(*c))
        .map(|(e, c)| serde_json::json!({ "coeff": rational_to_value(c), "exponents": e }))
        .collect();
    serde_json::json!({ "nvars": p.nvars(), "terms": terms })
}
