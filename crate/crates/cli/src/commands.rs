use std::io::Read;

use serde_json::{json, Value};

use bordism_core::algebra::kernel::{in_image, in_image_unitary, kernel_space, UnitaryWindow, WindowLimits, DEFAULT_MAX_RANK};
use bordism_core::json::{self, AnyPolynomial};
use bordism_core::localization::{equivariant_chern_number, ChernNumber, FixedPointData};
use bordism_core::polytope::{bott_generators, span_rank, torus_graph_from_pair, ColoredPolytope, Coloring, DEFAULT_BOTT_MAX_RANK};
use bordism_core::{verify, Error, Result};

use crate::{Cli, RingArg, Verb};

/// Environment variable overriding every rank cap.
pub const MAX_N_VAR: &str = "BORDISMKIT_MAX_N";

pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(value: &Value) -> Result<Output> {
        Ok(Output { text: json::to_canonical_string(value)?, code: 0 })
    }
}

pub fn error_document(e: &Error) -> String {
    let doc = json!({ "error": { "code": e.code(), "message": e.to_string() } });
    json::to_canonical_string(&doc).expect("error documents serialize")
}

fn max_rank_override() -> Result<Option<usize>> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::Malformed(format!("{MAX_N_VAR} must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn read_input(arg: &str) -> Result<Value> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Malformed(format!("standard input: {e}")))?;
        s
    } else if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Malformed(format!("{arg}: {e}")))?
    };
    json::parse_value(&text)
}

fn has_key(v: &Value, key: &str) -> bool {
    v.get(key).is_some()
}

pub fn run(cli: &Cli) -> Result<Output> {
    let cap = max_rank_override()?;
    match &cli.verb {
        Verb::Dim { n, ring, weight_bound } => match ring {
            RingArg::Gf2 => Output::ok(&json!({ "dim": kernel_space(*n, cap.unwrap_or(DEFAULT_MAX_RANK))?.dim })),
            RingArg::ZExt => {
                let limits = WindowLimits { max_rank: cap.unwrap_or(WindowLimits::default().max_rank), ..Default::default() };
                let basis = UnitaryWindow::new(*n, *weight_bound, limits)?.kernel_basis()?;
                Output::ok(&json!({ "dim": basis.len(), "weight_bound": weight_bound }))
            }
        },
        Verb::Check(input) => {
            let check = match json::polynomial_from_value(read_input(&input.input)?)? {
                AnyPolynomial::Gf2(g) => in_image(&g),
                AnyPolynomial::Ext(g) => in_image_unitary(&g),
            };
            Output::ok(&serde_json::to_value(check).expect("serializable"))
        }
        Verb::Dual(input) => {
            let g = json::polynomial_from_value(read_input(&input.input)?)?;
            Output::ok(&json::polynomial_to_value(&g.dual()?))
        }
        Verb::Diff(input) => {
            let g = json::polynomial_from_value(read_input(&input.input)?)?;
            Output::ok(&json::polynomial_to_value(&g.differential()))
        }
        Verb::PolyOfPolytope(input) => {
            let cp = json::colored_polytope_from_value(read_input(&input.input)?)?;
            Output::ok(&json::polynomial_to_value(&AnyPolynomial::Gf2(cp.coloring_polynomial()?)))
        }
        Verb::PolyOfGraph(input) => {
            let g = json::colored_graph_from_value(read_input(&input.input)?)?;
            Output::ok(&json::polynomial_to_value(&AnyPolynomial::Gf2(g.polynomial())))
        }
        Verb::TorusPoly { input, orient } => {
            let doc = read_input(&input.input)?;
            let graph = if has_key(&doc, "dim") {
                let cp = json::colored_polytope_from_value(doc)?;
                if !matches!(cp.coloring(), Coloring::Z(_)) {
                    return Err(Error::FlavorMismatch);
                }
                torus_graph_from_pair(&cp)?
            } else {
                let g = json::torus_graph_from_value(doc)?;
                if *orient && g.sigma().is_none() {
                    g.orient()?
                } else {
                    g
                }
            };
            Output::ok(&json::polynomial_to_value(&AnyPolynomial::Ext(graph.polynomial()?)))
        }
        Verb::Chern { input, i, j, degree_bound } => {
            let doc = read_input(&input.input)?;
            let data = if has_key(&doc, "points") {
                json::fixed_points_from_value(doc)?
            } else {
                match json::polynomial_from_value(doc)? {
                    AnyPolynomial::Ext(g) => FixedPointData::from_ext(&g)?,
                    AnyPolynomial::Gf2(_) => return Err(Error::FlavorMismatch),
                }
            };
            chern(&data, i.zip(*j), *degree_bound)
        }
        Verb::Reduce(input) => {
            let class = json::class_from_value(read_input(&input.input)?)?;
            Output::ok(&json::class_to_value(&class.reduce()?))
        }
        Verb::Generators { n } => generators(*n, cap.unwrap_or(DEFAULT_BOTT_MAX_RANK)),
        Verb::Verify { criteria, seed } => {
            let ids: Vec<u8> = if criteria.is_empty() { (1..=10).collect() } else { criteria.clone() };
            let reports: Vec<_> = ids
                .iter()
                .map(|&id| {
                    let r = verify::run_criterion(id, *seed);
                    eprintln!("{}", r.line());
                    r
                })
                .collect();
            let passed = reports.iter().all(|r| r.passed);
            let doc = json!({ "criteria": reports, "passed": passed, "seed": seed });
            Ok(Output { text: json::to_canonical_string(&doc)?, code: if passed { 0 } else { 1 } })
        }
    }
}

fn chern_entry(c: &ChernNumber) -> Value {
    json!({
        "i": c.i,
        "j": c.j,
        "polynomial": c.is_polynomial(),
        "integral": c.is_integral(),
        "value": c.value().as_ref().map(json::rational_to_value),
        "quotient": c.sum.quotient.as_ref().map(json::mpoly_to_value),
    })
}

fn chern(data: &FixedPointData, single: Option<(u32, u32)>, degree_bound: Option<u32>) -> Result<Output> {
    if let Some((i, j)) = single {
        return Output::ok(&chern_entry(&equivariant_chern_number(data, i, j)?));
    }
    let n = data.rank() as u32;
    let bound = degree_bound.unwrap_or(2 * n);
    let mut numbers = Vec::new();
    let mut all_vanish = true;
    for j in 0..=bound / 2 {
        for i in 0..=bound - 2 * j {
            let c = equivariant_chern_number(data, i, j)?;
            all_vanish &= c.vanishes();
            numbers.push(chern_entry(&c));
        }
    }
    Output::ok(&json!({ "n": n, "degree_bound": bound, "numbers": numbers, "all_vanish": all_vanish }))
}

fn generators(n: usize, cap: usize) -> Result<Output> {
    let gens = bott_generators(n, cap)?;
    let polys: Vec<_> = gens.iter().map(|g| g.polynomial.clone()).collect();
    let rank = span_rank(&polys)?;
    let entries: Vec<Value> = gens
        .into_iter()
        .map(|g| {
            let cp = ColoredPolytope::gf2(g.polytope, g.coloring)?;
            Ok(json!({
                "factors": g.factors,
                "polytope": json::polytope_to_value(cp.polytope(), Some(cp.coloring())),
                "polynomial": json::polynomial_to_value(&AnyPolynomial::Gf2(g.polynomial)),
            }))
        })
        .collect::<Result<_>>()?;
    Output::ok(&json!({ "n": n, "count": entries.len(), "span_rank": rank, "generators": entries }))
}
