//! Colored simple polytopes, colored graphs and torus graphs.

pub mod coloring;
pub mod graph;
pub mod simple;
pub mod torus;

pub use coloring::{
    bott_generators, coloring_polynomial, for_each_gf2_coloring, random_gf2_coloring, random_z_coloring, random_z_coloring_within, simplex_product,
    span_rank, BottGenerator, ColoredPolytope, Coloring, DEFAULT_BOTT_MAX_RANK,
};
pub use graph::{graphs_equivalent, one_skeleton, ColoredGraph, GraphEdge};
pub use simple::{connected_sum, product, simplex, ConnectedSum, SimplePolytope};
pub use torus::{torus_graph_from_pair, TorusEdge, TorusGraph};
