//! Standard small examples: the real projective plane and the complex
//! projective line, plane and `CP^1 × CP^1`.

use crate::algebra::character::{Gf2Char, ZChar};
use crate::polytope::{product, simplex, ColoredPolytope};

fn z(c: &[i64]) -> ZChar {
    ZChar::new(c.to_vec()).expect("nonzero")
}

fn g(c: &[i64]) -> Gf2Char {
    Gf2Char::from_coords(c).expect("nonzero")
}

/// `Δ²` colored by `(1,0), (0,1), (1,1)`.
pub fn rp2() -> ColoredPolytope {
    ColoredPolytope::gf2(simplex(2).expect("valid"), vec![g(&[1, 0]), g(&[0, 1]), g(&[1, 1])]).expect("valid coloring")
}

/// `Δ¹` with characteristic vectors `1, -1`.
pub fn cp1() -> ColoredPolytope {
    ColoredPolytope::z(simplex(1).expect("valid"), vec![z(&[1]), z(&[-1])]).expect("valid coloring")
}

/// The square with characteristic vectors `±e_1, ±e_2`.
pub fn cp1_squared() -> ColoredPolytope {
    let square = product(&simplex(1).expect("valid"), &simplex(1).expect("valid"));
    ColoredPolytope::z(square, vec![z(&[1, 0]), z(&[-1, 0]), z(&[0, 1]), z(&[0, -1])]).expect("valid coloring")
}

/// `Δ²` with characteristic vectors `(1,0), (0,1), (-1,-1)`.
pub fn cp2() -> ColoredPolytope {
    ColoredPolytope::z(simplex(2).expect("valid"), vec![z(&[1, 0]), z(&[0, 1]), z(&[-1, -1])]).expect("valid coloring")
}
