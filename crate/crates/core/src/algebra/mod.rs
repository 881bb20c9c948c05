//! Polynomial and exterior algebra on character lattices.

pub mod bitmatrix;
pub mod character;
pub mod ext;
pub mod gf2;
pub mod kernel;
pub mod linalg;
pub mod sparse;

pub use character::{Gf2Char, Space, ZChar};
pub use ext::{ExtMonomial, ExtPolynomial};
pub use gf2::{Gf2Monomial, Gf2Polynomial};
pub use kernel::{
    in_image, in_image_unitary, kernel_sample_unitary, kernel_space, Flavor, ImageCheck, KernelSpace,
    UnitaryWindow, WindowLimits,
};
