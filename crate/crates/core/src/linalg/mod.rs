//! Exact linear algebra over the base field.

mod eigen;
mod mat;
pub mod sparse;
mod subspace;

pub use eigen::{characteristic_polynomial, eval_poly, rational_generalized_eigenspaces, roots_in_field, Eigen};
pub use mat::Mat;
pub use sparse::{LinMap, SVec};
pub use subspace::{map_kernel, quotient_with_section, Subspace};
