//! Exact computations with finite-dimensional cocommutative Hopf braces given
//! by structure constants.

pub mod brace;
pub mod catalog;
pub mod error;
pub mod field;
pub mod format;
pub mod hopf;
pub mod linalg;
pub mod report;
pub mod skew;
pub mod structure;
pub mod subquot;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use report::VerificationReport;
