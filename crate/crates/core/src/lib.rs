//! Exact curvature of left-invariant metrics on Lie groups, with the
//! foliation, complex-structure and characteristic-polynomial checks used to
//! decide whether harmonic morphisms to surfaces with totally geodesic fibers
//! can exist.

pub mod algebra;
pub mod catalog;
pub mod complex;
pub mod curvature;
pub mod error;
pub mod foliation;
pub mod linalg;
pub mod obstruction;
pub mod poly;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod wedge;

pub use algebra::MetricLieAlgebra;
pub use error::{Error, Result};
pub use scalar::Scalar;
