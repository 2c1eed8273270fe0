//! Exact dimension functionals of finite abstract simplicial complexes.
//!
//! Every value is an exact rational: average simplex cardinality
//! Dim⁺ = f'(1)/f(1), inductive dimension, maximal dimension, and the limits
//! of these under Barycentric refinement.

pub mod barycentric;
pub mod bitset;
pub mod complex;
pub mod error;
pub mod experiments;
pub mod genfun;
pub mod io;
pub mod rational;

pub use complex::{Complex, Family, Graph, PreComplex, Simplex};
pub use error::{Error, Result};
pub use genfun::{FVector, GenPoly};
pub use num_rational::BigRational;
