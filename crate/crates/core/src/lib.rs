//! Exact verification of axial algebras, fusion laws and their central extensions.

pub mod algebra;
pub mod algfile;
pub mod catalog;
pub mod error;
pub mod extension;
pub mod field;
pub mod fusion;
pub mod linalg;
pub mod miyamoto;
pub mod poly;
pub mod reproduce;
pub mod spectral;

pub use algebra::{Algebra, BilinearForm, Element};
pub use error::{Error, Result};
pub use field::{FieldTag, Scalar};
pub use fusion::{C2Grading, Cell, FusionLaw, ZeroMode};
pub use linalg::{Matrix, Subspace};
