//! Exact-arithmetic kernel for finite-dimensional weak Hopf algebras.
//!
//! The crate builds groupoid algebras, verifies the weak Hopf axioms and the
//! projection-identity catalog, constructs weak crossed products and cleft
//! extensions, runs both round trips between them, and classifies crossed
//! systems by second-cohomology classes — all over ℚ or GF(p), with no
//! floating point anywhere.

pub mod error;
pub mod field;
pub mod linmap;
pub mod par;
pub mod report;

pub mod structure;

pub mod comodule;
pub mod maction;

pub mod crossed;

pub mod cleft2cross;
pub mod cohom;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linmap::{LinMap, Space};
pub use report::Report;
