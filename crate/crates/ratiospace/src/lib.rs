//! Exact-arithmetic toolkit for sharp monoids and their spaces of ratios.
//!
//! A sharp monoid is realized as (salient rational cone) ∩ lattice.  The
//! crate computes its face lattice with dual descriptions, builds linear
//! sections onto faces, and models the space of ratios of the monoid through
//! chart coordinates indexed by chains of faces.  An explicit contraction
//! homotopy, a witnessed nerve of the chart cover, and an integral homology
//! engine combine into a machine-checkable contractibility certificate.  Log
//! blowups of two-generator ideals and star subdivisions of dual cones give
//! the fiber dichotomy (point vs. interval vs. chain of intervals).
//!
//! Everything is exact: integers and rationals are arbitrary-precision, no
//! floating point is used anywhere, and all sampling derives from explicit
//! seeds, so every result is reproducible bit for bit.
//!
//! The `examples/` directory walks through each capability end to end; the
//! `ratiospace` binary exposes the same operations as CLI verbs emitting
//! stable JSON (see the crate README).

pub mod blowup;
pub mod cli;
pub mod error;
pub mod exactlin;
pub mod json;
pub mod monoid;
pub mod oracle;
pub mod ratio;
pub mod retraction;
pub mod topology;

pub use error::{Error, Result};
pub use monoid::{FaceId, SharpFsMonoid};
