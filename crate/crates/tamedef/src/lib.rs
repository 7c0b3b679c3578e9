//! Basic algebras of the non-local tame 2-blocks, their maximally ordinary
//! modules, and the deformation-ring presentations attached to them.
//!
//! Layout:
//! - [`scalars`]: GF(2^e), truncated Witt vectors Z/2^N, cyclotomic extensions, polynomials.
//! - [`quiver`]: quivers, relations and completion to a normal-form basis.
//! - [`module`]: representations and the homological toolkit (Hom, Ω, Ext¹, stable End).
//! - [`catalog`]: the 24 families, decomposition matrices and module recipes.
//! - [`character`]: generalized decomposition numbers and Galois orbits.
//! - [`deformation`]: R′, S′, Θ and the output presentations.
//! - [`classifier`]: the verification pipeline over families and recipes.

pub mod catalog;
pub mod character;
pub mod classifier;
pub mod deformation;
mod defect;
mod error;
pub mod linalg;
pub mod module;
pub mod quiver;
pub mod scalars;

pub use defect::DefectType;
pub use error::{Error, Result};

/// Default truncation precision for Witt-vector arithmetic.
pub const DEFAULT_PRECISION: u32 = 24;
