//! Subspace codes generated by linear cellular automata over finite fields.
//!
//! The kernel of a linear CA with a bipermutive rule of degree `k` is a `k`-dimensional
//! subspace; a family of rules yields a constant-dimension code whose minimum distance
//! is governed by pairwise gcds of the rule polynomials.

pub mod algebra;
pub mod ca;
pub mod codes;
pub mod error;
pub mod exec;
pub mod format;
pub mod linalg;
pub mod netsim;
pub mod subspace;

pub use algebra::{Field, FieldElement, Polynomial};
pub use ca::{LinearCa, LinearRule};
pub use error::{Error, Result};
pub use exec::Exec;
pub use linalg::Matrix;
pub use subspace::{GrassmannianCode, Subspace};

/// Crate version, embedded in CLI manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
