//! Arithmetic in `F_q` and `F_q[X]`.

pub mod field;
pub mod poly;

pub use field::{is_prime, Field, FieldElement, MAX_EXTENSION_DEGREE};
pub use poly::Polynomial;
