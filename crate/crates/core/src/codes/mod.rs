//! Codes generated by families of linear CA: construction, gcd-based distance prediction,
//! counting and maximal-family constructions.

pub mod clique;
pub mod construction;
pub mod counting;
pub mod family;
pub mod search;

pub use construction::{
    construction_uniform_gcd, verify_family, verify_family_with, FamilyCheck, FamilyReport,
    GcdCondition, Violation,
};
pub use counting::{
    count_irreducibles, count_irreducibles_nonzero_constant, enumerate_irreducibles, gauss_count,
    max_coprime_family_size, max_coprime_family_size_literal, mobius, monic_polynomials,
    rule_polynomials, uniform_gcd_family_size, uniform_gcd_family_size_literal, GaussTerm,
    IrreducibleCount,
};
pub use family::{CaFamily, FamilyCode, GcdProfile};
pub use search::{search_max_family, search_max_uniform_gcd, DEFAULT_BUDGET};
