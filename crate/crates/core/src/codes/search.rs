//! Exhaustive search for the largest family with bounded pairwise gcds.
//!
//! Candidates become vertices of a compatibility graph; a maximum clique is a largest
//! admissible family. Only meant for small instances, guarded by a vertex budget.

use crate::algebra::{Field, Polynomial};
use crate::codes::clique::{max_clique, Graph};
use crate::codes::counting::rule_polynomials;
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Default cap on the number of candidate polynomials.
pub const DEFAULT_BUDGET: usize = 4096;

fn search(
    candidates: Vec<Polynomial>,
    budget: usize,
    exec: Exec,
    compatible: impl Fn(&Polynomial, &Polynomial) -> bool + Sync,
) -> Result<Vec<Polynomial>> {
    if candidates.len() > budget {
        return Err(Error::BudgetExceeded {
            size: candidates.len(),
            budget,
        });
    }
    let n = candidates.len();
    let rows: Vec<Vec<usize>> = exec.map_range(n, |i| {
        (i + 1..n)
            .filter(|&j| compatible(&candidates[i], &candidates[j]))
            .collect()
    });
    let mut graph = Graph::new(n);
    for (i, row) in rows.iter().enumerate() {
        for &j in row {
            graph.add_edge(i, j);
        }
    }
    Ok(max_clique(&graph, exec)
        .into_iter()
        .map(|i| candidates[i].clone())
        .collect())
}

/// A largest subset of `Poly_k(F_q)` with every pairwise gcd of degree at most `t`.
///
/// Ties between maximum families resolve to the lexicographically first one in
/// polynomial order.
pub fn search_max_family(
    k: usize,
    t: usize,
    field: &Field,
    budget: usize,
    exec: Exec,
) -> Result<Vec<Polynomial>> {
    let candidates = rule_polynomials(k, field)?;
    search(candidates, budget, exec, |a, b| {
        a.gcd(b).expect("nonzero").degree().expect("nonzero gcd") <= t
    })
}

/// A largest subset of the multiples of `g` in `Poly_k(F_q)` with every pairwise gcd equal to `g`.
pub fn search_max_uniform_gcd(
    k: usize,
    g: &Polynomial,
    budget: usize,
    exec: Exec,
) -> Result<Vec<Polynomial>> {
    let t = g.degree().ok_or(Error::ZeroPolynomial)?;
    if !g.is_monic() {
        return Err(Error::GNotMonic);
    }
    if g.constant_term().is_zero() {
        return Err(Error::GZeroConstant);
    }
    if t > k {
        return Err(Error::DegreeTooLarge { t, k });
    }
    let mut candidates = Vec::new();
    for p in rule_polynomials(k, g.field())? {
        if g.divides(&p)? {
            candidates.push(p);
        }
    }
    search(candidates, budget, exec, |a, b| {
        a.gcd(b).expect("nonzero") == *g
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::counting::max_coprime_family_size;

    fn f2() -> Field {
        Field::new(2, 1).unwrap()
    }

    #[test]
    fn coprime_searches() {
        let f = f2();
        assert_eq!(
            search_max_family(2, 0, &f, DEFAULT_BUDGET, Exec::default())
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            search_max_family(3, 3, &f, DEFAULT_BUDGET, Exec::default())
                .unwrap()
                .len(),
            4
        );
        let k4 = search_max_family(4, 0, &f, DEFAULT_BUDGET, Exec::default()).unwrap();
        assert_eq!(k4.len(), 5);
        assert_eq!(k4.len() as u128, max_coprime_family_size(4, &f).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let f = f2();
        assert_eq!(
            search_max_family(5, 0, &f, 10, Exec::Sequential),
            Err(Error::BudgetExceeded {
                size: 16,
                budget: 10
            })
        );
    }

    #[test]
    fn uniform_gcd_search() {
        let f = f2();
        let g = Polynomial::from_ints(&f, &[1, 1]);
        let s = search_max_uniform_gcd(3, &g, DEFAULT_BUDGET, Exec::Sequential).unwrap();
        assert_eq!(s.len(), 2);
        for p in &s {
            assert!(g.divides(p).unwrap());
        }
    }

    #[test]
    fn result_independent_of_exec() {
        let f = Field::new(3, 1).unwrap();
        let a = search_max_family(3, 1, &f, DEFAULT_BUDGET, Exec::Sequential).unwrap();
        let b = search_max_family(3, 1, &f, DEFAULT_BUDGET, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
