//! Linear cellular automata `F_q^n -> F_q^{n-k}` with no boundary wraparound.
//!
//! A rule `f(x_0, ..., x_k) = a_0 x_0 + ... + a_k x_k` is stored as its polynomial
//! `a_0 + a_1 X + ... + a_k X^k`. Output cell `i` is `f` applied to the window
//! `x_i, ..., x_{i+k}`, for `i` in `0..n-k`.

use crate::algebra::{Field, FieldElement, Polynomial};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::subspace::Subspace;

/// A bipermutive linear local rule: `a_0 != 0` and `a_k = 1`, with `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearRule {
    poly: Polynomial,
}

impl LinearRule {
    /// Rules whose leading coefficient is nonzero but not 1 are rejected; see
    /// [`normalize_monic`] to rescale them first.
    pub fn new(poly: Polynomial) -> Result<LinearRule> {
        match poly.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::DegreeZero),
            Some(_) => {}
        }
        if poly.constant_term().is_zero() || !poly.is_monic() {
            return Err(Error::NotBipermutive);
        }
        Ok(LinearRule { poly })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn field(&self) -> &Field {
        self.poly.field()
    }

    /// Degree `k` of the rule polynomial (the diameter minus one).
    pub fn k(&self) -> usize {
        self.poly.degree().expect("rules are nonzero")
    }

    pub fn diameter(&self) -> usize {
        self.k() + 1
    }

    /// The local rule applied to one window of `k + 1` cells.
    pub fn apply(&self, window: &[FieldElement]) -> FieldElement {
        let f = self.field();
        self.poly
            .coeffs()
            .iter()
            .zip(window)
            .fold(FieldElement::ZERO, |acc, (&a, &x)| f.add(acc, f.mul(a, x)))
    }
}

/// Rescales a nonzero polynomial so that its leading coefficient is 1.
pub fn normalize_monic(poly: &Polynomial) -> Result<Polynomial> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly.monic())
}

/// A linear CA of length `n` driven by a [`LinearRule`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCa {
    rule: LinearRule,
    n: usize,
}

impl LinearCa {
    pub fn new(rule: LinearRule, n: usize) -> Result<LinearCa> {
        if rule.diameter() > n {
            return Err(Error::LatticeTooShort {
                n,
                diameter: rule.diameter(),
            });
        }
        Ok(LinearCa { rule, n })
    }

    pub fn rule(&self) -> &LinearRule {
        &self.rule
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn output_len(&self) -> usize {
        self.n - self.rule.k()
    }

    /// The `(n-k) x n` banded matrix whose row `i` holds `a_0..a_k` starting at column `i`.
    pub fn transition_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rule.field(), self.output_len(), self.n);
        for i in 0..self.output_len() {
            for (j, &a) in self.rule.poly.coeffs().iter().enumerate() {
                m.set(i, i + j, a);
            }
        }
        m
    }

    pub fn eval(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        let d = self.rule.diameter();
        Ok(x.windows(d).map(|w| self.rule.apply(w)).collect())
    }

    /// Preimage of the zero configuration whose first `k` cells are `seed`.
    ///
    /// Remaining cells follow the recurrence `x_i = -(a_0 x_{i-k} + ... + a_{k-1} x_{i-1})`,
    /// i.e. the output stream of an order-`k` LFSR with feedback polynomial `P_f`.
    pub fn lfsr_preimage(&self, seed: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let k = self.rule.k();
        if seed.len() != k {
            return Err(Error::SeedLengthMismatch {
                expected: k,
                found: seed.len(),
            });
        }
        let f = self.rule.field();
        let taps = &self.rule.poly.coeffs()[..k];
        let mut x = Vec::with_capacity(self.n);
        x.extend_from_slice(seed);
        for i in k..self.n {
            let feedback = taps
                .iter()
                .zip(&x[i - k..i])
                .fold(FieldElement::ZERO, |acc, (&a, &v)| f.add(acc, f.mul(a, v)));
            x.push(f.neg(feedback));
        }
        Ok(x)
    }

    /// Kernel spanned by the LFSR preimages of the `k` unit seeds.
    pub fn kernel(&self) -> Subspace {
        let k = self.rule.k();
        let rows: Vec<Vec<FieldElement>> = (0..k)
            .map(|i| {
                let mut seed = vec![FieldElement::ZERO; k];
                seed[i] = FieldElement::ONE;
                self.lfsr_preimage(&seed).expect("seed has length k")
            })
            .collect();
        let basis =
            Matrix::from_rows(self.rule.field(), self.n, &rows).expect("rows have length n");
        Subspace::from_rows(&basis)
    }

    /// Kernel computed as the nullspace of the transition matrix.
    pub fn kernel_via_nullspace(&self) -> Subspace {
        Subspace::from_rows(&self.transition_matrix().nullspace())
    }
}

/// Recovers the rule whose length-`n` kernel is `space`, if there is one.
///
/// The rule coefficients are the vectors annihilating every length-`k+1` window of every
/// basis vector; a CA kernel has exactly one such direction, with `a_k != 0`.
pub fn rule_from_kernel(space: &Subspace) -> Option<LinearRule> {
    let k = space.dim();
    let n = space.ambient_dim();
    if k == 0 || k + 1 > n {
        return None;
    }
    let basis = space.basis();
    let mut windows = Vec::new();
    for r in 0..basis.rows() {
        for w in basis.row(r).windows(k + 1) {
            windows.push(w.to_vec());
        }
    }
    let system = Matrix::from_rows(space.field(), k + 1, &windows).ok()?;
    let ns = system.nullspace();
    if ns.rows() != 1 {
        return None;
    }
    let poly = normalize_monic(&Polynomial::new(space.field(), ns.row(0).to_vec())).ok()?;
    let rule = LinearRule::new(poly).ok()?;
    let ca = LinearCa::new(rule.clone(), n).ok()?;
    (ca.kernel() == *space).then_some(rule)
}
