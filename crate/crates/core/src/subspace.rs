//! Canonical subspaces of `F_q^n`, the subspace distance and constant-dimension codes.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::algebra::{Field, FieldElement};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::Matrix;

/// A subspace of `F_q^n` stored as its RREF basis (no zero rows).
///
/// The RREF basis is unique, so equality, hashing and ordering all work on it directly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// Span of the rows of `rows`; dependent rows collapse.
    pub fn from_rows(rows: &Matrix) -> Subspace {
        let red = rows.rref();
        let rank = red.rank;
        Subspace {
            basis: red.matrix.select_rows(|r| r < rank),
        }
    }

    pub fn from_vectors(
        field: &Field,
        n: usize,
        vectors: &[Vec<FieldElement>],
    ) -> Result<Subspace> {
        Ok(Subspace::from_rows(&Matrix::from_rows(field, n, vectors)?))
    }

    pub fn zero(field: &Field, n: usize) -> Subspace {
        Subspace {
            basis: Matrix::zeros(field, 0, n),
        }
    }

    pub fn full(field: &Field, n: usize) -> Subspace {
        Subspace {
            basis: Matrix::identity(field, n),
        }
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn contains(&self, v: &[FieldElement]) -> Result<bool> {
        if v.len() != self.ambient_dim() {
            return Err(Error::AmbientMismatch);
        }
        let single = Matrix::from_rows(self.field(), v.len(), &[v.to_vec()])?;
        Ok(self.basis.vstack(&single)?.rank() == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.basis.vstack(&other.basis)?.rank() == other.dim())
    }

    /// `A + B`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::from_rows(&self.basis.vstack(&other.basis)?))
    }

    /// `dim(A + B)`, i.e. the rank of the stacked bases.
    pub fn sum_dim(&self, other: &Subspace) -> Result<usize> {
        self.check_compatible(other)?;
        Ok(self.basis.vstack(&other.basis)?.rank())
    }

    /// `A ∩ B` by the Zassenhaus algorithm: reduce the rows `[a | a]`, `[b | 0]`; rows whose
    /// left half vanishes carry an intersection basis in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient_dim();
        let field = self.field();
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in 0..self.dim() {
            let a = self.basis.row(r);
            rows.push([a, a].concat());
        }
        for r in 0..other.dim() {
            let mut row = other.basis.row(r).to_vec();
            row.resize(2 * n, FieldElement::ZERO);
            rows.push(row);
        }
        let red = Matrix::from_rows(field, 2 * n, &rows)?.rref();
        let meet: Vec<Vec<FieldElement>> = (0..red.rank)
            .filter(|&i| red.pivots[i] >= n)
            .map(|i| red.matrix.row(i)[n..].to_vec())
            .collect();
        Subspace::from_vectors(field, n, &meet)
    }

    /// `d(A, B) = dim A + dim B - 2 dim(A ∩ B)`, using `dim(A ∩ B) = dim A + dim B - dim(A + B)`.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        let s = self.sum_dim(other)?;
        Ok(2 * s - self.dim() - other.dim())
    }

    /// Basis rows as integer encodings, for serialization and display.
    pub fn rows_as_values(&self) -> Vec<Vec<u64>> {
        (0..self.dim())
            .map(|r| self.basis.row(r).iter().map(|e| e.value()).collect())
            .collect()
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the row-major RREF entries.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim()
            .cmp(&other.ambient_dim())
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}^{}, rows {:?})",
            self.dim(),
            self.field(),
            self.ambient_dim(),
            self.rows_as_values()
        )
    }
}

/// A subspace code: distinct subspaces of a common ambient space, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrassmannianCode {
    field: Field,
    n: usize,
    codewords: Vec<Subspace>,
}

/// `[n, ℓ, log_q |C|, D]` of a code.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub max_dim: usize,
    pub size: usize,
    pub log_q_size: f64,
    /// `None` for a single-codeword code, where the minimum distance is undefined.
    pub min_distance: Option<usize>,
}

impl GrassmannianCode {
    /// Sorts the codewords and drops duplicates.
    pub fn new(field: &Field, n: usize, mut codewords: Vec<Subspace>) -> Result<GrassmannianCode> {
        for c in &codewords {
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            if c.ambient_dim() != n {
                return Err(Error::AmbientMismatch);
            }
        }
        codewords.sort();
        codewords.dedup();
        Ok(GrassmannianCode {
            field: field.clone(),
            n,
            codewords,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn codewords(&self) -> &[Subspace] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    /// Common dimension of all codewords, if there is one.
    pub fn constant_dim(&self) -> Option<usize> {
        let first = self.codewords.first()?.dim();
        self.codewords
            .iter()
            .all(|c| c.dim() == first)
            .then_some(first)
    }

    pub fn max_dim(&self) -> usize {
        self.codewords.iter().map(Subspace::dim).max().unwrap_or(0)
    }

    /// Distances for every unordered pair `(i, j)`, `i < j`, in lexicographic pair order.
    pub fn pairwise_distances(&self, exec: Exec) -> Vec<(usize, usize, usize)> {
        let pairs = Exec::pairs(self.len());
        exec.map_slice(&pairs, |&(i, j)| {
            let d = self.codewords[i]
                .distance(&self.codewords[j])
                .expect("codewords share an ambient space");
            (i, j, d)
        })
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_with(Exec::default())
    }

    pub fn min_distance_with(&self, exec: Exec) -> Result<usize> {
        if self.len() < 2 {
            return Err(Error::TooFewCodewords(self.len()));
        }
        Ok(self
            .pairwise_distances(exec)
            .into_iter()
            .map(|(_, _, d)| d)
            .min()
            .expect("at least one pair"))
    }

    pub fn params(&self) -> Result<CodeParams> {
        if self.is_empty() {
            return Err(Error::EmptyCode);
        }
        let q = self.field.order() as f64;
        Ok(CodeParams {
            n: self.n,
            max_dim: self.max_dim(),
            size: self.len(),
            log_q_size: (self.len() as f64).ln() / q.ln(),
            min_distance: self.min_distance().ok(),
        })
    }
}
