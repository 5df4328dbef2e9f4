use serde::Serialize;

use crate::algebra::{Field, Polynomial};
use crate::ca::{LinearCa, LinearRule};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::subspace::{GrassmannianCode, Subspace};

/// A family of linear CA rules sharing the degree `k` (diameter `k + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaFamily {
    field: Field,
    k: usize,
    members: Vec<LinearRule>,
}

/// Pairwise gcd degrees of a family's rule polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GcdProfile {
    pub max_gcd_degree: usize,
    /// First pair `(i, j)`, `i < j`, in lexicographic order attaining the maximum.
    pub witness_pair: (usize, usize),
    /// Row `i` holds `deg gcd(P_i, P_j)` for `j = i+1, ..., len-1`.
    pub pairwise_degrees: Vec<Vec<usize>>,
}

impl GcdProfile {
    /// `deg gcd(P_i, P_j)` for `i != j`.
    pub fn degree(&self, i: usize, j: usize) -> usize {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.pairwise_degrees[a][b - a - 1]
    }
}

/// The code generated by a family, together with the per-member kernels.
#[derive(Debug, Clone)]
pub struct FamilyCode {
    pub code: GrassmannianCode,
    /// Kernel of member `i` at length `2k`, in member order.
    pub kernels: Vec<Subspace>,
    /// Member pairs whose kernels coincide (never happens for distinct rules).
    pub coincident: Vec<(usize, usize)>,
}

impl CaFamily {
    /// Validates every polynomial as a bipermutive rule of one common degree, with no repeats.
    pub fn new(polys: Vec<Polynomial>) -> Result<CaFamily> {
        let first = polys.first().ok_or(Error::EmptyFamily)?;
        let field = first.field().clone();
        let mut members: Vec<LinearRule> = Vec::with_capacity(polys.len());
        let mut k = 0;
        for (index, p) in polys.into_iter().enumerate() {
            if p.field() != &field {
                return Err(Error::FieldMismatch);
            }
            let rule = LinearRule::new(p)?;
            if index == 0 {
                k = rule.k();
            } else if rule.k() != k {
                return Err(Error::MixedDegree {
                    index,
                    expected: k,
                    found: rule.k(),
                });
            }
            if let Some(prev) = members.iter().position(|m| m == &rule) {
                return Err(Error::DuplicateMember(prev, index));
            }
            members.push(rule);
        }
        Ok(CaFamily { field, k, members })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[LinearRule] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.members
            .iter()
            .map(|r| r.polynomial().clone())
            .collect()
    }

    /// Kernels of all members at length `n = 2k`.
    pub fn code(&self) -> FamilyCode {
        self.code_with(Exec::default())
    }

    pub fn code_with(&self, exec: Exec) -> FamilyCode {
        let n = 2 * self.k;
        let kernels: Vec<Subspace> = exec.map_slice(&self.members, |rule| {
            LinearCa::new(rule.clone(), n)
                .expect("2k >= k + 1")
                .kernel()
        });
        let coincident = Exec::pairs(kernels.len())
            .into_iter()
            .filter(|&(i, j)| kernels[i] == kernels[j])
            .collect();
        let code =
            GrassmannianCode::new(&self.field, n, kernels.clone()).expect("kernels share F_q^n");
        FamilyCode {
            code,
            kernels,
            coincident,
        }
    }

    pub fn gcd_profile(&self, exec: Exec) -> Result<GcdProfile> {
        let len = self.len();
        if len < 2 {
            return Err(Error::TooFewMembers(len));
        }
        let rows: Vec<Vec<usize>> = exec.map_range(len, |i| {
            let a = self.members[i].polynomial();
            (i + 1..len)
                .map(|j| {
                    let g = a
                        .gcd(self.members[j].polynomial())
                        .expect("rules are nonzero");
                    g.degree().expect("gcd is nonzero")
                })
                .collect()
        });
        let mut max_gcd_degree = 0;
        let mut witness_pair = (0, 1);
        for (i, row) in rows.iter().enumerate() {
            for (offset, &d) in row.iter().enumerate() {
                if d > max_gcd_degree {
                    max_gcd_degree = d;
                    witness_pair = (i, i + 1 + offset);
                }
            }
        }
        Ok(GcdProfile {
            max_gcd_degree,
            witness_pair,
            pairwise_degrees: rows,
        })
    }

    /// `D = 2k - 2 max deg gcd(P_f, P_g)` over distinct member pairs.
    pub fn predicted_min_distance(&self) -> Result<(usize, GcdProfile)> {
        self.predicted_min_distance_with(Exec::default())
    }

    pub fn predicted_min_distance_with(&self, exec: Exec) -> Result<(usize, GcdProfile)> {
        let profile = self.gcd_profile(exec)?;
        Ok((2 * self.k - 2 * profile.max_gcd_degree, profile))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::new(2, 1).unwrap()
    }

    fn fam(field: &Field, polys: &[&[i64]]) -> Result<CaFamily> {
        CaFamily::new(
            polys
                .iter()
                .map(|c| Polynomial::from_ints(field, c))
                .collect(),
        )
    }

    #[test]
    fn single_member_code() {
        let f = f2();
        let family = fam(&f, &[&[1, 1]]).unwrap();
        let fc = family.code();
        assert_eq!(fc.code.len(), 1);
        assert_eq!(fc.code.codewords()[0].rows_as_values(), vec![vec![1, 1]]);
        assert_eq!(
            family.predicted_min_distance(),
            Err(Error::TooFewMembers(1))
        );
    }

    #[test]
    fn coprime_pair() {
        let f = f2();
        let family = fam(&f, &[&[1, 1, 1], &[1, 0, 1]]).unwrap();
        let fc = family.code();
        assert_eq!(fc.code.len(), 2);
        assert_eq!(fc.code.constant_dim(), Some(2));
        assert!(fc.coincident.is_empty());
        let (d, profile) = family.predicted_min_distance().unwrap();
        assert_eq!(d, 4);
        assert_eq!(profile.max_gcd_degree, 0);
        assert_eq!(fc.code.min_distance().unwrap(), 4);
    }

    #[test]
    fn shared_linear_factor() {
        let f = f2();
        // (X+1)(X^2+X+1) and (X+1)^3
        let family = fam(&f, &[&[1, 0, 0, 1], &[1, 1, 1, 1]]).unwrap();
        let (d, profile) = family.predicted_min_distance().unwrap();
        assert_eq!(d, 4);
        assert_eq!(profile.witness_pair, (0, 1));
        assert_eq!(profile.degree(1, 0), 1);
        assert_eq!(family.code().code.min_distance().unwrap(), 4);
    }

    #[test]
    fn validation_errors() {
        let f = f2();
        assert_eq!(CaFamily::new(vec![]), Err(Error::EmptyFamily));
        assert_eq!(
            fam(&f, &[&[1, 1, 1], &[1, 0, 0, 1]]),
            Err(Error::MixedDegree {
                index: 1,
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            fam(&f, &[&[1, 1, 1], &[1, 1, 1]]),
            Err(Error::DuplicateMember(0, 1))
        );
        assert_eq!(fam(&f, &[&[0, 1, 1]]), Err(Error::NotBipermutive));
    }
}
