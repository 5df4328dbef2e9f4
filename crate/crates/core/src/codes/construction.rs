//! Maximal families of rule polynomials sharing one pairwise gcd.

use serde::Serialize;

use crate::algebra::Polynomial;
use crate::codes::counting::enumerate_irreducibles;
use crate::error::{Error, Result};

/// Builds a maximal set of degree-`k` rule polynomials whose pairwise gcd is exactly `g`.
///
/// With `t = deg g` and `r = k - t`, the cofactor set `T` starts as the irreducibles of
/// degree `r`. For each `1 <= i < r/2` the `j`-th irreducible of degree `i` is multiplied
/// by the `j`-th irreducible of degree `r - i`; when `r` is even the irreducibles of degree
/// `r/2` are squared. `X` is never used as a factor. The output is `{g f : f in T}`, sorted.
pub fn construction_uniform_gcd(k: usize, g: &Polynomial) -> Result<Vec<Polynomial>> {
    let t = g.degree().ok_or(Error::ZeroPolynomial)?;
    if !g.is_monic() {
        return Err(Error::GNotMonic);
    }
    if g.constant_term().is_zero() {
        return Err(Error::GZeroConstant);
    }
    if k == 0 {
        return Err(Error::NonPositive);
    }
    if t > k {
        return Err(Error::DegreeTooLarge { t, k });
    }
    let field = g.field();
    let r = k - t;
    if r == 0 {
        return Ok(vec![g.clone()]);
    }
    let mut cofactors = enumerate_irreducibles(r, field, true)?;
    for i in 1..=r / 2 {
        let small = enumerate_irreducibles(i, field, true)?;
        if 2 * i == r {
            for p in &small {
                cofactors.push(p.mul(p)?);
            }
        } else {
            let large = enumerate_irreducibles(r - i, field, true)?;
            assert!(
                small.len() <= large.len(),
                "irreducible counts are non-decreasing in the degree"
            );
            for (a, b) in small.iter().zip(&large) {
                cofactors.push(a.mul(b)?);
            }
        }
    }
    let mut out = cofactors
        .iter()
        .map(|f| g.mul(f))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Pairwise gcd requirement checked by [`verify_family_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GcdCondition {
    /// Every pair has gcd exactly this (monic) polynomial.
    Exact(Polynomial),
    /// Every pair has gcd of degree at most this bound.
    AtMostDegree(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    /// Required degree of every member; `None` only demands a common degree.
    pub degree: Option<usize>,
    pub gcd: GcdCondition,
}

/// First problem found by [`verify_family_with`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    FieldMismatch {
        index: usize,
    },
    NotMonic {
        index: usize,
    },
    ZeroConstant {
        index: usize,
    },
    WrongDegree {
        index: usize,
        expected: usize,
        found: Option<usize>,
    },
    MixedDegree {
        index: usize,
        expected: usize,
        found: Option<usize>,
    },
    Duplicate {
        first: usize,
        second: usize,
    },
    GcdMismatch {
        first: usize,
        second: usize,
        gcd: String,
    },
    GcdDegreeTooLarge {
        first: usize,
        second: usize,
        degree: usize,
        bound: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub members: usize,
    pub pairs_checked: usize,
    pub violation: Option<Violation>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Exact-gcd check: `Poly_k` membership for every element and `gcd = g` for every pair.
pub fn verify_family(family: &[Polynomial], g: &Polynomial) -> FamilyReport {
    verify_family_with(
        family,
        &FamilyCheck {
            degree: None,
            gcd: GcdCondition::Exact(g.clone()),
        },
    )
}

pub fn verify_family_with(family: &[Polynomial], check: &FamilyCheck) -> FamilyReport {
    let mut report = FamilyReport {
        members: family.len(),
        pairs_checked: 0,
        violation: None,
    };
    let expected_degree = check
        .degree
        .or_else(|| family.first().and_then(Polynomial::degree));
    for (index, f) in family.iter().enumerate() {
        let violation = if f.field() != family[0].field() {
            Some(Violation::FieldMismatch { index })
        } else if !f.is_monic() {
            Some(Violation::NotMonic { index })
        } else if f.constant_term().is_zero() {
            Some(Violation::ZeroConstant { index })
        } else if f.degree() != expected_degree {
            let expected = expected_degree.unwrap_or(0);
            Some(if check.degree.is_some() {
                Violation::WrongDegree {
                    index,
                    expected,
                    found: f.degree(),
                }
            } else {
                Violation::MixedDegree {
                    index,
                    expected,
                    found: f.degree(),
                }
            })
        } else {
            None
        };
        if violation.is_some() {
            report.violation = violation;
            return report;
        }
    }
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            report.pairs_checked += 1;
            if family[i] == family[j] {
                report.violation = Some(Violation::Duplicate {
                    first: i,
                    second: j,
                });
                return report;
            }
            let gcd = family[i]
                .gcd(&family[j])
                .expect("members are nonzero and share a field");
            let violation = match &check.gcd {
                GcdCondition::Exact(g) if gcd != g.monic() => Some(Violation::GcdMismatch {
                    first: i,
                    second: j,
                    gcd: gcd.to_string(),
                }),
                GcdCondition::AtMostDegree(bound) if gcd.degree().unwrap_or(0) > *bound => {
                    Some(Violation::GcdDegreeTooLarge {
                        first: i,
                        second: j,
                        degree: gcd.degree().unwrap_or(0),
                        bound: *bound,
                    })
                }
                _ => None,
            };
            if violation.is_some() {
                report.violation = violation;
                return report;
            }
        }
    }
    report
}
