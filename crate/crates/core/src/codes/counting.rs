//! Counting and enumerating monic irreducible polynomials.
//!
//! Two conventions for the degree-1 count live side by side: Gauss's formula counts `X`
//! among the linear irreducibles, but `X` has a zero constant term and can never be a
//! factor of a bipermutive rule. The family-size formulas therefore use the count with
//! `X` removed (`I'_1 = q - 1`, `I'_j = I_j` for `j >= 2`); the literal variant is kept
//! for reporting.

use serde::Serialize;

use crate::algebra::{Field, FieldElement, Polynomial};
use crate::error::{Error, Result};

/// Möbius function.
pub fn mobius(n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let mut n = n;
    let mut sign = 1i8;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return Ok(0);
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// One summand `μ(d) q^{n/d}` of Gauss's formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussTerm {
    pub divisor: u64,
    pub mobius: i8,
    pub power: u128,
}

/// Gauss's count of monic irreducibles of one degree, with its terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibleCount {
    pub degree: u64,
    pub terms: Vec<GaussTerm>,
    pub count: u128,
    pub count_excluding_x: u128,
}

/// `I_n = (1/n) Σ_{d | n} μ(d) q^{n/d}` with every term listed.
pub fn gauss_count(n: u64, q: u64) -> Result<IrreducibleCount> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let mut terms = Vec::new();
    let mut sum: i128 = 0;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let mu = mobius(d)?;
        let exp = u32::try_from(n / d).map_err(|_| Error::Overflow)?;
        let power = (q as u128).checked_pow(exp).ok_or(Error::Overflow)?;
        let signed = i128::try_from(power).map_err(|_| Error::Overflow)?;
        sum = sum
            .checked_add(mu as i128 * signed)
            .ok_or(Error::Overflow)?;
        terms.push(GaussTerm {
            divisor: d,
            mobius: mu,
            power,
        });
    }
    debug_assert_eq!(sum % n as i128, 0);
    let count = (sum / n as i128) as u128;
    let count_excluding_x = if n == 1 { count - 1 } else { count };
    Ok(IrreducibleCount {
        degree: n,
        terms,
        count,
        count_excluding_x,
    })
}

/// Number of monic irreducible polynomials of degree `n` over `field`.
pub fn count_irreducibles(n: u64, field: &Field) -> Result<u128> {
    Ok(gauss_count(n, field.order())?.count)
}

/// Same count with `X` excluded (differs only at `n = 1`).
pub fn count_irreducibles_nonzero_constant(n: u64, field: &Field) -> Result<u128> {
    Ok(gauss_count(n, field.order())?.count_excluding_x)
}

fn family_size(r: u64, q: u64, exclude_x: bool) -> Result<u128> {
    if r == 0 {
        return Ok(1);
    }
    let pick = |j: u64| -> Result<u128> {
        let c = gauss_count(j, q)?;
        Ok(if exclude_x {
            c.count_excluding_x
        } else {
            c.count
        })
    };
    let mut total = pick(r)?;
    for j in 1..=r / 2 {
        total = total.checked_add(pick(j)?).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Size `N_k` of the largest pairwise-coprime subset of `Poly_k(F_q)`:
/// `I'_k + Σ_{j=1}^{⌊k/2⌋} I'_j`.
pub fn max_coprime_family_size(k: u64, field: &Field) -> Result<u128> {
    if k == 0 {
        return Err(Error::NonPositive);
    }
    family_size(k, field.order(), true)
}

/// `N_k` evaluated with Gauss's `I_1 = q` (counts `X`); reported for comparison only.
pub fn max_coprime_family_size_literal(k: u64, field: &Field) -> Result<u128> {
    if k == 0 {
        return Err(Error::NonPositive);
    }
    family_size(k, field.order(), false)
}

/// Size of the family built for a common gcd of degree `t`: the coprime count at `k - t`.
pub fn uniform_gcd_family_size(k: u64, t: u64, field: &Field) -> Result<u128> {
    if k == 0 {
        return Err(Error::NonPositive);
    }
    if t > k {
        return Err(Error::DegreeTooLarge {
            t: t as usize,
            k: k as usize,
        });
    }
    family_size(k - t, field.order(), true)
}

/// Literal-`I_1` variant of [`uniform_gcd_family_size`].
pub fn uniform_gcd_family_size_literal(k: u64, t: u64, field: &Field) -> Result<u128> {
    if k == 0 {
        return Err(Error::NonPositive);
    }
    if t > k {
        return Err(Error::DegreeTooLarge {
            t: t as usize,
            k: k as usize,
        });
    }
    family_size(k - t, field.order(), false)
}

/// All monic polynomials of degree `n`, in [`Polynomial`] order.
pub fn monic_polynomials(n: usize, field: &Field) -> Result<Vec<Polynomial>> {
    let q = field.order();
    let total = u32::try_from(n)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .ok_or(Error::Overflow)?;
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        // a_0 is the most significant digit of idx
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        let mut v = idx;
        for slot in coeffs[..n].iter_mut().rev() {
            *slot = field.element(v % q).expect("digit below q");
            v /= q;
        }
        coeffs[n] = FieldElement::ONE;
        out.push(Polynomial::new(field, coeffs));
    }
    Ok(out)
}

/// `Poly_k(F_q)`: monic polynomials of degree `k` with nonzero constant term, sorted.
pub fn rule_polynomials(k: usize, field: &Field) -> Result<Vec<Polynomial>> {
    if k == 0 {
        return Err(Error::NonPositive);
    }
    Ok(monic_polynomials(k, field)?
        .into_iter()
        .filter(|p| !p.constant_term().is_zero())
        .collect())
}

/// Monic irreducibles of degree `n`, sorted; with `exclude_x`, the polynomial `X` is dropped.
pub fn enumerate_irreducibles(n: usize, field: &Field, exclude_x: bool) -> Result<Vec<Polynomial>> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let x = Polynomial::x(field);
    Ok(monic_polynomials(n, field)?
        .into_iter()
        .filter(|p| !(exclude_x && *p == x))
        .filter(Polynomial::is_irreducible)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64, m: usize) -> Field {
        Field::new(p, m).unwrap()
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(4).unwrap(), 0);
        assert_eq!(mobius(6).unwrap(), 1);
        assert_eq!(mobius(30).unwrap(), -1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(0), Err(Error::NonPositive));
    }

    #[test]
    fn gauss_counts_over_f2() {
        let f = field(2, 1);
        assert_eq!(count_irreducibles(1, &f).unwrap(), 2);
        assert_eq!(count_irreducibles(2, &f).unwrap(), 1);
        assert_eq!(count_irreducibles(3, &f).unwrap(), 2);
        assert_eq!(count_irreducibles(0, &f), Err(Error::NonPositive));
        let c = gauss_count(6, 2).unwrap();
        assert_eq!(
            c.terms.iter().map(|t| t.divisor).collect::<Vec<_>>(),
            vec![1, 2, 3, 6]
        );
        assert_eq!(c.count, 9);
    }

    #[test]
    fn irreducible_lists() {
        let f = field(2, 1);
        let lin = enumerate_irreducibles(1, &f, true).unwrap();
        assert_eq!(lin, vec![Polynomial::from_ints(&f, &[1, 1])]);
        assert_eq!(
            enumerate_irreducibles(2, &f, false).unwrap(),
            vec![Polynomial::from_ints(&f, &[1, 1, 1])]
        );
        assert_eq!(
            enumerate_irreducibles(2, &field(3, 1), false)
                .unwrap()
                .len(),
            3
        );
    }

    #[test]
    fn family_sizes() {
        assert_eq!(max_coprime_family_size(2, &field(2, 1)).unwrap(), 2);
        assert_eq!(max_coprime_family_size(3, &field(2, 1)).unwrap(), 3);
        assert_eq!(max_coprime_family_size(1, &field(3, 1)).unwrap(), 2);
        assert_eq!(max_coprime_family_size(4, &field(2, 1)).unwrap(), 5);
        assert_eq!(max_coprime_family_size_literal(2, &field(2, 1)).unwrap(), 3);
        assert_eq!(uniform_gcd_family_size(3, 1, &field(2, 1)).unwrap(), 2);
        assert_eq!(uniform_gcd_family_size(3, 3, &field(2, 1)).unwrap(), 1);
        assert_eq!(
            max_coprime_family_size(0, &field(2, 1)),
            Err(Error::NonPositive)
        );
    }

    #[test]
    fn rule_polynomial_set() {
        let f = field(2, 1);
        let p2 = rule_polynomials(2, &f).unwrap();
        assert_eq!(
            p2,
            vec![
                Polynomial::from_ints(&f, &[1, 0, 1]),
                Polynomial::from_ints(&f, &[1, 1, 1])
            ]
        );
        assert_eq!(rule_polynomials(3, &f).unwrap().len(), 4);
        assert_eq!(rule_polynomials(3, &field(3, 1)).unwrap().len(), 18);
    }
}
