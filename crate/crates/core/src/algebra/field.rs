use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};

/// Largest extension degree accepted by [`Field::new`].
pub const MAX_EXTENSION_DEGREE: usize = 4;

/// Extension fields up to this order get precomputed add/mul/inverse tables.
const TABLE_LIMIT: u64 = 256;

/// An element of `F_q`, stored as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
/// where `c_i` are its coordinates over the prime subfield.
///
/// Elements do not carry their field; every operation goes through a [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Integer encoding of the element (base-`p` digits are the coordinates).
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

struct FieldInner {
    p: u64,
    m: usize,
    q: u64,
    /// Monic modulus over `F_p`, ascending coefficients, length `m + 1`. Empty for prime fields.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

/// The finite field `F_q`, `q = p^m`. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.m.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.spec_string())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.spec_string())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > u32::MAX as u64 {
            return Err(Error::FieldTooLarge { p, m: 1 });
        }
        Ok(Field(Arc::new(FieldInner {
            p,
            m: 1,
            q: p,
            modulus: Vec::new(),
            tables: None,
        })))
    }

    /// `F_{p^m}`. For `m > 1` the modulus is the smallest monic irreducible of degree `m`
    /// over `F_p`, comparing coefficient vectors lexicographically from the constant term up.
    pub fn new(p: u64, m: usize) -> Result<Field> {
        if !(1..=MAX_EXTENSION_DEGREE).contains(&m) {
            return Err(Error::InvalidDegree(m));
        }
        let base = Field::prime(p)?;
        if m == 1 {
            return Ok(base);
        }
        let q = p
            .checked_pow(m as u32)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or(Error::FieldTooLarge { p, m })?;
        let modulus = smallest_irreducible(&base, m);
        Ok(Field::with_modulus(p, m, q, modulus))
    }

    fn with_modulus(p: u64, m: usize, q: u64, modulus: Vec<u64>) -> Field {
        let mut inner = FieldInner {
            p,
            m,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Field(Arc::new(inner))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.m
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients over `F_p` (ascending, monic), `None` for a prime field.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.0.m == 1 {
            None
        } else {
            Some(&self.0.modulus)
        }
    }

    /// `"p"` for prime fields, `"p^m"` otherwise.
    pub fn spec_string(&self) -> String {
        if self.0.m == 1 {
            self.0.p.to_string()
        } else {
            format!("{}^{}", self.0.p, self.0.m)
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Element from its integer encoding; fails if `value >= q`.
    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value < self.0.q {
            Ok(FieldElement(value))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.0.q })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u64)
    }

    /// Element from its `m` coordinates over `F_p` (ascending powers of the adjoined root).
    pub fn from_coords(&self, coords: &[u64]) -> Result<FieldElement> {
        if coords.len() != self.0.m {
            return Err(Error::DimensionMismatch {
                expected: self.0.m,
                found: coords.len(),
            });
        }
        let mut value = 0u64;
        for &c in coords.iter().rev() {
            if c >= self.0.p {
                return Err(Error::ElementOutOfRange {
                    value: c,
                    q: self.0.p,
                });
            }
            value = value * self.0.p + c;
        }
        Ok(FieldElement(value))
    }

    pub fn coords(&self, a: FieldElement) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.0.m);
        let mut v = a.0;
        for _ in 0..self.0.m {
            out.push(v % self.0.p);
            v /= self.0.p;
        }
        out
    }

    /// All `q` elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(FieldElement)
    }

    /// The adjoined root of the modulus; `1` in a prime field.
    pub fn generator(&self) -> FieldElement {
        if self.0.m == 1 {
            FieldElement::ONE
        } else {
            FieldElement(self.0.p)
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let f = &*self.0;
        if f.m == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= f.p { s - f.p } else { s });
        }
        if let Some(t) = &f.tables {
            return FieldElement(t.add[(a.0 * f.q + b.0) as usize] as u64);
        }
        FieldElement(digit_add(f, a.0, b.0))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let f = &*self.0;
        if f.m == 1 {
            return FieldElement(if a.0 == 0 { 0 } else { f.p - a.0 });
        }
        if let Some(t) = &f.tables {
            return FieldElement(t.neg[a.0 as usize] as u64);
        }
        FieldElement(digit_neg(f, a.0))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let f = &*self.0;
        if f.m == 1 {
            return FieldElement(a.0 * b.0 % f.p);
        }
        if let Some(t) = &f.tables {
            return FieldElement(t.mul[(a.0 * f.q + b.0) as usize] as u64);
        }
        FieldElement(digit_mul(f, a.0, b.0))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.0.tables {
            return Ok(FieldElement(t.inv[a.0 as usize] as u64));
        }
        // a^(q-2) = a^{-1} in the multiplicative group of order q - 1
        Ok(self.pow(a, self.0.q - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }
}

fn digit_add(f: &FieldInner, a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut place = 1;
    for _ in 0..f.m {
        out += ((a % f.p + b % f.p) % f.p) * place;
        a /= f.p;
        b /= f.p;
        place *= f.p;
    }
    out
}

fn digit_neg(f: &FieldInner, a: u64) -> u64 {
    let mut a = a;
    let mut out = 0;
    let mut place = 1;
    for _ in 0..f.m {
        out += ((f.p - a % f.p) % f.p) * place;
        a /= f.p;
        place *= f.p;
    }
    out
}

fn digit_mul(f: &FieldInner, a: u64, b: u64) -> u64 {
    let p = f.p;
    let m = f.m;
    let digits = |mut v: u64| {
        let mut d = [0u64; MAX_EXTENSION_DEGREE];
        for slot in d.iter_mut().take(m) {
            *slot = v % p;
            v /= p;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = [0u64; 2 * MAX_EXTENSION_DEGREE - 1];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    // X^m = -(c_0 + ... + c_{m-1} X^{m-1})
    for top in (m..2 * m - 1).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        prod[top] = 0;
        for i in 0..m {
            let sub = c * f.modulus[i] % p;
            let idx = top - m + i;
            prod[idx] = (prod[idx] + p - sub) % p;
        }
    }
    prod[..m].iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn build_tables(f: &FieldInner) -> Tables {
    let q = f.q as usize;
    let mut add = vec![0u32; q * q];
    let mut mul = vec![0u32; q * q];
    let mut neg = vec![0u32; q];
    let mut inv = vec![0u32; q];
    for a in 0..q {
        neg[a] = digit_neg(f, a as u64) as u32;
        for b in 0..q {
            add[a * q + b] = digit_add(f, a as u64, b as u64) as u32;
            let prod = digit_mul(f, a as u64, b as u64);
            mul[a * q + b] = prod as u32;
            if prod == 1 {
                inv[a] = b as u32;
            }
        }
    }
    Tables { add, mul, neg, inv }
}

/// Smallest monic irreducible of degree `m` over the prime field `base`, in the order
/// that compares `a_0` first, then `a_1`, and so on.
fn smallest_irreducible(base: &Field, m: usize) -> Vec<u64> {
    let p = base.characteristic();
    let total = p.pow(m as u32);
    for idx in 0..total {
        // idx enumerates (a_0, ..., a_{m-1}) with a_0 most significant
        let mut tail = vec![0u64; m];
        let mut v = idx;
        for slot in tail.iter_mut().rev() {
            *slot = v % p;
            v /= p;
        }
        if tail[0] == 0 {
            continue;
        }
        let mut coeffs: Vec<FieldElement> = tail.iter().map(|&c| FieldElement(c)).collect();
        coeffs.push(FieldElement::ONE);
        let candidate = Polynomial::new(base, coeffs);
        if candidate.is_irreducible() {
            tail.push(1);
            return tail;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_no_modulus() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert!(f.modulus().is_none());
        assert_eq!(f.spec_string(), "2");
    }

    #[test]
    fn gf4_modulus_is_x2_x_1() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus().unwrap(), &[1, 1, 1]);
        assert_eq!(f.spec_string(), "2^2");
    }

    #[test]
    fn rejects_composite_and_bad_degree() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(2, 0).unwrap_err(), Error::InvalidDegree(0));
        assert_eq!(Field::new(1, 1).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn inverse_in_f5() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.inv(f.from_int(2)).unwrap(), f.from_int(3));
        assert_eq!(f.inv(f.one()).unwrap(), f.one());
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn alpha_squared_in_gf4() {
        let f = Field::new(2, 2).unwrap();
        let alpha = f.generator();
        let alpha_plus_one = f.from_coords(&[1, 1]).unwrap();
        assert_eq!(f.mul(alpha, alpha), alpha_plus_one);
    }

    #[test]
    fn coords_round_trip() {
        let f = Field::new(3, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.from_coords(&f.coords(a)).unwrap(), a);
        }
    }

    #[test]
    fn tabled_field_matches_digit_arithmetic() {
        let g = Field::new(3, 4).unwrap();
        let inner = &*g.0;
        for a in 0..81u64 {
            for b in 0..81u64 {
                let (fa, fb) = (FieldElement(a), FieldElement(b));
                assert_eq!(g.mul(fa, fb).0, digit_mul(inner, a, b));
                assert_eq!(g.add(fa, fb).0, digit_add(inner, a, b));
            }
        }
    }

    #[test]
    fn untabled_inverse() {
        let f = Field::new(7, 3).unwrap();
        for v in [1u64, 2, 50, 100, 342] {
            let a = f.element(v).unwrap();
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
    }

    fn check_axioms(f: &Field) {
        let els: Vec<_> = f.elements().collect();
        for &a in &els {
            assert_eq!(f.add(a, f.neg(a)), f.zero());
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
            for &b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &els {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)] {
            check_axioms(&Field::new(p, m).unwrap());
        }
    }
}
