use std::cmp::Ordering;
use std::fmt;

use crate::algebra::field::{Field, FieldElement};
use crate::error::{Error, Result};

/// Polynomial over `F_q` with ascending coefficients and no trailing zeros.
///
/// The zero polynomial has an empty coefficient vector and `degree() == None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

fn trim(coeffs: &mut Vec<FieldElement>) {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
}

impl Polynomial {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Polynomial {
        trim(&mut coeffs);
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    /// Coefficients taken as integers in the prime subfield, ascending.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Polynomial {
        Polynomial::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Field) -> Polynomial {
        Polynomial {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Polynomial {
        Polynomial {
            field: field.clone(),
            coeffs: vec![FieldElement::ONE],
        }
    }

    /// The monomial `c X^degree`.
    pub fn monomial(field: &Field, c: FieldElement, degree: usize) -> Polynomial {
        let mut coeffs = vec![FieldElement::ZERO; degree + 1];
        coeffs[degree] = c;
        Polynomial::new(field, coeffs)
    }

    pub fn x(field: &Field) -> Polynomial {
        Polynomial::monomial(field, FieldElement::ONE, 1)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElement::ONE
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn constant_term(&self) -> FieldElement {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(FieldElement::ONE)
    }

    /// Scales to leading coefficient 1; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("leading coefficient is nonzero");
                self.scale(inv)
            }
        }
    }

    pub fn scale(&self, c: FieldElement) -> Polynomial {
        let f = &self.field;
        Polynomial::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    fn check_field(&self, other: &Polynomial) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Polynomial::new(f, coeffs))
    }

    pub fn neg(&self) -> Polynomial {
        let f = &self.field;
        Polynomial::new(f, self.coeffs.iter().map(|&a| f.neg(a)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        Ok(Polynomial::new(
            &self.field,
            mul_raw(&self.field, &self.coeffs, &other.coeffs),
        ))
    }

    /// Euclidean division: `self = quotient * divisor + remainder`, `deg(remainder) < deg(divisor)`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = div_rem_raw(&self.field, &self.coeffs, &divisor.coeffs);
        Ok((
            Polynomial::new(&self.field, q),
            Polynomial::new(&self.field, r),
        ))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Polynomial) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let f = &self.field;
        let mut a = self.coeffs.clone();
        let mut b = other.coeffs.clone();
        while !b.is_empty() {
            let (_, r) = div_rem_raw(f, &a, &b);
            a = std::mem::replace(&mut b, r);
        }
        Ok(Polynomial::new(f, a).monic())
    }

    /// Extended Euclid: returns `(g, u, v)` with `u*self + v*other = g`, `g` monic.
    pub fn extended_gcd(&self, other: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let field = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Polynomial::one(field), Polynomial::zero(field));
        let (mut t0, mut t1) = (Polynomial::zero(field), Polynomial::one(field));
        while !r1.is_zero() {
            let (quo, rem) = r0.div_rem(&r1)?;
            let s2 = s0.sub(&quo.mul(&s1)?)?;
            let t2 = t0.sub(&quo.mul(&t1)?)?;
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc = r0.leading_coeff().expect("not both zero");
        let inv = field.inv(lc)?;
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// Horner evaluation at `a`.
    pub fn eval(&self, a: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, a), c))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Polynomial) -> Result<Polynomial> {
        self.check_field(modulus)?;
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let m = &modulus.coeffs;
        let mut base = div_rem_raw(f, &self.coeffs, m).1;
        let mut acc = div_rem_raw(f, &[FieldElement::ONE], m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = div_rem_raw(f, &mul_raw(f, &acc, &base), m).1;
            }
            base = div_rem_raw(f, &mul_raw(f, &base, &base), m).1;
            e >>= 1;
        }
        Ok(Polynomial::new(f, acc))
    }

    /// Rabin's irreducibility test over `F_q`.
    ///
    /// A degree-`n` polynomial is irreducible iff `X^{q^n} = X mod f` and
    /// `gcd(X^{q^{n/r}} - X, f) = 1` for every prime `r | n`.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let f = self.monic();
        let q = self.field.order();
        let x = Polynomial::x(&self.field);
        // frobenius[i] = X^{q^i} mod f
        let mut frobenius = Vec::with_capacity(n + 1);
        frobenius.push(x.rem(&f).expect("nonzero modulus"));
        for i in 0..n {
            let next = frobenius[i].pow_mod(q, &f).expect("same field");
            frobenius.push(next);
        }
        if frobenius[n] != frobenius[0] {
            return false;
        }
        prime_factors(n).into_iter().all(|r| {
            let h = frobenius[n / r].sub(&x).expect("same field");
            h.gcd(&f).map(|g| g.is_one()).unwrap_or(false)
        })
    }
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mul_raw(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

/// Long division on trimmed coefficient vectors; `b` must be nonempty.
fn div_rem_raw(
    f: &Field,
    a: &[FieldElement],
    b: &[FieldElement],
) -> (Vec<FieldElement>, Vec<FieldElement>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = f.inv(b[db]).expect("divisor is trimmed");
    let mut quo = vec![FieldElement::ZERO; rem.len() - db];
    for top in (db..rem.len()).rev() {
        let c = rem[top];
        if c.is_zero() {
            continue;
        }
        let factor = f.mul(c, lead_inv);
        let shift = top - db;
        quo[shift] = factor;
        for (j, &bj) in b.iter().enumerate() {
            rem[shift + j] = f.sub(rem[shift + j], f.mul(factor, bj));
        }
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quo);
    (quo, rem)
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomials of one field are ordered by degree, then lexicographically on
/// `(a_0, a_1, ...)` with elements compared by their integer encoding.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.characteristic(), self.field.degree())
            .cmp(&(other.field.characteristic(), other.field.degree()))
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

/// Renders as `1 + X + X^2`; extension-field coefficients print as coordinate tuples.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if self.field.degree() == 1 {
                c.value().to_string()
            } else {
                let parts: Vec<String> =
                    self.field.coords(c).iter().map(|d| d.to_string()).collect();
                format!("[{}]", parts.join(","))
            };
            match (i, c == FieldElement::ONE) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "X")?,
                (1, false) => write!(f, "{coeff}X")?,
                (_, true) => write!(f, "X^{i}")?,
                (_, false) => write!(f, "{coeff}X^{i}")?,
            }
        }
        Ok(())
    }
}
