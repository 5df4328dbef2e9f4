//! Brute-force oracles shared by the integration tests. Nothing here goes through
//! elimination: spaces are enumerated as explicit vector sets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use subspace_ca::{Field, FieldElement, Polynomial, Subspace};

pub type VecSet = BTreeSet<Vec<u64>>;

/// Every vector of `F_q^n`, as raw element values.
pub fn all_vectors(field: &Field, n: usize) -> Vec<Vec<u64>> {
    let q = field.order();
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let d = idx % q;
                    idx /= q;
                    d
                })
                .collect()
        })
        .collect()
}

fn elems(field: &Field, v: &[u64]) -> Vec<FieldElement> {
    v.iter().map(|&x| field.element(x).unwrap()).collect()
}

/// Output of the CA with local rule `poly` on `x`, computed straight from the coefficients.
pub fn ca_eval(poly: &Polynomial, x: &[u64]) -> Vec<u64> {
    let field = poly.field();
    let d = poly.degree().unwrap() + 1;
    let x = elems(field, x);
    (0..=x.len() - d)
        .map(|i| {
            let mut acc = field.zero();
            for (j, &a) in poly.coeffs().iter().enumerate() {
                acc = field.add(acc, field.mul(a, x[i + j]));
            }
            acc.value()
        })
        .collect()
}

/// `{x in F_q^n : F(x) = 0}` by full enumeration.
pub fn kernel_set(poly: &Polynomial, n: usize) -> VecSet {
    all_vectors(poly.field(), n)
        .into_iter()
        .filter(|x| ca_eval(poly, x).iter().all(|&y| y == 0))
        .collect()
}

/// All `q^dim` vectors of a subspace, from every combination of its basis rows.
pub fn span_set(space: &Subspace) -> VecSet {
    let field = space.field();
    let basis = space.basis();
    let n = space.ambient_dim();
    all_vectors(field, space.dim())
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![field.zero(); n];
            for (r, &c) in coeffs.iter().enumerate() {
                let c = field.element(c).unwrap();
                for (acc, &b) in v.iter_mut().zip(basis.row(r)) {
                    *acc = field.add(*acc, field.mul(c, b));
                }
            }
            v.iter().map(|e| e.value()).collect()
        })
        .collect()
}

/// `log_q |set|` for a set whose size is a power of `q`.
pub fn log_q(set_size: usize, q: u64) -> usize {
    let mut d = 0;
    let mut s = 1usize;
    while s < set_size {
        s *= q as usize;
        d += 1;
    }
    assert_eq!(s, set_size, "{set_size} is not a power of {q}");
    d
}

/// Subspace distance from enumerated sets: `dim A + dim B - 2 dim(A ∩ B)`.
pub fn set_distance(a: &VecSet, b: &VecSet, q: u64) -> usize {
    let common = a.intersection(b).count();
    log_q(a.len(), q) + log_q(b.len(), q) - 2 * log_q(common, q)
}

/// Monic polynomials of degree `n`, enumerated independently of the library.
pub fn monic(field: &Field, n: usize) -> Vec<Polynomial> {
    all_vectors(field, n)
        .into_iter()
        .map(|low| {
            let mut c = elems(field, &low);
            c.push(field.one());
            Polynomial::new(field, c)
        })
        .collect()
}

/// Number of monic irreducibles of degree `n`: monic polynomials minus all products
/// of two monic factors of positive degree.
pub fn sieve_irreducible_count(field: &Field, n: usize) -> usize {
    let mut reducible = BTreeSet::new();
    for i in 1..=n / 2 {
        let small = monic(field, i);
        let large = monic(field, n - i);
        for a in &small {
            for b in &large {
                reducible.insert(a.mul(b).unwrap());
            }
        }
    }
    monic(field, n).len() - reducible.len()
}

/// Largest subset of `polys` with all pairwise gcd degrees at most `t`, by subset enumeration.
pub fn brute_max_family(polys: &[Polynomial], t: usize) -> usize {
    let n = polys.len();
    assert!(n <= 20);
    let ok: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i == j || polys[i].gcd(&polys[j]).unwrap().degree().unwrap() <= t)
                .collect()
        })
        .collect();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if members.iter().all(|&a| members.iter().all(|&b| ok[a][b])) {
            best = size;
        }
    }
    best
}

/// Cofactor expansion; only for tiny matrices.
pub fn cofactor_det(field: &Field, m: &[Vec<FieldElement>]) -> FieldElement {
    let n = m.len();
    if n == 0 {
        return field.one();
    }
    let mut acc = field.zero();
    for col in 0..n {
        let minor: Vec<Vec<FieldElement>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, &e)| e)
                    .collect()
            })
            .collect();
        let term = field.mul(m[0][col], cofactor_det(field, &minor));
        acc = if col % 2 == 0 {
            field.add(acc, term)
        } else {
            field.sub(acc, term)
        };
    }
    acc
}

/// Random nonzero polynomial of degree at most `max_deg`.
pub fn random_poly(field: &Field, max_deg: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    loop {
        let deg = rng.gen_range(0..=max_deg);
        let c: Vec<FieldElement> = (0..=deg)
            .map(|_| field.element(rng.gen_range(0..field.order())).unwrap())
            .collect();
        let p = Polynomial::new(field, c);
        if !p.is_zero() {
            return p;
        }
    }
}

/// All nonzero polynomials of degree at most `max_deg`.
pub fn nonzero_polys(field: &Field, max_deg: usize) -> Vec<Polynomial> {
    all_vectors(field, max_deg + 1)
        .into_iter()
        .map(|c| Polynomial::new(field, elems(field, &c)))
        .filter(|p| !p.is_zero())
        .collect()
}

/// Degree-`k` polynomials usable as rules: nonzero constant and leading coefficients.
pub fn valid_rules(field: &Field, k: usize) -> Vec<Polynomial> {
    all_vectors(field, k + 1)
        .into_iter()
        .filter(|c| c[0] != 0 && c[k] != 0)
        .map(|c| Polynomial::new(field, elems(field, &c)))
        .collect()
}
