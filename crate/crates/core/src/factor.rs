//! Factorization of x^n - 1 over GF(q).
//!
//! With n = n' p^s and gcd(n', p) = 1, the distinct irreducible factors are
//! the minimal polynomials of alpha^i over GF(q), where alpha is a primitive
//! n'-th root of unity living in GF(q^m), m the multiplicative order of q
//! mod n'. Each factor then appears with multiplicity p^s. The exponents i
//! group into q-cyclotomic cosets mod n', one factor per coset.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// The extension-field construction refuses once q^m would pass this cap.
const MAX_EXT_ORDER: u128 = 1 << 48;

/// Least e >= 1 with a^e = 1 mod n. Requires gcd(a, n) = 1.
pub fn multiplicative_order(a: u64, n: u64) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        return 1;
    }
    let a = a % n;
    debug_assert_eq!(gcd(a, n), 1, "order undefined unless gcd(a, n) = 1");
    let mut x = a;
    let mut e = 1;
    while x != 1 {
        x = x * a % n;
        e += 1;
    }
    e
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn prime_factors(mut x: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            while x.is_multiple_of(d) {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// Partition of Z_n into q-cyclotomic cosets {i, iq, iq^2, ...}. Each coset
/// is listed in orbit order starting from its minimal element, and the
/// cosets are ordered by minimal element.
pub fn cyclotomic_cosets(n: usize, q: u64) -> Result<Vec<Vec<usize>>> {
    if n == 0 {
        return Err(Error::Invalid("modulus n must be at least 1".into()));
    }
    if gcd(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let qm = (q % n as u64) as usize;
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        loop {
            seen[i] = true;
            coset.push(i);
            i = i * qm % n;
            if i == start {
                break;
            }
        }
        cosets.push(coset);
    }
    Ok(cosets)
}

/// GF(q^m) presented over the base GF(q); elements are coefficient vectors
/// of length m. Only what the minimal-polynomial construction needs.
struct ExtField {
    base: Arc<Field>,
    m: usize,
    /// Monic irreducible of degree m over the base, ascending, length m+1.
    modulus: Vec<u8>,
}

type ExtEl = Vec<u8>;

impl ExtField {
    fn new(base: Arc<Field>, m: usize) -> Result<ExtField> {
        let q = base.q() as u128;
        let order = q.checked_pow(m as u32).unwrap_or(u128::MAX);
        if order > MAX_EXT_ORDER {
            return Err(Error::Budget {
                what: format!("extension field GF({}^{m})", base.q()),
                needed: order,
                cap: MAX_EXT_ORDER,
            });
        }
        // Smallest-code monic irreducible of degree m over GF(q).
        let mut modulus = None;
        for code in 0..order {
            let mut coeffs = Vec::with_capacity(m + 1);
            let mut c = code;
            for _ in 0..m {
                coeffs.push((c % q) as u8);
                c /= q;
            }
            coeffs.push(1);
            let cand = Poly::new(base.clone(), coeffs)?;
            if cand.is_irreducible() {
                modulus = Some(cand.coeffs().to_vec());
                break;
            }
        }
        Ok(ExtField {
            base,
            m,
            modulus: modulus.expect("irreducibles of every degree exist"),
        })
    }

    fn order(&self) -> u128 {
        (self.base.q() as u128).pow(self.m as u32)
    }

    fn zero(&self) -> ExtEl {
        vec![0; self.m]
    }

    fn one(&self) -> ExtEl {
        let mut e = vec![0; self.m];
        e[0] = 1;
        e
    }

    fn is_one(&self, a: &ExtEl) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    fn decode(&self, code: u128) -> ExtEl {
        let q = self.base.q() as u128;
        let mut e = vec![0; self.m];
        let mut c = code;
        for slot in e.iter_mut() {
            *slot = (c % q) as u8;
            c /= q;
        }
        e
    }

    fn add(&self, a: &ExtEl, b: &ExtEl) -> ExtEl {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add(x, y))
            .collect()
    }

    fn sub(&self, a: &ExtEl, b: &ExtEl) -> ExtEl {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.sub(x, y))
            .collect()
    }

    fn mul(&self, a: &ExtEl, b: &ExtEl) -> ExtEl {
        let f = &self.base;
        let m = self.m;
        let mut prod = vec![0u8; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        // Reduce by the monic modulus.
        for i in (m..2 * m - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mc) in self.modulus.iter().enumerate().take(m) {
                prod[i - m + j] = f.sub(prod[i - m + j], f.mul(c, mc));
            }
        }
        prod.truncate(m);
        prod
    }

    fn pow(&self, a: &ExtEl, mut e: u128) -> ExtEl {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// An element of multiplicative order exactly nprime, chosen as the first
/// element code (ascending) whose (order-1)/nprime power has that order.
fn primitive_root_of_unity(ext: &ExtField, nprime: u64) -> ExtEl {
    let order = ext.order();
    debug_assert_eq!((order - 1) % nprime as u128, 0);
    let cof = (order - 1) / nprime as u128;
    let prime_divs = prime_factors(nprime as u128);
    for code in 1..order {
        let alpha = ext.pow(&ext.decode(code), cof);
        if prime_divs
            .iter()
            .all(|&r| !ext.is_one(&ext.pow(&alpha, nprime as u128 / r)))
        {
            return alpha;
        }
    }
    unreachable!("cyclic group of order q^m - 1 has elements of every dividing order")
}

/// Minimal polynomial over the base of alpha^j for j in the coset: the
/// product of (x - alpha^j). All coefficients land in the base field.
fn coset_min_poly(ext: &ExtField, alpha_pows: &[ExtEl], coset: &[usize]) -> Poly {
    let mut coeffs: Vec<ExtEl> = vec![ext.one()];
    for &j in coset {
        let root = &alpha_pows[j];
        let mut next = vec![ext.zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = ext.add(&next[i + 1], c);
            let t = ext.mul(root, c);
            next[i] = ext.sub(&next[i], &t);
        }
        coeffs = next;
    }
    let base_coeffs: Vec<u8> = coeffs
        .iter()
        .map(|c| {
            assert!(
                c[1..].iter().all(|&d| d == 0),
                "minimal polynomial coefficient escaped the base field"
            );
            c[0]
        })
        .collect();
    Poly::from_trimmed(ext.base.clone(), base_coeffs)
}

/// Irreducible factorization of x^n - 1 over the field, as (factor,
/// multiplicity) pairs sorted by degree and then by coefficient sequence.
/// The product of all factors with multiplicity is verified to reconstruct
/// x^n - 1 before returning.
pub fn factor_xn_minus_1(field: &Arc<Field>, n: usize) -> Result<Vec<(Poly, usize)>> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let p = field.p() as usize;
    let mut nprime = n;
    let mut mult = 1usize;
    while nprime.is_multiple_of(p) {
        nprime /= p;
        mult *= p;
    }

    let cosets = cyclotomic_cosets(nprime, field.q() as u64)?;
    let m = multiplicative_order(field.q() as u64, nprime as u64);
    let ext = ExtField::new(field.clone(), m as usize)?;
    let alpha = primitive_root_of_unity(&ext, nprime as u64);
    let mut alpha_pows = Vec::with_capacity(nprime);
    let mut acc = ext.one();
    for _ in 0..nprime {
        alpha_pows.push(acc.clone());
        acc = ext.mul(&acc, &alpha);
    }
    assert!(ext.is_one(&acc), "alpha does not have order n'");

    let mut factors: Vec<(Poly, usize)> = cosets
        .iter()
        .map(|coset| {
            let f = coset_min_poly(&ext, &alpha_pows, coset);
            assert_eq!(f.deg(), Some(coset.len()), "factor degree mismatch");
            (f, mult)
        })
        .collect();
    // Same-degree ties break by the integer code sum(c_i q^i), i.e. by
    // comparing coefficients from the leading end down.
    factors.sort_by(|a, b| {
        let da = a.0.deg().unwrap();
        let db = b.0.deg().unwrap();
        da.cmp(&db)
            .then_with(|| a.0.coeffs().iter().rev().cmp(b.0.coeffs().iter().rev()))
    });

    let mut product = Poly::one(field.clone());
    for (f, e) in &factors {
        for _ in 0..*e {
            product = product.mul(f);
        }
    }
    assert_eq!(
        product,
        Poly::xn_minus_1(field.clone(), n),
        "factor product failed to reconstruct x^n - 1"
    );
    Ok(factors)
}
