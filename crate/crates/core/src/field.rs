//! Lookup-table arithmetic for GF(p^m) with q = p^m <= 16.
//!
//! Elements are encoded as the integers 0..q. The element whose coordinates
//! in the polynomial basis are (c_0, ..., c_{m-1}) gets the code
//! c_0 + c_1 p + ... + c_{m-1} p^{m-1}, so 0 and 1 always mean zero and one.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 16;

/// A fully tabulated finite field of order at most 16.
pub struct Field {
    p: u8,
    m: u8,
    q: u8,
    /// Modulus coefficients over GF(p), ascending degree, monic of degree m.
    /// For m = 1 this is the polynomial x and never enters any computation.
    modulus: Vec<u8>,
    add: Vec<u8>,
    sub: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    primitive: u8,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplies two coefficient vectors over GF(p). Plain integer arithmetic,
/// used only while the tables are being built.
fn prime_poly_mul(p: u8, a: &[u8], b: &[u8]) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u16 + x as u16 * y as u16) % p as u16) as u8;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Remainder of a by the monic divisor b, coefficients over GF(p).
fn prime_poly_rem(p: u8, a: &[u8], b: &[u8]) -> Vec<u8> {
    debug_assert_eq!(*b.last().unwrap(), 1, "divisor must be monic");
    let mut r: Vec<u8> = a.to_vec();
    while r.last() == Some(&0) {
        r.pop();
    }
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() as u16;
        let shift = r.len() - 1 - db;
        for (i, &bc) in b.iter().enumerate() {
            let idx = shift + i;
            let v = (r[idx] as u16 + (p as u16 - 1) * lead % p as u16 * bc as u16) % p as u16;
            r[idx] = v as u8;
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

/// Irreducibility over GF(p) by trial division; only ever called with
/// degree <= 4, so the candidate divisor space is tiny.
fn prime_poly_irreducible(p: u8, f: &[u8]) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    // Trial-divide by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        let count = (p as u32).pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push((c % p as u32) as u8);
                c /= p as u32;
            }
            g.push(1);
            if prime_poly_rem(p, f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible of degree m over GF(p) whose coefficient code
/// c_0 + c_1 p + ... is smallest. This pins the modulus deterministically.
fn smallest_irreducible(p: u8, m: u8) -> Vec<u8> {
    let count = (p as u32).pow(m as u32);
    for code in 0..count {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut c = code;
        for _ in 0..m {
            f.push((c % p as u32) as u8);
            c /= p as u32;
        }
        f.push(1);
        if prime_poly_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("an irreducible of every degree exists over GF(p)")
}

fn code_to_coords(p: u8, m: u8, code: u8) -> Vec<u8> {
    let mut out = vec![0u8; m as usize];
    let mut c = code;
    for slot in out.iter_mut() {
        *slot = c % p;
        c /= p;
    }
    out
}

fn coords_to_code(p: u8, coords: &[u8]) -> u8 {
    let mut code = 0u16;
    for &c in coords.iter().rev() {
        code = code * p as u16 + c as u16;
    }
    code as u8
}

impl Field {
    /// Builds GF(p^m). Fails if p is not prime or p^m > 16. The returned
    /// tables are exhaustively checked against the field axioms.
    pub fn new(p: u64, m: u32) -> Result<Arc<Field>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::Invalid("extension degree m must be at least 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::OrderTooLarge(p.saturating_pow(m)))?;
        let (p, m, q) = (p as u8, m as u8, q as u8);
        let modulus = smallest_irreducible(p, m);

        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..q {
            let ca = code_to_coords(p, m, a);
            for b in 0..q {
                let cb = code_to_coords(p, m, b);
                let sum: Vec<u8> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = coords_to_code(p, &sum);
                let prod = prime_poly_rem(p, &prime_poly_mul(p, &ca, &cb), &modulus);
                let mut coords = vec![0u8; m as usize];
                coords[..prod.len()].copy_from_slice(&prod);
                mul[a as usize * qs + b as usize] = coords_to_code(p, &coords);
            }
        }
        let mut neg = vec![0u8; qs];
        for a in 0..q {
            let ca = code_to_coords(p, m, a);
            let nc: Vec<u8> = ca.iter().map(|&x| (p - x) % p).collect();
            neg[a as usize] = coords_to_code(p, &nc);
        }
        let mut sub = vec![0u8; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                sub[a * qs + b] = add[a * qs + neg[b] as usize];
            }
        }
        let mut inv = vec![0u8; qs];
        for a in 1..q {
            let mut found = false;
            for b in 1..q {
                if mul[a as usize * qs + b as usize] == 1 {
                    inv[a as usize] = b;
                    found = true;
                    break;
                }
            }
            assert!(found, "GF({q}): {a} has no inverse, modulus is not irreducible");
        }
        let mut primitive = 0;
        for a in 1..q {
            let mut x = a;
            let mut order = 1;
            while x != 1 {
                x = mul[x as usize * qs + a as usize];
                order += 1;
            }
            if order == q as u32 - 1 {
                primitive = a;
                break;
            }
        }
        assert!(primitive != 0 || q == 2, "GF({q}) has a primitive element");
        if q == 2 {
            primitive = 1;
        }

        let field = Field {
            p,
            m,
            q,
            modulus,
            add,
            sub,
            mul,
            neg,
            inv,
            primitive,
        };
        field.verify_axioms();
        Ok(Arc::new(field))
    }

    /// Builds the field of order q, deriving p and m. q must be a prime
    /// power at most 16.
    pub fn with_order(q: u64) -> Result<Arc<Field>> {
        if q > MAX_ORDER {
            return Err(Error::OrderTooLarge(q));
        }
        let mut p = 2;
        while p <= q {
            if is_prime(p) && {
                let mut x = q;
                while x.is_multiple_of(p) {
                    x /= p;
                }
                x == 1
            } {
                let mut m = 0;
                let mut x = q;
                while x > 1 {
                    x /= p;
                    m += 1;
                }
                return Field::new(p, m);
            }
            p += 1;
        }
        Err(Error::NotPrimePower(q))
    }

    /// At most 16^3 = 4096 triples, so checking every axiom on every
    /// construction is effectively free.
    fn verify_axioms(&self) {
        let q = self.q;
        for a in 0..q {
            assert_eq!(self.add(a, 0), a);
            assert_eq!(self.mul(a, 1), a);
            assert_eq!(self.mul(a, 0), 0);
            assert_eq!(self.add(a, self.neg(a)), 0);
            if a != 0 {
                assert_eq!(self.mul(a, self.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(self.add(a, b), self.add(b, a));
                assert_eq!(self.mul(a, b), self.mul(b, a));
                assert_eq!(self.sub(a, b), self.add(a, self.neg(b)));
                for c in 0..q {
                    assert_eq!(self.add(self.add(a, b), c), self.add(a, self.add(b, c)));
                    assert_eq!(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)));
                    assert_eq!(
                        self.mul(a, self.add(b, c)),
                        self.add(self.mul(a, b), self.mul(a, c))
                    );
                }
            }
        }
    }

    #[inline]
    pub fn p(&self) -> u8 {
        self.p
    }

    #[inline]
    pub fn m(&self) -> u8 {
        self.m
    }

    #[inline]
    pub fn q(&self) -> u8 {
        self.q
    }

    /// Modulus coefficients over GF(p), ascending degree. Degree m, monic.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// Smallest element code of multiplicative order q - 1.
    #[inline]
    pub fn primitive_element(&self) -> u8 {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.sub[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse. a must be nonzero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        self.inv[a as usize]
    }

    /// Division a / b with b nonzero.
    #[inline]
    pub fn div(&self, a: u8, b: u8) -> u8 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u8, e: u64) -> u8 {
        if e == 0 {
            return 1;
        }
        let mut acc = 1u8;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn contains(&self, code: u8) -> bool {
        code < self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u8) -> u32 {
        assert!(a != 0);
        let mut x = a;
        let mut order = 1;
        while x != 1 {
            x = self.mul(x, a);
            order += 1;
        }
        order
    }
}

/// Renders element codes as text: one digit per element for q <= 10,
/// comma-separated decimal codes otherwise.
pub fn format_elements(field: &Field, els: &[u8]) -> String {
    if field.q() <= 10 {
        els.iter().map(|&e| char::from(b'0' + e)).collect()
    } else {
        els.iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses the textual element encoding produced by [`format_elements`].
/// Rejects any code that is not below q.
pub fn parse_elements(field: &Field, s: &str) -> Result<Vec<u8>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty element string".into()));
    }
    let mut out = Vec::new();
    if field.q() <= 10 {
        for ch in s.chars() {
            let d = ch
                .to_digit(10)
                .ok_or_else(|| Error::Parse(format!("invalid digit {ch:?}")))?;
            if d >= field.q() as u32 {
                return Err(Error::ElementRange {
                    code: d as u64,
                    q: field.q() as u64,
                });
            }
            out.push(d as u8);
        }
    } else {
        for tok in s.split(',') {
            let v: u64 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid element code {tok:?}")))?;
            if v >= field.q() as u64 {
                return Err(Error::ElementRange {
                    code: v,
                    q: field.q() as u64,
                });
            }
            out.push(v as u8);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supported_orders_construct() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::with_order(q).unwrap();
            assert_eq!(f.q() as u64, q);
        }
    }

    #[test]
    fn unsupported_orders_fail() {
        assert!(matches!(Field::with_order(6), Err(Error::NotPrimePower(6))));
        assert!(matches!(Field::with_order(12), Err(Error::NotPrimePower(12))));
        assert!(matches!(Field::with_order(32), Err(Error::OrderTooLarge(32))));
        assert!(matches!(Field::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(Field::new(5, 2), Err(Error::OrderTooLarge(25))));
    }

    #[test]
    fn gf4_tables() {
        // GF(4) = GF(2)[x]/(x^2+x+1): codes 2 and 3 are x and x+1.
        let f = Field::with_order(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.mul(2, 2), 3); // x^2 = x + 1
        assert_eq!(f.mul(2, 3), 1); // x(x+1) = x^2 + x = 1
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.inv(2), 3);
    }

    #[test]
    fn gf8_gf16_moduli() {
        // Smallest-code irreducibles: x^3+x+1 and x^4+x+1.
        assert_eq!(Field::with_order(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(Field::with_order(16).unwrap().modulus(), &[1, 1, 0, 0, 1]);
        // GF(9) over GF(3): x^2+1.
        assert_eq!(Field::with_order(9).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn characteristic_addition() {
        let f = Field::with_order(9).unwrap();
        // 1 + 1 + 1 = 0 in characteristic 3.
        assert_eq!(f.add(f.add(1, 1), 1), 0);
        let f = Field::with_order(16).unwrap();
        assert_eq!(f.add(5, 5), 0);
    }

    #[test]
    fn primitive_element_order() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::with_order(q).unwrap();
            assert_eq!(f.element_order(f.primitive_element()) as u64, q - 1);
        }
    }

    #[test]
    fn element_text_round_trip() {
        let f = Field::with_order(4).unwrap();
        let els = parse_elements(&f, "0123").unwrap();
        assert_eq!(els, vec![0, 1, 2, 3]);
        assert_eq!(format_elements(&f, &els), "0123");
        assert!(parse_elements(&f, "04").is_err());

        let f = Field::with_order(13).unwrap();
        let els = parse_elements(&f, "0,12,7").unwrap();
        assert_eq!(els, vec![0, 12, 7]);
        assert_eq!(format_elements(&f, &els), "0,12,7");
        assert!(parse_elements(&f, "0,13").is_err());
    }
}
