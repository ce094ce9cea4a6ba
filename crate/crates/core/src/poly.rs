//! Dense univariate polynomials over a tabulated field.
//!
//! Coefficients are stored ascending by degree with no trailing zeros, so
//! the zero polynomial is the empty vector. The text form mirrors this:
//! "1101" over GF(2) is 1 + x + x^3.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{format_elements, parse_elements, Field};

#[derive(Clone)]
pub struct Poly {
    field: Arc<Field>,
    coeffs: Vec<u8>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.field.q() == other.field.q() && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[GF({})]({})", self.field.q(), self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", format_elements(&self.field, &self.coeffs))
        }
    }
}

fn trim(coeffs: &mut Vec<u8>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

impl Poly {
    pub fn new(field: Arc<Field>, mut coeffs: Vec<u8>) -> Result<Poly> {
        for &c in &coeffs {
            if !field.contains(c) {
                return Err(Error::ElementRange {
                    code: c as u64,
                    q: field.q() as u64,
                });
            }
        }
        trim(&mut coeffs);
        Ok(Poly { field, coeffs })
    }

    pub(crate) fn from_trimmed(field: Arc<Field>, coeffs: Vec<u8>) -> Poly {
        debug_assert!(coeffs.last() != Some(&0));
        Poly { field, coeffs }
    }

    pub fn zero(field: Arc<Field>) -> Poly {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Arc<Field>) -> Poly {
        Poly {
            field,
            coeffs: vec![1],
        }
    }

    pub fn x(field: Arc<Field>) -> Poly {
        Poly {
            field,
            coeffs: vec![0, 1],
        }
    }

    /// c * x^d.
    pub fn monomial(field: Arc<Field>, c: u8, d: usize) -> Poly {
        if c == 0 {
            return Poly::zero(field);
        }
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Poly { field, coeffs }
    }

    pub fn xn_minus_1(field: Arc<Field>, n: usize) -> Poly {
        assert!(n >= 1);
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = 1;
        Poly { field, coeffs }
    }

    pub fn parse(field: Arc<Field>, s: &str) -> Result<Poly> {
        let mut coeffs = parse_elements(&field, s)?;
        trim(&mut coeffs);
        Ok(Poly { field, coeffs })
    }

    #[inline]
    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    #[inline]
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    #[inline]
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn leading(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.field.q(), other.field.q());
        let f = &self.field;
        let mut out = vec![0u8; self.coeffs.len().max(other.coeffs.len())];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = f.add(self.coeff(i), other.coeff(i));
        }
        trim(&mut out);
        Poly::from_trimmed(self.field.clone(), out)
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        let coeffs = self.coeffs.iter().map(|&c| f.neg(c)).collect();
        Poly::from_trimmed(self.field.clone(), coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.field.q(), other.field.q());
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![0u8; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        trim(&mut out);
        Poly::from_trimmed(self.field.clone(), out)
    }

    pub fn mul_scalar(&self, c: u8) -> Poly {
        if c == 0 {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let coeffs = self.coeffs.iter().map(|&a| f.mul(a, c)).collect();
        Poly::from_trimmed(self.field.clone(), coeffs)
    }

    /// Multiplies by x^t.
    pub fn shifted(&self, t: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0u8; t];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::from_trimmed(self.field.clone(), coeffs)
    }

    /// Quotient and remainder. The divisor must be nonzero.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        debug_assert_eq!(self.field.q(), d.field.q());
        if d.is_zero() {
            return Err(Error::Invalid("division by the zero polynomial".into()));
        }
        let f = &self.field;
        let dd = d.deg().unwrap();
        let lead_inv = f.inv(d.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(self.field.clone()), self.clone()));
        }
        let mut quot = vec![0u8; rem.len() - dd];
        while rem.len() > dd {
            let c = f.mul(*rem.last().unwrap(), lead_inv);
            let shift = rem.len() - 1 - dd;
            quot[shift] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, dc));
            }
            trim(&mut rem);
        }
        Ok((
            Poly::from_trimmed(self.field.clone(), quot),
            Poly::from_trimmed(self.field.clone(), rem),
        ))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.divrem(d)?.1)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        match other.rem(self) {
            Ok(r) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// self / d, failing when the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::Invalid(format!("{d} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn eval(&self, a: u8) -> u8 {
        let f = &self.field;
        let mut acc = 0u8;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, a), c);
        }
        acc
    }

    pub fn make_monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_scalar(self.field.inv(self.leading()))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// self^e mod modulus, by square and multiply.
    pub fn pow_mod(&self, e: u128, modulus: &Poly) -> Poly {
        let mut acc = Poly::one(self.field.clone())
            .rem(modulus)
            .expect("nonzero modulus");
        let mut base = self.rem(modulus).expect("nonzero modulus");
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus).unwrap();
            }
            base = base.mul(&base).rem(modulus).unwrap();
            e >>= 1;
        }
        acc
    }

    /// Rabin's criterion. Cheap at the degrees used here; the dominating
    /// cost is pow_mod with exponent q^deg.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.deg() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        if d == 1 {
            return true;
        }
        let q = self.field.q() as u128;
        let x = Poly::x(self.field.clone());
        // x^(q^d) == x mod self
        let e = q.checked_pow(d as u32).expect("exponent fits u128");
        if x.pow_mod(e, self) != x.rem(self).unwrap() {
            return false;
        }
        let mut rest = d;
        let mut t = 2;
        let mut prime_divs = Vec::new();
        while t * t <= rest {
            if rest % t == 0 {
                prime_divs.push(t);
                while rest % t == 0 {
                    rest /= t;
                }
            }
            t += 1;
        }
        if rest > 1 {
            prime_divs.push(rest);
        }
        for t in prime_divs {
            let e = q.checked_pow((d / t) as u32).expect("exponent fits u128");
            let g = x.pow_mod(e, self).sub(&x.rem(self).unwrap());
            if self.gcd(&g).deg() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Least e >= 1 with self dividing x^e - 1. Defined for any polynomial
    /// of degree >= 1 with nonzero constant term; the answer never exceeds
    /// q^deg - 1 because x is a unit in a quotient ring of that many units.
    pub fn period(&self) -> Result<u64> {
        let d = match self.deg() {
            None | Some(0) => {
                return Err(Error::PeriodUndefined(
                    "constant polynomials have no period".into(),
                ))
            }
            Some(d) => d,
        };
        if self.coeff(0) == 0 {
            return Err(Error::PeriodUndefined(format!(
                "{self} has zero constant term"
            )));
        }
        let h = self.make_monic();
        let f = &self.field;
        // buf holds x^e mod h, ascending coefficients, fixed length d.
        let mut buf = vec![0u8; d];
        if d == 1 {
            buf[0] = f.neg(h.coeff(0));
        } else {
            buf[1] = 1;
        }
        let cap: u128 = (f.q() as u128).pow(d as u32) - 1;
        let is_one = |b: &[u8]| b[0] == 1 && b[1..].iter().all(|&c| c == 0);
        let mut e: u128 = 1;
        while !is_one(&buf) {
            // buf <- x * buf - lead * h
            let lead = buf[d - 1];
            for i in (1..d).rev() {
                buf[i] = f.sub(buf[i - 1], f.mul(lead, h.coeff(i)));
            }
            buf[0] = f.neg(f.mul(lead, h.coeff(0)));
            e += 1;
            assert!(e <= cap, "period exceeded q^deg - 1, arithmetic is broken");
        }
        Ok(e as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Arc<Field> {
        Field::with_order(q).unwrap()
    }

    fn p(q: u64, s: &str) -> Poly {
        Poly::parse(gf(q), s).unwrap()
    }

    #[test]
    fn parse_display_round_trip() {
        let f = p(2, "1101");
        assert_eq!(f.deg(), Some(3));
        assert_eq!(f.to_string(), "1101");
        assert_eq!(p(2, "0").to_string(), "0");
        assert!(p(2, "0110100").deg() == Some(4)); // trailing zeros trimmed
        assert!(Poly::parse(gf(3), "13").is_err());
    }

    #[test]
    fn mul_divrem_round_trip() {
        let a = p(3, "2101");
        let b = p(3, "112");
        let prod = a.mul(&b);
        let (q, r) = prod.divrem(&b).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, a);
        let (q2, r2) = prod.add(&p(3, "21")).divrem(&b).unwrap();
        assert_eq!(q2, a);
        assert_eq!(r2, p(3, "21"));
    }

    #[test]
    fn eval_and_roots() {
        // x^2 + 1 over GF(3) has no roots.
        let f = p(3, "101");
        assert!(f.eval(0) != 0 && f.eval(1) != 0 && f.eval(2) != 0);
        // x^2 + 1 over GF(2) = (x+1)^2 has root 1.
        assert_eq!(p(2, "101").eval(1), 0);
    }

    #[test]
    fn period_fixed_points() {
        // x^3 + x + 1 over GF(2) divides x^7 - 1 and nothing shorter.
        assert_eq!(p(2, "1101").period().unwrap(), 7);
        // x^2 + 1 over GF(3) has period 4.
        assert_eq!(p(3, "101").period().unwrap(), 4);
        // x - 1 divides x^1 - 1.
        assert_eq!(p(2, "11").period().unwrap(), 1);
        // (x+1)^2 = x^2+1 over GF(2) divides x^2-1 and not x-1.
        assert_eq!(p(2, "101").period().unwrap(), 2);
    }

    #[test]
    fn period_rejects_degenerate_input() {
        assert!(matches!(p(2, "1").period(), Err(Error::PeriodUndefined(_))));
        assert!(matches!(p(2, "01").period(), Err(Error::PeriodUndefined(_))));
    }

    #[test]
    fn irreducibility_matches_known_cases() {
        assert!(p(2, "1101").is_irreducible()); // x^3+x+1
        assert!(p(2, "01").is_irreducible()); // x (degree 1)
        assert!(!p(2, "1001").is_irreducible()); // x^3+1 = (x+1)(x^2+x+1)
        assert!(p(3, "101").is_irreducible()); // x^2+1 over GF(3)
        assert!(!p(3, "201").is_irreducible()); // x^2+2 = (x+1)(x+2)
        assert!(p(4, "21").is_irreducible());
    }

    #[test]
    fn xn_minus_1_form() {
        let f = Poly::xn_minus_1(gf(3), 4);
        assert_eq!(f.coeffs(), &[2, 0, 0, 0, 1]);
        assert_eq!(f.eval(1), 0);
    }

    #[test]
    fn gcd_basics() {
        let a = p(2, "1101").mul(&p(2, "111"));
        let b = p(2, "1101").mul(&p(2, "11"));
        assert_eq!(a.gcd(&b), p(2, "1101"));
    }
}
