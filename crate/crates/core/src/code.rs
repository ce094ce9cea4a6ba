//! Linear and cyclic codes over GF(q).
//!
//! A cyclic code of length n is the ideal generated by a monic divisor g of
//! x^n - 1; its dimension is n - deg g and its generator matrix stacks
//! g, xg, ..., x^(k-1)g as coefficient rows.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::factor;
use crate::field::Field;
use crate::linalg;
use crate::poly::Poly;

/// Ceiling on the block length produced by the named constructions.
pub const MAX_CONSTRUCTED_N: usize = 1 << 20;

/// A linear [n, k] code presented by a full-rank generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    n: usize,
    k: usize,
    rows: Vec<Vec<u8>>,
}

impl LinearCode {
    pub fn new(field: Arc<Field>, rows: Vec<Vec<u8>>) -> Result<LinearCode> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::Invalid("generator matrix has no rows".into()));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::Invalid("generator matrix has no columns".into()));
        }
        for row in &rows {
            if row.len() != n {
                return Err(Error::Invalid("generator rows differ in length".into()));
            }
            for &c in row {
                if !field.contains(c) {
                    return Err(Error::ElementRange {
                        code: c as u64,
                        q: field.q() as u64,
                    });
                }
            }
        }
        if linalg::rank(&field, &rows) != k {
            return Err(Error::Invalid(
                "generator matrix does not have full row rank".into(),
            ));
        }
        Ok(LinearCode { field, n, k, rows })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// q^k, or None past u128.
    pub fn codeword_count(&self) -> Option<u128> {
        (self.field.q() as u128).checked_pow(self.k as u32)
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        self.rows.iter().map(|row| row[j]).collect()
    }

    pub fn has_zero_column(&self) -> bool {
        (0..self.n).any(|j| self.rows.iter().all(|row| row[j] == 0))
    }

    pub fn encode(&self, msg: &[u8]) -> Vec<u8> {
        assert_eq!(msg.len(), self.k);
        let f = &self.field;
        let mut word = vec![0u8; self.n];
        for (&m, row) in msg.iter().zip(&self.rows) {
            if m == 0 {
                continue;
            }
            for (w, &r) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(m, r));
            }
        }
        word
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        if word.len() != self.n {
            return false;
        }
        let mut elim = linalg::Eliminator::new(self.field.clone(), self.n);
        for row in &self.rows {
            elim.insert(row);
        }
        elim.contains(word)
    }

    /// Visit every codeword once, as (message digits, codeword). Message
    /// digit i steps fastest, so messages arrive in ascending base-q
    /// integer order and the all-zero pair comes first. The codeword
    /// accumulator is updated incrementally, one scaled-row addition per
    /// digit change.
    pub fn for_each_codeword(&self, f: impl FnMut(&[u8], &[u8])) {
        let count = self
            .codeword_count()
            .unwrap_or_else(|| panic!("codeword count exceeds u128"));
        self.for_each_codeword_in(0, count, f);
    }

    /// Ranged variant of `for_each_codeword`: visits the messages whose
    /// base-q integer codes lie in [start, end), in ascending order.
    /// Lets callers split the message space into independent chunks.
    pub fn for_each_codeword_in(&self, start: u128, end: u128, mut f: impl FnMut(&[u8], &[u8])) {
        if start >= end {
            return;
        }
        let field = &self.field;
        let q = field.q();
        let scaled: Vec<Vec<Vec<u8>>> = self
            .rows
            .iter()
            .map(|row| {
                (0..q)
                    .map(|s| row.iter().map(|&c| field.mul(s, c)).collect())
                    .collect()
            })
            .collect();
        let mut msg = vec![0u8; self.k];
        let mut c = start;
        for slot in msg.iter_mut() {
            *slot = (c % q as u128) as u8;
            c /= q as u128;
        }
        let mut acc = self.encode(&msg);
        let mut remaining = end - start;
        loop {
            f(&msg, &acc);
            remaining -= 1;
            if remaining == 0 {
                return;
            }
            let mut d = 0;
            loop {
                debug_assert!(d < self.k);
                let old = msg[d];
                let new = if old + 1 == q { 0 } else { old + 1 };
                msg[d] = new;
                let delta = field.sub(new, old);
                for (a, &r) in acc.iter_mut().zip(&scaled[d][delta as usize]) {
                    *a = field.add(*a, r);
                }
                if new != 0 {
                    break;
                }
                d += 1;
            }
        }
    }

    /// True when every b cyclically consecutive generator columns are
    /// linearly independent. Trivially false for b > k.
    pub fn windows_independent(&self, b: usize) -> bool {
        if b == 0 || b > self.k {
            return false;
        }
        (0..self.n).all(|t| {
            let mut elim = linalg::Eliminator::new(self.field.clone(), self.k);
            (0..b).all(|j| elim.insert(&self.column((t + j) % self.n)))
        })
    }

    /// The equivalent code obtained by scaling coordinate j by diag[j] and
    /// then rotating every codeword left by `shift` positions. Both
    /// operations preserve zero patterns codeword-wise.
    pub fn transformed_dp(&self, diag: &[u8], shift: usize) -> Result<LinearCode> {
        if diag.len() != self.n {
            return Err(Error::Invalid(
                "diagonal length must equal the block length".into(),
            ));
        }
        for &d in diag {
            if d == 0 || !self.field.contains(d) {
                return Err(Error::Invalid(
                    "diagonal entries must be nonzero field elements".into(),
                ));
            }
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut scaled: Vec<u8> = row
                    .iter()
                    .zip(diag)
                    .map(|(&c, &d)| self.field.mul(c, d))
                    .collect();
                scaled.rotate_left(shift % self.n);
                scaled
            })
            .collect();
        LinearCode::new(self.field.clone(), rows)
    }
}

/// A cyclic code, carried with its monic generator g and check polynomial
/// h = (x^n - 1) / g.
#[derive(Clone, Debug)]
pub struct CyclicCode {
    linear: LinearCode,
    g: Poly,
    h: Poly,
}

impl CyclicCode {
    pub fn from_generator(g: &Poly, n: usize) -> Result<CyclicCode> {
        if n == 0 {
            return Err(Error::Invalid("block length must be at least 1".into()));
        }
        if g.is_zero() {
            return Err(Error::Invalid("generator polynomial is zero".into()));
        }
        let field = g.field().clone();
        let g = g.make_monic();
        let xn1 = Poly::xn_minus_1(field.clone(), n);
        let (h, rem) = xn1.divrem(&g)?;
        if !rem.is_zero() {
            return Err(Error::NotADivisor {
                g: g.to_string(),
                n,
            });
        }
        let deg = g.deg().expect("nonzero");
        let k = n - deg;
        if k == 0 {
            return Err(Error::Invalid(
                "generator equals x^n - 1, the code has dimension zero".into(),
            ));
        }
        let mut rows = Vec::with_capacity(k);
        for i in 0..k {
            let mut row = vec![0u8; n];
            row[i..=i + deg].copy_from_slice(g.coeffs());
            rows.push(row);
        }
        let linear = LinearCode::new(field, rows)?;
        Ok(CyclicCode { linear, g, h })
    }

    pub fn field(&self) -> &Arc<Field> {
        self.linear.field()
    }

    pub fn n(&self) -> usize {
        self.linear.n()
    }

    pub fn k(&self) -> usize {
        self.linear.k()
    }

    pub fn generator_poly(&self) -> &Poly {
        &self.g
    }

    pub fn check_poly(&self) -> &Poly {
        &self.h
    }

    pub fn linear(&self) -> &LinearCode {
        &self.linear
    }

    /// Canonical one-line form, e.g. "q=2;n=7;g=1101".
    pub fn descriptor(&self) -> String {
        format!("q={};n={};g={}", self.field().q(), self.n(), self.g)
    }

    pub fn parse(descriptor: &str) -> Result<CyclicCode> {
        let mut q = None;
        let mut n = None;
        let mut g = None;
        for part in descriptor.split(';') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
            match key.trim() {
                "q" => {
                    q = Some(value.trim().parse::<u64>().map_err(|e| {
                        Error::Parse(format!("field order {value:?}: {e}"))
                    })?)
                }
                "n" => {
                    n = Some(value.trim().parse::<usize>().map_err(|e| {
                        Error::Parse(format!("length {value:?}: {e}"))
                    })?)
                }
                "g" => g = Some(value.trim().to_string()),
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
        }
        let (Some(q), Some(n), Some(g)) = (q, n, g) else {
            return Err(Error::Parse(
                "descriptor needs q=, n= and g= parts".into(),
            ));
        };
        let field = Field::with_order(q)?;
        let g = Poly::parse(field, &g)?;
        CyclicCode::from_generator(&g, n)
    }

    /// The [(q^k - 1)/(q - 1), k] simplex code as a cyclic code:
    /// g = (x^n - 1)/h for the canonically first irreducible h of degree k
    /// and period n. The cyclic presentation coincides with the simplex
    /// code exactly when gcd(n, q - 1) = 1; other parameters are rejected,
    /// since no cyclic code then has the simplex weight structure.
    pub fn simplex(q: u64, k: usize) -> Result<CyclicCode> {
        if k < 2 {
            return Err(Error::Invalid("simplex construction needs k >= 2".into()));
        }
        let field = Field::with_order(q)?;
        let qk = (q as u128)
            .checked_pow(k as u32)
            .ok_or_else(|| Error::Invalid("q^k overflows".into()))?;
        let n = (qk - 1) / (q as u128 - 1);
        if n > MAX_CONSTRUCTED_N as u128 {
            return Err(Error::Budget {
                what: format!("simplex length for q={q}, k={k}"),
                needed: n,
                cap: MAX_CONSTRUCTED_N as u128,
            });
        }
        let n = n as usize;
        if factor::gcd(n as u64, q - 1) != 1 {
            return Err(Error::Invalid(format!(
                "gcd(n, q-1) = gcd({n}, {}) != 1: the cyclic construction \
                 does not yield the simplex code",
                q - 1
            )));
        }
        let h = pick_factor(&field, n, k)?
            .expect("a degree-k factor of period n exists at the simplex length");
        let g = Poly::xn_minus_1(field, n).div_exact(&h)?;
        CyclicCode::from_generator(&g, n)
    }

    /// Irreducible cyclic code of length n = (q^k - 1)/delta: g = (x^n-1)/h
    /// with h irreducible of degree k and period n. Exists exactly when the
    /// multiplicative order of q mod n is k.
    pub fn irreducible(q: u64, k: usize, delta: u64) -> Result<(CyclicCode, IrreducibleReport)> {
        if k == 0 || delta == 0 {
            return Err(Error::Invalid("need k >= 1 and delta >= 1".into()));
        }
        let field = Field::with_order(q)?;
        let qk = (q as u128)
            .checked_pow(k as u32)
            .ok_or_else(|| Error::Invalid("q^k overflows".into()))?
            - 1;
        if qk % delta as u128 != 0 {
            return Err(Error::Invalid(format!(
                "delta = {delta} does not divide q^k - 1 = {qk}"
            )));
        }
        let n = qk / delta as u128;
        if n < 2 {
            return Err(Error::Invalid("length collapses below 2".into()));
        }
        if n > MAX_CONSTRUCTED_N as u128 {
            return Err(Error::Budget {
                what: format!("irreducible cyclic length for q={q}, k={k}, delta={delta}"),
                needed: n,
                cap: MAX_CONSTRUCTED_N as u128,
            });
        }
        let n = n as usize;
        let ord = factor::multiplicative_order(q, n as u64);
        if ord != k as u64 {
            return Err(Error::Invalid(format!(
                "no irreducible factor of degree {k} has period {n} (ord_n(q) = {ord})"
            )));
        }
        let h = pick_factor(&field, n, k)?.expect("ord_n(q) = k guarantees one");
        let period = h.period()?;
        debug_assert_eq!(period, n as u64);
        let g = Poly::xn_minus_1(field, n).div_exact(&h)?;
        let code = CyclicCode::from_generator(&g, n)?;
        let report = IrreducibleReport {
            q,
            n,
            k,
            delta,
            delta_divides_q_minus_1: (q - 1).is_multiple_of(delta),
            gcd_n_delta: factor::gcd(n as u64, delta),
            gcd_period_delta: factor::gcd(period, delta),
        };
        Ok((code, report))
    }

    /// Every cyclic code of length n over the field, one per monic divisor
    /// of x^n - 1 with 1 <= k (and k = n only when `include_trivial`).
    /// Ordered by the divisor odometer: first factor's exponent fastest,
    /// the full space (g = 1) first when included.
    pub fn enumerate(
        field: &Arc<Field>,
        n: usize,
        include_trivial: bool,
    ) -> Result<Vec<CyclicCode>> {
        let factors = factor::factor_xn_minus_1(field, n)?;
        let mut exps = vec![0usize; factors.len()];
        let mut out = Vec::new();
        loop {
            let full = exps
                .iter()
                .zip(&factors)
                .all(|(&e, (_, mult))| e == *mult);
            let trivial = exps.iter().all(|&e| e == 0);
            if !full && (include_trivial || !trivial) {
                let mut g = Poly::one(field.clone());
                for (&e, (f, _)) in exps.iter().zip(&factors) {
                    for _ in 0..e {
                        g = g.mul(f);
                    }
                }
                out.push(CyclicCode::from_generator(&g, n)?);
            }
            let mut d = 0;
            loop {
                if d == factors.len() {
                    return Ok(out);
                }
                if exps[d] < factors[d].1 {
                    exps[d] += 1;
                    break;
                }
                exps[d] = 0;
                d += 1;
            }
        }
    }
}

/// Canonically first irreducible factor of x^n - 1 with the given degree
/// and full period n; Ok(None) when no factor qualifies.
fn pick_factor(field: &Arc<Field>, n: usize, degree: usize) -> Result<Option<Poly>> {
    let factors = factor::factor_xn_minus_1(field, n)?;
    for (f, _) in factors {
        if f.deg() == Some(degree) && f.period()? == n as u64 {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Construction facts for an irreducible cyclic code, recorded as computed.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IrreducibleReport {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub delta: u64,
    pub delta_divides_q_minus_1: bool,
    pub gcd_n_delta: u64,
    pub gcd_period_delta: u64,
}

/// The single predicted b-symbol weight (q^b - 1)/delta * q^(k-b) of a
/// one-weight irreducible cyclic code; None when delta does not divide
/// q^b - 1 or b is out of 1..=k.
pub fn semiprimitive_weight(q: u64, k: usize, delta: u64, b: usize) -> Option<u128> {
    if b == 0 || b > k {
        return None;
    }
    let num = (q as u128).checked_pow(b as u32)? - 1;
    if num % delta as u128 != 0 {
        return None;
    }
    Some(num / delta as u128 * (q as u128).pow((k - b) as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics;

    fn gf(q: u64) -> Arc<Field> {
        Field::with_order(q).unwrap()
    }

    fn hamming_7_4() -> CyclicCode {
        let g = Poly::parse(gf(2), "1101").unwrap();
        CyclicCode::from_generator(&g, 7).unwrap()
    }

    #[test]
    fn cyclic_construction_and_descriptor() {
        let code = hamming_7_4();
        assert_eq!(code.n(), 7);
        assert_eq!(code.k(), 4);
        assert_eq!(code.descriptor(), "q=2;n=7;g=1101");
        assert_eq!(code.check_poly().deg(), Some(4));
        let roundtrip = CyclicCode::parse("q=2;n=7;g=1101").unwrap();
        assert_eq!(roundtrip.descriptor(), code.descriptor());
        assert!(!code.linear().has_zero_column());
    }

    #[test]
    fn generator_normalized_to_monic() {
        let f = gf(3);
        let g = Poly::parse(f.clone(), "21").unwrap(); // x + 2
        let doubled = g.mul_scalar(2); // 2x + 4 = 2x + 1
        let a = CyclicCode::from_generator(&g, 4).unwrap();
        let b = CyclicCode::from_generator(&doubled, 4).unwrap();
        assert_eq!(a.descriptor(), b.descriptor());
    }

    #[test]
    fn rejects_non_divisors_and_zero_dimension() {
        let f = gf(2);
        let g = Poly::parse(f.clone(), "101").unwrap(); // (x+1)^2
        assert!(matches!(
            CyclicCode::from_generator(&g, 7),
            Err(Error::NotADivisor { .. })
        ));
        let xn1 = Poly::xn_minus_1(f.clone(), 5);
        assert!(CyclicCode::from_generator(&xn1, 5).is_err());
        // g = 1 is the full space.
        let one = Poly::one(f);
        let full = CyclicCode::from_generator(&one, 5).unwrap();
        assert_eq!(full.k(), 5);
    }

    #[test]
    fn encode_contains_and_stream_agree() {
        let code = hamming_7_4();
        let lin = code.linear();
        let mut count = 0u32;
        let mut first = true;
        lin.for_each_codeword(|msg, word| {
            if first {
                assert!(msg.iter().all(|&d| d == 0));
                assert!(word.iter().all(|&c| c == 0));
                first = false;
            }
            assert_eq!(word, &lin.encode(msg)[..], "stream matches encode");
            assert!(lin.contains(word));
            count += 1;
        });
        assert_eq!(count, 16);
        assert!(!lin.contains(&[1, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn ranged_stream_partitions_the_full_stream() {
        let code = CyclicCode::parse("q=3;n=4;g=201").unwrap();
        let lin = code.linear();
        let mut full: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
        lin.for_each_codeword(|m, w| full.push((m.to_vec(), w.to_vec())));
        assert_eq!(full.len(), 9);
        for split in [0u128, 1, 4, 8, 9] {
            let mut parts: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
            lin.for_each_codeword_in(0, split, |m, w| parts.push((m.to_vec(), w.to_vec())));
            lin.for_each_codeword_in(split, 9, |m, w| parts.push((m.to_vec(), w.to_vec())));
            assert_eq!(parts, full, "split at {split}");
        }
    }

    #[test]
    fn window_independence() {
        let code = hamming_7_4();
        assert!(code.linear().windows_independent(1));
        assert!(code.linear().windows_independent(2));
        assert!(!code.linear().windows_independent(5), "b > k is impossible");
    }

    #[test]
    fn dp_transforms_preserve_weight_multiset() {
        let code = hamming_7_4();
        let lin = code.linear();
        let id = lin.transformed_dp(&[1; 7], 0).unwrap();
        assert_eq!(id.generator(), lin.generator());

        let f = gf(3);
        let g = Poly::parse(f.clone(), "21").unwrap();
        let c3 = CyclicCode::from_generator(&g, 4).unwrap();
        let t = c3
            .linear()
            .transformed_dp(&[1, 2, 2, 1], 3)
            .unwrap();
        let weights = |lc: &LinearCode| {
            let mut v = Vec::new();
            lc.for_each_codeword(|_, w| v.push(metrics::hamming_weight(w)));
            v.sort_unstable();
            v
        };
        assert_eq!(weights(c3.linear()), weights(&t));
        assert!(c3.linear().transformed_dp(&[1, 0, 1, 1], 0).is_err());
    }

    #[test]
    fn simplex_codes_are_one_weight() {
        let s23 = CyclicCode::simplex(2, 3).unwrap();
        assert_eq!((s23.n(), s23.k()), (7, 3));
        assert_eq!(s23.descriptor(), "q=2;n=7;g=11101");
        let s42 = CyclicCode::simplex(4, 2).unwrap();
        assert_eq!((s42.n(), s42.k()), (5, 2));
        for (code, expect) in [(s23, 4usize), (s42, 4)] {
            code.linear().for_each_codeword(|msg, w| {
                if msg.iter().any(|&d| d != 0) {
                    assert_eq!(metrics::hamming_weight(w), expect);
                }
            });
        }
    }

    #[test]
    fn simplex_rejects_non_coprime_lengths() {
        // n = 4, q - 1 = 2: no cyclic [4,2] code over GF(3) is one-weight.
        assert!(matches!(
            CyclicCode::simplex(3, 2),
            Err(Error::Invalid(_))
        ));
        assert!(CyclicCode::simplex(5, 2).is_err(), "gcd(6, 4) = 2");
    }

    #[test]
    fn irreducible_cyclic_4_2_3() {
        let (code, report) = CyclicCode::irreducible(4, 2, 3).unwrap();
        assert_eq!((code.n(), code.k()), (5, 2));
        assert_eq!(code.descriptor(), "q=4;n=5;g=1221");
        assert!(report.delta_divides_q_minus_1);
        assert_eq!(report.gcd_n_delta, 1);
        assert_eq!(report.gcd_period_delta, 1);
        // One-weight: every nonzero codeword has Hamming weight 4.
        code.linear().for_each_codeword(|msg, w| {
            if msg.iter().any(|&d| d != 0) {
                assert_eq!(metrics::hamming_weight(w), 4);
            }
        });
        assert_eq!(semiprimitive_weight(4, 2, 3, 1), Some(4));
        assert_eq!(semiprimitive_weight(4, 2, 3, 2), Some(5));
    }

    #[test]
    fn irreducible_rejects_impossible_orders() {
        // q = 2, k = 4, delta = 5: n = 3 but ord_3(2) = 2.
        assert!(CyclicCode::irreducible(2, 4, 5).is_err());
        assert!(CyclicCode::irreducible(2, 3, 2).is_err(), "2 does not divide 7");
    }

    #[test]
    fn semiprimitive_weight_inapplicable_cases() {
        assert_eq!(semiprimitive_weight(4, 2, 5, 1), None);
        assert_eq!(semiprimitive_weight(4, 2, 3, 0), None);
        assert_eq!(semiprimitive_weight(4, 2, 3, 3), None);
        // Simplex is the delta = 1 case.
        assert_eq!(semiprimitive_weight(2, 3, 1, 1), Some(4));
    }

    #[test]
    fn enumeration_counts() {
        let cases = [
            (2u64, 7usize, 7usize),
            (2, 4, 4),
            (3, 4, 7),
        ];
        for (q, n, expect) in cases {
            let f = gf(q);
            let with = CyclicCode::enumerate(&f, n, true).unwrap();
            assert_eq!(with.len(), expect, "q={q} n={n} with trivial");
            let without = CyclicCode::enumerate(&f, n, false).unwrap();
            assert_eq!(without.len(), expect - 1, "q={q} n={n} without trivial");
            assert!(with.iter().any(|c| c.k() == n));
            assert!(without.iter().all(|c| c.k() < n));
            for code in &with {
                assert!(code.k() >= 1);
                let d = code.generator_poly().deg().unwrap();
                assert_eq!(code.k(), n - d);
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_distinct() {
        let f = gf(2);
        let a = CyclicCode::enumerate(&f, 15, true).unwrap();
        let b = CyclicCode::enumerate(&f, 15, true).unwrap();
        let da: Vec<String> = a.iter().map(|c| c.descriptor()).collect();
        let db: Vec<String> = b.iter().map(|c| c.descriptor()).collect();
        assert_eq!(da, db);
        let mut sorted = da.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), da.len(), "descriptors are distinct");
        assert_eq!(da[0], "q=2;n=15;g=1", "trivial code comes first");
    }
}
