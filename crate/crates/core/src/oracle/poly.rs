//! Dense multivariate polynomials over a small finite field.
//!
//! Monomials of total degree at most `n_bound` are indexed in increasing
//! graded lexicographic order with `x_1 > x_2 > ...`: the degree-`d` block
//! starts at `b_{r,d-1}` and ends with `x_1^d`. The leading term of a
//! polynomial is its highest-index nonzero coefficient.

use std::sync::Arc;

use crate::counts::binom_b;
use crate::error::{Error, Result};
use crate::oracle::field::{FieldElem, GaloisField};

/// Largest number of polynomials a guarded enumeration may address.
pub const SIZE_GUARD_BITS: f64 = 24.0;

/// Exponent vectors up to a total degree, with a product index table.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    r: u32,
    n_bound: usize,
    exps: Vec<Vec<u8>>,
    degrees: Vec<usize>,
    mul: Vec<u32>,
}

impl MonomialBasis {
    pub fn new(r: u32, n_bound: usize) -> Self {
        let mut exps: Vec<Vec<u8>> = Vec::new();
        let mut degrees = Vec::new();
        for d in 0..=n_bound {
            let mut block = Vec::new();
            compositions(r as usize, d, &mut Vec::new(), &mut block);
            block.sort();
            degrees.extend(std::iter::repeat_n(d, block.len()));
            exps.extend(block);
        }
        let len = exps.len();
        let index: std::collections::HashMap<&[u8], u32> =
            exps.iter().enumerate().map(|(i, e)| (e.as_slice(), i as u32)).collect();
        let mut mul = vec![u32::MAX; len * len];
        for i in 0..len {
            for j in 0..len {
                if degrees[i] + degrees[j] <= n_bound {
                    let sum: Vec<u8> = exps[i].iter().zip(&exps[j]).map(|(a, b)| a + b).collect();
                    mul[i * len + j] = index[sum.as_slice()];
                }
            }
        }
        Self { r, n_bound, exps, degrees, mul }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n_bound(&self) -> usize {
        self.n_bound
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self, i: usize) -> &[u8] {
        &self.exps[i]
    }

    pub fn degree_of(&self, i: usize) -> usize {
        self.degrees[i]
    }

    /// Index of the product monomial, if within the degree bound.
    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        let v = self.mul[i * self.len() + j];
        (v != u32::MAX).then_some(v as usize)
    }
}

fn compositions(parts: usize, total: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if parts == 1 {
        cur.push(total as u8);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for first in 0..=total {
        cur.push(first as u8);
        compositions(parts - 1, total - first, cur, out);
        cur.pop();
    }
}

/// A polynomial in `r` variables with total degree at most `n_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    pub r: u32,
    pub n_bound: usize,
    coeffs: Vec<FieldElem>,
}

impl MultiPoly {
    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.0 == 0)
    }

    /// Index of the leading monomial; `None` for zero.
    pub fn leading_index(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| c.0 != 0)
    }
}

/// Polynomials over `field` whose coefficients may be restricted to the
/// subfield `GF(p^d)`, the alphabet.
#[derive(Clone, Debug)]
pub struct PolyRing {
    field: Arc<GaloisField>,
    basis: Arc<MonomialBasis>,
    alphabet: Vec<FieldElem>,
    digit: Vec<u8>,
}

impl PolyRing {
    /// All coefficients from `field`.
    pub fn new(field: Arc<GaloisField>, r: u32, n_bound: usize) -> Self {
        let k = field.spec().k();
        Self::over_subfield(field, r, n_bound, k).expect("k divides k")
    }

    /// Coefficients from the subfield `GF(p^d)` of `field`.
    pub fn over_subfield(field: Arc<GaloisField>, r: u32, n_bound: usize, d: u32) -> Result<Self> {
        let alphabet = field.subfield(d)?;
        let mut digit = vec![u8::MAX; field.order()];
        for (i, a) in alphabet.iter().enumerate() {
            digit[a.0 as usize] = i as u8;
        }
        Ok(Self {
            basis: Arc::new(MonomialBasis::new(r, n_bound)),
            field,
            alphabet,
            digit,
        })
    }

    /// The same field and alphabet with a different degree bound.
    pub fn with_bound(&self, n_bound: usize) -> Self {
        Self {
            basis: Arc::new(MonomialBasis::new(self.basis.r, n_bound)),
            ..self.clone()
        }
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn r(&self) -> u32 {
        self.basis.r
    }

    pub fn alphabet(&self) -> &[FieldElem] {
        &self.alphabet
    }

    pub fn alphabet_size(&self) -> u64 {
        self.alphabet.len() as u64
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly {
            r: self.basis.r,
            n_bound: self.basis.n_bound,
            coeffs: vec![FieldElem(0); self.basis.len()],
        }
    }

    pub fn one(&self) -> MultiPoly {
        self.monomial(&vec![0; self.basis.r as usize], FieldElem(1)).expect("constant fits")
    }

    /// `c x^e`.
    pub fn monomial(&self, exps: &[u8], c: FieldElem) -> Result<MultiPoly> {
        let i = (0..self.basis.len())
            .find(|&i| self.basis.exps[i] == exps)
            .ok_or_else(|| Error::InvalidParams(format!("monomial {exps:?} outside the basis")))?;
        let mut p = self.zero();
        p.coeffs[i] = c;
        Ok(p)
    }

    /// Builds from `(exponents, coefficient)` terms; repeated monomials add up.
    pub fn from_terms(&self, terms: &[(&[u8], FieldElem)]) -> Result<MultiPoly> {
        let mut p = self.zero();
        for (e, c) in terms {
            let m = self.monomial(e, *c)?;
            p = self.add(&p, &m);
        }
        Ok(p)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self, f: &MultiPoly) -> Option<usize> {
        f.leading_index().map(|i| self.basis.degrees[i])
    }

    pub fn is_monic(&self, f: &MultiPoly) -> bool {
        f.leading_index().is_some_and(|i| f.coeffs[i] == FieldElem(1))
    }

    pub fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| self.field.add(x, y)).collect();
        MultiPoly { coeffs, ..a.clone() }
    }

    /// Product; fails when `deg a + deg b` exceeds the bound.
    pub fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
        let (da, db) = (self.degree(a).unwrap_or(0), self.degree(b).unwrap_or(0));
        if da + db > self.basis.n_bound {
            return Err(Error::DegreeOverflow { deg: da + db, bound: self.basis.n_bound });
        }
        let mut out = self.zero();
        let nz_b: Vec<usize> = (0..b.coeffs.len()).filter(|&j| b.coeffs[j].0 != 0).collect();
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.0 == 0 {
                continue;
            }
            for &j in &nz_b {
                let k = self.basis.product(i, j).expect("degree checked");
                let t = self.field.mul(x, b.coeffs[j]);
                out.coeffs[k] = self.field.add(out.coeffs[k], t);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, a: &MultiPoly, e: usize) -> Result<MultiPoly> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Applies `c -> c^(p^times)` to every coefficient.
    pub fn frobenius(&self, f: &MultiPoly, times: u32) -> MultiPoly {
        let coeffs = f.coeffs.iter().map(|&c| self.field.frobenius(c, times)).collect();
        MultiPoly { coeffs, ..f.clone() }
    }

    /// True when every coefficient lies in `GF(p^d)`.
    pub fn coefficients_in(&self, f: &MultiPoly, d: u32) -> bool {
        f.coeffs.iter().all(|&c| self.field.in_subfield(c, d))
    }

    /// Refuses when the monic polynomials of degree `n` cannot be addressed
    /// by a base-`alphabet` code of at most [`SIZE_GUARD_BITS`] bits.
    pub fn guard(&self, n: usize) -> Result<()> {
        let bits = binom_b(self.basis.r, n as i64) as f64 * (self.alphabet.len() as f64).log2();
        if n > self.basis.n_bound {
            return Err(Error::DegreeOverflow { deg: n, bound: self.basis.n_bound });
        }
        if bits > SIZE_GUARD_BITS + 1e-9 {
            return Err(Error::SizeGuard {
                what: format!(
                    "monic polynomials in {} variables of degree {n} over GF({})",
                    self.basis.r,
                    self.alphabet.len()
                ),
                size_bits: bits,
            });
        }
        Ok(())
    }

    /// Base-`alphabet` code of the coefficients below `b_{r,n}`; injective on
    /// polynomials of degree at most `n` over the alphabet.
    pub fn encode(&self, f: &MultiPoly, n: usize) -> u64 {
        let len = binom_b(self.basis.r, n as i64) as usize;
        let base = self.alphabet.len() as u64;
        f.coeffs[..len].iter().rev().fold(0u64, |acc, c| {
            let d = self.digit[c.0 as usize];
            debug_assert!(d != u8::MAX, "coefficient outside the alphabet");
            acc * base + u64::from(d)
        })
    }

    pub fn decode(&self, mut code: u64, n: usize) -> MultiPoly {
        let base = self.alphabet.len() as u64;
        let mut f = self.zero();
        for c in f.coeffs[..binom_b(self.basis.r, n as i64) as usize].iter_mut() {
            *c = self.alphabet[(code % base) as usize];
            code /= base;
        }
        f
    }

    /// `sum_t base^t` over the possible leading indices `t` of degree `n`.
    pub fn monic_count(&self, n: usize) -> u64 {
        let base = self.alphabet_size();
        let lo = binom_b(self.basis.r, n as i64 - 1);
        let hi = binom_b(self.basis.r, n as i64);
        (lo..hi).map(|t| base.pow(t as u32)).sum()
    }

    /// Each monic polynomial of total degree `n` exactly once, ordered by
    /// leading index and then by code.
    pub fn enumerate_monic(&self, n: usize) -> Result<MonicIter<'_>> {
        self.guard(n)?;
        Ok(MonicIter {
            ring: self,
            t: binom_b(self.basis.r, n as i64 - 1) as usize,
            end: binom_b(self.basis.r, n as i64) as usize,
            low: 0,
        })
    }

    /// The monic polynomial with leading index `t` and lower coefficients
    /// given by the base-`alphabet` digits of `low`.
    fn monic_at(&self, t: usize, mut low: u64) -> MultiPoly {
        let base = self.alphabet_size();
        let mut f = self.zero();
        for c in f.coeffs[..t].iter_mut() {
            *c = self.alphabet[(low % base) as usize];
            low /= base;
        }
        f.coeffs[t] = FieldElem(1);
        f
    }
}

pub struct MonicIter<'a> {
    ring: &'a PolyRing,
    t: usize,
    end: usize,
    low: u64,
}

impl Iterator for MonicIter<'_> {
    type Item = MultiPoly;

    fn next(&mut self) -> Option<MultiPoly> {
        while self.t < self.end {
            if self.low < self.ring.alphabet_size().pow(self.t as u32) {
                let f = self.ring.monic_at(self.t, self.low);
                self.low += 1;
                return Some(f);
            }
            self.t += 1;
            self.low = 0;
        }
        None
    }
}
