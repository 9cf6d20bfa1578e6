//! Counting by product sieves.
//!
//! A monic polynomial of degree `n` is reducible exactly when it is a product
//! `g h` of monic polynomials of degrees `k` and `n - k` with `1 <= k <= n/2`;
//! it is `s`-powerful exactly when it is `g^s h` with `deg g >= 1`. Marking
//! every such product in a bitset indexed by coefficient codes gives the exact
//! counts without any factorization algorithm.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_integer::Integer;
use rayon::prelude::*;

use crate::counts::divisors;
use crate::error::{Error, Result};
use crate::oracle::field::{FieldSpec, GaloisField};
use crate::oracle::poly::{MultiPoly, PolyRing};
use crate::zseries::mobius;

/// A set of polynomial codes below `2^SIZE_GUARD_BITS`, safe to fill from
/// several threads.
#[derive(Debug)]
pub struct CodeSet {
    words: Vec<AtomicU64>,
}

impl CodeSet {
    pub fn with_capacity(codes: u64) -> Self {
        Self { words: (0..codes.div_ceil(64)).map(|_| AtomicU64::new(0)).collect() }
    }

    pub fn insert(&self, code: u64) {
        self.words[(code / 64) as usize].fetch_or(1 << (code % 64), Ordering::Relaxed);
    }

    pub fn contains(&self, code: u64) -> bool {
        self.words
            .get((code / 64) as usize)
            .is_some_and(|w| w.load(Ordering::Relaxed) >> (code % 64) & 1 == 1)
    }

    pub fn len(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.load(Ordering::Relaxed).count_ones())).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Codes in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, w)| {
            let bits = w.load(Ordering::Relaxed);
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| i as u64 * 64 + b)
        })
    }
}

fn code_space(ring: &PolyRing, n: usize) -> u64 {
    let b = crate::counts::binom_b(ring.r(), n as i64) as u32;
    ring.alphabet_size().pow(b)
}

/// Marks `g^e h` for every monic `g` of degree `k` and `h` of degree `n - e k`.
fn mark_products(ring: &PolyRing, n: usize, k: usize, e: usize, set: &CodeSet) -> Result<()> {
    let gs: Vec<MultiPoly> = ring
        .enumerate_monic(k)?
        .map(|g| ring.pow(&g, e))
        .collect::<Result<_>>()?;
    let hs: Vec<MultiPoly> = if n == e * k {
        vec![ring.one()]
    } else {
        ring.enumerate_monic(n - e * k)?.collect()
    };
    gs.par_iter().try_for_each(|g| {
        for h in &hs {
            set.insert(ring.encode(&ring.mul(g, h)?, n));
        }
        Ok(())
    })
}

/// The reducible monic polynomials of degree `n` over the ring's alphabet.
pub fn reducible_codes(ring: &PolyRing, n: usize) -> Result<CodeSet> {
    let ring = ring.with_bound(n);
    ring.guard(n)?;
    let set = CodeSet::with_capacity(code_space(&ring, n));
    for k in 1..=n / 2 {
        mark_products(&ring, n, k, 1, &set)?;
    }
    Ok(set)
}

/// The `s`-powerful monic polynomials of degree `n` over the ring's alphabet.
pub fn powerful_codes(ring: &PolyRing, n: usize, s: usize) -> Result<CodeSet> {
    if s < 2 {
        return Err(Error::InvalidParams(format!("need s >= 2, got {s}")));
    }
    let ring = ring.with_bound(n);
    ring.guard(n)?;
    let set = CodeSet::with_capacity(code_space(&ring, n));
    for k in 1..=n / s {
        mark_products(&ring, n, k, s, &set)?;
    }
    Ok(set)
}

fn base_ring(field: &FieldSpec, r: u32, n: usize) -> PolyRing {
    PolyRing::new(Arc::new(GaloisField::new(field.clone())), r, n)
}

/// Number of reducible monic polynomials of degree `n` over `field`.
pub fn sieve_reducible(field: &FieldSpec, r: u32, n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidParams("need n >= 1".into()));
    }
    Ok(reducible_codes(&base_ring(field, r, n), n)?.len())
}

/// Number of irreducible monic polynomials of degree `n` over `field`.
pub fn sieve_irreducible(field: &FieldSpec, r: u32, n: usize) -> Result<u64> {
    let ring = base_ring(field, r, n);
    let red = reducible_codes(&ring, n)?.len();
    Ok(ring.monic_count(n) - red)
}

/// Number of `s`-powerful monic polynomials of degree `n` over `field`.
pub fn sieve_powerful(field: &FieldSpec, r: u32, n: usize, s: usize) -> Result<u64> {
    Ok(powerful_codes(&base_ring(field, r, n), n, s)?.len())
}

/// Relatively irreducible count over `GF(p^k)` from sieved irreducible
/// counts over its extensions: `E_n = I_n - A_n` with
/// `A_n = sum_{j | n} 1/j sum_{t | j} mu(t) I_{n/j}(GF(q^t))`.
pub fn count_rel_irred_oracle(field: &FieldSpec, r: u32, n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidParams("need n >= 1".into()));
    }
    let (p, k) = (field.p(), field.k());
    let irr = |m: usize, t: usize| -> Result<i128> {
        let spec = if t == 1 { field.clone() } else { FieldSpec::new(p, k * t as u32)? };
        Ok(i128::from(sieve_irreducible(&spec, r, m)?))
    };
    let lcm = divisors(n).into_iter().fold(1i128, |acc, j| acc.lcm(&(j as i128)));
    let mut scaled_abs = 0i128;
    for j in divisors(n) {
        for t in divisors(j) {
            let mu = i128::from(mobius(t as u64));
            if mu != 0 {
                scaled_abs += lcm / j as i128 * mu * irr(n / j, t)?;
            }
        }
    }
    let scaled_rel = lcm * irr(n, 1)? - scaled_abs;
    assert!(scaled_rel % lcm == 0, "absolute count is not an integer");
    Ok((scaled_rel / lcm) as u64)
}
