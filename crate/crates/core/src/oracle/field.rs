//! Small finite fields `GF(p^k)` with table arithmetic.
//!
//! An element is stored as its residue polynomial in `GF(p)[t]/(m(t))`,
//! coefficient vector read as a base-`p` integer. `m` is the
//! lexicographically least monic irreducible of degree `k`.

use crate::error::{Error, Result};

/// Smallest prime factor of `n >= 2`.
pub fn smallest_prime_factor(n: u64) -> u64 {
    assert!(n >= 2, "smallest_prime_factor needs n >= 2");
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

/// `Some((p, k))` when `q = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Largest field order the table arithmetic accepts.
pub const MAX_FIELD_ORDER: u64 = 32;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(pub u8);

/// Characteristic, degree and defining polynomial of `GF(p^k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    k: u32,
    /// Coefficients of the monic modulus, ascending, length `k + 1`.
    modulus: Vec<u8>,
}

impl FieldSpec {
    /// `GF(p^k)` with the lexicographically least irreducible modulus.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        Self::check_order(p, k)?;
        let k_ = k as usize;
        let count = p.pow(k);
        for rep in 0..count {
            let mut m = digits(rep, p, k_);
            m.push(1);
            if is_irreducible(&m, p) {
                return Ok(Self { p, k, modulus: m });
            }
        }
        unreachable!("an irreducible of every degree exists")
    }

    /// `GF(p^k)` with a caller-chosen modulus, which must be monic and irreducible.
    pub fn with_modulus(p: u64, modulus: Vec<u8>) -> Result<Self> {
        let k = modulus.len().checked_sub(1).filter(|&k| k >= 1).ok_or_else(|| {
            Error::InvalidParams("modulus needs degree >= 1".into())
        })? as u32;
        Self::check_order(p, k)?;
        if modulus.last() != Some(&1) || modulus.iter().any(|&c| u64::from(c) >= p) {
            return Err(Error::InvalidParams(format!("modulus {modulus:?} is not monic over GF({p})")));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::InvalidParams(format!("modulus {modulus:?} is reducible over GF({p})")));
        }
        Ok(Self { p, k, modulus })
    }

    fn check_order(p: u64, k: u32) -> Result<()> {
        if p < 2 || smallest_prime_factor(p) != p {
            return Err(Error::NotPrimePower(p));
        }
        if k == 0 {
            return Err(Error::InvalidParams("extension degree must be >= 1".into()));
        }
        match p.checked_pow(k) {
            Some(q) if q <= MAX_FIELD_ORDER => Ok(()),
            _ => Err(Error::FieldTooLarge(p.saturating_pow(k))),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }
}

fn digits(mut rep: u64, p: u64, len: usize) -> Vec<u8> {
    let mut out = vec![0u8; len];
    for d in &mut out {
        *d = (rep % p) as u8;
        rep /= p;
    }
    out
}

/// Remainder of `a` modulo the monic `m` over `GF(p)`; both ascending.
fn poly_rem(a: &[u8], m: &[u8], p: u64) -> Vec<u8> {
    let mut a: Vec<u64> = a.iter().map(|&c| u64::from(c)).collect();
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = a.pop().expect("nonempty");
        if lead == 0 {
            continue;
        }
        let shift = a.len() - dm;
        for (i, &mc) in m[..dm].iter().enumerate() {
            a[shift + i] = (a[shift + i] + p * p - lead * u64::from(mc) % p) % p;
        }
    }
    a.into_iter().map(|c| c as u8).collect()
}

/// Exhaustive test: no monic divisor of degree `1..=deg/2`.
fn is_irreducible(m: &[u8], p: u64) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        for rep in 0..p.pow(d as u32) {
            let mut f = digits(rep, p, d);
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// `GF(p^k)` with precomputed addition, multiplication and Frobenius tables.
#[derive(Clone, Debug)]
pub struct GaloisField {
    spec: FieldSpec,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    frob: Vec<u8>,
}

impl GaloisField {
    pub fn new(spec: FieldSpec) -> Self {
        let (p, k) = (spec.p, spec.k as usize);
        let q = spec.order() as usize;
        let elems: Vec<Vec<u8>> = (0..q as u64).map(|e| digits(e, p, k)).collect();
        let encode = |v: &[u8]| v.iter().rev().fold(0u64, |acc, &c| acc * p + u64::from(c)) as u8;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u8> = (0..k)
                    .map(|i| ((u64::from(elems[a][i]) + u64::from(elems[b][i])) % p) as u8)
                    .collect();
                add[a * q + b] = encode(&s);
                let mut prod = vec![0u8; 2 * k - 1];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = ((u64::from(prod[i + j])
                            + u64::from(elems[a][i]) * u64::from(elems[b][j]))
                            % p) as u8;
                    }
                }
                let mut red = poly_rem(&prod, &spec.modulus, p);
                red.resize(k, 0);
                mul[a * q + b] = encode(&red);
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u8 })
            .collect();
        let mut field = Self { spec, q, add, mul, neg, inv, frob: Vec::new() };
        field.frob = (0..q).map(|a| field.pow(FieldElem(a as u8), p).0).collect();
        field
    }

    /// `GF(p^k)` with the default modulus.
    pub fn of(p: u64, k: u32) -> Result<Self> {
        Ok(Self::new(FieldSpec::new(p, k)?))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u8).map(FieldElem)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add[a.0 as usize * self.q + b.0 as usize])
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.0 as usize])
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.mul[a.0 as usize * self.q + b.0 as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        (a.0 != 0).then(|| FieldElem(self.inv[a.0 as usize]))
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let (mut base, mut acc) = (a, self.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^(p^times)`.
    pub fn frobenius(&self, a: FieldElem, times: u32) -> FieldElem {
        (0..times).fold(a, |x, _| FieldElem(self.frob[x.0 as usize]))
    }

    /// True when `a` lies in the subfield `GF(p^d)`, i.e. `a^(p^d) = a`.
    pub fn in_subfield(&self, a: FieldElem, d: u32) -> bool {
        self.frobenius(a, d) == a
    }

    /// The elements of `GF(p^d)` for `d | k`, ascending by encoding.
    pub fn subfield(&self, d: u32) -> Result<Vec<FieldElem>> {
        if d == 0 || !self.spec.k.is_multiple_of(d) {
            return Err(Error::NotDivisor { k: d as usize, n: self.spec.k as usize });
        }
        Ok(self.elements().filter(|&a| self.in_subfield(a, d)).collect())
    }
}
