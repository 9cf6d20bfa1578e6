//! Relatively irreducible polynomials as Galois orbit products.
//!
//! For `k | n`, every relatively irreducible polynomial over `GF(p)` whose
//! absolutely irreducible factors are defined over `GF(p^k)` and no smaller
//! field arises as `phi(g) = prod_{i<k} g^(sigma^i)`, with `sigma` the
//! coefficientwise Frobenius and `g` of degree `m = n/k` in `I+`: irreducible
//! over `GF(p^k)`, not relatively irreducible there, and not defined over a
//! proper subfield. Each fibre of `phi` is a full orbit of size `k`.
//!
//! All fields live inside one ambient `GF(p^K)` as Frobenius fixed points,
//! so no embeddings are needed. Only `m <= 2` is supported, where membership
//! in `E_m(GF(p^k))` has the explicit form `g g^tau` with `g` linear over
//! `GF(p^2k)` but not over `GF(p^k)`.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::counts::divisors;
use crate::error::{Error, Result};
use crate::oracle::field::{smallest_prime_factor, FieldSpec, GaloisField};
use crate::oracle::poly::{MultiPoly, PolyRing};
use crate::oracle::sieve::{reducible_codes, CodeSet};

#[derive(Debug)]
pub struct GaloisImage {
    pub k: usize,
    /// `#I+`.
    pub plus_count: u64,
    /// `#phi(I+)`.
    pub image_size: u64,
    /// Codes of the images in the base-`p` ring of degree `n`.
    pub images: CodeSet,
}

impl GaloisImage {
    /// `#I+ = k #phi(I+)`.
    pub fn fibres_are_orbits(&self) -> bool {
        self.plus_count.is_multiple_of(self.k as u64) && self.image_size * self.k as u64 == self.plus_count
    }
}

fn prime_divisors(k: usize) -> Vec<usize> {
    divisors(k)
        .into_iter()
        .filter(|&t| t > 1 && smallest_prime_factor(t as u64) == t as u64)
        .collect()
}

/// Builds `phi(I+)` over the prime field `field` for one `k | n`.
pub fn galois_image_check(field: &FieldSpec, r: u32, n: usize, k: usize) -> Result<GaloisImage> {
    if field.k() != 1 {
        return Err(Error::Unsupported("orbit products need a prime base field".into()));
    }
    if k < 2 || !n.is_multiple_of(k) {
        return Err(Error::NotDivisor { k, n });
    }
    let m = n / k;
    if m > 2 {
        return Err(Error::Unsupported(format!("factor degree {m} > 2")));
    }
    let p = field.p();
    let big = Arc::new(GaloisField::of(p, (k * m) as u32)?);
    let over_k = PolyRing::over_subfield(big.clone(), r, n, k as u32)?;
    let base = PolyRing::over_subfield(big.clone(), r, n, 1)?;
    over_k.guard(m)?;
    base.guard(n)?;

    let reducible = if m >= 2 { Some(reducible_codes(&over_k, m)?) } else { None };
    let rel_irreducible: HashSet<u64> = if m == 2 {
        let full = PolyRing::over_subfield(big.clone(), r, n, (2 * k) as u32)?;
        let mut set = HashSet::new();
        for g in full.enumerate_monic(1)? {
            if full.coefficients_in(&g, k as u32) {
                continue;
            }
            let norm = full.mul(&g, &full.frobenius(&g, k as u32))?;
            assert!(over_k.coefficients_in(&norm, k as u32), "norm leaves GF(p^{k})");
            set.insert(over_k.encode(&norm, m));
        }
        set
    } else {
        HashSet::new()
    };

    let subfields: Vec<u32> = prime_divisors(k).into_iter().map(|t| (k / t) as u32).collect();
    let plus: Vec<MultiPoly> = over_k
        .enumerate_monic(m)?
        .filter(|g| {
            let code = over_k.encode(g, m);
            !reducible.as_ref().is_some_and(|red| red.contains(code))
                && !rel_irreducible.contains(&code)
                && !subfields.iter().any(|&d| over_k.coefficients_in(g, d))
        })
        .collect();

    let b = crate::counts::binom_b(r, n as i64) as u32;
    let images = CodeSet::with_capacity(p.pow(b));
    plus.par_iter().try_for_each(|g| -> Result<()> {
        let mut phi = g.clone();
        for i in 1..k {
            phi = over_k.mul(&phi, &over_k.frobenius(g, i as u32))?;
        }
        assert!(
            base.coefficients_in(&phi, 1) && base.frobenius(&phi, 1) == phi,
            "orbit product is not Galois-stable"
        );
        images.insert(base.encode(&phi, n));
        Ok(())
    })?;
    Ok(GaloisImage { k, plus_count: plus.len() as u64, image_size: images.len(), images })
}

/// `E_n` as the disjoint union of the images for all `k | n`, `k > 1`.
pub fn rel_irred_by_images(field: &FieldSpec, r: u32, n: usize) -> Result<u64> {
    divisors(n)
        .into_iter()
        .filter(|&k| k > 1)
        .map(|k| galois_image_check(field, r, n, k).map(|g| g.image_size))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::new(p, 1).unwrap()
    }

    #[test]
    fn quadratic_images_over_gf2() {
        let g = galois_image_check(&gf(2), 2, 2, 2).unwrap();
        assert_eq!(g.image_size, 7);
        assert!(g.fibres_are_orbits());
    }

    #[test]
    fn quartic_images_over_gf2() {
        assert_eq!(rel_irred_by_images(&gf(2), 2, 4).unwrap(), 553);
        for k in [2, 4] {
            assert!(galois_image_check(&gf(2), 2, 4, k).unwrap().fibres_are_orbits());
        }
    }

    #[test]
    fn images_are_irreducible_over_the_base() {
        let base = PolyRing::new(Arc::new(GaloisField::new(gf(2))), 2, 4);
        let red = reducible_codes(&base, 4).unwrap();
        let g = galois_image_check(&gf(2), 2, 4, 2).unwrap();
        assert!(g.images.iter().all(|c| !red.contains(c)));
    }

    #[test]
    fn refuses_unsupported_shapes() {
        assert!(galois_image_check(&gf(2), 2, 6, 2).is_err());
        assert!(galois_image_check(&gf(2), 2, 5, 2).is_err());
        assert!(galois_image_check(&FieldSpec::new(2, 2).unwrap(), 2, 2, 2).is_err());
    }
}
