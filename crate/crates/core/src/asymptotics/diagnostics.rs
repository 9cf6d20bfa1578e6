//! Ratio diagnostics for the second-order terms of the asymptotic expansions.
//!
//! Each expansion has the shape `count = main (1 + t(q) (1 + O(1/q)))` with
//! an explicit `t`. The ratio `(count/main - 1) / t(q)` tends to 1 as `q`
//! grows when `t` is right. The `O(1/q)` constants are not quantified, so
//! these values are reported, never asserted.
#![allow(non_snake_case)]

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::bounds::Family;
use super::{alpha, delta_thm, epsilon_main, eta, gamma, rho};
use crate::counts::{binom_b, CountEngine, Params};
use crate::error::{Error, Result};
use crate::oracle::field::smallest_prime_factor;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Diagnostic {
    pub family: Family,
    pub r: u32,
    pub n: usize,
    pub s: Option<usize>,
    pub q: u64,
    #[serde(skip)]
    pub ratio: BigRational,
    #[serde(rename = "ratio")]
    pub ratio_f64: f64,
}

fn b(r: u32, n: i64) -> i64 {
    binom_b(r, n) as i64
}

fn one() -> BigRational {
    BigRational::from_int(1)
}

/// `R`: `t = alpha_n q^(-b_{r-1,n-1} + r(r+1)/2)` for `n >= 4`. For `n = 3`
/// the expansion `1 - q^-r + q^(-r(r-1)/2) (1 - 2q^-r + 2q^(-2r-1) - q^(-2r-2)) / (3 (1 - q^-1))`
/// is tested by moving the `-q^-r` term to the left.
pub fn ratio_R(r: u32, n: usize, q: &BigRational, exact: &BigRational) -> Result<BigRational> {
    let rel = exact / rho(r, n, q)? - one();
    let r_ = i64::from(r);
    match n {
        0..=2 => Err(Error::InvalidParams(format!("no second-order R term for n = {n}"))),
        3 => {
            let tail = (one() - q.powi(-r_) * BigRational::from_int(2) + q.powi(-2 * r_ - 1) * BigRational::from_int(2)
                - q.powi(-2 * r_ - 2))
                / (BigRational::from_int(3) * (one() - q.powi(-1)));
            Ok((rel + q.powi(-r_)) / (q.powi(-(r_ * (r_ - 1) / 2)) * tail))
        }
        _ => Ok(rel / (alpha(n) * q.powi(-b(r - 1, n as i64 - 1) + r_ * (r_ + 1) / 2))),
    }
}

/// `Q`: `t = -q^-delta` with `delta = b_{r,n-s} - b_{r,n-2s} - r(r+1)/2`, and
/// `t = -q^(-C(r+3,4) - r)` for `(n,s) = (6,2)`. Needs `n >= 2s`.
pub fn ratio_Q(r: u32, n: usize, s: usize, q: &BigRational, exact: &BigRational) -> Result<BigRational> {
    if n < 2 * s {
        return Err(Error::InvalidParams(format!("Q is exact for n < 2s (n={n}, s={s})")));
    }
    let rel = exact / eta(r, n, s, q)? - one();
    let e = if (n, s) == (6, 2) {
        b(4, i64::from(r) - 1) + i64::from(r)
    } else {
        delta_thm(r, n, s)
    };
    Ok(rel / -q.powi(-e))
}

/// `E`: `t = -gamma q^(-l (b_{r-1,n/l} - r))` for composite `n`; for prime
/// `n` the exact correction, so the ratio is 1.
pub fn ratio_E(r: u32, n: usize, q: &BigRational, exact: &BigRational) -> Result<BigRational> {
    let rel = exact / epsilon_main(r, n, q)? - one();
    let (r_, n_) = (i64::from(r), n as i64);
    let l = smallest_prime_factor(n as u64) as i64;
    let t = if l == n_ {
        q.powi(-r_ * (n_ - 1)) * (one() - q.powi(-r_)) * (one() - q.powi(-n_))
            / ((one() - q.powi(-1)) * (one() - q.powi(-n_ * r_)))
    } else {
        gamma(r, n, q) * q.powi(-l * (b(r - 1, n_ / l) - r_))
    };
    Ok(rel / -t)
}

/// The ratio for one family at each `q`, with exact counts from the engine.
pub fn ratio_report(family: Family, r: u32, n: usize, s: Option<usize>, qs: &[u64]) -> Result<Vec<Diagnostic>> {
    let engine = CountEngine::<BigRational>::new(Params::new(r, n, s)?);
    let poly = match family {
        Family::R => engine.count_reducible(n)?,
        Family::Q => engine.count_powerful(n)?,
        Family::E => engine.count_rel_irreducible(n)?,
        other => return Err(Error::Unsupported(format!("no ratio diagnostic for {other}"))),
    };
    qs.iter()
        .map(|&q| {
            let qq = BigRational::from_int(q as i64);
            let exact = poly.eval(&qq);
            let ratio = match family {
                Family::R => ratio_R(r, n, &qq, &exact)?,
                Family::Q => ratio_Q(r, n, s.ok_or(Error::MissingPower)?, &qq, &exact)?,
                _ => ratio_E(r, n, &qq, &exact)?,
            };
            Ok(Diagnostic {
                family,
                r,
                n,
                s,
                q,
                ratio_f64: ratio.to_f64().unwrap_or(f64::NAN),
                ratio,
            })
        })
        .collect()
}
