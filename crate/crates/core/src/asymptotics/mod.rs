//! Main terms, exponent bookkeeping and executable error bounds.
//!
//! The main terms `rho`, `eta` and `epsilon_main` are rational functions of
//! `q`, so they are only ever evaluated at a concrete `q`. Every function is
//! generic over the scalar; bound checks use exact rationals.

pub mod bounds;
pub mod diagnostics;

pub use bounds::{
    check_A_lower, check_E_bound, check_E_lower, check_E_upper, check_I_lower, check_I_prop,
    check_Q_bound, check_Q_lower, check_Q_upper, check_R_bound, check_R_lower, check_R_upper,
    summarize, sweep, to_csv, BoundCheck, CheckKind, DeltaVariant, Family, Statement, SweepSpec,
    SweepSummary,
};

use num_rational::BigRational;

use crate::counts::binom_b;
use crate::error::{Error, Result};
use crate::oracle::field::smallest_prime_factor;
use crate::scalar::Scalar;

fn b(r: u32, n: i64) -> i64 {
    binom_b(r, n) as i64
}

/// `u_{r,n}(k) = b_{r,k} + b_{r,n-k} - 2`, the `q`-degree of `P_k P_{n-k}`.
pub fn u(r: u32, n: usize, k: usize) -> i64 {
    b(r, k as i64) + b(r, n as i64 - k as i64) - 2
}

/// `v_{r,n,s}(k) = b_{r,k} + b_{r,n-sk} - 2`.
pub fn v(r: u32, n: usize, s: usize, k: usize) -> i64 {
    b(r, k as i64) + b(r, n as i64 - (s * k) as i64) - 2
}

/// `w_{r,n}(k) = k (b_{r,n/k} - 1)` for `k | n`.
pub fn w(r: u32, n: usize, k: usize) -> Result<i64> {
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::NotDivisor { k, n });
    }
    Ok(k as i64 * (b(r, (n / k) as i64) - 1))
}

/// `C(r + x, r)` as a polynomial in `x`, valid for real `x`.
pub fn binom_real<T: Scalar>(r: u32, x: &T) -> T {
    let mut acc = T::one();
    for i in 1..=i64::from(r) {
        acc = acc * (x.clone() + T::from_int(i)) / T::from_int(i);
    }
    acc
}

/// [`u`] extended to real arguments.
pub fn u_real<T: Scalar>(r: u32, n: &T, k: &T) -> T {
    binom_real(r, k) + binom_real(r, &(n.clone() - k.clone())) - T::from_int(2)
}

/// [`v`] extended to real arguments.
pub fn v_real<T: Scalar>(r: u32, n: &T, s: &T, k: &T) -> T {
    binom_real(r, k) + binom_real(r, &(n.clone() - s.clone() * k.clone())) - T::from_int(2)
}

/// [`w`] extended to real arguments.
pub fn w_real<T: Scalar>(r: u32, n: &T, k: &T) -> T {
    k.clone() * (binom_real(r, &(n.clone() / k.clone())) - T::one())
}

fn check_q<T: Scalar + PartialOrd>(q: &T) -> Result<()> {
    if *q > T::one() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("need q > 1, got {q:?}")))
    }
}

fn one_minus_inv_pow<T: Scalar>(q: &T, e: i64) -> T {
    T::one() - q.powi(-e)
}

/// `rho_{r,n}(q) = q^(b_{r,n-1} + r - 1) (1 - q^-r) / (1 - q^-1)^2`.
pub fn rho<T: Scalar + PartialOrd>(r: u32, n: usize, q: &T) -> Result<T> {
    check_q(q)?;
    let d = one_minus_inv_pow(q, 1);
    Ok(q.powi(b(r, n as i64 - 1) + i64::from(r) - 1) * one_minus_inv_pow(q, i64::from(r))
        / (d.clone() * d))
}

/// `eta_{r,n,s}(q) = q^(b_{r,n-s} + r - 1) (1 - q^-r)(1 - q^-b_{r-1,n-s}) / (1 - q^-1)^2`.
pub fn eta<T: Scalar + PartialOrd>(r: u32, n: usize, s: usize, q: &T) -> Result<T> {
    check_q(q)?;
    if s < 2 || n < s {
        return Err(Error::InvalidParams(format!("need n >= s >= 2, got n={n} s={s}")));
    }
    let m = (n - s) as i64;
    let d = one_minus_inv_pow(q, 1);
    Ok(q.powi(b(r, m) + i64::from(r) - 1)
        * one_minus_inv_pow(q, i64::from(r))
        * one_minus_inv_pow(q, b(r - 1, m))
        / (d.clone() * d))
}

/// `epsilon_{r,n}(q) = q^(l (b_{r,n/l} - 1)) (1 - q^(-l b_{r-1,n/l})) / (l (1 - q^-l))`
/// with `l` the smallest prime factor of `n`.
pub fn epsilon_main<T: Scalar + PartialOrd>(r: u32, n: usize, q: &T) -> Result<T> {
    check_q(q)?;
    if n < 2 {
        return Err(Error::InvalidParams(format!("need n >= 2, got {n}")));
    }
    let l = smallest_prime_factor(n as u64) as i64;
    let m = n as i64 / l;
    Ok(q.powi(l * (b(r, m) - 1)) * one_minus_inv_pow(q, l * b(r - 1, m))
        / (T::from_int(l) * one_minus_inv_pow(q, l)))
}

/// `b_{r,n-s} - b_{r,n-2s} - r(r+1)/2`; equals `v(1) - v(2)`.
pub fn delta_thm(r: u32, n: usize, s: usize) -> i64 {
    let r_ = i64::from(r);
    b(r, n as i64 - s as i64) - b(r, n as i64 - 2 * s as i64) - r_ * (r_ + 1) / 2
}

/// `b_{r,n-s} - b_{r,n-2s} - r(r-1)/2`.
pub fn delta_prop(r: u32, n: usize, s: usize) -> i64 {
    delta_thm(r, n, s) + i64::from(r)
}

/// `b_{r,n-s} - b_{r,n-2s} - r`, the exponent of the `Q` lower bound.
pub fn big_delta(r: u32, n: usize, s: usize) -> i64 {
    b(r, n as i64 - s as i64) - b(r, n as i64 - 2 * s as i64) - i64::from(r)
}

/// `C(r+3, 4) + r - 1 = v_{r,6,2}(1) - v_{r,6,2}(3) - 1`.
pub fn delta_tilde(r: u32) -> i64 {
    b(4, i64::from(r) - 1) + i64::from(r) - 1
}

/// The smallest and second smallest divisors of a composite `n` above 1.
pub fn smallest_divisors(n: usize) -> Result<(usize, usize)> {
    if n < 4 {
        return Err(Error::PrimeDegree(n));
    }
    let l = smallest_prime_factor(n as u64) as usize;
    if l == n {
        return Err(Error::PrimeDegree(n));
    }
    let k0 = (l + 1..=n).find(|d| n.is_multiple_of(*d)).expect("n itself divides n");
    Ok((l, k0))
}

/// `omega_{r,n} = l (b_{r,n/l-1} - 1) - k0 (b_{r,n/k0} - 1) - n/6 + 1` for
/// composite `n` other than 4 and 6.
pub fn omega(r: u32, n: usize) -> Result<BigRational> {
    if n == 4 || n == 6 {
        return Err(Error::InvalidParams(format!("omega excludes n = {n}")));
    }
    let (l, k0) = smallest_divisors(n)?;
    let head = l as i64 * (b(r, (n / l) as i64 - 1) - 1) - k0 as i64 * (b(r, (n / k0) as i64) - 1) + 1;
    Ok(BigRational::from_int(head) - BigRational::ratio(n as i64, 6))
}

/// `alpha_n`: 1/2 for `n = 4`, else 1.
pub fn alpha(n: usize) -> BigRational {
    if n == 4 {
        BigRational::ratio(1, 2)
    } else {
        BigRational::from_int(1)
    }
}

/// `gamma_{r,n}(q)`: 1/2, 3/2 or `q^(r(r-5)/2)` for `n = 4` and `r <= 4`,
/// `r = 5`, `r >= 6`; 1 otherwise.
pub fn gamma<T: Scalar>(r: u32, n: usize, q: &T) -> T {
    match (n, r) {
        (4, 0..=4) => T::ratio(1, 2),
        (4, 5) => T::ratio(3, 2),
        (4, _) => q.powi(i64::from(r) * (i64::from(r) - 5) / 2),
        _ => T::one(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::ratio(n, d)
    }

    #[test]
    fn u_examples() {
        assert_eq!(u(2, 4, 1), 11);
        assert_eq!(u(2, 4, 2), 10);
        for r in 2..6 {
            for n in 2..10 {
                assert_eq!(u(r, n, 1), b(r, n as i64 - 1) + i64::from(r) - 1);
            }
        }
    }

    #[test]
    fn v_examples() {
        for r in 2..6 {
            assert_eq!(v(r, 9, 3, 1), b(r, 6) + i64::from(r) - 1);
        }
        assert_eq!(v(2, 6, 2, 2) - v(2, 6, 2, 3), 1);
        assert!(v(3, 6, 2, 2) < v(3, 6, 2, 3));
    }

    #[test]
    fn w_examples() {
        assert_eq!(w(2, 6, 2).unwrap(), 18);
        for n in [4usize, 6, 10, 12] {
            assert_eq!(w(2, n, n).unwrap(), 2 * n as i64);
            assert_eq!(2 * w(2, n, n / 2).unwrap(), 5 * n as i64);
        }
        assert_eq!(w(2, 6, 4).unwrap_err(), Error::NotDivisor { k: 4, n: 6 });
    }

    #[test]
    fn real_extensions_agree_at_integers() {
        for r in 2..5 {
            for n in 2..9usize {
                for k in 1..=n / 2 {
                    assert_eq!(
                        u_real(r, &BigRational::from_int(n as i64), &BigRational::from_int(k as i64)),
                        BigRational::from_int(u(r, n, k))
                    );
                }
            }
        }
        assert!((u_real(2, &4.0, &1.5) - 10.25f64).abs() < 1e-12);
        assert_eq!(binom_real(2, &rat(1, 2)), rat(15, 8));
    }

    #[test]
    fn rho_examples() {
        let q2 = BigRational::from_int(2);
        assert_eq!(rho(2, 2, &q2).unwrap(), BigRational::from_int(48));
        assert_eq!(rho(2, 1, &q2).unwrap(), BigRational::from_int(12));
        let half = rho(2, 2, &q2).unwrap() / BigRational::from_int(2) * (BigRational::from_int(1) - q2.powi(-3));
        assert_eq!(half, BigRational::from_int(21));
        assert!(rho(2, 2, &BigRational::from_int(1)).is_err());
        assert!(rho(3, 5, &7.0).unwrap() > 0.0);
    }

    #[test]
    fn eta_examples() {
        let q2 = BigRational::from_int(2);
        assert_eq!(eta(2, 4, 3, &q2).unwrap(), BigRational::from_int(36));
        // P_1 P_1 evaluated at q = 2 for r = 3: 14 * 14.
        assert_eq!(eta(3, 3, 2, &q2).unwrap(), BigRational::from_int(196));
        assert!(eta(2, 2, 3, &q2).is_err());
    }

    #[test]
    fn epsilon_examples() {
        let q2 = BigRational::from_int(2);
        assert_eq!(epsilon_main(2, 2, &q2).unwrap(), BigRational::from_int(10));
        assert_eq!(epsilon_main(2, 4, &q2).unwrap(), BigRational::from_int(672));
        assert!(epsilon_main(2, 1, &q2).is_err());
    }

    #[test]
    fn delta_examples() {
        for r in 2..6 {
            for s in 2..5 {
                for n in s..20 {
                    assert_eq!(delta_thm(r, n, s) - delta_prop(r, n, s), -i64::from(r));
                    if n >= 2 * s {
                        assert_eq!(delta_thm(r, n, s), v(r, n, s, 1) - v(r, n, s, 2));
                    }
                }
            }
            assert_eq!(delta_tilde(r), v(r, 6, 2, 1) - v(r, 6, 2, 3) - 1);
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(smallest_divisors(12).unwrap(), (2, 3));
        assert_eq!(smallest_divisors(9).unwrap(), (3, 9));
        assert_eq!(smallest_divisors(15).unwrap(), (3, 5));
        assert_eq!(smallest_divisors(7).unwrap_err(), Error::PrimeDegree(7));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(3, 12).unwrap(), BigRational::from_int(7));
        assert!(omega(2, 12).unwrap() < BigRational::from_int(0));
        for big_n in 2..6i64 {
            let want = 3 * big_n * big_n - 7 * big_n - 1;
            assert_eq!(omega(2, 6 * big_n as usize).unwrap(), BigRational::from_int(want));
        }
        assert!(omega(2, 6).is_err());
    }

    #[test]
    fn alpha_gamma_values() {
        assert_eq!(alpha(4), rat(1, 2));
        assert_eq!(alpha(5), rat(1, 1));
        let q = BigRational::from_int(3);
        assert_eq!(gamma(3, 4, &q), rat(1, 2));
        assert_eq!(gamma(5, 4, &q), rat(3, 2));
        assert_eq!(gamma(7, 4, &q), BigRational::from_int(3).powi(7));
        assert_eq!(gamma(7, 6, &q), rat(1, 1));
    }
}
