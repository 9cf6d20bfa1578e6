//! Truncated power series in `z` whose coefficients are polynomials in `q`.
//!
//! A [`Series`] is exact modulo `z^(trunc+1)`. Binary operations insist on
//! equal truncations instead of silently shortening one operand.

use crate::error::{Error, Result};
use crate::qsym::Poly;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<T> {
    trunc: usize,
    coeffs: Vec<Poly<T>>,
}

impl<T: Scalar> Series<T> {
    pub fn zero(trunc: usize) -> Self {
        Self {
            trunc,
            coeffs: vec![Poly::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = Poly::one();
        s
    }

    /// Pads with zeros or drops terms beyond `trunc` as needed.
    pub fn from_coeffs(trunc: usize, mut coeffs: Vec<Poly<T>>) -> Self {
        coeffs.resize(trunc + 1, Poly::zero());
        Self { trunc, coeffs }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeffs(&self) -> &[Poly<T>] {
        &self.coeffs
    }

    /// `[z^i]`; zero beyond the truncation.
    pub fn coeff(&self, i: usize) -> Poly<T> {
        self.coeffs.get(i).cloned().unwrap_or_else(Poly::zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.trunc == other.trunc {
            Ok(())
        } else {
            Err(Error::TruncationMismatch {
                left: self.trunc,
                right: other.trunc,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.trunc);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.trunc - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// `log(self)` for a series with constant term 1.
    ///
    /// From `a * (log a)' = a'`: `n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}`.
    /// Each step divides by the integer `n` only.
    pub fn log1(&self) -> Result<Self> {
        if self.coeffs[0] != Poly::one() {
            return Err(Error::NonUnitConstant);
        }
        let mut log = Self::zero(self.trunc);
        for n in 1..=self.trunc {
            let mut acc = self.coeffs[n].scale(&T::from_int(n as i64));
            for k in 1..n {
                let (lk, a) = (&log.coeffs[k], &self.coeffs[n - k]);
                if lk.is_zero() || a.is_zero() {
                    continue;
                }
                acc -= &(lk * a).scale(&T::from_int(k as i64));
            }
            log.coeffs[n] = acc.scale(&T::ratio(1, n as i64));
        }
        Ok(log)
    }

    /// The substitution `z -> z^k`; terms pushed past `trunc` are dropped.
    pub fn subst_zpow(&self, k: usize) -> Self {
        assert!(k >= 1, "subst_zpow needs k >= 1");
        let mut out = Self::zero(self.trunc);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > self.trunc {
                break;
            }
            out.coeffs[i * k] = c.clone();
        }
        out
    }
}

/// The Möbius function, by trial division.
pub fn mobius(k: u64) -> i8 {
    assert!(k >= 1, "mobius is defined for k >= 1");
    let mut n = k;
    let mut sign = 1i8;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, ZSeries};
    use num_rational::BigRational;
    use num_traits::One;

    fn s(trunc: usize, cs: &[&str]) -> ZSeries {
        Series::from_coeffs(trunc, cs.iter().map(|c| c.parse().unwrap()).collect())
    }

    /// exp of a series without constant term: E' = F' E.
    fn exp_oracle(f: &ZSeries) -> ZSeries {
        let mut e = ZSeries::one(f.trunc());
        for n in 1..=f.trunc() {
            let mut acc = QPoly::zero();
            for k in 1..=n {
                acc += &(&f.coeff(k) * &e.coeff(n - k)).scale(&BigRational::ratio(k as i64, 1));
            }
            e.coeffs[n] = acc.scale(&BigRational::ratio(1, n as i64));
        }
        e
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(2, &["1", "1"]).mul(&s(2, &["1", "-1"])).unwrap(), s(2, &["1", "0", "-1"]));
        let a = s(3, &["1", "q", "q^2-1", "3"]);
        assert_eq!(a.mul(&ZSeries::one(3)).unwrap(), a);
        let p1 = s(2, &["1", "q^2+q"]);
        assert_eq!(
            p1.mul(&p1).unwrap(),
            s(2, &["1", "2q^2+2q", "q^4+2q^3+q^2"])
        );
    }

    #[test]
    fn mismatched_truncation_is_rejected() {
        let err = ZSeries::one(2).mul(&ZSeries::one(3)).unwrap_err();
        assert_eq!(err, Error::TruncationMismatch { left: 2, right: 3 });
        assert!(ZSeries::one(2).add(&ZSeries::one(4)).is_err());
    }

    #[test]
    fn log_examples() {
        assert_eq!(ZSeries::one(4).log1().unwrap(), ZSeries::zero(4));
        assert_eq!(
            s(3, &["1", "1"]).log1().unwrap(),
            s(3, &["0", "1", "-1/2", "1/3"])
        );
        let z = s(5, &["0", "1"]);
        assert_eq!(exp_oracle(&z).log1().unwrap(), z);
        assert_eq!(s(2, &["2", "1"]).log1().unwrap_err(), Error::NonUnitConstant);
    }

    #[test]
    fn subst_examples() {
        assert_eq!(s(3, &["1", "1"]).subst_zpow(2), s(3, &["1", "0", "1"]));
        let a = s(3, &["1", "q", "q^2", "q^3"]);
        assert_eq!(a.subst_zpow(1), a);
        assert_eq!(s(4, &["1", "1", "1"]).subst_zpow(3), s(4, &["1", "0", "0", "1"]));
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(49), 0);
    }

    #[test]
    fn mobius_sums_vanish() {
        for k in 1..=1000u64 {
            let total: i64 = (1..=k).filter(|d| k % d == 0).map(|d| mobius(d) as i64).sum();
            assert_eq!(total, i64::from(k == 1), "k = {k}");
        }
    }

    #[test]
    fn log_round_trips_through_exp() {
        let a = s(5, &["1", "q^2+q", "q^5+q^4+q^3", "2q-1", "1/3", "q^7"]);
        let back = exp_oracle(&a.log1().unwrap());
        assert_eq!(back, a);
        assert!(back.coeff(0).leading().unwrap().is_one());
    }
}
