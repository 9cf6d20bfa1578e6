//! Symbolic counts of monic polynomials in `r` variables of total degree `n`.
//!
//! The generating-function route lives here: the series of all monic
//! polynomials `P`, the irreducibles `I` via Möbius inversion of `log P`, the
//! reducibles `R = P - I`, the `s`-powerfree series `S` from `P = S * P(z^s)`,
//! and the split of `I` into absolutely (`A`) and relatively (`E`) irreducible
//! polynomials. [`patterns`] holds the independent factorization-pattern route.

pub mod patterns;

use num_integer::binomial;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qsym::Poly;
use crate::scalar::Scalar;
use crate::zseries::{mobius, Series};
use crate::QPoly;

/// `b_{r,n} = C(r+n, r)`, the number of monomials of degree at most `n`;
/// zero for negative `n`.
pub fn binom_b(r: u32, n: i64) -> u64 {
    if n < 0 {
        0
    } else {
        binomial(u64::from(r) + n as u64, u64::from(r))
    }
}

/// Number of monic polynomials of total degree exactly `n`:
/// `sum_{i < b_{r-1,n}} q^(b_{r,n} - 1 - i)`, and 1 for `n = 0`.
pub fn count_all<T: Scalar>(r: u32, n: usize) -> Poly<T> {
    if n == 0 {
        return Poly::one();
    }
    let top = binom_b(r, n as i64) as usize - 1;
    let width = binom_b(r - 1, n as i64) as usize;
    let mut coeffs = vec![T::zero(); top + 1];
    for c in &mut coeffs[top + 1 - width..] {
        *c = T::one();
    }
    Poly::from_coeffs(coeffs)
}

/// Number of variables, maximum degree and the optional power for `Q`-counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Params {
    pub r: u32,
    pub nmax: usize,
    pub s: Option<usize>,
}

impl Params {
    pub fn new(r: u32, nmax: usize, s: Option<usize>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParams(format!("need r >= 2, got {r}")));
        }
        if nmax < 1 {
            return Err(Error::InvalidParams("need nmax >= 1".into()));
        }
        if let Some(s) = s {
            if s < 2 {
                return Err(Error::InvalidParams(format!("need s >= 2, got {s}")));
            }
        }
        Ok(Self { r, nmax, s })
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if (1..=self.nmax).contains(&n) {
            Ok(())
        } else {
            Err(Error::DegreeOutOfRange { n, nmax: self.nmax })
        }
    }
}

/// `sum_n count_all(r, n) z^n` up to `z^nmax`.
pub fn series_all<T: Scalar>(params: &Params) -> Series<T> {
    Series::from_coeffs(
        params.nmax,
        (0..=params.nmax).map(|n| count_all(params.r, n)).collect(),
    )
}

/// `I = sum_{k=1}^{nmax} mu(k)/k * log P(z^k)`.
pub fn series_irreducible<T: Scalar>(params: &Params) -> Series<T> {
    let all = series_all::<T>(params);
    let mut irr = Series::zero(params.nmax);
    for k in 1..=params.nmax {
        let mu = mobius(k as u64);
        if mu == 0 {
            continue;
        }
        let log = all
            .subst_zpow(k)
            .log1()
            .expect("P has constant term 1");
        irr = irr
            .add(&log.scale(&T::ratio(i64::from(mu), k as i64)))
            .expect("equal truncations");
    }
    irr
}

/// `S` from `P_n = sum_{0 <= i <= n/s} S_{n-is} P_i`, solved degree by degree.
pub fn series_powerfree<T: Scalar>(params: &Params) -> Result<Series<T>> {
    let s = params.s.ok_or(Error::MissingPower)?;
    let all = series_all::<T>(params);
    let mut free: Vec<Poly<T>> = Vec::with_capacity(params.nmax + 1);
    for n in 0..=params.nmax {
        let mut sn = all.coeff(n);
        for i in 1..=n / s {
            sn -= &(&free[n - i * s] * &all.coeff(i));
        }
        free.push(sn);
    }
    Ok(Series::from_coeffs(params.nmax, free))
}

/// All series for one parameter set, computed once.
#[derive(Clone, Debug)]
pub struct CountEngine<T: Scalar = BigRational> {
    params: Params,
    all: Series<T>,
    irreducible: Series<T>,
    powerfree: Option<Series<T>>,
}

impl<T: Scalar> CountEngine<T> {
    pub fn new(params: Params) -> Self {
        let powerfree = params.s.map(|_| series_powerfree(&params).expect("s is present"));
        Self {
            all: series_all(&params),
            irreducible: series_irreducible(&params),
            powerfree,
            params,
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn series_all(&self) -> &Series<T> {
        &self.all
    }

    pub fn series_irreducible(&self) -> &Series<T> {
        &self.irreducible
    }

    pub fn series_reducible(&self) -> Series<T> {
        self.all.sub(&self.irreducible).expect("equal truncations")
    }

    pub fn series_powerfree(&self) -> Result<&Series<T>> {
        self.powerfree.as_ref().ok_or(Error::MissingPower)
    }

    fn check_upto(&self, n: usize) -> Result<()> {
        if n <= self.params.nmax {
            Ok(())
        } else {
            Err(Error::DegreeOutOfRange {
                n,
                nmax: self.params.nmax,
            })
        }
    }

    pub fn count_all(&self, n: usize) -> Result<Poly<T>> {
        self.check_upto(n)?;
        Ok(self.all.coeff(n))
    }

    /// `I_n`; `I_0 = 0`.
    pub fn count_irreducible(&self, n: usize) -> Result<Poly<T>> {
        self.check_upto(n)?;
        Ok(self.irreducible.coeff(n))
    }

    /// `R_n = P_n - I_n` for `1 <= n <= nmax`.
    pub fn count_reducible(&self, n: usize) -> Result<Poly<T>> {
        self.params.check_degree(n)?;
        Ok(&self.all.coeff(n) - &self.irreducible.coeff(n))
    }

    pub fn count_powerfree(&self, n: usize) -> Result<Poly<T>> {
        self.check_upto(n)?;
        Ok(self.series_powerfree()?.coeff(n))
    }

    /// `Q_{n,s} = P_n - S_n`.
    pub fn count_powerful(&self, n: usize) -> Result<Poly<T>> {
        let free = self.count_powerfree(n)?;
        Ok(&self.all.coeff(n) - &free)
    }

    /// `A_n = sum_{k | n} 1/k sum_{s | k} mu(s) I_{n/k}(q^s)`.
    pub fn count_abs_irreducible(&self, n: usize) -> Result<Poly<T>> {
        self.params.check_degree(n)?;
        let mut total = Poly::zero();
        for k in divisors(n) {
            let inner = self.irreducible.coeff(n / k);
            for s in divisors(k) {
                let mu = mobius(s as u64);
                if mu != 0 {
                    let term = inner.subst_pow(s).scale(&T::ratio(i64::from(mu), k as i64));
                    total += &term;
                }
            }
        }
        Ok(total)
    }

    /// `E_n = I_n - A_n`.
    pub fn count_rel_irreducible(&self, n: usize) -> Result<Poly<T>> {
        let abs = self.count_abs_irreducible(n)?;
        Ok(&self.irreducible.coeff(n) - &abs)
    }
}

/// Positive divisors of `n` in ascending order.
pub(crate) fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The symbolic counts for fixed `r` and every `n` in `0..=nmax`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountReport {
    pub r: u32,
    pub s: Option<usize>,
    pub counts: Vec<CountRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountRow {
    pub n: usize,
    #[serde(rename = "P")]
    pub all: QPoly,
    #[serde(rename = "I")]
    pub irreducible: QPoly,
    #[serde(rename = "R")]
    pub reducible: QPoly,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub powerfree: Option<QPoly>,
    #[serde(rename = "Q", skip_serializing_if = "Option::is_none")]
    pub powerful: Option<QPoly>,
    #[serde(rename = "A", skip_serializing_if = "Option::is_none")]
    pub abs_irreducible: Option<QPoly>,
    #[serde(rename = "E", skip_serializing_if = "Option::is_none")]
    pub rel_irreducible: Option<QPoly>,
}

impl CountEngine<BigRational> {
    /// Row for `n = 0` holds `P_0 = 1`, `I_0 = 0` and `R_0 = P_0 - I_0 = 1`.
    pub fn report(&self, with_rel_irreducible: bool) -> CountReport {
        let counts = (0..=self.params.nmax)
            .map(|n| {
                let all = self.all.coeff(n);
                let irreducible = self.irreducible.coeff(n);
                let reducible = &all - &irreducible;
                let powerfree = self.powerfree.as_ref().map(|s| s.coeff(n));
                let powerful = powerfree.as_ref().map(|s| &all - s);
                let (abs_irreducible, rel_irreducible) = if !with_rel_irreducible {
                    (None, None)
                } else if n == 0 {
                    (Some(QPoly::zero()), Some(QPoly::zero()))
                } else {
                    let a = self.count_abs_irreducible(n).expect("n in range");
                    let e = &irreducible - &a;
                    (Some(a), Some(e))
                };
                CountRow {
                    n,
                    all,
                    irreducible,
                    reducible,
                    powerfree,
                    powerful,
                    abs_irreducible,
                    rel_irreducible,
                }
            })
            .collect();
        CountReport {
            r: self.params.r,
            s: self.params.s,
            counts,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    fn engine(r: u32, nmax: usize, s: Option<usize>) -> CountEngine {
        CountEngine::new(Params::new(r, nmax, s).unwrap())
    }

    #[test]
    fn binom_b_examples() {
        assert_eq!(binom_b(2, 1), 3);
        assert_eq!(binom_b(3, 6), 84);
        assert_eq!(binom_b(2, -1), 0);
        assert_eq!(binom_b(0, 5), 1);
    }

    #[test]
    fn count_all_examples() {
        assert_eq!(count_all::<BigRational>(2, 1), qp("q^2+q"));
        assert_eq!(count_all::<BigRational>(2, 0), QPoly::one());
        assert_eq!(count_all::<BigRational>(3, 1), qp("q^3+q^2+q"));
        assert_eq!(count_all::<BigRational>(2, 2), qp("q^5+q^4+q^3"));
        assert_eq!(count_all::<BigRational>(2, 2).eval_integer(2).unwrap(), 56.into());
    }

    #[test]
    fn params_are_validated() {
        assert!(Params::new(1, 3, None).is_err());
        assert!(Params::new(2, 0, None).is_err());
        assert!(Params::new(2, 3, Some(1)).is_err());
        assert!(Params::new(2, 3, Some(2)).is_ok());
    }

    #[test]
    fn irreducible_low_degrees() {
        let e = engine(2, 3, None);
        assert!(e.count_irreducible(0).unwrap().is_zero());
        assert_eq!(e.count_irreducible(1).unwrap(), qp("q^2+q"));
        let i2 = &count_all::<BigRational>(2, 2) - &qp("(q^4+2q^3+2q^2+q)/2");
        assert_eq!(e.count_irreducible(2).unwrap(), i2);
        assert_eq!(i2.eval_integer(2).unwrap(), 35.into());
    }

    #[test]
    fn reducible_examples_and_range() {
        let e = engine(3, 3, None);
        assert_eq!(
            e.count_reducible(2).unwrap(),
            qp("(q^6+2q^5+3q^4+3q^3+2q^2+q)/2")
        );
        assert_eq!(
            e.count_reducible(3).unwrap(),
            qp("(3q^12+6q^11+9q^10+8q^9+6q^8+3q^7-q^6-3q^5-3q^4+q^2+q)/3")
        );
        assert!(engine(2, 2, None).count_reducible(1).unwrap().is_zero());
        assert_eq!(
            e.count_reducible(0).unwrap_err(),
            Error::DegreeOutOfRange { n: 0, nmax: 3 }
        );
        assert!(e.count_reducible(4).is_err());
    }

    #[test]
    fn powerfree_examples() {
        let e = engine(2, 5, Some(3));
        for n in 0..3 {
            assert_eq!(e.count_powerfree(n).unwrap(), e.count_all(n).unwrap());
            assert!(e.count_powerful(n).unwrap().is_zero());
        }
        assert_eq!(e.count_powerfree(0).unwrap(), QPoly::one());
        let p1 = e.count_all(1).unwrap();
        let s4 = &e.count_all(4).unwrap() - &(&p1 * &e.count_powerfree(1).unwrap());
        assert_eq!(e.count_powerfree(4).unwrap(), s4);
        assert_eq!(e.count_powerful(4).unwrap(), qp("q^4+2q^3+q^2"));
        assert_eq!(engine(2, 3, None).count_powerful(2).unwrap_err(), Error::MissingPower);
    }

    #[test]
    fn powerful_table_entries() {
        assert_eq!(
            engine(3, 3, Some(2)).count_powerful(3).unwrap(),
            qp("q^6+2q^5+3q^4+2q^3+q^2")
        );
        assert_eq!(
            engine(3, 5, Some(3)).count_powerful(5).unwrap(),
            qp("q^12+2q^11+3q^10+3q^9+3q^8+3q^7+2q^6+q^5")
        );
    }

    #[test]
    fn abs_and_rel_irreducible_examples() {
        let e2 = engine(2, 3, None);
        assert_eq!(e2.count_abs_irreducible(1).unwrap(), count_all(2, 1));
        assert!(e2.count_rel_irreducible(1).unwrap().is_zero());
        assert_eq!(e2.count_rel_irreducible(2).unwrap(), qp("(q^4-q)/2"));
        assert_eq!(
            e2.count_abs_irreducible(2).unwrap(),
            &e2.count_irreducible(2).unwrap() - &qp("(q^4-q)/2")
        );
        assert_eq!(e2.count_rel_irreducible(3).unwrap(), qp("(q^6+q^3-q^2-q)/3"));
        let e3 = engine(3, 5, None);
        assert_eq!(e3.count_rel_irreducible(2).unwrap(), qp("(q^6+q^4-q^3-q)/2"));
        assert_eq!(
            e3.count_rel_irreducible(5).unwrap(),
            qp("(q^15+q^10+q^5-q^3-q^2-q)/5")
        );
        assert!(e3.count_abs_irreducible(0).is_err());
    }

    #[test]
    fn log_of_substituted_series_equals_substituted_log() {
        let params = Params::new(2, 6, None).unwrap();
        let all = series_all::<BigRational>(&params);
        let log = all.log1().unwrap();
        for k in 2..=6 {
            assert_eq!(all.subst_zpow(k).log1().unwrap(), log.subst_zpow(k));
        }
    }

    #[test]
    fn report_rows_are_consistent() {
        let report = engine(2, 4, Some(2)).report(true);
        assert_eq!(report.counts.len(), 5);
        assert_eq!(report.counts[0].reducible, QPoly::one());
        for row in &report.counts[1..] {
            assert_eq!(&row.irreducible + &row.reducible, row.all);
            let (a, e) = (row.abs_irreducible.as_ref().unwrap(), row.rel_irreducible.as_ref().unwrap());
            assert_eq!(a + e, row.irreducible);
            assert_eq!(row.powerful.as_ref().unwrap() + row.powerfree.as_ref().unwrap(), row.all);
        }
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["r"], 2);
        assert_eq!(json["counts"][1]["P"], serde_json::json!({"num": [0, 1, 1], "den": 1}));
        assert!(json["counts"][1].get("Q").is_some());
    }

    #[test]
    fn f64_engine_tracks_the_exact_one() {
        let params = Params::new(2, 4, None).unwrap();
        let exact = CountEngine::<BigRational>::new(params);
        let approx = CountEngine::<f64>::new(params);
        let q = 3.0;
        let r4 = exact.count_reducible(4).unwrap().eval_integer(3).unwrap();
        let r4f = approx.count_reducible(4).unwrap().eval(&q);
        assert!((r4f - r4.to_string().parse::<f64>().unwrap()).abs() < 1e-6 * r4f);
    }
}
