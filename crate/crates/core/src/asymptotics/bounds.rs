//! Executable error bounds, checked exactly at concrete prime powers `q`.
//!
//! Each check compares an exact count against a predicted value `approx` and
//! an allowed deviation `bound`. The deviation is `|exact - approx|` for
//! two-sided checks, `exact - approx` for upper bounds and `approx - exact`
//! for lower bounds; a check passes when `margin = bound - deviation >= 0`.
#![allow(non_snake_case)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{
    big_delta, delta_prop, delta_thm, delta_tilde, epsilon_main, eta, rho, smallest_divisors,
};
use crate::counts::{binom_b, CountEngine, Params};
use crate::error::{Error, Result};
use crate::oracle::field::{prime_power, smallest_prime_factor};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    R,
    Q,
    E,
    I,
    A,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "R" => Ok(Self::R),
            "Q" => Ok(Self::Q),
            "E" => Ok(Self::E),
            "I" => Ok(Self::I),
            "A" => Ok(Self::A),
            other => Err(Error::Parse(format!("unknown bound family {other:?}"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Which published estimate a check encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Statement {
    /// Two-sided `R` bound; equality for `n = 2`.
    RMain,
    /// `R <= rho (1 + C''_n q^(-b_{r-1,n-1} + r(r+1)/2))`.
    RUpper,
    /// `R >= rho (1 - C'_n q^(-b_{r-1,n-1} + r))`.
    RLower,
    /// `I >= P - 2 rho`; equality for `n = 2`.
    ILower,
    /// `I >= P (1 - B'_n q^(-b_{r-1,n} + r))`.
    IProp,
    /// Two-sided `Q` bound.
    QMain,
    /// `Q <= eta (1 + D''_{n,s} q^-delta)`.
    QUpper,
    /// `Q >= eta (1 - D'_{n,s} q^-Delta)`.
    QLower,
    /// Equality for prime `n`, two-sided otherwise.
    EMain,
    /// Case-by-case upper bounds for composite `n`.
    EUpper,
    /// Lower bounds for composite `n`.
    ELower,
    /// `A >= P - 2 (rho + epsilon)`.
    ALower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Equality,
    TwoSided,
    Upper,
    Lower,
}

/// The exponent variant for the two-sided `Q` bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaVariant {
    /// `b_{r,n-s} - b_{r,n-2s} - r(r-1)/2`.
    #[default]
    Prop,
    /// `b_{r,n-s} - b_{r,n-2s} - r(r+1)/2`.
    Thm,
}

impl DeltaVariant {
    pub fn delta(self, r: u32, n: usize, s: usize) -> i64 {
        match self {
            Self::Prop => delta_prop(r, n, s),
            Self::Thm => delta_thm(r, n, s),
        }
    }
}

impl std::str::FromStr for DeltaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prop" => Ok(Self::Prop),
            "thm" => Ok(Self::Thm),
            other => Err(Error::Parse(format!("unknown delta variant {other:?}"))),
        }
    }
}

fn ser_rational<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(x))
}

/// `num/den`, always with an explicit denominator.
pub fn fmt_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    pub family: Family,
    pub statement: Statement,
    pub kind: CheckKind,
    pub r: u32,
    pub n: usize,
    pub s: Option<usize>,
    pub q: u64,
    #[serde(serialize_with = "ser_rational")]
    pub approx: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub exact: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub bound: BigRational,
    pub pass: bool,
    #[serde(serialize_with = "ser_rational")]
    pub margin: BigRational,
}

impl BoundCheck {
    /// The deviation that the bound has to cover, signed per [`CheckKind`].
    pub fn deviation(&self) -> BigRational {
        deviation(self.kind, &self.exact, &self.approx)
    }

    /// Recomputes `pass` and `margin` against a different allowed deviation.
    pub fn with_bound(mut self, bound: BigRational) -> Self {
        self.margin = &bound - self.deviation();
        self.pass = !self.margin.is_negative();
        self.bound = bound;
        self
    }
}

fn deviation(kind: CheckKind, exact: &BigRational, approx: &BigRational) -> BigRational {
    match kind {
        CheckKind::Equality | CheckKind::TwoSided => (exact - approx).abs(),
        CheckKind::Upper => exact - approx,
        CheckKind::Lower => approx - exact,
    }
}

struct Point {
    family: Family,
    statement: Statement,
    r: u32,
    n: usize,
    s: Option<usize>,
    q: u64,
}

impl Point {
    fn finish(self, kind: CheckKind, approx: BigRational, exact: &BigRational, bound: BigRational) -> BoundCheck {
        let margin = &bound - deviation(kind, exact, &approx);
        BoundCheck {
            family: self.family,
            statement: self.statement,
            kind,
            r: self.r,
            n: self.n,
            s: self.s,
            q: self.q,
            approx,
            exact: exact.clone(),
            bound,
            pass: !margin.is_negative(),
            margin,
        }
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_int(v)
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::ratio(n, d)
}

fn b(r: u32, n: i64) -> i64 {
    binom_b(r, n) as i64
}

fn qpow(q: &BigRational, e: i64) -> BigRational {
    q.powi(e)
}

fn validate(r: u32, n: usize, q: u64, min_n: usize) -> Result<BigRational> {
    if r < 2 {
        return Err(Error::InvalidParams(format!("need r >= 2, got {r}")));
    }
    if n < min_n {
        return Err(Error::InvalidParams(format!("need n >= {min_n}, got {n}")));
    }
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    Ok(rat(q as i64))
}

fn validate_s(n: usize, s: usize) -> Result<()> {
    if s < 2 || n < s {
        return Err(Error::InvalidParams(format!("need n >= s >= 2, got n={n} s={s}")));
    }
    Ok(())
}

/// `|R - rho| <= 3 rho q^(-C(n+r-2, r-1) + r(r+1)/2)` for `n >= 4`,
/// `<= 2 rho q^(-r(r-1)/2)` for `n = 3`, and `R = rho/2 (1 - q^-(r+1))` for `n = 2`.
pub fn check_R_bound(r: u32, n: usize, q: u64, exact: &BigRational) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 2)?;
    let p = Point { family: Family::R, statement: Statement::RMain, r, n, s: None, q };
    let main = rho(r, n, &qq)?;
    let r_ = i64::from(r);
    Ok(match n {
        2 => {
            let approx = main / rat(2) * (rat(1) - qpow(&qq, -(r_ + 1)));
            p.finish(CheckKind::Equality, approx, exact, BigRational::zero())
        }
        3 => {
            let bound = &main * rat(2) * qpow(&qq, -(r_ * (r_ - 1) / 2));
            p.finish(CheckKind::TwoSided, main, exact, bound)
        }
        _ => {
            let bound = &main * rat(3) * qpow(&qq, -b(r - 1, n as i64 - 1) + r_ * (r_ + 1) / 2);
            p.finish(CheckKind::TwoSided, main, exact, bound)
        }
    })
}

/// `R <= rho (1 + C''_n q^(-b_{r-1,n-1} + r(r+1)/2))` with `C'' = 0` for
/// `n <= 3` and `8/3` otherwise.
pub fn check_R_upper(r: u32, n: usize, q: u64, exact: &BigRational) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 1)?;
    let main = rho(r, n, &qq)?;
    let c = if n <= 3 { rat(0) } else { frac(8, 3) };
    let r_ = i64::from(r);
    let bound = &main * c * qpow(&qq, -b(r - 1, n as i64 - 1) + r_ * (r_ + 1) / 2);
    let p = Point { family: Family::R, statement: Statement::RUpper, r, n, s: None, q };
    Ok(p.finish(CheckKind::Upper, main, exact, bound))
}

/// `R >= rho (1 - C'_n q^(-b_{r-1,n-1} + r))` with `C' = 1/4, 9/4, 59/12`
/// for `n = 2`, `n in {3,4}`, and `n >= 5`.
pub fn check_R_lower(r: u32, n: usize, q: u64, exact: &BigRational) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 2)?;
    let main = rho(r, n, &qq)?;
    let c = match n {
        2 => frac(1, 4),
        3 | 4 => frac(9, 4),
        _ => frac(59, 12),
    };
    let bound = &main * c * qpow(&qq, -b(r - 1, n as i64 - 1) + i64::from(r));
    let p = Point { family: Family::R, statement: Statement::RLower, r, n, s: None, q };
    Ok(p.finish(CheckKind::Lower, main, exact, bound))
}

fn all_count(r: u32, n: usize, q: &BigRational) -> BigRational {
    crate::counts::count_all::<BigRational>(r, n).eval(q)
}

/// `I >= P - 2 rho`; the equality `I = P - rho/2 (1 - q^-(r+1))` for `n = 2`.
pub fn check_I_lower(r: u32, n: usize, q: u64, exact: &BigRational) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 1)?;
    let all = all_count(r, n, &qq);
    let main = rho(r, n, &qq)?;
    let p = Point { family: Family::I, statement: Statement::ILower, r, n, s: None, q };
    Ok(if n == 2 {
        let approx = all - main / rat(2) * (rat(1) - qpow(&qq, -(i64::from(r) + 1)));
        p.finish(CheckKind::Equality, approx, exact, BigRational::zero())
    } else {
        p.finish(CheckKind::Lower, all, exact, main * rat(2))
    })
}

/// `I >= P (1 - B'_n q^(-b_{r-1,n} + r))` with `B' = 0, 2, 14/3` for
/// `n = 1`, `n in {2,3}`, and `n >= 4`.
pub fn check_I_prop(r: u32, n: usize, q: u64, exact: &BigRational) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 1)?;
    let all = all_count(r, n, &qq);
    let c = match n {
        1 => rat(0),
        2 | 3 => rat(2),
        _ => frac(14, 3),
    };
    let bound = &all * c * qpow(&qq, -b(r - 1, n as i64) + i64::from(r));
    let p = Point { family: Family::I, statement: Statement::IProp, r, n, s: None, q };
    Ok(p.finish(CheckKind::Lower, all, exact, bound))
}

/// `|Q - eta| <= 6 eta q^-delta`, and `3 eta q^(-C(r+3,4) - r + 1)` for `(n,s) = (6,2)`.
pub fn check_Q_bound(
    r: u32,
    n: usize,
    s: usize,
    q: u64,
    exact: &BigRational,
    variant: DeltaVariant,
) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 2)?;
    validate_s(n, s)?;
    let main = eta(r, n, s, &qq)?;
    let bound = if (n, s) == (6, 2) {
        &main * rat(3) * qpow(&qq, -b(4, i64::from(r) - 1) - i64::from(r) + 1)
    } else {
        &main * rat(6) * qpow(&qq, -variant.delta(r, n, s))
    };
    let p = Point { family: Family::Q, statement: Statement::QMain, r, n, s: Some(s), q };
    Ok(p.finish(CheckKind::TwoSided, main, exact, bound))
}

/// `Q <= eta (1 + D'' q^-delta)` with `D'' = 0, 7/6, 16/3` for `n < 2s`,
/// `2s <= n < 3s` and `n >= 3s`; for `(6,2)`, `D'' = 8/3` with the
/// exponent `delta_tilde`.
pub fn check_Q_upper(
    r: u32,
    n: usize,
    s: usize,
    q: u64,
    exact: &BigRational,
    variant: DeltaVariant,
) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 2)?;
    validate_s(n, s)?;
    let main = eta(r, n, s, &qq)?;
    let bound = if (n, s) == (6, 2) {
        &main * frac(8, 3) * qpow(&qq, -delta_tilde(r))
    } else if n < 2 * s {
        BigRational::zero()
    } else {
        let c = if n < 3 * s { frac(7, 6) } else { frac(16, 3) };
        &main * c * qpow(&qq, -variant.delta(r, n, s))
    };
    let p = Point { family: Family::Q, statement: Statement::QUpper, r, n, s: Some(s), q };
    Ok(p.finish(CheckKind::Upper, main, exact, bound))
}

/// `Q >= eta (1 - D' q^-Delta)` with `D' = 0, 3/2, 31/16, 7/2` on the
/// ranges `n < 2s`, `< 3s`, `< 4s`, `>= 4s`.
pub fn check_Q_lower(r: u32, n: usize, s: usize, q: u64, exact: &BigRational) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 2)?;
    validate_s(n, s)?;
    let main = eta(r, n, s, &qq)?;
    let c = match n / s {
        0 | 1 => rat(0),
        2 => frac(3, 2),
        3 => frac(31, 16),
        _ => frac(7, 2),
    };
    let bound = &main * c * qpow(&qq, -big_delta(r, n, s));
    let p = Point { family: Family::Q, statement: Statement::QLower, r, n, s: Some(s), q };
    Ok(p.finish(CheckKind::Lower, main, exact, bound))
}

fn is_prime(n: usize) -> bool {
    n >= 2 && smallest_prime_factor(n as u64) == n as u64
}

/// Prime `n`: `E = eps (1 - q^(-r(n-1)) (1-q^-r)(1-q^-n) / ((1-q^-1)(1-q^-nr)))`.
/// `n = 4`: `|E - eps| <= eps q^(-(r^2+3r-6)/2)`. Other composite `n`:
/// `|E - eps| <= c eps q^(-l (b_{r-1,n/l} - r))` with `c = 2` for `n = 6`, else 1.
pub fn check_E_bound(r: u32, n: usize, q: u64, exact: &BigRational) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 2)?;
    let main = epsilon_main(r, n, &qq)?;
    let p = Point { family: Family::E, statement: Statement::EMain, r, n, s: None, q };
    let r_ = i64::from(r);
    let n_ = n as i64;
    if is_prime(n) {
        let one = rat(1);
        let corr = qpow(&qq, -r_ * (n_ - 1)) * (&one - qpow(&qq, -r_)) * (&one - qpow(&qq, -n_))
            / ((&one - qpow(&qq, -1)) * (&one - qpow(&qq, -n_ * r_)));
        let approx = &main * (one - corr);
        return Ok(p.finish(CheckKind::Equality, approx, exact, BigRational::zero()));
    }
    let bound = if n == 4 {
        &main * qpow(&qq, -(r_ * r_ + 3 * r_ - 6) / 2)
    } else {
        let l = smallest_prime_factor(n as u64) as i64;
        let c = if n == 6 { rat(2) } else { rat(1) };
        &main * c * qpow(&qq, -l * (b(r - 1, n_ / l) - r_))
    };
    Ok(p.finish(CheckKind::TwoSided, main, exact, bound))
}

/// The relative exponent and constant of the composite-`n` upper bound.
///
/// For `n = 6` the exponent is `-2(b_{r,3} - 1) + 3(b_{r,2} - 1)
/// = -r(2r^2 + 3r - 5)/6`.
pub fn e_upper_terms(r: u32, n: usize) -> Result<(BigRational, i64)> {
    let (l, k0) = smallest_divisors(n)?;
    let (l_, k0_, n_, r_) = (l as i64, k0 as i64, n as i64, i64::from(r));
    Ok(if n == l * l {
        (rat(1), -l_ * (b(r, l_) - 1) + n_ * r_)
    } else if n == 6 {
        (rat(2), -2 * (b(r, 3) - 1) + 3 * (b(r, 2) - 1))
    } else if n == 12 && r == 2 {
        (frac(67, 64), -12)
    } else if (n == 12 && r >= 3)
        || (n.is_multiple_of(6) && n >= 18)
        || (k0 >= l + 2 && 7 * (2 * l_ + 3) * (2 * l_ + 3) <= 24 * n_)
    {
        (rat(2), -l_ * b(r - 1, n_ / l_))
    } else {
        (rat(2), -l_ * (b(r, k0_) - 1) + k0_ * (b(r, l_) - 1))
    })
}

/// `E <= eps (1 + c q^e)` with `(c, e)` from [`e_upper_terms`].
pub fn check_E_upper(r: u32, n: usize, q: u64, exact: &BigRational) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 4)?;
    let (c, e) = e_upper_terms(r, n)?;
    let main = epsilon_main(r, n, &qq)?;
    let bound = &main * c * qpow(&qq, e);
    let p = Point { family: Family::E, statement: Statement::EUpper, r, n, s: None, q };
    Ok(p.finish(CheckKind::Upper, main, exact, bound))
}

/// `E >= eps (1 - q^(-(r^2+3r-6)/2))` for `n = 4`, and
/// `E >= eps (1 - q^(-(l-1)(b_{r-1,n/l} - r)))` for other composite `n`.
pub fn check_E_lower(r: u32, n: usize, q: u64, exact: &BigRational) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 4)?;
    let (l, _) = smallest_divisors(n)?;
    let main = epsilon_main(r, n, &qq)?;
    let r_ = i64::from(r);
    let e = if n == 4 {
        -(r_ * r_ + 3 * r_ - 6) / 2
    } else {
        let l = l as i64;
        -(l - 1) * (b(r - 1, n as i64 / l) - r_)
    };
    let bound = &main * qpow(&qq, e);
    let p = Point { family: Family::E, statement: Statement::ELower, r, n, s: None, q };
    Ok(p.finish(CheckKind::Lower, main, exact, bound))
}

/// `A >= P - 2 (rho + eps)`.
pub fn check_A_lower(r: u32, n: usize, q: u64, exact: &BigRational) -> Result<BoundCheck> {
    let qq = validate(r, n, q, 2)?;
    let all = all_count(r, n, &qq);
    let bound = (rho(r, n, &qq)? + epsilon_main(r, n, &qq)?) * rat(2);
    let p = Point { family: Family::A, statement: Statement::ALower, r, n, s: None, q };
    Ok(p.finish(CheckKind::Lower, all, exact, bound))
}

/// The grid for [`sweep`].
#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub families: Vec<Family>,
    pub r_values: Vec<u32>,
    pub n_values: Vec<usize>,
    pub s_values: Vec<usize>,
    pub q_values: Vec<u64>,
    pub delta: DeltaVariant,
}

impl SweepSpec {
    /// `r in {2,3}`, `n in 2..=6`, `s in {2,3}`, `q in {2,3,4,5,7,8,9}`.
    pub fn default_grid(families: Vec<Family>) -> Self {
        Self {
            families,
            r_values: vec![2, 3],
            n_values: (2..=6).collect(),
            s_values: vec![2, 3],
            q_values: vec![2, 3, 4, 5, 7, 8, 9],
            delta: DeltaVariant::default(),
        }
    }
}

/// Evaluates the main check of every family on the grid, with exact counts
/// from the symbolic engine. Output order: family, `r`, `n`, `s`, `q`.
/// Points outside a family's domain (`n < s` for `Q`) are skipped.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<BoundCheck>> {
    if let Some(&q) = spec.q_values.iter().find(|&&q| prime_power(q).is_none()) {
        return Err(Error::NotPrimePower(q));
    }
    if let Some(&r) = spec.r_values.iter().find(|&&r| r < 2) {
        return Err(Error::InvalidParams(format!("need r >= 2, got {r}")));
    }
    if spec.n_values.iter().any(|&n| n < 2) {
        return Err(Error::InvalidParams("need n >= 2 in bound sweeps".into()));
    }
    let Some(&nmax) = spec.n_values.iter().max() else {
        return Ok(Vec::new());
    };
    if spec.families.contains(&Family::Q) && spec.s_values.iter().any(|&s| s < 2) {
        return Err(Error::InvalidParams("need s >= 2".into()));
    }
    let mut engine_keys: Vec<(u32, Option<usize>)> = Vec::new();
    for &r in &spec.r_values {
        engine_keys.push((r, None));
        if spec.families.contains(&Family::Q) {
            engine_keys.extend(spec.s_values.iter().map(|&s| (r, Some(s))));
        }
    }
    let engines: BTreeMap<(u32, Option<usize>), CountEngine> = engine_keys
        .par_iter()
        .map(|&(r, s)| ((r, s), CountEngine::new(Params { r, nmax, s })))
        .collect();

    let mut points: Vec<(Family, u32, usize, Option<usize>, u64)> = Vec::new();
    for &family in &spec.families {
        for &r in &spec.r_values {
            for &n in &spec.n_values {
                let s_list: Vec<Option<usize>> = if family == Family::Q {
                    spec.s_values.iter().filter(|&&s| s <= n).map(|&s| Some(s)).collect()
                } else {
                    vec![None]
                };
                for s in s_list {
                    for &q in &spec.q_values {
                        points.push((family, r, n, s, q));
                    }
                }
            }
        }
    }
    points
        .par_iter()
        .map(|&(family, r, n, s, q)| {
            let engine = &engines[&(r, s)];
            let qq = rat(q as i64);
            match family {
                Family::R => check_R_bound(r, n, q, &engine.count_reducible(n)?.eval(&qq)),
                Family::I => check_I_lower(r, n, q, &engine.count_irreducible(n)?.eval(&qq)),
                Family::E => check_E_bound(r, n, q, &engine.count_rel_irreducible(n)?.eval(&qq)),
                Family::A => check_A_lower(r, n, q, &engine.count_abs_irreducible(n)?.eval(&qq)),
                Family::Q => {
                    let s = s.expect("Q points carry s");
                    check_Q_bound(r, n, s, q, &engine.count_powerful(n)?.eval(&qq), spec.delta)
                }
            }
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub failed_by_family: BTreeMap<String, usize>,
}

impl SweepSummary {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

pub fn summarize(checks: &[BoundCheck]) -> SweepSummary {
    let mut out = SweepSummary { total: checks.len(), ..Default::default() };
    for c in checks {
        if c.pass {
            out.passed += 1;
        } else {
            out.failed += 1;
            *out.failed_by_family.entry(c.family.to_string()).or_default() += 1;
        }
    }
    out
}

/// CSV with header `family,r,n,s,q,approx,exact,bound,margin,pass`.
pub fn to_csv(checks: &[BoundCheck]) -> String {
    let mut out = String::from("family,r,n,s,q,approx,exact,bound,margin,pass\n");
    for c in checks {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            c.family,
            c.r,
            c.n,
            c.s.map(|s| s.to_string()).unwrap_or_default(),
            c.q,
            fmt_rational(&c.approx),
            fmt_rational(&c.exact),
            fmt_rational(&c.bound),
            fmt_rational(&c.margin),
            c.pass
        ));
    }
    out
}
