//! Dense univariate polynomials in the field-size symbol `q`.
//!
//! Every count in the crate is a [`Poly`] in `q`; substituting a prime power
//! for `q` recovers the cardinality over that field. Coefficients are stored
//! densely in ascending degree and the trailing (highest) coefficient is kept
//! nonzero, so the zero polynomial is the empty vector.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A polynomial in `q` with coefficients in `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The symbol `q` itself.
    pub fn q() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c * q^deg`.
    pub fn monomial(c: T, deg: usize) -> Self {
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `q^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// The substitution `q -> q^k`.
    pub fn subst_pow(&self, k: usize) -> Self {
        assert!(k >= 1, "subst_pow needs k >= 1");
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// `self * (self - 1) * ... * (self - j + 1)`; the empty product is 1.
    pub fn falling_factorial(&self, j: usize) -> Self {
        (0..j).fold(Self::one(), |acc, i| {
            let shifted = self - &Self::constant(T::from_int(i as i64));
            &acc * &shifted
        })
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &'a Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.clone() + s.clone();
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &'a Poly<T>) -> Poly<T> {
        self + &(-rhs)
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &'a Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;

            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar> AddAssign<&Poly<T>> for Poly<T> {
    fn add_assign(&mut self, rhs: &Poly<T>) {
        *self = &*self + rhs;
    }
}

impl<T: Scalar> SubAssign<&Poly<T>> for Poly<T> {
    fn sub_assign(&mut self, rhs: &Poly<T>) {
        *self = &*self - rhs;
    }
}

impl<T: Scalar> Sum for Poly<T> {
    fn sum<I: Iterator<Item = Poly<T>>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

// ---------------------------------------------------------------------------
// Exact rational specifics: canonical integer form, text, JSON.

impl Poly<BigRational> {
    /// LCM of all coefficient denominators (1 for the zero polynomial).
    pub fn common_denominator(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// `(numerators, den)` with `self = numerators / den` coefficientwise.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.common_denominator();
        let num = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (num, den)
    }

    pub fn from_integer_form(num: &[BigInt], den: &BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Self::from_coeffs(
            num.iter()
                .map(|n| BigRational::new(n.clone(), den.clone()))
                .collect(),
        ))
    }

    /// Evaluates at an integer and returns the value only if it is integral.
    pub fn eval_integer(&self, q: i64) -> Option<BigInt> {
        let v = self.eval(&BigRational::from_integer(BigInt::from(q)));
        v.is_integer().then(|| v.to_integer())
    }
}

impl fmt::Display for Poly<BigRational> {
    /// Descending powers with a single trailing `/den`, e.g.
    /// `(q^4+2q^3+2q^2+q)/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let (num, den) = self.integer_form();
        let mut body = String::new();
        for (deg, c) in num.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                body.push('-');
            } else if !body.is_empty() {
                body.push('+');
            }
            let mag = c.abs();
            if deg == 0 || !mag.is_one() {
                body.push_str(&mag.to_string());
            }
            match deg {
                0 => {}
                1 => body.push('q'),
                _ => body.push_str(&format!("q^{deg}")),
            }
        }
        if den.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

impl FromStr for Poly<BigRational> {
    type Err = Error;

    /// Accepts the crate's own rendering as well as the looser typeset style
    /// `1/2\,{q}^{4}-1/2\,q`: braces, `\,`, `*` and whitespace are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .replace("\\,", "")
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, '{' | '}' | '*'))
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if let Some(rest) = cleaned.strip_prefix('(') {
            if let Some(close) = rest.rfind(')') {
                let body = &rest[..close];
                let tail = &rest[close + 1..];
                let den = match tail.strip_prefix('/') {
                    Some(d) => parse_den(d)?,
                    None if tail.is_empty() => BigInt::one(),
                    None => return Err(Error::Parse(format!("unexpected suffix {tail:?}"))),
                };
                let poly = parse_terms(body)?;
                return Ok(poly.scale(&BigRational::new(BigInt::one(), den)));
            }
        }
        parse_terms(&cleaned)
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

fn parse_terms(s: &str) -> Result<Poly<BigRational>> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut acc = Poly::zero();
    while pos < bytes.len() {
        let mut sign = BigInt::one();
        while pos < bytes.len() && matches!(bytes[pos], b'+' | b'-') {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        }
        let end = s[pos..]
            .find(['+', '-'])
            .map_or(bytes.len(), |off| pos + off);
        let term = &s[pos..end];
        if term.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        acc += &parse_term(term)?.scale(&BigRational::from_integer(sign));
        pos = end;
    }
    Ok(acc)
}

fn parse_den(s: &str) -> Result<BigInt> {
    let d = parse_int(s)?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(d)
}

/// One term: `c`, `a/b`, `a/b q^e`, `c q^e` or `c q^e/b`.
fn parse_term(term: &str) -> Result<Poly<BigRational>> {
    let (coef_str, power, post_den) = match term.find('q') {
        Some(i) => {
            let (exp, post) = match term[i + 1..].split_once('/') {
                Some((e, d)) => (e, parse_den(d)?),
                None => (&term[i + 1..], BigInt::one()),
            };
            let power = if exp.is_empty() {
                1
            } else {
                exp.strip_prefix('^')
                    .ok_or_else(|| Error::Parse(format!("bad exponent in {term:?}")))?
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {term:?}")))?
            };
            (&term[..i], power, post)
        }
        None => (term, 0, BigInt::one()),
    };
    let coef = if coef_str.is_empty() {
        BigRational::one()
    } else if let Some((n, d)) = coef_str.split_once('/') {
        BigRational::new(parse_int(n)?, parse_den(d)?)
    } else {
        BigRational::from_integer(parse_int(coef_str)?)
    };
    Ok(Poly::monomial(coef / BigRational::from_integer(post_den), power))
}

#[derive(Serialize, Deserialize)]
struct IntegerForm {
    num: Vec<serde_json::Number>,
    den: serde_json::Number,
}

fn to_number(v: &BigInt) -> serde_json::Number {
    v.to_string()
        .parse()
        .expect("integer digits always form a JSON number")
}

fn from_number<E: serde::de::Error>(n: &serde_json::Number) -> std::result::Result<BigInt, E> {
    n.to_string()
        .parse()
        .map_err(|_| E::custom(format!("expected an integer, got {n}")))
}

impl Serialize for Poly<BigRational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (num, den) = self.integer_form();
        IntegerForm {
            num: num.iter().map(to_number).collect(),
            den: to_number(&den),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly<BigRational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let form = IntegerForm::deserialize(deserializer)?;
        let num = form
            .num
            .iter()
            .map(from_number)
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        let den = from_number(&form.den)?;
        Poly::from_integer_form(&num, &den).map_err(D::Error::custom)
    }
}
