//! Coefficient scalars.
//!
//! Every symbolic routine in the crate is written against [`Scalar`], so the
//! same code runs over exact rationals (the default, used for every count and
//! bound check) or over `f64`/`f32` when a quick floating-point estimate is
//! enough.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// A field-like coefficient type: ring operations plus division by nonzero
/// integers.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    /// Embeds a machine integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type embeds i64")
    }

    /// The quotient `num / den`, exact for rational scalars.
    fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_int(num) / Self::from_int(den)
    }

    /// `self^e` for any integer exponent; negative exponents invert.
    fn powi(&self, e: i64) -> Self {
        let mag = num_traits::pow(self.clone(), e.unsigned_abs() as usize);
        if e < 0 {
            Self::one() / mag
        } else {
            mag
        }
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}
