//! Exact counts of reducible, powerful and relatively irreducible monic
//! multivariate polynomials over finite fields, as polynomials in `q`.
//!
//! The arithmetic core is generic over [`Scalar`]; exact rational versions
//! are exported under the short aliases below.

mod error;
mod scalar;

pub mod asymptotics;
pub mod counts;
pub mod oracle;
pub mod qsym;
pub mod zseries;

pub use error::{Error, Result};
pub use scalar::Scalar;

use num_rational::BigRational;

/// A polynomial in `q` with exact rational coefficients.
pub type QPoly = qsym::Poly<BigRational>;
/// A truncated series in `z` with [`QPoly`] coefficients.
pub type ZSeries = zseries::Series<BigRational>;
/// Floating-point counterpart of [`QPoly`].
pub type QPolyF64 = qsym::Poly<f64>;
/// Floating-point counterpart of [`ZSeries`].
pub type ZSeriesF64 = zseries::Series<f64>;
/// The exact counting engine.
pub type Counts = counts::CountEngine<BigRational>;
