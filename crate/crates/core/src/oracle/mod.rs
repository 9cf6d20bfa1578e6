//! Brute-force ground truth over small finite fields.
//!
//! Polynomials are enumerated explicitly and classified by product sieves;
//! nothing here depends on the symbolic engine.

pub mod field;
pub mod galois;
pub mod poly;
pub mod sieve;

pub use field::{prime_power, FieldElem, FieldSpec, GaloisField};
pub use galois::{galois_image_check, rel_irred_by_images, GaloisImage};
pub use poly::{MonomialBasis, MultiPoly, PolyRing};
pub use sieve::{count_rel_irred_oracle, sieve_irreducible, sieve_powerful, sieve_reducible, CodeSet};
