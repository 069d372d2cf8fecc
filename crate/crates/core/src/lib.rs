//! Exact verification of the automorphism representation of the Roquette
//! curve y^2 = x^p - x over F_p.
//!
//! The crate enumerates Aut(C) as a quotient of a fibre product inside
//! GL_2(F_p) x F_{p^2}^x, lets it act on points and on divisor classes, computes
//! the character of Aut(C) on H^1 from fixed-point data, and certifies that
//! this character is rational, irreducible and of quaternionic type.

pub mod character;
pub mod curve;
pub mod error;
pub mod ff;
pub mod group;
pub mod jacobian;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};

/// Exact rational class-function values.
pub type Rational = num_rational::Ratio<i64>;
/// Characters with i64 numerators and denominators.
pub type Character = character::ClassFunction<i64>;
