//! The coefficient abstraction shared by polynomials, power series and
//! Mumford divisors.
//!
//! Finite-field elements carry their field at runtime, so the usual
//! `num_traits::Zero`/`One` constructors (which take no context) cannot be
//! implemented for them. `FieldLike` asks for zero and one relative to an
//! existing value instead. Exact rationals (`num_rational::Ratio`) implement
//! it too, which lets the polynomial layer be exercised over Q.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, Zero};

use crate::ff::FieldElement;

pub trait FieldLike:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_value(&self) -> bool;
    fn inverse(&self) -> Option<Self>;
    fn from_int_like(&self, n: i64) -> Self;

    fn div_exact(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.clone() * inv)
    }

    /// Some square root, if one exists in the same ring.
    fn sqrt_value(&self) -> Option<Self>;
}

impl FieldLike for FieldElement {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }

    fn one_like(&self) -> Self {
        self.field().one()
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.field().from_int(n)
    }

    fn sqrt_value(&self) -> Option<Self> {
        self.sqrt()
    }
}

impl<T> FieldLike for Ratio<T>
where
    T: Clone + Integer + Roots + Signed + FromPrimitive + Debug,
{
    fn zero_like(&self) -> Self {
        Ratio::zero()
    }

    fn one_like(&self) -> Self {
        Ratio::from_integer(T::one())
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_int_like(&self, n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer fits scalar type"))
    }

    fn sqrt_value(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        (n.clone() * n.clone() == *self.numer() && d.clone() * d.clone() == *self.denom()).then(|| Ratio::new(n, d))
    }
}
