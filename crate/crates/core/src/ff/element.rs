use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use super::{fp_poly, Field, MAX_DEGREE};
use crate::error::{Error, Result};

/// An element of F_{p^k}: coefficients of a polynomial in z of degree < k,
/// reduced modulo the field's defining polynomial.
#[derive(Clone, Copy)]
pub struct FieldElement {
    field: Field,
    c: [u32; MAX_DEGREE],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub(crate) fn from_raw(field: Field, c: [u32; MAX_DEGREE]) -> Self {
        FieldElement { field, c }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Coefficients of the representing polynomial, constant term first.
    pub fn coeffs(&self) -> &[u32] {
        &self.c[..self.field.k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|&v| v == 0)
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.coeffs()[1..].iter().all(|&v| v == 0)
    }

    /// Whether the element lies in the prime field.
    pub fn is_in_prime_field(&self) -> bool {
        self.coeffs()[1..].iter().all(|&v| v == 0)
    }

    /// The prime-field value when the element lies in F_p.
    pub fn as_prime(&self) -> Option<u32> {
        self.is_in_prime_field().then_some(self.c[0])
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        Ok(())
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let p = self.field.p;
        let mut c = [0u32; MAX_DEGREE];
        for i in 0..self.field.k {
            let s = self.c[i] + other.c[i];
            c[i] = if s >= p { s - p } else { s };
        }
        FieldElement { field: self.field, c }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let p = self.field.p;
        let mut c = [0u32; MAX_DEGREE];
        for i in 0..self.field.k {
            let s = self.c[i] + p - other.c[i];
            c[i] = if s >= p { s - p } else { s };
        }
        FieldElement { field: self.field, c }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let k = self.field.k;
        let p = self.field.p as u64;
        if k == 1 {
            let mut c = [0u32; MAX_DEGREE];
            c[0] = (self.c[0] as u64 * other.c[0] as u64 % p) as u32;
            return FieldElement { field: self.field, c };
        }
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            let a = self.c[i] as u64;
            if a == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] += a * other.c[j] as u64;
            }
        }
        for v in prod.iter_mut().take(2 * k - 1) {
            *v %= p;
        }
        let m = &self.field.modulus;
        for i in (k..2 * k - 1).rev() {
            let t = prod[i];
            if t == 0 {
                continue;
            }
            let neg_t = p - t;
            for j in 0..k {
                prod[i - k + j] = (prod[i - k + j] + neg_t * m[j] as u64) % p;
            }
        }
        let mut c = [0u32; MAX_DEGREE];
        for i in 0..k {
            c[i] = prod[i] as u32;
        }
        FieldElement { field: self.field, c }
    }

    /// Field arithmetic with explicit error reporting.
    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        self.check_same(other)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other),
            ArithOp::Sub => self.sub_unchecked(other),
            ArithOp::Mul => self.mul_unchecked(other),
            ArithOp::Div => self.mul_unchecked(&other.inv()?),
        })
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.field.p;
        if self.field.k == 1 {
            let mut c = [0u32; MAX_DEGREE];
            c[0] = fp_poly::inv_mod_p(self.c[0], p);
            return Ok(FieldElement { field: self.field, c });
        }
        let mut a = self.coeffs().to_vec();
        fp_poly::trim(&mut a);
        let inv = fp_poly::inv_mod(&a, &self.field.modulus, p)
            .ok_or_else(|| Error::Internal("non-invertible nonzero field element".into()))?;
        let mut c = [0u32; MAX_DEGREE];
        c[..inv.len()].copy_from_slice(&inv);
        Ok(FieldElement { field: self.field, c })
    }

    pub fn square(&self) -> Self {
        self.mul_unchecked(self)
    }

    pub fn pow(&self, mut n: u128) -> Self {
        let mut acc = self.field.one();
        let mut b = *self;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&b);
            }
            n >>= 1;
            if n > 0 {
                b = b.square();
            }
        }
        acc
    }

    /// Signed exponent; negative powers need an invertible base.
    pub fn pow_i(&self, n: i128) -> Result<Self> {
        if n >= 0 {
            Ok(self.pow(n as u128))
        } else {
            Ok(self.inv()?.pow(n.unsigned_abs()))
        }
    }

    /// a^{p^i}.
    pub fn frobenius(&self, i: usize) -> Self {
        let k = self.field.k;
        let mut out = *self;
        for _ in 0..(i % k) {
            out = out.pow(self.field.p as u128);
        }
        out
    }

    /// Legendre symbol of a prime-field element: a^{(p-1)/2} read in {-1, 0, 1}.
    pub fn legendre(&self) -> Result<i8> {
        if self.field.k != 1 {
            return Err(Error::NotPrimeField(self.field.to_string()));
        }
        if self.is_zero() {
            return Ok(0);
        }
        let e = self.pow((self.field.p as u128 - 1) / 2);
        Ok(if e.is_one() { 1 } else { -1 })
    }

    /// Quadratic character over the element's own field (Euler's criterion).
    pub fn is_square(&self) -> bool {
        self.is_zero() || self.pow((self.field.order - 1) / 2).is_one()
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self) -> Option<u128> {
        if self.is_zero() {
            return None;
        }
        let group = self.field.order - 1;
        let mut ord = group;
        for (q, _) in factor_u128(group) {
            while ord % q == 0 && self.pow(ord / q).is_one() {
                ord /= q;
            }
        }
        Some(ord)
    }
}

pub(crate) fn factor_u128(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs() == other.coeffs()
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.coeffs().hash(state);
    }
}

/// Lexicographic on the coefficient vector, constant term first.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.p, self.field.k, self.coeffs()).cmp(&(other.field.p, other.field.k, other.coeffs()))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.k == 1 {
            return write!(f, "{}", self.c[0]);
        }
        let mut first = true;
        for (i, &v) in self.coeffs().iter().enumerate() {
            if v == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{v}")?,
                1 if v == 1 => write!(f, "z")?,
                1 => write!(f, "{v}z")?,
                _ if v == 1 => write!(f, "z^{i}")?,
                _ => write!(f, "{v}z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Operator forms panic on mismatched fields, mirroring how integer division
// panics on zero; use `arith` for the fallible path.
impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.arith(&rhs, ArithOp::Add).expect("field addition")
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.arith(&rhs, ArithOp::Sub).expect("field subtraction")
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.arith(&rhs, ArithOp::Mul).expect("field multiplication")
    }
}

impl Div for FieldElement {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.arith(&rhs, ArithOp::Div).expect("field division")
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        self.field.zero().sub_unchecked(&self)
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}
