//! Finite fields F_{p^k} in a polynomial basis over F_p.
//!
//! Every extension is built directly over the prime field with the
//! lexicographically first monic irreducible modulus of its degree, so a
//! given `(p, k)` always yields the same model. Descriptors are interned:
//! a [`Field`] is a copyable handle and two handles are the same field iff
//! they point at the same descriptor.

mod element;
mod embed;
pub(crate) mod fp_poly;
mod sqrt;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

pub use element::{ArithOp, FieldElement};
pub use embed::{ff_embed, Embedding};
pub use sqrt::SqrtConfig;

use crate::error::{Error, Result};

/// Largest supported extension degree over F_p.
pub const MAX_DEGREE: usize = 24;
/// Largest supported characteristic (keeps products of residues inside u64
/// accumulators).
pub const MAX_PRIME: u32 = 65_521;

/// Modulus and sizes of one finite field.
pub struct FieldDescriptor {
    p: u32,
    k: usize,
    /// Monic, constant term first, length `k + 1`.
    modulus: Vec<u32>,
    order: u128,
    nonresidue: OnceLock<[u32; MAX_DEGREE]>,
}

impl FieldDescriptor {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Number of elements p^k.
    pub fn order(&self) -> u128 {
        self.order
    }
}

/// Handle to an interned [`FieldDescriptor`].
#[derive(Clone, Copy)]
pub struct Field(&'static FieldDescriptor);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.k.hash(state);
    }
}

impl std::ops::Deref for Field {
    type Target = FieldDescriptor;

    fn deref(&self) -> &FieldDescriptor {
        self.0
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.p, self.k)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{}", self.p, self.k)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn registry() -> &'static Mutex<HashMap<(u32, usize), &'static FieldDescriptor>> {
    static REG: OnceLock<Mutex<HashMap<(u32, usize), &'static FieldDescriptor>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// First monic irreducible polynomial of degree `k` over F_p, enumerating
/// coefficient vectors (c_0, ..., c_{k-1}) lexicographically with the
/// constant term most significant.
pub(crate) fn first_irreducible(p: u32, k: usize) -> Option<Vec<u32>> {
    if k == 1 {
        return Some(vec![0, 1]);
    }
    let total = (p as u128).checked_pow(k as u32)?;
    // c_0 = 0 means x divides f
    let mut digits = vec![0u32; k];
    digits[0] = 1;
    for _ in 0..total - total / p as u128 {
        let mut f = digits.clone();
        f.push(1);
        if fp_poly::is_irreducible(&f, p) {
            return Some(f);
        }
        // increment, least significant digit is c_{k-1}
        for i in (0..k).rev() {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
    None
}

impl Field {
    /// Builds (or fetches) the field F_{p^k}.
    pub fn new(p: u64, k: usize) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p < 5 || p > MAX_PRIME as u64 {
            return Err(Error::PrimeOutOfRange { p, min: 5, max: MAX_PRIME as u64 });
        }
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(k));
        }
        let p = p as u32;
        let order = (p as u128)
            .checked_pow(k as u32)
            .ok_or(Error::UnsupportedDegree(k))?;
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(d) = reg.get(&(p, k)) {
            return Ok(Field(d));
        }
        let modulus = first_irreducible(p, k).ok_or_else(|| {
            Error::Internal(format!("no irreducible polynomial of degree {k} over F_{p}"))
        })?;
        let desc: &'static FieldDescriptor = Box::leak(Box::new(FieldDescriptor {
            p,
            k,
            modulus,
            order,
            nonresidue: OnceLock::new(),
        }));
        reg.insert((p, k), desc);
        Ok(Field(desc))
    }

    pub fn descriptor(&self) -> &'static FieldDescriptor {
        self.0
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::from_raw(*self, [0; MAX_DEGREE])
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        let mut c = [0u32; MAX_DEGREE];
        c[0] = n.rem_euclid(self.p as i64) as u32;
        FieldElement::from_raw(*self, c)
    }

    /// The class of z, the polynomial-basis generator. In F_p this is 0.
    pub fn generator(&self) -> FieldElement {
        let mut c = [0u32; MAX_DEGREE];
        if self.k > 1 {
            c[1] = 1;
        }
        FieldElement::from_raw(*self, c)
    }

    /// Builds an element from coefficients (constant term first), reducing
    /// them mod p. Missing trailing coefficients are zero.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.k {
            return Err(Error::TooManyCoefficients { got: coeffs.len(), degree: self.k });
        }
        let mut c = [0u32; MAX_DEGREE];
        for (dst, &v) in c.iter_mut().zip(coeffs) {
            *dst = v.rem_euclid(self.p as i64) as u32;
        }
        Ok(FieldElement::from_raw(*self, c))
    }

    /// The `index`-th element in lexicographic order (c_0 most significant).
    pub fn element_at(&self, mut index: u128) -> FieldElement {
        let mut c = [0u32; MAX_DEGREE];
        for i in (0..self.k).rev() {
            c[i] = (index % self.p as u128) as u32;
            index /= self.p as u128;
        }
        FieldElement::from_raw(*self, c)
    }

    /// All elements in lexicographic order. Only sensible for small fields.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let f = *self;
        (0..self.order).map(move |i| f.element_at(i))
    }

    /// Whether this field contains a copy of `sub`, i.e. same p and
    /// `sub.degree()` divides our degree.
    pub fn contains(&self, sub: Field) -> bool {
        self.p == sub.p && self.k % sub.k == 0
    }

    pub fn prime_field(&self) -> Field {
        Field::new(self.p as u64, 1).expect("prime field of an existing field")
    }
}

/// Builds the descriptor for F_{p^k}.
pub fn ff_make(p: u64, k: usize) -> Result<Field> {
    Field::new(p, k)
}
