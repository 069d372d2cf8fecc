//! Divisor classes on the Jacobian of y^2 = x^p - x in Mumford form, with
//! Cantor's composition and reduction (odd-degree model, base point at
//! infinity).

mod action;
mod torsion;

pub use action::{act_on_class, act_on_class_via_points};
pub use torsion::{
    crt_reconstruct, default_ells, rep_matrix, rho_ell_traces, torsion_basis, torsion_degree, EllTraces, ModLMatrix,
    TorsionBasis, DEFAULT_ELL_BOUND,
};

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;

use crate::curve::{frobenius_sign, CurvePoint};
use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};
use crate::poly::Poly;

/// A reduced divisor class: u monic, deg v < deg u <= g, u | v^2 - f.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MumfordDivisor {
    u: Poly<FieldElement>,
    v: Poly<FieldElement>,
}

impl MumfordDivisor {
    pub fn u(&self) -> &Poly<FieldElement> {
        &self.u
    }

    pub fn v(&self) -> &Poly<FieldElement> {
        &self.v
    }

    pub fn field(&self) -> Field {
        self.u.proto().field()
    }

    pub fn is_zero(&self) -> bool {
        self.u.degree() == Some(0)
    }

    /// Degree of the effective part.
    pub fn weight(&self) -> usize {
        self.u.degree().unwrap_or(0)
    }
}

impl fmt::Debug for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// The Jacobian over a fixed field F_{p^k}.
#[derive(Clone)]
pub struct Jacobian {
    p: u32,
    genus: usize,
    field: Field,
    f: Poly<FieldElement>,
}

impl Jacobian {
    pub fn new(p: u64, k: usize) -> Result<Jacobian> {
        Ok(Jacobian::over(Field::new(p, k)?))
    }

    pub fn over(field: Field) -> Jacobian {
        let p = field.p();
        let mut coeffs = vec![field.zero(); p as usize + 1];
        coeffs[1] = -field.one();
        coeffs[p as usize] = field.one();
        Jacobian { p, genus: (p as usize - 1) / 2, field, f: Poly::new(coeffs, &field.one()) }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// x^p - x.
    pub fn f(&self) -> &Poly<FieldElement> {
        &self.f
    }

    pub fn zero(&self) -> MumfordDivisor {
        let one = self.field.one();
        MumfordDivisor { u: Poly::one(&one), v: Poly::zero(&one) }
    }

    fn check(&self, d: &MumfordDivisor) -> Result<()> {
        if d.field() != self.field || d.v.proto().field() != self.field {
            return Err(Error::FieldMismatch { left: d.field().to_string(), right: self.field.to_string() });
        }
        Ok(())
    }

    /// Builds (u, v) after checking it is a reduced Mumford pair.
    pub fn divisor(&self, u: Poly<FieldElement>, v: Poly<FieldElement>) -> Result<MumfordDivisor> {
        let d = MumfordDivisor { u, v };
        self.check(&d)?;
        if !self.is_valid(&d) {
            return Err(Error::Invariant(format!("{d:?} is not a reduced Mumford pair")));
        }
        Ok(d)
    }

    pub fn is_valid(&self, d: &MumfordDivisor) -> bool {
        let Some(du) = d.u.degree() else { return false };
        d.field() == self.field
            && d.u.is_monic()
            && du <= self.genus
            && d.v.deg() < du as isize
            && (&(&d.v * &d.v) - &self.f).rem(&d.u).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// [P - infinity].
    pub fn from_point(&self, pt: &CurvePoint) -> Result<MumfordDivisor> {
        match pt {
            CurvePoint::Infinity => Ok(self.zero()),
            CurvePoint::Affine { x, y } => {
                if x.field() != self.field {
                    return Err(Error::FieldMismatch { left: x.field().to_string(), right: self.field.to_string() });
                }
                self.divisor(Poly::linear_root(x), Poly::constant(*y))
            }
        }
    }

    pub fn neg(&self, d: &MumfordDivisor) -> MumfordDivisor {
        MumfordDivisor { u: d.u.clone(), v: -&d.v }
    }

    pub fn add(&self, a: &MumfordDivisor, b: &MumfordDivisor) -> Result<MumfordDivisor> {
        self.check(a)?;
        self.check(b)?;
        if a.is_zero() {
            return Ok(b.clone());
        }
        if b.is_zero() {
            return Ok(a.clone());
        }
        let (d0, e1, e2) = a.u.xgcd(&b.u);
        let (d, c1, c2) = d0.xgcd(&(&a.v + &b.v));
        let s1 = &c1 * &e1;
        let s2 = &c1 * &e2;
        let u = (&a.u * &b.u).div_exact(&(&d * &d))?;
        let t = &(&(&s1 * &a.u) * &b.v) + &(&(&s2 * &b.u) * &a.v);
        let t = &t + &(&c2 * &(&(&a.v * &b.v) + &self.f));
        let v = t.div_exact(&d)?.rem(&u)?;
        self.reduce(u, v)
    }

    fn reduce(&self, mut u: Poly<FieldElement>, mut v: Poly<FieldElement>) -> Result<MumfordDivisor> {
        while u.deg() > self.genus as isize {
            let u2 = (&self.f - &(&v * &v)).div_exact(&u)?;
            v = (-&v).rem(&u2)?;
            u = u2;
        }
        let u = u.monic();
        let v = v.rem(&u)?;
        Ok(MumfordDivisor { u, v })
    }

    pub fn sub(&self, a: &MumfordDivisor, b: &MumfordDivisor) -> Result<MumfordDivisor> {
        self.add(a, &self.neg(b))
    }

    pub fn scalar_mul(&self, n: &BigInt, d: &MumfordDivisor) -> Result<MumfordDivisor> {
        let base = if n < &BigInt::zero() { self.neg(d) } else { d.clone() };
        let mag = n.magnitude();
        let mut acc = self.zero();
        for i in (0..mag.bits()).rev() {
            acc = self.add(&acc, &acc)?;
            if mag.bit(i) {
                acc = self.add(&acc, &base)?;
            }
        }
        Ok(acc)
    }

    pub fn scalar_mul_u64(&self, n: u64, d: &MumfordDivisor) -> Result<MumfordDivisor> {
        self.scalar_mul(&BigInt::from(n), d)
    }

    /// A uniformly random affine point.
    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R) -> CurvePoint {
        let q = self.field.order();
        loop {
            let x = self.field.element_at(rng.gen_range(0..q));
            let fx = self.f.eval(&x);
            if fx.is_zero() {
                return CurvePoint::Affine { x, y: fx };
            }
            if let Some(r) = fx.sqrt() {
                let y = if rng.gen::<bool>() { r } else { -r };
                return CurvePoint::Affine { x, y };
            }
        }
    }

    /// Sum of g random points minus g times infinity.
    pub fn random_divisor<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<MumfordDivisor> {
        let mut acc = self.zero();
        for _ in 0..self.genus {
            let pt = self.random_point(rng);
            acc = self.add(&acc, &self.from_point(&pt)?)?;
        }
        Ok(acc)
    }

    /// #J(F_{p^k}) from the Frobenius scalar; see [`jacobian_order`].
    pub fn order(&self) -> BigUint {
        let k = self.field.degree();
        if k % 2 == 0 {
            jacobian_order(self.p as u64, k as u32 / 2)
        } else {
            // Frobenius over F_p has eigenvalues +-sqrt(eps p), g of each sign
            let ep = BigInt::from(frobenius_sign(self.p as u64)) * BigInt::from(self.p);
            let t = BigInt::one() - ep.pow(k as u32);
            t.pow(self.genus as u32).magnitude().clone()
        }
    }
}

/// (1 - (eps p)^m)^(2g), the order of J(F_{p^{2m}}).
pub fn jacobian_order(p: u64, m: u32) -> BigUint {
    let g = (p - 1) / 2;
    let ep = BigInt::from(frobenius_sign(p)) * BigInt::from(p);
    let t = BigInt::one() - ep.pow(m);
    t.pow(2 * g as u32).magnitude().clone()
}
