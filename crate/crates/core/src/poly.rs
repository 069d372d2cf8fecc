//! Dense univariate polynomials over any [`FieldLike`] coefficient type.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ff::FieldElement;
use crate::scalar::FieldLike;

/// Coefficients are stored constant term first with no trailing zeros.
/// `zero` is a prototype coefficient so that the zero polynomial still knows
/// its coefficient ring.
#[derive(Clone, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
    zero: F,
}

impl<F: std::hash::Hash> std::hash::Hash for Poly<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl<F: FieldLike + Eq> Eq for Poly<F> {}

impl<F: FieldLike> Poly<F> {
    pub fn new(mut coeffs: Vec<F>, proto: &F) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_value()) {
            coeffs.pop();
        }
        Poly { coeffs, zero: proto.zero_like() }
    }

    pub fn zero(proto: &F) -> Self {
        Poly { coeffs: Vec::new(), zero: proto.zero_like() }
    }

    pub fn one(proto: &F) -> Self {
        Poly::constant(proto.one_like())
    }

    pub fn constant(c: F) -> Self {
        let proto = c.clone();
        Poly::new(vec![c], &proto)
    }

    /// The polynomial x.
    pub fn x(proto: &F) -> Self {
        Poly::new(vec![proto.zero_like(), proto.one_like()], proto)
    }

    /// x - r.
    pub fn linear_root(r: &F) -> Self {
        Poly::new(vec![-r.clone(), r.one_like()], r)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn proto(&self) -> &F {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to -1.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn lead(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(|l| *l == l.one_like())
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(), &self.zero)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inverse().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = self.zero.clone();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * c.from_int_like(i as i64))
            .collect();
        Poly::new(d, &self.zero)
    }

    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.zero.clone(); n];
        c.extend(self.coeffs.iter().cloned());
        Poly::new(c, &self.zero)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::one(&self.zero);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.lead().ok_or(Error::DivisionByZero)?;
        let lead_inv = lead.inverse().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        if r.len() <= dd {
            return Ok((Poly::zero(&self.zero), self.clone()));
        }
        let mut q = vec![self.zero.clone(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let t = r[i].clone() * lead_inv.clone();
            if t.is_zero_value() {
                continue;
            }
            for (j, bj) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                r[idx] = r[idx].clone() - t.clone() * bj.clone();
            }
            q[i - dd] = t;
        }
        r.truncate(dd);
        Ok((Poly::new(q, &self.zero), Poly::new(r, &self.zero)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns (g, s, t) with s*self + t*other = g and g monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let proto = &self.zero;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(proto), Poly::zero(proto));
        let (mut t0, mut t1) = (Poly::zero(proto), Poly::one(proto));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = l.inverse().expect("nonzero leading coefficient");
                (r0.scale(&li), s0.scale(&li), t0.scale(&li))
            }
        }
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        (self * other).rem(m).expect("nonzero modulus")
    }

    pub fn pow_mod(&self, mut exp: u128, m: &Self) -> Self {
        let mut base = self.rem(m).expect("nonzero modulus");
        let mut acc = Poly::one(&self.zero).rem(m).expect("nonzero modulus");
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    /// Inverse modulo `m`, if coprime.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.xgcd(m);
        (g.degree() == Some(0)).then(|| s.rem(m).expect("nonzero modulus"))
    }

    /// Evaluates the degree-`n` homogenisation sum_k c_k s^k t^{n-k} at
    /// polynomial arguments. Requires `n >= deg self`.
    pub fn homogeneous_eval(&self, n: usize, s: &Self, t: &Self) -> Self {
        assert!(self.deg() <= n as isize, "homogenisation degree too small");
        let mut s_pows = vec![Poly::one(&self.zero)];
        let mut t_pows = vec![Poly::one(&self.zero)];
        for i in 1..=n {
            s_pows.push(&s_pows[i - 1] * s);
            t_pows.push(&t_pows[i - 1] * t);
        }
        let mut acc = Poly::zero(&self.zero);
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &(&s_pows[k] * &t_pows[n - k]).scale(c);
        }
        acc
    }

    /// Substitutes a polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly::zero(&self.zero);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }
}

impl Poly<FieldElement> {
    /// x^q mod self, with q the order of the coefficient field, via k
    /// successive p-th powers.
    fn x_to_field_order_mod(&self) -> Self {
        let field = self.zero.field();
        let mut xq = Poly::x(&self.zero).rem(self).expect("nonzero");
        for _ in 0..field.degree() {
            xq = xq.pow_mod(field.p() as u128, self);
        }
        xq
    }

    /// Distinct roots in the coefficient field, sorted lexicographically.
    pub fn roots(&self) -> Vec<FieldElement> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let xq = f.x_to_field_order_mod();
        let split = f.gcd(&(&xq - &Poly::x(&self.zero)));
        let mut out = Vec::new();
        split_linear(&split, &mut out);
        out.sort();
        out
    }

    /// Roots with multiplicities, sorted lexicographically.
    pub fn roots_with_multiplicity(&self) -> Vec<(FieldElement, usize)> {
        let mut out = Vec::new();
        for r in self.roots() {
            let lin = Poly::linear_root(&r);
            let mut m = 0;
            let mut cur = self.clone();
            loop {
                let (q, rem) = cur.divrem(&lin).expect("monic divisor");
                if !rem.is_zero() {
                    break;
                }
                m += 1;
                cur = q;
            }
            out.push((r, m));
        }
        out
    }

    /// Whether the polynomial splits into linear factors over its field.
    pub fn splits(&self) -> bool {
        let total: usize = self.roots_with_multiplicity().iter().map(|(_, m)| m).sum();
        Some(total) == self.degree()
    }
}

/// Splits a monic squarefree product of distinct linear factors by
/// gcd with (x + delta)^{(q-1)/2} - 1 for delta = 0, 1, 2, ... in
/// lexicographic order. Deterministic.
fn split_linear(f: &Poly<FieldElement>, out: &mut Vec<FieldElement>) {
    match f.degree() {
        None | Some(0) => {}
        Some(1) => out.push(-f.coeff(0)),
        Some(d) => {
            let field = f.proto().field();
            let half = (field.order() - 1) / 2;
            for idx in 0..field.order() {
                let delta = field.element_at(idx);
                let shifted = Poly::new(vec![delta, field.one()], &delta);
                let h = &shifted.pow_mod(half, f) - &Poly::one(&delta);
                let g = f.gcd(&h);
                let dg = g.degree().unwrap_or(0);
                if dg > 0 && dg < d {
                    let other = f.div_exact(&g).expect("gcd divides").monic();
                    split_linear(&g, out);
                    split_linear(&other, out);
                    return;
                }
            }
            unreachable!("equal-degree splitting failed on a split squarefree polynomial");
        }
    }
}

impl<F: FieldLike> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::new(c, &self.zero)
    }
}

impl<F: FieldLike> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(c, &self.zero)
    }
}

impl<F: FieldLike> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.zero);
        }
        let mut c = vec![self.zero.clone(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_value() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(c, &self.zero)
    }
}

impl<F: FieldLike> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect(), &self.zero)
    }
}

impl<F: FieldLike + fmt::Display> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero_value() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<F: FieldLike> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::Field;
    use num_rational::Rational64;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn rational_xgcd_bezout() {
        let z = q(0);
        // (x-1)(x-2) and (x-1)(x+3)
        let a = Poly::new(vec![q(2), q(-3), q(1)], &z);
        let b = Poly::new(vec![q(-3), q(2), q(1)], &z);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(g, Poly::new(vec![q(-1), q(1)], &z));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn homogeneous_eval_matches_substitution() {
        // u(x) = x^2 + 3x + 5 ; u_h(s, t) with s = x + 1, t = 2x
        let z = q(0);
        let u = Poly::new(vec![q(5), q(3), q(1)], &z);
        let s = Poly::new(vec![q(1), q(1)], &z);
        let t = Poly::new(vec![q(0), q(2)], &z);
        let h = u.homogeneous_eval(2, &s, &t);
        // direct: s^2 + 3 s t + 5 t^2
        let direct = &(&(&s * &s) + &(&s * &t).scale(&q(3))) + &(&t * &t).scale(&q(5));
        assert_eq!(h, direct);
    }

    #[test]
    fn roots_over_f25() {
        let f = Field::new(5, 2).unwrap();
        let one = f.one();
        // x^2 - 2 has no root in F_5 but two in F_25
        let p = Poly::new(vec![f.from_int(-2), f.zero(), one], &one);
        let roots = p.roots();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_eq!(*r * *r, f.from_int(2));
        }
        // x^25 - x splits completely with every element as a root
        let mut c = vec![f.zero(); 26];
        c[1] = -one;
        c[25] = one;
        let all = Poly::new(c, &one).roots();
        assert_eq!(all, f.elements().collect::<Vec<_>>());
    }

    #[test]
    fn multiplicities() {
        let f = Field::new(7, 1).unwrap();
        let one = f.one();
        let a = Poly::linear_root(&f.from_int(3));
        let b = Poly::linear_root(&f.from_int(5));
        let p = &(&a * &a) * &b;
        assert_eq!(p.roots_with_multiplicity(), vec![(f.from_int(3), 2), (f.from_int(5), 1)]);
        assert!(p.splits());
        let irr = Poly::new(vec![one, f.zero(), one], &one); // x^2 + 1, -1 non-square mod 7
        assert!(!irr.splits());
    }
}
