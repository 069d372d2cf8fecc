//! Truncated Laurent series and local fixed-point multiplicities.
//!
//! The wild multiplicity is computed at infinity with the uniformizer s,
//! x = s^-2, y = s^-p W(s^2), W(t) = sqrt(1 - t^(p-1)). A normalised wild
//! element ([[1, u], [0, 1]], lambda = +-1) pulls s back to
//! sigma s (1 + u s^2)^(-1/2) for the unique sign sigma compatible with
//! y -> lambda y, and the multiplicity is v(g*s - s).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::{CurvePoint, RoquetteCurve};
use crate::error::{Error, Result};
use crate::ff::Field;
use crate::group::GroupElement;
use crate::scalar::FieldLike;

/// sum_i coeffs[i] s^(val + i) + O(s^prec), with coeffs.len() = prec - val.
/// A series that is zero to its precision has val = prec and no coefficients.
#[derive(Clone, PartialEq)]
pub struct Series<F> {
    val: i64,
    prec: i64,
    coeffs: Vec<F>,
    zero: F,
}

impl<F: FieldLike> Series<F> {
    /// sum_i coeffs[i] s^(start + i) + O(s^prec). Terms at or above prec are
    /// dropped.
    pub fn new(start: i64, mut coeffs: Vec<F>, prec: i64, proto: &F) -> Self {
        let zero = proto.zero_like();
        if start >= prec {
            return Series { val: prec, prec, coeffs: Vec::new(), zero };
        }
        coeffs.resize((prec - start) as usize, zero.clone());
        let mut s = Series { val: start, prec, coeffs, zero };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero_value());
        match lead {
            Some(i) => {
                self.coeffs.drain(..i);
                self.val += i as i64;
            }
            None => {
                self.coeffs.clear();
                self.val = self.prec;
            }
        }
    }

    pub fn zero(prec: i64, proto: &F) -> Self {
        Series::new(prec, Vec::new(), prec, proto)
    }

    pub fn monomial(c: F, n: i64, prec: i64) -> Self {
        let proto = c.clone();
        Series::new(n, vec![c], prec, &proto)
    }

    /// The uniformizer s.
    pub fn var(prec: i64, proto: &F) -> Self {
        Series::monomial(proto.one_like(), 1, prec)
    }

    pub fn constant(c: F, prec: i64) -> Self {
        Series::monomial(c, 0, prec)
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// None when the series vanishes to its precision.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: i64) -> F {
        if n < self.val || n >= self.prec {
            self.zero.clone()
        } else {
            self.coeffs[(n - self.val) as usize].clone()
        }
    }

    pub fn truncate(&self, prec: i64) -> Self {
        if prec >= self.prec {
            return self.clone();
        }
        let keep: Vec<F> = (self.val..prec).map(|n| self.coeff(n)).collect();
        Series::new(self.val.min(prec), keep, prec, &self.zero)
    }

    pub fn neg(&self) -> Self {
        Series {
            val: self.val,
            prec: self.prec,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.clone() * c.clone()).collect();
        Series::new(self.val, coeffs, self.prec, &self.zero)
    }

    /// s^n * self.
    pub fn shift(&self, n: i64) -> Self {
        Series { val: self.val + n, prec: self.prec + n, coeffs: self.coeffs.clone(), zero: self.zero.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let start = self.val.min(other.val).min(prec);
        let coeffs = (start..prec).map(|n| self.coeff(n) + other.coeff(n)).collect();
        Series::new(start, coeffs, prec, &self.zero)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let val = self.val + other.val;
        let prec = (self.prec + other.val).min(other.prec + self.val);
        if self.is_zero() || other.is_zero() {
            return Series::zero(prec, &self.zero);
        }
        let n = (prec - val).max(0) as usize;
        let mut coeffs = vec![self.zero.clone(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero_value() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series::new(val, coeffs, prec, &self.zero)
    }

    /// Multiplicative inverse; the relative precision is preserved.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Series("inverting a series that vanishes to its precision".into()));
        }
        let n = self.coeffs.len();
        let b0 = self.coeffs[0].inverse().ok_or(Error::DivisionByZero)?;
        let mut b = vec![b0.clone()];
        for k in 1..n {
            let mut acc = self.zero.clone();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * b[k - j].clone();
            }
            b.push(-(b0.clone() * acc));
        }
        Ok(Series::new(-self.val, b, -self.val + n as i64, &self.zero))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power (negative exponents invert first).
    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Series::constant(self.zero.one_like(), base.coeffs.len().max(1) as i64);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Square root with the leading coefficient's square root as chosen by
    /// `FieldLike::sqrt_value`. Needs 2 invertible.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Series("square root of a series that vanishes to its precision".into()));
        }
        if self.val % 2 != 0 {
            return Err(Error::Series("odd valuation has no square root".into()));
        }
        let n = self.coeffs.len();
        let r0 = self.coeffs[0]
            .sqrt_value()
            .ok_or_else(|| Error::Series("leading coefficient is not a square".into()))?;
        let two_r0_inv = (r0.clone() + r0.clone()).inverse().ok_or(Error::DivisionByZero)?;
        let mut r = vec![r0];
        for k in 1..n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc = acc - r[i].clone() * r[k - i].clone();
            }
            r.push(acc * two_r0_inv.clone());
        }
        Ok(Series::new(self.val / 2, r, self.val / 2 + n as i64, &self.zero))
    }

    /// self(inner) for a power series self (valuation >= 0) and inner of
    /// positive valuation.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !self.is_zero() && self.val < 0 {
            return Err(Error::Series("outer series has a pole".into()));
        }
        let vi = match inner.valuation() {
            Some(v) if v >= 1 => v,
            _ => return Err(Error::Series("inner series must have positive valuation".into())),
        };
        let prec = (self.prec * vi).min(inner.prec);
        let inner = inner.truncate(prec);
        let mut acc = Series::zero(prec, &self.zero);
        for n in (0..self.prec).rev() {
            acc = acc.mul(&inner).add(&Series::constant(self.coeff(n), prec));
        }
        Ok(acc.truncate(prec))
    }
}

impl<F: FieldLike> fmt::Debug for Series<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero_value() {
                write!(f, "{:?}*s^{} + ", c, self.val + i as i64)?;
            }
        }
        write!(f, "O(s^{})", self.prec)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesConfig {
    pub initial_precision: i64,
    pub max_precision: i64,
}

impl SeriesConfig {
    /// 2p + 4 terms, doubling up to 16 times that.
    pub fn default_for(p: u64) -> SeriesConfig {
        let n = 2 * p as i64 + 4;
        SeriesConfig { initial_precision: n, max_precision: 16 * n }
    }

    pub fn with_initial(p: u64, n: i64) -> SeriesConfig {
        let d = SeriesConfig::default_for(p);
        SeriesConfig { initial_precision: n, max_precision: d.max_precision.max(n) }
    }
}

/// y(s) = s^-p sqrt(1 - s^(2p-2)), for any uniformizer-like s of valuation 1.
fn local_y(p: i64, s: &Series<crate::ff::FieldElement>) -> Result<Series<crate::ff::FieldElement>> {
    let lead = s.coeff(1);
    let one = Series::constant(lead.field().one(), s.precision() - 1);
    let w = one.sub(&s.pow(2 * p - 2)?).sqrt()?;
    Ok(w.mul(&s.pow(-p)?))
}

/// Intersection multiplicity of the graph of a normalised wild element with
/// the diagonal at its fixed point (infinity).
pub fn wild_multiplicity(g: &GroupElement, cfg: &SeriesConfig) -> Result<u32> {
    let p = g.p();
    let [a, u, c, d] = g.matrix();
    if a != 1 || c != 0 || d != 1 || u == 0 {
        return Err(Error::NotWild(format!("{g}: matrix is not [[1, u], [0, 1]] with u != 0")));
    }
    let lambda = g.lambda();
    let sign: i64 = if lambda.is_one() {
        1
    } else if (-lambda).is_one() {
        -1
    } else {
        return Err(Error::NotWild(format!("{g}: lambda is not +-1")));
    };
    let fp = Field::new(p as u64, 1)?;
    let uf = fp.from_int(u as i64);
    let mut prec = cfg.initial_precision.max(4);
    loop {
        let s = Series::var(prec, &fp.one());
        // g*(s)^2 = 1 / (x + u) = s^2 / (1 + u s^2)
        let denom = Series::constant(fp.one(), prec).add(&s.mul(&s).scale(&uf));
        let base = s.mul(&denom.inv()?.sqrt()?);
        let y = local_y(p as i64, &s)?.scale(&fp.from_int(sign));
        let mut chosen = Vec::new();
        for sigma in [1i64, -1] {
            let gs = base.scale(&fp.from_int(sigma));
            let y_pulled = local_y(p as i64, &gs)?;
            if y_pulled.sub(&y).is_zero() {
                chosen.push(gs);
            }
        }
        if chosen.len() != 1 {
            return Err(Error::Series(format!("{} branches of g*s match the y action for {g}", chosen.len())));
        }
        let diff = chosen[0].sub(&s);
        if let Some(v) = diff.valuation() {
            return Ok(v as u32);
        }
        if prec >= cfg.max_precision {
            return Err(Error::PrecisionExhausted(cfg.max_precision as usize));
        }
        prec = (prec * 2).min(cfg.max_precision);
    }
}

/// Local multiplicity at an affine fixed point of a tame element, by the
/// same series method. Used to cross-check the multiplicity-one claim.
pub fn tame_local_multiplicity(curve: &RoquetteCurve, g: &GroupElement, pt: &CurvePoint, prec: i64) -> Result<u32> {
    let CurvePoint::Affine { x: x0, y: y0 } = *pt else {
        return Err(Error::Series("point at infinity: use wild_multiplicity".into()));
    };
    if curve.act(g, pt)? != *pt {
        return Err(Error::Series(format!("{g} does not fix the point")));
    }
    let f = curve.field();
    let [a, b, c, d] = g.matrix().map(|v| f.from_int(v as i64));
    let one = f.one();
    let t = Series::var(prec, &one);
    let pulled_minus_t = if !y0.is_zero() {
        // uniformizer x - x0; g*x = (a x + b)/(c x + d)
        let x = Series::constant(x0, prec).add(&t);
        let num = x.scale(&a).add(&Series::constant(b, prec));
        let den = x.scale(&c).add(&Series::constant(d, prec));
        num.div(&den)?.sub(&x)
    } else {
        // uniformizer y; x = x0 + h with h = h^p - y^2
        let p = curve.p() as i64;
        let y2 = t.mul(&t);
        let mut h = Series::zero(prec, &one);
        for _ in 0..prec {
            h = h.pow(p)?.truncate(prec).sub(&y2);
        }
        let x = Series::constant(x0, prec).add(&h);
        let den = x.scale(&c).add(&Series::constant(d, prec));
        let lambda = crate::ff::ff_embed(&g.lambda(), f)?;
        t.scale(&lambda).mul(&den.pow(-(p + 1) / 2)?).sub(&t)
    };
    pulled_minus_t
        .valuation()
        .map(|v| v as u32)
        .ok_or(Error::PrecisionExhausted(prec as usize))
}
