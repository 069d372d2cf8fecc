//! The action of G on divisor classes.
//!
//! `act_on_class` works on (u, v) directly. Write g^-1 on x as
//! x = (d X - b)/(a - c X). Then the x-coordinates of the image support are
//! the roots of u_h(d X - b, a - c X), u_h the degree-deg(u) homogenisation,
//! and on the image y = lambda det^-e (a - c X)^(e - n) v_h(d X - b, a - c X)
//! with n = deg(u) - 1, e = (p + 1)/2. A root dropping out of u_h is a branch
//! point sent to infinity. When c != 0 infinity itself moves to T = (a/c, 0),
//! which contributes deg(u) * [T - infinity], i.e. [T - infinity] once when
//! deg(u) is odd.
//!
//! `act_on_class_via_points` splits u, moves the points one by one and adds
//! the results back up in the splitting field.

use crate::curve::{CurvePoint, RoquetteCurve};
use crate::error::{Error, Result};
use crate::ff::{ff_embed, Embedding, Field, FieldElement, MAX_DEGREE};
use crate::group::{mat_det, GroupElement};
use crate::poly::Poly;

use super::{Jacobian, MumfordDivisor};

fn matrix_in(field: Field, g: &GroupElement) -> [FieldElement; 4] {
    g.matrix().map(|v| field.from_int(v as i64))
}

pub fn act_on_class(jac: &Jacobian, g: &GroupElement, d: &MumfordDivisor) -> Result<MumfordDivisor> {
    let field = jac.field();
    if g.p() != jac.p() {
        return Err(Error::PrimeMismatch(g.p(), jac.p()));
    }
    if d.field() != field {
        return Err(Error::FieldMismatch { left: d.field().to_string(), right: field.to_string() });
    }
    if d.is_zero() {
        return Ok(jac.zero());
    }
    let p = jac.p();
    let lambda = ff_embed(&g.lambda(), field)?;
    let [a, b, c, dd] = matrix_in(field, g);
    let det = field.from_int(mat_det(&g.matrix(), p) as i64);
    let one = field.one();
    let s = Poly::new(vec![-b, dd], &one);
    let t = Poly::new(vec![a, -c], &one);
    let deg = d.weight();
    let n = deg - 1;
    let e = (p as usize + 1) / 2;
    let u_new = d.u().homogeneous_eval(deg, &s, &t).monic();
    let scale = lambda * det.pow_i(-(e as i128))?;
    let v_new = (&d.v().homogeneous_eval(n, &s, &t) * &t.pow((e - n) as u32)).scale(&scale).rem(&u_new)?;
    let moved = jac.divisor(u_new, v_new)?;
    if !c.is_zero() && deg % 2 == 1 {
        let tpt = CurvePoint::Affine { x: a / c, y: field.zero() };
        return jac.add(&moved, &jac.from_point(&tpt)?);
    }
    Ok(moved)
}

/// Smallest extension of the divisor's field over which u splits.
fn splitting_field(d: &MumfordDivisor) -> Result<(Field, Vec<(FieldElement, usize)>)> {
    let base = d.field();
    let k = base.degree();
    for j in 1.. {
        if k * j > MAX_DEGREE {
            return Err(Error::SplittingFieldTooLarge(k * j));
        }
        let big = Field::new(base.p() as u64, k * j)?;
        let emb = Embedding::between(base, big)?;
        let one = big.one();
        let u = Poly::new(d.u().coeffs().iter().map(|c| emb.embed(c)).collect::<Result<Vec<_>>>()?, &one);
        let roots = u.roots_with_multiplicity();
        if roots.iter().map(|(_, m)| m).sum::<usize>() == d.weight() {
            return Ok((big, roots));
        }
    }
    unreachable!()
}

pub fn act_on_class_via_points(jac: &Jacobian, g: &GroupElement, d: &MumfordDivisor) -> Result<MumfordDivisor> {
    let base = jac.field();
    if d.field() != base {
        return Err(Error::FieldMismatch { left: d.field().to_string(), right: base.to_string() });
    }
    let (big, roots) = splitting_field(d)?;
    let emb = Embedding::between(base, big)?;
    let big_jac = Jacobian::over(big);
    let curve = RoquetteCurve::new(big.p() as u64, big.degree())?;
    let v_big = Poly::new(d.v().coeffs().iter().map(|c| emb.embed(c)).collect::<Result<Vec<_>>>()?, &big.one());
    let mut acc = big_jac.zero();
    for (x, mult) in roots {
        let pt = CurvePoint::Affine { x, y: v_big.eval(&x) };
        let img = big_jac.from_point(&curve.act(g, &pt)?)?;
        for _ in 0..mult {
            acc = big_jac.add(&acc, &img)?;
        }
    }
    // -deg(u) [g(infinity) - infinity]
    let g_inf = curve.act(g, &CurvePoint::Infinity)?;
    if d.weight() % 2 == 1 {
        acc = big_jac.sub(&acc, &big_jac.from_point(&g_inf)?)?;
    }
    let back = |p: &Poly<FieldElement>| -> Result<Poly<FieldElement>> {
        let cs = p
            .coeffs()
            .iter()
            .map(|c| emb.restrict(c).ok_or_else(|| Error::Invariant("image class is not Galois-stable".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(cs, &base.one()))
    };
    jac.divisor(back(acc.u())?, back(acc.v())?)
}
