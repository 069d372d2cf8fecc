//! The curve y^2 = x^p - x over F_{p^k}, its points, and the action of G.
//!
//! The action is the point map
//!   (x, y) -> ((a x + b)/(c x + d), lambda y / (c x + d)^{(p+1)/2}),
//! extended to the single point at infinity through the branch points:
//! infinity goes to the point above a/c (itself when c = 0), and the
//! branch point above -d/c goes to infinity. With this point map,
//! act(g h, P) = act(g, act(h, P)); see [`COMPOSITION`].

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{Embedding, Field, FieldElement};
use crate::group::{GroupElement, RoquetteGroup};
use crate::poly::Poly;
use crate::series;

/// Order in which the point action composes with the group law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    /// act(g h, P) = act(g, act(h, P))
    Left,
    /// act(g h, P) = act(h, act(g, P))
    Right,
}

/// Determined by `determine_convention` on p = 5 and pinned by a test.
pub const COMPOSITION: Convention = Convention::Left;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Infinity,
    Affine { x: FieldElement, y: FieldElement },
}

impl CurvePoint {
    pub fn is_ramification(&self) -> bool {
        match self {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { y, .. } => y.is_zero(),
        }
    }

    pub fn x(&self) -> Option<FieldElement> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, .. } => Some(*x),
        }
    }
}

/// x^p - x.
pub fn rhs(x: &FieldElement) -> FieldElement {
    x.pow(x.field().p() as u128) - *x
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCount {
    pub degree: usize,
    pub count: u128,
}

/// The curve over a fixed field F_{p^k}.
pub struct RoquetteCurve {
    p: u32,
    field: Field,
    lambda_embedding: Option<&'static Embedding>,
}

impl RoquetteCurve {
    pub fn new(p: u64, k: usize) -> Result<RoquetteCurve> {
        let field = Field::new(p, k)?;
        let lambda_embedding = if k % 2 == 0 {
            Some(Embedding::between(Field::new(p, 2)?, field)?)
        } else {
            None
        };
        Ok(RoquetteCurve { p: p as u32, field, lambda_embedding })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// g = (p - 1)/2.
    pub fn genus(&self) -> u32 {
        (self.p - 1) / 2
    }

    pub fn affine(&self, x: FieldElement, y: FieldElement) -> Result<CurvePoint> {
        if x.field() != self.field || y.field() != self.field {
            return Err(Error::FieldMismatch { left: x.field().to_string(), right: self.field.to_string() });
        }
        let pt = CurvePoint::Affine { x, y };
        if !self.is_on_curve(&pt) {
            return Err(Error::NotOnCurve);
        }
        Ok(pt)
    }

    pub fn is_on_curve(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                x.field() == self.field && y.field() == self.field && y.square() == rhs(x)
            }
        }
    }

    /// Points above a given x-coordinate, in canonical order.
    pub fn points_above(&self, x: &FieldElement) -> Vec<CurvePoint> {
        let f = rhs(x);
        if f.is_zero() {
            return vec![CurvePoint::Affine { x: *x, y: f }];
        }
        match f.sqrt() {
            Some(r) => vec![CurvePoint::Affine { x: *x, y: r }, CurvePoint::Affine { x: *x, y: -r }],
            None => Vec::new(),
        }
    }

    /// All points: affine points by x in lexicographic order, then infinity.
    pub fn points(&self) -> Vec<CurvePoint> {
        let mut out: Vec<CurvePoint> = self.field.elements().flat_map(|x| self.points_above(&x)).collect();
        out.push(CurvePoint::Infinity);
        out
    }

    /// Point count by the quadratic character, without building points.
    pub fn count_points(&self) -> PointCount {
        let mut count = 1u128;
        for x in self.field.elements() {
            let f = rhs(&x);
            count += if f.is_zero() {
                1
            } else if f.is_square() {
                2
            } else {
                0
            };
        }
        PointCount { degree: self.field.degree(), count }
    }

    fn lambda_in_field(&self, g: &GroupElement) -> Result<FieldElement> {
        let emb = self.lambda_embedding.ok_or_else(|| Error::FieldTooSmall(self.field.to_string()))?;
        emb.embed(&g.lambda())
    }

    /// The point map of g.
    pub fn act(&self, g: &GroupElement, pt: &CurvePoint) -> Result<CurvePoint> {
        if g.p() != self.p {
            return Err(Error::PrimeMismatch(g.p(), self.p));
        }
        let lambda = self.lambda_in_field(g)?;
        let [a, b, c, d] = g.matrix().map(|v| self.field.from_int(v as i64));
        match pt {
            CurvePoint::Infinity => {
                if c.is_zero() {
                    Ok(CurvePoint::Infinity)
                } else {
                    Ok(CurvePoint::Affine { x: a / c, y: self.field.zero() })
                }
            }
            CurvePoint::Affine { x, y } => {
                if !self.is_on_curve(pt) {
                    return Err(Error::NotOnCurve);
                }
                let den = c * *x + d;
                if den.is_zero() {
                    // -d/c lies in F_p, so this is a branch point
                    if !y.is_zero() {
                        return Err(Error::Invariant("pole of the Moebius map off the branch locus".into()));
                    }
                    return Ok(CurvePoint::Infinity);
                }
                let e = (self.p as u128 + 1) / 2;
                let den_inv = den.inv()?;
                Ok(CurvePoint::Affine {
                    x: (a * *x + b) * den_inv,
                    y: lambda * *y * den_inv.pow(e),
                })
            }
        }
    }

    /// Points fixed by g != 1 together with their local intersection
    /// multiplicity. Must be called on a curve over F_{p^4} or an extension
    /// of it, where all fixed points are rational.
    pub fn fixed_points(&self, g: &GroupElement, precision: &series::SeriesConfig) -> Result<Vec<(CurvePoint, u32)>> {
        if g.is_identity() {
            return Err(Error::IdentityInput);
        }
        if self.field.degree() % 4 != 0 {
            return Err(Error::FieldTooSmall(format!("{} (fixed points need F_p^4)", self.field)));
        }
        let p = self.p;
        let [a, b, c, d] = g.matrix();
        if g.has_scalar_matrix() {
            // g = iota: fixes exactly the branch points
            let mut out: Vec<(CurvePoint, u32)> = (0..p)
                .map(|r| (CurvePoint::Affine { x: self.field.from_int(r as i64), y: self.field.zero() }, 1))
                .collect();
            out.push((CurvePoint::Infinity, 1));
            return Ok(out);
        }
        if g.order() % p as u64 == 0 {
            return self.wild_fixed_points(g, precision);
        }
        let fe = |v: u32| self.field.from_int(v as i64);
        let mut xs: Vec<Option<FieldElement>> = Vec::new();
        if c == 0 {
            xs.push(None);
        }
        // c x^2 + (d - a) x - b
        let one = self.field.one();
        let quad = Poly::new(vec![-fe(b), fe(d) - fe(a), fe(c)], &one);
        xs.extend(quad.roots().into_iter().map(Some));
        let mut out = Vec::new();
        for x in xs {
            let candidates = match x {
                None => vec![CurvePoint::Infinity],
                Some(x) => self.points_above(&x),
            };
            for pt in candidates {
                if self.act(g, &pt)? == pt {
                    out.push((pt, 1));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    fn wild_fixed_points(&self, g: &GroupElement, precision: &series::SeriesConfig) -> Result<Vec<(CurvePoint, u32)>> {
        let p = self.p;
        let [a, b, c, d] = g.matrix();
        // unique fixed point r of the parabolic Moebius map on P^1(F_p)
        let pgl = g.proj_to_pgl();
        let r = if c == 0 {
            None
        } else {
            let fixed: Vec<u32> = (0..p).filter(|&x| pgl.apply(Some(x), p) == Some(x)).collect();
            if fixed.len() != 1 {
                return Err(Error::Invariant(format!("parabolic element {g} has {} affine fixed points", fixed.len())));
            }
            Some(fixed[0])
        };
        if c == 0 && (a != d || b == 0) {
            return Err(Error::Invariant(format!("{g} is not parabolic")));
        }
        // conjugate so the fixed point moves to infinity: x -> 1/(x - r)
        let h = match r {
            None => GroupElement::identity(p)?,
            Some(r) => GroupElement::from_matrix(p, [0, 1, 1, (p - r) % p], false)?,
        };
        let normal = g.conjugate_by(&h)?;
        let mult = series::wild_multiplicity(&normal, precision)?;
        let pt = match r {
            None => CurvePoint::Infinity,
            Some(r) => CurvePoint::Affine { x: self.field.from_int(r as i64), y: self.field.zero() },
        };
        if self.act(g, &pt)? != pt {
            return Err(Error::Invariant(format!("{g} does not fix the point above its Moebius fixed point")));
        }
        Ok(vec![(pt, mult)])
    }

    /// L(g): degree of the fixed-point scheme.
    pub fn fixed_scheme_degree(&self, g: &GroupElement, precision: &series::SeriesConfig) -> Result<u32> {
        Ok(self.fixed_points(g, precision)?.iter().map(|(_, m)| m).sum())
    }
}

/// #C(F_{p^k}) by enumeration.
pub fn curve_points(p: u64, k: usize) -> Result<Vec<CurvePoint>> {
    Ok(RoquetteCurve::new(p, k)?.points())
}

/// Claimed counts: p + 1 over F_p; over F_{p^2}, p + 1 when p = 1 mod 4 and
/// 2p^2 - p + 1 when p = 3 mod 4.
pub fn expected_point_count(p: u64, k: usize) -> Option<u128> {
    let p = p as u128;
    match k {
        1 => Some(p + 1),
        2 if p % 4 == 1 => Some(p + 1),
        2 => Some(2 * p * p - p + 1),
        _ => None,
    }
}

/// Sign of the Frobenius scalar over F_{p^2}: +1 when p = 1 mod 4.
pub fn frobenius_sign(p: u64) -> i8 {
    if p % 4 == 1 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseWeilReport {
    pub p: u64,
    pub count_fp: u128,
    pub count_fp2: u128,
    pub deviation: u128,
    pub bound: u128,
    pub sharp: bool,
    /// sign read off the count: #C(F_{p^2}) = p^2 + 1 - 2g eps p
    pub epsilon_from_count: i8,
    pub epsilon_expected: i8,
}

pub fn hasse_weil_sharpness(p: u64) -> Result<HasseWeilReport> {
    let count_fp = RoquetteCurve::new(p, 1)?.count_points().count;
    let count_fp2 = RoquetteCurve::new(p, 2)?.count_points().count;
    let q1 = p as i128 * p as i128 + 1;
    let trace = q1 - count_fp2 as i128; // = 2g eps p
    let bound = p as u128 * (p as u128 - 1);
    let epsilon_from_count = if trace == bound as i128 {
        1
    } else if trace == -(bound as i128) {
        -1
    } else {
        0
    };
    Ok(HasseWeilReport {
        p,
        count_fp,
        count_fp2,
        deviation: trace.unsigned_abs(),
        bound,
        sharp: trace.unsigned_abs() == bound,
        epsilon_from_count,
        epsilon_expected: frobenius_sign(p),
    })
}

/// The permutation action of all of G on a finite set of points, as index
/// tables. Used for exhaustive action-law, commutation and faithfulness
/// checks.
pub struct ActionTable {
    pub points: Vec<CurvePoint>,
    /// images[g][i] = index of act(g, points[i])
    pub images: Vec<Vec<u32>>,
}

impl ActionTable {
    pub fn build(curve: &RoquetteCurve, group: &RoquetteGroup, points: Vec<CurvePoint>) -> Result<ActionTable> {
        let index: HashMap<CurvePoint, u32> = points.iter().enumerate().map(|(i, p)| (*p, i as u32)).collect();
        let mut images = Vec::with_capacity(group.order());
        for g in group.elements() {
            let row = points
                .iter()
                .map(|pt| {
                    let img = curve.act(g, pt)?;
                    index
                        .get(&img)
                        .copied()
                        .ok_or_else(|| Error::Invariant(format!("image of a point under {g} left the point set")))
                })
                .collect::<Result<Vec<u32>>>()?;
            images.push(row);
        }
        Ok(ActionTable { points, images })
    }

    /// Checks act(gh, P) against both composition orders for every pair
    /// (g, h) in `pairs` and every point. Returns (left_ok, right_ok).
    pub fn composition_orders(&self, group: &RoquetteGroup, pairs: impl Iterator<Item = (usize, usize)>) -> (bool, bool) {
        let mut left = true;
        let mut right = true;
        for (gi, hi) in pairs {
            let g = group.elements()[gi];
            let h = group.elements()[hi];
            let gh = group.index_of(&g.mul(&h).expect("same prime")).expect("closed");
            let (rg, rh, rgh) = (&self.images[gi], &self.images[hi], &self.images[gh]);
            for i in 0..self.points.len() {
                left &= rgh[i] == rg[rh[i] as usize];
                right &= rgh[i] == rh[rg[i] as usize];
            }
            if !left && !right {
                break;
            }
        }
        (left, right)
    }

    pub fn fixes_everything(&self, gi: usize) -> bool {
        self.images[gi].iter().enumerate().all(|(i, &j)| i as u32 == j)
    }
}

/// Tests both composition conventions on every pair of G at p = 5, over
/// C(F_{5^4}).
pub fn determine_convention(p: u64) -> Result<Option<Convention>> {
    let group = RoquetteGroup::enumerate(p)?;
    let curve = RoquetteCurve::new(p, 4)?;
    let table = ActionTable::build(&curve, &group, curve.points())?;
    let n = group.order();
    let (left, right) = table.composition_orders(&group, (0..n).flat_map(|g| (0..n).map(move |h| (g, h))));
    Ok(match (left, right) {
        (true, false) => Some(Convention::Left),
        (false, true) => Some(Convention::Right),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::SeriesConfig;

    #[test]
    fn point_counts() {
        assert_eq!(curve_points(5, 1).unwrap().len(), 6);
        assert_eq!(curve_points(5, 2).unwrap().len(), 6);
        assert_eq!(curve_points(7, 2).unwrap().len(), 92);
        assert_eq!(RoquetteCurve::new(11, 2).unwrap().count_points().count, 232);
        for p in [5u64, 7, 11, 13] {
            let c = RoquetteCurve::new(p, 1).unwrap();
            assert_eq!(c.count_points().count, p as u128 + 1);
            assert_eq!(c.points().len() as u128, p as u128 + 1);
            assert!(c.points().iter().all(|pt| c.is_on_curve(pt)));
        }
    }

    #[test]
    fn hasse_weil_examples() {
        let r5 = hasse_weil_sharpness(5).unwrap();
        assert_eq!((r5.count_fp2, r5.deviation, r5.bound), (6, 20, 20));
        assert_eq!(r5.epsilon_from_count, 1);
        let r7 = hasse_weil_sharpness(7).unwrap();
        assert_eq!((r7.count_fp2, r7.deviation), (92, 42));
        assert_eq!(r7.epsilon_from_count, -1);
        let r11 = hasse_weil_sharpness(11).unwrap();
        assert_eq!((r11.count_fp2, r11.deviation), (232, 110));
        assert!(r11.sharp);
        assert_eq!(r11.epsilon_from_count, r11.epsilon_expected);
    }

    #[test]
    fn action_examples() {
        let c = RoquetteCurve::new(5, 2).unwrap();
        let id = GroupElement::identity(5).unwrap();
        let iota = GroupElement::iota(5).unwrap();
        let u = GroupElement::unipotent(5, 1, false).unwrap();
        for pt in c.points() {
            assert_eq!(c.act(&id, &pt).unwrap(), pt);
            let CurvePoint::Affine { x, y } = pt else { continue };
            assert_eq!(c.act(&iota, &pt).unwrap(), CurvePoint::Affine { x, y: -y });
            assert_eq!(c.act(&u, &pt).unwrap(), CurvePoint::Affine { x: x + c.field().one(), y });
        }
        // infinity goes to the branch point above a/c
        let g = GroupElement::from_matrix(5, [2, 1, 1, 2], false).unwrap();
        let img = c.act(&g, &CurvePoint::Infinity).unwrap();
        let [a, _, cc, _] = g.matrix();
        let expect_x = c.field().from_int(a as i64) / c.field().from_int(cc as i64);
        assert_eq!(img, CurvePoint::Affine { x: expect_x, y: c.field().zero() });
    }

    #[test]
    fn act_rejects_off_curve_and_small_fields() {
        let c = RoquetteCurve::new(5, 2).unwrap();
        let f = c.field();
        let bad = CurvePoint::Affine { x: f.from_int(2), y: f.from_int(1) };
        let id = GroupElement::identity(5).unwrap();
        assert_eq!(c.act(&id, &bad).unwrap_err(), Error::NotOnCurve);
        let c1 = RoquetteCurve::new(5, 1).unwrap();
        assert!(matches!(c1.act(&id, &CurvePoint::Infinity), Err(Error::FieldTooSmall(_))));
    }

    #[test]
    fn closure_on_fp2_points_p5() {
        let group = RoquetteGroup::enumerate(5).unwrap();
        let c = RoquetteCurve::new(5, 2).unwrap();
        let pts = c.points();
        for g in group.elements() {
            for pt in &pts {
                let img = c.act(g, pt).unwrap();
                assert!(c.is_on_curve(&img));
                // branch points go to branch points
                assert_eq!(img.is_ramification(), pt.is_ramification());
            }
        }
    }

    #[test]
    fn convention_is_left_at_p5() {
        assert_eq!(determine_convention(5).unwrap(), Some(COMPOSITION));
    }

    #[test]
    fn iota_central_and_action_faithful_p5() {
        let group = RoquetteGroup::enumerate(5).unwrap();
        let c = RoquetteCurve::new(5, 4).unwrap();
        let table = ActionTable::build(&c, &group, c.points()).unwrap();
        let iota = group.index_of(&group.iota()).unwrap();
        let faithful: Vec<usize> = (0..group.order()).filter(|&g| table.fixes_everything(g)).collect();
        assert_eq!(faithful, vec![group.index_of(&group.identity()).unwrap()]);
        let n = group.order();
        let (left, _) = table.composition_orders(&group, (0..n).flat_map(|g| [(g, iota), (iota, g)]));
        assert!(left);
        for (gi, g) in group.elements().iter().enumerate() {
            let a = g.mul(&group.iota()).unwrap();
            let b = group.iota().mul(g).unwrap();
            assert_eq!(a, b, "iota commutes with element {gi}");
        }
    }

    #[test]
    fn fixed_point_examples() {
        let cfg = SeriesConfig::default_for(5);
        let c = RoquetteCurve::new(5, 4).unwrap();
        let iota = GroupElement::iota(5).unwrap();
        let fp = c.fixed_points(&iota, &cfg).unwrap();
        assert_eq!(fp.len(), 6);
        assert!(fp.iter().all(|(pt, m)| *m == 1 && pt.is_ramification()));
        assert_eq!(c.fixed_scheme_degree(&iota, &cfg).unwrap(), 6);
        let u = GroupElement::unipotent(5, 1, false).unwrap();
        assert_eq!(c.fixed_points(&u, &cfg).unwrap(), vec![(CurvePoint::Infinity, 3)]);
        let u2 = GroupElement::unipotent(5, 1, true).unwrap();
        assert_eq!(c.fixed_points(&u2, &cfg).unwrap(), vec![(CurvePoint::Infinity, 1)]);
        assert_eq!(c.fixed_points(&GroupElement::identity(5).unwrap(), &cfg).unwrap_err(), Error::IdentityInput);
    }

    #[test]
    fn fixed_scheme_degree_is_a_class_function_p5() {
        let cfg = SeriesConfig::default_for(5);
        let group = RoquetteGroup::enumerate(5).unwrap();
        let classes = crate::group::ConjugacyClasses::compute(&group);
        let c = RoquetteCurve::new(5, 4).unwrap();
        for class in classes.classes() {
            if class.representative.is_identity() {
                continue;
            }
            let l = c.fixed_scheme_degree(&class.representative, &cfg).unwrap();
            for &m in &class.members {
                assert_eq!(c.fixed_scheme_degree(&group.elements()[m], &cfg).unwrap(), l);
            }
        }
    }
}
