//! The automorphism group of the Roquette curve.
//!
//! Elements of the fibre product G~ = {(A, lambda) in GL_2(F_p) x F_{p^2}^x :
//! det A = lambda^2} are reduced modulo the scalar kernel
//! {(mu I, (mu|p) mu) : mu in F_p^x}. The normal form scales A so that its
//! first nonzero entry (row-major) is 1; exactly one kernel element does
//! this, so the normal form is a bijection onto G = G~ / kernel.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ff::{fp_poly, Field, FieldElement};

/// 2x2 matrix over F_p, row-major (a, b, c, d).
pub type Mat2 = [u32; 4];

fn mat_mul(x: &Mat2, y: &Mat2, p: u32) -> Mat2 {
    let p = p as u64;
    let [a, b, c, d] = x.map(|v| v as u64);
    let [e, f, g, h] = y.map(|v| v as u64);
    [
        ((a * e + b * g) % p) as u32,
        ((a * f + b * h) % p) as u32,
        ((c * e + d * g) % p) as u32,
        ((c * f + d * h) % p) as u32,
    ]
}

pub fn mat_det(m: &Mat2, p: u32) -> u32 {
    let p = p as u64;
    let [a, b, c, d] = m.map(|v| v as u64);
    ((a * d % p + p - b * c % p) % p) as u32
}

fn mat_scale(m: &Mat2, s: u32, p: u32) -> Mat2 {
    m.map(|v| (v as u64 * s as u64 % p as u64) as u32)
}

fn mat_adjugate(m: &Mat2, p: u32) -> Mat2 {
    let [a, b, c, d] = *m;
    [d, (p - b) % p, (p - c) % p, a]
}

/// An element (A, lambda) of the fibre product G~, not reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GtElement {
    pub matrix: Mat2,
    pub lambda: FieldElement,
}

impl GtElement {
    /// Validates det A != 0 and lambda^2 = det A with lambda in F_{p^2}.
    pub fn new(matrix: Mat2, lambda: FieldElement) -> Result<Self> {
        let field = lambda.field();
        let p = field.p();
        if field.degree() != 2 {
            return Err(Error::InvalidGroupElement(format!("lambda must lie in F_{p}^2, got {field}")));
        }
        let matrix = matrix.map(|v| v % p);
        let det = mat_det(&matrix, p);
        if det == 0 {
            return Err(Error::InvalidGroupElement("singular matrix".into()));
        }
        if lambda.square() != field.from_int(det as i64) {
            return Err(Error::InvalidGroupElement("lambda^2 != det(A)".into()));
        }
        Ok(GtElement { matrix, lambda })
    }

    pub fn p(&self) -> u32 {
        self.lambda.field().p()
    }

    pub fn mul(&self, other: &GtElement) -> Result<GtElement> {
        if self.p() != other.p() {
            return Err(Error::PrimeMismatch(self.p(), other.p()));
        }
        Ok(GtElement {
            matrix: mat_mul(&self.matrix, &other.matrix, self.p()),
            lambda: self.lambda * other.lambda,
        })
    }

    /// Image in G.
    pub fn canonicalize(&self) -> GroupElement {
        let p = self.p();
        let field = self.lambda.field();
        let first = *self.matrix.iter().find(|&&v| v != 0).expect("invertible matrix");
        let mu = fp_poly::inv_mod_p(first, p);
        let mu_el = field.from_int(mu as i64);
        let legendre = fp_poly::pow_mod_p(mu, (p as u64 - 1) / 2, p);
        let sign = if legendre == 1 { field.one() } else { -field.one() };
        GroupElement(GtElement {
            matrix: mat_scale(&self.matrix, mu, p),
            lambda: sign * mu_el * self.lambda,
        })
    }
}

/// An element of G = Aut(C), stored in normal form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement(GtElement);

impl GroupElement {
    /// Builds the class of (A, lambda).
    pub fn new(matrix: Mat2, lambda: FieldElement) -> Result<Self> {
        Ok(GtElement::new(matrix, lambda)?.canonicalize())
    }

    /// The class of (A, lambda) with lambda the canonical square root of
    /// det A in F_{p^2}, optionally negated.
    pub fn from_matrix(p: u32, matrix: Mat2, negate_lambda: bool) -> Result<Self> {
        let f2 = Field::new(p as u64, 2)?;
        let det = mat_det(&matrix.map(|v| v % p), p);
        let root = f2
            .from_int(det as i64)
            .sqrt()
            .ok_or_else(|| Error::InvalidGroupElement("singular matrix".into()))?;
        GroupElement::new(matrix, if negate_lambda { -root } else { root })
    }

    pub fn identity(p: u32) -> Result<Self> {
        GroupElement::from_matrix(p, [1, 0, 0, 1], false)
    }

    /// The hyperelliptic involution, class of (I, -1).
    pub fn iota(p: u32) -> Result<Self> {
        GroupElement::from_matrix(p, [1, 0, 0, 1], true)
    }

    /// The unipotent element ([[1, u], [0, 1]], lambda) with lambda = +-1.
    pub fn unipotent(p: u32, u: u32, negate_lambda: bool) -> Result<Self> {
        GroupElement::from_matrix(p, [1, u % p, 0, 1], negate_lambda)
    }

    pub fn representative(&self) -> &GtElement {
        &self.0
    }

    pub fn p(&self) -> u32 {
        self.0.p()
    }

    pub fn matrix(&self) -> Mat2 {
        self.0.matrix
    }

    pub fn lambda(&self) -> FieldElement {
        self.0.lambda
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        Ok(self.0.mul(&other.0)?.canonicalize())
    }

    pub fn inv(&self) -> GroupElement {
        let p = self.p();
        let det_inv = fp_poly::inv_mod_p(mat_det(&self.0.matrix, p), p);
        GtElement {
            matrix: mat_scale(&mat_adjugate(&self.0.matrix, p), det_inv, p),
            lambda: self.0.lambda.inv().expect("lambda is a unit"),
        }
        .canonicalize()
    }

    pub fn is_identity(&self) -> bool {
        self.0.matrix == [1, 0, 0, 1] && self.0.lambda.is_one()
    }

    pub fn pow(&self, n: u64) -> GroupElement {
        let mut acc = GroupElement::identity(self.p()).expect("valid prime");
        for _ in 0..n {
            acc = acc.mul(self).expect("same prime");
        }
        acc
    }

    /// Element order by successive multiplication.
    pub fn order(&self) -> u64 {
        let mut cur = *self;
        let mut n = 1;
        while !cur.is_identity() {
            cur = cur.mul(self).expect("same prime");
            n += 1;
        }
        n
    }

    pub fn conjugate_by(&self, h: &GroupElement) -> Result<GroupElement> {
        h.mul(self)?.mul(&h.inv())
    }

    /// Image in PGL_2(F_p); the normal-form matrix already is the
    /// projective normal form.
    pub fn proj_to_pgl(&self) -> PglElement {
        PglElement(self.0.matrix)
    }

    /// Whether the matrix part is a multiple of the identity.
    pub fn has_scalar_matrix(&self) -> bool {
        self.0.matrix == [1, 0, 0, 1]
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.0.matrix, self.0.lambda).cmp(&(other.0.matrix, other.0.lambda))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0.matrix;
        write!(f, "([[{a},{b}],[{c},{d}]], {})", self.0.lambda)
    }
}

/// Element of PGL_2(F_p) in normal form (first nonzero entry 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PglElement(pub Mat2);

impl PglElement {
    pub fn normalize(m: Mat2, p: u32) -> PglElement {
        let first = *m.iter().find(|&&v| v != 0).expect("invertible matrix");
        PglElement(mat_scale(&m, fp_poly::inv_mod_p(first, p), p))
    }

    pub fn mul(&self, other: &PglElement, p: u32) -> PglElement {
        PglElement::normalize(mat_mul(&self.0, &other.0, p), p)
    }

    /// Moebius action on P^1(F_p); `None` is the point at infinity.
    pub fn apply(&self, x: Option<u32>, p: u32) -> Option<u32> {
        let [a, b, c, d] = self.0.map(|v| v as u64);
        let pp = p as u64;
        let (num, den) = match x {
            None => (a, c),
            Some(x) => ((a * x as u64 + b) % pp, (c * x as u64 + d) % pp),
        };
        (den != 0).then(|| (num * fp_poly::inv_mod_p(den as u32, p) as u64 % pp) as u32)
    }
}

/// The full group G, enumerated.
pub struct RoquetteGroup {
    p: u32,
    field_p2: Field,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

impl RoquetteGroup {
    /// All 2p(p^2 - 1) elements: normal-form matrices in lexicographic
    /// order, each followed by its two square roots of the determinant.
    pub fn enumerate(p: u64) -> Result<Arc<RoquetteGroup>> {
        let field_p2 = Field::new(p, 2)?;
        let p = p as u32;
        let mut elements = Vec::with_capacity(2 * (p as usize) * (p as usize * p as usize - 1));
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        let m = [a, b, c, d];
                        if m.iter().find(|&&v| v != 0) != Some(&1) {
                            continue;
                        }
                        let det = mat_det(&m, p);
                        if det == 0 {
                            continue;
                        }
                        let r = field_p2.from_int(det as i64).sqrt().expect("F_p is square in F_p^2");
                        for lambda in [r, -r] {
                            elements.push(GroupElement(GtElement { matrix: m, lambda }));
                        }
                    }
                }
            }
        }
        let index = elements.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        Ok(Arc::new(RoquetteGroup { p, field_p2, elements, index }))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field_p2(&self) -> Field {
        self.field_p2
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// 2p(p^2 - 1).
    pub fn expected_order(p: u64) -> u64 {
        2 * p * (p * p - 1)
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.p).expect("valid prime")
    }

    pub fn iota(&self) -> GroupElement {
        GroupElement::iota(self.p).expect("valid prime")
    }

    /// Closure under multiplication, checked on every pair.
    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|g| self.elements.iter().all(|h| self.index.contains_key(&g.mul(h).expect("same prime"))))
    }

    /// u, iota, diag(r, 1) for a primitive root r, and x -> 1/x. Their images
    /// generate PGL_2(F_p) (Borel subgroup plus a Weyl element).
    pub fn standard_generators(&self) -> Vec<GroupElement> {
        let p = self.p;
        let r = (2..p).find(|&r| (1..p - 1).all(|k| pow_mod_u32(r, k, p) != 1)).expect("primitive root");
        vec![
            GroupElement::unipotent(p, 1, false).expect("valid prime"),
            self.iota(),
            GroupElement::from_matrix(p, [r, 0, 0, 1], false).expect("valid"),
            GroupElement::from_matrix(p, [0, 1, 1, 0], false).expect("valid"),
        ]
    }

    /// Breadth-first search from 1 by right multiplication with `gens`.
    /// Returns the number of elements reached, or None if the search leaves
    /// the enumerated set. A return value equal to `order()` shows the set is
    /// the group generated by `gens`, hence closed.
    pub fn reached_from_generators(&self, gens: &[GroupElement]) -> Option<usize> {
        let n = self.elements.len();
        let mut seen = vec![false; n];
        let start = self.index_of(&self.identity())?;
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let j = self.index_of(&self.elements[i].mul(g).ok()?)?;
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        Some(count)
    }

    /// The p-Sylow subgroup N generated by ([[1,1],[0,1]], 1).
    pub fn sylow_p(&self) -> Subgroup {
        let u = GroupElement::unipotent(self.p, 1, false).expect("valid prime");
        let mut elements = vec![self.identity()];
        let mut cur = u;
        while !cur.is_identity() {
            elements.push(cur);
            cur = cur.mul(&u).expect("same prime");
        }
        Subgroup { generator: u, elements }
    }

    /// Elements mapping to the identity of PGL_2(F_p).
    pub fn kernel_of_projection(&self) -> Vec<GroupElement> {
        self.elements.iter().filter(|g| g.has_scalar_matrix()).copied().collect()
    }

    pub fn projection_image_size(&self) -> usize {
        let mut imgs: Vec<PglElement> = self.elements.iter().map(|g| g.proj_to_pgl()).collect();
        imgs.sort();
        imgs.dedup();
        imgs.len()
    }
}

fn pow_mod_u32(b: u32, e: u32, p: u32) -> u32 {
    (0..e).fold(1u64, |acc, _| acc * b as u64 % p as u64) as u32
}

/// The cyclic subgroup generated by one element.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub generator: GroupElement,
    pub elements: Vec<GroupElement>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.contains(g)
    }
}

/// PGL_2(F_p) maps each ordered triple of distinct points of P^1(F_p) to
/// each other such triple exactly once: the map g -> (g(0), g(1), g(inf))
/// is a bijection onto distinct triples.
pub fn pgl_sharply_three_transitive(p: u32) -> bool {
    let mut seen = std::collections::HashSet::new();
    let mut count = 0usize;
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = [a, b, c, d];
                    if m.iter().find(|&&v| v != 0) != Some(&1) || mat_det(&m, p) == 0 {
                        continue;
                    }
                    let g = PglElement(m);
                    let t = (g.apply(Some(0), p), g.apply(Some(1), p), g.apply(None, p));
                    if t.0 == t.1 || t.1 == t.2 || t.0 == t.2 || !seen.insert(t) {
                        return false;
                    }
                    count += 1;
                }
            }
        }
    }
    let n = p as usize + 1;
    count == n * (n - 1) * (n - 2) && seen.len() == count
}

/// All lambda in F_{p^2}^x with lambda^2 in F_p^x, sorted.
pub fn sqrt_roots_group(p: u64) -> Result<Vec<FieldElement>> {
    let f2 = Field::new(p, 2)?;
    Ok(f2.elements().filter(|l| !l.is_zero() && l.square().is_in_prime_field()).collect())
}

#[derive(Debug, Clone)]
pub struct ConjClass {
    pub representative: GroupElement,
    /// indices into the group enumeration, ascending
    pub members: Vec<usize>,
    pub size: usize,
    pub element_order: u64,
}

/// The partition of G into conjugacy classes, computed by brute force.
pub struct ConjugacyClasses {
    group: Arc<RoquetteGroup>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn compute(group: &Arc<RoquetteGroup>) -> Arc<ConjugacyClasses> {
        let n = group.order();
        let inverses: Vec<GroupElement> = group.elements.iter().map(|g| g.inv()).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let x = group.elements[i];
            let id = classes.len();
            let mut members = Vec::new();
            for (h, h_inv) in group.elements.iter().zip(&inverses) {
                let c = h.mul(&x).and_then(|hx| hx.mul(h_inv)).expect("same prime");
                let j = group.index[&c];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                }
            }
            members.sort_unstable();
            classes.push(ConjClass {
                representative: x,
                size: members.len(),
                members,
                element_order: x.order(),
            });
        }
        Arc::new(ConjugacyClasses { group: Arc::clone(group), classes, class_of })
    }

    pub fn group(&self) -> &Arc<RoquetteGroup> {
        &self.group
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, g: &GroupElement) -> Option<usize> {
        self.group.index_of(g).map(|i| self.class_of[i])
    }

    pub fn class_of_element_index(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn identity_class(&self) -> usize {
        self.class_index(&self.group.identity()).expect("identity enumerated")
    }

    pub fn iota_class(&self) -> usize {
        self.class_index(&self.group.iota()).expect("iota enumerated")
    }

    /// Class of ([[1,1],[0,1]], 1), which holds every element of order p.
    pub fn unipotent_class(&self) -> usize {
        let u = GroupElement::unipotent(self.group.p, 1, false).expect("valid prime");
        self.class_index(&u).expect("u enumerated")
    }

    /// Classes whose elements have order divisible by p.
    pub fn is_wild_class(&self, c: usize) -> bool {
        self.classes[c].element_order % self.group.p as u64 == 0
    }
}

/// Conjugator-free membership check: all elements of order p lie in one
/// class. Returns the class index when true.
pub fn order_p_elements_single_class(classes: &ConjugacyClasses) -> Option<usize> {
    let p = classes.group().p() as u64;
    let mut found: Option<usize> = None;
    for (i, c) in classes.classes().iter().enumerate() {
        if c.element_order == p {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_roots_group_sizes_and_cyclicity() {
        for p in [5u64, 7] {
            let roots = sqrt_roots_group(p).unwrap();
            assert_eq!(roots.len() as u64, 2 * (p - 1));
            assert!(roots.iter().all(|l| { let s = l.square(); s.frobenius(1) == s }));
            // cyclic: some element has order 2(p-1) inside the subgroup
            assert!(roots.iter().any(|l| l.multiplicative_order() == Some(2 * (p as u128 - 1))));
            // closed under multiplication
            for a in &roots {
                for b in &roots {
                    assert!(roots.contains(&(*a * *b)));
                }
            }
        }
    }

    #[test]
    fn basic_elements() {
        let p = 5;
        let id = GroupElement::identity(p).unwrap();
        let iota = GroupElement::iota(p).unwrap();
        let u = GroupElement::unipotent(p, 1, false).unwrap();
        assert!(id.is_identity());
        assert_eq!(iota.order(), 2);
        assert_eq!(u.order(), 5);
        assert_eq!(GroupElement::unipotent(p, 1, true).unwrap().order(), 10);
        let g = GroupElement::from_matrix(p, [2, 1, 3, 3], true).unwrap();
        assert!(g.mul(&g.inv()).unwrap().is_identity());
        assert!(g.inv().mul(&g).unwrap().is_identity());
    }

    #[test]
    fn unipotent_order_matches_matrix_power_oracle() {
        for p in [5u32, 7, 11] {
            let m = [1u32, 1, 0, 1];
            let mut acc = m;
            let mut n = 1;
            while acc != [1, 0, 0, 1] {
                acc = mat_mul(&acc, &m, p);
                n += 1;
            }
            assert_eq!(n, p as u64);
            assert_eq!(GroupElement::unipotent(p, 1, false).unwrap().order(), n);
        }
    }

    #[test]
    fn kernel_scalars_are_identified() {
        let f2 = Field::new(7, 2).unwrap();
        for mu in 1..7u32 {
            let mu_el = f2.from_int(mu as i64);
            let leg = f2.prime_field().from_int(mu as i64).legendre().unwrap();
            let lam = if leg == 1 { mu_el } else { -mu_el };
            let g = GroupElement::new([mu, 0, 0, mu], lam).unwrap();
            assert!(g.is_identity(), "mu = {mu}");
        }
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let group = RoquetteGroup::enumerate(5).unwrap();
        for g in group.elements() {
            assert_eq!(g.representative().canonicalize(), *g);
        }
    }

    #[test]
    fn rejects_bad_elements() {
        let f2 = Field::new(5, 2).unwrap();
        assert!(GtElement::new([1, 1, 1, 1], f2.one()).is_err());
        // det 2 is not 1^2
        assert!(GtElement::new([2, 0, 0, 1], f2.one()).is_err());
        let f7 = Field::new(7, 2).unwrap();
        let g5 = GroupElement::identity(5).unwrap();
        let g7 = GroupElement::new([1, 0, 0, 1], f7.one()).unwrap();
        assert_eq!(g5.mul(&g7).unwrap_err(), Error::PrimeMismatch(5, 7));
    }

    #[test]
    fn enumeration_p5() {
        let group = RoquetteGroup::enumerate(5).unwrap();
        assert_eq!(group.order(), 240);
        assert!(group.is_closed());
        // |G~| = 2 |GL_2(F_5)| = 960 maps 4-to-1
        let gl2 = (25 - 1) * (25 - 5);
        assert_eq!(2 * gl2 / 4, 240);
        assert_eq!(group.kernel_of_projection().len(), 2);
        assert_eq!(group.projection_image_size(), 120);
        assert_eq!(group.iota().proj_to_pgl(), PglElement([1, 0, 0, 1]));
        for g in group.elements() {
            assert_eq!(240 % g.order(), 0);
        }
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let group = RoquetteGroup::enumerate(5).unwrap();
        for g in group.elements().iter().step_by(7) {
            for h in group.elements() {
                assert_eq!(g.mul(h).unwrap().proj_to_pgl(), g.proj_to_pgl().mul(&h.proj_to_pgl(), 5));
            }
        }
    }

    #[test]
    fn classes_p5() {
        let group = RoquetteGroup::enumerate(5).unwrap();
        let cc = ConjugacyClasses::compute(&group);
        let total: usize = cc.classes().iter().map(|c| c.size).sum();
        assert_eq!(total, 240);
        assert_eq!(cc.classes()[cc.identity_class()].size, 1);
        assert_eq!(cc.classes()[cc.iota_class()].size, 1);
        for c in cc.classes() {
            assert_eq!(240 % c.size, 0);
            assert_eq!(c.representative, group.elements()[c.members[0]]);
        }
        let up = order_p_elements_single_class(&cc).expect("single class of order-p elements");
        assert_eq!(up, cc.unipotent_class());
        assert_eq!(cc.classes()[up].size, 24);
    }

    #[test]
    fn sylow_subgroup() {
        let group = RoquetteGroup::enumerate(5).unwrap();
        let n = group.sylow_p();
        assert_eq!(n.order(), 5);
        assert_eq!(n.generator, GroupElement::unipotent(5, 1, false).unwrap());
        // N meets each conjugate trivially or equals it
        for h in group.elements() {
            let conj: Vec<_> = n.elements.iter().map(|s| s.conjugate_by(h).unwrap()).collect();
            let common = conj.iter().filter(|s| n.contains(s)).count();
            assert!(common == 1 || common == 5);
        }
    }

    #[test]
    fn sharply_three_transitive() {
        assert!(pgl_sharply_three_transitive(5));
        assert!(pgl_sharply_three_transitive(7));
    }

    #[test]
    fn generators_reach_everything() {
        for p in [5u64, 11] {
            let g = RoquetteGroup::enumerate(p).unwrap();
            let gens = g.standard_generators();
            assert_eq!(g.reached_from_generators(&gens), Some(g.order()));
            assert_eq!(g.reached_from_generators(&gens[..1]), Some(p as usize));
        }
    }
}
