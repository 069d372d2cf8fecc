//! Class functions on G, the Lefschetz character on H^1, and the
//! Frobenius-Schur obstruction verdict.

use std::fmt::{Debug, Display};
use std::sync::Arc;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::curve::RoquetteCurve;
use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, GroupElement};
use crate::series::SeriesConfig;

/// Integer types usable as the numerator/denominator type of class
/// function values.
pub trait CharScalar: Clone + Integer + Signed + FromPrimitive + ToPrimitive + Debug + Display {}

impl<T: Clone + Integer + Signed + FromPrimitive + ToPrimitive + Debug + Display> CharScalar for T {}

fn from_usize<T: CharScalar>(n: usize) -> T {
    T::from_usize(n).expect("count fits the scalar type")
}

/// A function on conjugacy classes with exact rational values.
#[derive(Clone)]
pub struct ClassFunction<T: CharScalar> {
    classes: Arc<ConjugacyClasses>,
    values: Vec<Ratio<T>>,
}

impl<T: CharScalar> ClassFunction<T> {
    pub fn new(classes: Arc<ConjugacyClasses>, values: Vec<Ratio<T>>) -> Result<Self> {
        if values.len() != classes.len() {
            return Err(Error::ClassListMismatch);
        }
        Ok(ClassFunction { classes, values })
    }

    pub fn from_integers(classes: Arc<ConjugacyClasses>, values: Vec<T>) -> Result<Self> {
        ClassFunction::new(classes, values.into_iter().map(Ratio::from_integer).collect())
    }

    pub fn trivial(classes: Arc<ConjugacyClasses>) -> Self {
        let values = vec![Ratio::from_integer(T::one()); classes.len()];
        ClassFunction { classes, values }
    }

    pub fn classes(&self) -> &Arc<ConjugacyClasses> {
        &self.classes
    }

    pub fn values(&self) -> &[Ratio<T>] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Ratio<T> {
        &self.values[class]
    }

    pub fn value_at(&self, g: &GroupElement) -> Option<&Ratio<T>> {
        self.classes.class_index(g).map(|c| &self.values[c])
    }

    pub fn degree(&self) -> &Ratio<T> {
        &self.values[self.classes.identity_class()]
    }

    pub fn is_integer_valued(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    pub fn integer_values(&self) -> Option<Vec<T>> {
        self.values.iter().map(|v| v.is_integer().then(|| v.to_integer())).collect()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.classes, &other.classes) {
            Ok(())
        } else {
            Err(Error::ClassListMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(ClassFunction { classes: Arc::clone(&self.classes), values })
    }

    pub fn scale(&self, c: &Ratio<T>) -> Self {
        let values = self.values.iter().map(|a| a.clone() * c.clone()).collect();
        ClassFunction { classes: Arc::clone(&self.classes), values }
    }

    /// Elements g with chi(g) = chi(1).
    pub fn kernel(&self) -> Vec<GroupElement> {
        let deg = self.degree();
        let group = self.classes.group();
        self.classes
            .classes()
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| *v == deg)
            .flat_map(|(c, _)| c.members.iter().map(|&i| group.elements()[i]))
            .collect()
    }
}

impl<T: CharScalar> PartialEq for ClassFunction<T> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.classes, &other.classes) && self.values == other.values
    }
}

impl<T: CharScalar> Debug for ClassFunction<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.values.iter().map(|v| v.to_string())).finish()
    }
}

/// <a, b> = (1/|G|) sum_g a(g) b(g). Values are rational so complex
/// conjugation is the identity.
pub fn inner_product<T: CharScalar>(a: &ClassFunction<T>, b: &ClassFunction<T>) -> Result<Ratio<T>> {
    a.check_same(b)?;
    let mut acc = Ratio::zero();
    for ((class, x), y) in a.classes.classes().iter().zip(&a.values).zip(&b.values) {
        acc = acc + x.clone() * y.clone() * Ratio::from_integer(from_usize::<T>(class.size));
    }
    Ok(acc / Ratio::from_integer(from_usize::<T>(a.classes.group().order())))
}

/// (1/|G|) sum_g chi(g^2).
pub fn fs_indicator<T: CharScalar>(chi: &ClassFunction<T>) -> Ratio<T> {
    let classes = &chi.classes;
    let mut acc = Ratio::zero();
    for class in classes.classes() {
        let g = class.representative;
        let sq = g.mul(&g).expect("same prime");
        let c = classes.class_index(&sq).expect("closed under squaring");
        acc = acc + chi.values[c].clone() * Ratio::from_integer(from_usize::<T>(class.size));
    }
    acc / Ratio::from_integer(from_usize::<T>(classes.group().order()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowRestriction<T> {
    /// common value of chi on the non-identity elements of the Sylow p-subgroup
    pub n_chi: T,
    /// (chi(1) + (p - 1) n_chi) / p
    pub trivial_multiplicity: T,
    /// (chi(1) - n_chi) / p, for each non-trivial character of C_p
    pub nontrivial_multiplicity: T,
    /// (1/p) sum over the subgroup, computed directly
    pub direct_trivial_multiplicity: T,
}

/// Decomposes chi restricted to the Sylow p-subgroup N = <u>.
pub fn sylow_restriction<T: CharScalar>(chi: &ClassFunction<T>) -> Result<SylowRestriction<T>> {
    let group = chi.classes.group();
    let sylow = group.sylow_p();
    let p = T::from_u32(group.p()).expect("p fits");
    let mut n_chi: Option<Ratio<T>> = None;
    let mut total = Ratio::zero();
    for s in &sylow.elements {
        let v = chi.value_at(s).ok_or_else(|| Error::Internal("Sylow element not enumerated".into()))?;
        total = total + v.clone();
        if s.is_identity() {
            continue;
        }
        match &n_chi {
            None => n_chi = Some(v.clone()),
            Some(n) if n != v => {
                return Err(Error::Invariant("chi is not constant on the non-identity Sylow elements".into()))
            }
            Some(_) => {}
        }
    }
    let n_chi = n_chi.ok_or_else(|| Error::Internal("trivial Sylow subgroup".into()))?;
    let deg = chi.degree().clone();
    let pr = Ratio::from_integer(p.clone());
    let trivial = (deg.clone() + (pr.clone() - Ratio::from_integer(T::one())) * n_chi.clone()) / pr.clone();
    let nontrivial = (deg - n_chi.clone()) / pr.clone();
    let direct = total / pr;
    let as_count = |r: &Ratio<T>, what: &str| -> Result<T> {
        if r.is_integer() && !r.is_negative() {
            Ok(r.to_integer())
        } else {
            Err(Error::NonIntegral(format!("{what} = {r}")))
        }
    };
    let out = SylowRestriction {
        n_chi: if n_chi.is_integer() {
            n_chi.to_integer()
        } else {
            return Err(Error::NonIntegral(format!("n_chi = {n_chi}")));
        },
        trivial_multiplicity: as_count(&trivial, "trivial multiplicity")?,
        nontrivial_multiplicity: as_count(&nontrivial, "non-trivial multiplicity")?,
        direct_trivial_multiplicity: as_count(&direct, "direct trivial multiplicity")?,
    };
    if out.direct_trivial_multiplicity != out.trivial_multiplicity {
        return Err(Error::Invariant("closed-form and direct Sylow multiplicities disagree".into()));
    }
    Ok(out)
}

/// chi(g) = 2 - L(g) for g != 1 and chi(1) = 2g = p - 1.
pub fn lefschetz_character(classes: &Arc<ConjugacyClasses>, cfg: &SeriesConfig) -> Result<ClassFunction<i64>> {
    let p = classes.group().p();
    let curve = RoquetteCurve::new(p as u64, 4)?;
    let values = classes
        .classes()
        .iter()
        .map(|c| {
            if c.representative.is_identity() {
                Ok(p as i64 - 1)
            } else {
                Ok(2 - curve.fixed_scheme_degree(&c.representative, cfg)? as i64)
            }
        })
        .collect::<Result<Vec<i64>>>()?;
    ClassFunction::from_integers(Arc::clone(classes), values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SchurIndexWitness {
    Two,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftVerdict {
    Obstructed,
    NotDetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    pub integer_valued: bool,
    pub irreducible: bool,
    /// None when the indicator is not an integer
    pub fs_indicator: Option<i64>,
    pub schur_index_witness: SchurIndexWitness,
    pub rationality_class_nontrivial: bool,
    pub lifts: LiftVerdict,
}

/// A rational-valued irreducible character with indicator -1 has Schur
/// index 2 over Q, so it is not realised over Q; the verdict records this.
pub fn schur_obstruction_verdict<T: CharScalar>(chi: &ClassFunction<T>) -> Result<ObstructionVerdict> {
    let integer_valued = chi.is_integer_valued();
    let irreducible = inner_product(chi, chi)? == Ratio::from_integer(T::one());
    let nu = fs_indicator(chi);
    let fs = nu.is_integer().then(|| nu.to_integer().to_i64()).flatten();
    let witnessed = integer_valued && irreducible && fs == Some(-1);
    Ok(ObstructionVerdict {
        integer_valued,
        irreducible,
        fs_indicator: fs,
        schur_index_witness: if witnessed { SchurIndexWitness::Two } else { SchurIndexWitness::Unknown },
        rationality_class_nontrivial: witnessed,
        lifts: if witnessed { LiftVerdict::Obstructed } else { LiftVerdict::NotDetermined },
    })
}
