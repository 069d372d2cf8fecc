//! J[ell] over F_{p^{2m}}, the matrices of G acting on it, and the integer
//! character recovered from traces mod several ell.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::character::ClassFunction;
use crate::curve::frobenius_sign;
use crate::error::{Error, Result};
use crate::ff::{is_prime, MAX_DEGREE};
use crate::group::{ConjugacyClasses, GroupElement};

use super::{act_on_class, Jacobian, MumfordDivisor};

pub const DEFAULT_ELL_BOUND: u128 = 10_000;

/// Multiplicative order of eps p modulo ell.
pub fn torsion_degree(p: u64, ell: u64) -> Result<u32> {
    if ell == p {
        return Err(Error::EllEqualsP(ell));
    }
    if !is_prime(ell) {
        return Err(Error::BadEll(ell));
    }
    let ep = (frobenius_sign(p) as i64 * p as i64).rem_euclid(ell as i64) as u64;
    let mut acc = ep % ell;
    let mut m = 1;
    while acc != 1 % ell {
        acc = acc * ep % ell;
        m += 1;
    }
    Ok(m)
}

fn ell_power_size(ell: u64, genus: u32) -> u128 {
    (ell as u128).checked_pow(2 * genus).unwrap_or(u128::MAX)
}

/// Odd primes ell != p with ell^(2g) <= bound, smallest first, taken until
/// their product exceeds 2(p - 1). May come back short when the bound is
/// too small for that.
pub fn default_ells(p: u64, bound: u128) -> Vec<u64> {
    let g = ((p - 1) / 2) as u32;
    let mut out = Vec::new();
    let mut product = 1u64;
    let mut ell = 3;
    while ell_power_size(ell, g) <= bound && product <= 2 * (p - 1) {
        if ell != p && is_prime(ell) {
            out.push(ell);
            product *= ell;
        }
        ell += 2;
    }
    out
}

pub struct TorsionBasis {
    ell: u64,
    m: u32,
    jac: Jacobian,
    basis: Vec<MumfordDivisor>,
    coords: HashMap<MumfordDivisor, Vec<u32>>,
    attempts: usize,
}

impl std::fmt::Debug for TorsionBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TorsionBasis")
            .field("ell", &self.ell)
            .field("m", &self.m)
            .field("field", &self.jac.field())
            .field("basis", &self.basis)
            .field("span_size", &self.coords.len())
            .finish()
    }
}

impl TorsionBasis {
    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn jacobian(&self) -> &Jacobian {
        &self.jac
    }

    pub fn basis(&self) -> &[MumfordDivisor] {
        &self.basis
    }

    pub fn span_size(&self) -> usize {
        self.coords.len()
    }

    /// Random classes drawn before the basis was complete.
    pub fn attempts(&self) -> usize {
        self.attempts
    }

    /// Coordinates in the basis, by lookup in the enumerated span.
    pub fn coordinates(&self, d: &MumfordDivisor) -> Result<&[u32]> {
        self.coords.get(d).map(|v| v.as_slice()).ok_or(Error::NotInSpan)
    }
}

/// A basis of J[ell] over F_{p^{2m}}, m = ord_ell(eps p), drawn from a
/// ChaCha stream fixed by (seed, ell).
pub fn torsion_basis(p: u64, ell: u64, seed: u64, bound: u128) -> Result<TorsionBasis> {
    let m = torsion_degree(p, ell)?;
    let g = ((p - 1) / 2) as u32;
    let size = ell_power_size(ell, g);
    if size > bound {
        return Err(Error::BoundExceeded { size, bound });
    }
    let k = 2 * m as usize;
    if k > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(k));
    }
    let jac = Jacobian::new(p, k)?;
    let order = jac.order();
    let ell_big = BigUint::from(ell);
    let mut cofactor = order.clone();
    let mut v = 0;
    while (&cofactor % &ell_big).is_zero() {
        cofactor /= &ell_big;
        v += 1;
    }
    if v < 2 * g {
        return Err(Error::Invariant(format!("ell-part of #J is ell^{v}, less than ell^{}", 2 * g)));
    }
    let cofactor = BigInt::from(cofactor);
    let ell_int = BigInt::from(ell);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(ell);

    let dim = 2 * g as usize;
    let mut coords: HashMap<MumfordDivisor, Vec<u32>> = HashMap::new();
    coords.insert(jac.zero(), vec![0; dim]);
    let mut basis = Vec::new();
    let mut attempts = 0;
    let max_attempts = 64 * dim;
    while basis.len() < dim {
        attempts += 1;
        if attempts > max_attempts {
            return Err(Error::Invariant(format!("no new ell-torsion after {max_attempts} random classes")));
        }
        let mut t = jac.scalar_mul(&cofactor, &jac.random_divisor(&mut rng)?)?;
        if t.is_zero() {
            continue;
        }
        loop {
            let next = jac.scalar_mul(&ell_int, &t)?;
            if next.is_zero() {
                break;
            }
            t = next;
        }
        if coords.contains_key(&t) {
            continue;
        }
        let j = basis.len();
        let existing: Vec<(MumfordDivisor, Vec<u32>)> = coords.iter().map(|(d, c)| (d.clone(), c.clone())).collect();
        for (d, c) in existing {
            let mut acc = d;
            for i in 1..ell as u32 {
                acc = jac.add(&acc, &t)?;
                let mut cc = c.clone();
                cc[j] = i;
                if coords.insert(acc.clone(), cc).is_some() {
                    return Err(Error::Invariant("span enumeration revisited a class".into()));
                }
            }
        }
        basis.push(t);
    }
    if coords.len() as u128 != size {
        return Err(Error::Invariant(format!("span has {} classes, expected {size}", coords.len())));
    }
    Ok(TorsionBasis { ell, m, jac, basis, coords, attempts })
}

/// A square matrix over F_ell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModLMatrix {
    pub ell: u64,
    /// rows[i][j]
    pub rows: Vec<Vec<u32>>,
}

impl ModLMatrix {
    pub fn identity(ell: u64, n: usize) -> ModLMatrix {
        ModLMatrix { ell, rows: (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, other: &ModLMatrix) -> ModLMatrix {
        let n = self.dim();
        let l = self.ell;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| ((0..n).map(|k| self.rows[i][k] as u64 * other.rows[k][j] as u64).sum::<u64>() % l) as u32)
                    .collect()
            })
            .collect();
        ModLMatrix { ell: l, rows }
    }

    pub fn trace(&self) -> u64 {
        (0..self.dim()).map(|i| self.rows[i][i] as u64).sum::<u64>() % self.ell
    }

    pub fn det(&self) -> u64 {
        let l = self.ell;
        let n = self.dim();
        let mut m: Vec<Vec<u64>> = self.rows.iter().map(|r| r.iter().map(|&x| x as u64).collect()).collect();
        let mut det = 1u64;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&i| m[i][col] != 0) else { return 0 };
            if piv != col {
                m.swap(piv, col);
                det = (l - det) % l;
            }
            det = det * m[col][col] % l;
            let inv = mod_inverse(m[col][col], l);
            for i in col + 1..n {
                let f = m[i][col] * inv % l;
                for j in col..n {
                    m[i][j] = (m[i][j] + (l - f) * m[col][j]) % l;
                }
            }
        }
        det
    }

    /// Multiplicative order, if the matrix is invertible.
    pub fn order(&self) -> Option<u64> {
        if self.det() == 0 {
            return None;
        }
        let id = ModLMatrix::identity(self.ell, self.dim());
        let mut acc = self.clone();
        let mut n = 1;
        while acc != id {
            acc = acc.mul(self);
            n += 1;
        }
        Some(n)
    }
}

fn mod_inverse(a: u64, l: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(l as i128));
    e.x.rem_euclid(l as i128) as u64
}

/// Column j holds the coordinates of g(basis[j]).
pub fn rep_matrix(tb: &TorsionBasis, g: &GroupElement) -> Result<ModLMatrix> {
    let n = tb.basis.len();
    let mut rows = vec![vec![0u32; n]; n];
    for (j, b) in tb.basis.iter().enumerate() {
        let img = act_on_class(&tb.jac, g, b)?;
        let c = tb.coordinates(&img)?;
        for i in 0..n {
            rows[i][j] = c[i];
        }
    }
    Ok(ModLMatrix { ell: tb.ell, rows })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllTraces {
    pub ell: u64,
    pub m: u32,
    pub field_degree: usize,
    pub span_size: usize,
    /// trace mod ell, one per conjugacy class
    pub traces: Vec<u64>,
}

pub fn rho_ell_traces(tb: &TorsionBasis, classes: &ConjugacyClasses) -> Result<EllTraces> {
    let traces = classes
        .classes()
        .iter()
        .map(|c| Ok(rep_matrix(tb, &c.representative)?.trace()))
        .collect::<Result<Vec<u64>>>()?;
    Ok(EllTraces {
        ell: tb.ell,
        m: tb.m,
        field_degree: tb.jac.field().degree(),
        span_size: tb.span_size(),
        traces,
    })
}

/// The integer class function congruent to every trace list, taken in
/// (-P/2, P/2] with P the product of the moduli. `bound` is the largest
/// admissible |value|; P must exceed 2 * bound.
pub fn crt_reconstruct(
    classes: &Arc<ConjugacyClasses>,
    inputs: &[EllTraces],
    bound: i64,
) -> Result<ClassFunction<i64>> {
    let mut by_ell: Vec<&EllTraces> = Vec::new();
    for t in inputs {
        if t.traces.len() != classes.len() {
            return Err(Error::ClassListMismatch);
        }
        match by_ell.iter().find(|o| o.ell == t.ell) {
            Some(o) if o.traces != t.traces => {
                return Err(Error::InconsistentCongruences(format!("two trace lists for ell = {}", t.ell)))
            }
            Some(_) => {}
            None => by_ell.push(t),
        }
    }
    let product: i128 = by_ell.iter().map(|t| t.ell as i128).product();
    if product <= 2 * bound as i128 {
        return Err(Error::ModuliTooSmall {
            product: product.to_i64().unwrap_or(i64::MAX),
            needed: 2 * bound,
        });
    }
    let mut values = Vec::with_capacity(classes.len());
    for c in 0..classes.len() {
        let (mut r, mut modulus) = (0i128, 1i128);
        for t in &by_ell {
            let l = t.ell as i128;
            let a = t.traces[c] as i128 % l;
            // r + modulus * k = a (mod l)
            let inv = mod_inverse((modulus % l) as u64, l as u64) as i128;
            let k = ((a - r).rem_euclid(l) * inv).rem_euclid(l);
            r += modulus * k;
            modulus *= l;
        }
        if 2 * r > product {
            r -= product;
        }
        if r.abs() > bound as i128 {
            return Err(Error::InconsistentCongruences(format!("class {c} reconstructs to {r}, beyond {bound}")));
        }
        values.push(r as i64);
    }
    ClassFunction::from_integers(Arc::clone(classes), values)
}
