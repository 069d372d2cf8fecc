use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{fp_poly, Field, FieldElement, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// A ring embedding F_{p^k} -> F_{p^K} (k | K) sending the source generator z
/// to the lexicographically smallest root of the source modulus in the
/// target. Also supports the partial inverse (`restrict`).
pub struct Embedding {
    source: Field,
    target: Field,
    /// image of z^i, i < k
    powers: Vec<FieldElement>,
    /// target coordinates chosen as pivots and the inverse of the k x k
    /// pivot block, for restriction
    pivot_rows: Vec<usize>,
    pivot_inverse: Vec<Vec<u32>>,
}

fn cache() -> &'static Mutex<HashMap<(u32, usize, usize), &'static Embedding>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize, usize), &'static Embedding>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Embedding {
    /// The (cached) embedding from `source` into `target`.
    pub fn between(source: Field, target: Field) -> Result<&'static Embedding> {
        if !target.contains(source) {
            return Err(Error::DegreeMismatch {
                source_degree: source.degree(),
                target_degree: target.degree(),
            });
        }
        let key = (source.p(), source.degree(), target.degree());
        if let Some(e) = cache().lock().expect("embedding cache").get(&key) {
            return Ok(e);
        }
        let built: &'static Embedding = Box::leak(Box::new(Embedding::build(source, target)?));
        let mut guard = cache().lock().expect("embedding cache");
        Ok(*guard.entry(key).or_insert(built))
    }

    fn build(source: Field, target: Field) -> Result<Embedding> {
        let k = source.degree();
        let kt = target.degree();
        let p = source.p();
        let gen_image = if k == 1 {
            target.zero()
        } else {
            let one = target.one();
            let m: Vec<FieldElement> = source.modulus().iter().map(|&c| target.from_int(c as i64)).collect();
            let roots = Poly::new(m, &one).roots();
            *roots
                .first()
                .ok_or_else(|| Error::Internal(format!("{source} modulus has no root in {target}")))?
        };
        let mut powers = vec![target.one()];
        for i in 1..k {
            powers.push(powers[i - 1] * gen_image);
        }
        // Gaussian elimination on the kt x k matrix whose columns are the
        // coefficient vectors of the powers, to pick k independent rows.
        let mut pivot_rows = Vec::new();
        let mut basis: Vec<Vec<u32>> = Vec::new(); // rows in reduced form, tracked for rank
        for row in 0..kt {
            let r: Vec<u32> = powers.iter().map(|e| e.coeffs()[row]).collect();
            let mut cand = basis.clone();
            cand.push(r);
            if rank(&cand, p) > basis.len() {
                basis = cand;
                pivot_rows.push(row);
                if pivot_rows.len() == k {
                    break;
                }
            }
        }
        if pivot_rows.len() != k {
            return Err(Error::Internal("embedding is not injective".into()));
        }
        let pivot_inverse = invert_matrix(&basis, p)
            .ok_or_else(|| Error::Internal("singular pivot block".into()))?;
        Ok(Embedding { source, target, powers, pivot_rows, pivot_inverse })
    }

    pub fn source(&self) -> Field {
        self.source
    }

    pub fn target(&self) -> Field {
        self.target
    }

    /// Image of the source generator z.
    pub fn generator_image(&self) -> FieldElement {
        if self.source.degree() == 1 {
            self.target.zero()
        } else {
            self.powers[1]
        }
    }

    pub fn embed(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.field() != self.source {
            return Err(Error::FieldMismatch {
                left: a.field().to_string(),
                right: self.source.to_string(),
            });
        }
        let mut acc = self.target.zero();
        for (c, pw) in a.coeffs().iter().zip(&self.powers) {
            if *c != 0 {
                acc += self.target.from_int(*c as i64) * *pw;
            }
        }
        Ok(acc)
    }

    /// Preimage of `b` if it lies in the image of the source field.
    pub fn restrict(&self, b: &FieldElement) -> Option<FieldElement> {
        if b.field() != self.target {
            return None;
        }
        let p = self.source.p() as u64;
        let k = self.source.degree();
        let rhs: Vec<u64> = self.pivot_rows.iter().map(|&r| b.coeffs()[r] as u64).collect();
        let mut c = [0u32; MAX_DEGREE];
        for i in 0..k {
            let mut s = 0u64;
            for j in 0..k {
                s = (s + self.pivot_inverse[i][j] as u64 * rhs[j]) % p;
            }
            c[i] = s as u32;
        }
        let a = FieldElement::from_raw(self.source, c);
        (self.embed(&a).ok()? == *b).then_some(a)
    }
}

/// Embeds `a` into `target` (whose degree must be a multiple of a's).
pub fn ff_embed(a: &FieldElement, target: Field) -> Result<FieldElement> {
    if a.field() == target {
        return Ok(*a);
    }
    Embedding::between(a.field(), target)?.embed(a)
}

fn rank(rows: &[Vec<u32>], p: u32) -> usize {
    let mut m: Vec<Vec<u32>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let pp = p as u64;
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][col] != 0) else { continue };
        m.swap(r, piv);
        let inv = fp_poly::inv_mod_p(m[r][col], p) as u64;
        for i in 0..m.len() {
            if i != r && m[i][col] != 0 {
                let f = m[i][col] as u64 * inv % pp;
                for j in 0..ncols {
                    m[i][j] = ((m[i][j] as u64 + (pp - f) * m[r][j] as u64) % pp) as u32;
                }
            }
        }
        r += 1;
    }
    r
}

fn invert_matrix(a: &[Vec<u32>], p: u32) -> Option<Vec<Vec<u32>>> {
    let n = a.len();
    let pp = p as u64;
    let mut m: Vec<Vec<u32>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| m[i][col] != 0)?;
        m.swap(col, piv);
        let inv = fp_poly::inv_mod_p(m[col][col], p) as u64;
        for v in m[col].iter_mut() {
            *v = (*v as u64 * inv % pp) as u32;
        }
        for i in 0..n {
            if i != col && m[i][col] != 0 {
                let f = m[i][col] as u64;
                for j in 0..2 * n {
                    m[i][j] = ((m[i][j] as u64 + (pp - f) * m[col][j] as u64) % pp) as u32;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}
