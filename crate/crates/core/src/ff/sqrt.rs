use super::{FieldElement, MAX_DEGREE};

/// Square-root strategy. Tonelli–Shanks is always tried first; if its
/// answer fails verification and the field has at most
/// `exhaustive_threshold` elements, every element is tried instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SqrtConfig {
    pub exhaustive_threshold: u128,
}

impl Default for SqrtConfig {
    fn default() -> Self {
        SqrtConfig { exhaustive_threshold: 1_000_000 }
    }
}

impl FieldElement {
    /// Canonical square root: of the two roots {r, -r} the one whose
    /// coefficient vector is lexicographically smaller.
    pub fn sqrt(&self) -> Option<FieldElement> {
        self.sqrt_with(&SqrtConfig::default())
    }

    pub fn sqrt_with(&self, cfg: &SqrtConfig) -> Option<FieldElement> {
        if self.is_zero() {
            return Some(*self);
        }
        if !self.is_square() {
            return None;
        }
        let r = tonelli_shanks(self);
        let r = if r.square() == *self {
            Some(r)
        } else if self.field().order() <= cfg.exhaustive_threshold {
            self.sqrt_exhaustive()
        } else {
            None
        };
        r.map(|r| r.min(-r))
    }

    /// Brute-force search over the whole field, in lexicographic order.
    pub fn sqrt_exhaustive(&self) -> Option<FieldElement> {
        self.field().elements().find(|r| r.square() == *self)
    }
}

fn nonresidue(a: &FieldElement) -> FieldElement {
    let field = a.field();
    let c = field.descriptor().nonresidue.get_or_init(|| {
        let z = field
            .elements()
            .skip(1)
            .find(|e| !e.is_square())
            .expect("odd-order field has a non-square");
        let mut c = [0u32; MAX_DEGREE];
        c[..field.degree()].copy_from_slice(z.coeffs());
        c
    });
    FieldElement::from_raw(field, *c)
}

fn tonelli_shanks(a: &FieldElement) -> FieldElement {
    let q = a.field().order();
    let mut s = 0u32;
    let mut t = q - 1;
    while t % 2 == 0 {
        t /= 2;
        s += 1;
    }
    let z = nonresidue(a);
    let mut m = s;
    let mut c = z.pow(t);
    let mut x = a.pow((t + 1) / 2);
    let mut b = a.pow(t);
    while !b.is_one() {
        let mut i = 0u32;
        let mut bb = b;
        while !bb.is_one() {
            bb = bb.square();
            i += 1;
            if i == m {
                // not a square; caller checked Euler's criterion
                return x;
            }
        }
        let mut tmp = c;
        for _ in 0..(m - i - 1) {
            tmp = tmp.square();
        }
        x *= tmp;
        c = tmp.square();
        b *= c;
        m = i;
    }
    x
}
