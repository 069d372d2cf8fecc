//! Dense polynomials over the prime field F_p as plain coefficient vectors
//! (constant term first). Used for modulus selection and for inversion in
//! F_p[z]/(m(z)); everything above the prime field goes through `crate::poly`.

pub(crate) fn trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn inv_mod_p(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod_p(a, p as u64 - 2, p)
}

pub(crate) fn pow_mod_p(base: u32, mut exp: u64, p: u32) -> u32 {
    let p = p as u64;
    let mut b = base as u64 % p;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        exp >>= 1;
    }
    acc as u32
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let pp = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % pp;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|v| v as u32).collect();
    trim(&mut out);
    out
}

/// Returns (quotient, remainder). `b` must be nonzero.
pub(crate) fn divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let pp = p as u64;
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod_p(*b.last().unwrap(), p) as u64;
    let db = b.len() - 1;
    let mut q = vec![0u32; r.len() - db];
    for i in (db..r.len()).rev() {
        let t = r[i] as u64 * lead_inv % pp;
        if t == 0 {
            continue;
        }
        q[i - db] = t as u32;
        for (j, &bj) in b.iter().enumerate() {
            let idx = i - db + j;
            r[idx] = ((r[idx] as u64 + (pp - t) * bj as u64) % pp) as u32;
        }
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    divrem(a, b, p).1
}

pub(crate) fn monic(mut a: Vec<u32>, p: u32) -> Vec<u32> {
    trim(&mut a);
    if let Some(&l) = a.last() {
        let li = inv_mod_p(l, p) as u64;
        for c in a.iter_mut() {
            *c = (*c as u64 * li % p as u64) as u32;
        }
    }
    a
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(x, p)
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    rem(&mul(a, b, p), m, p)
}

pub(crate) fn pow_mod(base: &[u32], mut exp: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut b = rem(base, m, p);
    let mut acc = rem(&[1], m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

/// Ben-Or irreducibility test: `f` (monic, degree k) is irreducible iff
/// gcd(f, x^{p^d} - x) = 1 for every 1 <= d <= k/2.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut xpd = x.clone();
    for _ in 1..=k / 2 {
        xpd = pow_mod(&xpd, p as u64, f, p);
        let diff = sub(&xpd, &x, p);
        if gcd(f, &diff, p).len() != 1 {
            return false;
        }
    }
    true
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
/// Returns `None` when gcd(a, m) != 1.
pub(crate) fn inv_mod(a: &[u32], m: &[u32], p: u32) -> Option<Vec<u32>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    r1 = rem(&r1, &r0, p);
    let mut s0: Vec<u32> = Vec::new();
    let mut s1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = inv_mod_p(r0[0], p) as u64;
    let mut out: Vec<u32> = s0.iter().map(|&v| (v as u64 * c % p as u64) as u32).collect();
    trim(&mut out);
    Some(rem(&out, m, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_reconstructs() {
        let p = 7;
        let a = vec![3, 0, 5, 1, 6];
        let b = vec![2, 1, 1];
        let (q, r) = divrem(&a, &b, p);
        let mut back = mul(&q, &b, p);
        back.resize(a.len().max(back.len()), 0);
        for (i, c) in r.iter().enumerate() {
            back[i] = (back[i] + c) % p;
        }
        trim(&mut back);
        assert_eq!(back, a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn irreducibility_matches_root_search_for_quadratics() {
        let p = 5;
        for c0 in 0..p {
            for c1 in 0..p {
                let f = vec![c0, c1, 1];
                let has_root = (0..p).any(|x| (x * x + c1 * x + c0) % p == 0);
                assert_eq!(is_irreducible(&f, p), !has_root, "{f:?}");
            }
        }
    }

    #[test]
    fn product_of_two_cubics_is_reducible() {
        // x^3 + x + 1 is irreducible over F_5; its square is not.
        let p = 5;
        let c = vec![1, 1, 0, 1];
        assert!(is_irreducible(&c, p));
        assert!(!is_irreducible(&mul(&c, &c, p), p));
    }

    #[test]
    fn inverse_mod_modulus() {
        let p = 5;
        let m = vec![1, 1, 1];
        let a = vec![3, 2];
        let inv = inv_mod(&a, &m, p).unwrap();
        assert_eq!(mul_mod(&a, &inv, &m, p), vec![1]);
        assert!(inv_mod(&[], &m, p).is_none());
    }
}
