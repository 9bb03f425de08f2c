//! Dense univariate polynomials over GF(p).
//!
//! Coefficients are stored low-to-high in `[0, p)` with no trailing zeros, so
//! the zero polynomial is the empty vector.

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub(crate) fn inv_mod_prime(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

pub(crate) fn trim(mut c: Vec<u64>) -> Vec<u64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

pub(crate) fn from_coeffs(coeffs: &[i64], p: u64) -> Vec<u64> {
    trim(
        coeffs
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect(),
    )
}

pub(crate) fn degree(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            let s = x + y;
            if s >= p {
                s - p
            } else {
                s
            }
        })
        .collect();
    trim(out)
}

pub(crate) fn neg(a: &[u64], p: u64) -> Vec<u64> {
    a.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect()
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    add(a, &neg(b, p), p)
}

pub(crate) fn scale(a: &[u64], k: u64, p: u64) -> Vec<u64> {
    trim(a.iter().map(|&c| mulmod(c, k, p)).collect())
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

/// Euclidean division; `b` must be nonzero.
pub(crate) fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = inv_mod_prime(b[db], p);
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let coef = mulmod(rem[dr], lead_inv, p);
        let shift = dr - db;
        quot[shift] = coef;
        for (j, &bj) in b.iter().enumerate() {
            let t = mulmod(coef, bj, p);
            rem[shift + j] = (rem[shift + j] + p - t) % p;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    div_rem(a, b, p).1
}

pub(crate) fn leading(a: &[u64]) -> Option<u64> {
    a.last().copied()
}

/// Scales `a` to be monic, returning the monic polynomial and the scalar used.
pub(crate) fn make_monic(a: &[u64], p: u64) -> (Vec<u64>, u64) {
    match leading(a) {
        None => (Vec::new(), 1),
        Some(l) => {
            let k = inv_mod_prime(l, p);
            (scale(a, k, p), k)
        }
    }
}

/// Extended Euclid: returns `(g, u, v)` with `a*u + b*v = g`, `g` monic or zero.
pub(crate) fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1 % p], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1 % p]);
    s0 = trim(s0);
    t1 = trim(t1);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_empty() {
        return (Vec::new(), Vec::new(), Vec::new());
    }
    let (g, k) = make_monic(&r0, p);
    (g, scale(&s0, k, p), scale(&t0, k, p))
}

/// Canonical index of a polynomial of degree `< width` (base-`p` digits).
pub(crate) fn index(a: &[u64], p: u64) -> u128 {
    a.iter()
        .rev()
        .fold(0u128, |acc, &c| acc * p as u128 + c as u128)
}

pub(crate) fn from_index(mut idx: u128, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while idx > 0 {
        out.push((idx % p as u128) as u64);
        idx /= p as u128;
    }
    out
}

pub(crate) fn format(a: &[u64]) -> String {
    if a.is_empty() {
        return "0".to_string();
    }
    a.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schoolbook_product_over_gf5() {
        // (x+1)(x+4) = x^2 + 5x + 4 = x^2 + 4 over GF(5)
        assert_eq!(mul(&[1, 1], &[4, 1], 5), vec![4, 0, 1]);
    }

    #[test]
    fn division_identity() {
        let a = vec![3, 0, 2, 1];
        let b = vec![1, 4];
        let (q, r) = div_rem(&a, &b, 5);
        assert_eq!(add(&mul(&q, &b, 5), &r, 5), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn ext_gcd_is_monic_and_bezout() {
        // x^2 - 1 and x - 1 over GF(5)
        let a = vec![4, 0, 1];
        let b = vec![4, 1];
        let (g, u, v) = ext_gcd(&a, &b, 5);
        assert_eq!(g, vec![4, 1]);
        assert_eq!(add(&mul(&a, &u, 5), &mul(&b, &v, 5), 5), g);
    }

    #[test]
    fn index_round_trip() {
        for i in 0..200u128 {
            assert_eq!(index(&from_index(i, 3), 3), i);
        }
    }
}
