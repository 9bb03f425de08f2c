//! Oracles shared by the integration tests and the acceptance suite. They
//! use their own arithmetic (i128 over ℤ, small coefficient vectors over
//! GF(p)) so they do not lean on the code under test.
#![allow(dead_code)]

use edr_core::matrix::{Matrix, ReductionCertificate};
use edr_core::{Element, Ring};
use num_traits::ToPrimitive;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd_i128(a as i128, b as i128) as i64
}

/// All `k`-subsets of `0..n`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Bareiss determinant over i128.
pub fn det_i128(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Determinantal divisors `D_k = gcd of all k×k minors`, `k = 1..=min(m, n)`.
pub fn int_determinantal_divisors(a: &[Vec<i64>]) -> Vec<i128> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    (1..=m.min(n))
        .map(|k| {
            let mut g = 0i128;
            for rows in subsets(m, k) {
                for cols in subsets(n, k) {
                    let minor = rows
                        .iter()
                        .map(|&i| cols.iter().map(|&j| a[i][j] as i128).collect())
                        .collect();
                    g = gcd_i128(g, det_i128(minor));
                }
            }
            g
        })
        .collect()
}

pub fn random_int_matrix(r: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| r.gen_range(-bound..=bound)).collect())
        .collect()
}

pub fn int_matrix(rows: &[Vec<i64>]) -> Matrix {
    let z = Ring::integers();
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::new(
        &z,
        rows.len(),
        cols,
        rows.iter().flatten().map(|&x| Element::int(x)).collect(),
    )
    .unwrap()
}

pub fn diag_i128(cert: &ReductionCertificate) -> Vec<i128> {
    cert.d
        .diagonal()
        .iter()
        .map(|e| e.as_int().and_then(|x| x.to_i128()).expect("small diagonal entry"))
        .collect()
}

/// `Π_{i<=k} d_i` must equal the k-th determinantal divisor, up to sign.
pub fn int_diagonal_matches_oracle(a: &[Vec<i64>], cert: &ReductionCertificate) -> bool {
    let dd = int_determinantal_divisors(a);
    let diag = diag_i128(cert);
    let mut prod = 1i128;
    diag.iter().zip(&dd).all(|(d, want)| {
        prod = prod.saturating_mul(*d);
        prod.abs() == *want
    })
}

/// Dense polynomials over GF(p), coefficients low to high, trimmed.
pub mod gfp {
    pub type P = Vec<u64>;

    pub fn trim(mut a: P) -> P {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn add(a: &P, b: &P, p: u64) -> P {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p)
                .collect(),
        )
    }

    pub fn neg(a: &P, p: u64) -> P {
        trim(a.iter().map(|&c| (p - c) % p).collect())
    }

    pub fn mul(a: &P, b: &P, p: u64) -> P {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    fn inv(a: u64, p: u64) -> u64 {
        (1..p).find(|&x| a * x % p == 1).expect("nonzero")
    }

    pub fn rem(a: &P, b: &P, p: u64) -> P {
        let mut r = a.clone();
        let lb = inv(*b.last().unwrap(), p);
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let f = r.last().unwrap() * lb % p;
            for (i, &c) in b.iter().enumerate() {
                r[i + shift] = (r[i + shift] + p - f * c % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn monic(a: &P, p: u64) -> P {
        match a.last() {
            None => Vec::new(),
            Some(&l) => {
                let k = inv(l, p);
                a.iter().map(|&c| c * k % p).collect()
            }
        }
    }

    pub fn gcd(a: &P, b: &P, p: u64) -> P {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        monic(&x, p)
    }

    /// Leibniz expansion.
    pub fn det(a: &[Vec<P>], p: u64) -> P {
        let n = a.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = Vec::new();
        permute(&mut perm, 0, &mut |pi| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| pi[i] > pi[j])
                .count();
            let mut term = vec![1];
            for (i, &j) in pi.iter().enumerate() {
                term = mul(&term, &a[i][j], p);
            }
            if inversions % 2 == 1 {
                term = neg(&term, p);
            }
            total = add(&total, &term, p);
        });
        total
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    pub fn determinantal_divisors(a: &[Vec<P>], p: u64) -> Vec<P> {
        let m = a.len();
        let n = a.first().map_or(0, Vec::len);
        (1..=m.min(n))
            .map(|k| {
                let mut g = Vec::new();
                for rows in super::subsets(m, k) {
                    for cols in super::subsets(n, k) {
                        let minor: Vec<Vec<P>> = rows
                            .iter()
                            .map(|&i| cols.iter().map(|&j| a[i][j].clone()).collect())
                            .collect();
                        g = gcd(&g, &det(&minor, p), p);
                    }
                }
                g
            })
            .collect()
    }
}

pub fn random_poly_matrix(r: &mut ChaCha8Rng, n: usize, p: u64, max_deg: usize) -> Vec<Vec<gfp::P>> {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| gfp::trim((0..=max_deg).map(|_| r.gen_range(0..p)).collect()))
                .collect()
        })
        .collect()
}

pub fn poly_matrix(ring: &Ring, rows: &[Vec<gfp::P>]) -> Matrix {
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::new(
        ring,
        rows.len(),
        cols,
        rows.iter().flatten().map(|c| Element::Poly(c.clone())).collect(),
    )
    .unwrap()
}

pub fn poly_diagonal_matches_oracle(a: &[Vec<gfp::P>], p: u64, cert: &ReductionCertificate) -> bool {
    let dd = gfp::determinantal_divisors(a, p);
    let mut prod = vec![1];
    cert.d.diagonal().iter().zip(&dd).all(|(d, want)| {
        let Element::Poly(c) = d else { return false };
        let monic = c.last().is_none_or(|&l| l == 1);
        prod = gfp::mul(&prod, c, p);
        monic && gfp::monic(&prod, p) == *want
    })
}

/// Squarefree kernel.
pub fn radical(mut n: u64) -> u64 {
    let mut r = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            r *= d;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        r *= n;
    }
    r
}

/// Splitting by prime routing: primes of `c` not dividing `a` go to `r`.
pub fn prime_routing_split(c: i64, a: i64) -> (i64, i64) {
    let mut rest = c.unsigned_abs();
    let mut r = 1i64;
    let mut d = 2u64;
    while rest > 1 {
        if d * d > rest {
            d = rest;
        }
        if rest.is_multiple_of(d) {
            let mut pe = 1u64;
            while rest.is_multiple_of(d) {
                rest /= d;
                pe *= d;
            }
            if a % d as i64 != 0 {
                r *= pe as i64;
            }
        }
        d += 1;
    }
    (r, c / r)
}

/// Rings of cardinality at most 16 used by the diadem and quotient sweeps.
pub fn small_suite() -> Vec<Ring> {
    let mut v: Vec<Ring> = (2..=16).map(|n| Ring::integers_mod(n).unwrap()).collect();
    for desc in [
        "Z/2 x Z/2",
        "Z/2 x Z/3",
        "Z/4 x Z/3",
        "GF(2)[x]/(0,0,1)",
        "GF(2)[x]/(1,1,1)",
    ] {
        v.push(Ring::parse(desc).unwrap());
    }
    v
}

/// Structural products and quotients, all of cardinality at most 50.
pub fn product_quotient_suite() -> Vec<Ring> {
    let mut v: Vec<Ring> = [
        "Z/2 x Z/2",
        "Z/2 x Z/3",
        "Z/4 x Z/3",
        "Z/2 x Z/2 x Z/2",
        "Z/4 x Z/4",
        "Z/2 x Z/9",
        "Z/4 x Z/9",
        "Z/6 x Z/7",
        "GF(2)[x]/(0,0,1)",
        "GF(2)[x]/(1,1,1)",
        "GF(2)[x]/(0,0,0,1)",
        "GF(2)[x]/(1,0,0,1)",
        "GF(3)[x]/(0,0,1)",
        "GF(3)[x]/(1,0,1)",
        "GF(5)[x]/(0,0,1)",
        "GF(7)[x]/(0,0,1)",
        "GF(2)[x]/(0,0,1) x Z/3",
        "GF(2)[x]/(0,0,1) x GF(2)[x]/(1,1,1)",
    ]
    .iter()
    .map(|s| Ring::parse(s).unwrap())
    .collect();
    // coset quotients of non-principal-looking shapes
    let z4z6 = Ring::parse("Z/4 x Z/6").unwrap();
    v.push(z4z6.quotient_by_ideal(&[Element::pair(Element::Residue(2), Element::Residue(3))]).unwrap());
    let z48 = Ring::integers_mod(48).unwrap();
    v.push(z48.quotient_by_ideal(&[Element::Residue(6), Element::Residue(16)]).unwrap());
    v
}
