//! Certificate checking. Nothing here calls into the producer: products,
//! determinants and the chain test are computed from ring primitives.

use std::fmt;

use super::{Matrix, ReductionCertificate};
use crate::error::{Error, Result};
use crate::ring::{Element, Ring, RingKind};

/// The certificate condition that failed, in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    Product,
    UnitDeterminant,
    Diagonal,
    Chain,
    Normalization,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::Product => "product",
            Clause::UnitDeterminant => "unit-determinant",
            Clause::Diagonal => "diagonal",
            Clause::Chain => "chain",
            Clause::Normalization => "normalization",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Clause),
}

impl Verdict {
    pub fn is_valid(self) -> bool {
        self == Verdict::Valid
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => f.write_str("valid"),
            Verdict::Invalid(c) => write!(f, "invalid: {c}"),
        }
    }
}

fn product(r: &Ring, x: &Matrix, y: &Matrix) -> Vec<Element> {
    let mut out = Vec::with_capacity(x.rows() * y.cols());
    for i in 0..x.rows() {
        for j in 0..y.cols() {
            let terms = (0..x.cols()).map(|k| r.mul(x.get(i, k), y.get(k, j)));
            out.push(terms.fold(r.zero(), |acc, t| r.add(&acc, &t)));
        }
    }
    out
}

/// Checks `P·A·Q = D`, unit determinants, diagonal shape, the divisibility
/// chain (zeros only as a suffix) and normalization, in that order.
pub fn verify_certificate(ring: &Ring, a: &Matrix, cert: &ReductionCertificate) -> Result<Verdict> {
    let (m, n) = (a.rows(), a.cols());
    let shapes = [
        (&cert.p, m, m, "P"),
        (&cert.d, m, n, "D"),
        (&cert.q, n, n, "Q"),
        (a, m, n, "A"),
    ];
    for (mat, r, c, name) in shapes {
        if mat.rows() != r || mat.cols() != c {
            return Err(Error::Shape(format!(
                "{name} is {}x{}, expected {r}x{c}",
                mat.rows(),
                mat.cols()
            )));
        }
        if !mat.ring().same_as(ring) {
            return Err(Error::Shape(format!("{name} is over {}, not {ring}", mat.ring())));
        }
    }

    let pa = Matrix::new(ring, m, n, product(ring, &cert.p, a))?;
    if product(ring, &pa, &cert.q) != cert.d.entries() {
        return Ok(Verdict::Invalid(Clause::Product));
    }
    for u in [&cert.p, &cert.q] {
        if !ring.is_unit(&determinant(u)?) {
            return Ok(Verdict::Invalid(Clause::UnitDeterminant));
        }
    }
    for i in 0..m {
        for j in 0..n {
            if i != j && !ring.is_zero(cert.d.get(i, j)) {
                return Ok(Verdict::Invalid(Clause::Diagonal));
            }
        }
    }
    let diag: Vec<&Element> = (0..m.min(n)).map(|i| cert.d.get(i, i)).collect();
    for pair in diag.windows(2) {
        // `0 | x` only for `x = 0`, so this also forces zeros to the end.
        if ring.divides(pair[0], pair[1]).is_none() {
            return Ok(Verdict::Invalid(Clause::Chain));
        }
    }
    let normalized = |e: &Element| match (ring.kind(), e) {
        (RingKind::Integers, Element::Int(x)) => x.sign() != num_bigint::Sign::Minus,
        (RingKind::PolynomialsOverPrimeField(_), Element::Poly(c)) => c.last().is_none_or(|&l| l == 1),
        _ => true,
    };
    if !diag.iter().all(|e| normalized(e)) {
        return Ok(Verdict::Invalid(Clause::Normalization));
    }
    Ok(Verdict::Valid)
}

/// Determinant of a square matrix: fraction-free (Bareiss) elimination over
/// ℤ and GF(p)[x], expansion by minors over column subsets elsewhere.
pub fn determinant(m: &Matrix) -> Result<Element> {
    if m.rows() != m.cols() {
        return Err(Error::Shape(format!("{}x{} is not square", m.rows(), m.cols())));
    }
    let r = m.ring();
    if r.is_bezout_domain() {
        Ok(bareiss(m))
    } else if m.rows() <= 16 {
        Ok(subset_expansion(m))
    } else {
        Err(Error::Unsupported {
            op: "determinant of a matrix this large",
            ring: r.to_string(),
        })
    }
}

fn bareiss(m: &Matrix) -> Element {
    let r = m.ring();
    let n = m.rows();
    if n == 0 {
        return r.one();
    }
    let mut a: Vec<Vec<Element>> = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut negate = false;
    let mut prev = r.one();
    for k in 0..n - 1 {
        if r.is_zero(&a[k][k]) {
            match (k + 1..n).find(|&i| !r.is_zero(&a[i][k])) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return r.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = r.sub(&r.mul(&a[i][j], &a[k][k]), &r.mul(&a[i][k], &a[k][j]));
                a[i][j] = r.divides(&prev, &num).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        r.neg(&det)
    } else {
        det
    }
}

/// Laplace expansion along rows, memoized on the set of used columns.
fn subset_expansion(m: &Matrix) -> Element {
    let r = m.ring();
    let n = m.rows();
    // det over rows 0..popcount(mask) and columns in mask
    let mut dp = vec![r.zero(); 1 << n];
    dp[0] = r.one();
    for mask in 1usize..1 << n {
        let row = mask.count_ones() as usize - 1;
        let mut acc = r.zero();
        for col in 0..n {
            if mask >> col & 1 == 0 {
                continue;
            }
            let term = r.mul(m.get(row, col), &dp[mask & !(1 << col)]);
            // columns of `mask` above `col` come after it in the minor
            let later = (mask >> (col + 1)).count_ones();
            acc = if later % 2 == 0 { r.add(&acc, &term) } else { r.sub(&acc, &term) };
        }
        dp[mask] = acc;
    }
    dp[(1 << n) - 1].clone()
}

/// Inverse of a unimodular matrix over ℤ or GF(p)[x], by Hermite row
/// elimination on `[U | I]`.
pub fn inverse_unimodular(u: &Matrix) -> Result<Matrix> {
    let r = u.ring().clone();
    if !r.is_bezout_domain() {
        return Err(Error::Unsupported {
            op: "unimodular inverse",
            ring: r.to_string(),
        });
    }
    let n = u.rows();
    if n != u.cols() {
        return Err(Error::Shape(format!("{}x{} is not square", n, u.cols())));
    }
    let not_unimodular = || Error::Precondition("matrix is not unimodular".into());
    let mut a: Vec<Vec<Element>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        u.get(i, j).clone()
                    } else if j - n == i {
                        r.one()
                    } else {
                        r.zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in k + 1..n {
            if r.is_zero(&a[i][k]) {
                continue;
            }
            let c = r.bezout(&a[k][k], &a[i][k])?;
            let (rk, ri) = (a[k].clone(), a[i].clone());
            for j in 0..2 * n {
                a[k][j] = r.add(&r.mul(&c.u, &rk[j]), &r.mul(&c.v, &ri[j]));
                a[i][j] = r.sub(&r.mul(&c.a1, &ri[j]), &r.mul(&c.b1, &rk[j]));
            }
        }
        let inv = r.inverse(&a[k][k]).ok_or_else(not_unimodular)?;
        for x in a[k].iter_mut() {
            *x = r.mul(&inv, x);
        }
    }
    for k in (0..n).rev() {
        for i in 0..k {
            let f = a[i][k].clone();
            if r.is_zero(&f) {
                continue;
            }
            let rk = a[k].clone();
            for j in 0..2 * n {
                a[i][j] = r.sub(&a[i][j], &r.mul(&f, &rk[j]));
            }
        }
    }
    Matrix::new(&r, n, n, a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect())
}
