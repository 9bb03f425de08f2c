//! Diagonal reduction: the diadem step, the comaximal `2×2` core and the
//! general Smith normal form built around them.

use num_bigint::BigInt;
use num_traits::Signed;

use super::hermite::{hermite_block, require_bezout_domain};
use super::{Matrix, ReductionCertificate};
use crate::error::{Error, Result};
use crate::lab::{find_diadem_with, is_comaximal, DiademWitness, LabConfig};
use crate::ring::{Element, Ring};

/// `w = b + a*x + c*y`, a diadem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiademStep {
    pub x: Element,
    pub y: Element,
    pub w: Element,
    /// The diadem search behind `w`, for the pair `(b, gcd(a, c))`.
    pub witness: DiademWitness,
}

/// Working triple kept in the invariant `P·A₀·Q = A`.
struct Work {
    r: Ring,
    p: Matrix,
    a: Matrix,
    q: Matrix,
}

/// `[[m0, m1], [m2, m3]]` applied to rows `i`, `j` from the left.
fn left(m: &mut Matrix, i: usize, j: usize, t: &[Element; 4]) {
    let r = m.ring.clone();
    for k in 0..m.cols {
        let (x, y) = (m.get(i, k).clone(), m.get(j, k).clone());
        m.entries[i * m.cols + k] = r.add(&r.mul(&t[0], &x), &r.mul(&t[1], &y));
        m.entries[j * m.cols + k] = r.add(&r.mul(&t[2], &x), &r.mul(&t[3], &y));
    }
}

/// `[[m0, m1], [m2, m3]]` applied to columns `i`, `j` from the right.
fn right(m: &mut Matrix, i: usize, j: usize, t: &[Element; 4]) {
    let r = m.ring.clone();
    for k in 0..m.rows {
        let (x, y) = (m.get(k, i).clone(), m.get(k, j).clone());
        m.entries[k * m.cols + i] = r.add(&r.mul(&x, &t[0]), &r.mul(&y, &t[2]));
        m.entries[k * m.cols + j] = r.add(&r.mul(&x, &t[1]), &r.mul(&y, &t[3]));
    }
}

impl Work {
    fn new(a: &Matrix) -> Work {
        Work {
            r: a.ring.clone(),
            p: Matrix::identity(&a.ring, a.rows),
            a: a.clone(),
            q: Matrix::identity(&a.ring, a.cols),
        }
    }

    fn rows(&mut self, i: usize, j: usize, t: [Element; 4]) {
        left(&mut self.a, i, j, &t);
        left(&mut self.p, i, j, &t);
    }

    fn cols(&mut self, i: usize, j: usize, t: [Element; 4]) {
        right(&mut self.a, i, j, &t);
        right(&mut self.q, i, j, &t);
    }

    fn scale_row(&mut self, i: usize, u: &Element) {
        for m in [&mut self.a, &mut self.p] {
            for k in 0..m.cols {
                let v = self.r.mul(u, m.get(i, k));
                m.entries[i * m.cols + k] = v;
            }
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            let (z, o) = (self.r.zero(), self.r.one());
            self.rows(i, j, [z.clone(), o.clone(), o, z]);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            let (z, o) = (self.r.zero(), self.r.one());
            self.cols(i, j, [z.clone(), o.clone(), o, z]);
        }
    }

    fn at(&self, i: usize, j: usize) -> &Element {
        self.a.get(i, j)
    }

    fn finish(self) -> ReductionCertificate {
        ReductionCertificate {
            p: self.p,
            d: self.a,
            q: self.q,
        }
    }

    /// Zeroes `A[i][t]` against the pivot `A[t][t]`.
    fn clear_below(&mut self, t: usize, i: usize) -> Result<()> {
        let (piv, x) = (self.at(t, t).clone(), self.at(i, t).clone());
        let r = self.r.clone();
        if let Some(k) = r.divides(&piv, &x) {
            self.rows(t, i, [r.one(), r.zero(), r.neg(&k), r.one()]);
        } else {
            let ([u, nb1, v, a1], _) = hermite_block(&r, &piv, &x)?;
            self.rows(t, i, [u, v, nb1, a1]);
        }
        Ok(())
    }

    /// Zeroes `A[t][j]` against the pivot `A[t][t]`.
    fn clear_right(&mut self, t: usize, j: usize) -> Result<()> {
        let (piv, x) = (self.at(t, t).clone(), self.at(t, j).clone());
        let r = self.r.clone();
        if let Some(k) = r.divides(&piv, &x) {
            self.cols(t, j, [r.one(), r.neg(&k), r.zero(), r.one()]);
        } else {
            let (block, _) = hermite_block(&r, &piv, &x)?;
            self.cols(t, j, block);
        }
        Ok(())
    }
}

/// Size used to pick small pivots: `|n|` over ℤ, the degree over GF(p)[x].
fn norm(e: &Element) -> BigInt {
    match e {
        Element::Int(n) => n.abs(),
        Element::Poly(c) => BigInt::from(c.len()),
        _ => BigInt::from(0),
    }
}

/// `w = b + a*x + c*y` is a diadem: `g = gcd(a, c) = a*u + c*v`, `w` is the
/// diadem `b + g*lambda` of the pair `(b, g)`, and `(x, y) = lambda*(u, v)`.
pub fn diadem_step(ring: &Ring, a: &Element, b: &Element, c: &Element) -> Result<DiademStep> {
    require_bezout_domain(ring, "diadem step")?;
    for e in [a, b, c] {
        ring.check(e)?;
    }
    if !is_comaximal(ring, &[a.clone(), b.clone(), c.clone()]) {
        return Err(Error::NotComaximal(format!(
            "({}, {}, {}) in {ring}",
            ring.format_element(a),
            ring.format_element(b),
            ring.format_element(c)
        )));
    }
    let g = ring.bezout(a, c)?;
    let witness = find_diadem_with(ring, b, &g.g, &LabConfig::default())?;
    let x = ring.mul(&witness.lambda, &g.u);
    let y = ring.mul(&witness.lambda, &g.v);
    let w = witness.diadem.clone();
    debug_assert_eq!(w, ring.add(&ring.add(b, &ring.mul(a, &x)), &ring.mul(c, &y)));
    Ok(DiademStep { x, y, w, witness })
}

/// Reduces `[[a, 0], [b, c]]` with `(a, b, c)` comaximal to `diag(1, e)`:
///
/// 1. unipotent transforms replace `b` by the diadem `w = b + a*x + c*y`;
/// 2. a Hermite column transform (followed by a swap) sends `(w, c)` to
///    `(0, alpha)`, leaving `[[a', c'], [0, alpha]]`;
/// 3. `mu` with `alpha` and `c' + a'*mu` comaximal exists because `alpha`
///    divides the diadem `w`;
/// 4. the column transform `[[mu, 1], [1, 0]]` puts `c' + a'*mu` over `alpha`
///    in the first column, and a Hermite row transform turns it into `(1, 0)`;
/// 5. a shear clears the corner and `e` is normalized.
pub fn reduce_2x2_comaximal(ring: &Ring, a: &Matrix) -> Result<ReductionCertificate> {
    require_bezout_domain(ring, "2x2 comaximal reduction")?;
    if a.rows != 2 || a.cols != 2 || !a.ring.same_as(ring) {
        return Err(Error::Shape(format!(
            "expected a 2x2 matrix over {ring}, got {}x{} over {}",
            a.rows, a.cols, a.ring
        )));
    }
    if !ring.is_zero(a.get(0, 1)) {
        return Err(Error::Precondition("entry (0, 1) must be zero".into()));
    }
    let (x, b, c) = (a.get(0, 0).clone(), a.get(1, 0).clone(), a.get(1, 1).clone());
    let (one, zero) = (ring.one(), ring.zero());

    if ring.is_zero(&b) {
        if let Some(inv) = ring.inverse(&x) {
            let (e, nu) = ring.unit_normal(&c);
            return Ok(ReductionCertificate {
                p: Matrix::new(ring, 2, 2, vec![inv, zero.clone(), zero.clone(), nu])?,
                d: Matrix::new(ring, 2, 2, vec![one.clone(), zero.clone(), zero, e])?,
                q: Matrix::identity(ring, 2),
            });
        }
    }

    let step = diadem_step(ring, &x, &b, &c)?;
    let mut w = Work::new(a);
    w.rows(0, 1, [one.clone(), zero.clone(), step.x.clone(), one.clone()]);
    w.cols(0, 1, [one.clone(), zero.clone(), step.y.clone(), one.clone()]);

    let ([q0, q1, q2, q3], _) = hermite_block(ring, w.at(1, 0), w.at(1, 1))?;
    w.cols(0, 1, [q1, q0, q3, q2]);

    let (a1, c1, alpha) = (w.at(0, 0).clone(), w.at(0, 1).clone(), w.at(1, 1).clone());
    let radius = LabConfig::default().search_radius;
    let mu = (0..radius)
        .filter_map(|i| ring.search_candidate(i))
        .find(|mu| {
            ring.gcd(&alpha, &ring.add_mul(&c1, &a1, mu))
                .map(|g| ring.is_unit(&g))
                .unwrap_or(false)
        })
        .ok_or_else(|| Error::SearchExhausted("no comaximal completion found".into()))?;
    w.cols(0, 1, [mu, one.clone(), one.clone(), zero.clone()]);

    let ([u, nb1, v, a1], _) = hermite_block(ring, w.at(0, 0), w.at(1, 0))?;
    w.rows(0, 1, [u, v, nb1, a1]);
    let t = w.at(0, 1).clone();
    w.cols(0, 1, [one.clone(), ring.neg(&t), zero, one]);
    let (_, unit) = ring.unit_normal(w.at(1, 1));
    w.scale_row(1, &unit);

    let cert = w.finish();
    debug_assert!(ring.is_one(cert.d.get(0, 0)));
    Ok(cert)
}

/// Smith normal form with certificate over ℤ or GF(p)[x].
///
/// Phase one diagonalizes: the smallest nonzero entry of the trailing block
/// becomes the pivot, exact multiples are sheared away, and other entries are
/// folded in by Hermite steps until the pivot's row and column are clear.
/// Zero pivots only appear once the trailing block is zero, so zeros end up
/// last. Phase two repairs the divisibility chain: for `d_i ∤ d_j` with
/// `g = gcd(d_i, d_j)`, the comaximal core reduces `diag(d_i/g, d_j/g)`,
/// which scales back to `diag(g, lcm)`. Finally entries are normalized.
pub fn smith_normal_form(ring: &Ring, a: &Matrix) -> Result<ReductionCertificate> {
    require_bezout_domain(ring, "smith normal form")?;
    if !a.ring.same_as(ring) {
        return Err(Error::Shape(format!("matrix is over {}, not {ring}", a.ring)));
    }
    let mut w = Work::new(a);
    let (m, n) = (a.rows, a.cols);
    let mut rank = 0;
    for t in 0..m.min(n) {
        let pivot = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !ring.is_zero(w.at(i, j)))
            .min_by_key(|&(i, j)| norm(w.at(i, j)));
        let Some((pi, pj)) = pivot else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            for i in t + 1..m {
                if !ring.is_zero(w.at(i, t)) {
                    w.clear_below(t, i)?;
                }
            }
            for j in t + 1..n {
                if !ring.is_zero(w.at(t, j)) {
                    w.clear_right(t, j)?;
                }
            }
            if (t + 1..m).all(|i| ring.is_zero(w.at(i, t))) {
                break;
            }
        }
        rank = t + 1;
    }

    for i in 0..rank {
        for j in i + 1..rank {
            let (di, dj) = (w.at(i, i).clone(), w.at(j, j).clone());
            if ring.divides(&di, &dj).is_some() {
                continue;
            }
            let g = ring.bezout(&di, &dj)?;
            let core = Matrix::new(
                ring,
                2,
                2,
                vec![g.a1.clone(), ring.zero(), ring.zero(), g.b1.clone()],
            )?;
            let cert = reduce_2x2_comaximal(ring, &core)?;
            let pe = |k: usize, l: usize| cert.p.get(k, l).clone();
            let qe = |k: usize, l: usize| cert.q.get(k, l).clone();
            w.rows(i, j, [pe(0, 0), pe(0, 1), pe(1, 0), pe(1, 1)]);
            w.cols(i, j, [qe(0, 0), qe(0, 1), qe(1, 0), qe(1, 1)]);
        }
    }

    for i in 0..rank {
        let (_, unit) = ring.unit_normal(w.at(i, i));
        if !ring.is_one(&unit) {
            w.scale_row(i, &unit);
        }
    }
    Ok(w.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{verify_certificate, Verdict};

    fn z(n: i64) -> Element {
        Element::int(n)
    }

    fn check(ring: &Ring, a: &Matrix, cert: &ReductionCertificate) {
        assert_eq!(cert.p.mul(a).unwrap().mul(&cert.q).unwrap(), cert.d);
        assert_eq!(verify_certificate(ring, a, cert).unwrap(), Verdict::Valid);
    }

    #[test]
    fn diadem_step_examples() {
        let zz = Ring::integers();
        let s = diadem_step(&zz, &z(6), &z(10), &z(15)).unwrap();
        assert_eq!((s.x, s.y, s.w), (z(0), z(0), z(10)));
        let s = diadem_step(&zz, &z(0), &z(1), &z(0)).unwrap();
        assert_eq!(s.w, z(1));
        let s = diadem_step(&zz, &z(2), &z(0), &z(3)).unwrap();
        assert_eq!((s.x, s.y, s.w), (z(-1), z(1), z(1)));
        assert!(matches!(
            diadem_step(&zz, &z(2), &z(4), &z(6)),
            Err(Error::NotComaximal(_))
        ));
    }

    #[test]
    fn comaximal_core_examples() {
        let zz = Ring::integers();
        let a = Matrix::from_ints(&zz, &[&[6, 0], &[10, 15]]).unwrap();
        let cert = reduce_2x2_comaximal(&zz, &a).unwrap();
        assert_eq!(cert.d, Matrix::from_ints(&zz, &[&[1, 0], &[0, 90]]).unwrap());
        check(&zz, &a, &cert);

        let id = Matrix::identity(&zz, 2);
        let cert = reduce_2x2_comaximal(&zz, &id).unwrap();
        assert_eq!((&cert.p, &cert.d, &cert.q), (&id, &id, &id));

        let f = Ring::polynomials(5).unwrap();
        let x = f.poly(&[0, 1]).unwrap();
        let a = Matrix::new(&f, 2, 2, vec![x, f.zero(), f.one(), f.poly(&[1, 1]).unwrap()]).unwrap();
        let cert = reduce_2x2_comaximal(&f, &a).unwrap();
        assert_eq!(cert.d.diagonal(), vec![f.one(), f.poly(&[0, 1, 1]).unwrap()]);
        check(&f, &a, &cert);

        let bad = Matrix::from_ints(&zz, &[&[1, 1], &[0, 1]]).unwrap();
        assert!(matches!(reduce_2x2_comaximal(&zz, &bad), Err(Error::Precondition(_))));
        let bad = Matrix::from_ints(&zz, &[&[2, 0], &[4, 6]]).unwrap();
        assert!(matches!(reduce_2x2_comaximal(&zz, &bad), Err(Error::NotComaximal(_))));
    }

    #[test]
    fn comaximal_core_negative_entries() {
        let zz = Ring::integers();
        for (a, b, c) in [(-6, 10, 15), (4, -9, -6), (0, 1, 0), (-1, 0, -5), (9, 0, 10), (3, 7, 0)] {
            let m = Matrix::from_ints(&zz, &[&[a, 0], &[b, c]]).unwrap();
            let cert = reduce_2x2_comaximal(&zz, &m).unwrap();
            check(&zz, &m, &cert);
            assert_eq!(cert.d.diagonal(), vec![z(1), z((a * c).abs())], "{a} {b} {c}");
        }
    }

    #[test]
    fn smith_examples() {
        let zz = Ring::integers();
        for (rows, diag) in [
            (vec![vec![2, 0], vec![0, 3]], vec![1, 6]),
            (vec![vec![4, 6], vec![6, 9]], vec![1, 0]),
            (vec![vec![-7]], vec![7]),
            (vec![vec![0, 0, 0], vec![0, 0, 0]], vec![0, 0]),
            (vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], vec![2, 6, 12]),
        ] {
            let slices: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            let a = Matrix::from_ints(&zz, &slices).unwrap();
            let cert = smith_normal_form(&zz, &a).unwrap();
            check(&zz, &a, &cert);
            assert_eq!(cert.d.diagonal(), diag.iter().map(|&d| z(d)).collect::<Vec<_>>());
        }
        let empty = Matrix::zeros(&zz, 0, 0);
        let cert = smith_normal_form(&zz, &empty).unwrap();
        assert_eq!(cert.d.rows(), 0);
        let tall = Matrix::zeros(&zz, 3, 0);
        let cert = smith_normal_form(&zz, &tall).unwrap();
        assert_eq!(cert.p, Matrix::identity(&zz, 3));
    }

    #[test]
    fn smith_rejects_non_domains() {
        let z12 = Ring::integers_mod(12).unwrap();
        let a = Matrix::identity(&z12, 2);
        assert!(matches!(smith_normal_form(&z12, &a), Err(Error::Unsupported { .. })));
    }
}
