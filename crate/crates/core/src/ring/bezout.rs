use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{poly, Element, Ring, RingKind};
use crate::error::{Error, Result};

/// Witness that `g` generates `aR + bR`: `a*u + b*v = g`, `a = g*a1`, `b = g*b1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub g: Element,
    pub u: Element,
    pub v: Element,
    pub a1: Element,
    pub b1: Element,
}

impl BezoutCertificate {
    /// Re-checks all three certificate equations for the inputs `a`, `b`.
    pub fn holds(&self, ring: &Ring, a: &Element, b: &Element) -> bool {
        let lhs = ring.add(&ring.mul(a, &self.u), &ring.mul(b, &self.v));
        lhs == self.g && ring.mul(&self.g, &self.a1) == *a && ring.mul(&self.g, &self.b1) == *b
    }

    fn zeros(ring: &Ring) -> Self {
        let z = ring.zero();
        BezoutCertificate {
            g: z.clone(),
            u: z.clone(),
            v: z.clone(),
            a1: z.clone(),
            b1: z,
        }
    }
}

/// Extended Euclid over ℤ with the textbook remainder sequence; `g >= 0`.
fn int_ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::from(1), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::from(1));
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

impl Ring {
    /// Certified generator of `aR + bR`, normalized (nonnegative over ℤ,
    /// monic over GF(p)[x], least canonical generator in finite rings).
    pub fn bezout(&self, a: &Element, b: &Element) -> Result<BezoutCertificate> {
        self.check(a)?;
        self.check(b)?;
        self.bezout_unchecked(a, b)
    }

    pub(crate) fn bezout_unchecked(&self, a: &Element, b: &Element) -> Result<BezoutCertificate> {
        match (self.kind(), a, b) {
            (RingKind::Integers, Element::Int(x), Element::Int(y)) => {
                if x.is_zero() && y.is_zero() {
                    return Ok(BezoutCertificate::zeros(self));
                }
                let (g, u, v) = int_ext_gcd(x, y);
                Ok(BezoutCertificate {
                    a1: Element::Int(x / &g),
                    b1: Element::Int(y / &g),
                    g: Element::Int(g),
                    u: Element::Int(u),
                    v: Element::Int(v),
                })
            }
            (RingKind::IntegersModN(n), Element::Residue(x), Element::Residue(y)) => {
                let n = *n;
                let (d, s, t) = int_ext_gcd(&BigInt::from(*x), &BigInt::from(*y));
                let (g, s2, _) = int_ext_gcd(&d, &BigInt::from(n));
                let g = g.to_u64().unwrap_or(n);
                if g == n {
                    return Ok(BezoutCertificate::zeros(self));
                }
                Ok(BezoutCertificate {
                    g: Element::Residue(g),
                    u: self.from_bigint(&(s * &s2)),
                    v: self.from_bigint(&(t * &s2)),
                    a1: Element::Residue(x / g),
                    b1: Element::Residue(y / g),
                })
            }
            (RingKind::PolynomialsOverPrimeField(p), Element::Poly(x), Element::Poly(y)) => {
                let p = *p;
                if x.is_empty() && y.is_empty() {
                    return Ok(BezoutCertificate::zeros(self));
                }
                let (g, u, v) = poly::ext_gcd(x, y, p);
                Ok(BezoutCertificate {
                    a1: Element::Poly(poly::div_rem(x, &g, p).0),
                    b1: Element::Poly(poly::div_rem(y, &g, p).0),
                    g: Element::Poly(g),
                    u: Element::Poly(u),
                    v: Element::Poly(v),
                })
            }
            (RingKind::PolynomialQuotient { p, modulus }, Element::Poly(x), Element::Poly(y)) => {
                let p = *p;
                let (d, s, t) = poly::ext_gcd(x, y, p);
                let (g, s2, _) = poly::ext_gcd(&d, modulus, p);
                if g == *modulus {
                    return Ok(BezoutCertificate::zeros(self));
                }
                let red = |q: &[u64]| Element::Poly(poly::rem(q, modulus, p));
                Ok(BezoutCertificate {
                    u: red(&poly::mul(&s, &s2, p)),
                    v: red(&poly::mul(&t, &s2, p)),
                    a1: Element::Poly(poly::div_rem(x, &g, p).0),
                    b1: Element::Poly(poly::div_rem(y, &g, p).0),
                    g: Element::Poly(g),
                })
            }
            (RingKind::Product(l, r), Element::Pair(x1, x2), Element::Pair(y1, y2)) => {
                let c1 = l.bezout_unchecked(x1, y1)?;
                let c2 = r.bezout_unchecked(x2, y2)?;
                Ok(BezoutCertificate {
                    g: Element::pair(c1.g, c2.g),
                    u: Element::pair(c1.u, c2.u),
                    v: Element::pair(c1.v, c2.v),
                    a1: Element::pair(c1.a1, c2.a1),
                    b1: Element::pair(c1.b1, c2.b1),
                })
            }
            (RingKind::Quotient(_), _, _) => self.bezout_by_enumeration(a, b),
            _ => Err(Error::ForeignElement {
                element: format!("{a:?}, {b:?}"),
                ring: self.to_string(),
            }),
        }
    }

    /// Enumerates `aR + bR`, takes its least principal generator and searches
    /// the cofactors.
    pub(crate) fn bezout_by_enumeration(&self, a: &Element, b: &Element) -> Result<BezoutCertificate> {
        let els = self.elements()?;
        let ideal = self.ideal_generated(&[a.clone(), b.clone()])?;
        let g = els
            .iter()
            .find(|x| self.principal_ideal(x).map(|p| p == ideal).unwrap_or(false))
            .cloned()
            .ok_or_else(|| {
                Error::NotPrincipal(format!(
                    "{}, {} in {self}",
                    self.format_element(a),
                    self.format_element(b)
                ))
            })?;
        let (u, v) = els
            .iter()
            .flat_map(|u| els.iter().map(move |v| (u, v)))
            .find(|(u, v)| self.add(&self.mul(a, u), &self.mul(b, v)) == g)
            .map(|(u, v)| (u.clone(), v.clone()))
            .expect("generator lies in the ideal");
        let a1 = self.divides(&g, a).expect("generator divides a");
        let b1 = self.divides(&g, b).expect("generator divides b");
        Ok(BezoutCertificate { g, u, v, a1, b1 })
    }

    pub fn gcd(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(self.bezout(a, b)?.g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> Element {
        Element::int(n)
    }

    #[test]
    fn integer_examples() {
        let r = Ring::integers();
        let c = r.bezout(&z(4), &z(6)).unwrap();
        assert_eq!((c.g, c.u, c.v, c.a1, c.b1), (z(2), z(-1), z(1), z(2), z(3)));
        let c = r.bezout(&z(5), &z(0)).unwrap();
        assert_eq!((c.g, c.u, c.v, c.a1, c.b1), (z(5), z(1), z(0), z(1), z(0)));
        let c = r.bezout(&z(0), &z(0)).unwrap();
        assert_eq!((c.g, c.u, c.v, c.a1, c.b1), (z(0), z(0), z(0), z(0), z(0)));
    }

    #[test]
    fn integer_gcd_is_nonnegative() {
        let r = Ring::integers();
        let c = r.bezout(&z(-4), &z(-6)).unwrap();
        assert_eq!(c.g, z(2));
        assert!(c.holds(&r, &z(-4), &z(-6)));
    }

    #[test]
    fn polynomial_gcd_is_monic() {
        let r = Ring::polynomials(5).unwrap();
        let a = r.poly(&[4, 0, 1]).unwrap();
        let b = r.poly(&[4, 1]).unwrap();
        let c = r.bezout(&a, &b).unwrap();
        assert_eq!(c.g, r.poly(&[4, 1]).unwrap());
        assert!(c.holds(&r, &a, &b));
        let a = r.poly(&[2, 3]).unwrap();
        let c = r.bezout(&a, &r.zero()).unwrap();
        assert_eq!(c.g, r.poly(&[4, 1]).unwrap());
    }

    #[test]
    fn structural_generator_matches_enumeration() {
        for desc in ["Z/12", "Z/18", "GF(2)[x]/(0,0,1)", "GF(3)[x]/(2,0,1)", "Z/4 x Z/6"] {
            let r = Ring::parse(desc).unwrap();
            let els = r.elements().unwrap();
            for a in &els {
                for b in &els {
                    let fast = r.bezout(a, b).unwrap();
                    assert!(fast.holds(&r, a, b), "{desc}: ({a:?}, {b:?})");
                    let slow = r.bezout_by_enumeration(a, b).unwrap();
                    assert_eq!(fast.g, slow.g, "{desc}: ({a:?}, {b:?})");
                }
            }
        }
    }
}
