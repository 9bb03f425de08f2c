//! Computable commutative rings.
//!
//! A [`Ring`] is an immutable, cheaply clonable descriptor. Elements are plain
//! values ([`Element`]) in canonical form; all arithmetic goes through the ring
//! that owns them, so structural equality of elements is ring equality.

mod bezout;
mod finite;
mod parse;
pub(crate) mod poly;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use bezout::BezoutCertificate;
pub use finite::{CosetQuotient, JacobsonRadicalSet};

/// Largest finite ring whose elements we are willing to list.
pub const ENUMERATION_LIMIT: u128 = 1 << 22;

/// Canonical representative of a ring element.
///
/// `Int` lives in ℤ, `Residue` in ℤ/n, `Poly` in GF(p)[x] and its quotients
/// (coefficients low-to-high, trimmed), `Pair` in a product. Elements of a
/// coset quotient are the least member of their coset in the base ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Int(BigInt),
    Residue(u64),
    Poly(Vec<u64>),
    Pair(Box<Element>, Box<Element>),
}

impl Element {
    pub fn int(n: i64) -> Self {
        Element::Int(BigInt::from(n))
    }

    pub fn pair(a: Element, b: Element) -> Self {
        Element::Pair(Box::new(a), Box::new(b))
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Element::Int(n) => Some(n),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
}

pub enum RingKind {
    Integers,
    IntegersModN(u64),
    PolynomialsOverPrimeField(u64),
    /// GF(p)[x]/(f) with `f` monic.
    PolynomialQuotient {
        p: u64,
        modulus: Vec<u64>,
    },
    /// Finite ring modulo an ideal, realized by coset enumeration.
    Quotient(CosetQuotient),
    Product(Ring, Ring),
}

struct Inner {
    kind: RingKind,
    cardinality: Option<u128>,
}

#[derive(Clone)]
pub struct Ring {
    inner: Arc<Inner>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if p.is_multiple_of(q) {
            return p == q;
        }
    }
    // deterministic Miller-Rabin for 64-bit inputs
    let (mut d, mut s) = (p - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = poly::powmod(a, d, p);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..s {
            x = poly::mulmod(x, x, p);
            if x == p - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Ring {
    fn from_kind(kind: RingKind) -> Ring {
        let cardinality = match &kind {
            RingKind::Integers | RingKind::PolynomialsOverPrimeField(_) => None,
            RingKind::IntegersModN(n) => Some(*n as u128),
            RingKind::PolynomialQuotient { p, modulus } => {
                let deg = poly::degree(modulus).unwrap_or(0) as u32;
                // Saturate instead of overflowing; such rings are never enumerated.
                Some((*p as u128).checked_pow(deg).unwrap_or(u128::MAX))
            }
            RingKind::Quotient(q) => Some(q.class_count() as u128),
            RingKind::Product(l, r) => match (l.cardinality(), r.cardinality()) {
                (Some(a), Some(b)) => Some(a.saturating_mul(b)),
                _ => None,
            },
        };
        Ring {
            inner: Arc::new(Inner { kind, cardinality }),
        }
    }

    pub fn integers() -> Ring {
        Ring::from_kind(RingKind::Integers)
    }

    /// ℤ/n for `n >= 2`.
    pub fn integers_mod(n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::Precondition(format!(
                "Z/{n} is not a ring with 1 != 0"
            )));
        }
        Ok(Ring::from_kind(RingKind::IntegersModN(n)))
    }

    /// ℤ/n allowing `n = 1` (the zero ring); only quotient constructions use this.
    pub(crate) fn integers_mod_unchecked(n: u64) -> Ring {
        Ring::from_kind(RingKind::IntegersModN(n))
    }

    pub fn polynomials(p: u64) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Ring::from_kind(RingKind::PolynomialsOverPrimeField(p)))
    }

    /// GF(p)[x]/(f). A constant `f` yields the zero ring.
    pub fn polynomial_quotient(p: u64, modulus: &[u64]) -> Result<Ring> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let f = poly::trim(modulus.iter().map(|c| c % p).collect());
        if f.is_empty() {
            return Err(Error::ZeroModulus);
        }
        let (f, _) = poly::make_monic(&f, p);
        Ok(Ring::from_kind(RingKind::PolynomialQuotient { p, modulus: f }))
    }

    pub fn product(left: Ring, right: Ring) -> Ring {
        Ring::from_kind(RingKind::Product(left, right))
    }

    pub(crate) fn coset_quotient(q: CosetQuotient) -> Ring {
        Ring::from_kind(RingKind::Quotient(q))
    }

    /// Parses the textual ring grammar, e.g. `Z/4 x Z/9` or `GF(2)[x]/(1,1,1)`.
    pub fn parse(desc: &str) -> Result<Ring> {
        parse::parse_ring(desc)
    }

    pub fn kind(&self) -> &RingKind {
        &self.inner.kind
    }

    pub fn cardinality(&self) -> Option<u128> {
        self.inner.cardinality
    }

    pub fn is_finite(&self) -> bool {
        self.inner.cardinality.is_some()
    }

    /// True for the ring with `1 = 0`, which only arises as a quotient by a unit.
    pub fn is_zero_ring(&self) -> bool {
        self.inner.cardinality == Some(1)
    }

    /// ℤ and GF(p)[x]: the carriers the matrix producer supports.
    pub fn is_bezout_domain(&self) -> bool {
        matches!(
            self.kind(),
            RingKind::Integers | RingKind::PolynomialsOverPrimeField(_)
        )
    }

    pub fn same_as(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self == other
    }

    pub fn zero(&self) -> Element {
        match self.kind() {
            RingKind::Integers => Element::Int(BigInt::zero()),
            RingKind::IntegersModN(_) => Element::Residue(0),
            RingKind::PolynomialsOverPrimeField(_) | RingKind::PolynomialQuotient { .. } => {
                Element::Poly(Vec::new())
            }
            RingKind::Quotient(q) => q.base().zero(),
            RingKind::Product(l, r) => Element::pair(l.zero(), r.zero()),
        }
    }

    pub fn one(&self) -> Element {
        self.from_int(1)
    }

    /// Image of the integer `n` under the unique map ℤ → R.
    pub fn from_int(&self, n: i64) -> Element {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Element {
        match self.kind() {
            RingKind::Integers => Element::Int(n.clone()),
            RingKind::IntegersModN(m) => {
                Element::Residue(n.mod_floor(&BigInt::from(*m)).to_u64().unwrap_or(0))
            }
            RingKind::PolynomialsOverPrimeField(p) => {
                let c = n.mod_floor(&BigInt::from(*p)).to_u64().unwrap_or(0);
                Element::Poly(poly::trim(vec![c]))
            }
            RingKind::PolynomialQuotient { p, modulus } => {
                let c = n.mod_floor(&BigInt::from(*p)).to_u64().unwrap_or(0);
                Element::Poly(poly::rem(&poly::trim(vec![c]), modulus, *p))
            }
            RingKind::Quotient(q) => q.reduce(&q.base().from_bigint(n)),
            RingKind::Product(l, r) => Element::pair(l.from_bigint(n), r.from_bigint(n)),
        }
    }

    /// Builds a polynomial element from low-to-high integer coefficients.
    pub fn poly(&self, coeffs: &[i64]) -> Result<Element> {
        match self.kind() {
            RingKind::PolynomialsOverPrimeField(p) => Ok(Element::Poly(poly::from_coeffs(coeffs, *p))),
            RingKind::PolynomialQuotient { p, modulus } => Ok(Element::Poly(poly::rem(
                &poly::from_coeffs(coeffs, *p),
                modulus,
                *p,
            ))),
            _ => Err(Error::Unsupported {
                op: "polynomial literal",
                ring: self.to_string(),
            }),
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        match (self.kind(), e) {
            (RingKind::Integers, Element::Int(_)) => true,
            (RingKind::IntegersModN(n), Element::Residue(r)) => r < n,
            (RingKind::PolynomialsOverPrimeField(p), Element::Poly(c)) => {
                c.last() != Some(&0) && c.iter().all(|x| x < p)
            }
            (RingKind::PolynomialQuotient { p, modulus }, Element::Poly(c)) => {
                c.last() != Some(&0) && c.iter().all(|x| x < p) && c.len() < modulus.len()
            }
            (RingKind::Quotient(q), e) => q.base().contains(e) && q.reduce(e) == *e,
            (RingKind::Product(l, r), Element::Pair(a, b)) => l.contains(a) && r.contains(b),
            _ => false,
        }
    }

    pub fn check(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::ForeignElement {
                element: format!("{e:?}"),
                ring: self.to_string(),
            })
        }
    }

    /// Checked arithmetic entry point; `b` is ignored for `Neg`.
    pub fn arithmetic(&self, op: ArithOp, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        if op != ArithOp::Neg {
            self.check(b)?;
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Neg => self.neg(a),
        })
    }

    fn foreign(&self, a: &Element) -> ! {
        panic!("element {a:?} does not belong to {self}")
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        match (self.kind(), a, b) {
            (RingKind::Integers, Element::Int(x), Element::Int(y)) => Element::Int(x + y),
            (RingKind::IntegersModN(n), Element::Residue(x), Element::Residue(y)) => {
                Element::Residue(((*x as u128 + *y as u128) % *n as u128) as u64)
            }
            (RingKind::PolynomialsOverPrimeField(p), Element::Poly(x), Element::Poly(y))
            | (RingKind::PolynomialQuotient { p, .. }, Element::Poly(x), Element::Poly(y)) => {
                Element::Poly(poly::add(x, y, *p))
            }
            (RingKind::Quotient(q), x, y) => q.reduce(&q.base().add(x, y)),
            (RingKind::Product(l, r), Element::Pair(x1, x2), Element::Pair(y1, y2)) => {
                Element::pair(l.add(x1, y1), r.add(x2, y2))
            }
            _ => self.foreign(a),
        }
    }

    pub fn neg(&self, a: &Element) -> Element {
        match (self.kind(), a) {
            (RingKind::Integers, Element::Int(x)) => Element::Int(-x),
            (RingKind::IntegersModN(n), Element::Residue(x)) => {
                Element::Residue(if *x == 0 { 0 } else { n - x })
            }
            (RingKind::PolynomialsOverPrimeField(p), Element::Poly(x))
            | (RingKind::PolynomialQuotient { p, .. }, Element::Poly(x)) => {
                Element::Poly(poly::neg(x, *p))
            }
            (RingKind::Quotient(q), x) => q.reduce(&q.base().neg(x)),
            (RingKind::Product(l, r), Element::Pair(x1, x2)) => {
                Element::pair(l.neg(x1), r.neg(x2))
            }
            _ => self.foreign(a),
        }
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        match (self.kind(), a, b) {
            (RingKind::Integers, Element::Int(x), Element::Int(y)) => Element::Int(x * y),
            (RingKind::IntegersModN(n), Element::Residue(x), Element::Residue(y)) => {
                Element::Residue(poly::mulmod(*x, *y, *n))
            }
            (RingKind::PolynomialsOverPrimeField(p), Element::Poly(x), Element::Poly(y)) => {
                Element::Poly(poly::mul(x, y, *p))
            }
            (RingKind::PolynomialQuotient { p, modulus }, Element::Poly(x), Element::Poly(y)) => {
                Element::Poly(poly::rem(&poly::mul(x, y, *p), modulus, *p))
            }
            (RingKind::Quotient(q), x, y) => q.reduce(&q.base().mul(x, y)),
            (RingKind::Product(l, r), Element::Pair(x1, x2), Element::Pair(y1, y2)) => {
                Element::pair(l.mul(x1, y1), r.mul(x2, y2))
            }
            _ => self.foreign(a),
        }
    }

    /// `a + b*c`, the shape every diadem and stable-range formula uses.
    pub fn add_mul(&self, a: &Element, b: &Element, c: &Element) -> Element {
        self.add(a, &self.mul(b, c))
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &Element) -> bool {
        *a == self.one()
    }

    pub fn is_unit(&self, a: &Element) -> bool {
        self.inverse(a).is_some()
    }

    pub fn inverse(&self, a: &Element) -> Option<Element> {
        match (self.kind(), a) {
            (RingKind::Integers, Element::Int(x)) => {
                if x.abs().is_one() {
                    Some(a.clone())
                } else {
                    None
                }
            }
            (RingKind::IntegersModN(n), Element::Residue(x)) => {
                let e = (*x as i128).extended_gcd(&(*n as i128));
                if e.gcd == 1 || *n == 1 {
                    Some(Element::Residue(e.x.rem_euclid(*n as i128) as u64))
                } else {
                    None
                }
            }
            (RingKind::PolynomialsOverPrimeField(p), Element::Poly(x)) => {
                if x.len() == 1 {
                    Some(Element::Poly(vec![poly::inv_mod_prime(x[0], *p)]))
                } else {
                    None
                }
            }
            (RingKind::PolynomialQuotient { p, modulus }, Element::Poly(x)) => {
                if modulus.len() == 1 {
                    return Some(Element::Poly(Vec::new()));
                }
                let (g, u, _) = poly::ext_gcd(x, modulus, *p);
                if g == [1] {
                    Some(Element::Poly(poly::rem(&u, modulus, *p)))
                } else {
                    None
                }
            }
            (RingKind::Quotient(_), x) => {
                let one = self.one();
                self.elements()
                    .ok()?
                    .into_iter()
                    .find(|y| self.mul(x, y) == one)
            }
            (RingKind::Product(l, r), Element::Pair(x1, x2)) => {
                Some(Element::pair(l.inverse(x1)?, r.inverse(x2)?))
            }
            _ => self.foreign(a),
        }
    }

    /// Some `q` with `a*q = b`; over rings with zero divisors, the least such
    /// `q` in canonical element order.
    pub fn divides(&self, a: &Element, b: &Element) -> Option<Element> {
        match (self.kind(), a, b) {
            (RingKind::Integers, Element::Int(x), Element::Int(y)) => {
                if x.is_zero() {
                    y.is_zero().then(|| Element::Int(BigInt::zero()))
                } else if y.is_multiple_of(x) {
                    Some(Element::Int(y / x))
                } else {
                    None
                }
            }
            (RingKind::IntegersModN(n), Element::Residue(x), Element::Residue(y)) => {
                let n = *n as i128;
                let (x, y) = (*x as i128, *y as i128);
                let g = x.gcd(&n);
                if n == 1 {
                    return Some(Element::Residue(0));
                }
                if y % g != 0 {
                    return None;
                }
                let m = n / g;
                let inv = (x / g).extended_gcd(&m).x.rem_euclid(m);
                let q = poly::mulmod(((y / g) % m) as u64, inv as u64, m as u64);
                Some(Element::Residue(q))
            }
            (RingKind::PolynomialsOverPrimeField(p), Element::Poly(x), Element::Poly(y)) => {
                if x.is_empty() {
                    return y.is_empty().then(|| Element::Poly(Vec::new()));
                }
                let (q, r) = poly::div_rem(y, x, *p);
                r.is_empty().then_some(Element::Poly(q))
            }
            (RingKind::PolynomialQuotient { p, modulus }, Element::Poly(x), Element::Poly(y)) => {
                let p = *p;
                if modulus.len() == 1 {
                    return Some(Element::Poly(Vec::new()));
                }
                let (g, _, _) = poly::ext_gcd(x, modulus, p);
                let (yq, yr) = poly::div_rem(y, &g, p);
                if !yr.is_empty() {
                    return None;
                }
                let m = poly::div_rem(modulus, &g, p).0;
                let xg = poly::div_rem(x, &g, p).0;
                let (_, inv, _) = poly::ext_gcd(&xg, &m, p);
                Some(Element::Poly(poly::rem(&poly::mul(&yq, &inv, p), &m, p)))
            }
            (RingKind::Quotient(_), x, y) => self
                .elements()
                .ok()?
                .into_iter()
                .find(|q| self.mul(x, q) == *y),
            (RingKind::Product(l, r), Element::Pair(x1, x2), Element::Pair(y1, y2)) => {
                Some(Element::pair(l.divides(x1, y1)?, r.divides(x2, y2)?))
            }
            _ => self.foreign(a),
        }
    }

    /// Returns `(n, u)` with `n = u*a`, `u` a unit and `n` the normal
    /// associate: nonnegative over ℤ, monic over GF(p)[x], `a` itself elsewhere.
    pub fn unit_normal(&self, a: &Element) -> (Element, Element) {
        match (self.kind(), a) {
            (RingKind::Integers, Element::Int(x)) if x.is_negative() => {
                (Element::Int(-x), Element::int(-1))
            }
            (RingKind::PolynomialsOverPrimeField(p), Element::Poly(x)) if !x.is_empty() => {
                let (m, k) = poly::make_monic(x, *p);
                (Element::Poly(m), Element::Poly(vec![k]))
            }
            _ => (a.clone(), self.one()),
        }
    }

    pub fn is_normalized(&self, a: &Element) -> bool {
        self.unit_normal(a).0 == *a
    }

    /// Associates: `a = u*b` for a unit `u`.
    pub fn associated(&self, a: &Element, b: &Element) -> bool {
        if self.is_bezout_domain() {
            return self.unit_normal(a).0 == self.unit_normal(b).0;
        }
        match (self.divides(a, b), self.divides(b, a)) {
            (Some(_), Some(_)) => self
                .elements()
                .map(|els| {
                    els.iter()
                        .any(|u| self.is_unit(u) && self.mul(a, u) == *b)
                })
                .unwrap_or(false),
            _ => false,
        }
    }

    /// Lists a finite ring in canonical order.
    pub fn elements(&self) -> Result<Vec<Element>> {
        let n = self.enumerable_size()?;
        Ok((0..n).map(|i| self.element_at(i)).collect())
    }

    pub(crate) fn enumerable_size(&self) -> Result<usize> {
        match self.cardinality() {
            None => Err(Error::InfiniteRing(self.to_string())),
            Some(n) if n > ENUMERATION_LIMIT => Err(Error::TooLarge {
                ring: self.to_string(),
                cardinality: n,
                bound: ENUMERATION_LIMIT,
            }),
            Some(n) => Ok(n as usize),
        }
    }

    /// Element with the given canonical index; the ring must be finite.
    pub fn element_at(&self, idx: usize) -> Element {
        match self.kind() {
            RingKind::IntegersModN(_) => Element::Residue(idx as u64),
            RingKind::PolynomialQuotient { p, .. } => Element::Poly(poly::from_index(idx as u128, *p)),
            RingKind::Quotient(q) => q.base().element_at(q.rep_index(idx)),
            RingKind::Product(l, r) => {
                let nr = r.cardinality().expect("finite product") as usize;
                Element::pair(l.element_at(idx / nr), r.element_at(idx % nr))
            }
            _ => panic!("element_at on infinite ring {self}"),
        }
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        match (self.kind(), e) {
            (RingKind::IntegersModN(n), Element::Residue(r)) if r < n => Some(*r as usize),
            (RingKind::PolynomialQuotient { p, .. }, Element::Poly(c)) if self.contains(e) => {
                Some(poly::index(c, *p) as usize)
            }
            (RingKind::Quotient(q), e) => q.class_index(e),
            (RingKind::Product(l, r), Element::Pair(a, b)) => {
                let nr = r.cardinality()? as usize;
                Some(l.index_of(a)? * nr + r.index_of(b)?)
            }
            _ => None,
        }
    }

    /// The `i`-th element of the canonical search order used for multiplier
    /// searches: `0, 1, -1, 2, -2, ...` over ℤ, base-p digit order over
    /// GF(p)[x], canonical index order over finite rings. `None` past the end
    /// of a finite ring.
    pub fn search_candidate(&self, i: u64) -> Option<Element> {
        match self.kind() {
            RingKind::Integers => {
                let k = i.div_ceil(2) as i64;
                Some(Element::int(if i % 2 == 1 { k } else { -k }))
            }
            RingKind::PolynomialsOverPrimeField(p) => Some(Element::Poly(poly::from_index(i as u128, *p))),
            _ => {
                let n = self.cardinality()?;
                ((i as u128) < n).then(|| self.element_at(i as usize))
            }
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        parse::parse_element(self, text)
    }

    pub fn format_element(&self, e: &Element) -> String {
        match e {
            Element::Int(n) => n.to_string(),
            Element::Residue(r) => r.to_string(),
            Element::Poly(c) => poly::format(c),
            Element::Pair(a, b) => match self.kind() {
                RingKind::Product(l, r) => {
                    format!("({}|{})", l.format_element(a), r.format_element(b))
                }
                RingKind::Quotient(q) => q.base().format_element(e),
                _ => format!("{e:?}"),
            },
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        match (self.kind(), other.kind()) {
            (RingKind::Integers, RingKind::Integers) => true,
            (RingKind::IntegersModN(a), RingKind::IntegersModN(b)) => a == b,
            (RingKind::PolynomialsOverPrimeField(a), RingKind::PolynomialsOverPrimeField(b)) => {
                a == b
            }
            (
                RingKind::PolynomialQuotient { p, modulus },
                RingKind::PolynomialQuotient {
                    p: p2,
                    modulus: m2,
                },
            ) => p == p2 && modulus == m2,
            (RingKind::Quotient(a), RingKind::Quotient(b)) => {
                a.base() == b.base() && a.ideal() == b.ideal()
            }
            (RingKind::Product(a1, a2), RingKind::Product(b1, b2)) => a1 == b1 && a2 == b2,
            _ => false,
        }
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            RingKind::Integers => write!(f, "Z"),
            RingKind::IntegersModN(n) => write!(f, "Z/{n}"),
            RingKind::PolynomialsOverPrimeField(p) => write!(f, "GF({p})[x]"),
            RingKind::PolynomialQuotient { p, modulus } => {
                write!(f, "GF({p})[x]/({})", poly::format(modulus))
            }
            RingKind::Quotient(q) => {
                let gens: Vec<String> = q
                    .generators()
                    .iter()
                    .map(|g| q.base().format_element(g))
                    .collect();
                write!(f, "({})/({})", q.base(), gens.join(";"))
            }
            RingKind::Product(l, r) => write!(f, "{l} x {r}"),
        }
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_addition() {
        let r = Ring::integers_mod(12).unwrap();
        assert_eq!(r.add(&Element::Residue(7), &Element::Residue(9)), Element::Residue(4));
    }

    #[test]
    fn polynomial_product_over_gf5() {
        let r = Ring::polynomials(5).unwrap();
        let a = r.poly(&[1, 1]).unwrap();
        let b = r.poly(&[4, 1]).unwrap();
        assert_eq!(r.mul(&a, &b), r.poly(&[4, 0, 1]).unwrap());
    }

    #[test]
    fn units() {
        let z = Ring::integers();
        assert!(z.is_unit(&Element::int(-1)));
        assert!(!z.is_unit(&Element::int(2)));
        let z12 = Ring::integers_mod(12).unwrap();
        assert!(z12.is_unit(&Element::Residue(7)));
        assert_eq!(z12.inverse(&Element::Residue(7)), Some(Element::Residue(7)));
        assert!(!z12.is_unit(&Element::Residue(4)));
    }

    #[test]
    fn divides_examples() {
        let z = Ring::integers();
        assert_eq!(z.divides(&Element::int(3), &Element::int(12)), Some(Element::int(4)));
        assert_eq!(z.divides(&Element::int(0), &Element::int(5)), None);
        let z12 = Ring::integers_mod(12).unwrap();
        let q = z12.divides(&Element::Residue(4), &Element::Residue(8)).unwrap();
        assert_eq!(q, Element::Residue(2));
        assert_eq!(z12.divides(&Element::Residue(4), &Element::Residue(6)), None);
    }

    #[test]
    fn divides_returns_least_quotient_in_finite_rings() {
        for desc in ["Z/12", "Z/18", "GF(2)[x]/(0,0,1)", "GF(3)[x]/(1,0,1)", "Z/4 x Z/6"] {
            let r = Ring::parse(desc).unwrap();
            let els = r.elements().unwrap();
            for a in &els {
                for b in &els {
                    let brute = els.iter().find(|q| r.mul(a, q) == *b).cloned();
                    assert_eq!(r.divides(a, b), brute, "{desc}: {a:?} | {b:?}");
                }
            }
        }
    }

    #[test]
    fn inverse_matches_enumeration() {
        for desc in ["Z/12", "GF(2)[x]/(1,1,1)", "GF(3)[x]/(0,0,1)", "Z/2 x Z/9"] {
            let r = Ring::parse(desc).unwrap();
            let els = r.elements().unwrap();
            for a in &els {
                let brute = els.iter().find(|b| r.is_one(&r.mul(a, b))).cloned();
                assert_eq!(r.inverse(a), brute, "{desc}: {a:?}");
            }
        }
    }

    #[test]
    fn mixed_ring_operands_are_rejected() {
        let z12 = Ring::integers_mod(12).unwrap();
        let err = z12
            .arithmetic(ArithOp::Add, &Element::Residue(3), &Element::int(5))
            .unwrap_err();
        assert!(matches!(err, Error::ForeignElement { .. }));
        assert!(z12.arithmetic(ArithOp::Add, &Element::Residue(12), &Element::Residue(0)).is_err());
    }

    #[test]
    fn search_order_over_integers() {
        let z = Ring::integers();
        let got: Vec<Element> = (0..5).map(|i| z.search_candidate(i).unwrap()).collect();
        assert_eq!(
            got,
            [0, 1, -1, 2, -2].map(Element::int).to_vec()
        );
    }

    #[test]
    fn product_indexing_round_trips() {
        let r = Ring::parse("Z/4 x Z/9").unwrap();
        assert_eq!(r.cardinality(), Some(36));
        for (i, e) in r.elements().unwrap().iter().enumerate() {
            assert_eq!(r.index_of(e), Some(i));
        }
    }
}
