//! Diadems: the direct definition on finite rings, the quotient criterion
//! (`w` is a diadem iff `R/(w)` has stable range 1) and the multiplier search.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::properties::{tables_for, Outcome, Property, PropertyReport};
use super::tables::FiniteTables;
use super::LabConfig;
use crate::error::{Error, Result};
use crate::ring::{poly, Element, Ring, RingKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evidence {
    /// `R/(w)` was checked to have stable range 1.
    QuotientStableRange1,
    /// The defining quantifiers were enumerated on a finite ring.
    ExhaustiveDefinition,
    /// `w` is a unit.
    TrivialUnit,
}

impl Evidence {
    pub fn name(self) -> &'static str {
        match self {
            Evidence::QuotientStableRange1 => "quotient-sr1",
            Evidence::ExhaustiveDefinition => "exhaustive",
            Evidence::TrivialUnit => "trivial-unit",
        }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `diadem = a + b*lambda`, with the reason it is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiademWitness {
    pub a: Element,
    pub b: Element,
    pub lambda: Element,
    pub diadem: Element,
    pub evidence: Evidence,
}

fn not_comaximal(ring: &Ring, elems: &[&Element]) -> Error {
    let shown: Vec<String> = elems.iter().map(|e| ring.format_element(e)).collect();
    Error::NotComaximal(format!("({}) in {ring}", shown.join(", ")))
}

fn tables_index(t: &FiniteTables, e: &Element) -> Result<u32> {
    t.index(e).ok_or_else(|| Error::ForeignElement {
        element: format!("{e:?}"),
        ring: t.ring().to_string(),
    })
}

impl FiniteTables {
    /// Direct definition at `w = a + b*lambda`; `(a, b)` must be comaximal.
    pub fn is_diadem_direct(&self, a: u32, b: u32, lambda: u32) -> Result<bool> {
        if !self.comaximal2(a, b) {
            return Err(not_comaximal(self.ring(), &[self.element(a), self.element(b)]));
        }
        Ok(self.diadem_direct(self.add_mul(a, b, lambda)))
    }

    /// For every pair of associates `a`, `b`, look for diadems `d1`, `d2`
    /// with `a*d1 = b` and `b*d2 = a`. Every element `d` is the diadem
    /// candidate `0 + 1*d` of the comaximal pair `(0, 1)`, so "a diadem of
    /// some comaximal pair" is the direct test on `d` itself.
    pub fn associate_diadems(&self) -> PropertyReport {
        let mask = self.diadem_mask();
        let n = self.len() as u32;
        let mut checked = 0u128;
        for a in 0..n {
            for b in 0..n {
                checked += 1;
                if self.principal(a) != self.principal(b) {
                    continue;
                }
                let factor = |x: u32, y: u32| (0..n).any(|d| mask[d as usize] && self.mul(x, d) == y);
                if !(factor(a, b) && factor(b, a)) {
                    return self.report(
                        Property::AssociateDiadems,
                        Outcome {
                            failure: Some(vec![a, b]),
                            checked,
                        },
                    );
                }
            }
        }
        self.report(
            Property::AssociateDiadems,
            Outcome {
                failure: None,
                checked,
            },
        )
    }
}

/// Direct definition on a finite ring: for all `(c, d)` with
/// `(w, c, d)` comaximal some `mu` makes `(w, c + d*mu)` comaximal, where
/// `w = a + b*lambda`.
pub fn is_diadem_direct(ring: &Ring, a: &Element, b: &Element, lambda: &Element) -> Result<bool> {
    let t = tables_for(ring, Property::StableRange1, &LabConfig::default())?;
    t.is_diadem_direct(tables_index(&t, a)?, tables_index(&t, b)?, tables_index(&t, lambda)?)
}

pub fn is_diadem_via_quotient(ring: &Ring, a: &Element, b: &Element, lambda: &Element) -> Result<bool> {
    is_diadem_via_quotient_with(ring, a, b, lambda, &LabConfig::default())
}

/// Quotient criterion at `w = a + b*lambda`. Over ℤ and GF(p)[x] the
/// quotient is decided arithmetically (see [`quotient_sr1`]); finite rings
/// build `R/(w)` and run the exhaustive stable-range-1 check.
pub fn is_diadem_via_quotient_with(
    ring: &Ring,
    a: &Element,
    b: &Element,
    lambda: &Element,
    config: &LabConfig,
) -> Result<bool> {
    for e in [a, b, lambda] {
        ring.check(e)?;
    }
    let w = ring.add_mul(a, b, lambda);
    if ring.is_bezout_domain() && ring.is_zero(&w) {
        return Err(Error::InfiniteQuotient(ring.to_string()));
    }
    if !super::is_comaximal(ring, &[a.clone(), b.clone()]) {
        return Err(not_comaximal(ring, &[a, b]));
    }
    quotient_has_sr1(ring, &w, config)
}

fn quotient_has_sr1(ring: &Ring, w: &Element, config: &LabConfig) -> Result<bool> {
    if ring.is_unit(w) {
        return Ok(true);
    }
    if ring.is_bezout_domain() {
        return quotient_sr1(ring, w, config.quotient_limit);
    }
    if !ring.is_finite() {
        return Err(Error::Unsupported {
            op: "diadem quotient criterion",
            ring: ring.to_string(),
        });
    }
    let q = ring.quotient(w)?;
    Ok(tables_for(&q, Property::StableRange1, config)?.stable_range_1().holds)
}

/// Stable range 1 of `R/(w)` for `R` = ℤ or GF(p)[x], decided exactly on
/// coset classes instead of element pairs.
///
/// For a pair `(a, b)` of `R/(w)` let `d` be the normal generator of
/// `bR + wR`. Then `{a + b*l}` is the coset `a + dR`, and `(a, b)` is
/// comaximal iff `gcd(a, d)` is a unit. So stable range 1 holds iff for every
/// normal divisor `d` of `w` and every residue `r` mod `d` coprime to `d`,
/// some `r + d*t` (`t` mod `w/d`) is coprime to `w`.
pub(crate) fn quotient_sr1(ring: &Ring, w: &Element, limit: u128) -> Result<bool> {
    let too_large = |card: u128| Error::TooLarge {
        ring: format!("{ring}/({})", ring.format_element(w)),
        cardinality: card,
        bound: limit,
    };
    match (ring.kind(), w) {
        (RingKind::Integers, Element::Int(n)) => {
            let m = n.abs();
            let m = match m.to_u64() {
                Some(m) if (m as u128) <= limit => m,
                _ => return Err(too_large(m.to_u128().unwrap_or(u128::MAX))),
            };
            Ok(int_sr1(m))
        }
        (RingKind::PolynomialsOverPrimeField(p), Element::Poly(f)) => {
            let p = *p;
            let deg = poly::degree(f).ok_or_else(|| Error::InfiniteQuotient(ring.to_string()))?;
            let card = (p as u128).checked_pow(deg as u32).unwrap_or(u128::MAX);
            if card > limit {
                return Err(too_large(card));
            }
            Ok(poly_sr1(&poly::make_monic(f, p).0, p))
        }
        _ => Err(Error::Unsupported {
            op: "arithmetic quotient criterion",
            ring: ring.to_string(),
        }),
    }
}

fn int_sr1(m: u64) -> bool {
    if m <= 1 {
        return true;
    }
    (1..=m).filter(|d| m.is_multiple_of(*d)).all(|d| {
        (0..d)
            .filter(|r| r.gcd(&d) == 1)
            .all(|r| (0..m / d).any(|t| (r + d * t).gcd(&m) == 1))
    })
}

fn poly_sr1(w: &[u64], p: u64) -> bool {
    let n = w.len() - 1;
    if n == 0 {
        return true;
    }
    let coprime = |x: &[u64], y: &[u64]| poly::ext_gcd(x, y, p).0 == [1];
    for k in 0..=n {
        // monic divisors of degree k
        let count = (p as u128).pow(k as u32);
        for i in 0..count {
            let mut d = poly::from_index(i, p);
            d.resize(k, 0);
            d.push(1);
            if !poly::rem(w, &d, p).is_empty() {
                continue;
            }
            let lifts = (p as u128).pow((n - k) as u32);
            for ri in 0..count {
                let r = poly::from_index(ri, p);
                if !coprime(&r, &d) {
                    continue;
                }
                let found = (0..lifts).any(|ti| {
                    let x = poly::add(&r, &poly::mul(&d, &poly::from_index(ti, p), p), p);
                    coprime(&x, w)
                });
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

pub fn find_diadem(ring: &Ring, a: &Element, b: &Element) -> Result<DiademWitness> {
    find_diadem_with(ring, a, b, &LabConfig::default())
}

/// First multiplier in the ring's search order giving a diadem: over ℤ the
/// order is `0, 1, -1, 2, ...` (zero values skipped), over GF(p)[x] the
/// base-p digit order, over finite rings canonical element order.
pub fn find_diadem_with(
    ring: &Ring,
    a: &Element,
    b: &Element,
    config: &LabConfig,
) -> Result<DiademWitness> {
    ring.check(a)?;
    ring.check(b)?;
    if !super::is_comaximal(ring, &[a.clone(), b.clone()]) {
        return Err(not_comaximal(ring, &[a, b]));
    }
    let witness = |lambda: Element, diadem: Element, evidence| DiademWitness {
        a: a.clone(),
        b: b.clone(),
        lambda,
        diadem,
        evidence,
    };
    if ring.is_bezout_domain() {
        for i in 0..config.search_radius {
            let lambda = ring.search_candidate(i).expect("infinite search order");
            let w = ring.add_mul(a, b, &lambda);
            if ring.is_zero(&w) {
                continue;
            }
            if ring.is_unit(&w) {
                return Ok(witness(lambda, w, Evidence::TrivialUnit));
            }
            if quotient_sr1(ring, &w, config.quotient_limit)? {
                return Ok(witness(lambda, w, Evidence::QuotientStableRange1));
            }
        }
        return Err(Error::SearchExhausted(format!(
            "no diadem among the first {} multipliers",
            config.search_radius
        )));
    }
    let t = tables_for(ring, Property::StableRange1, config)?;
    let (ia, ib) = (tables_index(&t, a)?, tables_index(&t, b)?);
    for l in 0..t.len() as u32 {
        let w = t.add_mul(ia, ib, l);
        if t.is_unit(w) {
            return Ok(witness(t.element(l).clone(), t.element(w).clone(), Evidence::TrivialUnit));
        }
        if t.diadem_direct(w) {
            return Ok(witness(
                t.element(l).clone(),
                t.element(w).clone(),
                Evidence::ExhaustiveDefinition,
            ));
        }
    }
    Err(Error::SearchExhausted(format!(
        "pair ({}, {}) has no diadem in {ring}",
        ring.format_element(a),
        ring.format_element(b)
    )))
}

pub fn verify_associate_diadems(ring: &Ring) -> Result<PropertyReport> {
    verify_associate_diadems_with(ring, &LabConfig::default())
}

/// Associates differ by diadem factors. Requires dyadic range 1.
pub fn verify_associate_diadems_with(ring: &Ring, config: &LabConfig) -> Result<PropertyReport> {
    let t = tables_for(ring, Property::AssociateDiadems, config)?;
    if !t.dyadic_range_1().holds {
        return Err(Error::Precondition(format!("{ring} does not have dyadic range 1")));
    }
    Ok(t.associate_diadems())
}
