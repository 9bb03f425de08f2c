//! Constructive stable range 2 and Gelfand range 1 witnesses.

use super::hermite::require_bezout_domain;
use crate::error::{Error, Result};
use crate::lab::{check_property, find_diadem_with, is_comaximal, LabConfig, Property};
use crate::ring::{Element, Ring};

/// `(a + c*p)R + (b + c*q)R = R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SR2Witness {
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub p: Element,
    pub q: Element,
}

impl SR2Witness {
    /// `(a + c*p, b + c*q)`.
    pub fn shortened(&self, ring: &Ring) -> (Element, Element) {
        (
            ring.add_mul(&self.a, &self.c, &self.p),
            ring.add_mul(&self.b, &self.c, &self.q),
        )
    }

    pub fn holds(&self, ring: &Ring) -> bool {
        let (x, y) = self.shortened(ring);
        is_comaximal(ring, &[x, y])
    }
}

pub fn stable_range_2_witness(ring: &Ring, a: &Element, b: &Element, c: &Element) -> Result<SR2Witness> {
    stable_range_2_witness_with(ring, a, b, c, &LabConfig::default())
}

/// Shortens a comaximal triple through a diadem.
///
/// With `d = gcd(b, c) = b*s + c*t`, the pair `(a, d)` is comaximal; let
/// `w = a + d*lambda` be its diadem. `(w, b, c)` is comaximal, so some `mu`
/// makes `w` and `b + c*mu` comaximal. Modulo `b + c*mu` we have
/// `b = -c*mu`, hence `w = a + c*lambda*(t - mu*s)` there, and
/// `(p, q) = (lambda*(t - mu*s), mu)` works.
pub fn stable_range_2_witness_with(
    ring: &Ring,
    a: &Element,
    b: &Element,
    c: &Element,
    config: &LabConfig,
) -> Result<SR2Witness> {
    require_bezout_domain(ring, "stable range 2 witness")?;
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
    let d = ring.bezout(b, c)?;
    let diadem = find_diadem_with(ring, a, &d.g, config)?;
    let w = diadem.diadem;
    let mu = (0..config.search_radius)
        .filter_map(|i| ring.search_candidate(i))
        .find(|mu| is_comaximal(ring, &[w.clone(), ring.add_mul(b, c, mu)]))
        .ok_or_else(|| Error::SearchExhausted("no multiplier completes the diadem".into()))?;
    let p = ring.mul(&diadem.lambda, &ring.sub(&d.v, &ring.mul(&mu, &d.u)));
    let witness = SR2Witness {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        p,
        q: mu,
    };
    if !witness.holds(ring) {
        return Err(Error::Precondition(format!(
            "constructed pair is not comaximal for ({}, {}, {})",
            ring.format_element(a),
            ring.format_element(b),
            ring.format_element(c)
        )));
    }
    Ok(witness)
}

pub fn gelfand_range_1_witness(a: i64, b: i64) -> Result<i64> {
    gelfand_range_1_witness_with(a, b, &LabConfig::default())
}

/// First `lambda` in the order `0, 1, -1, 2, ...` with `a + b*lambda`
/// nonzero and `Z/(a + b*lambda)` Gelfand. The quotient must fit the pair
/// bound of `config`.
pub fn gelfand_range_1_witness_with(a: i64, b: i64, config: &LabConfig) -> Result<i64> {
    let z = Ring::integers();
    let (ea, eb) = (Element::int(a), Element::int(b));
    if !is_comaximal(&z, &[ea, eb]) {
        return Err(Error::NotComaximal(format!("({a}, {b}) in Z")));
    }
    for i in 0..config.search_radius {
        let k = i.div_ceil(2) as i64;
        let lambda = if i % 2 == 1 { k } else { -k };
        let w = (a as i128 + b as i128 * lambda as i128).unsigned_abs();
        if w == 0 {
            continue;
        }
        let quotient = if w == 1 {
            z.quotient(&z.one())?
        } else {
            let m = u64::try_from(w).map_err(|_| Error::TooLarge {
                ring: format!("Z/{w}"),
                cardinality: w,
                bound: config.pair_bound,
            })?;
            Ring::integers_mod(m)?
        };
        if check_property(&quotient, Property::Gelfand, config)?.holds {
            return Ok(lambda);
        }
    }
    Err(Error::SearchExhausted(format!(
        "no Gelfand quotient among the first {} multipliers",
        config.search_radius
    )))
}
