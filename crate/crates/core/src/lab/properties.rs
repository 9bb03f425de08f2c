//! Exhaustive decision procedures for ring properties on finite rings.
//!
//! Every checker enumerates its universally quantified tuples in canonical
//! (lexicographic) order, so the first failing tuple is also the least one.

use std::fmt;
use std::str::FromStr;

use super::tables::FiniteTables;
use super::LabConfig;
use crate::error::{Error, Result};
use crate::ring::{Element, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    StableRange1,
    StableRange2,
    IdempotentStableRange1,
    Clean,
    Exchange,
    Gelfand,
    Hermite,
    DyadicRange1,
    /// Associates are related by diadem factors: `aR = bR` implies
    /// `a*d1 = b` and `b*d2 = a` for diadems `d1`, `d2`.
    AssociateDiadems,
}

impl Property {
    /// The properties reported by `check ... all`, in output order.
    pub const ALL: [Property; 8] = [
        Property::StableRange1,
        Property::StableRange2,
        Property::IdempotentStableRange1,
        Property::Clean,
        Property::Exchange,
        Property::Gelfand,
        Property::Hermite,
        Property::DyadicRange1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::StableRange1 => "stable-range-1",
            Property::StableRange2 => "stable-range-2",
            Property::IdempotentStableRange1 => "idempotent-stable-range-1",
            Property::Clean => "clean",
            Property::Exchange => "exchange",
            Property::Gelfand => "gelfand",
            Property::Hermite => "hermite",
            Property::DyadicRange1 => "dyadic-range-1",
            Property::AssociateDiadems => "associate-diadems",
        }
    }

    /// Properties whose inner search nests a further pair quantifier get the
    /// tighter cardinality bound.
    pub fn is_triple_quantifier(self) -> bool {
        matches!(
            self,
            Property::StableRange2 | Property::DyadicRange1 | Property::AssociateDiadems
        )
    }

    fn labels(self) -> &'static [&'static str] {
        match self {
            Property::Clean => &["a"],
            Property::StableRange2 => &["a", "b", "c"],
            _ => &["a", "b"],
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        Property::ALL
            .iter()
            .chain(std::iter::once(&Property::AssociateDiadems))
            .find(|p| p.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("unknown property `{s}`"),
            })
    }
}

/// Verdict of one exhaustive check.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub property: Property,
    pub ring: Ring,
    pub holds: bool,
    pub counterexample: Option<Vec<(&'static str, Element)>>,
    /// Universally quantified instances examined; the full domain size when
    /// the property holds.
    pub certificate_count: u128,
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "property={} ring={} holds={}",
            self.property, self.ring, self.holds
        )?;
        if let Some(cx) = &self.counterexample {
            let parts: Vec<String> = cx
                .iter()
                .map(|(l, e)| format!("{l}={}", self.ring.format_element(e)))
                .collect();
            write!(f, " counterexample=({})", parts.join(";"))?;
        }
        write!(f, " checked={}", self.certificate_count)
    }
}

impl PropertyReport {
    /// Re-evaluates the raw defining formula at the counterexample, by brute
    /// force over ring elements and without the operation tables. Returns
    /// `true` when the counterexample is genuine. Reports without a
    /// counterexample return `false`.
    pub fn replay(&self) -> Result<bool> {
        let Some(cx) = &self.counterexample else {
            return Ok(false);
        };
        let args: Vec<Element> = cx.iter().map(|(_, e)| e.clone()).collect();
        raw::violates(&self.ring, self.property, &args)
    }
}

pub(crate) struct Outcome {
    pub(crate) failure: Option<Vec<u32>>,
    pub(crate) checked: u128,
}

impl FiniteTables {
    pub(crate) fn report(&self, property: Property, outcome: Outcome) -> PropertyReport {
        let labels = property.labels();
        PropertyReport {
            property,
            ring: self.ring().clone(),
            holds: outcome.failure.is_none(),
            counterexample: outcome.failure.map(|f| {
                f.iter()
                    .zip(labels.iter())
                    .map(|(&i, &l)| (l, self.element(i).clone()))
                    .collect()
            }),
            certificate_count: outcome.checked,
        }
    }

    fn sweep_pairs(&self, mut ok: impl FnMut(u32, u32) -> bool) -> Outcome {
        let n = self.len() as u32;
        let mut checked = 0u128;
        for a in 0..n {
            for b in 0..n {
                checked += 1;
                if !ok(a, b) {
                    return Outcome {
                        failure: Some(vec![a, b]),
                        checked,
                    };
                }
            }
        }
        Outcome {
            failure: None,
            checked,
        }
    }

    fn all(&self) -> std::ops::Range<u32> {
        0..self.len() as u32
    }

    pub fn stable_range_1(&self) -> PropertyReport {
        let out = self.sweep_pairs(|a, b| {
            !self.comaximal2(a, b) || self.all().any(|l| self.is_unit(self.add_mul(a, b, l)))
        });
        self.report(Property::StableRange1, out)
    }

    pub fn stable_range_2(&self) -> PropertyReport {
        let n = self.len() as u32;
        let mut checked = 0u128;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    checked += 1;
                    if !self.comaximal3(a, b, c) {
                        continue;
                    }
                    let shortened = self.all().any(|l| {
                        let x = self.add_mul(a, c, l);
                        self.all().any(|m| self.comaximal2(x, self.add_mul(b, c, m)))
                    });
                    if !shortened {
                        return self.report(
                            Property::StableRange2,
                            Outcome {
                                failure: Some(vec![a, b, c]),
                                checked,
                            },
                        );
                    }
                }
            }
        }
        self.report(
            Property::StableRange2,
            Outcome {
                failure: None,
                checked,
            },
        )
    }

    pub fn idempotent_stable_range_1(&self) -> PropertyReport {
        let out = self.sweep_pairs(|a, b| {
            !self.comaximal2(a, b)
                || self
                    .idempotents()
                    .iter()
                    .any(|&e| self.is_unit(self.add_mul(a, b, e)))
        });
        self.report(Property::IdempotentStableRange1, out)
    }

    pub fn clean(&self) -> PropertyReport {
        let mut checked = 0u128;
        for a in self.all() {
            checked += 1;
            let decomposes = self
                .idempotents()
                .iter()
                .any(|&e| self.is_unit(self.sub(a, e)));
            if !decomposes {
                return self.report(
                    Property::Clean,
                    Outcome {
                        failure: Some(vec![a]),
                        checked,
                    },
                );
            }
        }
        self.report(
            Property::Clean,
            Outcome {
                failure: None,
                checked,
            },
        )
    }

    pub fn exchange(&self) -> PropertyReport {
        let out = self.sweep_pairs(|a, b| {
            if !self.comaximal2(a, b) {
                return true;
            }
            let (ia, ib) = (self.principal(a), self.principal(b));
            self.idempotents().iter().any(|&e| {
                self.in_ideal(ia, e) && self.in_ideal(ib, self.sub(self.one(), e))
            })
        });
        self.report(Property::Exchange, out)
    }

    pub fn gelfand(&self) -> PropertyReport {
        let one = self.one();
        let zero = self.zero();
        let out = self.sweep_pairs(|a, b| {
            if self.add(a, b) != one {
                return true;
            }
            self.all().any(|x| {
                let l = self.add_mul(one, a, x);
                self.all()
                    .any(|y| self.mul(l, self.add_mul(one, b, y)) == zero)
            })
        });
        self.report(Property::Gelfand, out)
    }

    /// `(a b)·Q = (g, 0)` with `Q` invertible. The second column `(s, t)` of
    /// an invertible 2×2 matrix is exactly a comaximal pair (complete it with
    /// `s*x + t*y = 1` as `[[y, s], [-x, t]]`), so the search runs over
    /// comaximal `(s, t)` with `a*s + b*t = 0`.
    pub fn hermite(&self) -> PropertyReport {
        let zero = self.zero();
        let out = self.sweep_pairs(|a, b| {
            self.all().any(|s| {
                let as_ = self.mul(a, s);
                self.all()
                    .any(|t| self.add_mul(as_, b, t) == zero && self.comaximal2(s, t))
            })
        });
        self.report(Property::Hermite, out)
    }

    /// Direct diadem test for `w`: every comaximal `(w, c, d)` shortens to a
    /// comaximal `(w, c + d*mu)`.
    pub fn diadem_direct(&self, w: u32) -> bool {
        self.all().all(|c| {
            self.all().all(|d| {
                !self.comaximal3(w, c, d)
                    || self
                        .all()
                        .any(|m| self.comaximal2(w, self.add_mul(c, d, m)))
            })
        })
    }

    /// Per-element diadem verdicts, computed once.
    pub fn diadem_mask(&self) -> Vec<bool> {
        self.all().map(|w| self.diadem_direct(w)).collect()
    }

    pub fn dyadic_range_1(&self) -> PropertyReport {
        let mut cache: Vec<Option<bool>> = vec![None; self.len()];
        let out = self.sweep_pairs(|a, b| {
            if !self.comaximal2(a, b) {
                return true;
            }
            self.all().any(|l| {
                let w = self.add_mul(a, b, l) as usize;
                *cache[w].get_or_insert_with(|| self.diadem_direct(w as u32))
            })
        });
        self.report(Property::DyadicRange1, out)
    }

    pub fn check(&self, property: Property) -> PropertyReport {
        match property {
            Property::StableRange1 => self.stable_range_1(),
            Property::StableRange2 => self.stable_range_2(),
            Property::IdempotentStableRange1 => self.idempotent_stable_range_1(),
            Property::Clean => self.clean(),
            Property::Exchange => self.exchange(),
            Property::Gelfand => self.gelfand(),
            Property::Hermite => self.hermite(),
            Property::DyadicRange1 => self.dyadic_range_1(),
            Property::AssociateDiadems => self.associate_diadems(),
        }
    }
}

/// Builds tables for `ring` after enforcing the bound that applies to
/// `property`.
pub(crate) fn tables_for(ring: &Ring, property: Property, config: &LabConfig) -> Result<FiniteTables> {
    let n = ring
        .cardinality()
        .ok_or_else(|| Error::InfiniteRing(ring.to_string()))?;
    let bound = if property.is_triple_quantifier() {
        config.triple_bound
    } else {
        config.pair_bound
    };
    if n > bound {
        return Err(Error::TooLarge {
            ring: ring.to_string(),
            cardinality: n,
            bound,
        });
    }
    FiniteTables::new(ring)
}

pub fn check_property(ring: &Ring, property: Property, config: &LabConfig) -> Result<PropertyReport> {
    Ok(tables_for(ring, property, config)?.check(property))
}

macro_rules! checker {
    ($name:ident, $prop:expr) => {
        pub fn $name(ring: &Ring) -> Result<PropertyReport> {
            check_property(ring, $prop, &LabConfig::default())
        }
    };
}

checker!(check_stable_range_1, Property::StableRange1);
checker!(check_stable_range_2, Property::StableRange2);
checker!(check_idempotent_stable_range_1, Property::IdempotentStableRange1);
checker!(check_clean, Property::Clean);
checker!(check_exchange, Property::Exchange);
checker!(check_gelfand, Property::Gelfand);
checker!(check_hermite, Property::Hermite);
checker!(check_dyadic_range_1, Property::DyadicRange1);

/// Brute-force definitions over ring elements, used to replay counterexamples.
pub(crate) mod raw {
    use super::Property;
    use crate::error::{Error, Result};
    use crate::ring::{Element, Ring};

    fn comaximal(r: &Ring, gens: &[Element]) -> Result<bool> {
        Ok(r.ideal_generated(gens)?.contains(&r.one()))
    }

    fn idempotents(r: &Ring, els: &[Element]) -> Vec<Element> {
        els.iter().filter(|e| r.mul(e, e) == **e).cloned().collect()
    }

    pub(crate) fn diadem(r: &Ring, els: &[Element], w: &Element) -> Result<bool> {
        for c in els {
            for d in els {
                if !comaximal(r, &[w.clone(), c.clone(), d.clone()])? {
                    continue;
                }
                let mut found = false;
                for m in els {
                    if comaximal(r, &[w.clone(), r.add_mul(c, d, m)])? {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True when `args` falsify `property`'s defining formula in `r`.
    pub(crate) fn violates(r: &Ring, property: Property, args: &[Element]) -> Result<bool> {
        let els = r.elements()?;
        let one = r.one();
        let zero = r.zero();
        let arity = property.labels().len();
        if args.len() != arity {
            return Err(Error::Precondition(format!(
                "{property} takes {arity} arguments, got {}",
                args.len()
            )));
        }
        let a = &args[0];
        Ok(match property {
            Property::StableRange1 => {
                let b = &args[1];
                comaximal(r, &[a.clone(), b.clone()])?
                    && !els.iter().any(|l| r.is_unit(&r.add_mul(a, b, l)))
            }
            Property::StableRange2 => {
                let (b, c) = (&args[1], &args[2]);
                if !comaximal(r, args)? {
                    return Ok(false);
                }
                for l in &els {
                    for m in &els {
                        if comaximal(r, &[r.add_mul(a, c, l), r.add_mul(b, c, m)])? {
                            return Ok(false);
                        }
                    }
                }
                true
            }
            Property::IdempotentStableRange1 => {
                let b = &args[1];
                comaximal(r, &[a.clone(), b.clone()])?
                    && !idempotents(r, &els)
                        .iter()
                        .any(|e| r.is_unit(&r.add_mul(a, b, e)))
            }
            Property::Clean => !els.iter().any(|u| {
                r.is_unit(u) && {
                    let e = r.sub(a, u);
                    r.mul(&e, &e) == e
                }
            }),
            Property::Exchange => {
                let b = &args[1];
                if !comaximal(r, &[a.clone(), b.clone()])? {
                    return Ok(false);
                }
                let (ia, ib) = (r.principal_ideal(a)?, r.principal_ideal(b)?);
                !idempotents(r, &els)
                    .iter()
                    .any(|e| ia.contains(e) && ib.contains(&r.sub(&one, e)))
            }
            Property::Gelfand => {
                let b = &args[1];
                r.add(a, b) == one
                    && !els.iter().any(|x| {
                        els.iter().any(|y| {
                            r.mul(&r.add_mul(&one, a, x), &r.add_mul(&one, b, y)) == zero
                        })
                    })
            }
            Property::Hermite => {
                let b = &args[1];
                for q11 in &els {
                    for q12 in &els {
                        for q21 in &els {
                            for q22 in &els {
                                let det = r.sub(&r.mul(q11, q22), &r.mul(q12, q21));
                                if r.is_unit(&det) && r.add(&r.mul(a, q12), &r.mul(b, q22)) == zero {
                                    return Ok(false);
                                }
                            }
                        }
                    }
                }
                true
            }
            Property::DyadicRange1 => {
                let b = &args[1];
                if !comaximal(r, &[a.clone(), b.clone()])? {
                    return Ok(false);
                }
                for l in &els {
                    if diadem(r, &els, &r.add_mul(a, b, l))? {
                        return Ok(false);
                    }
                }
                true
            }
            Property::AssociateDiadems => {
                let b = &args[1];
                if r.principal_ideal(a)? != r.principal_ideal(b)? {
                    return Ok(false);
                }
                let factor = |x: &Element, y: &Element| -> Result<bool> {
                    for d in &els {
                        if r.mul(x, d) == *y && diadem(r, &els, d)? {
                            return Ok(true);
                        }
                    }
                    Ok(false)
                };
                !(factor(a, b)? && factor(b, a)?)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(desc: &str) -> Ring {
        Ring::parse(desc).unwrap()
    }

    #[test]
    fn stable_range_1_examples() {
        let r = check_stable_range_1(&ring("Z/6")).unwrap();
        assert!(r.holds);
        assert_eq!(r.certificate_count, 36);
        assert!(check_stable_range_1(&ring("GF(5)")).unwrap().holds);
        let big = check_property(
            &ring("Z/4 x Z/9"),
            Property::StableRange1,
            &LabConfig::default(),
        )
        .unwrap();
        assert!(big.holds);
        assert_eq!(big.certificate_count, 36 * 36);
    }

    #[test]
    fn stable_range_2_examples() {
        for desc in ["Z/12", "GF(2)", "Z/4 x Z/4"] {
            let r = check_stable_range_2(&ring(desc)).unwrap();
            assert!(r.holds, "{desc}");
        }
        let r = check_stable_range_2(&ring("Z/12")).unwrap();
        assert_eq!(r.certificate_count, 12 * 12 * 12);
    }

    #[test]
    fn idempotent_and_clean_examples() {
        for desc in ["Z/12", "GF(7)", "Z/4"] {
            assert!(check_idempotent_stable_range_1(&ring(desc)).unwrap().holds);
        }
        for desc in ["Z/12", "GF(2)", "Z/4 x Z/9"] {
            let r = check_clean(&ring(desc)).unwrap();
            assert!(r.holds, "{desc}");
        }
        // 6 = 5 + 1 in Z/12
        let z12 = ring("Z/12");
        assert!(z12.is_unit(&Element::Residue(5)));
        assert_eq!(z12.add(&Element::Residue(5), &Element::Residue(1)), Element::Residue(6));
    }

    #[test]
    fn exchange_gelfand_hermite_examples() {
        for desc in ["Z/12", "GF(3)", "Z/8"] {
            assert!(check_exchange(&ring(desc)).unwrap().holds, "{desc}");
        }
        for desc in ["Z/12", "GF(5)", "Z/4 x Z/9"] {
            assert!(check_gelfand(&ring(desc)).unwrap().holds, "{desc}");
        }
        for desc in ["Z/12", "GF(2)"] {
            assert!(check_hermite(&ring(desc)).unwrap().holds, "{desc}");
        }
        let zero = Ring::integers_mod_unchecked(1);
        let r = check_hermite(&zero).unwrap();
        assert!(r.holds);
        assert_eq!(r.certificate_count, 1);
    }

    #[test]
    fn dyadic_range_1_examples() {
        assert!(check_dyadic_range_1(&ring("Z/12")).unwrap().holds);
        assert!(check_dyadic_range_1(&ring("GF(7)")).unwrap().holds);
        let cfg = LabConfig {
            triple_bound: 50,
            ..LabConfig::default()
        };
        assert!(check_property(&ring("Z/4 x Z/9"), Property::DyadicRange1, &cfg).unwrap().holds);
    }

    #[test]
    fn bounds_and_infinite_rings() {
        assert!(matches!(
            check_stable_range_1(&ring("Z")),
            Err(Error::InfiniteRing(_))
        ));
        assert!(matches!(
            check_dyadic_range_1(&ring("Z/17")),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn zero_ring_is_vacuous() {
        let zero = Ring::integers_mod_unchecked(1);
        let t = FiniteTables::new(&zero).unwrap();
        for p in Property::ALL {
            assert!(t.check(p).holds, "{p}");
        }
    }

    #[test]
    fn hermite_shortcut_matches_matrix_search() {
        for desc in ["Z/4", "Z/6", "GF(2)[x]/(0,0,1)", "Z/2 x Z/2"] {
            let r = ring(desc);
            let els = r.elements().unwrap();
            let t = FiniteTables::new(&r).unwrap();
            assert!(t.hermite().holds);
            for a in &els {
                for b in &els {
                    assert!(!raw::violates(&r, Property::Hermite, &[a.clone(), b.clone()]).unwrap());
                }
            }
        }
    }

    #[test]
    fn replay_rejects_fabricated_counterexamples() {
        let r = ring("Z/6");
        for (p, args) in [
            (Property::StableRange1, vec![1, 0]),
            (Property::StableRange2, vec![1, 0, 0]),
            (Property::Clean, vec![3]),
            (Property::Exchange, vec![2, 3]),
            (Property::Gelfand, vec![3, 4]),
            (Property::Hermite, vec![2, 4]),
            (Property::DyadicRange1, vec![2, 3]),
        ] {
            let report = PropertyReport {
                property: p,
                ring: r.clone(),
                holds: false,
                counterexample: Some(
                    p.labels()
                        .iter()
                        .zip(args)
                        .map(|(&l, v)| (l, Element::Residue(v)))
                        .collect(),
                ),
                certificate_count: 1,
            };
            assert!(!report.replay().unwrap(), "{p}");
        }
    }

    #[test]
    fn report_line_format() {
        let r = check_gelfand(&ring("Z/12")).unwrap();
        assert_eq!(
            r.to_string(),
            "property=gelfand ring=Z/12 holds=true checked=144"
        );
        let fake = PropertyReport {
            counterexample: Some(vec![("a", Element::Residue(2)), ("b", Element::Residue(3))]),
            holds: false,
            ..r
        };
        assert_eq!(
            fake.to_string(),
            "property=gelfand ring=Z/12 holds=false counterexample=(a=2;b=3) checked=144"
        );
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert!("stable-range-3".parse::<Property>().is_err());
    }
}
