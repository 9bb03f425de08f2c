//! Enumeration-backed constructions on finite rings: ideals, coset
//! quotients, the Jacobson radical and annihilators.

use num_traits::{Signed, ToPrimitive, Zero};

use super::{Element, Ring, RingKind};
use crate::error::{Error, Result};

/// `base / I` for a finite `base`, with every coset represented by its least
/// member in canonical order.
pub struct CosetQuotient {
    base: Ring,
    generators: Vec<Element>,
    ideal: Vec<Element>,
    class_of: Vec<u32>,
    reps: Vec<usize>,
}

impl CosetQuotient {
    fn new(base: Ring, generators: Vec<Element>) -> Result<CosetQuotient> {
        let ideal = base.ideal_generated(&generators)?;
        let n = base.enumerable_size()?;
        let ideal_idx: Vec<usize> = ideal
            .iter()
            .map(|e| base.index_of(e).expect("ideal member"))
            .collect();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if class_of[x] != u32::MAX {
                continue;
            }
            let class = reps.len() as u32;
            reps.push(x);
            let xe = base.element_at(x);
            for &i in &ideal_idx {
                let y = base.add(&xe, &base.element_at(i));
                class_of[base.index_of(&y).expect("closed under +")] = class;
            }
        }
        Ok(CosetQuotient {
            base,
            generators,
            ideal,
            class_of,
            reps,
        })
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Members of the ideal, in canonical order of the base ring.
    pub fn ideal(&self) -> &[Element] {
        &self.ideal
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    /// Canonical representative of the coset of `e`.
    pub fn reduce(&self, e: &Element) -> Element {
        let i = self
            .base
            .index_of(e)
            .unwrap_or_else(|| panic!("element {e:?} is not in {}", self.base));
        self.base.element_at(self.reps[self.class_of[i] as usize])
    }

    pub(crate) fn rep_index(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub(crate) fn class_index(&self, e: &Element) -> Option<usize> {
        let i = self.base.index_of(e)?;
        let c = self.class_of[i] as usize;
        (self.reps[c] == i).then_some(c)
    }
}

/// `J(R)`: all `x` such that `1 - x*r` is a unit for every `r`.
#[derive(Debug, Clone)]
pub struct JacobsonRadicalSet {
    pub ring: Ring,
    pub members: Vec<Element>,
}

impl JacobsonRadicalSet {
    pub fn contains(&self, e: &Element) -> bool {
        self.members.contains(e)
    }

    /// Closed under addition and under multiplication by ring elements.
    pub fn is_ideal(&self) -> bool {
        let Ok(els) = self.ring.elements() else {
            return false;
        };
        self.members.iter().all(|x| {
            self.members.iter().all(|y| self.contains(&self.ring.add(x, y)))
                && els.iter().all(|r| self.contains(&self.ring.mul(x, r)))
        })
    }
}

impl Ring {
    /// `R/(c)`. Over ℤ this is ℤ/|c|, over GF(p)[x] it is GF(p)[x]/(c),
    /// products split componentwise and other finite rings use cosets. A unit
    /// `c` gives the zero ring.
    pub fn quotient(&self, c: &Element) -> Result<Ring> {
        self.check(c)?;
        match (self.kind(), c) {
            (RingKind::Integers, Element::Int(n)) => {
                if n.is_zero() {
                    return Err(Error::InfiniteQuotient(self.to_string()));
                }
                let m = n.abs().to_u64().ok_or_else(|| Error::TooLarge {
                    ring: format!("Z/{n}"),
                    cardinality: u128::MAX,
                    bound: u64::MAX as u128,
                })?;
                Ok(Ring::integers_mod_unchecked(m))
            }
            (RingKind::PolynomialsOverPrimeField(p), Element::Poly(f)) => {
                if f.is_empty() {
                    return Err(Error::InfiniteQuotient(self.to_string()));
                }
                Ring::polynomial_quotient(*p, f)
            }
            (RingKind::Product(l, r), Element::Pair(a, b)) => {
                Ok(Ring::product(l.quotient(a)?, r.quotient(b)?))
            }
            _ => self.quotient_by_ideal(std::slice::from_ref(c)),
        }
    }

    /// `R/I` with `I` generated by `generators`; `R` must be finite.
    pub fn quotient_by_ideal(&self, generators: &[Element]) -> Result<Ring> {
        for g in generators {
            self.check(g)?;
        }
        Ok(Ring::coset_quotient(CosetQuotient::new(
            self.clone(),
            generators.to_vec(),
        )?))
    }

    pub fn principal_ideal(&self, a: &Element) -> Result<Vec<Element>> {
        self.ideal_generated(std::slice::from_ref(a))
    }

    /// `Σ gᵢR` as a sorted set of elements.
    pub fn ideal_generated(&self, generators: &[Element]) -> Result<Vec<Element>> {
        let n = self.enumerable_size()?;
        let els: Vec<Element> = (0..n).map(|i| self.element_at(i)).collect();
        let mut member = vec![false; n];
        member[self.index_of(&self.zero()).expect("zero")] = true;
        for g in generators {
            self.check(g)?;
            let mut principal = vec![false; n];
            for r in &els {
                principal[self.index_of(&self.mul(g, r)).expect("closed")] = true;
            }
            let current: Vec<usize> = (0..n).filter(|&i| member[i]).collect();
            for (j, &in_p) in principal.iter().enumerate() {
                if !in_p {
                    continue;
                }
                for &i in &current {
                    let s = self.add(&els[i], &els[j]);
                    member[self.index_of(&s).expect("closed")] = true;
                }
            }
        }
        Ok((0..n).filter(|&i| member[i]).map(|i| els[i].clone()).collect())
    }

    pub fn units(&self) -> Result<Vec<Element>> {
        let els = self.elements()?;
        let one = self.one();
        Ok(els
            .iter()
            .filter(|a| els.iter().any(|b| self.mul(a, b) == one))
            .cloned()
            .collect())
    }

    pub fn jacobson_radical(&self) -> Result<JacobsonRadicalSet> {
        let els = self.elements()?;
        let mut is_unit = vec![false; els.len()];
        for u in self.units()? {
            is_unit[self.index_of(&u).expect("unit")] = true;
        }
        let one = self.one();
        let members = els
            .iter()
            .filter(|x| {
                els.iter().all(|r| {
                    let t = self.sub(&one, &self.mul(x, r));
                    is_unit[self.index_of(&t).expect("closed")]
                })
            })
            .cloned()
            .collect();
        Ok(JacobsonRadicalSet {
            ring: self.clone(),
            members,
        })
    }

    /// `Ann(a) = {x : a*x = 0}`.
    pub fn annihilator(&self, a: &Element) -> Result<Vec<Element>> {
        self.check(a)?;
        let zero = self.zero();
        Ok(self
            .elements()?
            .into_iter()
            .filter(|x| self.mul(a, x) == zero)
            .collect())
    }
}
