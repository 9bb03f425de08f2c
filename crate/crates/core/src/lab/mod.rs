//! Exhaustive property checks on finite rings, diadem search and the
//! coprime-splitting finder over ℤ.
//!
//! Finite rings are turned into [`FiniteTables`] once; every checker then
//! runs on integer indices.

mod diadem;
mod properties;
mod splitting;
mod tables;

pub use diadem::{
    find_diadem, find_diadem_with, is_diadem_direct, is_diadem_via_quotient,
    is_diadem_via_quotient_with, verify_associate_diadems, verify_associate_diadems_with,
    DiademWitness, Evidence,
};
pub use properties::{
    check_clean, check_dyadic_range_1, check_exchange, check_gelfand, check_hermite,
    check_idempotent_stable_range_1, check_property, check_stable_range_1, check_stable_range_2,
    Property, PropertyReport,
};
pub use splitting::{find_coprime_splitting, CoprimeSplitting};
pub use tables::FiniteTables;

use crate::error::Result;
use crate::ring::{Element, Ring};

/// Bounds for the exhaustive procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabConfig {
    /// Largest ring for checks quantifying over pairs.
    pub pair_bound: u128,
    /// Largest ring for checks whose inner search nests another pair
    /// quantifier (stable range 2, dyadic range 1).
    pub triple_bound: u128,
    /// How many multipliers a diadem search over ℤ or GF(p)[x] tries.
    pub search_radius: u64,
    /// Largest quotient `R/(w)` decided by the quotient criterion.
    pub quotient_limit: u128,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            pair_bound: 50,
            triple_bound: 16,
            search_radius: 1_000_000,
            quotient_limit: 1_000_000,
        }
    }
}

/// `Σ gᵢR` of a finite ring, as a sorted set.
pub fn ideal_generated(ring: &Ring, generators: &[Element]) -> Result<Vec<Element>> {
    ring.ideal_generated(generators)
}

/// Whether `elems` generate the whole ring. Finite rings close the ideal
/// explicitly; ℤ and GF(p)[x] test whether the iterated gcd is a unit.
/// Elements outside the ring give `false`.
pub fn is_comaximal(ring: &Ring, elems: &[Element]) -> bool {
    if elems.iter().any(|e| !ring.contains(e)) {
        return false;
    }
    if ring.is_finite() {
        return ring
            .ideal_generated(elems)
            .map(|ideal| ideal.contains(&ring.one()))
            .unwrap_or(false);
    }
    let mut g = ring.zero();
    for e in elems {
        match ring.gcd(&g, e) {
            Ok(next) => g = next,
            Err(_) => return false,
        }
    }
    ring.is_unit(&g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comaximal_examples() {
        let z = Ring::integers();
        let els = |v: &[i64]| v.iter().map(|&n| Element::int(n)).collect::<Vec<_>>();
        assert!(is_comaximal(&z, &els(&[6, 10, 15])));
        assert!(!is_comaximal(&z, &els(&[4, 6])));
        assert!(!is_comaximal(&z, &[]));
        let z12 = Ring::integers_mod(12).unwrap();
        assert!(!is_comaximal(&z12, &[Element::Residue(4), Element::Residue(6)]));
        assert!(is_comaximal(&z12, &[Element::Residue(4), Element::Residue(3)]));
        assert!(!is_comaximal(&z12, &[Element::int(1)]));
        let f = Ring::polynomials(5).unwrap();
        assert!(is_comaximal(&f, &[f.poly(&[0, 1]).unwrap(), f.poly(&[1, 1]).unwrap()]));
    }
}
