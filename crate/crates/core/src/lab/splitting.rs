//! Coprime factorizations over ℤ: `c = r*s` with `r`, `s` coprime, `r`
//! coprime to `a` and `s` coprime to `b`.

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoprimeSplitting {
    pub c: i64,
    pub r: i64,
    pub s: i64,
}

impl CoprimeSplitting {
    /// The four defining conditions, for the given `a`, `b`.
    pub fn holds(&self, a: i64, b: i64) -> bool {
        self.r as i128 * self.s as i128 == self.c as i128
            && self.r.gcd(&self.s) == 1
            && self.r.gcd(&a) == 1
            && self.s.gcd(&b) == 1
    }
}

fn positive_divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Tries the positive divisors `r` of `|c|` in increasing order with
/// `s = c / r`.
pub fn find_coprime_splitting(c: i64, a: i64, b: i64) -> Result<CoprimeSplitting> {
    if c == 0 {
        return Err(Error::Precondition("c must be nonzero".into()));
    }
    if a.gcd(&b).gcd(&c) != 1 {
        return Err(Error::Precondition(format!("gcd({a}, {b}, {c}) is not 1")));
    }
    let divisors = positive_divisors(c.unsigned_abs());
    for &r in &divisors {
        let r = r as i64;
        let s = c / r;
        let candidate = CoprimeSplitting { c, r, s };
        if candidate.holds(a, b) {
            return Ok(candidate);
        }
    }
    Err(Error::SearchExhausted(format!(
        "no coprime splitting of {c} for ({a}, {b}); tried r in {divisors:?}"
    )))
}
