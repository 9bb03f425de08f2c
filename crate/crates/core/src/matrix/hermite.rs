//! One-step Hermite reductions of `1×2` rows and `2×1` columns.

use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::{Element, Ring};

pub(crate) fn require_bezout_domain(ring: &Ring, op: &'static str) -> Result<()> {
    if ring.is_bezout_domain() {
        Ok(())
    } else {
        Err(Error::Unsupported {
            op,
            ring: ring.to_string(),
        })
    }
}

/// `Q = [[u, -b1], [v, a1]]` from the Bezout certificate of `(a, b)`, so that
/// `(a b)·Q = (g, 0)` and `det Q = 1`; the identity when `a = b = 0`.
pub(crate) fn hermite_block(ring: &Ring, a: &Element, b: &Element) -> Result<([Element; 4], Element)> {
    if ring.is_zero(a) && ring.is_zero(b) {
        return Ok(([ring.one(), ring.zero(), ring.zero(), ring.one()], ring.zero()));
    }
    let c = ring.bezout(a, b)?;
    Ok(([c.u, ring.neg(&c.b1), c.v, c.a1], c.g))
}

/// `(a b)·Q = (g, 0)` with `Q` unimodular.
pub fn hermite_reduce_1x2(ring: &Ring, a: &Element, b: &Element) -> Result<(Matrix, Element)> {
    require_bezout_domain(ring, "hermite reduction")?;
    let (q, g) = hermite_block(ring, a, b)?;
    Ok((Matrix::new(ring, 2, 2, q.to_vec())?, g))
}

/// `P·(a b)ᵀ = (g 0)ᵀ`; `P` is the transpose of the `1×2` matrix.
pub fn hermite_reduce_2x1(ring: &Ring, a: &Element, b: &Element) -> Result<(Matrix, Element)> {
    let (q, g) = hermite_reduce_1x2(ring, a, b)?;
    Ok((q.transpose(), g))
}
