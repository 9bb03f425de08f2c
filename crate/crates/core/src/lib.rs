//! Exact linear algebra over Bezout rings.
//!
//! * [`ring`]: computable commutative rings (ℤ, ℤ/n, GF(p)[x], quotients,
//!   products) with certified Bezout arithmetic.
//! * [`lab`]: exhaustive property checks on finite rings and diadem search.
//! * [`matrix`]: certificate-producing diagonal reduction over ℤ and GF(p)[x].

pub mod error;
pub mod lab;
pub mod matrix;
pub mod ring;

pub use error::{Error, Result};
pub use ring::{Element, Ring, RingKind};
