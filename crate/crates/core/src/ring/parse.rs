//! Text grammar for rings and element literals.
//!
//! ```text
//! ring := atom (" x " atom)*
//! atom := "Z" | "Z/" nat | "GF(" prime ")" | "GF(" prime ")[x]" | "GF(" prime ")[x]/(" poly ")"
//! poly := comma-separated coefficients, low to high
//! ```
//!
//! Elements: decimal integers, comma-separated coefficient lists, and
//! `(left|right)` for products.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{poly, Element, Ring, RingKind};
use crate::error::{Error, Result};

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(err(self.pos, format!("expected `{token}`")))
        }
    }

    fn nat(&mut self) -> Result<u64> {
        let start = self.pos;
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(err(start, "expected a natural number"));
        }
        self.pos += digits;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| err(start, "number out of range"))
    }

    fn until(&mut self, stop: char) -> Result<&'a str> {
        let start = self.pos;
        match self.rest().find(stop) {
            Some(off) => {
                self.pos += off;
                Ok(&self.src[start..start + off])
            }
            None => Err(err(start, format!("unterminated, expected `{stop}`"))),
        }
    }
}

pub(crate) fn parse_ring(desc: &str) -> Result<Ring> {
    let mut cur = Cursor { src: desc, pos: 0 };
    cur.skip_ws();
    let mut ring = parse_atom(&mut cur)?;
    loop {
        cur.skip_ws();
        if cur.rest().is_empty() {
            return Ok(ring);
        }
        if !cur.eat("x") {
            return Err(err(cur.pos, "expected ` x ` or end of input"));
        }
        cur.skip_ws();
        let right = parse_atom(&mut cur)?;
        ring = Ring::product(ring, right);
    }
}

fn parse_atom(cur: &mut Cursor<'_>) -> Result<Ring> {
    let start = cur.pos;
    if cur.eat("GF(") {
        let p_pos = cur.pos;
        let p = cur.nat()?;
        cur.expect(")")?;
        if !super::is_prime(p) {
            let _ = p_pos;
            return Err(Error::NotPrime(p));
        }
        if !cur.eat("[x]") {
            return Ring::integers_mod(p);
        }
        if !cur.eat("/(") {
            return Ring::polynomials(p);
        }
        let body_pos = cur.pos;
        let body = cur.until(')')?;
        cur.expect(")")?;
        let coeffs = parse_coeffs(body, body_pos)?;
        let f = poly::from_coeffs(&coeffs, p);
        if f.is_empty() {
            return Err(Error::ZeroModulus);
        }
        if f.len() == 1 {
            return Err(err(body_pos, "constant modulus gives the zero ring"));
        }
        return Ring::polynomial_quotient(p, &f);
    }
    if cur.eat("Z") {
        if cur.eat("/") {
            let n_pos = cur.pos;
            let n = cur.nat()?;
            if n < 2 {
                return Err(err(n_pos, "modulus must be at least 2"));
            }
            return Ring::integers_mod(n);
        }
        return Ok(Ring::integers());
    }
    Err(err(start, "expected `Z`, `Z/n` or `GF(p)...`"))
}

fn parse_coeffs(body: &str, offset: usize) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut pos = offset;
    for part in body.split(',') {
        let t = part.trim();
        let v: i64 = t
            .parse()
            .map_err(|_| err(pos, format!("bad coefficient `{t}`")))?;
        out.push(v);
        pos += part.len() + 1;
    }
    Ok(out)
}

fn parse_bigint(text: &str) -> Result<BigInt> {
    let t = text.trim();
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(0, format!("bad integer literal `{t}`")));
    }
    t.parse().map_err(|_| err(0, format!("bad integer literal `{t}`")))
}

fn reduce_coeffs(text: &str, p: u64) -> Result<Vec<u64>> {
    let pb = BigInt::from(p);
    let mut out = Vec::new();
    for part in text.split(',') {
        let c = parse_bigint(part)?;
        out.push(c.mod_floor(&pb).to_u64().unwrap_or(0));
    }
    Ok(poly::trim(out))
}

/// Splits `(left|right)` at its top-level bar.
fn split_pair(text: &str) -> Result<(&str, &str)> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err(0, format!("product element must look like (a|b), got `{t}`")))?;
    let mut depth = 0i32;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '|' if depth == 0 => return Ok((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    Err(err(0, format!("missing `|` in product element `{t}`")))
}

pub(crate) fn parse_element(ring: &Ring, text: &str) -> Result<Element> {
    match ring.kind() {
        RingKind::Integers => Ok(Element::Int(parse_bigint(text)?)),
        RingKind::IntegersModN(_) => Ok(ring.from_bigint(&parse_bigint(text)?)),
        RingKind::PolynomialsOverPrimeField(p) => Ok(Element::Poly(reduce_coeffs(text, *p)?)),
        RingKind::PolynomialQuotient { p, modulus } => Ok(Element::Poly(poly::rem(
            &reduce_coeffs(text, *p)?,
            modulus,
            *p,
        ))),
        RingKind::Quotient(q) => Ok(q.reduce(&q.base().parse_element(text)?)),
        RingKind::Product(l, r) => {
            let (a, b) = split_pair(text)?;
            Ok(Element::pair(l.parse_element(a)?, r.parse_element(b)?))
        }
    }
}
