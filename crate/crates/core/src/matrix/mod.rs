//! Matrices over a [`Ring`], certificate-producing diagonal reduction over
//! ℤ and GF(p)[x], and an independent certificate verifier.
//!
//! Certificates use one side convention throughout: `P·A·Q = D`, with `P`
//! acting on rows and `Q` on columns.

mod hermite;
mod reduce;
mod verify;
mod witness;

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Element, Ring};

pub use hermite::{hermite_reduce_1x2, hermite_reduce_2x1};
pub use reduce::{diadem_step, reduce_2x2_comaximal, smith_normal_form, DiademStep};
pub use verify::{determinant, inverse_unimodular, verify_certificate, Clause, Verdict};
pub use witness::{
    gelfand_range_1_witness, gelfand_range_1_witness_with, stable_range_2_witness,
    stable_range_2_witness_with, SR2Witness,
};

/// Row-major matrix; every entry belongs to `ring`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Element>,
}

impl Matrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Element>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            ring.check(e)?;
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Element>>) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Matrix::new(ring, n, cols, rows.into_iter().flatten().collect())
    }

    /// Integer entries embedded through [`Ring::from_int`].
    pub fn from_ints(ring: &Ring, rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::from_rows(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&x| ring.from_int(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.cols + j]
    }

    /// Panics on a foreign element, like ring arithmetic does.
    pub fn set(&mut self, i: usize, j: usize, e: Element) {
        assert!(self.ring.contains(&e), "foreign element {e:?}");
        self.entries[i * self.cols + j] = e;
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows || !self.ring.same_as(&other.ring) {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let r = &self.ring;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = r.zero();
                for k in 0..self.cols {
                    acc = r.add(&acc, &r.mul(self.get(i, k), other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            ring: r.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// Diagonal entries `D[i][i]`.
    pub fn diagonal(&self) -> Vec<Element> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// Reads the text format: a `rows cols` line followed by `rows` lines of
    /// whitespace-separated literals. Blank lines and `#` comments are skipped.
    pub fn parse(ring: &Ring, text: &str) -> Result<Matrix> {
        let mut lines = content_lines(text);
        let m = parse_block(ring, &mut lines)?;
        if let Some((n, _)) = lines.next() {
            return Err(line_err(n, "trailing input after matrix"));
        }
        Ok(m)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.ring.format_element(self.get(i, j)))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix over {}:\n{self}", self.ring)
    }
}

/// `P·A·Q = D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub p: Matrix,
    pub d: Matrix,
    pub q: Matrix,
}

impl ReductionCertificate {
    /// Blocks headed `P`, `D`, `Q`, each followed by a matrix.
    pub fn to_text(&self) -> String {
        format!("P\n{}D\n{}Q\n{}", self.p, self.d, self.q)
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<ReductionCertificate> {
        let mut lines = content_lines(text);
        let mut block = |name: &str| -> Result<Matrix> {
            match lines.next() {
                Some((_, l)) if l == name => parse_block(ring, &mut lines),
                Some((n, l)) => Err(line_err(n, &format!("expected `{name}`, found `{l}`"))),
                None => Err(line_err(0, &format!("missing `{name}` block"))),
            }
        };
        let (p, d, q) = (block("P")?, block("D")?, block("Q")?);
        if let Some((n, _)) = lines.next() {
            return Err(line_err(n, "trailing input after certificate"));
        }
        Ok(ReductionCertificate { p, d, q })
    }
}

type Lines<'a> = std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>;

fn content_lines(text: &str) -> Lines<'_> {
    let it: Box<dyn Iterator<Item = (usize, &str)>> = Box::new(
        text.lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
    );
    it.peekable()
}

fn line_err(line: usize, message: &str) -> Error {
    Error::Parse {
        position: line,
        message: format!("line {line}: {message}"),
    }
}

fn parse_block(ring: &Ring, lines: &mut Lines<'_>) -> Result<Matrix> {
    let (n, header) = lines.next().ok_or_else(|| line_err(0, "missing `rows cols` header"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [r, c] = dims.as_slice() else {
        return Err(line_err(n, "header must be `rows cols`"));
    };
    let parse_dim = |s: &str| -> Result<usize> {
        s.parse::<usize>()
            .ok()
            .filter(|&d| d <= 4096)
            .ok_or_else(|| line_err(n, &format!("bad dimension `{s}`")))
    };
    let (rows, cols) = (parse_dim(r)?, parse_dim(c)?);
    let mut entries = Vec::with_capacity((rows * cols).min(4096));
    for i in 0..rows {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| line_err(n, &format!("expected {rows} rows, got {i}")))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != cols {
            return Err(line_err(ln, &format!("expected {cols} entries, got {}", toks.len())));
        }
        for t in toks {
            let e = ring.parse_element(t).map_err(|e| line_err(ln, &e.to_string()))?;
            entries.push(e);
        }
    }
    Matrix::new(ring, rows, cols, entries)
}
