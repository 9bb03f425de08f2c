//! `edr-kit`: diagonal reduction, finite-ring checks and diadem search from
//! the command line.
//!
//! Exit status: 0 on success, 1 on a negative verdict or an unsupported /
//! non-comaximal input, 2 on malformed input, infinite rings and exceeded
//! bounds.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use edr_core::lab::{check_property, find_diadem_with, LabConfig, Property};
use edr_core::matrix::{
    smith_normal_form, stable_range_2_witness_with, verify_certificate, Matrix, ReductionCertificate,
    Verdict,
};
use edr_core::{Element, Error, Ring};

const HEADER: &str = "# edr-kit v1";

#[derive(Parser)]
#[command(name = "edr-kit", version, about = "Bezout rings, diadems and Smith normal forms")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Opts {
    /// Largest finite ring checked by pair-quantified properties.
    #[arg(long, global = true, default_value_t = 50)]
    pair_bound: u128,
    /// Largest finite ring checked by stable range 2 and dyadic range 1.
    #[arg(long, global = true, default_value_t = 16)]
    triple_bound: u128,
    /// Number of multipliers tried by diadem searches over Z and GF(p)[x].
    #[arg(long, global = true, default_value_t = 1_000_000)]
    search_radius: u64,
    /// Largest quotient decided when certifying a diadem.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    quotient_limit: u128,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// Smith normal form with transforms, P*A*Q = D.
    Snf { ring: String, matrix: PathBuf },
    /// Decide a ring property (or `all`) on a finite ring.
    Check { ring: String, property: String },
    /// Find lambda making a + b*lambda a diadem.
    #[command(allow_negative_numbers = true)]
    Diadem { ring: String, a: String, b: String },
    /// Shorten a comaximal triple: (a + c*p, b + c*q) comaximal.
    #[command(allow_negative_numbers = true)]
    Witness { ring: String, a: String, b: String, c: String },
    /// Check a reduction certificate against a matrix.
    Verify { ring: String, matrix: PathBuf, certificate: PathBuf },
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, tag) = match &e {
            Error::Parse { .. } => (2, "parse error"),
            Error::NotPrime(_) | Error::ZeroModulus => (2, "bad ring"),
            Error::ForeignElement { .. } | Error::Shape(_) => (2, "bad input"),
            Error::InfiniteRing(_) => (2, "infinite ring"),
            Error::InfiniteQuotient(_) => (2, "infinite quotient"),
            Error::TooLarge { .. } => (2, "too large"),
            Error::Unsupported { .. } => (1, "unsupported"),
            Error::NotPrincipal(_) => (1, "not principal"),
            Error::NotComaximal(_) => (1, "not comaximal"),
            Error::Precondition(_) => (1, "precondition"),
            Error::SearchExhausted(_) => (1, "search exhausted"),
        };
        Failure {
            code,
            message: format!("{tag}: {e}"),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Output text and whether the verdict was positive.
type Outcome = Result<(String, bool), Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))
}

fn element(ring: &Ring, text: &str) -> Result<Element, Failure> {
    Ok(ring.parse_element(text)?)
}

fn snf(ring: &Ring, path: &PathBuf) -> Outcome {
    let a = Matrix::parse(ring, &read(path)?)?;
    if !ring.is_bezout_domain() {
        return Err(fail(1, format!("producer requires a Bezout domain; {ring} is not one")));
    }
    let cert = smith_normal_form(ring, &a)?;
    Ok((cert.to_text(), true))
}

fn check(ring: &Ring, property: &str, cfg: &LabConfig) -> Outcome {
    let props: Vec<Property> = if property == "all" {
        Property::ALL.to_vec()
    } else {
        vec![property
            .parse()
            .map_err(|_| fail(2, format!("unknown property `{property}`")))?]
    };
    if ring.cardinality().is_none() {
        return Err(fail(2, format!("infinite ring: {ring} has no finite element table")));
    }
    let mut out = String::new();
    let mut all = true;
    for p in props {
        let rep = check_property(ring, p, cfg)?;
        all &= rep.holds;
        writeln!(out, "{rep}").unwrap();
    }
    Ok((out, all))
}

fn diadem(ring: &Ring, a: &str, b: &str, cfg: &LabConfig) -> Outcome {
    let (a, b) = (element(ring, a)?, element(ring, b)?);
    let w = find_diadem_with(ring, &a, &b, cfg).map_err(|e| match e {
        Error::NotComaximal(d) => fail(1, format!("pair not comaximal: {d}")),
        e => e.into(),
    })?;
    let text = format!(
        "lambda={} diadem={} evidence={}\n",
        ring.format_element(&w.lambda),
        ring.format_element(&w.diadem),
        w.evidence
    );
    Ok((text, true))
}

fn witness(ring: &Ring, a: &str, b: &str, c: &str, cfg: &LabConfig) -> Outcome {
    let (a, b, c) = (element(ring, a)?, element(ring, b)?, element(ring, c)?);
    let w = stable_range_2_witness_with(ring, &a, &b, &c, cfg).map_err(|e| match e {
        Error::NotComaximal(d) => fail(1, format!("triple not comaximal: {d}")),
        e => e.into(),
    })?;
    if !w.holds(ring) {
        return Err(fail(1, "internal witness failed its self-check"));
    }
    let (x, y) = w.shortened(ring);
    let f = |e: &Element| ring.format_element(e);
    let text = format!(
        "p={} q={}\nshortened=({}, {}) comaximal=true\n",
        f(&w.p),
        f(&w.q),
        f(&x),
        f(&y)
    );
    Ok((text, true))
}

fn verify(ring: &Ring, matrix: &PathBuf, certificate: &PathBuf) -> Outcome {
    let a = Matrix::parse(ring, &read(matrix)?)?;
    let cert = ReductionCertificate::parse(ring, &read(certificate)?)?;
    let v = verify_certificate(ring, &a, &cert)?;
    Ok((format!("{v}\n"), v == Verdict::Valid))
}

fn run(cli: &Cli) -> Outcome {
    let o = &cli.opts;
    let cfg = LabConfig {
        pair_bound: o.pair_bound,
        triple_bound: o.triple_bound,
        search_radius: o.search_radius,
        quotient_limit: o.quotient_limit,
    };
    let ring_of = |s: &str| Ring::parse(s).map_err(Failure::from);
    match &cli.verb {
        Verb::Snf { ring, matrix } => snf(&ring_of(ring)?, matrix),
        Verb::Check { ring, property } => check(&ring_of(ring)?, property, &cfg),
        Verb::Diadem { ring, a, b } => diadem(&ring_of(ring)?, a, b, &cfg),
        Verb::Witness { ring, a, b, c } => witness(&ring_of(ring)?, a, b, c, &cfg),
        Verb::Verify {
            ring,
            matrix,
            certificate,
        } => verify(&ring_of(ring)?, matrix, certificate),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (text, ok) = match run(&cli) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("{HEADER}\nerror: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let body = format!("{HEADER}\n{text}");
    match &cli.opts.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("{HEADER}\nerror: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            use std::io::Write;
            // a closed pipe is not worth a panic
            let _ = std::io::stdout().write_all(body.as_bytes());
        }
    }
    ExitCode::from(if ok { 0 } else { 1 })
}
