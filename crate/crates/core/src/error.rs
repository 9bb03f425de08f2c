use thiserror::Error;

/// Errors raised by ring construction, arithmetic front doors and the
/// algorithms layered on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus polynomial must be nonzero")]
    ZeroModulus,

    #[error("element {element} does not belong to {ring}")]
    ForeignElement { element: String, ring: String },

    #[error("operation requires a finite ring, got {0}")]
    InfiniteRing(String),

    #[error("quotient of {0} by zero is infinite")]
    InfiniteQuotient(String),

    #[error("ring {ring} has {cardinality} elements, above the bound {bound}")]
    TooLarge {
        ring: String,
        cardinality: u128,
        bound: u128,
    },

    #[error("{op} is not supported over {ring}")]
    Unsupported { op: &'static str, ring: String },

    #[error("ideal generated by {0} is not principal")]
    NotPrincipal(String),

    #[error("elements are not comaximal: {0}")]
    NotComaximal(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("shape mismatch: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
