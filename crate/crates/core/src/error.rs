use thiserror::Error;

/// Crate-wide error type. Every fallible operation in the library reports
/// through this enum; the CLI maps each variant to a documented exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not homogeneous (saw degrees {lo} and {hi})")]
    NotHomogeneous { lo: u32, hi: u32 },

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("inexact division: remainder is nonzero")]
    InexactDivision,

    #[error("resource limit exceeded after {steps} reduction steps")]
    ResourceLimit { steps: u64 },

    #[error("Tjurina dimension count did not stabilize below degree {cap} (input likely non-reduced)")]
    NonStabilizing { cap: u32 },

    #[error("mu + branches - 1 = {value} is odd; delta invariant undefined")]
    ParityError { value: u64 },

    #[error("computed genus {genus} is negative; singularity list inconsistent with the degree")]
    NegativeGenus { genus: i64 },

    #[error("cyclotomic product has negative multiplicity at index {index}; not a polynomial")]
    NegativeMultiplicity { index: u32 },

    #[error("inconsistent topology: second Betti number {b2} is negative")]
    InconsistentTopology { b2: i64 },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("internal consistency violation: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// CLI exit code: 1 input/validation, 2 resource limit, 3 consistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceLimit { .. } => 2,
            Error::Inconsistent(_) | Error::InconsistentTopology { .. } => 3,
            _ => 1,
        }
    }
}
