use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrimeP(u32),
    #[error("m must be at least 1")]
    ZeroExtensionDegree,
    #[error("field order {0} exceeds the supported maximum of 2^16")]
    FieldTooLarge(u64),
    #[error("primitive polynomial must be monic of degree {expected}, got {got:?}")]
    NonMonic { expected: u32, got: Vec<u32> },
    #[error("coefficient {coeff} is not in [0, {p})")]
    CoefficientOutOfRange { coeff: u32, p: u32 },
    #[error("polynomial {0:?} is not primitive: powers of its root repeat before exponent q-1")]
    NonPrimitivePoly(Vec<u32>),
    #[error("element index {index} is out of range for GF({q})")]
    ElementOutOfRange { index: u32, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial must have a nonzero leading coefficient")]
    ZeroLeading,
    #[error("transform scale factors a and s must be nonzero")]
    ZeroScale,
    #[error("cannot parse polynomial {0:?}")]
    PolyParse(String),
    #[error("degree {d} does not match the {expected} normalization regime")]
    RegimeMismatch { d: usize, expected: &'static str },
    #[error("degree {0} = 2^i - 2 admits no b-normalization")]
    BException(usize),
    #[error("mask has no free nonzero position to fix")]
    NoFreePosition,
    #[error("degree {d} is outside [1, {max}] for GF({q})")]
    DegreeOutOfRange { d: usize, q: u32, max: usize },
    #[error("brute force needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("class member {0} is missing from the nPP set")]
    NotClosed(String),
    #[error("polynomial is not a permutation polynomial")]
    NotAPermutation,
    #[error("permutation lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("missing N_{k}({q}) for the bound")]
    MissingCount { q: u32, k: usize },
    #[error("no registry entry for q = {0}")]
    UnknownField(u32),
    #[error("registry line {line}: {msg}")]
    Registry { line: usize, msg: String },
    #[error("checkpoint does not match this run: {0}")]
    CheckpointMismatch(String),
    #[error("io: {0}")]
    Io(String),
    #[error("malformed data: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
