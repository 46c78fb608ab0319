use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Each variant carries a stable short code (see [`Error::code`]) so the CLI
/// can print a single machine-parsable line per failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("cannot parse {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("factor [{start}..{end}) out of range for a word of length {len}")]
    Range { start: usize, end: usize, len: usize },

    #[error("{holes} holes exceed the expansion cap of {cap}; shrink the window")]
    ExpansionCap { holes: usize, cap: usize },

    #[error("brute force would test {candidates} candidates, above the oracle cap of {cap}")]
    OracleCap { candidates: u128, cap: u128 },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("insufficient horizon: {0}")]
    InsufficientHorizon(String),

    #[error("invalid family spec: {0}")]
    Spec(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidAlphabet(_) => "PW001",
            Error::Parse { .. } => "PW002",
            Error::Range { .. } => "PW003",
            Error::ExpansionCap { .. } => "PW004",
            Error::OracleCap { .. } => "PW005",
            Error::Argument(_) => "PW006",
            Error::InsufficientHorizon(_) => "PW007",
            Error::Spec(_) => "PW008",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
