use thiserror::Error;

/// Location of a syntax error inside an input document. Lines and columns
/// are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("field of size {size} exceeds the counting cap {cap}")]
    FieldCapExceeded { size: u128, cap: u64 },
    #[error("enumerating {points} projective points exceeds the cap {cap}")]
    EnumerationCapExceeded { points: u128, cap: u128 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("parse error at {span}: {message}")]
    Parse { span: Span, message: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("base mismatch: {0}")]
    BaseMismatch(String),
    #[error("polynomial of degree {degree} exceeds the factorization cap {cap}")]
    FactorizationCapExceeded { degree: usize, cap: usize },
    #[error("orbit {0} is not an algebraic integer")]
    NotIntegral(String),
    #[error("#_{n} = {value} is not an integer")]
    NonIntegralSharp { n: u32, value: String },
    #[error("complex root finder did not converge for {0}")]
    RootFindingDiverged(String),
    #[error("not enough series terms: need {needed}, have {have}")]
    InsufficientData { needed: usize, have: usize },
    #[error("no rational function of degree <= {0} matches the series")]
    NoRationalFit(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            span: Span { line, column },
            message: message.into(),
        }
    }
}

impl Error {
    /// Process exit status for the command-line tool: 2 for malformed or
    /// inconsistent input, 3 when a size cap is hit, 4 for a non-integral
    /// reduced count.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::DegreeCapExceeded { .. }
            | Error::FieldCapExceeded { .. }
            | Error::EnumerationCapExceeded { .. }
            | Error::FactorizationCapExceeded { .. } => 3,
            Error::NonIntegralSharp { .. } => 4,
            _ => 2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Error::parse(1, 2, "x").exit_code(), 2);
        assert_eq!(Error::NotPrimePower(6).exit_code(), 2);
        assert_eq!(Error::FactorizationCapExceeded { degree: 20, cap: 16 }.exit_code(), 3);
        assert_eq!(Error::EnumerationCapExceeded { points: 1, cap: 0 }.exit_code(), 3);
        assert_eq!(Error::NonIntegralSharp { n: 1, value: "1/2".into() }.exit_code(), 4);
        assert_eq!(
            Error::parse(3, 7, "unexpected ')'").to_string(),
            "parse error at line 3, column 7: unexpected ')'"
        );
    }
}
