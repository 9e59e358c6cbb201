use std::fmt;

/// Source position of a diagnostic, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands belong to different rings")]
    MismatchedRing,
    #[error("map is not total on the ring: {0}")]
    IncompleteMap(String),
    #[error("ring is infinite and cannot be enumerated")]
    NotEnumerable,
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    MismatchedArity(usize, usize),
    #[error("the zero polynomial has no leading data")]
    ZeroPolynomial,
    #[error("coefficient must be nonzero")]
    ZeroCoefficient,
    #[error("variable index {0} out of range")]
    BadIndex(usize),
    #[error("invalid extension data: {0}")]
    InvalidExtension(String),
    #[error("extension is not quasi-commutative")]
    NotQuasiCommutative,
    #[error("extension is not of derivation type")]
    NotDerivationType,
    #[error("derivation {0} is not inner with the given witness")]
    NotInner(usize),
    #[error("ideal is not sigma-invariant")]
    NotSigmaInvariant,
    #[error("ideal is not invariant: {0}")]
    NotInvariant(String),
    #[error("ideal is not stable under sigma {0} (sigma(I) != I)")]
    NotStable(usize),
    #[error("ideal must be proper")]
    ImproperIdeal,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("inputs must be nonzero")]
    ZeroInput,
    #[error("unknown catalog entry '{0}'")]
    UnknownEntry(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("{pos}: syntax error: {msg}")]
    Syntax { pos: Position, msg: String },
    #[error("{pos}: unknown variable '{name}'")]
    UnknownVariable { pos: Position, name: String },
    #[error("{pos}: coefficient not valid for this ring: {msg}")]
    BadCoefficientForRing { pos: Position, msg: String },
    #[error("spec file: {0}")]
    SpecFile(String),
}

impl Error {
    /// True for errors raised while reading text (expressions or spec files).
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::BadCoefficientForRing { .. }
                | Error::SpecFile(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
