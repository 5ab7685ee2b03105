use alloc::string::String;

/// Errors raised by constructors and operators. A failing identity check is
/// not an error; it is reported through [`crate::verify::CheckReport`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed rational `{0}`")]
    ParseRational(String),
    #[error("malformed polynomial `{0}`")]
    ParsePoly(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable sets differ: [{0}] vs [{1}]")]
    VarSetMismatch(String, String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` is used twice")]
    VariableClash(String),
    #[error("leg mismatch: {0}")]
    LegMismatch(String),
    #[error("invalid leg position {0}")]
    InvalidLeg(usize),
    #[error("leg position {0} targeted twice")]
    RepeatedTarget(usize),
    #[error("dimension mismatch at leg {leg}: expected {expected}, found {found}")]
    DimensionMismatch { leg: usize, expected: usize, found: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("index {index} out of range for leg {leg} of dimension {dim}")]
    IndexOutOfRange { leg: usize, index: usize, dim: usize },
    #[error("operator too large: {0}")]
    TooLarge(String),
    #[error("matrix is not square or has the wrong size: {0}")]
    BadShape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("form g is neither symmetric nor skew-symmetric (entries ({0},{1}) and ({1},{0}))")]
    NotInvolutive(usize, usize),
    #[error("matrix satisfies neither t(X) = X nor t(X) = -X (entry ({0},{1}))")]
    NotSymmetric(usize, usize),
    #[error("seed fails the reflection equation: {0}")]
    SeedRejected(String),
    #[error("graded component {k} exceeds k_max = {k_max}")]
    ComponentOutOfRange { k: usize, k_max: usize },
    #[error("rewriting needs a rule for a word of total level {level}, above the cap {cap}")]
    LevelCapExceeded { level: u32, cap: u32 },
    #[error("relation cannot be oriented: {0}")]
    Unorientable(String),
}
