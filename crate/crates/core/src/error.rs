use thiserror::Error;

/// Errors raised by the algebra, code construction and simulation routines.
///
/// Variant names are stable: the CLI reports them verbatim through [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid extension degree {0} (supported: 1..=4)")]
    InvalidDegree(usize),
    #[error("field order {p}^{m} is too large")]
    FieldTooLarge { p: u64, m: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("value {value} is not an element of a field of order {q}")]
    ElementOutOfRange { value: u64, q: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("rule is not bipermutive: need a nonzero constant term and leading coefficient 1")]
    NotBipermutive,
    #[error("rule polynomial must have degree at least 1")]
    DegreeZero,
    #[error("lattice of length {n} is shorter than the rule diameter {diameter}")]
    LatticeTooShort { n: usize, diameter: usize },
    #[error("input has length {found}, CA expects {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("seed has length {found}, rule degree is {expected}")]
    SeedLengthMismatch { expected: usize, found: usize },
    #[error("subspaces live in different ambient spaces")]
    AmbientMismatch,
    #[error("minimum distance needs at least two codewords, found {0}")]
    TooFewCodewords(usize),
    #[error("code has no codewords")]
    EmptyCode,
    #[error("CA family has no members")]
    EmptyFamily,
    #[error("family needs at least two members, found {0}")]
    TooFewMembers(usize),
    #[error("family members must share degree {expected}, member {index} has degree {found}")]
    MixedDegree {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("family members {0} and {1} coincide")]
    DuplicateMember(usize, usize),
    #[error("argument must be positive")]
    NonPositive,
    #[error("common divisor g must be monic")]
    GNotMonic,
    #[error("common divisor g must have a nonzero constant term")]
    GZeroConstant,
    #[error("degree {t} of g exceeds k = {k}")]
    DegreeTooLarge { t: usize, k: usize },
    #[error("search space has {size} candidates, budget is {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("cannot erase {erasures} dimensions of a {dim}-dimensional subspace")]
    TooManyErasures { erasures: usize, dim: usize },
    #[error("random subspace sampling did not converge")]
    SamplingFailed,
    #[error("integer overflow while counting")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Machine-readable variant name.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::InvalidDegree(_) => "InvalidDegree",
            Error::FieldTooLarge { .. } => "FieldTooLarge",
            Error::FieldMismatch => "FieldMismatch",
            Error::ElementOutOfRange { .. } => "ElementOutOfRange",
            Error::DivisionByZero => "DivisionByZero",
            Error::BothZero => "BothZero",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotSquare { .. } => "NotSquare",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotBipermutive => "NotBipermutive",
            Error::DegreeZero => "DegreeZero",
            Error::LatticeTooShort { .. } => "LatticeTooShort",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::SeedLengthMismatch { .. } => "SeedLengthMismatch",
            Error::AmbientMismatch => "AmbientMismatch",
            Error::TooFewCodewords(_) => "TooFewCodewords",
            Error::EmptyCode => "EmptyCode",
            Error::EmptyFamily => "EmptyFamily",
            Error::TooFewMembers(_) => "TooFewMembers",
            Error::MixedDegree { .. } => "MixedDegree",
            Error::DuplicateMember(..) => "DuplicateMember",
            Error::NonPositive => "NonPositive",
            Error::GNotMonic => "GNotMonic",
            Error::GZeroConstant => "GZeroConstant",
            Error::DegreeTooLarge { .. } => "DegreeTooLarge",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::TooManyErasures { .. } => "TooManyErasures",
            Error::SamplingFailed => "SamplingFailed",
            Error::Overflow => "Overflow",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
