use thiserror::Error;

/// Failures reported by the semigroup constructors and algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("EmptyGenerators: at least one positive generator is required")]
    EmptyGenerators,
    #[error("NotCofinite: generators have gcd {0}, so the complement is infinite")]
    NotCofinite(u64),
    #[error("NotClosed: {0} and {1} belong to the set but {0} + {1} is listed as a gap")]
    NotClosed(u64, u64),
    #[error("InvalidGap: 0 always belongs to a numerical semigroup")]
    ZeroGap,
    #[error("BadLength: multiplicity {m} needs {expected} coordinates, got {found}")]
    BadLength { m: u64, expected: usize, found: usize },
    #[error("BadResidue: coordinate {0} is not congruent to {0} modulo the multiplicity")]
    BadResidue(usize),
    #[error("BelowMultiplicity: coordinate {0} does not exceed the multiplicity")]
    BelowMultiplicity(usize),
    #[error("KunzViolation: w({0}) + w({1}) is smaller than w(({0} + {1}) mod m)")]
    KunzViolation(usize, usize),
    #[error("ZeroMultiplicity: the multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("Overflow: integer arithmetic exceeded 64 bits")]
    Overflow,
    #[error("NoGaps: the semigroup of all naturals has no Frobenius number")]
    NoGaps,
    #[error("MultiplicityMismatch: expected multiplicity {expected}, got {found}")]
    MultiplicityMismatch { expected: u64, found: u64 },
    #[error("EmptyList: intersection of an empty family")]
    EmptyList,
    #[error("MultiplicityOne: operation needs multiplicity at least 2")]
    MultiplicityOne,
    #[error("InvalidPair: no numerical semigroup has multiplicity {m} and Frobenius number {frobenius}")]
    InvalidPair { m: u64, frobenius: u64 },
    #[error("NotUnique: S*({m},{frobenius}) has several members, use enumerate_maximal")]
    NotUnique { m: u64, frobenius: u64 },
    #[error("NotSpecialGap: {0} is not a special gap")]
    NotSpecialGap(u64),
    #[error("NotAboveMultiplicity: {0} does not exceed the multiplicity")]
    NotAboveMultiplicity(u64),
    #[error("LimitExceeded: more than {0} oversemigroups")]
    LimitExceeded(usize),
    #[error("NotOversemigroup: the second semigroup does not contain the first")]
    NotOversemigroup,
    #[error("BudgetExceeded: {0}")]
    BudgetExceeded(String),
    #[error("Infeasible: the given sets do not cover the target")]
    Infeasible,
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// Short variant name, as printed on the diagnostic stream by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::NotCofinite(_) => "NotCofinite",
            Error::NotClosed(..) => "NotClosed",
            Error::ZeroGap => "InvalidGap",
            Error::BadLength { .. } => "BadLength",
            Error::BadResidue(_) => "BadResidue",
            Error::BelowMultiplicity(_) => "BelowMultiplicity",
            Error::KunzViolation(..) => "KunzViolation",
            Error::ZeroMultiplicity => "ZeroMultiplicity",
            Error::Overflow => "Overflow",
            Error::NoGaps => "NoGaps",
            Error::MultiplicityMismatch { .. } => "MultiplicityMismatch",
            Error::EmptyList => "EmptyList",
            Error::MultiplicityOne => "MultiplicityOne",
            Error::InvalidPair { .. } => "InvalidPair",
            Error::NotUnique { .. } => "NotUnique",
            Error::NotSpecialGap(_) => "NotSpecialGap",
            Error::NotAboveMultiplicity(_) => "NotAboveMultiplicity",
            Error::LimitExceeded(_) => "LimitExceeded",
            Error::NotOversemigroup => "NotOversemigroup",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::Infeasible => "Infeasible",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
