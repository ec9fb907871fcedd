use thiserror::Error;

/// Every failure the library can report.
///
/// Input errors (parse failures, mismatched rings) and mathematical
/// rejections (a precondition of a construction does not hold) share one
/// enum; [`Error::is_rejection`] tells them apart for the command line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("invalid variable list: {0}")]
    BadVariables(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("polynomial is not over the expected ring: {0}")]
    VariableMismatch(String),
    #[error("objects live over different rings")]
    RingMismatch,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("Groebner computation exceeded the degree guard of {limit}")]
    DegreeGuard { limit: u32 },
    #[error("element is not regular on the module")]
    NotRegularOnModule,
    #[error("element is a unit of the ring")]
    UnitElement,
    #[error("element is a zero-divisor of the ring")]
    ZeroDivisorInRing,
    #[error("variable name `{0}` already used by the ring")]
    VariableCollision(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not monic in `{0}`")]
    NotMonic(String),
    #[error("ring is not a polynomial ring over a field")]
    RingNotRecognizedAsDomain,
    #[error("matrix does not define a homomorphism: relation {column} of the source is not sent into the relations of the target")]
    MapNotWellDefined { column: usize },
    #[error("inclusion certificate failed: {0}")]
    InclusionFailed(String),
    #[error("the modulus involves the variable `{0}`, so the ring is not a polynomial extension in it")]
    NotPolynomialExtension(String),
    #[error("x is not regular on the quotient F[x]/M")]
    PreconditionXNotRegularOnN,
    #[error("no coresolution is available for this module")]
    NoCoresolutionAvailable,
    #[error("ring is not in the catalog (field, k[x], k[x]/(x^n))")]
    RingNotInCatalog,
    #[error("projective dimension is infinite or unresolved: {0}")]
    PdInfiniteOrUnresolved(String),
    #[error("property (C) unverified: generator {0} has no finite projective dimension certificate")]
    PropertyCUnverified(String),
    #[error("projective module has no constant rank")]
    NonConstantRank,
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("{0}")]
    Model(String),
}

impl Error {
    /// True when the error says a mathematical precondition failed on valid
    /// input, as opposed to malformed or inconsistent input.
    pub fn is_rejection(&self) -> bool {
        matches!(
            self,
            Error::DegreeGuard { .. }
                | Error::NotRegularOnModule
                | Error::UnitElement
                | Error::ZeroDivisorInRing
                | Error::NotMonic(_)
                | Error::RingNotRecognizedAsDomain
                | Error::PreconditionXNotRegularOnN
                | Error::NoCoresolutionAvailable
                | Error::RingNotInCatalog
                | Error::PdInfiniteOrUnresolved(_)
                | Error::PropertyCUnverified(_)
                | Error::NonConstantRank
                | Error::NotExact(_)
                | Error::MapNotWellDefined { .. }
                | Error::InclusionFailed(_)
                | Error::NotPolynomialExtension(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
