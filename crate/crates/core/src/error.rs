use thiserror::Error;

/// Every failure the library can report.
///
/// Mathematical failures (`NotInvertible`, `NotFactorable`, ...) are kept distinct from
/// input failures (`Parse`, `UnknownTarget`) so the CLI can map them onto its exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("zero-dimensional space in {0}")]
    ZeroDimension(String),
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),
    #[error("scalars from different fields ({0} and {1}) were combined")]
    FieldMismatch(String, String),
    #[error("map is not invertible")]
    NotInvertible,
    #[error("map is not injective")]
    NotMono,
    #[error("map is not surjective")]
    NotEpi,
    #[error("image of the map does not lie in the image of the mono")]
    NotFactorable,
    #[error("{0} has no convolution inverse")]
    NotConvInvertible(String),
    #[error("{0} is not a morphism of the category")]
    NotMorphism(String),
    #[error("induced map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("not an isomorphism of left modules and right comodules: {0}")]
    NotModuleComoduleIso(String),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("axioms failed for {0}")]
    AxiomsFailed(String),
    #[error("{0} requires characteristic different from {1}")]
    BadCharacteristic(String, u64),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse grouping of errors for exit codes and FFI status codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// A requested identity or axiom does not hold.
    Verification,
    /// Malformed input, unknown names, unusable parameters.
    Input,
    /// A linear-algebra precondition failed inside a computation.
    Math,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::NotConvInvertible(_)
            | Error::NotMorphism(_)
            | Error::NotWellDefined(_)
            | Error::NotModuleComoduleIso(_)
            | Error::IdentityFailed(_)
            | Error::AxiomsFailed(_) => ErrorClass::Verification,
            Error::InvalidPrime(_)
            | Error::BadCharacteristic(..)
            | Error::NotAGroup(_)
            | Error::Parse { .. }
            | Error::UnknownTarget(_)
            | Error::Io(_) => ErrorClass::Input,
            Error::DimensionMismatch { .. }
            | Error::ZeroDimension(_)
            | Error::FieldMismatch(..)
            | Error::NotInvertible
            | Error::NotMono
            | Error::NotEpi
            | Error::NotFactorable => ErrorClass::Math,
        }
    }
}

pub(crate) fn dim_check(context: &str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context: context.to_string(),
            expected,
            found,
        })
    }
}
