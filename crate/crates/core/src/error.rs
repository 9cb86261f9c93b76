use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("samples are inconsistent with degree bounds ({dj}, {dk})")]
    InconsistentSamples { dj: u32, dk: u32 },
    #[error("sample grid does not determine a polynomial with degree bounds ({dj}, {dk})")]
    RankDeficient { dj: u32, dk: u32 },
    #[error("projective bundle needs at least one summand")]
    EmptyBundle,
    #[error("unsupported blowup center: {0}")]
    UnsupportedCenter(String),
    #[error("intersection needs {expected} classes, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("class lives on a ring with {got} generators, expected {expected}")]
    ForeignClass { expected: usize, got: usize },
    #[error("subsheaf selection must be a proper nonempty subset of the summands")]
    TrivialSubsheaf,
    #[error("degeneration is not of bundle type")]
    NotBundleType,
    #[error("twist outside the polynomial range: {0}")]
    NegativeTwist(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("polarisation has zero volume")]
    ZeroVolume,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("pullback of the original polarisation is not representable on this model")]
    HpullNotRepresentable,
    #[error("fibration is not polarised by the relative anticanonical class")]
    NotFano,
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("no valid sample grid found: {0}")]
    InvalidGrid(String),
    #[error("parse error at `{path}`: {message}")]
    Parse { path: String, message: String },
    #[error("validation error at `{path}`: {reason}")]
    Validation { path: String, reason: String },
    #[error("identity `{identity}` failed: {detail}")]
    IdentityMismatch { identity: String, detail: String },
    #[error("degeneration {index}: {source}")]
    InDegeneration {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
