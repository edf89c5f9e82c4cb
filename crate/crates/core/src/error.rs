use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("size limit exceeded: {what} requires {required}, cap is {cap}")]
    SizeLimit {
        what: &'static str,
        required: String,
        cap: u64,
    },

    #[error("conditioning on an event of probability zero")]
    NullConditioning,

    #[error("invalid matching: {0}")]
    Matching(#[from] MatchingError),

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Validation failures for a matching `(S, T, f)`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("|S| = {domain} but |T| = {codomain}")]
    SizeMismatch { domain: usize, codomain: usize },

    #[error("domain point {0} is listed twice")]
    DuplicateDomainPoint(usize),

    #[error("codomain point {0} is listed twice in T")]
    DuplicateCodomainPoint(usize),

    #[error("f is not defined on domain point {0}")]
    NotTotal(usize),

    #[error("f maps {0}, which is not in S")]
    OutsideDomain(usize),

    #[error("f is not injective: {0} has two preimages")]
    NotInjective(usize),

    #[error("image of f differs from T at {0}")]
    ImageMismatch(usize),
}
