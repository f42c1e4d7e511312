use thiserror::Error;

/// Errors raised by the engine. Each variant has a stable kebab-case name
/// (see [`Error::name`]) that the command line surfaces verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pd-bound-exceeded: no finite free resolution of length <= {cap}")]
    PdBoundExceeded { cap: usize },

    #[error("unsupported-ring: {0}")]
    UnsupportedRing(String),

    #[error("ring-mismatch: operands live over different rings")]
    RingMismatch,

    #[error("invalid-map: {0}")]
    InvalidMap(String),

    #[error("not-a-chain-map: {0}")]
    NotAChainMap(String),

    #[error("not-a-complex: {0}")]
    NotAComplex(String),

    #[error("dimension-mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not-graded: {0}")]
    NotGraded(String),

    #[error("bound-exceeded: {0}")]
    BoundExceeded(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::PdBoundExceeded { .. } => "pd-bound-exceeded",
            Error::UnsupportedRing(_) => "unsupported-ring",
            Error::RingMismatch => "ring-mismatch",
            Error::InvalidMap(_) => "invalid-map",
            Error::NotAChainMap(_) => "not-a-chain-map",
            Error::NotAComplex(_) => "not-a-complex",
            Error::DimensionMismatch(_) => "dimension-mismatch",
            Error::NotGraded(_) => "not-graded",
            Error::BoundExceeded(_) => "bound-exceeded",
            Error::Parse { .. } => "parse-error",
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }

    pub(crate) fn parse_at(src: &str, offset: usize, message: impl Into<String>) -> Self {
        let (line, column) = line_col(src, offset);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

/// 1-based line and column of a byte offset.
pub(crate) fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(src.len());
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, column)
}

pub type Result<T> = std::result::Result<T, Error>;
