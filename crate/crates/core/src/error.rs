use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },

    #[error("unknown edge id {id} (graph has {m} edges)")]
    UnknownEdge { id: usize, m: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("size guard `{guard}` exceeded: {detail}")]
    SizeGuard { guard: &'static str, detail: String },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("the zero polynomial has no falling-prefix factorization")]
    ZeroPolynomial,

    #[error("engine `{left}` and engine `{right}` disagree at k = {k}: {left_value} vs {right_value}")]
    EngineDisagreement {
        left: &'static str,
        right: &'static str,
        k: usize,
        left_value: String,
        right_value: String,
    },

    #[error("invalid family spec `{spec}`: {reason}")]
    Family { spec: String, reason: String },

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
}

impl Error {
    pub(crate) fn guard(guard: &'static str, detail: impl Into<String>) -> Self {
        Error::SizeGuard {
            guard,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
