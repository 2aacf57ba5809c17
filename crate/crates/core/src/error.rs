use thiserror::Error;

/// Errors surfaced by the library. The CLI maps these onto exit codes:
/// parse errors exit 1, `InfiniteSet` exits 2, everything else exits 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("level mismatch: {0} != {1}")]
    LevelMismatch(usize, usize),

    #[error("brute-force guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("the requested set is infinite")]
    InfiniteSet,

    #[error("empty datum set has no level")]
    EmptyDatumSet,
}

pub type Result<T> = std::result::Result<T, Error>;
