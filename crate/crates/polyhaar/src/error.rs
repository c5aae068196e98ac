use crate::space::SpaceKind;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("a {kind} needs at least {min} edges, got {n}")]
    TooFewEdges {
        kind: &'static str,
        min: usize,
        n: usize,
    },

    #[error("closed polygon fails to close: |sum of edges| = {defect:.3e} > {tol:.0e}")]
    NotClosed { defect: f64, tol: f64 },

    #[error("planar polygon has a nonzero out-of-plane component")]
    NotPlanar,

    #[error("non-finite coordinate in polygon edges")]
    NonFinite,

    #[error("expected a {expected}-dimensional polygon, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("chord out of range: start {start}, span {k}, polygon has {n} edges")]
    ChordOutOfRange { start: usize, k: usize, n: usize },

    #[error("zero-length edge at index {index}")]
    ZeroLengthEdge { index: usize },

    #[error("turning-angle cosine {value} lies outside [-1-{tol:.0e}, 1+{tol:.0e}]")]
    AngleDomain { value: f64, tol: f64 },

    #[error("permutation oracle refuses edge sets with n = {n} > {max} edges")]
    OracleTooLarge { n: usize, max: usize },

    #[error("edge set is not closed: |sum of edges| = {ell:.3e}")]
    EdgeSetNotClosed { ell: f64 },

    #[error("zero normal vector")]
    ZeroNormal,

    #[error("cannot rescale a zero-length polygon")]
    ZeroTotalLength,

    #[error("{what} is not available for {space}")]
    Unsupported {
        what: &'static str,
        space: SpaceKind,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "rejection sampler gave up after {attempted} attempts \
         ({accepted} of {target} accepted; lambda too small?)"
    )]
    RejectionBudget {
        attempted: u64,
        accepted: u64,
        target: u64,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
