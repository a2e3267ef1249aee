use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("graph6 supports at most 62 vertices, got {0}")]
    UnsupportedSize(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is not regular: vertex {u} has degree {du}, vertex {v} has degree {dv}")]
    NotRegular {
        u: usize,
        du: usize,
        v: usize,
        dv: usize,
    },

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("order {order} exceeds the size guard {limit}")]
    SizeGuard { order: usize, limit: usize },

    #[error("invalid switching set: vertex {vertex}: {reason}")]
    InvalidSwitchingSet { vertex: usize, reason: String },

    #[error("Jacobi iteration did not converge (off-diagonal residual {residual:e})")]
    NoConvergence { residual: f64 },

    #[error("singular system: {0}")]
    Singular(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            reason: reason.into(),
        }
    }
}
