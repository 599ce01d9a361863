use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("family `{family}` requires size >= {min}, got {got}")]
    FamilySize {
        family: String,
        min: usize,
        got: usize,
    },

    #[error("invalid edge ({u}, {v}) for a simple graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("edge-list parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matrix not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {diff:e}")]
    NotSymmetric { i: usize, j: usize, diff: f64 },

    #[error("double join condition {condition} violated: {detail}")]
    Condition {
        condition: &'static str,
        detail: String,
    },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
