use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pair {{{u}, {v}}} is not an allowed comparison")]
    ForbiddenPair { u: usize, v: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("coloring is not proper for H: {u} and {v} share a color but are not comparable")]
    InvalidColoring { u: usize, v: usize },

    #[error("orientation of edge {{{u}, {v}}} is not known")]
    PreconditionViolated { u: usize, v: usize },

    #[error("k = {k} is too small: a merge round ended with {roots} pairwise incomparable roots")]
    KTooSmall { k: usize, roots: usize },

    #[error("select survivor sets do not intersect (n = {n}, k = {k})")]
    EmptyIntersection { n: usize, k: usize },

    #[error("exact clique search limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },

    #[error("nuts-and-bolts instances need an even vertex count, got {0}")]
    OddN(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("orientation is cyclic")]
    Cyclic,

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
