use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{0} must be nonempty")]
    EmptySet(&'static str),

    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("unknown graph family `{0}`")]
    InvalidFamily(String),

    #[error("invalid builder spec: {0}")]
    InvalidSpec(String),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("coboundary is only defined on 0- and 1-cochains, got degree {0}")]
    UnsupportedDegree(usize),

    #[error("cover set {fine_set} of the finer cover is not contained in any coarse set")]
    NotARefinement { fine_set: usize },

    #[error("invalid refinement map: {0}")]
    InvalidRefinementMap(String),

    #[error("form is not exact on cover set {patch} (residual {residual:.3e})")]
    NotLocallyExact { patch: usize, residual: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("Neumann data not solvable: fluxes sum to {sum:.3e}, expected 0")]
    Solvability { sum: f64 },

    #[error("inadmissible initial condition: divergence {divergence:.3e} exceeds tolerance")]
    InadmissibleInitialCondition { divergence: f64 },

    #[error("could not construct a cover: {0}")]
    CoverConstruction(String),

    #[error("linear system is singular")]
    Singular,
}
