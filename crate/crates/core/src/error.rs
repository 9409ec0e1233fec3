use thiserror::Error;

use crate::hypergraph::Vertex;
use crate::partition::Bipartition;
use crate::special::BipartitionCertificate;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("edge {0:?} repeats a vertex")]
    DegenerateEdge(Vec<Vertex>),

    #[error("edge {0:?} listed twice")]
    DuplicateEdge(Vec<Vertex>),

    #[error("edge of size {0}, expected 1 to 3")]
    BadEdgeSize(usize),

    #[error("size-1 edge {{{0}}} is repeated")]
    RepeatedSingleton(Vertex),

    #[error("edge {0:?} has multiplicity zero")]
    ZeroMultiplicity(Vec<Vertex>),

    #[error("vertex {0} is not in the given set")]
    NotInSet(Vertex),

    #[error("restriction would delete {0} vertices, at most 2 are allowed")]
    RestrictionTooLarge(usize),

    #[error("edge {0:?} does not meet the restriction set")]
    EdgeOutsideRestriction(Vec<Vertex>),

    #[error("malformed class signature {0:?}")]
    MalformedSignature(String),

    #[error("partition assigns {got} vertices, hypergraph has {expected}")]
    PartitionSize { got: usize, expected: usize },

    #[error("vertex {0} is assigned to more than one part")]
    OverlappingParts(Vertex),

    #[error("vertex {0} is not assigned to any part")]
    UncoveredVertex(Vertex),

    #[error("vertex {0} already lies in the target class")]
    NoOpMove(Vertex),

    #[error("partition is not semi-optimal")]
    NotSemiOptimal,

    #[error("vertex {0} is already in C")]
    AlreadyInC(Vertex),

    #[error("set meets {degree} of {m} edges, below the threshold {num}/{den}")]
    BelowThreshold { degree: u64, m: u64, num: u64, den: u64 },

    #[error("epsilon {num}/{den} must lie in [1/15, 2/3)")]
    EpsilonOutOfRange { num: u64, den: u64 },

    #[error("local optimum too weak to certify, retry with more restarts or exact search")]
    RetryNeeded,

    #[error("search needs {needed} assignments, budget is {cap}")]
    BudgetExceeded { needed: u128, cap: u64 },

    #[error("hypergraph has no edges")]
    NoEdges,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("special bipartition search exhausted its restarts without a certificate")]
    ResourceCap { best: Box<(Bipartition, BipartitionCertificate)> },
}
