use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrayError {
    #[error("malformed intersection array: {0}")]
    MalformedInput(String),
    #[error("intersection array halves differ in length: b has {b_len} entries, c has {c_len}")]
    LengthMismatch { b_len: usize, c_len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("array fails basic validation: {0}")]
    Invalid(String),
    #[error("shell sizes or edge count are not integral")]
    NonIntegral,
    #[error("valency {0} is below 3; the resistance bound only applies to valency at least 3")]
    ValencyTooSmall(u64),
    #[error("distance {j} out of range 1..={diameter}")]
    DistanceOutOfRange { j: usize, diameter: usize },
    #[error("potential property violated at index {index}: {detail}")]
    PropertyViolation { index: usize, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {detail}")]
    BadParams { family: String, detail: String },
    #[error("graph is not connected")]
    NotConnected,
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {vertex} has |d(u,z) - d(v,z)| > 1")]
    PartitionGap { vertex: usize },
    #[error("potential sequence does not match the graph's intersection array")]
    ArrayMismatch,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid edge list: {0}")]
    EdgeList(String),
    #[error("graph is not distance-regular: {0}")]
    NotDistanceRegular(crate::graph::RegularityWitness),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("query spans about {estimate} candidates, above the budget of {budget}; narrow the ranges")]
    QueryTooLarge { estimate: u128, budget: u128 },
}
