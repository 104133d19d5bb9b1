use thiserror::Error;

/// Errors raised while building or querying hypergraphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("invalid node name {0:?}: names must match [A-Za-z0-9_]+")]
    InvalidName(String),
    #[error("too many nodes: {0} (at most {max})", max = crate::nodeset::MAX_NODES)]
    TooManyNodes(usize),
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("empty hyperedge{}", .0.as_deref().map(|n| format!(" {n}")).unwrap_or_default())]
    EmptyEdge(Option<String>),
    #[error("hyperedge {0} contains nodes outside the node set")]
    EdgeOutsideNodes(String),
    #[error("node {0} lies in the separator")]
    NodeInSeparator(String),
    #[error("k must be at least {min}, got {got}")]
    InvalidK { min: i64, got: i64 },
    #[error("resource hypergraph would have {count} hyperedges (limit {limit})")]
    TooLarge { count: u128, limit: u128 },
}

/// Errors raised when an input exceeds the configured size bound of an
/// exhaustive procedure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("instance too large for {what}: {nodes} nodes (bound {bound})")]
pub struct Oversize {
    pub what: &'static str,
    pub nodes: usize,
    pub bound: usize,
}
