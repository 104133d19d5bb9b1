//! Tree projections of hypergraph pairs, the Robber and Captain game, and
//! width deciders built on top of them.

pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod game;
pub mod hypergraph;
pub mod io;
pub mod jointree;
pub mod nodeset;
pub mod tree;
pub mod treeprojection;

pub use error::{HypergraphError, Oversize};
pub use hypergraph::{Component, Hypergraph, Universe};
pub use nodeset::NodeSet;
