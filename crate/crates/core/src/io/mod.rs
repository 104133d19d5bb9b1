//! Text, JSON and DOT encodings.

pub mod dot;
pub mod json;
pub mod text;

pub use json::{DecompositionDoc, GameTreeDoc, HypergraphDoc, JsonError};
pub use text::{parse_hypergraph, print_hypergraph, ParseError};
