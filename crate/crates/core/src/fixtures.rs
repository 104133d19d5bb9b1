//! Small named instances shipped with the crate.

use crate::hypergraph::Hypergraph;
use crate::io::parse_hypergraph;

pub const H1P: &str = include_str!("../data/h1p.hg");
pub const H2P: &str = include_str!("../data/h2p.hg");
pub const TRI: &str = include_str!("../data/tri.hg");
pub const P3: &str = include_str!("../data/p3.hg");

fn load(src: &str) -> Hypergraph {
    parse_hypergraph(src).expect("bundled fixture parses")
}

/// The running-example pair, aligned over one universe.
pub fn h1p_h2p() -> (Hypergraph, Hypergraph) {
    Hypergraph::align(&load(H1P), &load(H2P))
}

pub fn h1p() -> Hypergraph {
    h1p_h2p().0
}

pub fn h2p() -> Hypergraph {
    h1p_h2p().1
}

pub fn tri() -> Hypergraph {
    load(TRI)
}

pub fn p3() -> Hypergraph {
    load(P3)
}
