//! The Robber and Captain game on a pair `(h1, h2)`.
//!
//! The Robber is tracked by the `[M]`-component `C` of `h1` it occupies, so a
//! configuration is a pair `(M, C)`; `C = ∅` is a capture. A Captain move is a
//! set of cops inside some squad (edge of `h2`) and inside `Fr(C)`.

mod brute;
mod monotonize;
mod solve;
mod strategy;

use std::collections::BTreeSet;

use crate::hypergraph::{Component, Hypergraph};
use crate::nodeset::NodeSet;

pub use brute::{brute_solve, brute_solve_with, brute_winning, BruteOptions, DEFAULT_BRUTE_NODES};
pub use monotonize::{monotonize, monotonize_step, MonotonizeError};
pub use solve::{solve, Solver};
pub use strategy::{
    is_monotone, strategy_size, verify_strategy, GameTree, GameVertex, PositionalStrategy,
    StrategyError,
};

/// Cops standing on `cops`, all inside the squad `squad`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub cops: NodeSet,
    pub squad: NodeSet,
}

/// `(M, C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub cops: NodeSet,
    pub component: NodeSet,
}

impl Configuration {
    /// `(∅, nodes(h1))`.
    pub fn initial(h1: &Hypergraph) -> Self {
        Configuration {
            cops: NodeSet::empty(),
            component: h1.nodes(),
        }
    }

    pub fn is_capture(&self) -> bool {
        self.component.is_empty()
    }
}

/// `ED(v, M') = ∂C ∖ M'`.
pub fn escape_door(h1: &Hypergraph, cfg: Configuration, next: NodeSet) -> NodeSet {
    let ed = h1.border(cfg.component) - next;
    debug_assert!(
        cfg.cops.is_empty() || ed == (cfg.cops & h1.frontier(cfg.component)) - next,
        "border and cop-based escape doors differ"
    );
    ed
}

/// The `[M']`-components meeting `C ∪ ED`, ordered by least node.
pub fn robber_components(h1: &Hypergraph, cfg: Configuration, next: NodeSet) -> Vec<Component> {
    let reach = cfg.component | escape_door(h1, cfg, next);
    h1.components(next)
        .into_iter()
        .filter(|c| c.members.intersects(reach))
        .collect()
}

/// Escape components computed from the game definition: the `[M']`-components
/// reachable from `C` by `[M ∩ M']`-paths.
pub fn robber_components_by_paths(
    h1: &Hypergraph,
    cfg: Configuration,
    next: NodeSet,
) -> Vec<Component> {
    let open = h1.reach(cfg.cops & next, cfg.component);
    h1.components(next)
        .into_iter()
        .filter(|c| c.members.intersects(open))
        .collect()
}

/// All non-empty positions inside `squad ∩ Fr(C)` for some squad,
/// deduplicated on the cop set. Each is paired with its least witness squad.
pub fn legal_moves(h1: &Hypergraph, h2: &Hypergraph, cfg: Configuration) -> Vec<Position> {
    let fr = h1.frontier(cfg.component);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &squad in h2.edges() {
        for cops in (squad & fr).subsets() {
            if !cops.is_empty() && seen.insert(cops) {
                out.push(Position { cops, squad });
            }
        }
    }
    out.sort();
    out
}

/// Whether `cops` is a legal position at `cfg` with witness `squad`.
pub fn is_legal(h1: &Hypergraph, h2: &Hypergraph, cfg: Configuration, pos: Position) -> bool {
    h2.contains_edge(pos.squad)
        && pos.cops.is_subset(pos.squad)
        && pos.cops.is_subset(h1.frontier(cfg.component))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(h: &Hypergraph, s: &str) -> NodeSet {
        h.set(s.chars().map(|c| c.to_string())).unwrap()
    }

    #[test]
    fn running_example_escape_doors() {
        let (h1, _) = fixtures::h1p_h2p();
        let cfg = Configuration {
            cops: set(&h1, "EFG"),
            component: set(&h1, "ABCD"),
        };
        assert_eq!(escape_door(&h1, cfg, set(&h1, "ADEF")), NodeSet::empty());
        assert_eq!(escape_door(&h1, cfg, set(&h1, "ADE")), set(&h1, "F"));
        assert_eq!(escape_door(&h1, cfg, set(&h1, "ABCDEF")), NodeSet::empty());
    }

    #[test]
    fn running_example_components() {
        let (h1, _) = fixtures::h1p_h2p();
        let root = Configuration::initial(&h1);
        let got: Vec<_> = robber_components(&h1, root, set(&h1, "EFG"))
            .into_iter()
            .map(|c| c.members)
            .collect();
        assert_eq!(got, vec![set(&h1, "ABCD"), set(&h1, "HIJK")]);
        let cfg = Configuration {
            cops: set(&h1, "EFG"),
            component: set(&h1, "ABCD"),
        };
        let got: Vec<_> = robber_components(&h1, cfg, set(&h1, "ADEF"))
            .into_iter()
            .map(|c| c.members)
            .collect();
        assert_eq!(got, vec![set(&h1, "BC")]);
        assert_eq!(
            robber_components_by_paths(&h1, cfg, set(&h1, "ADEF")).len(),
            1
        );
        assert!(robber_components(&h1, cfg, set(&h1, "ABCDEF")).is_empty());
    }

    #[test]
    fn running_example_moves() {
        let (h1, h2) = fixtures::h1p_h2p();
        let root = Configuration::initial(&h1);
        let moves = legal_moves(&h1, &h2, root);
        assert!(moves
            .iter()
            .any(|p| p.cops == set(&h1, "EFG") && p.squad == set(&h1, "EFGHIJK")));
        let cfg = Configuration {
            cops: set(&h1, "EFG"),
            component: set(&h1, "ABCD"),
        };
        let pos = Position {
            cops: set(&h1, "ADEF"),
            squad: set(&h1, "ADEFJK"),
        };
        assert!(is_legal(&h1, &h2, cfg, pos));
        assert!(legal_moves(&h1, &h2, cfg)
            .iter()
            .any(|p| p.cops == pos.cops));
        let far = h2.with_edges([set(&h1, "HIJK")]).unwrap();
        assert!(legal_moves(&h1, &far, cfg).is_empty());
    }
}
