//! Tree projections of a pair `(h1, h2)`: acyclic hypergraphs `ha` with
//! `h1 ≤ ha ≤ h2`.
//!
//! Existence and construction go through the Robber and Captain game: the
//! non-empty positions of a monotone winning strategy form a tree projection,
//! and a normal-form join tree of a minimal tree projection can be read back
//! as a monotone strategy.

mod brute;
mod minimize;
mod normal;
mod width;

use log::debug;
use thiserror::Error;

use crate::error::HypergraphError;
use crate::game::{
    is_monotone, robber_components, solve, verify_strategy, GameTree, Position, StrategyError,
};
use crate::hypergraph::Hypergraph;
use crate::jointree::{is_acyclic, JoinTree};
use crate::nodeset::NodeSet;

pub use brute::{brute_force_tp, is_subset_minimal, DEFAULT_BRUTE_TP_NODES};
pub use minimize::minimize;
pub use normal::{check_minimality_conditions, construct_component_tree, TPReport, Witness};
pub use width::{ghw_decide, tw_decide, WidthError, DEFAULT_TW_NODES};

/// The pair `(h1, h2)` over one universe.
#[derive(Debug, Clone)]
pub struct TPInstance {
    h1: Hypergraph,
    h2: Hypergraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TpError {
    #[error("hyperedge {0} of h1 lies in no hyperedge of the candidate")]
    NotCovering(String),
    #[error("hyperedge {0} of the candidate lies in no hyperedge of h2")]
    NotBounded(String),
    #[error("candidate is cyclic")]
    Cyclic,
    #[error("candidate is not reduced")]
    NotReduced,
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error("strategy rejected: {0}")]
    Strategy(#[from] StrategyError),
    #[error("strategy is not monotone")]
    NotMonotone,
    #[error("{0} is not a hyperedge of the tree projection")]
    NotAnEdge(String),
    #[error("h1 has isolated nodes {0} that the Captain can never reach")]
    Isolated(String),
    #[error("no component tree rooted at {0}")]
    NoComponentTree(String),
}

impl TPInstance {
    pub fn new(h1: &Hypergraph, h2: &Hypergraph) -> Self {
        let (h1, h2) = Hypergraph::align(h1, h2);
        TPInstance { h1, h2 }
    }

    pub fn h1(&self) -> &Hypergraph {
        &self.h1
    }

    pub fn h2(&self) -> &Hypergraph {
        &self.h2
    }

    /// `ha` re-expressed over the instance's universe.
    pub fn adopt(&self, ha: &Hypergraph) -> Result<Hypergraph, TpError> {
        Ok(ha.reindex(self.h1.universe())?)
    }

    /// `h1` without its isolated nodes.
    pub(crate) fn playable(&self) -> Hypergraph {
        self.h1
            .with_nodes(self.h1.covered())
            .expect("covered nodes contain every edge")
    }

    /// Same `h1`, different resources over the same universe.
    pub(crate) fn with_resources<I: IntoIterator<Item = NodeSet>>(&self, edges: I) -> TPInstance {
        let h2 = Hypergraph::new(self.h1.universe().clone(), self.h1.universe().all(), edges)
            .expect("resource edges lie in the universe");
        TPInstance {
            h1: self.h1.clone(),
            h2,
        }
    }
}

/// Which of `h1 ≤ ha`, `ha ≤ h2` and acyclicity fails first.
pub fn check_tree_projection(ha: &Hypergraph, inst: &TPInstance) -> Result<(), TpError> {
    let ha = inst.adopt(ha)?;
    let (h1, h2) = (inst.h1(), inst.h2());
    if let Some(&e) = h1
        .edges()
        .iter()
        .find(|&&e| !ha.edges().iter().any(|&f| e.is_subset(f)))
    {
        return Err(TpError::NotCovering(h1.fmt_set(e)));
    }
    if let Some(&e) = ha
        .edges()
        .iter()
        .find(|&&e| !h2.edges().iter().any(|&f| e.is_subset(f)))
    {
        return Err(TpError::NotBounded(ha.fmt_set(e)));
    }
    if !is_acyclic(&ha) {
        return Err(TpError::Cyclic);
    }
    Ok(())
}

pub fn is_tree_projection(ha: &Hypergraph, inst: &TPInstance) -> bool {
    check_tree_projection(ha, inst).is_ok()
}

/// A tree projection built from a monotone winning strategy, or `None` when
/// the Robber escapes. Isolated nodes of `h1` are ignored by the game and
/// kept as isolated nodes of the result.
pub fn find_tp(inst: &TPInstance) -> Option<Hypergraph> {
    if !inst.h1.leq(&inst.h2) {
        debug!("h1 is not covered by h2");
        return None;
    }
    let h1 = inst.playable();
    let tree = solve(&h1, &inst.h2)?;
    let ha = strategy_to_tp(&tree, &h1, &inst.h2)
        .expect("monotone winning strategies yield tree projections");
    Some(
        ha.with_nodes(inst.h1.nodes())
            .expect("h1 nodes cover its positions"),
    )
}

/// The distinct non-empty positions of a monotone winning strategy.
pub fn strategy_to_tp(
    tree: &GameTree,
    h1: &Hypergraph,
    h2: &Hypergraph,
) -> Result<Hypergraph, TpError> {
    let inst = TPInstance::new(h1, h2);
    let tree = if tree.universe().names() == inst.h1.universe().names() {
        tree.clone()
    } else {
        return Err(StrategyError::UniverseMismatch.into());
    };
    verify_strategy(&tree, &inst.h1, &inst.h2)?;
    if !is_monotone(&tree, &inst.h1) {
        return Err(TpError::NotMonotone);
    }
    let edges: Vec<NodeSet> = tree
        .vertices()
        .iter()
        .map(|v| v.cops)
        .filter(|c| !c.is_empty())
        .collect();
    let ha = Hypergraph::new(inst.h1.universe().clone(), inst.h1.nodes(), edges)?;
    check_tree_projection(&ha, &inst)?;
    Ok(ha)
}

/// A monotone winning strategy read off a normal-form join tree of the
/// minimized `ha`, rooted at `root` or at the least edge. `root` must be an
/// edge of the minimized tree projection.
pub fn tp_to_strategy(
    ha: &Hypergraph,
    inst: &TPInstance,
    root: Option<NodeSet>,
) -> Result<GameTree, TpError> {
    check_tree_projection(ha, inst)?;
    let h1 = inst.h1();
    if !h1.isolated().is_empty() {
        return Err(TpError::Isolated(h1.fmt_set(h1.isolated())));
    }
    let mut tree = GameTree::new(h1.universe().clone(), h1.nodes());
    if h1.nodes().is_empty() {
        return Ok(tree);
    }
    let ha = minimize(ha, inst)?;
    let root = match root {
        Some(r) if !ha.contains_edge(r) => return Err(TpError::NotAnEdge(ha.fmt_set(r))),
        Some(r) => r,
        None => ha.edges()[0],
    };
    let jt = construct_component_tree(&ha, h1, root)?
        .ok_or_else(|| TpError::NoComponentTree(ha.fmt_set(root)))?;
    let mut top = vec![NodeSet::empty(); jt.len()];
    let jroot = jt.root().expect("non-empty join tree");
    top[jroot] = h1.nodes();
    for r in jt.tree().preorder() {
        for &s in jt.tree().children(r) {
            top[s] = jt.subtree_nodes(s) - jt.vertex(r);
        }
    }
    read_moves(&mut tree, 0, jroot, &jt, &top, inst);
    verify_strategy(&tree, h1, inst.h2())?;
    Ok(tree)
}

fn read_moves(
    tree: &mut GameTree,
    v: usize,
    s: usize,
    jt: &JoinTree,
    top: &[NodeSet],
    inst: &TPInstance,
) {
    let hs = jt.vertex(s);
    let squad = *inst
        .h2()
        .edges()
        .iter()
        .find(|&&f| hs.is_subset(f))
        .expect("tree projection edges lie in h2");
    let pos = Position { cops: hs, squad };
    let comps = robber_components(inst.h1(), tree.vertex(v).config(), hs);
    if comps.is_empty() {
        tree.add_child(v, pos, NodeSet::empty());
        return;
    }
    for c in comps {
        let id = tree.add_child(v, pos, c.members);
        let next = jt
            .tree()
            .children(s)
            .iter()
            .copied()
            .find(|&t| top[t] == c.members)
            .expect("component trees match every component");
        read_moves(tree, id, next, jt, top, inst);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::strategy_size;

    fn over(h: &Hypergraph, edges: &[&str]) -> Hypergraph {
        let sets = edges
            .iter()
            .map(|e| h.set(e.chars().map(|c| c.to_string())).unwrap());
        Hypergraph::new(h.universe().clone(), h.nodes(), sets).unwrap()
    }

    #[test]
    fn running_example_chain_is_checked() {
        let (h1, h2) = fixtures::h1p_h2p();
        let inst = TPInstance::new(&h1, &h2);
        let ha = over(&h1, &["EFGHIJK", "ADEFJK", "ABCD"]);
        check_tree_projection(&ha, &inst).unwrap();
        let cd = h1.set(["C", "D"]).unwrap();
        let abcd = h1.set(["A", "B", "C", "D"]).unwrap();
        let abcdh = h1.set(["A", "B", "C", "D", "H"]).unwrap();
        assert!(h1.contains_edge(cd) && ha.contains_edge(abcd) && h2.contains_edge(abcdh));
        assert!(cd.is_subset(abcd) && abcd.is_subset(abcdh));
        assert_eq!(
            check_tree_projection(&over(&h1, &["EFGHIJK", "ABCD"]), &inst),
            Err(TpError::NotCovering("{A,F}".into()))
        );
        assert_eq!(check_tree_projection(&h1, &inst), Err(TpError::Cyclic));
    }

    #[test]
    fn acyclic_and_cyclic_identities() {
        let p3 = fixtures::p3();
        assert!(is_tree_projection(&p3, &TPInstance::new(&p3, &p3)));
        let tri = fixtures::tri();
        let inst = TPInstance::new(&tri, &tri);
        assert_eq!(check_tree_projection(&tri, &inst), Err(TpError::Cyclic));
        assert!(find_tp(&inst).is_none());
        let found = find_tp(&TPInstance::new(&p3, &p3)).unwrap();
        assert_eq!(found.reduce().edges(), p3.edges());
    }

    #[test]
    fn hand_built_example_strategy_positions() {
        let (h1, h2) = fixtures::h1p_h2p();
        let set = |s: &str| h1.set(s.chars().map(String::from)).unwrap();
        let pos = |cops: &str, squad: &str| Position {
            cops: set(cops),
            squad: set(squad),
        };
        let mut t = GameTree::new(h1.universe().clone(), h1.nodes());
        let left = t.add_child(0, pos("EFG", "EFGHIJK"), set("ABCD"));
        let right = t.add_child(0, pos("EFG", "EFGHIJK"), set("HIJK"));
        let bc = t.add_child(left, pos("ADEF", "ADEFJK"), set("BC"));
        t.add_child(bc, pos("ABCD", "ABCDH"), NodeSet::empty());
        t.add_child(right, pos("GHIJK", "EFGHIJK"), NodeSet::empty());
        let ha = strategy_to_tp(&t, &h1, &h2).unwrap();
        assert_eq!(ha, over(&h1, &["EFG", "ADEF", "ABCD", "GHIJK"]));
        assert!(is_tree_projection(&ha, &TPInstance::new(&h1, &h2)));
    }

    #[test]
    fn running_example_tree_projection() {
        let (h1, h2) = fixtures::h1p_h2p();
        let inst = TPInstance::new(&h1, &h2);
        let ha = find_tp(&inst).unwrap();
        assert!(is_tree_projection(&ha, &inst));
        let tree = solve(&h1, &h2).unwrap();
        assert_eq!(strategy_to_tp(&tree, &h1, &h2).unwrap(), ha);
    }

    #[test]
    fn strategy_to_tp_rejects_bad_input() {
        let (h1, h2) = fixtures::h1p_h2p();
        let opts = crate::game::BruteOptions {
            max_nodes: 11,
            seed: Some(3),
            slack: 2,
            ..Default::default()
        };
        let mut rejected = false;
        for seed in 0..10 {
            let t = crate::game::brute_solve_with(
                &h1,
                &h2,
                &crate::game::BruteOptions {
                    seed: Some(seed),
                    ..opts.clone()
                },
            )
            .unwrap()
            .unwrap();
            if !is_monotone(&t, &h1) {
                assert_eq!(strategy_to_tp(&t, &h1, &h2), Err(TpError::NotMonotone));
                rejected = true;
            }
        }
        assert!(rejected);
        let lone = GameTree::new(h1.universe().clone(), h1.nodes());
        assert!(matches!(
            strategy_to_tp(&lone, &h1, &h2),
            Err(TpError::Strategy(_))
        ));
    }

    #[test]
    fn single_move_capture() {
        let h1 = fixtures::tri();
        let all = h1.nodes();
        let h2 = Hypergraph::new(h1.universe().clone(), all, [all]).unwrap();
        let mut t = GameTree::new(h1.universe().clone(), all);
        t.add_child(
            0,
            Position {
                cops: all,
                squad: all,
            },
            NodeSet::empty(),
        );
        let ha = strategy_to_tp(&t, &h1, &h2).unwrap();
        assert_eq!(ha.edges(), &[all]);
        let back = tp_to_strategy(&ha, &TPInstance::new(&h1, &h2), None).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn strategies_from_every_root() {
        let (h1, h2) = fixtures::h1p_h2p();
        let inst = TPInstance::new(&h1, &h2);
        let ha = minimize(&find_tp(&inst).unwrap(), &inst).unwrap();
        for &root in ha.edges() {
            let t = tp_to_strategy(&ha, &inst, Some(root)).unwrap();
            verify_strategy(&t, &h1, &h2).unwrap();
            assert!(is_monotone(&t, &h1));
            assert_eq!(t.move_at(0).unwrap().cops, root);
            let again = strategy_to_tp(&t, &h1, &h2).unwrap();
            assert!(again
                .edges()
                .iter()
                .all(|e| ha.edges().iter().any(|f| e.is_subset(*f))));
            assert!(strategy_size(&t) > 0);
        }
    }
}
