//! Width deciders: generalized hypertree width through `(h, h^k)` and
//! treewidth through `(h, h^tk)`.

use thiserror::Error;

use super::{find_tp, TPInstance};
use crate::decomposition::{
    verify_hypertree_decomposition, verify_tree_decomposition, HypertreeDecomposition,
    TreeDecomposition,
};
use crate::error::{HypergraphError, Oversize};
use crate::hypergraph::Hypergraph;
use crate::jointree::build_join_tree;
use crate::nodeset::NodeSet;
use crate::tree::RootedTree;

pub const DEFAULT_TW_NODES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WidthError {
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Oversize(#[from] Oversize),
}

/// The labels and tree of a join tree of the reduced tree projection.
fn projection_tree(h: &Hypergraph, resources: &Hypergraph) -> Option<(RootedTree, Vec<NodeSet>)> {
    let ha = find_tp(&TPInstance::new(h, resources))?.reduce();
    let ha = ha
        .reindex(h.universe())
        .expect("tree projection nodes belong to h");
    let jt = build_join_tree(&ha).expect("tree projections are acyclic");
    Some((jt.tree().clone(), jt.vertices().to_vec()))
}

/// Fewest edges of `h`, at most `k`, whose union contains `target`.
fn cover(h: &Hypergraph, target: NodeSet, k: usize) -> Option<Vec<NodeSet>> {
    fn go(cands: &[NodeSet], left: NodeSet, depth: usize, pick: &mut Vec<NodeSet>) -> bool {
        let Some(x) = left.first() else { return true };
        if depth == 0 {
            return false;
        }
        for &e in cands.iter().filter(|e| e.contains(x)) {
            pick.push(e);
            if go(cands, left - e, depth - 1, pick) {
                return true;
            }
            pick.pop();
        }
        false
    }
    let cands: Vec<NodeSet> = h.edges_meeting(target).collect();
    (1..=k).find_map(|d| {
        let mut pick = Vec::new();
        go(&cands, target, d, &mut pick).then_some(pick)
    })
}

/// A generalized hypertree decomposition of width at most `k`, or `None` when
/// `ghw(h) > k`.
pub fn ghw_decide(h: &Hypergraph, k: usize) -> Result<Option<HypertreeDecomposition>, WidthError> {
    let hk = h.power_k(k as i64)?;
    let Some((tree, chi)) = projection_tree(h, &hk) else {
        return Ok(None);
    };
    let lambda = chi
        .iter()
        .map(|&c| cover(h, c, k).expect("each projection edge is a union of at most k edges"))
        .collect();
    let hd = HypertreeDecomposition::new(h.universe().clone(), tree, chi, lambda)
        .expect("one label per vertex");
    let width = verify_hypertree_decomposition(h, &hd, true)
        .expect("decomposition from a tree projection is valid");
    debug_assert!(width <= k);
    Ok(Some(hd))
}

/// A tree decomposition of width at most `k`, or `None` when `tw(h) > k`.
/// Nodes in no edge get singleton bags below the root.
pub fn tw_decide(
    h: &Hypergraph,
    k: usize,
    max_nodes: usize,
) -> Result<Option<TreeDecomposition>, WidthError> {
    let n = h.nodes().len();
    if n > max_nodes {
        return Err(Oversize {
            what: "the treewidth decider",
            nodes: n,
            bound: max_nodes,
        }
        .into());
    }
    let htk = h.clusters_tk(k as i64)?;
    let Some((tree, mut chi)) = projection_tree(h, &htk) else {
        return Ok(None);
    };
    let mut parents: Vec<Option<usize>> = tree.parents().to_vec();
    let covered = chi.iter().fold(NodeSet::empty(), |a, &c| a | c);
    for x in h.nodes() - covered {
        let root = if chi.is_empty() {
            None
        } else {
            Some(tree.root().unwrap_or(0))
        };
        chi.push(NodeSet::singleton(x));
        parents.push(root);
    }
    let tree = RootedTree::from_parents(parents).expect("extra bags hang below the root");
    let td = TreeDecomposition::new(h.universe().clone(), tree, chi).expect("one label per vertex");
    let width =
        verify_tree_decomposition(h, &td).expect("decomposition from a tree projection is valid");
    debug_assert!(width <= k);
    Ok(Some(td))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn graph(edges: &[&str]) -> Hypergraph {
        Hypergraph::from_edges(edges.iter().map(|e| e.chars().map(String::from))).unwrap()
    }

    #[test]
    fn triangle() {
        let tri = fixtures::tri();
        assert!(ghw_decide(&tri, 1).unwrap().is_none());
        let hd = ghw_decide(&tri, 2).unwrap().unwrap();
        assert_eq!(hd.width(), 2);
        assert!(tw_decide(&tri, 1, 10).unwrap().is_none());
        assert_eq!(tw_decide(&tri, 2, 10).unwrap().unwrap().width(), 2);
    }

    #[test]
    fn acyclic_has_width_one() {
        let p3 = fixtures::p3();
        assert_eq!(ghw_decide(&p3, 1).unwrap().unwrap().width(), 1);
        assert_eq!(tw_decide(&p3, 1, 10).unwrap().unwrap().width(), 1);
        assert!(tw_decide(&p3, 0, 10).unwrap().is_none());
    }

    #[test]
    fn cycles_and_cliques() {
        let c6 = graph(&["AB", "BC", "CD", "DE", "EF", "AF"]);
        assert!(ghw_decide(&c6, 1).unwrap().is_none());
        assert!(ghw_decide(&c6, 2).unwrap().is_some());
        assert_eq!(tw_decide(&c6, 2, 10).unwrap().unwrap().width(), 2);
        let k4 = graph(&["AB", "AC", "AD", "BC", "BD", "CD"]);
        assert!(tw_decide(&k4, 2, 10).unwrap().is_none());
        assert_eq!(tw_decide(&k4, 3, 10).unwrap().unwrap().width(), 3);
    }

    #[test]
    fn isolated_nodes_get_bags() {
        let h = Hypergraph::from_edges_with_nodes([["A", "B"]], ["C", "D"]).unwrap();
        let td = tw_decide(&h, 1, 10).unwrap().unwrap();
        assert_eq!(td.chi.len(), 3);
        let empty = Hypergraph::from_edges_with_nodes(Vec::<Vec<&str>>::new(), ["A", "B"]).unwrap();
        assert_eq!(tw_decide(&empty, 0, 10).unwrap().unwrap().width(), 0);
        assert!(tw_decide(&graph(&["AB", "BC"]), 1, 2).is_err());
        assert!(ghw_decide(&h, 0).is_err());
    }
}
