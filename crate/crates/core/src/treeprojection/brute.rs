//! Tree projections by elimination orderings, independent of the game.
//!
//! `(h1, h2)` has a tree projection iff the primal graph of `h1` has an
//! elimination ordering whose elimination cliques each fit inside an edge of
//! `h2`. The cliques of such an ordering form a tree projection. A dynamic
//! program over eliminated sets decides this, and a tree projection is
//! pushed down in `⊂` one edge at a time until no edge can be replaced by
//! proper subsets of itself.

use crate::error::Oversize;
use crate::hypergraph::Hypergraph;
use crate::nodeset::NodeSet;

use super::minimize::trim;
use super::TPInstance;

pub const DEFAULT_BRUTE_TP_NODES: usize = 16;
const MAX_DP_NODES: usize = 20;

/// Elimination cliques of an ordering of the covered nodes of `h1` whose
/// cliques all fit in `h2`, if any.
fn eliminate(h1: &Hypergraph, h2: &Hypergraph) -> Option<Vec<NodeSet>> {
    let order: Vec<usize> = h1.covered().iter().collect();
    let n = order.len();
    let mut adj = vec![0u32; n];
    for &e in h1.edges() {
        let local: u32 = order
            .iter()
            .enumerate()
            .filter(|(_, &x)| e.contains(x))
            .fold(0, |a, (i, _)| a | 1 << i);
        for (i, a) in adj.iter_mut().enumerate() {
            if local >> i & 1 == 1 {
                *a |= local & !(1 << i);
            }
        }
    }
    let global = |m: u32| -> NodeSet {
        (0..n)
            .filter(|&i| m >> i & 1 == 1)
            .map(|i| NodeSet::singleton(order[i]))
            .fold(NodeSet::empty(), |a, s| a | s)
    };
    let fits = |k: NodeSet| h2.edges().iter().any(|&f| k.is_subset(f));
    // Nodes outside `gone` reachable from `v` through eliminated nodes.
    let clique = |gone: u32, v: usize| -> u32 {
        let mut inner = 1u32 << v;
        let mut seen = inner;
        let mut out = 0u32;
        while inner != 0 {
            let i = inner.trailing_zeros() as usize;
            inner &= inner - 1;
            let fresh = adj[i] & !seen;
            seen |= fresh;
            out |= fresh & !gone;
            inner |= fresh & gone;
        }
        out | 1 << v
    };
    let full = (1u32 << n) - 1;
    let mut pred: Vec<Option<(u32, u32)>> = vec![None; 1usize << n];
    pred[0] = Some((0, 0));
    for gone in 0..=full {
        if pred[gone as usize].is_none() {
            continue;
        }
        for v in (0..n).filter(|&v| gone >> v & 1 == 0) {
            let next = gone | 1 << v;
            if pred[next as usize].is_some() {
                continue;
            }
            let k = clique(gone, v);
            if fits(global(k)) {
                pred[next as usize] = Some((gone, k));
            }
        }
        if gone == full {
            break;
        }
    }
    let mut cliques = Vec::with_capacity(n);
    let mut at = full;
    while at != 0 {
        let (prev, k) = pred[at as usize]?;
        cliques.push(global(k));
        at = prev;
    }
    Some(cliques)
}

fn check_size(inst: &TPInstance, bound: usize) -> Result<(), Oversize> {
    let n = inst.h1().covered().len();
    if n > bound.min(MAX_DP_NODES) {
        return Err(Oversize {
            what: "the elimination-ordering search",
            nodes: n,
            bound: bound.min(MAX_DP_NODES),
        });
    }
    Ok(())
}

fn exists(inst: &TPInstance) -> Option<Hypergraph> {
    let cliques = eliminate(inst.h1(), inst.h2())?;
    Some(trim(
        &inst
            .h1()
            .with_edges(cliques)
            .expect("cliques lie in nodes(h1)"),
        inst.h1().nodes(),
    ))
}

/// A tree projection strictly below `ha` in `⊂`, if one exists.
fn below(ha: &Hypergraph, inst: &TPInstance) -> Option<Hypergraph> {
    ha.edges().iter().find_map(|&d| {
        let mut offer: Vec<NodeSet> = ha.edges().iter().copied().filter(|&e| e != d).collect();
        offer.extend(
            d.iter()
                .map(|x| d - NodeSet::singleton(x))
                .filter(|e| !e.is_empty()),
        );
        exists(&inst.with_resources(offer))
    })
}

/// A `⊂`-minimal tree projection, or `None` when there is none. Rejects
/// instances where `h1` covers more than `max_nodes` nodes.
pub fn brute_force_tp(inst: &TPInstance, max_nodes: usize) -> Result<Option<Hypergraph>, Oversize> {
    check_size(inst, max_nodes)?;
    let Some(mut cur) = exists(inst) else {
        return Ok(None);
    };
    while let Some(next) = below(&cur, inst) {
        debug_assert!(next.properly_contained(&cur));
        cur = next;
    }
    Ok(Some(cur))
}

/// Whether no tree projection lies strictly below `ha` in `⊂`. `ha` must be
/// a reduced tree projection on `nodes(h1)`.
pub fn is_subset_minimal(
    ha: &Hypergraph,
    inst: &TPInstance,
    max_nodes: usize,
) -> Result<bool, Oversize> {
    check_size(inst, max_nodes)?;
    let ha = inst.adopt(ha).expect("ha shares the instance's node names");
    Ok(below(&ha, inst).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::treeprojection::is_tree_projection;

    #[test]
    fn small_cases() {
        let tri = fixtures::tri();
        assert_eq!(
            brute_force_tp(&TPInstance::new(&tri, &tri), 10).unwrap(),
            None
        );
        let inst = TPInstance::new(&tri, &tri.power_k(2).unwrap());
        let ha = brute_force_tp(&inst, 10).unwrap().unwrap();
        assert_eq!(ha.edges(), &[tri.nodes()]);
        let p3 = fixtures::p3();
        let ha = brute_force_tp(&TPInstance::new(&p3, &p3), 10)
            .unwrap()
            .unwrap();
        assert_eq!(ha, p3);
    }

    #[test]
    fn running_example() {
        let (h1, h2) = fixtures::h1p_h2p();
        let inst = TPInstance::new(&h1, &h2);
        let ha = brute_force_tp(&inst, 16).unwrap().unwrap();
        assert!(is_tree_projection(&ha, &inst));
        assert!(is_subset_minimal(&ha, &inst, 16).unwrap());
        assert!(brute_force_tp(&inst, 5).is_err());
    }

    #[test]
    fn empty_h1() {
        let h = Hypergraph::from_edges_with_nodes(Vec::<Vec<&str>>::new(), ["A"]).unwrap();
        let ha = brute_force_tp(&TPInstance::new(&h, &h), 4)
            .unwrap()
            .unwrap();
        assert_eq!(ha.num_edges(), 0);
    }
}
