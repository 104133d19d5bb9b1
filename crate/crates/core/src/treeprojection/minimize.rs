//! Descent in `⊂` from a tree projection to a minimal one.
//!
//! Steps, each checked to stay a tree projection strictly below the current
//! one: trimming edges to `nodes(h1)` and reducing, splitting a component of
//! `ha` that holds several components of `h1`, and replacing one edge `d` by
//! proper subsets of itself. The last step asks whether `(h1, H2_d)` has a
//! tree projection, where `H2_d` keeps every other edge of `ha` and offers
//! `d ∖ {x}` for each `x ∈ d`. Any tree projection strictly below `ha` fits
//! under `H2_d` for each edge `d` it drops, so the descent stops exactly at a
//! `⊂`-minimal tree projection.

use log::debug;

use super::{check_tree_projection, find_tp, is_tree_projection, TPInstance, TpError};
use crate::hypergraph::Hypergraph;
use crate::nodeset::NodeSet;

/// Edges cut down to `nodes`, reduced, on node set `nodes`.
pub(crate) fn trim(ha: &Hypergraph, nodes: NodeSet) -> Hypergraph {
    let named = ha
        .edges()
        .iter()
        .zip(ha.edge_names())
        .map(|(&e, n)| (e & nodes, n))
        .filter(|(e, _)| !e.is_empty())
        .map(|(e, n)| (ha.contains_edge(e).then(|| n.clone()), e));
    Hypergraph::from_named(ha.universe().clone(), nodes, named)
        .expect("trimmed edges lie in the node set")
        .reduce()
}

fn accept(next: Hypergraph, cur: &Hypergraph, inst: &TPInstance, step: &str) -> Option<Hypergraph> {
    let next = trim(&next, inst.h1().nodes());
    if next.properly_contained(cur) && is_tree_projection(&next, inst) {
        debug!("{step}: {} -> {} edges", cur.num_edges(), next.num_edges());
        Some(next)
    } else {
        None
    }
}

fn split_component(cur: &Hypergraph, inst: &TPInstance) -> Option<Hypergraph> {
    let h1 = inst.h1();
    for &h in cur.edges() {
        let inner = h1.component_sets(h);
        for ca in cur.component_sets(h) {
            let parts: Vec<NodeSet> = inner.iter().copied().filter(|c| c.is_subset(ca)).collect();
            if parts.len() < 2 {
                continue;
            }
            let mut edges: Vec<NodeSet> = cur
                .edges()
                .iter()
                .copied()
                .filter(|e| !e.intersects(ca))
                .collect();
            for &e in cur.edges().iter().filter(|e| e.intersects(ca)) {
                edges.extend(parts.iter().map(|&c| e & (c | h)).filter(|x| !x.is_empty()));
            }
            let next = cur
                .with_edges(edges)
                .expect("pieces of edges stay inside the node set");
            if let Some(next) = accept(next, cur, inst, "component split") {
                return Some(next);
            }
        }
    }
    None
}

fn replace_edge(cur: &Hypergraph, inst: &TPInstance) -> Option<Hypergraph> {
    for &d in cur.edges() {
        let mut offer: Vec<NodeSet> = cur.edges().iter().copied().filter(|&e| e != d).collect();
        offer.extend(
            d.iter()
                .map(|x| d - NodeSet::singleton(x))
                .filter(|e| !e.is_empty()),
        );
        let below = inst.with_resources(offer);
        if let Some(next) = find_tp(&below).and_then(|g| accept(g, cur, inst, "edge replacement")) {
            return Some(next);
        }
    }
    None
}

/// A `⊂`-minimal tree projection contained in `ha`.
pub fn minimize(ha: &Hypergraph, inst: &TPInstance) -> Result<Hypergraph, TpError> {
    let ha = inst.adopt(ha)?;
    check_tree_projection(&ha, inst)?;
    let mut cur = trim(&ha, inst.h1().nodes());
    debug_assert!(is_tree_projection(&cur, inst));
    while let Some(next) = split_component(&cur, inst).or_else(|| replace_edge(&cur, inst)) {
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn over(h: &Hypergraph, edges: &[&str]) -> Hypergraph {
        let sets = edges
            .iter()
            .map(|e| h.set(e.chars().map(|c| c.to_string())).unwrap());
        Hypergraph::new(h.universe().clone(), h.universe().all(), sets).unwrap()
    }

    #[test]
    fn running_example_descends() {
        let (h1, h2) = fixtures::h1p_h2p();
        let inst = TPInstance::new(&h1, &h2);
        let fig1 = over(&h1, &["EFGHIJK", "ADEFJK", "ABCD"]);
        let min = minimize(&fig1, &inst).unwrap();
        assert!(min.properly_contained(&fig1));
        assert!(is_tree_projection(&min, &inst));
        assert_eq!(minimize(&min, &inst).unwrap(), min);
    }

    #[test]
    fn spurious_nodes_are_trimmed() {
        let p3 = fixtures::p3();
        let wide = Hypergraph::from_edges([["X", "Y", "Q"], ["Y", "Z", "Q"]]).unwrap();
        let inst = TPInstance::new(&p3, &wide);
        let ha = inst.adopt(&wide).unwrap();
        let min = minimize(&ha, &inst).unwrap();
        assert_eq!(min.nodes(), inst.h1().nodes());
        assert_eq!(min.num_edges(), 2);
        assert!(min.edges().iter().all(|e| e.len() == 2));
    }

    #[test]
    fn rejects_non_projections() {
        let tri = fixtures::tri();
        assert_eq!(
            minimize(&tri, &TPInstance::new(&tri, &tri)),
            Err(TpError::Cyclic)
        );
    }
}
