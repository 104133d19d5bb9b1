#![allow(dead_code)]

use proptest::prelude::*;
use treeproj::{Hypergraph, NodeSet, Universe};

pub fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'A' + i as u8) as char).to_string())
        .collect()
}

/// Hypergraph over the first `n` letters with the given edge masks. Its
/// nodes are the covered ones unless `all` is set.
pub fn build(n: usize, masks: &[u32], all: bool) -> Hypergraph {
    let universe = Universe::new(letters(n)).unwrap();
    let edges: Vec<NodeSet> = masks
        .iter()
        .map(|&m| NodeSet::from_bits(m as u128))
        .collect();
    let covered = edges.iter().fold(NodeSet::empty(), |a, &e| a | e);
    let nodes = if all { universe.all() } else { covered };
    Hypergraph::new(universe, nodes, edges).unwrap()
}

pub fn hypergraph(max_nodes: usize, max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_nodes).prop_flat_map(move |n| {
        prop::collection::vec(1u32..(1 << n), 1..=max_edges).prop_map(move |m| build(n, &m, false))
    })
}

/// Hypergraph that may have nodes in no edge.
pub fn hypergraph_with_isolated(
    max_nodes: usize,
    max_edges: usize,
) -> impl Strategy<Value = Hypergraph> {
    (1..=max_nodes).prop_flat_map(move |n| {
        prop::collection::vec(1u32..(1 << n), 0..=max_edges).prop_map(move |m| build(n, &m, true))
    })
}

/// Pairs over one universe. `h2` is grown from the edges of `h1` plus a few
/// extra edges, so `h1 ≤ h2` holds often but not always.
pub fn pair(max_nodes: usize, max_edges: usize) -> impl Strategy<Value = (Hypergraph, Hypergraph)> {
    (2..=max_nodes).prop_flat_map(move |n| {
        let full = 1u32 << n;
        (
            prop::collection::vec(1u32..full, 1..=max_edges),
            prop::collection::vec(0u32..full, max_edges),
            prop::collection::vec(1u32..full, 0..=2),
            any::<bool>(),
        )
            .prop_map(move |(e1, grow, extra, drop)| {
                let mut e2: Vec<u32> = e1
                    .iter()
                    .zip(&grow)
                    .map(|(a, b)| a | (b & grow[0]))
                    .collect();
                e2.extend(extra);
                if drop && e2.len() > 1 {
                    e2.remove(0);
                }
                let h1 = build(n, &e1, false);
                let h2 = build(n, &e2, false);
                (h1, h2)
            })
    })
}

/// Acyclic hypergraph grown edge by edge: each new edge takes part of an
/// earlier edge and adds fresh nodes.
pub fn acyclic(max_edges: usize) -> impl Strategy<Value = Hypergraph> {
    prop::collection::vec(
        (any::<prop::sample::Index>(), 0u32..16, 1usize..=2),
        1..=max_edges,
    )
    .prop_map(|steps| {
        let mut edges: Vec<u32> = Vec::new();
        let mut next = 0usize;
        for (parent, keep, fresh) in steps {
            let mut e = match edges.len() {
                0 => 0,
                k => {
                    let p = edges[parent.index(k)];
                    let bits: Vec<u32> = (0..32).filter(|&i| p >> i & 1 == 1).collect();
                    bits.iter()
                        .enumerate()
                        .filter(|(j, _)| keep >> (j % 4) & 1 == 1)
                        .fold(0, |a, (_, &b)| a | 1 << b)
                }
            };
            for _ in 0..fresh {
                e |= 1 << next;
                next += 1;
            }
            edges.push(e);
        }
        build(next, &edges, false).reduce()
    })
}
