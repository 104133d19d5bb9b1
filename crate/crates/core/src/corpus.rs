//! Instance generators for oracle comparisons: every antichain hypergraph on
//! a few nodes, and seeded random pairs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::{Hypergraph, Universe};
use crate::nodeset::NodeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusBounds {
    pub max_nodes: usize,
    pub max_edges: usize,
    pub max_edge_size: usize,
    pub pairs: usize,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds {
            max_nodes: 8,
            max_edges: 6,
            max_edge_size: 4,
            pairs: 500,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub h1: Hypergraph,
    pub h2: Hypergraph,
}

fn letters(n: usize) -> Vec<String> {
    assert!(n <= 26, "corpus instances use single-letter names");
    (0..n)
        .map(|i| ((b'A' + i as u8) as char).to_string())
        .collect()
}

/// Hypergraph on the union of `edges`, named over the first letters.
fn build(names: &[String], edges: &[NodeSet]) -> Hypergraph {
    let lists: Vec<Vec<&str>> = edges
        .iter()
        .map(|e| e.iter().map(|i| names[i].as_str()).collect())
        .collect();
    Hypergraph::from_edges(lists).expect("generated names are valid")
}

/// Every antichain of non-empty node sets of size at most `max_edge_size`
/// over `nodes` nodes, each as a hypergraph on the union of its edges. The
/// empty hypergraph comes first.
pub fn exhaustive_family(nodes: usize, max_edge_size: usize) -> Vec<Hypergraph> {
    let names = letters(nodes);
    let sets: Vec<NodeSet> = NodeSet::prefix(nodes)
        .subsets()
        .filter(|s| !s.is_empty() && s.len() <= max_edge_size)
        .collect();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(sets: &[NodeSet], from: usize, pick: &mut Vec<NodeSet>, out: &mut Vec<Vec<NodeSet>>) {
        out.push(pick.clone());
        for i in from..sets.len() {
            let s = sets[i];
            if pick.iter().any(|&p| p.is_subset(s) || s.is_subset(p)) {
                continue;
            }
            pick.push(s);
            rec(sets, i + 1, pick, out);
            pick.pop();
        }
    }
    let mut all = Vec::new();
    rec(&sets, 0, &mut pick, &mut all);
    for edges in all {
        out.push(build(&names, &edges));
    }
    out
}

fn random_set(rng: &mut ChaCha8Rng, n: usize, size: usize) -> NodeSet {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    idx[..size.min(n)].iter().copied().collect()
}

/// A random hypergraph over at most `b.max_nodes` nodes. Its universe is the
/// first few letters; its nodes are those covered by edges.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, b: &CorpusBounds) -> Hypergraph {
    let n = rng.gen_range(2..=b.max_nodes.max(2));
    let m = rng.gen_range(1..=b.max_edges.max(1));
    let edges: Vec<NodeSet> = (0..m)
        .map(|_| {
            let size = rng.gen_range(1..=b.max_edge_size.min(n));
            random_set(rng, n, size)
        })
        .collect();
    let universe = Universe::new(letters(n)).expect("generated names are valid");
    let covered = edges.iter().fold(NodeSet::empty(), |a, &e| a | e);
    Hypergraph::new(universe, covered, edges).expect("edges lie in the universe")
}

/// A random pair. About half the time `h2` is grown from the edges of `h1`,
/// so that `h1 ≤ h2` is likely and existence is not decided by covering
/// alone.
pub fn random_pair(rng: &mut ChaCha8Rng, b: &CorpusBounds) -> (Hypergraph, Hypergraph) {
    let h1 = random_hypergraph(rng, b);
    let n = h1.universe().len();
    let pool = rng.gen_range(n..=b.max_nodes.max(n));
    let universe = Universe::new(letters(pool)).expect("generated names are valid");
    let h1 = h1.reindex(&universe).expect("h1 names lie in the pool");
    let mut edges: Vec<NodeSet> = Vec::new();
    if rng.gen_bool(0.6) {
        for &e in h1.edges() {
            let mut grown = e;
            for _ in 0..rng.gen_range(0..=2) {
                grown.insert(rng.gen_range(0..pool));
            }
            edges.push(grown);
        }
        for _ in 0..rng.gen_range(0..=2) {
            let size = rng.gen_range(2..=(b.max_edge_size + 1).min(pool));
            edges.push(random_set(rng, pool, size));
        }
        if edges.len() > 1 && rng.gen_bool(0.2) {
            let i = rng.gen_range(0..edges.len());
            edges.remove(i);
        }
    } else {
        for _ in 0..rng.gen_range(1..=b.max_edges.max(1)) {
            let size = rng.gen_range(1..=(b.max_edge_size + 1).min(pool));
            edges.push(random_set(rng, pool, size));
        }
    }
    let covered = edges.iter().fold(NodeSet::empty(), |a, &e| a | e);
    let h2 = Hypergraph::new(universe, covered, edges).expect("edges lie in the pool");
    (h1, h2)
}

/// `b.pairs` random pairs from `seed`.
pub fn random_pairs(seed: u64, b: &CorpusBounds) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..b.pairs)
        .map(|i| {
            let (h1, h2) = random_pair(&mut rng, b);
            Instance {
                name: format!("r{seed}_{i:04}"),
                h1,
                h2,
            }
        })
        .collect()
}
