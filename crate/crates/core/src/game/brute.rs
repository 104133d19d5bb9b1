//! Unrestricted game search over every legal move, monotone or not.
//!
//! The continuation from `(M, C)` depends only on `C`: legal moves are drawn
//! from `Fr(C)` and the escape components of a move `M'` are the
//! `[M']`-components meeting `C ∪ (∂C ∖ M')`. States are therefore keyed by
//! the Robber's component. The Captain's winning region is the least fixpoint
//! of the usual attractor iteration, so a play that revisits a state without
//! progress never counts as a win.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{escape_door, legal_moves, robber_components, Configuration, GameTree, Position};
use crate::error::Oversize;
use crate::hypergraph::Hypergraph;
use crate::nodeset::NodeSet;

pub const DEFAULT_BRUTE_NODES: usize = 10;

#[derive(Debug, Clone)]
pub struct BruteOptions {
    pub max_nodes: usize,
    /// When set, the emitted tree picks non-monotone moves where it can,
    /// using this seed.
    pub seed: Option<u64>,
    /// Extra rounds granted to the root beyond its optimal capture depth.
    pub slack: usize,
    /// Vertex budget after which the tree builder falls back to optimal moves.
    pub tree_limit: usize,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            max_nodes: DEFAULT_BRUTE_NODES,
            seed: None,
            slack: 0,
            tree_limit: 20_000,
        }
    }
}

struct Arena {
    states: Vec<NodeSet>,
    moves: Vec<Vec<(Position, Vec<usize>)>>,
    rank: Vec<Option<usize>>,
}

fn explore(h1: &Hypergraph, h2: &Hypergraph) -> Arena {
    let mut index: HashMap<NodeSet, usize> = HashMap::new();
    let mut states = vec![h1.nodes()];
    index.insert(h1.nodes(), 0);
    let mut moves = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let cfg = Configuration {
            cops: NodeSet::empty(),
            component: states[i],
        };
        let mut here = Vec::new();
        for pos in legal_moves(h1, h2, cfg) {
            let kids: Vec<usize> = robber_components(h1, cfg, pos.cops)
                .into_iter()
                .map(|c| {
                    *index.entry(c.members).or_insert_with(|| {
                        states.push(c.members);
                        states.len() - 1
                    })
                })
                .collect();
            here.push((pos, kids));
        }
        moves.push(here);
        i += 1;
    }
    let n = states.len();
    let mut rank = vec![None; n];
    let mut level = 1;
    loop {
        let won: Vec<usize> = (0..n)
            .filter(|&s| rank[s].is_none())
            .filter(|&s| {
                moves[s]
                    .iter()
                    .any(|(_, kids)| kids.iter().all(|&k| rank[k].is_some()))
            })
            .collect();
        if won.is_empty() {
            break;
        }
        for s in won {
            rank[s] = Some(level);
        }
        level += 1;
    }
    Arena {
        states,
        moves,
        rank,
    }
}

fn check_size(h1: &Hypergraph, bound: usize) -> Result<(), Oversize> {
    let n = h1.nodes().len();
    if n > bound {
        return Err(Oversize {
            what: "the exhaustive game search",
            nodes: n,
            bound,
        });
    }
    Ok(())
}

/// Whether the Captain has any winning strategy.
pub fn brute_winning(h1: &Hypergraph, h2: &Hypergraph, max_nodes: usize) -> Result<bool, Oversize> {
    check_size(h1, max_nodes)?;
    let (a, b) = Hypergraph::align(h1, h2);
    Ok(a.nodes().is_empty() || explore(&a, &b).rank[0].is_some())
}

/// A winning strategy found by exhaustive search, monotone or not.
pub fn brute_solve(h1: &Hypergraph, h2: &Hypergraph) -> Result<Option<GameTree>, Oversize> {
    brute_solve_with(h1, h2, &BruteOptions::default())
}

pub fn brute_solve_with(
    h1: &Hypergraph,
    h2: &Hypergraph,
    opts: &BruteOptions,
) -> Result<Option<GameTree>, Oversize> {
    check_size(h1, opts.max_nodes)?;
    let (a, b) = Hypergraph::align(h1, h2);
    let mut tree = GameTree::new(a.universe().clone(), a.nodes());
    if a.nodes().is_empty() {
        return Ok(Some(tree));
    }
    let arena = explore(&a, &b);
    let Some(r) = arena.rank[0] else {
        return Ok(None);
    };
    let mut rng = opts.seed.map(ChaCha8Rng::seed_from_u64);
    let mut builder = Builder {
        h1: &a,
        arena: &arena,
        rng: rng.as_mut(),
        limit: opts.tree_limit,
    };
    builder.build(&mut tree, 0, 0, r + opts.slack);
    Ok(Some(tree))
}

struct Builder<'a> {
    h1: &'a Hypergraph,
    arena: &'a Arena,
    rng: Option<&'a mut ChaCha8Rng>,
    limit: usize,
}

impl Builder<'_> {
    fn build(&mut self, tree: &mut GameTree, v: usize, state: usize, budget: usize) {
        let arena = self.arena;
        let fits =
            |kids: &[usize], b: usize| kids.iter().all(|&k| arena.rank[k].is_some_and(|r| r < b));
        let cfg = tree.vertex(v).config();
        let budget = if tree.len() > self.limit {
            arena.rank[state].expect("expanded states are winning")
        } else {
            budget
        };
        let options: Vec<usize> = (0..arena.moves[state].len())
            .filter(|&m| fits(&arena.moves[state][m].1, budget))
            .collect();
        let pick = match (self.rng.as_deref_mut(), tree.len() > self.limit) {
            (Some(rng), false) => {
                let open: Vec<usize> = options
                    .iter()
                    .copied()
                    .filter(|&m| {
                        !escape_door(self.h1, cfg, arena.moves[state][m].0.cops).is_empty()
                    })
                    .collect();
                if !open.is_empty() && rng.gen_bool(0.8) {
                    *open.choose(rng).unwrap()
                } else {
                    *options
                        .choose(rng)
                        .expect("a state within budget has a fitting move")
                }
            }
            _ => *options
                .iter()
                .min_by_key(|&&m| {
                    arena.moves[state][m]
                        .1
                        .iter()
                        .map(|&k| arena.rank[k].unwrap())
                        .max()
                        .unwrap_or(0)
                })
                .expect("a state within budget has a fitting move"),
        };
        let (pos, kids) = &arena.moves[state][pick];
        if kids.is_empty() {
            tree.add_child(v, *pos, NodeSet::empty());
            return;
        }
        for &k in kids {
            let id = tree.add_child(v, *pos, arena.states[k]);
            self.build(tree, id, k, budget - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::{is_monotone, verify_strategy};

    #[test]
    fn small_cases() {
        let tri = fixtures::tri();
        assert!(brute_solve(&tri, &tri).unwrap().is_none());
        let t = brute_solve(&tri, &tri.power_k(2).unwrap())
            .unwrap()
            .unwrap();
        verify_strategy(&t, &tri, &tri.power_k(2).unwrap()).unwrap();
        let (h1, h2) = fixtures::h1p_h2p();
        assert!(brute_solve(&h1, &h2).is_err());
        let opts = BruteOptions {
            max_nodes: 11,
            ..BruteOptions::default()
        };
        let t = brute_solve_with(&h1, &h2, &opts).unwrap().unwrap();
        verify_strategy(&t, &h1, &h2).unwrap();
    }

    #[test]
    fn rejects_large_instances() {
        let (h1, h2) = fixtures::h1p_h2p();
        let opts = BruteOptions {
            max_nodes: 5,
            ..BruteOptions::default()
        };
        assert!(brute_solve_with(&h1, &h2, &opts).is_err());
    }

    #[test]
    fn biased_trees_are_winning() {
        let (h1, h2) = fixtures::h1p_h2p();
        let mut non_monotone = 0;
        for seed in 0..20 {
            let opts = BruteOptions {
                max_nodes: 11,
                seed: Some(seed),
                slack: 2,
                ..BruteOptions::default()
            };
            let t = brute_solve_with(&h1, &h2, &opts).unwrap().unwrap();
            verify_strategy(&t, &h1, &h2).unwrap();
            if !is_monotone(&t, &h1) {
                non_monotone += 1;
            }
        }
        assert!(non_monotone > 0);
    }
}
