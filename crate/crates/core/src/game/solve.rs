//! Exact search for monotone winning strategies.
//!
//! In monotone play every move at `(M, C)` covers `∂C`, so the Robber never
//! leaves `C` and whether the Captain wins depends on `C` alone. The solver
//! memoizes `win(C)` and tries moves `∂C ∪ T` with `∅ ≠ T ⊆ squad ∩ C`.

use std::collections::{HashMap, HashSet};

use log::{debug, warn};

use super::{robber_components, GameTree, Position};
use crate::hypergraph::Hypergraph;
use crate::nodeset::NodeSet;

pub struct Solver<'a> {
    h1: &'a Hypergraph,
    h2: &'a Hypergraph,
    memo: HashMap<NodeSet, Option<Position>>,
}

impl<'a> Solver<'a> {
    pub fn new(h1: &'a Hypergraph, h2: &'a Hypergraph) -> Self {
        assert!(h1.same_universe(h2), "solver inputs must share a universe");
        if !h1.leq(h2) {
            warn!("h1 is not covered by h2; no winning strategy can exist");
        }
        Solver {
            h1,
            h2,
            memo: HashMap::new(),
        }
    }

    /// Number of memoized components.
    pub fn explored(&self) -> usize {
        self.memo.len()
    }

    /// Children of the monotone move `cops` at component `c`.
    fn children(&self, c: NodeSet, cops: NodeSet) -> Vec<NodeSet> {
        self.h1
            .component_sets(cops)
            .into_iter()
            .filter(|d| d.intersects(c))
            .collect()
    }

    pub fn wins(&mut self, c: NodeSet) -> bool {
        self.winning_move(c).is_some()
    }

    /// A monotone move from component `c` after which every escape component
    /// is again winning.
    pub fn winning_move(&mut self, c: NodeSet) -> Option<Position> {
        if let Some(&m) = self.memo.get(&c) {
            return m;
        }
        let border = self.h1.border(c);
        let mut maximal: Vec<(NodeSet, NodeSet)> = Vec::new();
        for &squad in self.h2.edges() {
            let t = squad & c;
            if !border.is_subset(squad) || t.is_empty() {
                continue;
            }
            if !maximal.iter().any(|&(u, _)| t.is_subset(u)) {
                maximal.retain(|&(u, _)| !u.is_subset(t));
                maximal.push((t, squad));
            }
        }
        maximal.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(&b.0)));
        let mut tried = HashSet::new();
        let mut found = None;
        'outer: for pass in 0..2 {
            for &(tmax, squad) in &maximal {
                let mut cands: Vec<NodeSet> = if pass == 0 {
                    vec![tmax]
                } else {
                    tmax.subsets()
                        .filter(|t| !t.is_empty() && *t != tmax)
                        .collect()
                };
                cands.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
                for t in cands {
                    if !tried.insert(t) {
                        continue;
                    }
                    let cops = border | t;
                    let kids = self.children(c, cops);
                    if kids.iter().all(|&d| self.wins(d)) {
                        found = Some(Position { cops, squad });
                        break 'outer;
                    }
                }
            }
        }
        self.memo.insert(c, found);
        found
    }

    /// The game tree of the memoized monotone strategy from the initial
    /// configuration, or `None` if the Robber escapes forever.
    pub fn strategy(&mut self) -> Option<GameTree> {
        let root = self.h1.nodes();
        let mut tree = GameTree::new(self.h1.universe().clone(), root);
        if root.is_empty() {
            return Some(tree);
        }
        self.winning_move(root)?;
        self.expand(&mut tree, 0);
        debug!("monotone solver explored {} components", self.memo.len());
        Some(tree)
    }

    fn expand(&mut self, tree: &mut GameTree, v: usize) {
        let cfg = tree.vertex(v).config();
        let pos = self.memo[&cfg.component].expect("expanded components are winning");
        let comps = robber_components(self.h1, cfg, pos.cops);
        if comps.is_empty() {
            tree.add_child(v, pos, NodeSet::empty());
            return;
        }
        for c in comps {
            let id = tree.add_child(v, pos, c.members);
            self.expand(tree, id);
        }
    }
}

/// A monotone winning strategy, if the Captain has any winning strategy.
pub fn solve(h1: &Hypergraph, h2: &Hypergraph) -> Option<GameTree> {
    if !h1.same_universe(h2) {
        let (a, b) = Hypergraph::align(h1, h2);
        return Solver::new(&a, &b).strategy();
    }
    Solver::new(h1, h2).strategy()
}
