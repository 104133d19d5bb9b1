//! Explicit game trees, their verification, and positional strategies.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use thiserror::Error;

use super::{escape_door, robber_components, Configuration, Position};
use crate::hypergraph::{Hypergraph, Universe};
use crate::nodeset::NodeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameVertex {
    pub cops: NodeSet,
    /// Witness squad for `cops`; `None` at the root.
    pub squad: Option<NodeSet>,
    pub component: NodeSet,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

impl GameVertex {
    pub fn config(&self) -> Configuration {
        Configuration {
            cops: self.cops,
            component: self.component,
        }
    }

    pub fn is_capture(&self) -> bool {
        self.component.is_empty()
    }
}

/// A finite game tree rooted at vertex 0. All children of a vertex share the
/// Captain's move, so the tree doubles as the strategy it unfolds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameTree {
    universe: Arc<Universe>,
    vertices: Vec<GameVertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("game tree and hypergraphs use different node sets")]
    UniverseMismatch,
    #[error("root must be (∅, nodes(h1))")]
    BadRoot,
    #[error("vertex {vertex}: illegal move {cops}: {reason}")]
    IllegalMove {
        vertex: usize,
        cops: String,
        reason: &'static str,
    },
    #[error("vertex {vertex}: children disagree on the Captain's move")]
    MixedMoves { vertex: usize },
    #[error("vertex {vertex}: children {found} but the escape components are {expected}")]
    WrongChildren {
        vertex: usize,
        found: String,
        expected: String,
    },
    #[error("vertex {vertex}: branch ends without capture")]
    Unfinished { vertex: usize },
    #[error("vertex {vertex}: capture configuration has successors")]
    CaptureHasChildren { vertex: usize },
    #[error("configuration ({cops}, {component}) repeats along a branch")]
    Repetition { cops: String, component: String },
    #[error("no move for configuration ({cops}, {component})")]
    MissingMove { cops: String, component: String },
    #[error("game tree exceeds {0} vertices")]
    TooLarge(usize),
    #[error("strategy is not monotone at vertex {vertex}")]
    NotMonotone { vertex: usize },
}

impl GameTree {
    /// A tree holding only the initial configuration `(∅, nodes)`.
    pub fn new(universe: Arc<Universe>, nodes: NodeSet) -> Self {
        GameTree {
            universe,
            vertices: vec![GameVertex {
                cops: NodeSet::empty(),
                squad: None,
                component: nodes,
                parent: None,
                children: Vec::new(),
            }],
        }
    }

    pub fn add_child(&mut self, parent: usize, pos: Position, component: NodeSet) -> usize {
        let id = self.vertices.len();
        self.vertices.push(GameVertex {
            cops: pos.cops,
            squad: Some(pos.squad),
            component,
            parent: Some(parent),
            children: Vec::new(),
        });
        self.vertices[parent].children.push(id);
        id
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn vertices(&self) -> &[GameVertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &GameVertex {
        &self.vertices[v]
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn root(&self) -> &GameVertex {
        &self.vertices[0]
    }

    /// The Captain's move at `v`, read off its first child.
    pub fn move_at(&self, v: usize) -> Option<Position> {
        let c = *self.vertices[v].children.first()?;
        let child = &self.vertices[c];
        Some(Position {
            cops: child.cops,
            squad: child.squad.unwrap_or(child.cops),
        })
    }

    /// Vertices in breadth-first order.
    pub fn bfs(&self) -> Vec<usize> {
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            out.extend(self.vertices[out[i]].children.iter().copied());
            i += 1;
        }
        out
    }

    pub fn depth(&self, mut v: usize) -> usize {
        let mut d = 0;
        while let Some(p) = self.vertices[v].parent {
            v = p;
            d += 1;
        }
        d
    }

    /// Number of moves until capture on the branch below `v` that is longest.
    pub fn height(&self, v: usize) -> usize {
        self.vertices[v]
            .children
            .iter()
            .map(|&c| 1 + self.height(c))
            .max()
            .unwrap_or(0)
    }

    /// The child of the root whose component is `c`.
    pub fn child_with_component(&self, v: usize, c: NodeSet) -> Option<usize> {
        self.vertices[v]
            .children
            .iter()
            .copied()
            .find(|&u| self.vertices[u].component == c)
    }

    /// Non-empty cop sets, one per vertex, in vertex order.
    pub fn positions(&self) -> Vec<NodeSet> {
        self.vertices
            .iter()
            .map(|v| v.cops)
            .filter(|c| !c.is_empty())
            .collect()
    }

    /// The positional view, if every configuration has a single move.
    pub fn positional(&self) -> Option<PositionalStrategy> {
        let mut moves = BTreeMap::new();
        for v in 0..self.len() {
            if let Some(pos) = self.move_at(v) {
                if let Some(old) = moves.insert(self.vertices[v].config(), pos) {
                    if old != pos {
                        return None;
                    }
                }
            }
        }
        Some(PositionalStrategy { moves })
    }

    /// Copies the subtree of `src` at `v` below `parent`, relabelling the cops
    /// of its top vertex.
    pub(crate) fn graft(
        &mut self,
        parent: usize,
        src: &GameTree,
        v: usize,
        top: Position,
    ) -> usize {
        let id = self.add_child(parent, top, src.vertices[v].component);
        for &c in &src.vertices[v].children {
            let child = &src.vertices[c];
            let pos = Position {
                cops: child.cops,
                squad: child.squad.unwrap_or(child.cops),
            };
            self.graft(id, src, c, pos);
        }
        id
    }

    pub(crate) fn same_universe(&self, h: &Hypergraph) -> bool {
        Arc::ptr_eq(&self.universe, h.universe()) || self.universe.names() == h.universe().names()
    }
}

fn sets(u: &Universe, s: &[NodeSet]) -> String {
    let parts: Vec<String> = s.iter().map(|&x| u.fmt_set(x)).collect();
    format!("[{}]", parts.join(","))
}

/// Checks that `tree` is the game tree of a winning strategy: the root is the
/// initial configuration, every move is legal, children are exactly the escape
/// components, and every branch ends in a capture.
pub fn verify_strategy(
    tree: &GameTree,
    h1: &Hypergraph,
    h2: &Hypergraph,
) -> Result<(), StrategyError> {
    if !tree.same_universe(h1) || !h1.same_universe(h2) {
        return Err(StrategyError::UniverseMismatch);
    }
    let u = h1.universe();
    let root = tree.root();
    if !root.cops.is_empty() || root.component != h1.nodes() || root.parent.is_some() {
        return Err(StrategyError::BadRoot);
    }
    for (i, v) in tree.vertices.iter().enumerate() {
        if v.is_capture() {
            if !v.children.is_empty() {
                return Err(StrategyError::CaptureHasChildren { vertex: i });
            }
            continue;
        }
        let Some(pos) = tree.move_at(i) else {
            return Err(StrategyError::Unfinished { vertex: i });
        };
        if v.children.iter().any(|&c| {
            let c = &tree.vertices[c];
            c.cops != pos.cops || c.squad != Some(pos.squad)
        }) {
            return Err(StrategyError::MixedMoves { vertex: i });
        }
        let illegal = |reason| StrategyError::IllegalMove {
            vertex: i,
            cops: u.fmt_set(pos.cops),
            reason,
        };
        if !h2.contains_edge(pos.squad) {
            return Err(illegal("squad is not a hyperedge of h2"));
        }
        if !pos.cops.is_subset(pos.squad) {
            return Err(illegal("cops outside the squad"));
        }
        if !pos.cops.is_subset(h1.frontier(v.component)) {
            return Err(illegal("cops outside the frontier"));
        }
        let mut expected: Vec<NodeSet> = robber_components(h1, v.config(), pos.cops)
            .into_iter()
            .map(|c| c.members)
            .collect();
        if expected.is_empty() {
            expected.push(NodeSet::empty());
        }
        let mut found: Vec<NodeSet> = v
            .children
            .iter()
            .map(|&c| tree.vertices[c].component)
            .collect();
        found.sort();
        expected.sort();
        if found != expected {
            return Err(StrategyError::WrongChildren {
                vertex: i,
                found: sets(u, &found),
                expected: sets(u, &expected),
            });
        }
    }
    Ok(())
}

/// Whether every move in the tree leaves an empty escape door.
pub fn is_monotone(tree: &GameTree, h1: &Hypergraph) -> bool {
    first_non_monotone(tree, h1).is_none()
}

/// Shallowest vertex whose move opens an escape door, in breadth-first order.
pub(crate) fn first_non_monotone(tree: &GameTree, h1: &Hypergraph) -> Option<usize> {
    tree.bfs().into_iter().find(|&v| {
        let vx = &tree.vertices[v];
        !vx.is_capture()
            && tree
                .move_at(v)
                .is_some_and(|m| !escape_door(h1, vx.config(), m.cops).is_empty())
    })
}

/// `Σ |M|` over all vertices of the tree.
pub fn strategy_size(tree: &GameTree) -> usize {
    tree.vertices.iter().map(|v| v.cops.len()).sum()
}

/// A Captain policy keyed by configuration.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PositionalStrategy {
    pub moves: BTreeMap<Configuration, Position>,
}

impl PositionalStrategy {
    pub fn insert(&mut self, cfg: Configuration, pos: Position) {
        self.moves.insert(cfg, pos);
    }

    /// Unfolds the game tree. A configuration repeating along a branch means
    /// the game can go on forever, which is reported as
    /// [`StrategyError::Repetition`].
    pub fn unfold(&self, h1: &Hypergraph, limit: usize) -> Result<GameTree, StrategyError> {
        let u = h1.universe();
        let mut tree = GameTree::new(u.clone(), h1.nodes());
        let mut path = HashSet::new();
        self.expand(h1, &mut tree, 0, &mut path, limit)?;
        Ok(tree)
    }

    fn expand(
        &self,
        h1: &Hypergraph,
        tree: &mut GameTree,
        v: usize,
        path: &mut HashSet<Configuration>,
        limit: usize,
    ) -> Result<(), StrategyError> {
        let cfg = tree.vertices[v].config();
        if cfg.is_capture() {
            return Ok(());
        }
        let u = h1.universe();
        if !path.insert(cfg) {
            return Err(StrategyError::Repetition {
                cops: u.fmt_set(cfg.cops),
                component: u.fmt_set(cfg.component),
            });
        }
        let pos = *self
            .moves
            .get(&cfg)
            .ok_or_else(|| StrategyError::MissingMove {
                cops: u.fmt_set(cfg.cops),
                component: u.fmt_set(cfg.component),
            })?;
        let comps = robber_components(h1, cfg, pos.cops);
        if comps.is_empty() {
            tree.add_child(v, pos, NodeSet::empty());
        }
        for c in comps {
            if tree.len() >= limit {
                return Err(StrategyError::TooLarge(limit));
            }
            let id = tree.add_child(v, pos, c.members);
            self.expand(h1, tree, id, path, limit)?;
        }
        path.remove(&cfg);
        Ok(())
    }
}
