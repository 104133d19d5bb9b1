//! Join trees, acyclicity, and the structural predicates on join trees
//! relative to a covered hypergraph `h1`.

use std::sync::Arc;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, Universe};
use crate::nodeset::NodeSet;
use crate::tree::{RootedTree, TreeError};

/// A rooted tree whose vertices are hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinTree {
    universe: Arc<Universe>,
    vertices: Vec<NodeSet>,
    tree: RootedTree,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JoinTreeError {
    #[error("{vertices} vertices but {parents} parent entries")]
    LengthMismatch { vertices: usize, parents: usize },
    #[error("not a tree: {0}")]
    NotATree(#[from] TreeError),
    #[error("hyperedge {0} has no vertex")]
    MissingEdge(String),
    #[error("vertex {0} is not a hyperedge")]
    ExtraVertex(String),
    #[error("hyperedge {0} labels more than one vertex")]
    DuplicateVertex(String),
    #[error("node {0} does not induce a connected subtree")]
    Disconnected(String),
    #[error("unknown node {0:?}")]
    UnknownNode(String),
}

impl JoinTree {
    pub fn new(
        universe: Arc<Universe>,
        vertices: Vec<NodeSet>,
        tree: RootedTree,
    ) -> Result<Self, JoinTreeError> {
        if vertices.len() != tree.len() {
            return Err(JoinTreeError::LengthMismatch {
                vertices: vertices.len(),
                parents: tree.len(),
            });
        }
        Ok(JoinTree {
            universe,
            vertices,
            tree,
        })
    }

    pub fn from_parents(
        universe: Arc<Universe>,
        vertices: Vec<NodeSet>,
        parents: Vec<Option<usize>>,
    ) -> Result<Self, JoinTreeError> {
        let tree = RootedTree::from_parents(parents)?;
        Self::new(universe, vertices, tree)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn vertices(&self) -> &[NodeSet] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> NodeSet {
        self.vertices[v]
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn root(&self) -> Option<usize> {
        self.tree.root()
    }

    pub fn root_edge(&self) -> Option<NodeSet> {
        self.tree.root().map(|r| self.vertices[r])
    }

    pub fn reroot(&self, v: usize) -> JoinTree {
        JoinTree {
            universe: self.universe.clone(),
            vertices: self.vertices.clone(),
            tree: self.tree.reroot(v),
        }
    }

    /// Re-root at the vertex labelled `e`, if any.
    pub fn reroot_at(&self, e: NodeSet) -> Option<JoinTree> {
        self.vertices
            .iter()
            .position(|&v| v == e)
            .map(|v| self.reroot(v))
    }

    /// Union of the vertices in the subtree below `v`.
    pub fn subtree_nodes(&self, v: usize) -> NodeSet {
        self.tree
            .subtree(v)
            .into_iter()
            .fold(NodeSet::empty(), |a, u| a | self.vertices[u])
    }

    pub fn nodes(&self) -> NodeSet {
        self.vertices.iter().fold(NodeSet::empty(), |a, &e| a | e)
    }

    fn vertices_in(&self, universe: &Arc<Universe>) -> Result<Vec<NodeSet>, JoinTreeError> {
        if Arc::ptr_eq(&self.universe, universe) || self.universe.names() == universe.names() {
            return Ok(self.vertices.clone());
        }
        self.vertices
            .iter()
            .map(|&v| {
                universe
                    .set(self.universe.names_of(v))
                    .map_err(|e| JoinTreeError::UnknownNode(e.to_string()))
            })
            .collect()
    }

    /// This tree with vertex labels expressed over `universe`.
    pub fn in_universe(&self, universe: &Arc<Universe>) -> Result<JoinTree, JoinTreeError> {
        Ok(JoinTree {
            universe: universe.clone(),
            vertices: self.vertices_in(universe)?,
            tree: self.tree.clone(),
        })
    }
}

/// Builds a join tree by repeatedly removing ears: an edge `e` whose
/// intersection with the remaining edges lies inside a single witness `f`
/// becomes a child of `f`. Returns `None` when `h` is cyclic.
pub fn build_join_tree(h: &Hypergraph) -> Option<JoinTree> {
    let edges = h.edges();
    let m = edges.len();
    let mut live = vec![true; m];
    let mut parent: Vec<Option<usize>> = vec![None; m];
    let mut count = [0u32; crate::nodeset::MAX_NODES];
    for &e in edges {
        for x in e {
            count[x] += 1;
        }
    }
    let mut remaining = m;
    while remaining > 1 {
        let mut removed = false;
        'ears: for i in 0..m {
            if !live[i] {
                continue;
            }
            let shared: NodeSet = edges[i].iter().filter(|&x| count[x] > 1).collect();
            for j in 0..m {
                if j != i && live[j] && shared.is_subset(edges[j]) {
                    parent[i] = Some(j);
                    live[i] = false;
                    for x in edges[i] {
                        count[x] -= 1;
                    }
                    remaining -= 1;
                    removed = true;
                    break 'ears;
                }
            }
        }
        if !removed {
            return None;
        }
    }
    let tree = RootedTree::from_parents(parent).expect("ear removal yields a tree");
    Some(JoinTree {
        universe: h.universe().clone(),
        vertices: edges.to_vec(),
        tree,
    })
}

pub fn is_acyclic(h: &Hypergraph) -> bool {
    build_join_tree(h).is_some()
}

/// Checks that the vertices of `jt` are exactly the edges of `h` and that
/// every node occurs in a connected subtree.
pub fn verify_join_tree(h: &Hypergraph, jt: &JoinTree) -> Result<(), JoinTreeError> {
    let vertices = jt.vertices_in(h.universe())?;
    let mut used = vec![false; h.num_edges()];
    for &v in &vertices {
        match h.edge_index(v) {
            None => return Err(JoinTreeError::ExtraVertex(h.fmt_set(v))),
            Some(i) if used[i] => return Err(JoinTreeError::DuplicateVertex(h.fmt_set(v))),
            Some(i) => used[i] = true,
        }
    }
    if let Some(i) = used.iter().position(|u| !u) {
        return Err(JoinTreeError::MissingEdge(h.fmt_set(h.edges()[i])));
    }
    connectedness(&vertices, &jt.tree)
        .map_err(|x| JoinTreeError::Disconnected(h.universe().name(x).to_string()))
}

/// First node whose occurrences do not form a connected subtree.
pub(crate) fn connectedness(labels: &[NodeSet], tree: &RootedTree) -> Result<(), usize> {
    let all = labels.iter().fold(NodeSet::empty(), |a, &e| a | e);
    for x in all {
        let mut holders = 0;
        let mut linked = 0;
        for (v, l) in labels.iter().enumerate() {
            if l.contains(x) {
                holders += 1;
                if tree.parent(v).is_some_and(|p| labels[p].contains(x)) {
                    linked += 1;
                }
            }
        }
        if holders - linked != 1 {
            return Err(x);
        }
    }
    Ok(())
}

/// First violated structural condition of a join tree relative to `h1`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("owner is not reduced: {0} is a subset of another vertex")]
    NotReduced(String),
    #[error("vertex nodes {owner} differ from the covered hypergraph's nodes {h1}")]
    NodeMismatch { owner: String, h1: String },
    #[error("hyperedge {0} of the covered hypergraph lies in no vertex")]
    NotCovering(String),
    #[error("invalid join tree: {0}")]
    JoinTree(#[from] JoinTreeError),
    #[error("subtree at {child} below {parent} is not a component plus the shared nodes")]
    SubtreeNotComponent { parent: String, child: String },
    #[error("vertex {child} below {parent} misses its component {component}")]
    ChildMissesComponent {
        parent: String,
        child: String,
        component: String,
    },
    #[error("vertex {child} below {parent} is not inside the frontier of {component}")]
    ChildOutsideFrontier {
        parent: String,
        child: String,
        component: String,
    },
    #[error("component {component} under {vertex} matches {count} subtrees")]
    ComponentMatches {
        vertex: String,
        component: String,
        count: usize,
    },
    #[error("side of {to} across the edge from {from} induces a disconnected sub-hypergraph")]
    Disconnected { from: String, to: String },
}

fn preconditions(jt: &JoinTree, h1: &Hypergraph) -> Result<Vec<NodeSet>, StructureError> {
    let vertices = jt.vertices_in(h1.universe())?;
    connectedness(&vertices, &jt.tree)
        .map_err(|x| JoinTreeError::Disconnected(h1.universe().name(x).to_string()))?;
    for (i, &a) in vertices.iter().enumerate() {
        if vertices
            .iter()
            .enumerate()
            .any(|(j, &b)| i != j && a.is_subset(b))
        {
            return Err(StructureError::NotReduced(h1.fmt_set(a)));
        }
    }
    let owner = vertices.iter().fold(NodeSet::empty(), |a, &e| a | e);
    if owner != h1.nodes() {
        return Err(StructureError::NodeMismatch {
            owner: h1.fmt_set(owner),
            h1: h1.fmt_set(h1.nodes()),
        });
    }
    if let Some(&e) = h1
        .edges()
        .iter()
        .find(|&&e| !vertices.iter().any(|&v| e.is_subset(v)))
    {
        return Err(StructureError::NotCovering(h1.fmt_set(e)));
    }
    Ok(vertices)
}

/// Checks both clauses of the component-tree definition at every vertex.
pub fn check_component_tree(jt: &JoinTree, h1: &Hypergraph) -> Result<(), StructureError> {
    let vertices = preconditions(jt, h1)?;
    let Some(root) = jt.root() else { return Ok(()) };
    let mut top = vec![NodeSet::empty(); vertices.len()];
    top[root] = h1.nodes();
    for r in jt.tree.preorder() {
        let hr = vertices[r];
        let name = |s: NodeSet| h1.fmt_set(s);
        for &s in jt.tree.children(r) {
            let hs = vertices[s];
            let below = jt
                .tree
                .subtree(s)
                .into_iter()
                .fold(NodeSet::empty(), |a, u| a | vertices[u]);
            let c = below - hr;
            let is_component = !c.is_empty()
                && h1.reach(hr, NodeSet::singleton(c.first().unwrap())) == c
                && below == c | (hs & hr);
            if !is_component {
                return Err(StructureError::SubtreeNotComponent {
                    parent: name(hr),
                    child: name(hs),
                });
            }
            if !hs.intersects(c) {
                return Err(StructureError::ChildMissesComponent {
                    parent: name(hr),
                    child: name(hs),
                    component: name(c),
                });
            }
            if !hs.is_subset(h1.frontier(c)) {
                return Err(StructureError::ChildOutsideFrontier {
                    parent: name(hr),
                    child: name(hs),
                    component: name(c),
                });
            }
            top[s] = c;
        }
        for c in h1.component_sets(hr) {
            if !c.is_subset(top[r]) {
                continue;
            }
            let count = jt.tree.children(r).iter().filter(|&&s| top[s] == c).count();
            if count != 1 {
                return Err(StructureError::ComponentMatches {
                    vertex: name(hr),
                    component: name(c),
                    count,
                });
            }
        }
    }
    Ok(())
}

pub fn is_component_tree(jt: &JoinTree, h1: &Hypergraph) -> bool {
    check_component_tree(jt, h1).is_ok()
}

/// Checks that both sides of every tree edge induce connected
/// sub-hypergraphs of `h1`.
pub fn check_h1_connected(jt: &JoinTree, h1: &Hypergraph) -> Result<(), StructureError> {
    let vertices = preconditions(jt, h1)?;
    let n = vertices.len();
    for s in jt.tree.preorder() {
        let Some(p) = jt.tree.parent(s) else { continue };
        let inside = jt.tree.subtree(s);
        let mut mask = vec![false; n];
        for &u in &inside {
            mask[u] = true;
        }
        let side = |want: bool| {
            (0..n)
                .filter(|&u| mask[u] == want)
                .fold(NodeSet::empty(), |a, u| a | vertices[u])
        };
        for (from, to, nodes) in [(p, s, side(true)), (s, p, side(false))] {
            if !h1.induces_connected(nodes) {
                return Err(StructureError::Disconnected {
                    from: h1.fmt_set(vertices[from]),
                    to: h1.fmt_set(vertices[to]),
                });
            }
        }
    }
    Ok(())
}

pub fn is_h1_connected(jt: &JoinTree, h1: &Hypergraph) -> bool {
    check_h1_connected(jt, h1).is_ok()
}

pub fn check_normal_form(jt: &JoinTree, h1: &Hypergraph) -> Result<(), StructureError> {
    check_h1_connected(jt, h1)?;
    check_component_tree(jt, h1)
}

pub fn is_normal_form(jt: &JoinTree, h1: &Hypergraph) -> bool {
    check_normal_form(jt, h1).is_ok()
}
