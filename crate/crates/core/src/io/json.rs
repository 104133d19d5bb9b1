//! JSON documents for hypergraphs, decompositions, join trees and game trees.
//!
//! Nodes travel by name. Every document carries the universe as `nodes` so
//! the name-to-index mapping used to produce it can be reconstructed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decomposition::{HypertreeDecomposition, TreeDecomposition};
use crate::game::{GameTree, Position};
use crate::hypergraph::{Hypergraph, Universe};
use crate::jointree::{JoinTree, JoinTreeError};
use crate::nodeset::NodeSet;
use crate::tree::{RootedTree, TreeError};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("unknown hyperedge name {0:?}")]
    UnknownEdge(String),
    #[error("vertex {0} has no lambda label")]
    MissingLambda(usize),
    #[error("invalid tree: {0}")]
    Tree(#[from] TreeError),
    #[error("invalid join tree: {0}")]
    JoinTree(#[from] JoinTreeError),
    #[error("game tree: {0}")]
    GameTree(String),
}

fn names(u: &Universe, s: NodeSet) -> Vec<String> {
    u.names_of(s).into_iter().map(str::to_string).collect()
}

fn resolve(h: &Hypergraph, list: &[String]) -> Result<NodeSet, JsonError> {
    let u = h.universe();
    let mut s = NodeSet::empty();
    for n in list {
        let i = u
            .index(n)
            .ok_or_else(|| JsonError::UnknownNode(n.clone()))?;
        s.insert(i);
    }
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedEdge {
    pub name: String,
    pub nodes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphDoc {
    pub nodes: Vec<String>,
    pub edges: Vec<NamedEdge>,
}

impl HypergraphDoc {
    pub fn new(h: &Hypergraph) -> Self {
        let u = h.universe();
        HypergraphDoc {
            nodes: names(u, h.nodes()),
            edges: h
                .edges()
                .iter()
                .zip(h.edge_names())
                .map(|(&e, n)| NamedEdge {
                    name: n.clone(),
                    nodes: names(u, e),
                })
                .collect(),
        }
    }

    pub fn to_hypergraph(&self) -> Result<Hypergraph, JsonError> {
        let u = Universe::new(
            self.nodes
                .iter()
                .chain(self.edges.iter().flat_map(|e| &e.nodes)),
        )
        .map_err(|e| JsonError::UnknownNode(e.to_string()))?;
        let mut named = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let s = u
                .set(&e.nodes)
                .map_err(|x| JsonError::UnknownNode(x.to_string()))?;
            named.push((Some(e.name.clone()), s));
        }
        Hypergraph::from_named(u.clone(), u.all(), named)
            .map_err(|e| JsonError::UnknownNode(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionVertex {
    pub chi: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<String>>,
    pub parent: Option<usize>,
}

/// Shared layout of join trees, tree decompositions and hypertree
/// decompositions. `lambda` lists hyperedge names of the decomposed
/// hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    #[serde(default)]
    pub nodes: Vec<String>,
    pub vertices: Vec<DecompositionVertex>,
}

impl DecompositionDoc {
    fn plain(u: &Universe, tree: &RootedTree, chi: &[NodeSet]) -> Self {
        DecompositionDoc {
            nodes: u.names().to_vec(),
            vertices: chi
                .iter()
                .enumerate()
                .map(|(i, &c)| DecompositionVertex {
                    chi: names(u, c),
                    lambda: None,
                    parent: tree.parent(i),
                })
                .collect(),
        }
    }

    pub fn from_join_tree(jt: &JoinTree) -> Self {
        Self::plain(jt.universe(), jt.tree(), jt.vertices())
    }

    pub fn from_tree_decomposition(td: &TreeDecomposition) -> Self {
        Self::plain(&td.universe, &td.tree, &td.chi)
    }

    /// Lambda entries are named after the matching hyperedge of `h`.
    pub fn from_hypertree_decomposition(hd: &HypertreeDecomposition, h: &Hypergraph) -> Self {
        let mut doc = Self::plain(&hd.universe, &hd.tree, &hd.chi);
        for (v, l) in doc.vertices.iter_mut().zip(&hd.lambda) {
            v.lambda = Some(
                l.iter()
                    .map(|&e| {
                        let e = h.universe().translate(&hd.universe, e);
                        h.edge_name(e)
                            .map(str::to_string)
                            .unwrap_or_else(|| h.fmt_set(e))
                    })
                    .collect(),
            );
        }
        doc
    }

    pub fn parse(src: &str) -> Result<Self, JsonError> {
        Ok(serde_json::from_str(src)?)
    }

    fn labels(&self, h: &Hypergraph) -> Result<(RootedTree, Vec<NodeSet>), JsonError> {
        let tree = RootedTree::from_parents(self.vertices.iter().map(|v| v.parent).collect())?;
        let chi = self
            .vertices
            .iter()
            .map(|v| resolve(h, &v.chi))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((tree, chi))
    }

    pub fn to_join_tree(&self, h: &Hypergraph) -> Result<JoinTree, JsonError> {
        let (tree, chi) = self.labels(h)?;
        Ok(JoinTree::new(h.universe().clone(), chi, tree)?)
    }

    pub fn to_tree_decomposition(&self, h: &Hypergraph) -> Result<TreeDecomposition, JsonError> {
        let (tree, chi) = self.labels(h)?;
        Ok(TreeDecomposition {
            universe: h.universe().clone(),
            tree,
            chi,
        })
    }

    pub fn to_hypertree_decomposition(
        &self,
        h: &Hypergraph,
    ) -> Result<HypertreeDecomposition, JsonError> {
        let (tree, chi) = self.labels(h)?;
        let mut lambda = Vec::with_capacity(chi.len());
        for (i, v) in self.vertices.iter().enumerate() {
            let l = v.lambda.as_ref().ok_or(JsonError::MissingLambda(i))?;
            lambda.push(
                l.iter()
                    .map(|n| {
                        h.edge_by_name(n)
                            .ok_or_else(|| JsonError::UnknownEdge(n.clone()))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        Ok(HypertreeDecomposition {
            universe: h.universe().clone(),
            tree,
            chi,
            lambda,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameVertexDoc {
    pub id: usize,
    pub cops: Vec<String>,
    pub squad: Option<String>,
    pub component: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTreeDoc {
    #[serde(default)]
    pub nodes: Vec<String>,
    pub vertices: Vec<GameVertexDoc>,
    /// `[parent, child]` pairs.
    pub edges: Vec<[usize; 2]>,
}

impl GameTreeDoc {
    /// Squads are named after the matching hyperedge of `h2`.
    pub fn new(tree: &GameTree, h2: &Hypergraph) -> Self {
        let u = tree.universe();
        let mut edges = Vec::new();
        let vertices = tree
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if let Some(p) = v.parent {
                    edges.push([p, i]);
                }
                GameVertexDoc {
                    id: i,
                    cops: names(u, v.cops),
                    squad: v.squad.map(|s| {
                        let s = h2.universe().translate(u, s);
                        h2.edge_name(s)
                            .map(str::to_string)
                            .unwrap_or_else(|| h2.fmt_set(s))
                    }),
                    component: names(u, v.component),
                }
            })
            .collect();
        GameTreeDoc {
            nodes: u.names().to_vec(),
            vertices,
            edges,
        }
    }

    pub fn parse(src: &str) -> Result<Self, JsonError> {
        Ok(serde_json::from_str(src)?)
    }

    /// Rebuilds the tree over the universe shared by `h1` and `h2`. Vertex
    /// ids are renumbered in preorder from the unique vertex without a
    /// parent.
    pub fn to_tree(&self, h1: &Hypergraph, h2: &Hypergraph) -> Result<GameTree, JsonError> {
        let bad = |m: String| JsonError::GameTree(m);
        let pos: std::collections::HashMap<usize, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.id, i))
            .collect();
        if pos.len() != self.vertices.len() {
            return Err(bad("duplicate vertex id".into()));
        }
        let n = self.vertices.len();
        let mut children = vec![Vec::new(); n];
        let mut has_parent = vec![false; n];
        for &[p, c] in &self.edges {
            let (Some(&p), Some(&c)) = (pos.get(&p), pos.get(&c)) else {
                return Err(bad(format!("edge {p}->{c} names an unknown vertex")));
            };
            if has_parent[c] {
                return Err(bad(format!(
                    "vertex {} has two parents",
                    self.vertices[c].id
                )));
            }
            has_parent[c] = true;
            children[p].push(c);
        }
        let roots: Vec<usize> = (0..n).filter(|&i| !has_parent[i]).collect();
        let [root] = roots[..] else {
            return Err(bad(format!("{} vertices without a parent", roots.len())));
        };
        let rv = &self.vertices[root];
        let mut tree = GameTree::new(h1.universe().clone(), resolve(h1, &rv.component)?);
        if !resolve(h1, &rv.cops)?.is_empty() || rv.squad.is_some() {
            return Err(bad("root must have no cops and no squad".into()));
        }
        let mut stack = vec![(root, 0usize)];
        let mut seen = 1;
        while let Some((src, dst)) = stack.pop() {
            for &c in children[src].iter().rev() {
                let v = &self.vertices[c];
                let squad = match &v.squad {
                    Some(name) => h2
                        .edge_by_name(name)
                        .ok_or_else(|| JsonError::UnknownEdge(name.clone()))?,
                    None => return Err(bad(format!("vertex {} has no squad", v.id))),
                };
                let p = Position {
                    cops: resolve(h1, &v.cops)?,
                    squad,
                };
                let id = tree.add_child(dst, p, resolve(h1, &v.component)?);
                stack.push((c, id));
                seen += 1;
            }
        }
        if seen != n {
            return Err(bad("edges do not form a tree".into()));
        }
        Ok(tree)
    }
}

pub fn to_string<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::jointree::build_join_tree;

    #[test]
    fn hypergraph_round_trip() {
        let h = fixtures::h1p();
        let doc = HypergraphDoc::new(&h);
        let back = doc.to_hypergraph().unwrap();
        assert_eq!(back, h);
        assert_eq!(back.edge_names(), h.edge_names());
    }

    #[test]
    fn join_tree_round_trip() {
        let h = Hypergraph::from_edges(
            ["EFGHIJK", "ADEF", "ABCD"].map(|e| e.chars().map(String::from)),
        )
        .unwrap();
        let jt = build_join_tree(&h).unwrap();
        let doc = DecompositionDoc::from_join_tree(&jt);
        let text = to_string(&doc);
        assert!(!text.contains("lambda"));
        let back = DecompositionDoc::parse(&text)
            .unwrap()
            .to_join_tree(&h)
            .unwrap();
        assert_eq!(back, jt);
    }

    #[test]
    fn hypertree_round_trip_uses_edge_names() {
        let tri = fixtures::tri();
        let jt = build_join_tree(&tri.power_k(2).unwrap().reduce()).unwrap();
        let mut hd = HypertreeDecomposition::from_join_tree(&jt);
        hd.lambda = vec![tri.edges()[..2].to_vec()];
        let doc = DecompositionDoc::from_hypertree_decomposition(&hd, &tri);
        assert_eq!(doc.vertices[0].lambda.as_deref().unwrap().len(), 2);
        let back = doc.to_hypertree_decomposition(&tri).unwrap();
        assert_eq!(back, hd);
        let mut broken = doc.clone();
        broken.vertices[0].lambda = Some(vec!["nope".into()]);
        assert!(matches!(
            broken.to_hypertree_decomposition(&tri),
            Err(JsonError::UnknownEdge(_))
        ));
    }

    #[test]
    fn game_tree_round_trip() {
        let (h1, h2) = fixtures::h1p_h2p();
        let t = crate::game::solve(&h1, &h2).unwrap();
        let doc = GameTreeDoc::new(&t, &h2);
        let back = GameTreeDoc::parse(&to_string(&doc))
            .unwrap()
            .to_tree(&h1, &h2)
            .unwrap();
        assert_eq!(back, t);
        let mut broken = doc.clone();
        broken.edges.push([1, 2]);
        assert!(broken.to_tree(&h1, &h2).is_err());
    }
}
