//! Tree decompositions and (generalized) hypertree decompositions.

use std::sync::Arc;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, Universe};
use crate::jointree::{connectedness, JoinTree};
use crate::nodeset::NodeSet;
use crate::tree::RootedTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("condition {condition} violated at {witness}")]
    Violated { condition: u8, witness: String },
    #[error("{labels} labels for a tree with {vertices} vertices")]
    LengthMismatch { labels: usize, vertices: usize },
    #[error("vertex {vertex}: {set} is not a hyperedge")]
    NotAnEdge { vertex: usize, set: String },
    #[error("unknown node {0:?}")]
    UnknownNode(String),
}

fn violated(condition: u8, witness: String) -> DecompositionError {
    DecompositionError::Violated { condition, witness }
}

fn translate(
    from: &Arc<Universe>,
    to: &Arc<Universe>,
    s: NodeSet,
) -> Result<NodeSet, DecompositionError> {
    if Arc::ptr_eq(from, to) || from.names() == to.names() {
        return Ok(s);
    }
    to.set(from.names_of(s))
        .map_err(|e| DecompositionError::UnknownNode(e.to_string()))
}

/// `(T, χ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub universe: Arc<Universe>,
    pub tree: RootedTree,
    pub chi: Vec<NodeSet>,
}

/// `(T, χ, λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypertreeDecomposition {
    pub universe: Arc<Universe>,
    pub tree: RootedTree,
    pub chi: Vec<NodeSet>,
    pub lambda: Vec<Vec<NodeSet>>,
}

impl TreeDecomposition {
    pub fn new(
        universe: Arc<Universe>,
        tree: RootedTree,
        chi: Vec<NodeSet>,
    ) -> Result<Self, DecompositionError> {
        if chi.len() != tree.len() {
            return Err(DecompositionError::LengthMismatch {
                labels: chi.len(),
                vertices: tree.len(),
            });
        }
        Ok(TreeDecomposition {
            universe,
            tree,
            chi,
        })
    }

    /// `max |χ(p)| - 1`, or 0 for an empty tree.
    pub fn width(&self) -> usize {
        self.chi
            .iter()
            .map(|c| c.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    pub fn from_join_tree(jt: &JoinTree) -> Self {
        TreeDecomposition {
            universe: jt.universe().clone(),
            tree: jt.tree().clone(),
            chi: jt.vertices().to_vec(),
        }
    }
}

impl HypertreeDecomposition {
    pub fn new(
        universe: Arc<Universe>,
        tree: RootedTree,
        chi: Vec<NodeSet>,
        lambda: Vec<Vec<NodeSet>>,
    ) -> Result<Self, DecompositionError> {
        if chi.len() != tree.len() || lambda.len() != tree.len() {
            return Err(DecompositionError::LengthMismatch {
                labels: chi.len().min(lambda.len()),
                vertices: tree.len(),
            });
        }
        Ok(HypertreeDecomposition {
            universe,
            tree,
            chi,
            lambda,
        })
    }

    /// `max |λ(p)|`.
    pub fn width(&self) -> usize {
        self.lambda.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Width-1 decomposition with `χ(p) = λ(p) = {vertex edge}`.
    pub fn from_join_tree(jt: &JoinTree) -> Self {
        HypertreeDecomposition {
            universe: jt.universe().clone(),
            tree: jt.tree().clone(),
            chi: jt.vertices().to_vec(),
            lambda: jt.vertices().iter().map(|&e| vec![e]).collect(),
        }
    }

    /// Union of the edges in `λ(p)`.
    pub fn lambda_cover(&self, p: usize) -> NodeSet {
        self.lambda[p].iter().fold(NodeSet::empty(), |a, &e| a | e)
    }
}

/// Checks the three tree-decomposition conditions against the primal graph
/// of `g` and returns the width.
pub fn verify_tree_decomposition(
    g: &Hypergraph,
    td: &TreeDecomposition,
) -> Result<usize, DecompositionError> {
    let u = g.universe();
    let chi = td
        .chi
        .iter()
        .map(|&c| translate(&td.universe, u, c))
        .collect::<Result<Vec<_>, _>>()?;
    let covered = chi.iter().fold(NodeSet::empty(), |a, &c| a | c);
    if let Some(y) = (g.nodes() - covered).first() {
        return Err(violated(1, format!("node {}", u.name(y))));
    }
    for &e in g.gaifman().edges() {
        if !chi.iter().any(|&c| e.is_subset(c)) {
            return Err(violated(2, format!("edge {}", u.fmt_set(e))));
        }
    }
    connectedness(&chi, &td.tree).map_err(|y| violated(3, format!("node {}", u.name(y))))?;
    Ok(td.width())
}

/// Checks conditions (1)-(3) of a generalized hypertree decomposition and,
/// unless `generalized`, the descendant condition (4). Returns the width.
pub fn verify_hypertree_decomposition(
    h: &Hypergraph,
    hd: &HypertreeDecomposition,
    generalized: bool,
) -> Result<usize, DecompositionError> {
    let u = h.universe();
    let chi = hd
        .chi
        .iter()
        .map(|&c| translate(&hd.universe, u, c))
        .collect::<Result<Vec<_>, _>>()?;
    let mut lambda = Vec::with_capacity(hd.lambda.len());
    for (p, l) in hd.lambda.iter().enumerate() {
        let mut row = Vec::with_capacity(l.len());
        for &e in l {
            let e = translate(&hd.universe, u, e)?;
            if !h.contains_edge(e) {
                return Err(DecompositionError::NotAnEdge {
                    vertex: p,
                    set: u.fmt_set(e),
                });
            }
            row.push(e);
        }
        lambda.push(row);
    }
    let vertex = |p: usize| format!("vertex {p} {}", u.fmt_set(chi[p]));
    for &e in h.edges() {
        if !chi.iter().any(|&c| e.is_subset(c)) {
            return Err(violated(1, format!("edge {}", u.fmt_set(e))));
        }
    }
    connectedness(&chi, &hd.tree).map_err(|y| violated(2, format!("node {}", u.name(y))))?;
    let lnodes: Vec<NodeSet> = lambda
        .iter()
        .map(|l| l.iter().fold(NodeSet::empty(), |a, &e| a | e))
        .collect();
    for p in 0..chi.len() {
        if !chi[p].is_subset(lnodes[p]) {
            return Err(violated(3, vertex(p)));
        }
    }
    if !generalized {
        for p in hd.tree.preorder() {
            let below = hd
                .tree
                .subtree(p)
                .into_iter()
                .fold(NodeSet::empty(), |a, q| a | chi[q]);
            if !(lnodes[p] & below).is_subset(chi[p]) {
                return Err(violated(4, vertex(p)));
            }
        }
    }
    Ok(hd.width())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Sh07Error {
    #[error("root has {0} edges in its lambda label")]
    RootLambda(usize),
    #[error("edge {edge} of child vertex {child} misses the parent vertex {parent}")]
    Detached {
        parent: usize,
        child: usize,
        edge: String,
    },
}

/// `|λ(root)| = 1`, and `h ∩ χ(s) ∩ χ(p) ≠ ∅` for every child `s` of `p`
/// and every `h ∈ λ(s)`.
pub fn check_sh07_connected(hd: &HypertreeDecomposition) -> Result<(), Sh07Error> {
    let Some(root) = hd.tree.root() else {
        return Ok(());
    };
    if hd.lambda[root].len() != 1 {
        return Err(Sh07Error::RootLambda(hd.lambda[root].len()));
    }
    for s in hd.tree.preorder() {
        let Some(p) = hd.tree.parent(s) else { continue };
        for &e in &hd.lambda[s] {
            if (e & hd.chi[s] & hd.chi[p]).is_empty() {
                return Err(Sh07Error::Detached {
                    parent: p,
                    child: s,
                    edge: hd.universe.fmt_set(e),
                });
            }
        }
    }
    Ok(())
}

pub fn is_sh07_connected(hd: &HypertreeDecomposition) -> bool {
    check_sh07_connected(hd).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::jointree::build_join_tree;

    fn set(h: &Hypergraph, s: &str) -> NodeSet {
        h.set(s.chars().map(|c| c.to_string())).unwrap()
    }

    #[test]
    fn tree_decompositions() {
        let tri = fixtures::tri();
        let u = tri.universe().clone();
        let one =
            TreeDecomposition::new(u.clone(), RootedTree::single(), vec![tri.nodes()]).unwrap();
        assert_eq!(verify_tree_decomposition(&tri, &one), Ok(2));
        let chain = TreeDecomposition::new(
            u.clone(),
            RootedTree::path(2),
            vec![set(&tri, "XY"), set(&tri, "YZ")],
        )
        .unwrap();
        assert_eq!(
            verify_tree_decomposition(&tri, &chain),
            Err(violated(2, "edge {X,Z}".into()))
        );
        let p3 = fixtures::p3();
        let td = TreeDecomposition::new(
            p3.universe().clone(),
            RootedTree::path(2),
            vec![set(&p3, "XY"), set(&p3, "YZ")],
        )
        .unwrap();
        assert_eq!(verify_tree_decomposition(&p3, &td), Ok(1));
        let broken = TreeDecomposition::new(
            p3.universe().clone(),
            RootedTree::path(3),
            vec![set(&p3, "XY"), set(&p3, "Z"), set(&p3, "YZ")],
        )
        .unwrap();
        assert_eq!(
            verify_tree_decomposition(&p3, &broken),
            Err(violated(3, "node Y".into()))
        );
    }

    #[test]
    fn hypertree_decompositions() {
        let tri = fixtures::tri();
        let hd = HypertreeDecomposition::new(
            tri.universe().clone(),
            RootedTree::single(),
            vec![tri.nodes()],
            vec![vec![set(&tri, "XY"), set(&tri, "YZ")]],
        )
        .unwrap();
        assert_eq!(verify_hypertree_decomposition(&tri, &hd, true), Ok(2));
        assert_eq!(verify_hypertree_decomposition(&tri, &hd, false), Ok(2));

        let p3 = fixtures::p3();
        let jt = build_join_tree(&p3).unwrap();
        let hd = HypertreeDecomposition::from_join_tree(&jt);
        assert_eq!(verify_hypertree_decomposition(&p3, &hd, false), Ok(1));
    }

    #[test]
    fn descendant_condition() {
        let h = Hypergraph::from_edges([vec!["A", "B", "C"], vec!["B", "C"]]).unwrap();
        let hd = HypertreeDecomposition::new(
            h.universe().clone(),
            RootedTree::path(2),
            vec![set(&h, "AB"), set(&h, "BC")],
            vec![vec![set(&h, "ABC")], vec![set(&h, "BC")]],
        )
        .unwrap();
        assert!(matches!(
            verify_hypertree_decomposition(&h, &hd, false),
            Err(DecompositionError::Violated { condition: 1, .. })
        ));
        let h = Hypergraph::from_edges([vec!["A", "B"], vec!["B", "C"], vec!["A", "C"]]).unwrap();
        let hd = HypertreeDecomposition::new(
            h.universe().clone(),
            RootedTree::path(2),
            vec![set(&h, "AB"), set(&h, "ABC")],
            vec![
                vec![set(&h, "AC"), set(&h, "AB")],
                vec![set(&h, "AB"), set(&h, "BC")],
            ],
        )
        .unwrap();
        assert_eq!(verify_hypertree_decomposition(&h, &hd, true), Ok(2));
        assert_eq!(
            verify_hypertree_decomposition(&h, &hd, false),
            Err(violated(4, "vertex 0 {A,B}".into()))
        );
    }

    #[test]
    fn sh07() {
        let p3 = fixtures::p3();
        let hd = HypertreeDecomposition::from_join_tree(&build_join_tree(&p3).unwrap());
        assert!(is_sh07_connected(&hd));
        let tri = fixtures::tri();
        let two = HypertreeDecomposition::new(
            tri.universe().clone(),
            RootedTree::single(),
            vec![tri.nodes()],
            vec![vec![set(&tri, "XY"), set(&tri, "YZ")]],
        )
        .unwrap();
        assert_eq!(check_sh07_connected(&two), Err(Sh07Error::RootLambda(2)));
    }
}
