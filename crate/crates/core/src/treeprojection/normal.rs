//! Component trees of tree projections and the report of necessary
//! minimality conditions.

use std::collections::BTreeMap;

use log::debug;
use serde::Serialize;

use super::{check_tree_projection, TPInstance, TpError};
use crate::hypergraph::Hypergraph;
use crate::io::json::DecompositionDoc;
use crate::jointree::{
    build_join_tree, check_component_tree, check_h1_connected, check_normal_form, is_acyclic,
    JoinTree,
};
use crate::nodeset::NodeSet;
use crate::tree::RootedTree;

struct Built {
    edge: NodeSet,
    children: Vec<Built>,
}

/// Children of `hr` whose subtrees hold exactly `region`, one per
/// `[hr]`-component of `h1` inside `top`.
fn place(h1: &Hypergraph, hr: NodeSet, top: NodeSet, region: &[NodeSet]) -> Option<Vec<Built>> {
    let comps: Vec<NodeSet> = h1
        .component_sets(hr)
        .into_iter()
        .filter(|c| c.is_subset(top))
        .collect();
    let mut groups = vec![Vec::new(); comps.len()];
    for &e in region {
        let i = comps.iter().position(|&c| (e - hr).is_subset(c))?;
        groups[i].push(e);
    }
    let mut out = Vec::with_capacity(comps.len());
    for (&c, group) in comps.iter().zip(&groups) {
        if group.is_empty() {
            return None;
        }
        let union = group.iter().fold(NodeSet::empty(), |a, &e| a | e);
        if union - hr != c {
            return None;
        }
        let shared = union & hr;
        let fr = h1.frontier(c);
        let child = group
            .iter()
            .filter(|&&hs| hs.is_subset(fr) && shared.is_subset(hs))
            .find_map(|&hs| {
                let rest: Vec<NodeSet> = group.iter().copied().filter(|&e| e != hs).collect();
                place(h1, hs, c, &rest).map(|children| Built { edge: hs, children })
            })?;
        out.push(child);
    }
    Some(out)
}

fn flatten(
    b: &Built,
    parent: Option<usize>,
    vertices: &mut Vec<NodeSet>,
    parents: &mut Vec<Option<usize>>,
) {
    let id = vertices.len();
    vertices.push(b.edge);
    parents.push(parent);
    for c in &b.children {
        flatten(c, Some(id), vertices, parents);
    }
}

/// A join tree of `ha` rooted at `root` that is an `h1ref`-component tree,
/// found by backtracking over the choice of child for each component.
pub fn construct_component_tree(
    ha: &Hypergraph,
    h1ref: &Hypergraph,
    root: NodeSet,
) -> Result<Option<JoinTree>, TpError> {
    let (ha, h1) = Hypergraph::align(ha, h1ref);
    if !ha.is_reduced() {
        return Err(TpError::NotReduced);
    }
    if !is_acyclic(&ha) {
        return Err(TpError::Cyclic);
    }
    if !ha.contains_edge(root) {
        return Err(TpError::NotAnEdge(ha.fmt_set(root)));
    }
    if ha.covered() != h1.nodes() {
        return Ok(None);
    }
    let region: Vec<NodeSet> = ha.edges().iter().copied().filter(|&e| e != root).collect();
    let Some(children) = place(&h1, root, h1.nodes(), &region) else {
        return Ok(None);
    };
    let mut vertices = Vec::new();
    let mut parents = Vec::new();
    flatten(
        &Built {
            edge: root,
            children,
        },
        None,
        &mut vertices,
        &mut parents,
    );
    let tree = RootedTree::from_parents(parents).expect("flattened trees are trees");
    let jt = JoinTree::new(h1.universe().clone(), vertices, tree).expect("one label per vertex");
    match check_component_tree(&jt, &h1) {
        Ok(()) => Ok(Some(jt)),
        Err(e) => {
            debug!("constructed tree rejected: {e}");
            Ok(None)
        }
    }
}

/// Outcome of the normal-form search from one root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    JoinTree(DecompositionDoc),
    Failure(String),
}

/// Necessary conditions for `ha` to be a minimal tree projection. A false
/// flag proves `ha` is not minimal; all flags true does not prove that it is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TPReport {
    pub valid: bool,
    pub reduced: bool,
    pub nodes_preserved: bool,
    pub components_preserved: bool,
    pub h1_connected_all_roots: bool,
    pub normal_form_witnesses: BTreeMap<String, Witness>,
    pub note: String,
}

impl TPReport {
    pub fn all_hold(&self) -> bool {
        self.valid
            && self.reduced
            && self.nodes_preserved
            && self.components_preserved
            && self.h1_connected_all_roots
            && self
                .normal_form_witnesses
                .values()
                .all(|w| matches!(w, Witness::JoinTree(_)))
    }
}

const NOTE: &str =
    "flags are necessary conditions for minimality; a false flag proves ha is not minimal, \
                    all flags true does not prove minimality";

pub fn check_minimality_conditions(ha: &Hypergraph, inst: &TPInstance) -> TPReport {
    let mut report = TPReport {
        valid: false,
        reduced: false,
        nodes_preserved: false,
        components_preserved: false,
        h1_connected_all_roots: false,
        normal_form_witnesses: BTreeMap::new(),
        note: NOTE.to_string(),
    };
    let ha = match inst.adopt(ha) {
        Ok(ha) => ha,
        Err(e) => {
            report.note = format!("{e}; {NOTE}");
            return report;
        }
    };
    let h1 = inst.h1();
    report.valid = check_tree_projection(&ha, inst).is_ok();
    report.reduced = ha.is_reduced();
    report.nodes_preserved = ha.nodes() == h1.nodes();
    report.components_preserved = ha.edges().iter().all(|&h| {
        let mut a = ha.component_sets(h);
        let mut b = h1.component_sets(h);
        a.sort();
        b.sort();
        a == b
    });
    report.h1_connected_all_roots = match build_join_tree(&ha) {
        Some(jt) => (0..jt.len()).all(|v| check_h1_connected(&jt.reroot(v), h1).is_ok()),
        None => false,
    };
    for &root in ha.edges() {
        let w = match construct_component_tree(&ha, h1, root) {
            Ok(Some(jt)) => match check_normal_form(&jt, h1) {
                Ok(()) => Witness::JoinTree(DecompositionDoc::from_join_tree(&jt)),
                Err(e) => Witness::Failure(e.to_string()),
            },
            Ok(None) => Witness::Failure("no component tree of h1 rooted here".into()),
            Err(e) => Witness::Failure(e.to_string()),
        };
        report.normal_form_witnesses.insert(ha.fmt_set(root), w);
    }
    report
}
