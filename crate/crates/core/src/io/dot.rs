//! Graphviz output. Emit only.

use std::fmt::Write;

use crate::decomposition::{HypertreeDecomposition, TreeDecomposition};
use crate::game::GameTree;
use crate::hypergraph::{Hypergraph, Universe};
use crate::jointree::JoinTree;
use crate::nodeset::NodeSet;
use crate::tree::RootedTree;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn tree_dot(name: &str, tree: &RootedTree, labels: &[String]) -> String {
    let mut out = format!("digraph {name} {{\n  node [shape=box];\n");
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  v{i} [label={}];", quote(l)).unwrap();
    }
    for v in tree.preorder() {
        for &c in tree.children(v) {
            writeln!(out, "  v{v} -> v{c};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

fn set_labels(u: &Universe, sets: &[NodeSet]) -> Vec<String> {
    sets.iter().map(|&s| u.fmt_set(s)).collect()
}

pub fn join_tree(jt: &JoinTree) -> String {
    tree_dot(
        "jointree",
        jt.tree(),
        &set_labels(jt.universe(), jt.vertices()),
    )
}

pub fn tree_decomposition(td: &TreeDecomposition) -> String {
    tree_dot("td", &td.tree, &set_labels(&td.universe, &td.chi))
}

pub fn hypertree_decomposition(hd: &HypertreeDecomposition) -> String {
    let labels: Vec<String> = hd
        .chi
        .iter()
        .zip(&hd.lambda)
        .map(|(&c, l)| {
            let l: Vec<String> = l.iter().map(|&e| hd.universe.fmt_set(e)).collect();
            format!("χ={}\\nλ={}", hd.universe.fmt_set(c), l.join(" "))
        })
        .collect();
    tree_dot("hd", &hd.tree, &labels)
}

pub fn game_tree(tree: &GameTree) -> String {
    let u = tree.universe();
    let mut out = String::from("digraph game {\n  node [shape=box];\n");
    for (i, v) in tree.vertices().iter().enumerate() {
        let label = format!("({}, {})", u.fmt_set(v.cops), u.fmt_set(v.component));
        let style = if v.is_capture() { ", style=dashed" } else { "" };
        writeln!(out, "  v{i} [label={}{style}];", quote(&label)).unwrap();
    }
    for (i, v) in tree.vertices().iter().enumerate() {
        if let Some(p) = v.parent {
            writeln!(out, "  v{p} -> v{i};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Incidence graph: nodes as circles, hyperedges as boxes.
pub fn hypergraph(h: &Hypergraph) -> String {
    let u = h.universe();
    let mut out = String::from("graph hypergraph {\n");
    for x in h.nodes() {
        writeln!(out, "  n{x} [label={}, shape=circle];", quote(u.name(x))).unwrap();
    }
    for (i, (&e, name)) in h.edges().iter().zip(h.edge_names()).enumerate() {
        writeln!(out, "  e{i} [label={}, shape=box];", quote(name)).unwrap();
        for x in e {
            writeln!(out, "  e{i} -- n{x};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::jointree::build_join_tree;

    #[test]
    fn emits_one_line_per_vertex_and_edge() {
        let p3 = fixtures::p3();
        let jt = build_join_tree(&p3).unwrap();
        let dot = join_tree(&jt);
        assert!(dot.starts_with("digraph jointree {"));
        assert_eq!(dot.matches("->").count(), 1);
        assert_eq!(dot.matches("label=").count(), 2);
        let g = hypergraph(&p3);
        assert_eq!(g.matches(" -- ").count(), 4);
    }

    #[test]
    fn game_tree_marks_captures() {
        let (h1, h2) = fixtures::h1p_h2p();
        let t = crate::game::solve(&h1, &h2).unwrap();
        let dot = game_tree(&t);
        let captures = t.vertices().iter().filter(|v| v.is_capture()).count();
        assert_eq!(dot.matches("dashed").count(), captures);
    }
}
