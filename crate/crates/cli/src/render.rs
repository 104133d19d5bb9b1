//! Plain-text renderings of trees and decompositions.

use std::fmt::Write;

use treeproj::decomposition::{HypertreeDecomposition, TreeDecomposition};
use treeproj::game::GameTree;
use treeproj::jointree::JoinTree;
use treeproj::tree::RootedTree;

fn indented(tree: &RootedTree, label: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for v in tree.preorder() {
        writeln!(out, "{}{}", "  ".repeat(tree.depth(v)), label(v)).unwrap();
    }
    out
}

pub fn join_tree(jt: &JoinTree) -> String {
    indented(jt.tree(), |v| jt.universe().fmt_set(jt.vertex(v)))
}

pub fn tree_decomposition(td: &TreeDecomposition) -> String {
    format!(
        "width {}\n{}",
        td.width(),
        indented(&td.tree, |v| td.universe.fmt_set(td.chi[v]))
    )
}

pub fn hypertree_decomposition(hd: &HypertreeDecomposition) -> String {
    format!(
        "width {}\n{}",
        hd.width(),
        indented(&hd.tree, |v| {
            let lambda: Vec<String> = hd.lambda[v]
                .iter()
                .map(|&e| hd.universe.fmt_set(e))
                .collect();
            format!(
                "chi {} lambda [{}]",
                hd.universe.fmt_set(hd.chi[v]),
                lambda.join(" ")
            )
        })
    )
}

pub fn game_tree(tree: &GameTree) -> String {
    let u = tree.universe();
    let mut out = String::new();
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        let x = tree.vertex(v);
        let depth = tree.depth(v);
        let line = match x.squad {
            None => format!("start, robber on {}", u.fmt_set(x.component)),
            Some(squad) if x.is_capture() => {
                format!(
                    "cops {} from {}, captured",
                    u.fmt_set(x.cops),
                    u.fmt_set(squad)
                )
            }
            Some(squad) => format!(
                "cops {} from {}, robber on {}",
                u.fmt_set(x.cops),
                u.fmt_set(squad),
                u.fmt_set(x.component)
            ),
        };
        writeln!(out, "{}{line}", "  ".repeat(depth)).unwrap();
        stack.extend(x.children.iter().rev());
    }
    out
}
