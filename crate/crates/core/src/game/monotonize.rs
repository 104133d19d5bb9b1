//! Rewriting a winning strategy into a monotone one.
//!
//! Each step picks the shallowest vertex `r = (M_r, C_r)` whose move `M_s`
//! opens an escape door, withdraws the door from the parent's move
//! (`M_r' = M_r ∖ ED(r, M_s)`), plays `M_s` from the enlarged component that
//! now holds `C_r ∪ ED`, and keeps every other branch of the parent as it was.
//! Each step strictly lowers `Σ|M|`.

use log::debug;
use thiserror::Error;

use super::strategy::first_non_monotone;
use super::{
    escape_door, robber_components, strategy_size, verify_strategy, GameTree, Position,
    StrategyError,
};
use crate::hypergraph::Hypergraph;
use crate::nodeset::NodeSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonotonizeError {
    #[error("input strategy is not winning: {0}")]
    NotWinning(StrategyError),
    #[error("rewritten component {component} below vertex {vertex} has no counterpart in the input tree")]
    Unmatched { vertex: usize, component: String },
    #[error("rewrite at vertex {0} did not shrink the strategy")]
    NoProgress(usize),
    #[error("rewritten strategy failed verification: {0}")]
    Broken(StrategyError),
}

/// Repeats [`monotonize_step`] until the strategy is monotone.
pub fn monotonize(
    tree: &GameTree,
    h1: &Hypergraph,
    h2: &Hypergraph,
) -> Result<GameTree, MonotonizeError> {
    verify_strategy(tree, h1, h2).map_err(MonotonizeError::NotWinning)?;
    let mut cur = tree.clone();
    while let Some(r) = first_non_monotone(&cur, h1) {
        let next = monotonize_step(&cur, h1, r)?;
        if strategy_size(&next) >= strategy_size(&cur) {
            return Err(MonotonizeError::NoProgress(r));
        }
        cur = next;
    }
    verify_strategy(&cur, h1, h2).map_err(MonotonizeError::Broken)?;
    Ok(cur)
}

/// One rewrite at vertex `r`, whose own incoming move must be monotone.
pub fn monotonize_step(
    tree: &GameTree,
    h1: &Hypergraph,
    r: usize,
) -> Result<GameTree, MonotonizeError> {
    let vr = tree.vertex(r);
    let p = vr
        .parent
        .expect("the initial configuration never opens an escape door");
    let ms = tree.move_at(r).expect("non-capture vertices have a move");
    let ed = escape_door(h1, vr.config(), ms.cops);
    let mr = Position {
        cops: vr.cops - ed,
        squad: vr.squad.unwrap_or(vr.cops),
    };
    let mut out = GameTree::new(tree.universe().clone(), tree.root().component);
    copy(tree, &mut out, 0, 0, &mut |out, old_v, new_v| {
        if old_v != p {
            return Ok(false);
        }
        let cfg_p = tree.vertex(p).config();
        for c in robber_components(h1, cfg_p, mr.cops) {
            let c = c.members;
            if vr.component.is_subset(c) {
                let id = if mr.cops == cfg_p.cops && c == cfg_p.component {
                    new_v
                } else {
                    out.add_child(new_v, mr, c)
                };
                let cfg = out.vertex(id).config();
                let kids = robber_components(h1, cfg, ms.cops);
                if kids.is_empty() {
                    out.add_child(id, ms, NodeSet::empty());
                }
                for k in kids {
                    let old =
                        matching(tree, r, k.members).ok_or_else(|| MonotonizeError::Unmatched {
                            vertex: r,
                            component: h1.fmt_set(k.members),
                        })?;
                    out.graft(id, tree, old, ms);
                }
            } else {
                let old = matching(tree, p, c).ok_or_else(|| MonotonizeError::Unmatched {
                    vertex: p,
                    component: h1.fmt_set(c),
                })?;
                out.graft(new_v, tree, old, mr);
            }
        }
        Ok(true)
    })?;
    Ok(out)
}

/// A child of `v` holding `c`, or failing that any vertex holding `c`: play
/// from a component does not depend on how the Robber got there.
fn matching(tree: &GameTree, v: usize, c: NodeSet) -> Option<usize> {
    tree.child_with_component(v, c).or_else(|| {
        let found = tree
            .vertices()
            .iter()
            .position(|x| x.component == c && x.parent.is_some());
        if found.is_some() {
            debug!("grafting {c:?} from outside the rewritten subtree");
        }
        found
    })
}

type Hook<'a> = dyn FnMut(&mut GameTree, usize, usize) -> Result<bool, MonotonizeError> + 'a;

/// Copies `src` below `new_v`, letting `hook` replace the children of any vertex.
fn copy(
    src: &GameTree,
    out: &mut GameTree,
    old_v: usize,
    new_v: usize,
    hook: &mut Hook<'_>,
) -> Result<(), MonotonizeError> {
    if hook(out, old_v, new_v)? {
        return Ok(());
    }
    for &c in &src.vertex(old_v).children {
        let child = src.vertex(c);
        let pos = Position {
            cops: child.cops,
            squad: child.squad.unwrap_or(child.cops),
        };
        let id = out.add_child(new_v, pos, child.component);
        copy(src, out, c, id, hook)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::{brute_solve_with, is_monotone, BruteOptions};

    fn set(h: &Hypergraph, s: &str) -> NodeSet {
        h.set(s.chars().map(|c| c.to_string())).unwrap()
    }

    #[test]
    fn monotone_input_is_unchanged() {
        let (h1, h2) = fixtures::h1p_h2p();
        let t = crate::game::solve(&h1, &h2).unwrap();
        assert_eq!(monotonize(&t, &h1, &h2).unwrap(), t);
    }

    fn pos(h: &Hypergraph, cops: &str, squad: &str) -> Position {
        Position {
            cops: set(h, cops),
            squad: set(h, squad),
        }
    }

    #[test]
    fn path_detour_is_removed() {
        let h1 = Hypergraph::from_edges([["A", "B"], ["B", "C"], ["C", "D"]]).unwrap();
        let h2 = h1.clone();
        let mut t = GameTree::new(h1.universe().clone(), h1.nodes());
        let a = t.add_child(0, pos(&h1, "BC", "BC"), set(&h1, "A"));
        let d = t.add_child(0, pos(&h1, "BC", "BC"), set(&h1, "D"));
        t.add_child(d, pos(&h1, "CD", "CD"), NodeSet::empty());
        let bcd = t.add_child(a, pos(&h1, "A", "AB"), set(&h1, "BCD"));
        let ab = t.add_child(bcd, pos(&h1, "CD", "CD"), set(&h1, "AB"));
        let back = t.add_child(ab, pos(&h1, "BC", "BC"), set(&h1, "A"));
        t.add_child(back, pos(&h1, "AB", "AB"), NodeSet::empty());
        verify_strategy(&t, &h1, &h2).unwrap();
        assert!(!is_monotone(&t, &h1));
        let m = monotonize(&t, &h1, &h2).unwrap();
        assert!(is_monotone(&m, &h1));
        assert!(strategy_size(&m) < strategy_size(&t));
    }

    #[test]
    fn biased_strategies_become_monotone() {
        let (h1, h2) = fixtures::h1p_h2p();
        for seed in 0..20 {
            let opts = BruteOptions {
                max_nodes: 11,
                seed: Some(seed),
                slack: 2,
                ..BruteOptions::default()
            };
            let t = brute_solve_with(&h1, &h2, &opts).unwrap().unwrap();
            let m = monotonize(&t, &h1, &h2).unwrap();
            assert!(is_monotone(&m, &h1));
            verify_strategy(&m, &h1, &h2).unwrap();
            if is_monotone(&t, &h1) {
                assert_eq!(m, t);
            } else {
                assert!(strategy_size(&m) < strategy_size(&t));
            }
        }
    }
}
