mod common;

use common::{hypergraph, pair};
use proptest::prelude::*;
use treeproj::game::{
    brute_solve_with, brute_winning, escape_door, is_monotone, monotonize, robber_components,
    robber_components_by_paths, solve, strategy_size, verify_strategy, BruteOptions, Configuration,
    Solver,
};
use treeproj::{Hypergraph, NodeSet};

fn sorted(mut v: Vec<NodeSet>) -> Vec<NodeSet> {
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn escape_components_two_ways(
        h in hypergraph(6, 5),
        m in any::<u32>(),
        next in any::<u32>(),
        pick in any::<prop::sample::Index>(),
    ) {
        let m = NodeSet::from_bits(m as u128) & h.nodes();
        prop_assume!(!m.is_empty());
        let comps = h.component_sets(m);
        prop_assume!(!comps.is_empty());
        let c = comps[pick.index(comps.len())];
        let next = NodeSet::from_bits(next as u128) & h.frontier(c);
        let cfg = Configuration { cops: m, component: c };
        let a = sorted(robber_components(&h, cfg, next).into_iter().map(|x| x.members).collect());
        let b = sorted(robber_components_by_paths(&h, cfg, next).into_iter().map(|x| x.members).collect());
        prop_assert_eq!(&a, &b);
        let ed = escape_door(&h, cfg, next);
        prop_assert_eq!(ed.is_empty(), a.iter().all(|x| x.is_subset(c)));
    }

    #[test]
    fn monotone_and_unrestricted_games_agree((h1, h2) in pair(6, 4)) {
        let brute = brute_winning(&h1, &h2, 10).unwrap();
        prop_assert_eq!(solve(&h1, &h2).is_some(), brute);
    }

    #[test]
    fn solver_moves_are_monotone_and_legal((h1, h2) in pair(7, 5)) {
        let Some(tree) = solve(&h1, &h2) else { return Ok(()) };
        prop_assert!(verify_strategy(&tree, &h1, &h2).is_ok());
        prop_assert!(is_monotone(&tree, &h1));
        for v in tree.vertices() {
            let Some(&c) = v.children.first() else { continue };
            let mv = tree.vertex(c);
            let squad = mv.squad.unwrap();
            prop_assert!(h2.contains_edge(squad));
            prop_assert!(mv.cops.is_subset(squad & h1.frontier(v.component)));
            prop_assert!(h1.border(v.component).is_subset(mv.cops));
        }
    }

    #[test]
    fn monotonize_biased_strategies((h1, h2) in pair(6, 4), seed in any::<u64>(), slack in 1usize..=2) {
        prop_assume!(brute_winning(&h1, &h2, 10).unwrap());
        let opts = BruteOptions { seed: Some(seed), slack, tree_limit: 2_000, ..BruteOptions::default() };
        let tree = brute_solve_with(&h1, &h2, &opts).unwrap().unwrap();
        prop_assert!(verify_strategy(&tree, &h1, &h2).is_ok());
        let out = monotonize(&tree, &h1, &h2).unwrap();
        prop_assert!(is_monotone(&out, &h1));
        prop_assert!(verify_strategy(&out, &h1, &h2).is_ok());
        if is_monotone(&tree, &h1) {
            prop_assert!(strategy_size(&out) <= strategy_size(&tree));
        } else {
            prop_assert!(strategy_size(&out) < strategy_size(&tree));
        }
    }
}

fn hg(edges: &[&str]) -> Hypergraph {
    Hypergraph::from_edges(edges.iter().map(|e| e.chars().map(String::from))).unwrap()
}

/// Adding cops from the same squad can lose a won position. With cops on
/// `ADE` the Robber holds `BC`; the only squad covering its border drives it
/// to `B`, whose border `ACDE` no squad covers together with `B`.
#[test]
fn larger_moves_can_lose() {
    let h1 = hg(&["A", "ABC", "BCD", "BDE"]);
    let h2 = hg(&["ABC", "ACDE", "AD", "BCD", "BDE"]);
    let (h1, h2) = Hypergraph::align(&h1, &h2);
    let set = |s: &str| h1.set(s.chars().map(String::from)).unwrap();
    let squad = set("ACDE");
    assert!(h2.contains_edge(squad));
    let mut solver = Solver::new(&h1, &h2);
    let after = |solver: &mut Solver, m: NodeSet| {
        h1.component_sets(m)
            .into_iter()
            .all(|d| d != h1.nodes() && solver.wins(d))
    };
    assert_eq!(h1.component_sets(set("DE")), vec![set("ABC")]);
    assert!(after(&mut solver, set("DE")));
    assert_eq!(h1.component_sets(set("ADE")), vec![set("BC")]);
    assert!(!after(&mut solver, set("ADE")));
    assert!(!solver.wins(set("B")));
    assert!(h2.edges().iter().all(|&f| !set("ABCDE").is_subset(f)));
    assert!(brute_winning(&h1, &h2, 10).unwrap());
}
