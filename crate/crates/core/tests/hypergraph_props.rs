mod common;

use common::{hypergraph, hypergraph_with_isolated, pair};
use proptest::prelude::*;
use treeproj::io::HypergraphDoc;
use treeproj::io::{parse_hypergraph, print_hypergraph};
use treeproj::{Hypergraph, NodeSet};

fn same_edges(a: &Hypergraph, b: &Hypergraph) -> bool {
    let mut x = a.named_edges();
    let mut y = b.named_edges();
    x.sort();
    y.sort();
    x == y
}

fn subset_of(h: &Hypergraph, bits: u32) -> NodeSet {
    NodeSet::from_bits(bits as u128) & h.nodes()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn containment_is_a_partial_order(
        a in hypergraph(5, 4),
        b in hypergraph(5, 4),
        c in hypergraph(5, 4),
    ) {
        prop_assert!(a.contained_in(&a));
        if a.contained_in(&b) && b.contained_in(&a) {
            prop_assert!(same_edges(&a, &b));
        }
        if a.contained_in(&b) && b.contained_in(&c) {
            prop_assert!(a.contained_in(&c));
        }
    }

    #[test]
    fn containment_sits_between_inclusion_and_coverage((h1, h2) in pair(6, 5)) {
        if h1.edges().iter().all(|&e| h2.contains_edge(e)) {
            prop_assert!(h1.contained_in(&h2));
        }
        if h1.contained_in(&h2) {
            prop_assert!(h1.leq(&h2));
        }
    }

    #[test]
    fn components_partition_and_are_maximal(h in hypergraph_with_isolated(7, 5), bits in any::<u32>()) {
        let v = subset_of(&h, bits);
        let comps = h.component_sets(v);
        let mut union = NodeSet::empty();
        for &c in &comps {
            prop_assert!(!c.is_empty());
            prop_assert!(c.is_disjoint(v));
            prop_assert!(c.is_disjoint(union));
            union |= c;
            let x = c.first().unwrap();
            for y in c {
                prop_assert!(h.v_path_exists(v, x, y).unwrap());
            }
            for y in h.nodes() - v - c {
                prop_assert!(!h.v_path_exists(v, x, y).unwrap());
            }
        }
        prop_assert_eq!(union, h.nodes() - v);
    }

    #[test]
    fn frontier_laws(h in hypergraph(7, 5), b1 in any::<u32>(), b2 in any::<u32>()) {
        let c1 = subset_of(&h, b1);
        let c2 = c1 | subset_of(&h, b2);
        prop_assert_eq!(h.frontier(c1), c1 | h.border(c1));
        prop_assert!(h.frontier(c1).is_subset(h.frontier(c2)));
    }

    #[test]
    fn components_refine_under_coverage((h1, h2) in pair(6, 5), bits in any::<u32>()) {
        let ha = h2.with_nodes(h1.nodes() | h2.nodes()).unwrap();
        let h1 = h1.with_nodes(ha.nodes()).unwrap();
        prop_assume!(h1.leq(&ha));
        let v = subset_of(&ha, bits);
        let fine = h1.component_sets(v);
        let coarse = ha.component_sets(v);
        for &c1 in &fine {
            prop_assert_eq!(coarse.iter().filter(|&&ca| c1.is_subset(ca)).count(), 1);
        }
        for &ca in &coarse {
            let union = fine.iter().filter(|&&c1| c1.is_subset(ca)).fold(NodeSet::empty(), |a, &c| a | c);
            prop_assert_eq!(union, ca);
        }
    }

    #[test]
    fn touching_is_frontier_membership(h in hypergraph(7, 5), m in any::<u32>(), next in any::<u32>(), pick in any::<prop::sample::Index>()) {
        let m = subset_of(&h, m);
        let comps = h.component_sets(m);
        prop_assume!(!comps.is_empty());
        let c = comps[pick.index(comps.len())];
        let next = subset_of(&h, next);
        let all_touch = next.iter().all(|x| h.touches(m, x, c));
        prop_assert_eq!(all_touch, next.is_subset(h.frontier(c)));
    }

    #[test]
    fn text_round_trip(h in hypergraph_with_isolated(8, 6)) {
        let back = parse_hypergraph(&print_hypergraph(&h)).unwrap();
        prop_assert_eq!(&back, &h);
    }

    #[test]
    fn json_round_trip(h in hypergraph_with_isolated(8, 6)) {
        let doc = HypergraphDoc::new(&h);
        let text = serde_json::to_string(&doc).unwrap();
        let back: HypergraphDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back.to_hypergraph().unwrap(), &h);
    }
}
