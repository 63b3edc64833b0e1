use std::collections::BTreeSet;

use bipconn_core::{
    build_witness, kappa_bipartite, kappa_terminal, normalize, oracle_max_tree_set, verify_witness,
    Side, SmallGraph, TerminalSet, TreeClass, VertexId,
};
use proptest::prelude::*;

fn internal_edges(w: &bipconn_core::SteinerWitness) -> usize {
    w.trees
        .iter()
        .flat_map(|t| t.tree.edges())
        .filter(|&&(x, y)| {
            w.terminal.contains(VertexId::x(x)) && w.terminal.contains(VertexId::y(y))
        })
        .count()
}

#[test]
fn witnesses_are_complete() {
    for a in 1..=12 {
        for b in a..=12 {
            let order = normalize(a, b).unwrap();
            for k in 2..=a + b {
                let mut min = usize::MAX;
                for i in TerminalSet::index_range(&order, k) {
                    let w = build_witness(&order, k, i).unwrap();
                    let report = verify_witness(&order, &w);
                    assert!(report.is_valid(), "a={a} b={b} k={k} i={i}: {report:?}");
                    let bd = kappa_terminal(&order, k, i).unwrap();
                    assert_eq!(w.trees.len(), bd.kappa);
                    min = min.min(w.trees.len());
                }
                assert_eq!(min, kappa_bipartite(&order, k).unwrap());
            }
        }
    }
}

#[test]
fn class_accounting_and_extras() {
    for a in 1..=10 {
        for b in a..=10 {
            let order = normalize(a, b).unwrap();
            for k in 2..=a + b {
                for i in TerminalSet::index_range(&order, k) {
                    let w = build_witness(&order, k, i).unwrap();
                    let bd = kappa_terminal(&order, k, i).unwrap();
                    assert_eq!(
                        (
                            w.count(TreeClass::A2),
                            w.count(TreeClass::A1),
                            w.count(TreeClass::A0)
                        ),
                        (bd.a2, bd.a1, bd.a0)
                    );

                    if 0 < i && i < k {
                        let used = internal_edges(&w);
                        assert_eq!(used, bd.internal_edges_used(&w.terminal));
                        assert!(used <= i * (k - i));
                    }

                    let mut extras = BTreeSet::new();
                    for t in &w.trees {
                        for &v in &t.extras {
                            assert!(!w.terminal.contains(v));
                            assert!(extras.insert(v), "extra {v} reused");
                        }
                        assert!(t.has_standard_structure(&w.terminal));
                    }

                    let hub_sides: BTreeSet<Side> = w
                        .trees
                        .iter()
                        .filter(|t| t.class == TreeClass::A1)
                        .map(|t| t.extras[0].side)
                        .collect();
                    assert!(hub_sides.len() <= 1);

                    // With every spare pair used by A2 trees, the unused
                    // vertices all lie on one side.
                    if 0 < i && i < k {
                        let unused_x = (1..=a).any(|n| {
                            let v = VertexId::x(n);
                            !w.terminal.contains(v) && !extras.contains(&v)
                        });
                        let unused_y = (1..=b).any(|n| {
                            let v = VertexId::y(n);
                            !w.terminal.contains(v) && !extras.contains(&v)
                        });
                        assert!(!(unused_x && unused_y), "a={a} b={b} k={k} i={i}");
                    }
                }
            }
        }
    }
}

#[test]
fn witnesses_are_optimal_on_small_graphs() {
    for a in 1..=4 {
        for b in a..=8 - a {
            let order = normalize(a, b).unwrap();
            let graph = SmallGraph::complete_bipartite(a, b).unwrap();
            for k in 2..=a + b {
                for i in TerminalSet::index_range(&order, k) {
                    let w = build_witness(&order, k, i).unwrap();
                    let terminals = SmallGraph::bipartite_terminals(&w.terminal);
                    let oracle = oracle_max_tree_set(&graph, &terminals).unwrap();
                    assert_eq!(w.trees.len(), oracle.count, "a={a} b={b} k={k} i={i}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn larger_witnesses_verify(a in 1usize..30, b in 1usize..30, k_seed in 0usize..1000, i_seed in 0usize..1000) {
        let order = normalize(a, b).unwrap();
        let k = 2 + k_seed % (order.vertex_count() - 1);
        let range = TerminalSet::index_range(&order, k);
        let i = range.start() + i_seed % (range.end() - range.start() + 1);
        let w = build_witness(&order, k, i).unwrap();
        prop_assert!(verify_witness(&order, &w).is_valid());
        prop_assert_eq!(w.trees.len(), kappa_terminal(&order, k, i).unwrap().kappa);
    }
}
