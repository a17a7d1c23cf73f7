mod common;

use petgraph::graph::UnGraph;
use petgraph::graph6::{FromGraph6, ToGraph6};
use proptest::prelude::*;
use spex_core::{are_isomorphic, canonical_form, canonical_graph6, parse_graph6, to_graph6, Graph};

use common::{brute_isomorphic, seeded_graph};

fn shuffled(g: &Graph, keys: &[u64]) -> Graph {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&i| keys[i]);
    // order[new] = old → perm[old] = new
    let mut perm = vec![0; g.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.permuted(&perm)
}

proptest! {
    #[test]
    fn canonical_form_is_labeling_invariant(
        n in 1usize..=16,
        seed in any::<u64>(),
        p in 0.05f64..0.95,
        keys in prop::collection::vec(any::<u64>(), 16),
    ) {
        let g = seeded_graph(seed, n, p);
        let h = shuffled(&g, &keys);
        prop_assert_eq!(canonical_graph6(&g), canonical_graph6(&h));
        let form = canonical_form(&g);
        prop_assert_eq!(g.permuted(&form.permutation), form.graph());
    }

    #[test]
    fn canonical_equality_agrees_with_brute_force(
        n in 2usize..=7,
        s1 in any::<u64>(),
        s2 in any::<u64>(),
        p in 0.2f64..0.8,
    ) {
        let a = seeded_graph(s1, n, p);
        let b = seeded_graph(s2, n, p);
        prop_assert_eq!(are_isomorphic(&a, &b), brute_isomorphic(&a, &b));
    }

    #[test]
    fn graph6_round_trips(n in 1usize..=62, seed in any::<u64>(), p in 0.0f64..1.0) {
        let g = seeded_graph(seed, n, p);
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

/// petgraph's encoder and decoder as a reference for small orders.
#[test]
fn graph6_agrees_with_petgraph() {
    for n in 1..=5 {
        for seed in 0..40 {
            let g = seeded_graph(seed, n, 0.5);
            let mut pg = UnGraph::<(), ()>::with_capacity(n, g.m());
            for _ in 0..n {
                pg.add_node(());
            }
            for &(a, b) in g.edges() {
                pg.add_edge((a as u32).into(), (b as u32).into(), ());
            }
            assert_eq!(to_graph6(&g), pg.graph6_string());
            let back = UnGraph::<(), ()>::from_graph6_string(to_graph6(&g));
            assert_eq!(back.edge_count(), g.m());
            for e in back.edge_indices() {
                let (a, b) = back.edge_endpoints(e).unwrap();
                assert!(g.has_edge(a.index(), b.index()));
            }
        }
    }
}
