mod common;

use proptest::prelude::*;
use spex_core::certificates::{contraction_certificate, interval_certificate, ContractionOutcome};
use spex_core::spectral::q_radius;
use spex_core::structure::is_connected;
use spex_core::transforms::{contract, find_internal_paths, subdivide, switch};
use spex_core::{are_isomorphic, Graph};

use common::{dense_q, seeded_graph};

fn connected(seed: u64, n: usize, p: f64) -> Option<Graph> {
    let g = seeded_graph(seed, n, p);
    is_connected(&g).then_some(g)
}

proptest! {
    #[test]
    fn contracting_a_subdivision_restores_the_graph(seed in any::<u64>(), n in 3usize..=10, pick in any::<prop::sample::Index>()) {
        let g = seeded_graph(seed, n, 0.4);
        prop_assume!(g.m() > 0);
        let (u, v) = g.edges()[pick.index(g.m())];
        let s = subdivide(&g, u, v).unwrap();
        prop_assert_eq!((s.n(), s.m()), (g.n() + 1, g.m() + 1));
        let back = contract(&s, u, g.n()).unwrap();
        prop_assert!(are_isomorphic(&back, &g));
    }

    #[test]
    fn switching_preserves_size(seed in any::<u64>(), n in 3usize..=10, u in 0usize..10, v in 0usize..10) {
        let g = seeded_graph(seed, n, 0.5);
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v);
        let set: Vec<usize> = g.neighbors(v).filter(|&s| s != u && !g.has_edge(u, s)).collect();
        let h = switch(&g, u, v, &set).unwrap();
        prop_assert_eq!(h.m(), g.m());
        prop_assert_eq!(h.degree(u), g.degree(u) + set.len());
        prop_assert_eq!(h.degree(v), g.degree(v) - set.len());
    }

    #[test]
    fn internal_paths_satisfy_their_definition(seed in any::<u64>(), n in 4usize..=12) {
        let g = seeded_graph(seed, n, 0.3);
        for p in find_internal_paths(&g) {
            let vs = &p.vertices;
            prop_assert!(vs.len() >= 2);
            prop_assert!(g.degree(vs[0]) >= 3 && g.degree(*vs.last().unwrap()) >= 3);
            prop_assert!(vs[1..vs.len() - 1].iter().all(|&x| g.degree(x) == 2));
            prop_assert!(vs.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
    }

    /// Every accepted witness brackets the dense eigenvalue.
    #[test]
    fn accepted_certificates_are_sound(
        seed in any::<u64>(),
        n in 3usize..=10,
        y in prop::collection::vec(0.05f64..1.0, 10),
        alpha in 0.0f64..12.0,
        width in 0.0f64..6.0,
    ) {
        let Some(g) = connected(seed, n, 0.5) else { return Ok(()) };
        let q = dense_q(&g);
        if let Some(c) = interval_certificate(&g, &y[..n], alpha, alpha + width).unwrap().accepted() {
            prop_assert!(c.alpha < q && q < c.beta);
        }
    }

    /// The explicit contraction witness agrees with two eigensolves.
    #[test]
    fn contraction_witness_agrees_with_eigensolver(seed in any::<u64>(), n in 5usize..=11, pick in any::<prop::sample::Index>()) {
        let Some(g) = connected(seed, n, 0.4) else { return Ok(()) };
        let (u, v) = g.edges()[pick.index(g.m())];
        if let Ok(ContractionOutcome::Certified(c)) = contraction_certificate(&g, u, v) {
            let h = contract(&g, u, v).unwrap();
            prop_assert!((c.certificate.beta - dense_q(&h)).abs() < 1e-8);
            prop_assert!(dense_q(&g) < c.certificate.beta);
            prop_assert!(c.min_strict_slack > 0.0);
            prop_assert!(q_radius(&g, 1e-12).unwrap().q < q_radius(&h, 1e-12).unwrap().q);
        }
    }
}
