mod common;

use proptest::prelude::*;
use spex_core::spectral::{edge_sum_form, q_radius, quadratic_form, rayleigh, residual};
use spex_core::Graph;

use common::{dense_q, seeded_graph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.1f64..0.9).prop_map(|(n, seed, p)| seeded_graph(seed, n, p))
}

proptest! {
    #[test]
    fn power_iteration_matches_dense_eigensolver(g in graph_strategy(14)) {
        let r = q_radius(&g, 1e-11).unwrap();
        prop_assert!((r.q - dense_q(&g)).abs() <= 1e-8 * r.q.max(1.0));
        prop_assert!(r.residual <= 1e-11);
        prop_assert!(r.perron.iter().all(|&x| x >= 0.0));
        let norm: f64 = r.perron.iter().map(|x| x * x).sum();
        prop_assert!((norm - 1.0).abs() < 1e-12);
        prop_assert!((residual(&g, &r.perron, r.q) - r.residual).abs() < 1e-15);
    }

    #[test]
    fn rayleigh_quotient_never_exceeds_q(g in graph_strategy(10), x in prop::collection::vec(-1.0f64..1.0, 10)) {
        let x = &x[..g.n()];
        prop_assume!(x.iter().any(|v| v.abs() > 1e-3));
        let q = dense_q(&g);
        prop_assert!(rayleigh(&g, x).unwrap() <= q + 1e-9);
        let dense = quadratic_form(&g, x);
        prop_assert!((dense - edge_sum_form(&g, x)).abs() <= 1e-10 * dense.abs().max(1.0));
    }
}

#[test]
fn closed_forms() {
    use spex_core::constructions::*;
    for n in 3..=12 {
        assert!((q_radius(&cycle(n).unwrap(), 1e-12).unwrap().q - 4.0).abs() < 1e-9);
    }
    for t in 1..=20 {
        assert!((q_radius(&star(t).unwrap(), 1e-12).unwrap().q - (t as f64 + 1.0)).abs() < 1e-9);
    }
    for n in 3..=10 {
        let q = q_radius(&complete(n).unwrap(), 1e-12).unwrap().q;
        assert!((q - (2 * n - 2) as f64).abs() < 1e-9);
    }
}
