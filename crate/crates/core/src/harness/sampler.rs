//! Seeded random connected graphs for the property suites.

use rand::seq::IndexedRandom;
use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::is_connected;

pub const MIN_ORDER: usize = 5;
pub const MAX_ORDER: usize = 10;
pub const EDGE_PROBABILITIES: [f64; 2] = [0.3, 0.5];

/// Rejection attempts allowed per accepted sample.
pub const MAX_ATTEMPTS: usize = 1_000_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with `n` uniform in `[5, 10]` and `p` drawn from
/// [`EDGE_PROBABILITIES`]; possibly disconnected.
pub fn gnp<R: Rng>(rng: &mut R) -> Graph {
    let n = rng.random_range(MIN_ORDER..=MAX_ORDER);
    let p = *EDGE_PROBABILITIES.choose(rng).expect("nonempty");
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("order within range")
}

/// Resamples until the graph is connected and `pick` finds a configuration.
pub fn sample_where<R, T, F>(rng: &mut R, mut pick: F) -> Result<(Graph, T)>
where
    R: Rng,
    F: FnMut(&Graph, &mut R) -> Option<T>,
{
    for _ in 0..MAX_ATTEMPTS {
        let g = gnp(rng);
        if !is_connected(&g) {
            continue;
        }
        if let Some(found) = pick(&g, rng) {
            return Ok((g, found));
        }
    }
    Err(Error::ResourceLimit(format!("no admissible graph in {MAX_ATTEMPTS} samples")))
}

pub fn connected<R: Rng>(rng: &mut R) -> Graph {
    sample_where(rng, |_, _| Some(())).expect("connected samples are common").0
}

/// Vector with entries uniform in `[lo, hi)`.
pub fn vector<R: Rng>(rng: &mut R, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(lo..hi)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_streams_repeat() {
        let a: Vec<_> = (0..5).map({
            let mut r = rng(9);
            move |_| connected(&mut r)
        }).collect();
        let mut r = rng(9);
        for g in &a {
            assert_eq!(*g, connected(&mut r));
            assert!((MIN_ORDER..=MAX_ORDER).contains(&g.n()));
        }
    }
}
