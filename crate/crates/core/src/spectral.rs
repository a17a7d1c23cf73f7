//! Signless Laplacian Q(G) = D(G) + A(G) and its spectral radius q(G).
//!
//! Q is entrywise nonnegative and positive semidefinite, so on a connected
//! graph the largest eigenvalue is simple and dominant in modulus and plain
//! power iteration from a positive start vector converges to it. Disconnected
//! graphs are solved one component at a time.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::structure::component_masks;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_ITERATIONS: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    /// Stop once `max |Qx - qx| <= tol`.
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

impl SolverConfig {
    pub fn with_tol(tol: f64) -> Self {
        SolverConfig {
            tol,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralResult {
    pub q: f64,
    /// Unit, nonnegative, supported on one component attaining `q`.
    pub perron: Vec<f64>,
    /// `max |Q x - q x|` over all vertices.
    pub residual: f64,
    pub iterations: usize,
}

/// Dense Q(G).
pub fn signless_laplacian(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut q = vec![vec![0.0; n]; n];
    for (u, row) in q.iter_mut().enumerate() {
        row[u] = g.degree(u) as f64;
    }
    for &(u, v) in g.edges() {
        q[u][v] = 1.0;
        q[v][u] = 1.0;
    }
    q
}

/// `Q x` without forming Q.
pub fn apply_q(g: &Graph, x: &[f64]) -> Vec<f64> {
    (0..g.n())
        .map(|u| g.degree(u) as f64 * x[u] + g.neighbors(u).map(|v| x[v]).sum::<f64>())
        .collect()
}

pub fn q_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    q_radius_with(g, &SolverConfig::with_tol(tol))
}

pub fn q_radius_with(g: &Graph, cfg: &SolverConfig) -> Result<SpectralResult> {
    if !(cfg.tol > 0.0) || !cfg.tol.is_finite() {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {}", cfg.tol)));
    }
    let comps = component_masks(g);
    let mut best: Option<(f64, u64, Vec<f64>, usize)> = None;
    let mut total_iterations = 0;
    for mask in comps {
        let sub = g.induced(mask);
        let (q, x, iters) = power_iteration(&sub, cfg)?;
        total_iterations += iters;
        if best.as_ref().is_none_or(|b| q > b.0) {
            best = Some((q, mask, x, iters));
        }
    }
    let (q, mask, local, _) = best.expect("graphs have at least one vertex");
    let mut perron = vec![0.0; g.n()];
    for (i, v) in Bits(mask).enumerate() {
        perron[v] = local[i];
    }
    let residual = residual(g, &perron, q);
    Ok(SpectralResult {
        q,
        perron,
        residual,
        iterations: total_iterations,
    })
}

/// `max |Q x - λ x|`.
pub fn residual(g: &Graph, x: &[f64], lambda: f64) -> f64 {
    apply_q(g, x)
        .iter()
        .zip(x)
        .map(|(qx, xi)| (qx - lambda * xi).abs())
        .fold(0.0, f64::max)
}

/// Power iteration on a connected graph. Start vector is `degree + 1`.
fn power_iteration(g: &Graph, cfg: &SolverConfig) -> Result<(f64, Vec<f64>, usize)> {
    let n = g.n();
    if n == 1 {
        return Ok((0.0, vec![1.0], 0));
    }
    let mut x: Vec<f64> = (0..n).map(|u| g.degree(u) as f64 + 1.0).collect();
    normalize(&mut x);
    let mut y = vec![0.0; n];
    let mut res = f64::INFINITY;
    for it in 1..=cfg.max_iterations {
        for u in 0..n {
            let mut s = g.degree(u) as f64 * x[u];
            for v in g.neighbors(u) {
                s += x[v];
            }
            y[u] = s;
        }
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        res = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - lambda * xi).abs())
            .fold(0.0, f64::max);
        if res <= cfg.tol {
            return Ok((lambda, x, it));
        }
        std::mem::swap(&mut x, &mut y);
        normalize(&mut x);
    }
    Err(Error::Convergence {
        iterations: cfg.max_iterations,
        residual: res,
    })
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter_mut().for_each(|v| *v /= norm);
}

/// `xᵀQx` from the dense matrix.
pub fn quadratic_form(g: &Graph, x: &[f64]) -> f64 {
    let q = signless_laplacian(g);
    q.iter()
        .enumerate()
        .map(|(i, row)| x[i] * row.iter().zip(x).map(|(a, b)| a * b).sum::<f64>())
        .sum()
}

/// `Σ_{uv ∈ E} (x_u + x_v)²`, which equals `xᵀQx`.
pub fn edge_sum_form(g: &Graph, x: &[f64]) -> f64 {
    g.edges().iter().map(|&(u, v)| (x[u] + x[v]).powi(2)).sum()
}

/// Rayleigh quotient `xᵀQx / xᵀx`.
pub fn rayleigh(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::InvalidInput(format!(
            "vector has length {}, graph has {} vertices",
            x.len(),
            g.n()
        )));
    }
    let norm2: f64 = x.iter().map(|v| v * v).sum();
    if norm2 == 0.0 {
        return Err(Error::InvalidInput("zero vector".into()));
    }
    Ok(edge_sum_form(g, x) / norm2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn matrix_entries() {
        assert_eq!(signless_laplacian(&k(2)), vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
        let k3 = signless_laplacian(&k(3));
        assert!((0..3).all(|i| k3[i][i] == 2.0));
        assert!((0..3).all(|i| (0..3).all(|j| i == j || k3[i][j] == 1.0)));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(signless_laplacian(&star)[0], vec![3.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn k2_and_single_vertex() {
        let r = q_radius(&k(2), 1e-12).unwrap();
        assert!((r.q - 2.0).abs() < 1e-10);
        let r = q_radius(&Graph::empty(1).unwrap(), 1e-10).unwrap();
        assert_eq!(r.q, 0.0);
        assert_eq!(r.perron, vec![1.0]);
    }

    #[test]
    fn disconnected_uses_largest_component() {
        // K3 plus K2: q = 4 on the triangle.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let r = q_radius(&g, 1e-12).unwrap();
        assert!((r.q - 4.0).abs() < 1e-10);
        assert_eq!(&r.perron[3..], &[0.0, 0.0]);
        assert!(r.residual <= 1e-12);
    }

    #[test]
    fn rayleigh_examples() {
        assert!((rayleigh(&k(2), &[1.0, 1.0]).unwrap() - 2.0).abs() < 1e-15);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!((rayleigh(&c4, &[1.0; 4]).unwrap() - 4.0).abs() < 1e-15);
        assert!(matches!(rayleigh(&c4, &[0.0; 4]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn iteration_cap_reports_convergence_error() {
        let p = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let cfg = SolverConfig {
            tol: 1e-14,
            max_iterations: 3,
        };
        assert!(matches!(q_radius_with(&p, &cfg), Err(Error::Convergence { .. })));
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(q_radius(&k(3), 0.0).is_err());
        assert!(q_radius(&k(3), f64::NAN).is_err());
    }
}
