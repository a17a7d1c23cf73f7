//! Bounds on q(G) and checkable certificates for them.
//!
//! * average 2-degree bound `q ≤ max_u (d(u) + m(u))` with its equality
//!   cases (regular, semiregular bipartite);
//! * clique bound `q(G) ≤ q(K_ω^{m - C(ω,2)})`;
//! * star bound `q ≥ Δ + 1` for connected graphs;
//! * interval certificates: a positive `Y` with `αY < QY < βY`
//!   componentwise proves `α < q < β`;
//! * the explicit witness showing that contracting an edge with disjoint
//!   end neighborhoods increases q.

use serde::Serialize;

use crate::constructions::clique_with_pendants;
use crate::decimal;
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};
use crate::spectral::{apply_q, q_radius};
use crate::structure::{bipartition, clique_number, is_connected};
use crate::transforms::{contract, contraction_map, on_internal_path};

/// Strictness margin for componentwise certificate inequalities, relative
/// to `max(1, ‖QY‖∞)`.
pub const STRICT_MARGIN: f64 = 1e-12;

/// Eigensolver tolerance used when a certificate is built from a Perron
/// vector.
const WITNESS_TOL: f64 = 1e-12;

/// `m_G(u)`: mean degree of the neighbors of `u`.
pub fn average_two_degree(g: &Graph, u: usize) -> Result<f64> {
    if u >= g.n() {
        return Err(Error::InvalidInput(format!("vertex {u} out of range")));
    }
    let d = g.degree(u);
    if d == 0 {
        return Err(Error::InvalidInput(format!("vertex {u} is isolated")));
    }
    let sum: usize = g.neighbors(u).map(|v| g.degree(v)).sum();
    Ok(sum as f64 / d as f64)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FengYuBound {
    pub bound: f64,
    pub regular: bool,
    pub semiregular_bipartite: bool,
}

impl FengYuBound {
    /// The bound is attained exactly in these two cases.
    pub fn is_tight(&self) -> bool {
        self.regular || self.semiregular_bipartite
    }
}

pub fn feng_yu_bound(g: &Graph) -> Result<FengYuBound> {
    if !is_connected(g) {
        return Err(Error::InvalidInput("average 2-degree bound needs a connected graph; apply it per component".into()));
    }
    if g.n() == 1 {
        return Ok(FengYuBound {
            bound: 0.0,
            regular: true,
            semiregular_bipartite: false,
        });
    }
    let mut bound = f64::NEG_INFINITY;
    for u in 0..g.n() {
        bound = bound.max(g.degree(u) as f64 + average_two_degree(g, u)?);
    }
    let degrees = g.degrees();
    let regular = degrees.iter().all(|&d| d == degrees[0]);
    let constant_on = |side: u64| {
        let mut ds = Bits(side).map(|v| degrees[v]);
        match ds.next() {
            Some(d0) => ds.all(|d| d == d0),
            None => true,
        }
    };
    let semiregular_bipartite = bipartition(g).is_some_and(|(a, b)| constant_on(a) && constant_on(b));
    Ok(FengYuBound {
        bound,
        regular,
        semiregular_bipartite,
    })
}

/// `q(K_ω^{m - C(ω,2)})` with ω the clique number of `g`.
pub fn clique_bound(g: &Graph, tol: f64) -> Result<f64> {
    if g.m() == 0 {
        return Ok(0.0);
    }
    let omega = clique_number(g);
    Ok(q_radius(&clique_extremal(g.m(), omega)?, tol)?.q)
}

/// K_ω^{m - C(ω,2)}, the extremal graph of the clique bound.
pub fn clique_extremal(m: usize, omega: usize) -> Result<Graph> {
    let s = omega * (omega - 1) / 2;
    if m < s {
        return Err(Error::InvalidParameter(format!("m={m} < C({omega},2)")));
    }
    clique_with_pendants(omega, m - s)
}

/// `Δ + 1`, a lower bound on q for connected graphs with an edge.
pub fn star_lower_bound(g: &Graph) -> f64 {
    if g.m() == 0 {
        0.0
    } else {
        g.max_degree() as f64 + 1.0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EqualityFlags {
    pub regular: bool,
    pub semiregular_bipartite: bool,
    /// Star bound attained: the graph is a star.
    pub star: bool,
    /// Clique bound attained: the graph is K_ω with pendants at one vertex.
    pub clique_extremal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    #[serde(serialize_with = "decimal::serialize")]
    pub q: f64,
    #[serde(serialize_with = "decimal::serialize")]
    pub feng_yu: f64,
    #[serde(serialize_with = "decimal::serialize")]
    pub clique_bound: f64,
    #[serde(serialize_with = "decimal::serialize")]
    pub star_lower: f64,
    pub clique_number: usize,
    pub equality: EqualityFlags,
}

pub fn bound_report(g: &Graph, tol: f64) -> Result<BoundReport> {
    let fy = feng_yu_bound(g)?;
    let q = q_radius(g, tol)?.q;
    let omega = clique_number(g);
    let clique = clique_bound(g, tol)?;
    let is_star = g.m() > 0 && g.m() + 1 == g.n() && g.max_degree() == g.m();
    let clique_extremal = g.m() > 0
        && crate::canon::are_isomorphic(g, &clique_extremal(g.m(), omega)?);
    Ok(BoundReport {
        q,
        feng_yu: fy.bound,
        clique_bound: clique,
        star_lower: star_lower_bound(g),
        clique_number: omega,
        equality: EqualityFlags {
            regular: fy.regular,
            semiregular_bipartite: fy.semiregular_bipartite,
            star: is_star,
            clique_extremal,
        },
    })
}

/// A positive vector `witness` with `alpha·Y < QY < beta·Y` entrywise.
/// `alpha = -∞` marks a one-sided (upper) certificate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntervalCertificate {
    pub alpha: f64,
    pub beta: f64,
    pub witness: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CertificateCheck {
    Accepted(IntervalCertificate),
    Rejected { vertex: usize, reason: String },
}

impl CertificateCheck {
    pub fn accepted(&self) -> Option<&IntervalCertificate> {
        match self {
            CertificateCheck::Accepted(c) => Some(c),
            CertificateCheck::Rejected { .. } => None,
        }
    }
}

/// Checks `αY < QY < βY` with margin [`STRICT_MARGIN`].
pub fn interval_certificate(g: &Graph, y: &[f64], alpha: f64, beta: f64) -> Result<CertificateCheck> {
    if y.len() != g.n() {
        return Err(Error::InvalidInput(format!("witness length {} != {}", y.len(), g.n())));
    }
    if let Some(i) = y.iter().position(|&v| !(v > 0.0) || !v.is_finite()) {
        return Err(Error::InvalidWitness(format!("entry {i} is {} (must be positive)", y[i])));
    }
    let qy = apply_q(g, y);
    let margin = STRICT_MARGIN * qy.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    for (i, (&qyi, &yi)) in qy.iter().zip(y).enumerate() {
        if !(qyi - alpha * yi > margin) {
            return Ok(CertificateCheck::Rejected {
                vertex: i,
                reason: format!("(QY)_{i} = {qyi} is not above alpha*Y_{i} = {}", alpha * yi),
            });
        }
        if !(beta * yi - qyi > margin) {
            return Ok(CertificateCheck::Rejected {
                vertex: i,
                reason: format!("(QY)_{i} = {qyi} is not below beta*Y_{i} = {}", beta * yi),
            });
        }
    }
    Ok(CertificateCheck::Accepted(IntervalCertificate {
        alpha,
        beta,
        witness: y.to_vec(),
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContractionCertificate {
    /// `beta = q(G^{uv})`, `alpha = -∞`.
    pub certificate: IntervalCertificate,
    /// Smallest slack `q·y_w − (QY)_w` over the neighbors of `u` and `v`
    /// other than each other; a valid witness has these strictly positive.
    pub min_strict_slack: f64,
    /// Largest deviation from equality at the remaining vertices.
    pub max_equality_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ContractionOutcome {
    Certified(ContractionCertificate),
    /// An end of `uv` has degree 2, so G is a subdivision of `G^{uv}`; no
    /// witness is built on this route.
    SubdivisionCase,
}

/// Builds the positive vector `Y` with `Q(G) Y ≤ q Y` (strict at the
/// neighbors of `u` and `v`), where `q = q(G^{uv})`, from the Perron vector
/// `X` of the contracted graph:
///
/// ```text
/// y_u = (Σ x_{v_i} + (q - t - 1) Σ x_{u_i}) / p
/// y_v = (Σ x_{u_i} + (q - s - 1) Σ x_{v_i}) / p
/// y_w = x_w otherwise,        p = (q - t - 1)(q - s - 1) - 1
/// ```
///
/// with `u_1..u_s = N(u) \ {v}` and `v_1..v_t = N(v) \ {u}`.
pub fn contraction_certificate(g: &Graph, u: usize, v: usize) -> Result<ContractionOutcome> {
    if !g.has_edge(u, v) {
        return Err(Error::InvalidEdge(format!("({u},{v}) is not an edge")));
    }
    if !is_connected(g) {
        return Err(Error::InvalidInput("contraction certificate needs a connected graph".into()));
    }
    if g.mask(u) & g.mask(v) != 0 {
        return Err(Error::InvalidContraction(format!("{u} and {v} have a common neighbor")));
    }
    if g.degree(u) == 2 || g.degree(v) == 2 {
        return Ok(ContractionOutcome::SubdivisionCase);
    }
    if !on_internal_path(g, u, v) {
        return Err(Error::InvalidInput(format!("({u},{v}) is not on an internal path")));
    }

    let contracted = contract(g, u, v)?;
    let spec = q_radius(&contracted, WITNESS_TOL)?;
    let q = spec.q;
    let map = contraction_map(g.n(), u, v);
    let x = |w: usize| spec.perron[map[w]];

    let nu = g.mask(u) & !bit(v);
    let nv = g.mask(v) & !bit(u);
    let s = nu.count_ones() as f64;
    let t = nv.count_ones() as f64;
    let sum_u: f64 = Bits(nu).map(x).sum();
    let sum_v: f64 = Bits(nv).map(x).sum();
    let p = (q - t - 1.0) * (q - s - 1.0) - 1.0;

    let mut y: Vec<f64> = (0..g.n()).map(x).collect();
    y[u] = (sum_v + (q - t - 1.0) * sum_u) / p;
    y[v] = (sum_u + (q - s - 1.0) * sum_v) / p;

    if let Some(i) = y.iter().position(|&yi| !(yi > 0.0)) {
        return Err(Error::CertificateFailure(format!("witness entry {i} is not positive")));
    }
    let qy = apply_q(g, &y);
    let strict = nu | nv;
    let mut min_strict_slack = f64::INFINITY;
    let mut max_equality_error: f64 = 0.0;
    for w in 0..g.n() {
        let slack = q * y[w] - qy[w];
        if strict & bit(w) != 0 {
            min_strict_slack = min_strict_slack.min(slack);
        } else {
            max_equality_error = max_equality_error.max(slack.abs());
        }
    }
    let scale = qy.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    if !(min_strict_slack > STRICT_MARGIN * scale) {
        return Err(Error::CertificateFailure(format!(
            "slack {min_strict_slack:e} at a neighbor of the contracted edge is not positive"
        )));
    }
    // Equalities hold up to the eigenpair residual.
    if max_equality_error > 1e3 * WITNESS_TOL * scale {
        return Err(Error::CertificateFailure(format!(
            "equality rows deviate by {max_equality_error:e}"
        )));
    }
    Ok(ContractionOutcome::Certified(ContractionCertificate {
        certificate: IntervalCertificate {
            alpha: f64::NEG_INFINITY,
            beta: q,
            witness: y,
        },
        min_strict_slack,
        max_equality_error,
    }))
}

/// Both sides of
/// `XᵀY (q(G₂) − q(G)) = Σ_{ab ∈ added} (x_a+x_b)(y_a+y_b) − Σ_{ab ∈ removed} (x_a+x_b)(y_a+y_b)`
/// with `X`, `Y` the Perron vectors of `G` and `G₂ = G − removed + added`.
pub fn perturbation_identity(
    g: &Graph,
    g2: &Graph,
    added: &[(usize, usize)],
    removed: &[(usize, usize)],
) -> Result<(f64, f64)> {
    if g.n() != g2.n() {
        return Err(Error::InvalidInput("graphs must share a vertex set".into()));
    }
    for &(a, b) in added {
        if a >= g.n() || b >= g.n() || g.has_edge(a, b) || !g2.has_edge(a, b) {
            return Err(Error::InvalidInput(format!("added edge ({a},{b}) does not match the graphs")));
        }
    }
    for &(a, b) in removed {
        if a >= g.n() || b >= g.n() || !g.has_edge(a, b) || g2.has_edge(a, b) {
            return Err(Error::InvalidInput(format!("removed edge ({a},{b}) does not match the graphs")));
        }
    }
    if g.edited(added, removed) != *g2 {
        return Err(Error::InvalidInput("G2 is not G - removed + added".into()));
    }
    let x = q_radius(g, WITNESS_TOL)?;
    let y = q_radius(g2, WITNESS_TOL)?;
    let xy: f64 = x.perron.iter().zip(&y.perron).map(|(a, b)| a * b).sum();
    let lhs = xy * (y.q - x.q);
    let term = |&(a, b): &(usize, usize)| (x.perron[a] + x.perron[b]) * (y.perron[a] + y.perron[b]);
    let rhs = added.iter().map(term).sum::<f64>() - removed.iter().map(term).sum::<f64>();
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, cycle, g_extremal, star};

    #[test]
    fn average_two_degree_examples() {
        let c = cycle(5).unwrap();
        assert_eq!(average_two_degree(&c, 3).unwrap(), 2.0);
        let s = star(3).unwrap();
        assert_eq!(average_two_degree(&s, 0).unwrap(), 1.0);
        assert_eq!(average_two_degree(&s, 2).unwrap(), 3.0);
        assert_eq!(average_two_degree(&g_extremal(6, 4).unwrap(), 0).unwrap(), 1.5);
        let iso = c.with_isolated(1).unwrap();
        assert!(matches!(average_two_degree(&iso, 5), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn feng_yu_examples() {
        let c = feng_yu_bound(&cycle(6).unwrap()).unwrap();
        assert_eq!(c.bound, 4.0);
        assert!(c.regular && c.is_tight());
        let k = feng_yu_bound(&complete_bipartite(2, 3).unwrap()).unwrap();
        assert_eq!(k.bound, 5.0);
        assert!(k.semiregular_bipartite && !k.regular);
        let g = feng_yu_bound(&g_extremal(6, 4).unwrap()).unwrap();
        assert_eq!(g.bound, 5.5);
        assert!(!g.is_tight());
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(feng_yu_bound(&two), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn star_certificate() {
        let s = star(3).unwrap();
        let y = [1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0];
        assert!(interval_certificate(&s, &y, 3.9, 4.1).unwrap().accepted().is_some());
        assert!(interval_certificate(&s, &y, 4.05, 4.1).unwrap().accepted().is_none());
        assert!(matches!(
            interval_certificate(&s, &[1.0, 0.0, 1.0, 1.0], 3.0, 5.0),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn strictness_rejects_exact_eigenvector() {
        let c4 = cycle(4).unwrap();
        assert!(interval_certificate(&c4, &[1.0; 4], 4.0, 5.0).unwrap().accepted().is_none());
    }

    #[test]
    fn degree_two_edge_falls_back() {
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)]).unwrap();
        assert_eq!(contraction_certificate(&g, 2, 3).unwrap(), ContractionOutcome::SubdivisionCase);
    }

    #[test]
    fn identity_with_no_change_is_zero() {
        let g = g_extremal(7, 4).unwrap();
        let (lhs, rhs) = perturbation_identity(&g, &g, &[], &[]).unwrap();
        assert_eq!((lhs, rhs), (0.0, 0.0));
    }
}
