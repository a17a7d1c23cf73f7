//! Seeded property suites for the q-monotone operations, the upper bounds
//! and certificate soundness.

use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::{Rng, RngExt};
use serde::Serialize;

use super::sampler;
use crate::canon::are_isomorphic;
use crate::certificates::{
    clique_bound, clique_extremal, contraction_certificate, feng_yu_bound, interval_certificate, ContractionOutcome,
};
use crate::constructions::{complete_bipartite, cycle, g_extremal};
use crate::decimal;
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};
use crate::graph6::to_graph6;
use crate::spectral::{apply_q, q_radius};
use crate::structure::{bridges, clique_number};
use crate::transforms::{contract, on_internal_path, subdivide, switch};

pub const DEFAULT_SEED: u64 = 42;

/// Solver tolerance inside the suites.
const SUITE_TOL: f64 = 1e-12;
/// Required strict change of q under a transform.
const STRICT: f64 = 1e-12;
/// Required gap below a bound that is not attained.
const BOUND_GAP: f64 = 1e-9;
/// Allowed error where a bound is attained.
const EQUALITY_TOL: f64 = 1e-8;
/// Violating graphs kept per case.
const KEPT_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    /// Moving edges `vs` to `us` with `x_u ≥ x_v` raises q.
    Switching,
    /// `q ≤ max (d(u) + m(u))`, attained exactly on regular and
    /// semiregular bipartite graphs.
    AverageDegreeBound,
    /// `q(G) ≤ q(K_ω^{m−C(ω,2)})` and monotonicity of that bound in ω.
    CliqueBound,
    /// Subdividing a cut edge on an internal path lowers q.
    Subdivision,
    /// Accepted interval certificates bracket q.
    IntervalCertificate,
    /// Contracting an internal-path edge with disjoint end neighborhoods
    /// raises q.
    Contraction,
}

impl LemmaId {
    pub const ALL: [LemmaId; 6] = [
        LemmaId::Switching,
        LemmaId::AverageDegreeBound,
        LemmaId::CliqueBound,
        LemmaId::Subdivision,
        LemmaId::IntervalCertificate,
        LemmaId::Contraction,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LemmaId::Switching => "switching",
            LemmaId::AverageDegreeBound => "average-degree-bound",
            LemmaId::CliqueBound => "clique-bound",
            LemmaId::Subdivision => "subdivision",
            LemmaId::IntervalCertificate => "interval-certificate",
            LemmaId::Contraction => "contraction",
        }
    }

    /// Short numeric alias accepted on the command line.
    pub fn alias(&self) -> &'static str {
        match self {
            LemmaId::Switching => "2.1",
            LemmaId::AverageDegreeBound => "2.2",
            LemmaId::CliqueBound => "2.3",
            LemmaId::Subdivision => "2.4",
            LemmaId::IntervalCertificate => "2.5",
            LemmaId::Contraction => "2.6",
        }
    }

    pub fn default_trials(&self) -> usize {
        match self {
            LemmaId::IntervalCertificate => 500,
            _ => 200,
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().trim_start_matches("lemma-");
        LemmaId::ALL
            .into_iter()
            .find(|id| id.name() == key || id.alias() == key)
            .ok_or_else(|| {
                let known: Vec<_> = LemmaId::ALL.iter().map(|id| format!("{} ({})", id.alias(), id.name())).collect();
                Error::InvalidParameter(format!("unknown suite {s:?}; expected one of {}", known.join(", ")))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseSummary {
    pub case: String,
    pub trials: usize,
    pub violations: usize,
    /// Smallest observed margin of a strict inequality.
    #[serde(serialize_with = "decimal::serialize_opt")]
    pub min_margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub accepted: Option<usize>,
    /// graph6 of the first few violating graphs.
    pub failures: Vec<String>,
}

impl CaseSummary {
    fn new(case: impl Into<String>) -> Self {
        CaseSummary {
            case: case.into(),
            trials: 0,
            violations: 0,
            min_margin: None,
            accepted: None,
            failures: Vec::new(),
        }
    }

    /// Records a strict inequality with margin `margin`; it holds when the
    /// margin exceeds `threshold`.
    fn margin(&mut self, g: &Graph, margin: f64, threshold: f64) {
        self.record(g, margin, margin > threshold);
    }

    fn record(&mut self, g: &Graph, margin: f64, ok: bool) {
        self.min_margin = Some(self.min_margin.map_or(margin, |m| m.min(margin)));
        self.check(g, ok);
    }

    fn check(&mut self, g: &Graph, ok: bool) {
        self.trials += 1;
        if !ok {
            self.violations += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(to_graph6(g));
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaSuiteResult {
    pub lemma: LemmaId,
    /// Random trials drawn (named cases come on top).
    pub trials: usize,
    pub violations: usize,
    #[serde(serialize_with = "decimal::serialize_opt")]
    pub min_margin: Option<f64>,
    pub seed: u64,
    pub cases: Vec<CaseSummary>,
}

impl LemmaSuiteResult {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Runs one suite. Output depends only on `(lemma, trials, seed)`.
pub fn run_lemma_suite(lemma: LemmaId, trials: usize, seed: u64) -> Result<LemmaSuiteResult> {
    if trials < 1 {
        return Err(Error::InvalidParameter("trials must be >= 1".into()));
    }
    let mut rng = sampler::rng(seed);
    let cases = match lemma {
        LemmaId::Switching => switching(&mut rng, trials)?,
        LemmaId::AverageDegreeBound => average_degree_bound(&mut rng, trials)?,
        LemmaId::CliqueBound => clique_bound_suite(&mut rng, trials)?,
        LemmaId::Subdivision => subdivision(&mut rng, trials)?,
        LemmaId::IntervalCertificate => certificate_soundness(&mut rng, trials)?,
        LemmaId::Contraction => contraction(&mut rng, trials)?,
    };
    let violations = cases.iter().map(|c| c.violations).sum();
    let min_margin = cases.iter().filter_map(|c| c.min_margin).reduce(f64::min);
    Ok(LemmaSuiteResult {
        lemma,
        trials,
        violations,
        min_margin,
        seed,
        cases,
    })
}

fn q(g: &Graph) -> Result<f64> {
    Ok(q_radius(g, SUITE_TOL)?.q)
}

/// A uniformly random nonempty subset of a nonempty mask.
fn nonempty_subset<R: Rng>(rng: &mut R, mask: u64) -> Vec<usize> {
    loop {
        let pick: Vec<_> = Bits(mask).filter(|_| rng.random_bool(0.5)).collect();
        if !pick.is_empty() {
            return pick;
        }
    }
}

/// Alternates between `u ~ v` and `u ≁ v` so both cases get half the trials.
fn switching<R: Rng>(rng: &mut R, trials: usize) -> Result<Vec<CaseSummary>> {
    let mut adjacent = CaseSummary::new("u adjacent to v");
    let mut apart = CaseSummary::new("u not adjacent to v");
    for i in 0..trials {
        let want_adjacent = i % 2 == 0;
        let (g, (u, v, set, q0)) = sampler::sample_where(rng, |g, rng| {
            let x = q_radius(g, SUITE_TOL).ok()?;
            let pairs: Vec<(usize, usize)> = (0..g.n())
                .flat_map(|u| (0..g.n()).map(move |v| (u, v)))
                .filter(|&(u, v)| {
                    u != v
                        && g.has_edge(u, v) == want_adjacent
                        && x.perron[u] >= x.perron[v]
                        && g.mask(v) & !g.mask(u) & !bit(u) != 0
                })
                .collect();
            let &(u, v) = pairs.choose(rng)?;
            let set = nonempty_subset(rng, g.mask(v) & !g.mask(u) & !bit(u));
            Some((u, v, set, x.q))
        })?;
        let moved = switch(&g, u, v, &set)?;
        let case = if want_adjacent { &mut adjacent } else { &mut apart };
        case.margin(&g, q(&moved)? - q0, STRICT);
    }
    Ok(vec![adjacent, apart])
}

fn average_degree_bound<R: Rng>(rng: &mut R, trials: usize) -> Result<Vec<CaseSummary>> {
    let mut random = CaseSummary::new("random connected graphs");
    for _ in 0..trials {
        let g = sampler::connected(rng);
        check_average_degree(&mut random, &g)?;
    }
    let mut cycles = CaseSummary::new("cycles, bound attained");
    for n in 3..=12 {
        check_average_degree(&mut cycles, &cycle(n)?)?;
    }
    let mut bipartite = CaseSummary::new("complete bipartite, bound attained");
    for s in 1..=5 {
        for t in s..=6 {
            check_average_degree(&mut bipartite, &complete_bipartite(s, t)?)?;
        }
    }
    let mut pendant_cycle = CaseSummary::new("cycle C4 with two pendants, bound strict");
    let g = g_extremal(6, 4)?;
    let fy = feng_yu_bound(&g)?;
    pendant_cycle.margin(&g, fy.bound - q(&g)?, 1e-6);
    pendant_cycle.check(&g, !fy.is_tight());
    Ok(vec![random, cycles, bipartite, pendant_cycle])
}

fn check_average_degree(case: &mut CaseSummary, g: &Graph) -> Result<()> {
    let fy = feng_yu_bound(g)?;
    let q = q(g)?;
    if fy.is_tight() {
        case.check(g, (fy.bound - q).abs() <= EQUALITY_TOL);
    } else {
        case.margin(g, fy.bound - q, BOUND_GAP);
    }
    Ok(())
}

fn clique_bound_suite<R: Rng>(rng: &mut R, trials: usize) -> Result<Vec<CaseSummary>> {
    let mut random = CaseSummary::new("random connected graphs");
    for _ in 0..trials {
        let g = sampler::connected(rng);
        let bound = clique_bound(&g, SUITE_TOL)?;
        let q = q(&g)?;
        if are_isomorphic(&g, &clique_extremal(g.m(), clique_number(&g))?) {
            random.check(&g, (bound - q).abs() <= EQUALITY_TOL);
        } else {
            random.margin(&g, bound - q, BOUND_GAP);
        }
    }
    let mut monotone = CaseSummary::new("bound decreasing in clique size, m <= 30");
    for m in 3..=30 {
        let mut omega = 3;
        while (omega + 1) * omega / 2 <= m {
            let small = clique_extremal(m, omega)?;
            let large = clique_extremal(m, omega + 1)?;
            monotone.margin(&small, q(&small)? - q(&large)?, BOUND_GAP);
            omega += 1;
        }
    }
    Ok(vec![random, monotone])
}

fn subdivision<R: Rng>(rng: &mut R, trials: usize) -> Result<Vec<CaseSummary>> {
    let mut case = CaseSummary::new("cut edge on an internal path");
    for _ in 0..trials {
        let (g, (u, v)) = sampler::sample_where(rng, |g, rng| {
            let candidates: Vec<_> = bridges(g).into_iter().filter(|&(u, v)| on_internal_path(g, u, v)).collect();
            candidates.choose(rng).copied()
        })?;
        let longer = subdivide(&g, u, v)?;
        case.margin(&g, q(&g)? - q(&longer)?, STRICT);
    }
    Ok(vec![case])
}

/// Half the trials bracket the Collatz–Wielandt ratios of a random
/// positive vector; the other half put a random interval around q and
/// test a perturbed Perron vector.
fn certificate_soundness<R: Rng>(rng: &mut R, trials: usize) -> Result<Vec<CaseSummary>> {
    let mut ratios = CaseSummary::new("random vector, ratio bracket");
    let mut perturbed = CaseSummary::new("perturbed Perron vector, random interval");
    for case in [&mut ratios, &mut perturbed] {
        case.accepted = Some(0);
    }
    for i in 0..trials {
        let g = sampler::connected(rng);
        let spectrum = q_radius(&g, SUITE_TOL)?;
        let (y, alpha, beta, case) = if i % 2 == 0 {
            let y = sampler::vector(rng, g.n(), 0.1, 1.0);
            let r: Vec<f64> = apply_q(&g, &y).iter().zip(&y).map(|(a, b)| a / b).collect();
            let lo = r.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = r.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let slack = rng.random_range(0.0..0.5);
            (y, lo - slack, hi + slack, &mut ratios)
        } else {
            let scale = 10f64.powi(-rng.random_range(1..=6));
            let noise = sampler::vector(rng, g.n(), -1.0, 1.0);
            let y: Vec<f64> = spectrum.perron.iter().zip(&noise).map(|(x, e)| x * (1.0 + 0.5 * scale * e)).collect();
            let alpha = spectrum.q - rng.random_range(0.0..0.05);
            let beta = spectrum.q + rng.random_range(0.0..0.05);
            (y, alpha, beta, &mut perturbed)
        };
        match interval_certificate(&g, &y, alpha, beta)?.accepted() {
            Some(cert) => {
                *case.accepted.as_mut().expect("set above") += 1;
                let margin = (spectrum.q - cert.alpha).min(cert.beta - spectrum.q);
                case.margin(&g, margin, 0.0);
            }
            None => case.check(&g, true),
        }
    }
    Ok(vec![ratios, perturbed])
}

/// Alternates between an end of degree 2 and both ends of degree ≥ 3; the
/// latter also checks the explicit witness.
fn contraction<R: Rng>(rng: &mut R, trials: usize) -> Result<Vec<CaseSummary>> {
    let mut thin = CaseSummary::new("an end of degree 2");
    let mut thick = CaseSummary::new("both ends of degree >= 3");
    let mut witness = CaseSummary::new("explicit witness accepted");
    for i in 0..trials {
        let want_thin = i % 2 == 0;
        let (g, (u, v)) = sampler::sample_where(rng, |g, rng| {
            let candidates: Vec<_> = g
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    g.mask(u) & g.mask(v) == 0
                        && (g.degree(u).min(g.degree(v)) == 2) == want_thin
                        && on_internal_path(g, u, v)
                })
                .collect();
            candidates.choose(rng).copied()
        })?;
        let q0 = q(&g)?;
        let q1 = q(&contract(&g, u, v)?)?;
        if want_thin {
            thin.margin(&g, q1 - q0, STRICT);
            continue;
        }
        thick.margin(&g, q1 - q0, STRICT);
        match contraction_certificate(&g, u, v) {
            Ok(ContractionOutcome::Certified(c)) => {
                let agrees = (c.certificate.beta - q1).abs() <= EQUALITY_TOL && q0 < c.certificate.beta;
                witness.record(&g, c.min_strict_slack, agrees && c.min_strict_slack > 0.0);
            }
            Ok(ContractionOutcome::SubdivisionCase) | Err(Error::CertificateFailure(_)) => witness.check(&g, false),
            Err(e) => return Err(e),
        }
    }
    Ok(vec![thin, thick, witness])
}
