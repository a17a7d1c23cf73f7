//! Verification jobs over exhaustively enumerated families and seeded
//! random-graph property suites, with serializable reports.

mod audit;
mod lemmas;
pub mod sampler;

use serde::Serialize;

use crate::canon::canonical_graph6;
use crate::constructions::{g_extremal, h_extremal};
use crate::decimal;
use crate::enumeration::{Argmax, EnumConfig, EnumerationStats, Enumerator, FamilySpec, DEFAULT_GAP_TOL};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use audit::{structural_audit, AuditCheck, AuditReport};
pub use lemmas::{run_lemma_suite, CaseSummary, LemmaId, LemmaSuiteResult, DEFAULT_SEED};

/// Gap to the runner-up required for a unique maximum.
pub const UNIQUENESS_GAP: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ConfirmedUnique,
    ConfirmedTied,
    Refuted,
    Exploratory,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::ConfirmedUnique => "confirmed-unique",
            Verdict::ConfirmedTied => "confirmed-tied",
            Verdict::Refuted => "refuted",
            Verdict::Exploratory => "exploratory",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Maximum {
    pub graph6: String,
    #[serde(serialize_with = "decimal::serialize")]
    pub q: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub spec: FamilySpec,
    /// Members within the gap tolerance of the maximum, canonical order.
    pub maxima: Vec<Maximum>,
    #[serde(serialize_with = "decimal::serialize_opt")]
    pub q_max: Option<f64>,
    #[serde(serialize_with = "decimal::serialize_opt")]
    pub runner_up_q: Option<f64>,
    #[serde(serialize_with = "decimal::serialize_opt")]
    pub gap: Option<f64>,
    /// Canonical graph6 of the predicted extremal graph.
    pub expected: Option<String>,
    pub expected_among_maxima: Option<bool>,
    pub verdict: Verdict,
    pub stats: EnumerationStats,
    pub note: Option<String>,
}

impl ExtremalReport {
    pub fn is_confirmed(&self) -> bool {
        matches!(self.verdict, Verdict::ConfirmedUnique)
    }
}

pub const CSV_HEADER: &str = "spec,verdict,q_max,gap,unique_count,wall_time";

/// One CSV summary row. `wall_time` is rendered only when `timing` is set,
/// so rows stay byte-stable by default.
pub fn csv_row(report: &ExtremalReport, timing: bool) -> String {
    let opt = |x: Option<f64>| x.map(decimal::render).unwrap_or_default();
    let wall = if timing {
        decimal::render(report.stats.wall_time.as_secs_f64())
    } else {
        "-".into()
    };
    format!(
        "\"{}\",{},{},{},{},{}",
        report.spec,
        report.verdict.as_str(),
        opt(report.q_max),
        opt(report.gap),
        report.stats.unique,
        wall
    )
}

/// Runs verification jobs against one shared [`Enumerator`].
pub struct Harness {
    enumerator: Enumerator,
    gap_tol: f64,
}

impl Harness {
    pub fn new(cfg: EnumConfig, gap_tol: f64) -> Result<Self> {
        if !(gap_tol >= 0.0) {
            return Err(Error::InvalidParameter(format!("gap tolerance must be >= 0, got {gap_tol}")));
        }
        Ok(Harness {
            enumerator: Enumerator::new(cfg)?,
            gap_tol,
        })
    }

    pub fn with_defaults() -> Result<Self> {
        Self::new(EnumConfig::default(), DEFAULT_GAP_TOL)
    }

    pub fn enumerator(&self) -> &Enumerator {
        &self.enumerator
    }

    /// Compares the q-maximizers over graphs with `m` edges and girth `g`
    /// against `G_{m,g}`.
    pub fn verify_girth_theorem(&self, m: usize, g: usize) -> Result<ExtremalReport> {
        let spec = FamilySpec::girth(m, g)?;
        let expected = g_extremal(m, g)?;
        self.judge(spec, &expected)
    }

    /// Compares the q-maximizers over graphs with `m` edges and
    /// circumference `c` against `H_{m,c}`, for `m ≥ 3c − 4`. Circumference
    /// 3 is answered by the girth-3 job.
    pub fn verify_circumference_theorem(&self, m: usize, c: usize) -> Result<ExtremalReport> {
        if c == 3 {
            let mut report = self.verify_girth_theorem(m, 3)?;
            report.note = Some(
                "circumference 3 delegated to girth 3: such graphs have girth 3 and H_{m,3} = G_{m,3}".into(),
            );
            return Ok(report);
        }
        let spec = FamilySpec::circumference(m, c)?;
        if m + 4 < 3 * c {
            return Err(Error::OutsideTheoremRange(format!(
                "m={m} < 3c-4={} for c={c}; use the explorer for this range",
                3 * c - 4
            )));
        }
        let expected = h_extremal(m, c)?;
        self.judge(spec, &expected)
    }

    /// One exploratory report per `m ∈ [c+1, 3c−5]`. Sizes above the edge
    /// cap are reported without enumeration.
    pub fn explore_open_question(&self, c: usize) -> Result<Vec<ExtremalReport>> {
        if c < 6 {
            return Err(Error::EmptyRange(format!("[c+1, 3c-5] is empty for c={c}; need c >= 6")));
        }
        let cap = self.enumerator.config().edge_cap;
        (c + 1..=3 * c - 5)
            .map(|m| {
                let spec = FamilySpec::circumference(m, c)?;
                let expected = if m + 3 >= 2 * c {
                    Some(canonical_graph6(&h_extremal(m, c)?))
                } else {
                    None
                };
                if m > cap {
                    return Ok(ExtremalReport {
                        spec,
                        maxima: Vec::new(),
                        q_max: None,
                        runner_up_q: None,
                        gap: None,
                        expected,
                        expected_among_maxima: None,
                        verdict: Verdict::Exploratory,
                        stats: EnumerationStats::default(),
                        note: Some(format!("not enumerated: m={m} exceeds the edge cap {cap}")),
                    });
                }
                let (argmax, stats) = self.argmax(&spec)?;
                let among = expected.as_ref().map(|e| argmax.maxima.iter().any(|(g6, _)| g6 == e));
                Ok(report_from(spec, argmax, stats, expected, among, Verdict::Exploratory, None))
            })
            .collect()
    }

    fn argmax(&self, spec: &FamilySpec) -> Result<(Argmax, EnumerationStats)> {
        let family = self.enumerator.enumerate(spec)?;
        let argmax = self.enumerator.argmax_q(&family, self.gap_tol)?;
        Ok((argmax, family.stats))
    }

    fn judge(&self, spec: FamilySpec, expected: &Graph) -> Result<ExtremalReport> {
        let (argmax, stats) = self.argmax(&spec)?;
        let key = canonical_graph6(expected);
        let among = argmax.maxima.iter().any(|(g6, _)| *g6 == key);
        let separated = argmax.gap.is_none_or(|gap| gap > UNIQUENESS_GAP);
        let verdict = match (among, argmax.maxima.len() == 1 && separated) {
            (true, true) => Verdict::ConfirmedUnique,
            (true, false) => Verdict::ConfirmedTied,
            (false, _) => Verdict::Refuted,
        };
        Ok(report_from(spec, argmax, stats, Some(key), Some(among), verdict, None))
    }
}

fn report_from(
    spec: FamilySpec,
    argmax: Argmax,
    stats: EnumerationStats,
    expected: Option<String>,
    expected_among_maxima: Option<bool>,
    verdict: Verdict,
    note: Option<String>,
) -> ExtremalReport {
    ExtremalReport {
        spec,
        maxima: argmax.maxima.into_iter().map(|(graph6, q)| Maximum { graph6, q }).collect(),
        q_max: Some(argmax.q_max),
        runner_up_q: argmax.runner_up_q,
        gap: argmax.gap,
        expected,
        expected_among_maxima,
        verdict,
        stats,
        note,
    }
}
