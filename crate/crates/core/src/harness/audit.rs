//! Structural checks on a confirmed extremal graph.

use serde::Serialize;

use super::{ExtremalReport, Verdict};
use crate::enumeration::Constraint;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::graph6::parse_graph6;
use crate::structure::{cycles_of_length, is_connected, longest_cycle};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditCheck {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub graph6: String,
    pub checks: Vec<AuditCheck>,
}

/// Checks the winner of a confirmed-unique report:
///
/// * it is connected;
/// * girth runs: some shortest cycle carries every other edge as a pendant
///   edge at one common cycle vertex;
/// * circumference runs: some longest cycle has a vertex adjacent to every
///   other vertex of the graph, every chord of the cycle is incident to it,
///   and the cycle's vertices cover every edge.
///
/// Any failed check is an [`Error::AuditFailure`].
pub fn structural_audit(report: &ExtremalReport) -> Result<AuditReport> {
    if report.verdict != Verdict::ConfirmedUnique {
        return Err(Error::AuditFailure(format!(
            "report verdict is {}, not confirmed-unique",
            report.verdict.as_str()
        )));
    }
    let [winner] = report.maxima.as_slice() else {
        return Err(Error::AuditFailure(format!("{} maxima, expected one", report.maxima.len())));
    };
    let g = parse_graph6(&winner.graph6)?;
    let mut checks = vec![AuditCheck {
        name: "connected",
        passed: is_connected(&g),
    }];
    match report.spec.constraint {
        Constraint::Girth(len) => checks.push(AuditCheck {
            name: "pendants at one cycle vertex",
            passed: cycles_of_length(&g, len).iter().any(|c| pendants_at_one_vertex(&g, c)),
        }),
        Constraint::Circumference(_) | Constraint::CircumferenceAtLeast(_) => {
            let cycle = longest_cycle(&g).unwrap_or_default();
            let on_cycle: u64 = cycle.iter().fold(0, |acc, &v| acc | bit(v));
            let hub = cycle.iter().copied().find(|&u| g.mask(u) | bit(u) == g.vertex_mask());
            checks.push(AuditCheck {
                name: "dominating vertex on a longest cycle",
                passed: hub.is_some(),
            });
            checks.push(AuditCheck {
                name: "chords incident to the dominating vertex",
                passed: hub.is_some_and(|h| chords(&g, &cycle).all(|(a, b)| a == h || b == h)),
            });
            checks.push(AuditCheck {
                name: "cycle is a vertex cover",
                passed: !cycle.is_empty() && g.edges().iter().all(|&(a, b)| (bit(a) | bit(b)) & on_cycle != 0),
            });
        }
        Constraint::None => {}
    }
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).map(|c| c.name).collect();
    if !failed.is_empty() {
        return Err(Error::AuditFailure(format!("{}: {}", winner.graph6, failed.join(", "))));
    }
    Ok(AuditReport {
        graph6: winner.graph6.clone(),
        checks,
    })
}

fn cycle_edges(cycle: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..cycle.len()).map(move |i| {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        (a.min(b), a.max(b))
    })
}

fn chords<'a>(g: &'a Graph, cycle: &'a [usize]) -> impl Iterator<Item = (usize, usize)> + 'a {
    let on_cycle: u64 = cycle.iter().fold(0, |acc, &v| acc | bit(v));
    g.edges().iter().copied().filter(move |&(a, b)| {
        on_cycle & bit(a) != 0 && on_cycle & bit(b) != 0 && !cycle_edges(cycle).any(|e| e == (a, b))
    })
}

fn pendants_at_one_vertex(g: &Graph, cycle: &[usize]) -> bool {
    let mut hub = None;
    for &(a, b) in g.edges() {
        if cycle_edges(cycle).any(|e| e == (a, b)) {
            continue;
        }
        let center = match (g.degree(a), g.degree(b)) {
            (1, _) => b,
            (_, 1) => a,
            _ => return false,
        };
        if *hub.get_or_insert(center) != center || !cycle.contains(&center) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_graph6;
    use crate::constructions::h_extremal;
    use crate::enumeration::{EnumerationStats, FamilySpec};
    use crate::harness::Maximum;

    fn report(spec: FamilySpec, g6: String, verdict: Verdict) -> ExtremalReport {
        ExtremalReport {
            spec,
            maxima: vec![Maximum { graph6: g6, q: 0.0 }],
            q_max: None,
            runner_up_q: None,
            gap: None,
            expected: None,
            expected_among_maxima: None,
            verdict,
            stats: EnumerationStats::default(),
            note: None,
        }
    }

    #[test]
    fn extremal_graphs_pass() {
        let g6 = canonical_graph6(&h_extremal(11, 5).unwrap());
        let r = structural_audit(&report(FamilySpec::circumference(11, 5).unwrap(), g6, Verdict::ConfirmedUnique)).unwrap();
        assert_eq!(r.checks.len(), 4);
    }

    #[test]
    fn wrong_winner_fails() {
        // two pendants at different cycle vertices
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]).unwrap();
        let r = report(FamilySpec::girth(6, 4).unwrap(), canonical_graph6(&g), Verdict::ConfirmedUnique);
        assert!(matches!(structural_audit(&r), Err(Error::AuditFailure(_))));
    }

    #[test]
    fn refuted_report_is_rejected() {
        let r = report(FamilySpec::girth(4, 4).unwrap(), "Cr".into(), Verdict::Refuted);
        assert!(matches!(structural_audit(&r), Err(Error::AuditFailure(_))));
    }
}
