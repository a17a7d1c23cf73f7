use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use spex_core::certificates::bound_report;
use spex_core::constructions as cons;
use spex_core::decimal::{self, render};
use spex_core::enumeration::{Constraint, EnumConfig, EnumerationStats, Enumerator, FamilySpec, DEFAULT_EDGE_CAP, DEFAULT_GAP_TOL};
use spex_core::harness::{self, run_lemma_suite, structural_audit, AuditReport, ExtremalReport, Harness, LemmaId, Verdict};
use spex_core::spectral::{q_radius_with, SolverConfig, DEFAULT_TOLERANCE};
use spex_core::{parse_graph6, to_graph6, Error, Graph};

/// Signless Laplacian spectral radius toolkit.
#[derive(Parser, Debug)]
#[command(name = "spex", version)]
struct Cli {
    #[command(flatten)]
    config: Config,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Config {
    /// Eigensolver residual tolerance.
    #[arg(long, global = true, env = "SPEX_TOLERANCE", default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,

    /// Largest edge count the enumerator accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_EDGE_CAP)]
    edge_cap: usize,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "SPEX_WORKERS")]
    workers: Option<usize>,

    #[arg(long, global = true, env = "SPEX_SEED", default_value_t = harness::DEFAULT_SEED)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Write results to this file instead of stdout.
    #[arg(long = "out", global = true)]
    out_path: Option<PathBuf>,

    /// Include wall-clock times (output is then no longer byte-stable).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectral radius of graphs given as graph6, a file of graph6 lines, or `-` for stdin.
    Q {
        input: String,
        /// Also print the Perron vector.
        #[arg(long)]
        perron: bool,
    },
    /// Print a named graph as graph6.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Exhaustively check an extremal result.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// Report q-maximizers with circumference c for m in [c+1, 3c-5].
    Explore { c: usize },
    /// List all graphs with m edges and no isolated vertices, one graph6 per line.
    Enumerate {
        m: usize,
        #[arg(long, group = "constraint")]
        girth: Option<usize>,
        #[arg(long, group = "constraint")]
        circ: Option<usize>,
        #[arg(long, group = "constraint")]
        circ_at_least: Option<usize>,
    },
    /// Run a seeded property suite (2.1 to 2.6 or its name).
    CheckLemma {
        lemma: String,
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Upper and lower bounds on q for a connected graph.
    Bounds { graph6: String },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Cycle C_g with m-g pendant edges at one vertex.
    Gmg { m: usize, g: usize },
    /// Cycle C_c with a hub joined to every cycle vertex and m-2c+3 pendants.
    Hmc { m: usize, c: usize },
    Cycle { n: usize },
    Path { n: usize },
    Star { t: usize },
    Complete { n: usize },
    /// K_w with t pendant edges at one vertex.
    CliquePendant { w: usize, t: usize },
    CompleteBipartite { s: usize, t: usize },
}

#[derive(Subcommand, Debug)]
enum Target {
    Girth { m: usize, g: usize },
    Circumference { m: usize, c: usize },
}

/// Exit status for a run that completed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Success,
    Failure,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("spex: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::AuditFailure(_) | Error::CertificateFailure(_) | Error::Convergence { .. } => 1,
        _ => 2,
    }
}

fn run(cli: &Cli) -> spex_core::Result<Outcome> {
    let cfg = &cli.config;
    validate(cfg)?;
    let solver = SolverConfig::with_tol(cfg.tolerance);
    let mut out = String::new();
    let outcome = match &cli.command {
        Command::Q { input, perron } => {
            let graphs = read_graphs(input)?;
            let rows = graphs
                .iter()
                .map(|g| spectrum_row(g, &solver, *perron))
                .collect::<spex_core::Result<Vec<_>>>()?;
            out = render_spectra(&rows, cfg.output);
            Outcome::Success
        }
        Command::Construct { family } => {
            let g6 = to_graph6(&construct(family)?);
            out = match cfg.output {
                Output::Json => json_line(&serde_json::json!({ "graph6": g6 })),
                Output::Csv => format!("graph6\n{g6}\n"),
                Output::Text => format!("{g6}\n"),
            };
            Outcome::Success
        }
        Command::Verify { target } => {
            let harness = Harness::new(enum_config(cfg, solver), DEFAULT_GAP_TOL)?;
            let report = match *target {
                Target::Girth { m, g } => harness.verify_girth_theorem(m, g)?,
                Target::Circumference { m, c } => harness.verify_circumference_theorem(m, c)?,
            };
            let audit = (report.verdict == Verdict::ConfirmedUnique).then(|| structural_audit(&report));
            let passed = matches!(audit, Some(Ok(_)));
            out = render_verify(&report, audit.as_ref(), cfg);
            if passed { Outcome::Success } else { Outcome::Failure }
        }
        Command::Explore { c } => {
            let harness = Harness::new(enum_config(cfg, solver), DEFAULT_GAP_TOL)?;
            let reports = harness.explore_open_question(*c)?;
            out = render_reports(&reports, cfg);
            Outcome::Success
        }
        Command::Enumerate { m, girth, circ, circ_at_least } => {
            let constraint = match (girth, circ, circ_at_least) {
                (Some(g), _, _) => Constraint::Girth(*g),
                (_, Some(c), _) => Constraint::Circumference(*c),
                (_, _, Some(c)) => Constraint::CircumferenceAtLeast(*c),
                _ => Constraint::None,
            };
            let spec = FamilySpec::new(*m, constraint)?;
            let family = Enumerator::new(enum_config(cfg, solver))?.enumerate(&spec)?;
            for member in &family.members {
                out.push_str(&member.graph6);
                out.push('\n');
            }
            eprint!("{}", render_stats(&spec, &family.stats, cfg));
            Outcome::Success
        }
        Command::CheckLemma { lemma, trials } => {
            let id: LemmaId = lemma.parse()?;
            let result = run_lemma_suite(id, trials.unwrap_or_else(|| id.default_trials()), cfg.seed)?;
            out = match cfg.output {
                Output::Json => json_line(&result),
                Output::Csv => {
                    let mut s = String::from("lemma,case,trials,violations,min_margin\n");
                    for c in &result.cases {
                        s += &format!(
                            "{},\"{}\",{},{},{}\n",
                            result.lemma,
                            c.case,
                            c.trials,
                            c.violations,
                            c.min_margin.map(render).unwrap_or_default()
                        );
                    }
                    s
                }
                Output::Text => {
                    let mut s = format!(
                        "suite: {} ({})\nseed: {}\ntrials: {}\nviolations: {}\nmin_margin: {}\n",
                        result.lemma,
                        id.alias(),
                        result.seed,
                        result.trials,
                        result.violations,
                        result.min_margin.map(render).unwrap_or_else(|| "-".into())
                    );
                    for c in &result.cases {
                        s += &format!(
                            "  {}: {} checks, {} violations, min margin {}\n",
                            c.case,
                            c.trials,
                            c.violations,
                            c.min_margin.map(render).unwrap_or_else(|| "-".into())
                        );
                    }
                    s
                }
            };
            if result.passed() { Outcome::Success } else { Outcome::Failure }
        }
        Command::Bounds { graph6 } => {
            let g = parse_graph6(graph6)?;
            let report = bound_report(&g, cfg.tolerance)?;
            out = match cfg.output {
                Output::Json => json_line(&report),
                Output::Csv => format!(
                    "q,feng_yu,clique_bound,star_lower,clique_number\n{},{},{},{},{}\n",
                    render(report.q),
                    render(report.feng_yu),
                    render(report.clique_bound),
                    render(report.star_lower),
                    report.clique_number
                ),
                Output::Text => {
                    let e = &report.equality;
                    let tight: Vec<&str> = [
                        (e.regular, "regular"),
                        (e.semiregular_bipartite, "semiregular bipartite"),
                        (e.star, "star"),
                        (e.clique_extremal, "clique with pendants"),
                    ]
                    .iter()
                    .filter(|(on, _)| *on)
                    .map(|(_, name)| *name)
                    .collect();
                    format!(
                        "q: {}\nfeng_yu: {}\nclique_bound: {}\nstar_lower: {}\nclique_number: {}\nequality: {}\n",
                        render(report.q),
                        render(report.feng_yu),
                        render(report.clique_bound),
                        render(report.star_lower),
                        report.clique_number,
                        if tight.is_empty() { "none".into() } else { tight.join(", ") }
                    )
                }
            };
            Outcome::Success
        }
    };
    emit(cfg, &out)?;
    Ok(outcome)
}

fn validate(cfg: &Config) -> spex_core::Result<()> {
    if !(cfg.tolerance > 0.0) || !cfg.tolerance.is_finite() {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {}", cfg.tolerance)));
    }
    if cfg.edge_cap < 1 {
        return Err(Error::InvalidParameter("edge cap must be >= 1".into()));
    }
    if cfg.workers == Some(0) {
        return Err(Error::InvalidParameter("workers must be >= 1".into()));
    }
    Ok(())
}

fn enum_config(cfg: &Config, solver: SolverConfig) -> EnumConfig {
    EnumConfig {
        edge_cap: cfg.edge_cap,
        workers: cfg.workers,
        solver,
    }
}

fn emit(cfg: &Config, text: &str) -> spex_core::Result<()> {
    let io_err = |e: io::Error| Error::InvalidInput(format!("cannot write output: {e}"));
    match &cfg.out_path {
        Some(path) => fs::write(path, text).map_err(io_err),
        None => io::stdout().lock().write_all(text.as_bytes()).map_err(io_err),
    }
}

fn read_graphs(input: &str) -> spex_core::Result<Vec<Graph>> {
    let read_err = |e: io::Error| Error::InvalidInput(format!("cannot read {input}: {e}"));
    if input == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(read_err)?;
        return spex_core::graph6::parse_graph6_lines(&text);
    }
    let path = Path::new(input);
    if !input.is_empty() && path.is_file() {
        let text = fs::read_to_string(path).map_err(read_err)?;
        return spex_core::graph6::parse_graph6_lines(&text);
    }
    Ok(vec![parse_graph6(input)?])
}

fn construct(family: &Family) -> spex_core::Result<Graph> {
    match *family {
        Family::Gmg { m, g } => cons::g_extremal(m, g),
        Family::Hmc { m, c } => cons::h_extremal(m, c),
        Family::Cycle { n } => cons::cycle(n),
        Family::Path { n } => cons::path(n),
        Family::Star { t } => cons::star(t),
        Family::Complete { n } => cons::complete(n),
        Family::CliquePendant { w, t } => cons::clique_with_pendants(w, t),
        Family::CompleteBipartite { s, t } => cons::complete_bipartite(s, t),
    }
}

#[derive(Serialize)]
struct SpectrumRow {
    graph6: String,
    n: usize,
    m: usize,
    #[serde(serialize_with = "decimal::serialize")]
    q: f64,
    #[serde(serialize_with = "decimal::serialize")]
    residual: f64,
    iterations: usize,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_perron")]
    perron: Option<Vec<f64>>,
}

fn serialize_perron<S: serde::Serializer>(x: &Option<Vec<f64>>, s: S) -> Result<S::Ok, S::Error> {
    decimal::serialize_vec(x.as_deref().unwrap_or_default(), s)
}

fn spectrum_row(g: &Graph, solver: &SolverConfig, perron: bool) -> spex_core::Result<SpectrumRow> {
    let r = q_radius_with(g, solver)?;
    Ok(SpectrumRow {
        graph6: to_graph6(g),
        n: g.n(),
        m: g.m(),
        q: r.q,
        residual: r.residual,
        iterations: r.iterations,
        perron: perron.then_some(r.perron),
    })
}

fn render_spectra(rows: &[SpectrumRow], output: Output) -> String {
    let perron_text = |p: &[f64]| p.iter().map(|&x| render(x)).collect::<Vec<_>>().join(" ");
    match output {
        Output::Json if rows.len() == 1 => json_line(&rows[0]),
        Output::Json => json_line(&rows),
        Output::Csv => {
            let mut s = String::from("graph6,n,m,q,residual,iterations,perron\n");
            for r in rows {
                s += &format!(
                    "{},{},{},{},{},{},{}\n",
                    r.graph6,
                    r.n,
                    r.m,
                    render(r.q),
                    render(r.residual),
                    r.iterations,
                    r.perron.as_deref().map(perron_text).unwrap_or_default()
                );
            }
            s
        }
        Output::Text => {
            let mut s = String::new();
            for r in rows {
                s += &format!("{} q = {} (residual {})\n", r.graph6, render(r.q), render(r.residual));
                if let Some(p) = &r.perron {
                    s += &format!("  perron: {}\n", perron_text(p));
                }
            }
            s
        }
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn with_timing(mut value: Value, stats: &EnumerationStats, timing: bool) -> Value {
    if timing {
        if let Some(obj) = value.get_mut("stats").and_then(Value::as_object_mut) {
            obj.insert("wall_time".into(), Value::String(render(stats.wall_time.as_secs_f64())));
        }
    }
    value
}

fn report_value(report: &ExtremalReport, timing: bool) -> Value {
    with_timing(serde_json::to_value(report).expect("reports serialize"), &report.stats, timing)
}

fn render_verify(report: &ExtremalReport, audit: Option<&spex_core::Result<AuditReport>>, cfg: &Config) -> String {
    let audit_value = match audit {
        None => Value::Null,
        Some(Ok(a)) => serde_json::to_value(a).expect("audit serializes"),
        Some(Err(e)) => serde_json::json!({ "error": e.to_string() }),
    };
    match cfg.output {
        Output::Json => {
            let mut value = report_value(report, cfg.timing);
            value.as_object_mut().expect("object").insert("audit".into(), audit_value);
            json_line(&value)
        }
        Output::Csv => format!("{}\n{}\n", harness::CSV_HEADER, harness::csv_row(report, cfg.timing)),
        Output::Text => {
            let mut s = report_text(report, cfg.timing);
            s += &match audit {
                None => "audit: skipped\n".into(),
                Some(Ok(a)) => format!("audit: pass ({} checks)\n", a.checks.len()),
                Some(Err(e)) => format!("audit: FAIL ({e})\n"),
            };
            s
        }
    }
}

fn render_reports(reports: &[ExtremalReport], cfg: &Config) -> String {
    match cfg.output {
        Output::Json => json_line(&reports.iter().map(|r| report_value(r, cfg.timing)).collect::<Vec<_>>()),
        Output::Csv => {
            let mut s = format!("{}\n", harness::CSV_HEADER);
            for r in reports {
                s += &harness::csv_row(r, cfg.timing);
                s.push('\n');
            }
            s
        }
        Output::Text => reports.iter().map(|r| report_text(r, cfg.timing)).collect::<Vec<_>>().join("\n"),
    }
}

fn report_text(r: &ExtremalReport, timing: bool) -> String {
    let opt = |x: Option<f64>| x.map(render).unwrap_or_else(|| "-".into());
    let mut s = format!("family: {}\nverdict: {}\n", r.spec, r.verdict.as_str());
    s += &format!("q_max: {}\nrunner_up_q: {}\ngap: {}\n", opt(r.q_max), opt(r.runner_up_q), opt(r.gap));
    for m in &r.maxima {
        s += &format!("maximum: {} q = {}\n", m.graph6, render(m.q));
    }
    if let Some(e) = &r.expected {
        s += &format!("expected: {e}");
        if let Some(among) = r.expected_among_maxima {
            s += if among { " (among maxima)" } else { " (not among maxima)" };
        }
        s.push('\n');
    }
    s += &format!("generated: {} unique: {} matching: {}\n", r.stats.generated, r.stats.unique, r.stats.matching);
    if timing {
        s += &format!("wall_time: {}\n", render(r.stats.wall_time.as_secs_f64()));
    }
    if let Some(note) = &r.note {
        s += &format!("note: {note}\n");
    }
    s
}

fn render_stats(spec: &FamilySpec, stats: &EnumerationStats, cfg: &Config) -> String {
    match cfg.output {
        Output::Json => {
            let value = serde_json::json!({ "spec": spec, "stats": stats });
            json_line(&with_timing(value, stats, cfg.timing))
        }
        Output::Csv => format!(
            "spec,generated,unique,matching\n\"{spec}\",{},{},{}\n",
            stats.generated, stats.unique, stats.matching
        ),
        Output::Text => {
            let mut s = format!(
                "{spec}: generated {} unique {} matching {}",
                stats.generated, stats.unique, stats.matching
            );
            if cfg.timing {
                s += &format!(" in {}s", render(stats.wall_time.as_secs_f64()));
            }
            s + "\n"
        }
    }
}
