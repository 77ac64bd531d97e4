//! `metacode`: build metacirculant graphs, their codes, and check fixtures.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on usage or input errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use metacode::addcode::{
    classify_by_degrees, classify_by_theorem, graph_code, min_distance_by_support, min_distance_exact,
    min_weight_upper_bound, AdditiveCode, ExhaustiveOptions, WeightProfile, DEFAULT_EXHAUSTIVE_LIMIT,
};
use metacode::fixtures;
use metacode::formats::{
    parse_edge_table, parse_generator_matrix, parse_spec_toml, render_edge_table, render_generator_matrix,
    ProfileReport,
};
use metacode::metagraph::{
    border, build_metacirculant_labeled, metrics, validate_spec, Labeling, MetacirculantSpec, MetricsOptions,
    SimpleGraph,
};
use metacode::searcher::{resume_search, run_search, write_records, SearchConfig, SearchError};
use metacode::verify::{verify_fixture, CheckStatus, Level, VerifyOptions};

const LIMIT_ENV: &str = "METACODE_EXHAUSTIVE_LIMIT";

#[derive(Parser)]
#[command(name = "metacode", version, about = "Metacirculant graph codes over GF(4)")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Codewords an exact engine may visit before giving up.
    #[arg(long, global = true, value_name = "ITER")]
    budget: Option<u64>,
    /// Seed for sampled computations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelingArg {
    BlockMajor,
    OffsetMajor,
}

impl From<LabelingArg> for Labeling {
    fn from(l: LabelingArg) -> Self {
        match l {
            LabelingArg::BlockMajor => Labeling::BlockMajor,
            LabelingArg::OffsetMajor => Labeling::OffsetMajor,
        }
    }
}

#[derive(clap::Args)]
struct GraphInput {
    /// Spec (.toml), edge table, or fixture name.
    input: String,
    /// Add a vertex adjacent to all others, numbered first.
    #[arg(long)]
    bordered: bool,
    #[arg(long, value_enum, default_value = "block-major")]
    labeling: LabelingArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    EdgeTable,
    GeneratorMatrix,
    Report,
}

#[derive(Subcommand)]
enum Command {
    /// Check the metacirculant conditions of a spec.
    Validate { spec: PathBuf },
    /// Print the edge table of the graph.
    BuildGraph(GraphInput),
    /// Degree, diameter, girth and clique number as JSON.
    Metrics {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        no_clique: bool,
        #[arg(long, default_value_t = 50_000_000)]
        clique_budget: u64,
    },
    /// Print the generator matrix `Γ + ωI`.
    Code(GraphInput),
    /// Minimum distance of a code (generator matrix, spec, edge table or fixture).
    Distance {
        #[command(flatten)]
        graph: GraphInput,
        /// Enumerate every codeword (default).
        #[arg(long, conflicts_with_all = ["sample", "support"])]
        exact: bool,
        /// Upper bound from N random codewords.
        #[arg(long, value_name = "N")]
        sample: Option<u64>,
        /// Exact d and A_d from low-support words (graph codes only).
        #[arg(long, conflicts_with = "sample")]
        support: bool,
        /// Print the JSON report instead of a summary line.
        #[arg(long)]
        json: bool,
    },
    /// Type I / Type II class of the bordered code.
    Classify { spec: PathBuf },
    /// Randomized search; records go to stdout as JSON lines.
    Search {
        config: PathBuf,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Continue from the checkpoint instead of starting over.
        #[arg(long, requires = "checkpoint")]
        resume: bool,
    },
    /// Check a fixture against its published values.
    Verify {
        fixture: String,
        /// Include distance computations.
        #[arg(long)]
        full: bool,
        /// Random codewords for the sampled check.
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long)]
        json: bool,
    },
    /// Write an edge table, generator matrix or JSON distance report.
    Export {
        #[arg(value_enum)]
        kind: ExportKind,
        #[command(flatten)]
        graph: GraphInput,
        /// For reports: sample N codewords instead of enumerating.
        #[arg(long, value_name = "N")]
        sample: Option<u64>,
    },
}

#[derive(Debug)]
enum Failure {
    /// Bad arguments or unreadable input.
    Usage(String),
    /// The input was understood but a check did not pass.
    Check(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// A spec file, or the spec of a fixture when no such file exists.
fn read_spec(path: &Path) -> Result<MetacirculantSpec, Failure> {
    if !path.exists() {
        if let Some(f) = path.to_str().and_then(fixtures::fixture) {
            return Ok(f.spec);
        }
    }
    parse_spec_toml(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

enum Input {
    Spec(MetacirculantSpec),
    Graph(SimpleGraph),
    Code(AdditiveCode),
}

fn looks_like_edge_table(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_none_or(|l| l.starts_with('(') || l.starts_with('n'))
}

fn load(input: &str) -> Result<Input, Failure> {
    let path = Path::new(input);
    if !path.exists() {
        return match fixtures::fixture(input) {
            Some(f) => Ok(Input::Spec(f.spec)),
            None => Err(usage(format!("{input}: no such file or fixture"))),
        };
    }
    let text = read(path)?;
    let context = |e: metacode::formats::FormatError| usage(format!("{input}: {e}"));
    if path.extension().is_some_and(|e| e == "toml") {
        return parse_spec_toml(&text).map(Input::Spec).map_err(context);
    }
    if looks_like_edge_table(&text) {
        return parse_edge_table(&text).map(Input::Graph).map_err(context);
    }
    parse_generator_matrix(&text).map(Input::Code).map_err(context)
}

impl GraphInput {
    fn graph(&self) -> Result<SimpleGraph, Failure> {
        let g = match load(&self.input)? {
            Input::Spec(spec) => build_metacirculant_labeled(&spec, self.labeling.into()).map_err(|e| Failure::Check(e.to_string()))?,
            Input::Graph(g) => g,
            Input::Code(_) => return Err(usage(format!("{}: expected a graph, found a generator matrix", self.input))),
        };
        Ok(if self.bordered { border(&g) } else { g })
    }

    fn code(&self) -> Result<AdditiveCode, Failure> {
        if let Input::Code(code) = load(&self.input)? {
            if self.bordered {
                return Err(usage("--bordered applies to graphs, not generator matrices"));
            }
            return Ok(code);
        }
        Ok(graph_code(&self.graph()?))
    }
}

fn exhaustive_options(budget: Option<u64>) -> Result<ExhaustiveOptions, Failure> {
    let limit = match std::env::var(LIMIT_ENV) {
        Ok(v) => v.parse().map_err(|_| usage(format!("{LIMIT_ENV}={v} is not a number")))?,
        Err(_) => DEFAULT_EXHAUSTIVE_LIMIT,
    };
    Ok(ExhaustiveOptions {
        limit,
        budget: budget.unwrap_or(u64::MAX),
    })
}

struct Computed {
    profile: WeightProfile,
    millis: u64,
    sampled: Option<u64>,
}

fn compute_distance(cli: &Cli, code: &AdditiveCode, sample: Option<u64>, support: bool) -> Result<Computed, Failure> {
    let start = Instant::now();
    let profile = match (sample, support) {
        (Some(n), _) => min_weight_upper_bound(code, n, cli.seed),
        (None, true) => min_distance_by_support(code, cli.budget.unwrap_or(u64::MAX)).map(|s| s.to_profile(code.len())),
        (None, false) => min_distance_exact(code, &exhaustive_options(cli.budget)?),
    }
    .map_err(|e| Failure::Check(e.to_string()))?;
    Ok(Computed {
        profile,
        millis: start.elapsed().as_millis() as u64,
        sampled: sample,
    })
}

fn report_json(c: &Computed, seed: u64) -> String {
    let report = ProfileReport::new(&c.profile, c.millis, c.sampled.map(|_| seed), c.sampled);
    serde_json::to_string_pretty(&report).expect("report serializes")
}

fn emit(text: &str) -> Outcome {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes()).map_err(usage)?;
    if !text.ends_with('\n') {
        out.write_all(b"\n").map_err(usage)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { spec } => {
            let spec = read_spec(spec)?;
            let report = validate_spec(&spec);
            if report.is_ok() {
                emit(&format!("valid: {spec}"))
            } else {
                Err(Failure::Check(format!("{spec}: {report}")))
            }
        }
        Command::BuildGraph(g) => emit(&render_edge_table(&g.graph()?)),
        Command::Metrics {
            graph,
            no_clique,
            clique_budget,
        } => {
            let g = graph.graph()?;
            let m = metrics(
                &g,
                MetricsOptions {
                    clique: !no_clique,
                    clique_budget: *clique_budget,
                },
            );
            let clique = m.clique.as_ref().map(|c| {
                json!({
                    "size": c.size,
                    "exact": c.exact,
                    "nodes": c.nodes,
                    "witness": c.witness.iter().map(|v| v + 1).collect::<Vec<_>>(),
                })
            });
            let value = json!({
                "n": m.n,
                "edges": m.edge_count,
                "valency": m.valency,
                "diameter": m.diameter,
                "girth": m.girth,
                "clique": clique,
                "degree_sequence": m.degree_sequence,
            });
            emit(&serde_json::to_string_pretty(&value).expect("metrics serialize"))
        }
        Command::Code(g) => emit(&render_generator_matrix(&graph_code(&g.graph()?))),
        Command::Distance {
            graph,
            exact: _,
            sample,
            support,
            json,
        } => {
            let code = graph.code()?;
            let c = compute_distance(cli, &code, *sample, *support)?;
            if *json {
                return emit(&report_json(&c, cli.seed));
            }
            let d = c.profile.min_distance.unwrap_or(0);
            let bound = if c.sampled.is_some() { "≤" } else { "=" };
            emit(&format!(
                "n={} d{bound}{d} A{d}={} kind={}",
                code.len(),
                c.profile.count(d),
                c.profile.kind
            ))
        }
        Command::Classify { spec } => {
            let spec = read_spec(spec)?;
            let g = build_metacirculant_labeled(&spec, Labeling::BlockMajor).map_err(|e| Failure::Check(e.to_string()))?;
            let by_degrees = classify_by_degrees(&border(&g));
            let by_theorem = classify_by_theorem(&spec);
            emit(&format!("{by_degrees:?} (degrees), {by_theorem:?} (parameters)"))?;
            if by_degrees == by_theorem {
                Ok(())
            } else {
                Err(Failure::Check("classifications disagree".into()))
            }
        }
        Command::Search {
            config,
            checkpoint,
            resume,
        } => {
            let cfg = SearchConfig::from_toml_str(&read(config)?).map_err(usage)?;
            let result = if *resume {
                resume_search(&cfg, checkpoint.as_deref().expect("clap requires --checkpoint"))
            } else {
                run_search(&cfg, checkpoint.as_deref())
            };
            let outcome = match result {
                Ok(o) => o,
                Err(SearchError::Checkpoint { path, message, partial }) => {
                    let _ = write_records(&partial.records, io::stdout().lock());
                    return Err(Failure::Check(format!(
                        "checkpoint {path}: {message} (stopped after {} trials)",
                        partial.next_trial
                    )));
                }
                Err(e @ (SearchError::Config(_) | SearchError::Toml(_) | SearchError::Resume { .. })) => {
                    return Err(usage(e))
                }
                Err(e) => return Err(Failure::Check(e.to_string())),
            };
            write_records(&outcome.records, io::stdout().lock()).map_err(usage)?;
            let s = &outcome.stats;
            eprintln!(
                "{} trials: {} scored, {} filtered, {} below floor, {} infeasible",
                s.evaluated, s.accepted, s.filtered, s.below_floor, s.infeasible
            );
            Ok(())
        }
        Command::Verify {
            fixture,
            full,
            samples,
            json,
        } => {
            let level = if *full { Level::Full } else { Level::Structural };
            let opts = VerifyOptions {
                exhaustive: exhaustive_options(cli.budget)?,
                samples: *samples,
                seed: cli.seed,
                ..Default::default()
            };
            let report = verify_fixture(fixture, level, &opts).map_err(usage)?;
            if *json {
                emit(&serde_json::to_string_pretty(&report).expect("report serializes"))?;
            } else {
                for c in &report.checks {
                    let status = match c.status {
                        CheckStatus::Pass => "PASS",
                        CheckStatus::Fail => "FAIL",
                        CheckStatus::Skipped => "SKIP",
                    };
                    emit(&format!(
                        "{status} {:<20} expected {} | measured {} ({} ms)",
                        c.name, c.expected, c.measured, c.runtime_ms
                    ))?;
                }
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Check(format!("{fixture}: verification failed")))
            }
        }
        Command::Export { kind, graph, sample } => match kind {
            ExportKind::EdgeTable => emit(&render_edge_table(&graph.graph()?)),
            ExportKind::GeneratorMatrix => emit(&render_generator_matrix(&graph.code()?)),
            ExportKind::Report => {
                let code = graph.code()?;
                let c = compute_distance(cli, &code, *sample, false)?;
                emit(&report_json(&c, cli.seed))
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
