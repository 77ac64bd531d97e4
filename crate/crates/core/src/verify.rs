//! Checks a fixture against its published values.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::addcode::{
    classify_by_degrees, classify_by_theorem, graph_code, is_self_dual, min_distance_exact, min_weight_upper_bound,
    ExhaustiveOptions,
};
use crate::fixtures::{fixture, Claim, Fixture, Source};
use crate::formats::{parse_edge_table, render_generator_matrix, FormatError, REPORT_SCHEMA_VERSION};
use crate::metagraph::{
    border, build_metacirculant, build_metacirculant_labeled, metrics, validate_spec, GraphError, MetricsOptions,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    /// Graph properties, self-duality and type; no distance computation.
    Structural,
    /// Adds exact distances where feasible and sampled bounds elsewhere.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not decidable within the configured limits; never counts as a pass.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub expected: String,
    pub measured: String,
    pub source: Option<Source>,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub fixture: String,
    pub level: Level,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// No check failed. Skipped checks do not fail a report.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The report with every runtime set to zero, for comparisons.
    pub fn without_runtimes(&self) -> Self {
        let mut r = self.clone();
        r.checks.iter_mut().for_each(|c| c.runtime_ms = 0);
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub metrics: MetricsOptions,
    pub exhaustive: ExhaustiveOptions,
    /// Random codewords for the sampled check.
    pub samples: u64,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            metrics: MetricsOptions::default(),
            exhaustive: ExhaustiveOptions::default(),
            samples: 1_000_000,
            seed: 0,
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("embedded edge table: {0}")]
    Format(#[from] FormatError),
}

struct Checks {
    list: Vec<Check>,
    clock: Instant,
}

impl Checks {
    fn push(&mut self, name: &'static str, status: CheckStatus, expected: String, measured: String, source: Option<Source>) {
        self.list.push(Check {
            name,
            status,
            expected,
            measured,
            source,
            runtime_ms: self.clock.elapsed().as_millis() as u64,
        });
        self.clock = Instant::now();
    }

    fn compare<T: PartialEq + ToString>(&mut self, name: &'static str, claim: Option<Claim<T>>, measured: Option<T>) {
        let Some(c) = claim else { return };
        let shown = measured.as_ref().map_or("none".to_string(), T::to_string);
        let status = if measured.as_ref() == Some(&c.value) {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.push(name, status, c.value.to_string(), shown, Some(c.source));
    }
}

fn pass_if(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

pub fn verify_fixture(name: &str, level: Level, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    let f = fixture(name).ok_or_else(|| VerifyError::UnknownFixture(name.to_string()))?;
    let mut checks = Checks {
        list: Vec::new(),
        clock: Instant::now(),
    };
    let report = validate_spec(&f.spec);
    checks.push("spec_valid", pass_if(report.is_ok()), "ok".into(), report.to_string(), None);
    if !report.is_ok() {
        return Ok(finish(&f, level, checks));
    }
    let g = build_metacirculant(&f.spec)?;
    checks.compare("edges", f.expected.edges, Some(g.edge_count()));
    if let Some(table) = f.edge_table {
        let printed = parse_edge_table(table)?;
        let built = build_metacirculant_labeled(&f.spec, f.labeling)?;
        let differ = printed
            .edges()
            .iter()
            .filter(|e| !built.has_edge(e.0, e.1))
            .count()
            + built.edges().iter().filter(|e| !printed.has_edge(e.0, e.1)).count();
        let measured = if differ == 0 && printed.n() == built.n() {
            "identical".to_string()
        } else {
            format!("{differ} edges differ")
        };
        checks.push(
            "edge_table",
            pass_if(measured == "identical"),
            "identical".into(),
            measured,
            Some(Source::TableCaption),
        );
    }

    let e = &f.expected;
    if e.valency.is_some() || e.diameter.is_some() || e.girth.is_some() || e.clique.is_some() {
        let m = metrics(
            &g,
            MetricsOptions {
                clique: e.clique.is_some(),
                ..opts.metrics
            },
        );
        checks.compare("valency", e.valency, m.valency);
        checks.compare("diameter", e.diameter, m.diameter);
        checks.compare("girth", e.girth, m.girth);
        if let (Some(c), Some(found)) = (e.clique, &m.clique) {
            if found.exact {
                checks.compare("clique", Some(c), Some(found.size));
            } else {
                checks.push(
                    "clique",
                    CheckStatus::Skipped,
                    c.value.to_string(),
                    format!("≥ {} (budget exhausted)", found.size),
                    Some(c.source),
                );
            }
        }
    }

    let bordered = border(&g);
    let code = graph_code(&g);
    let bcode = graph_code(&bordered);
    let duality = [is_self_dual(&code), is_self_dual(&bcode)];
    checks.push(
        "self_dual",
        pass_if(duality.iter().all(|d| d.self_dual)),
        "both codes self-dual".into(),
        format!(
            "rank {}/{} and {}/{}",
            duality[0].rank,
            code.len(),
            duality[1].rank,
            bcode.len()
        ),
        None,
    );

    let by_degrees = classify_by_degrees(&bordered);
    let by_theorem = classify_by_theorem(&f.spec);
    let expected_type = e.type_class.map_or(by_theorem, |c| c.value);
    checks.push(
        "type_class",
        pass_if(by_degrees == by_theorem && by_degrees == expected_type),
        format!("{expected_type:?}"),
        format!("{by_degrees:?} by degrees, {by_theorem:?} by parameters"),
        e.type_class.map(|c| c.source),
    );

    if let Some(c) = e.bordered_matrix {
        let rendered = render_generator_matrix(&bcode);
        let status = pass_if(rendered == c.value);
        checks.push("bordered_matrix", status, "printed matrix".into(), rendered.trim_end().replace('\n', " / "), Some(c.source));
    }

    if level == Level::Full {
        for (name, which, claim) in [("distance", &code, e.distance), ("bordered_distance", &bcode, e.bordered_distance)] {
            let Some(claim) = claim else { continue };
            match min_distance_exact(which, &opts.exhaustive) {
                Ok(profile) => {
                    checks.compare(name, Some(claim), profile.min_distance);
                    if which == &bcode {
                        let d = profile.min_distance.unwrap_or(0);
                        checks.compare("bordered_count_at_d", e.bordered_count_at_d, Some(profile.count(d)));
                    }
                }
                Err(err) => {
                    checks.push(name, CheckStatus::Skipped, claim.value.to_string(), format!("infeasible: {err}"), Some(claim.source));
                    match min_weight_upper_bound(which, opts.samples, opts.seed) {
                        Ok(bound) => {
                            let lightest = bound.min_distance.unwrap_or(0);
                            checks.push(
                                "sampled_consistency",
                                pass_if(lightest >= claim.value),
                                format!("no word lighter than {}", claim.value),
                                format!("lightest of {} sampled words: {lightest}", bound.total()),
                                Some(claim.source),
                            );
                        }
                        Err(err) => checks.push(
                            "sampled_consistency",
                            CheckStatus::Skipped,
                            format!("no word lighter than {}", claim.value),
                            err.to_string(),
                            Some(claim.source),
                        ),
                    }
                }
            }
        }
    }
    Ok(finish(&f, level, checks))
}

fn finish(f: &Fixture, level: Level, checks: Checks) -> VerificationReport {
    VerificationReport {
        schema_version: REPORT_SCHEMA_VERSION,
        fixture: f.name.to_string(),
        level,
        checks: checks.list,
    }
}
