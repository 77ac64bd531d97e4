//! Randomized search over metacirculant specs for bordered graph codes of
//! high minimum distance.
//!
//! Every candidate is drawn so that it satisfies the metacirculant conditions
//! by construction: each set is the orbit closure of random seed elements
//! under the maps that the conditions require it to be stable under.

mod run;

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::addcode::{
    combination_minimum, graph_code, has_weight_below, min_distance_by_support, min_distance_exact,
    min_weight_upper_bound, CodeError, ExhaustiveOptions, ProfileKind, WeightProfile, DEFAULT_EXHAUSTIVE_LIMIT,
};
use crate::metagraph::{border, build_metacirculant, gcd, pow_mod, MetacirculantSpec};

pub use run::{read_checkpoint, resume_search, run_search, write_records, Checkpoint, SearchOutcome, SearchStats};

pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search config: {0}")]
    Config(String),
    #[error("config parse error: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("multiplier {multiplier} is not a unit mod {ell}")]
    NotUnit { multiplier: usize, ell: usize },
    #[error("checkpoint {path}: {message}")]
    Checkpoint {
        path: String,
        message: String,
        /// Results gathered before the failure.
        partial: Box<SearchOutcome>,
    },
    #[error("cannot resume from {path}: {message}")]
    Resume { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaPolicy {
    /// Trial `t` uses the `t mod φ(ℓ)`-th unit, so every unit is visited in turn.
    AllUnits,
    /// A uniformly random unit per trial.
    RandomUnits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceEngine {
    /// Gray-code sweep of the whole code; full weight distribution.
    Exact,
    /// Exact `d` and `A_d` from low-support enumeration; partial profile.
    Support,
    /// Upper bound from sampled codewords.
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    /// Code length.
    pub n: usize,
    /// Allowed `(m, ℓ)`; `m·ℓ = n − 1` is bordered, `m·ℓ = n` is not. Empty
    /// means every factorization of `n − 1`.
    #[serde(default)]
    pub factorizations: Vec<(usize, usize)>,
    #[serde(default = "default_alpha_policy")]
    pub alpha_policy: AlphaPolicy,
    /// Range of the per-trial probability that an element seeds a set.
    #[serde(default = "default_density")]
    pub set_density: (f64, f64),
    /// Reject when some combination of at most three generators is lighter.
    #[serde(default)]
    pub filter_weight: usize,
    pub trials: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_engine")]
    pub distance_engine: DistanceEngine,
    #[serde(default = "default_top_k")]
    pub top_k: usize,
    /// Trials per batch; a checkpoint is written after every batch.
    #[serde(default = "default_interval")]
    pub checkpoint_interval: u64,
    /// Random codewords per candidate for the sampled engine.
    #[serde(default = "default_samples")]
    pub samples: u64,
    #[serde(default = "default_limit")]
    pub exhaustive_limit: usize,
    /// Cap on codewords visited per candidate by the exact engines.
    #[serde(default)]
    pub budget: Option<u64>,
}

fn default_alpha_policy() -> AlphaPolicy {
    AlphaPolicy::RandomUnits
}
fn default_density() -> (f64, f64) {
    (0.1, 0.5)
}
fn default_engine() -> DistanceEngine {
    DistanceEngine::Support
}
fn default_top_k() -> usize {
    10
}
fn default_interval() -> u64 {
    256
}
fn default_samples() -> u64 {
    100_000
}
fn default_limit() -> usize {
    DEFAULT_EXHAUSTIVE_LIMIT
}

impl SearchConfig {
    /// Defaults for everything except `n` and `trials`.
    pub fn new(n: usize, trials: u64) -> Self {
        SearchConfig {
            n,
            factorizations: Vec::new(),
            alpha_policy: default_alpha_policy(),
            set_density: default_density(),
            filter_weight: 0,
            trials,
            seed: 0,
            distance_engine: default_engine(),
            top_k: default_top_k(),
            checkpoint_interval: default_interval(),
            samples: default_samples(),
            exhaustive_limit: default_limit(),
            budget: None,
        }
    }

    pub fn from_toml_str(text: &str) -> Result<Self, SearchError> {
        let cfg: SearchConfig = toml::from_str(text)?;
        cfg.check()?;
        Ok(cfg)
    }

    pub fn check(&self) -> Result<(), SearchError> {
        let bad = |msg: String| Err(SearchError::Config(msg));
        if self.n < 2 {
            return bad(format!("n = {} is too small", self.n));
        }
        for &(m, ell) in &self.factorizations {
            if m == 0 || ell == 0 || (m * ell != self.n && m * ell + 1 != self.n) {
                return bad(format!("({m}, {ell}) does not give length {}", self.n));
            }
        }
        let (lo, hi) = self.set_density;
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
            return bad(format!("set_density ({lo}, {hi}) is not a range inside [0, 1]"));
        }
        if self.top_k == 0 {
            return bad("top_k must be positive".into());
        }
        if self.checkpoint_interval == 0 {
            return bad("checkpoint_interval must be positive".into());
        }
        Ok(())
    }

    /// The factorizations actually sampled from.
    pub fn resolved_factorizations(&self) -> Vec<(usize, usize)> {
        if !self.factorizations.is_empty() {
            return self.factorizations.clone();
        }
        let v = self.n - 1;
        (1..=v).filter(|m| v % m == 0).map(|m| (m, v / m)).collect()
    }
}

/// Smallest superset of `seeds` closed under `x ↦ multiplier·x`, or under
/// `x ↦ −multiplier·x` when `negate` is set.
pub fn orbit_closure(
    seeds: &BTreeSet<usize>,
    multiplier: usize,
    negate: bool,
    ell: usize,
) -> Result<BTreeSet<usize>, SearchError> {
    if ell == 0 || gcd(multiplier % ell, ell) != 1 {
        return Err(SearchError::NotUnit { multiplier, ell });
    }
    let step = |x: usize| {
        let y = multiplier % ell * x % ell;
        if negate {
            (ell - y) % ell
        } else {
            y
        }
    };
    let mut out = BTreeSet::new();
    for &s in seeds {
        let mut x = s % ell;
        while out.insert(x) {
            x = step(x);
        }
    }
    Ok(out)
}

/// Closure under negation with 0 removed, as `S₀` requires. The flag
/// reports whether a 0 was dropped.
pub fn symmetric_closure(seeds: &BTreeSet<usize>, ell: usize) -> (BTreeSet<usize>, bool) {
    let mut set = orbit_closure(seeds, 1, true, ell).expect("1 is a unit");
    let dropped = set.remove(&0);
    (set, dropped)
}

fn units(ell: usize) -> Vec<usize> {
    (0..ell).filter(|&a| gcd(a, ell) == 1).collect()
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn sample_with(cfg: &SearchConfig, trial: u64, rng: &mut ChaCha8Rng) -> MetacirculantSpec {
    let facts = cfg.resolved_factorizations();
    let (m, ell) = facts[rng.random_range(0..facts.len())];
    let units = units(ell);
    let alpha = match cfg.alpha_policy {
        AlphaPolicy::AllUnits => units[(trial % units.len() as u64) as usize],
        AlphaPolicy::RandomUnits => units[rng.random_range(0..units.len())],
    };
    let (lo, hi) = cfg.set_density;
    let density = if hi > lo { rng.random_range(lo..=hi) } else { lo };
    let mut seeds = || -> BTreeSet<usize> { (0..ell).filter(|_| rng.random_bool(density)).collect() };
    let mut sets = Vec::with_capacity(m / 2 + 1);
    // for S0 the seeds never include 0, so nothing is dropped
    sets.push(symmetric_closure(&seeds().into_iter().filter(|&x| x != 0).collect(), ell).0);
    for k in 1..=m / 2 {
        let set = if m % 2 == 0 && k == m / 2 {
            orbit_closure(&seeds(), pow_mod(alpha, k, ell), true, ell)
        } else {
            orbit_closure(&seeds(), pow_mod(alpha, m, ell), false, ell)
        };
        sets.push(set.expect("powers of a unit are units"));
    }
    MetacirculantSpec { m, ell, alpha, sets }
}

/// The candidate for `trial`; depends only on the config and `trial`.
pub fn sample_spec(cfg: &SearchConfig, trial: u64) -> MetacirculantSpec {
    sample_with(cfg, trial, &mut trial_rng(cfg.seed, trial))
}

/// A scored candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub trial: u64,
    pub spec: MetacirculantSpec,
    pub bordered: bool,
    pub d_result: WeightProfile,
}

impl SearchRecord {
    pub fn d(&self) -> usize {
        self.d_result.min_distance.unwrap_or(0)
    }

    /// `A_d`.
    pub fn count_at_d(&self) -> u64 {
        self.d_result.count(self.d())
    }

    /// `d` and `A_d` are exact, not sampled bounds.
    pub fn is_exact(&self) -> bool {
        self.d_result.kind != ProfileKind::UpperBoundSampled
    }
}

impl Ord for SearchRecord {
    /// Best first: exact before sampled, then larger `d`, then smaller `A_d`,
    /// then spec, then trial.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .is_exact()
            .cmp(&self.is_exact())
            .then(other.d().cmp(&self.d()))
            .then(self.count_at_d().cmp(&other.count_at_d()))
            .then(self.spec.cmp(&other.spec))
            .then(self.bordered.cmp(&other.bordered))
            .then(self.trial.cmp(&other.trial))
    }
}

impl PartialOrd for SearchRecord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rejection {
    /// A combination of at most three generators has this weight.
    Filter { weight: usize },
    /// A codeword lighter than the current floor exists.
    BelowFloor { floor: usize },
    ExhaustiveLimit { generators: usize, limit: usize },
    Budget { required: u64, budget: u64 },
    /// The spec does not give a code of the configured length.
    Length { order: usize, n: usize },
    Invalid { reason: String },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Filter { weight } => write!(f, "filter (weight {weight})"),
            Rejection::BelowFloor { floor } => write!(f, "below floor {floor}"),
            Rejection::ExhaustiveLimit { generators, limit } => {
                write!(f, "exhaustive limit ({generators} > {limit} generators)")
            }
            Rejection::Budget { required, budget } => write!(f, "budget ({required} > {budget})"),
            Rejection::Length { order, n } => write!(f, "length ({order} vertices for n = {n})"),
            Rejection::Invalid { reason } => write!(f, "invalid ({reason})"),
        }
    }
}

fn rejection(e: CodeError) -> Rejection {
    match e {
        CodeError::ExhaustiveLimit { generators, limit } => Rejection::ExhaustiveLimit { generators, limit },
        CodeError::BudgetExceeded { required, budget } => Rejection::Budget { required, budget },
        other => Rejection::Invalid {
            reason: other.to_string(),
        },
    }
}

pub(crate) fn evaluate_trial(
    spec: &MetacirculantSpec,
    cfg: &SearchConfig,
    trial: u64,
    floor: usize,
) -> Result<SearchRecord, Rejection> {
    let bordered = match spec.order() {
        o if o + 1 == cfg.n => true,
        o if o == cfg.n => false,
        order => return Err(Rejection::Length { order, n: cfg.n }),
    };
    let graph = build_metacirculant(spec).map_err(|e| Rejection::Invalid { reason: e.to_string() })?;
    let code = graph_code(&if bordered { border(&graph) } else { graph });
    if cfg.filter_weight > 0 {
        let light = combination_minimum(&code, 3).map_err(rejection)?;
        if light.min_weight < cfg.filter_weight {
            return Err(Rejection::Filter { weight: light.min_weight });
        }
    }
    if floor > 0 && cfg.distance_engine != DistanceEngine::Sampled && has_weight_below(&code, floor).map_err(rejection)?.is_some() {
        return Err(Rejection::BelowFloor { floor });
    }
    let budget = cfg.budget.unwrap_or(u64::MAX);
    let d_result = match cfg.distance_engine {
        DistanceEngine::Exact => min_distance_exact(
            &code,
            &ExhaustiveOptions {
                limit: cfg.exhaustive_limit,
                budget,
            },
        )
        .map_err(rejection)?,
        DistanceEngine::Support => min_distance_by_support(&code, budget).map_err(rejection)?.to_profile(code.len()),
        DistanceEngine::Sampled => {
            let seed = trial_rng(cfg.seed ^ 0x5eed, trial).next_u64();
            min_weight_upper_bound(&code, cfg.samples, seed).map_err(rejection)?
        }
    };
    Ok(SearchRecord {
        trial,
        spec: spec.clone(),
        bordered,
        d_result,
    })
}

/// Scores one spec under `cfg` with no floor (trial index 0).
pub fn evaluate(spec: &MetacirculantSpec, cfg: &SearchConfig) -> Result<SearchRecord, Rejection> {
    evaluate_trial(spec, cfg, 0, 0)
}
