//! Batched search driver with top-K merging and JSON checkpoints.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    evaluate_trial, sample_spec, DistanceEngine, Rejection, SearchConfig, SearchError, SearchRecord,
    CHECKPOINT_VERSION,
};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub evaluated: u64,
    pub accepted: u64,
    pub filtered: u64,
    pub below_floor: u64,
    pub infeasible: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    /// Best first, at most `top_k`, one per spec.
    pub records: Vec<SearchRecord>,
    /// First trial not yet evaluated.
    pub next_trial: u64,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub version: u32,
    pub seed: u64,
    pub next_trial: u64,
    pub config: SearchConfig,
    pub best: Vec<SearchRecord>,
    pub stats: SearchStats,
}

fn insert(records: &mut Vec<SearchRecord>, rec: SearchRecord, top_k: usize) {
    match records.iter().position(|r| r.spec == rec.spec && r.bordered == rec.bordered) {
        Some(pos) if rec < records[pos] => records[pos] = rec,
        Some(_) => {}
        None => records.push(rec),
    }
    records.sort();
    records.truncate(top_k);
}

/// Candidates lighter than this cannot enter a full top-K list.
fn floor(cfg: &SearchConfig, records: &[SearchRecord]) -> usize {
    if cfg.distance_engine == DistanceEngine::Sampled || records.len() < cfg.top_k {
        return 0;
    }
    records.last().map_or(0, SearchRecord::d)
}

fn write_checkpoint(path: &Path, cfg: &SearchConfig, state: &SearchOutcome) -> io::Result<()> {
    let cp = Checkpoint {
        version: CHECKPOINT_VERSION,
        seed: cfg.seed,
        next_trial: state.next_trial,
        config: cfg.clone(),
        best: state.records.clone(),
        stats: state.stats.clone(),
    };
    let mut text = serde_json::to_string_pretty(&cp).map_err(io::Error::other)?;
    text.push('\n');
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

pub fn read_checkpoint(path: &Path) -> Result<Checkpoint, SearchError> {
    let fail = |message: String| SearchError::Resume {
        path: path.display().to_string(),
        message,
    };
    let text = fs::read_to_string(path).map_err(|e| fail(e.to_string()))?;
    let cp: Checkpoint = serde_json::from_str(&text).map_err(|e| fail(e.to_string()))?;
    if cp.version != CHECKPOINT_VERSION {
        return Err(fail(format!("unsupported checkpoint version {}", cp.version)));
    }
    Ok(cp)
}

fn drive(cfg: &SearchConfig, mut state: SearchOutcome, checkpoint: Option<&Path>) -> Result<SearchOutcome, SearchError> {
    let interval = cfg.checkpoint_interval;
    while state.next_trial < cfg.trials {
        let start = state.next_trial;
        // batches end on multiples of the interval, so a resumed run lines up
        let end = ((start / interval + 1) * interval).min(cfg.trials);
        let floor = floor(cfg, &state.records);
        let results: Vec<Result<SearchRecord, Rejection>> = (start..end)
            .into_par_iter()
            .map(|t| evaluate_trial(&sample_spec(cfg, t), cfg, t, floor))
            .collect();
        for r in results {
            state.stats.evaluated += 1;
            match r {
                Ok(rec) => {
                    state.stats.accepted += 1;
                    insert(&mut state.records, rec, cfg.top_k);
                }
                Err(Rejection::Filter { .. }) => state.stats.filtered += 1,
                Err(Rejection::BelowFloor { .. }) => state.stats.below_floor += 1,
                Err(_) => state.stats.infeasible += 1,
            }
        }
        state.next_trial = end;
        if let Some(path) = checkpoint {
            if let Err(e) = write_checkpoint(path, cfg, &state) {
                return Err(SearchError::Checkpoint {
                    path: path.display().to_string(),
                    message: e.to_string(),
                    partial: Box::new(state),
                });
            }
        }
    }
    Ok(state)
}

/// Runs trials `0 .. cfg.trials`, writing a checkpoint after every batch
/// when a path is given. The result depends only on `cfg`.
pub fn run_search(cfg: &SearchConfig, checkpoint: Option<&Path>) -> Result<SearchOutcome, SearchError> {
    cfg.check()?;
    let state = SearchOutcome::default();
    if cfg.trials == 0 {
        if let Some(path) = checkpoint {
            write_checkpoint(path, cfg, &state).map_err(|e| SearchError::Checkpoint {
                path: path.display().to_string(),
                message: e.to_string(),
                partial: Box::new(state.clone()),
            })?;
        }
        return Ok(state);
    }
    drive(cfg, state, checkpoint)
}

/// Continues the run stored at `checkpoint` up to `cfg.trials`. The config
/// may differ from the stored one only in `trials`.
pub fn resume_search(cfg: &SearchConfig, checkpoint: &Path) -> Result<SearchOutcome, SearchError> {
    cfg.check()?;
    let cp = read_checkpoint(checkpoint)?;
    let mut stored = cp.config.clone();
    stored.trials = cfg.trials;
    if stored != *cfg || cp.seed != cfg.seed {
        return Err(SearchError::Resume {
            path: checkpoint.display().to_string(),
            message: "config differs from the checkpointed run (only `trials` may change)".into(),
        });
    }
    let state = SearchOutcome {
        records: cp.best,
        next_trial: cp.next_trial,
        stats: cp.stats,
    };
    drive(cfg, state, Some(checkpoint))
}

/// One JSON object per line.
pub fn write_records<W: Write>(records: &[SearchRecord], mut out: W) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r).map_err(io::Error::other)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
