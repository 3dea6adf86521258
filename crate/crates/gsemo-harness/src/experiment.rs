//! Experiment orchestration: multi-seed batches, aggregation, and the JSON /
//! CSV result formats. JSON field names are the external contract documented
//! in the README.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use gsemo_core::baselines::{
    approximate_local_search, double_greedy, standard_greedy, LocalSearchConfig,
};
use gsemo_core::engines::{gsemo_run, one_plus_one_run, RunConfig, SizeBound, RNG_ID};
use gsemo_core::{SetFunction, TraceRecord};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Gsemo,
    Oneplusone,
    Greedy,
    Doublegreedy,
    Localsearch,
}

impl Algorithm {
    pub fn is_seeded(&self) -> bool {
        matches!(self, Algorithm::Gsemo | Algorithm::Oneplusone)
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gsemo" => Ok(Algorithm::Gsemo),
            "oneplusone" => Ok(Algorithm::Oneplusone),
            "greedy" => Ok(Algorithm::Greedy),
            "doublegreedy" => Ok(Algorithm::Doublegreedy),
            "localsearch" => Ok(Algorithm::Localsearch),
            other => Err(format!(
                "unknown algorithm {other:?}; expected gsemo, oneplusone, greedy, doublegreedy or localsearch"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExperimentSpec {
    pub problem: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub input: Option<String>,
    pub algorithm: Algorithm,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub budget: u64,
    pub seeds: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub perturb: Option<String>,
}

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("{0}")]
    InvalidSpec(String),
    #[error("internal invariant breach: {0}")]
    Internal(String),
    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<(), ExperimentError> {
        if self.budget == 0 {
            return Err(ExperimentError::InvalidSpec("budget must be >= 1".into()));
        }
        if self.seeds.is_empty() {
            return Err(ExperimentError::InvalidSpec("seed list must be non-empty".into()));
        }
        let mut sorted = self.seeds.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.seeds.len() {
            return Err(ExperimentError::InvalidSpec("seeds must be distinct".into()));
        }
        Ok(())
    }

    fn constraint(&self) -> SizeBound {
        match self.k {
            Some(k) => SizeBound::AtMost(k),
            None => SizeBound::Unbounded,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SeedRecord {
    /// Absent for deterministic algorithms.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub best_value: f64,
    pub best_subset: String,
    pub oracle_calls: u64,
    pub wall_millis: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Aggregate {
    pub min_best_value: f64,
    pub median_best_value: f64,
    pub max_best_value: f64,
}

/// Pure function of the per-seed records (median = lower middle).
pub fn aggregate(records: &[SeedRecord]) -> Aggregate {
    let mut values: Vec<f64> = records.iter().map(|r| r.best_value).collect();
    values.sort_by(f64::total_cmp);
    Aggregate {
        min_best_value: values[0],
        median_best_value: values[(values.len() - 1) / 2],
        max_best_value: values[values.len() - 1],
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResultRecord {
    pub spec: ExperimentSpec,
    /// Set (with an explanatory note) when the algorithm ignores seeds.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    pub rng_id: String,
    pub records: Vec<SeedRecord>,
    pub aggregate: Aggregate,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ratio_to_opt: Option<f64>,
}

fn run_one_seed<F: SetFunction + Sync + ?Sized>(
    oracle: &F,
    spec: &ExperimentSpec,
    seed: u64,
    trace_stride: Option<u64>,
) -> Result<(SeedRecord, Vec<TraceRecord>), ExperimentError> {
    let start = Instant::now();
    let mut cfg = RunConfig::new(seed, spec.budget).with_constraint(spec.constraint());
    cfg.trace_stride = trace_stride;
    let run = match spec.algorithm {
        Algorithm::Gsemo => gsemo_run(oracle, &cfg),
        Algorithm::Oneplusone => one_plus_one_run(oracle, &cfg),
        _ => unreachable!("deterministic algorithms are dispatched separately"),
    }
    .map_err(|e| ExperimentError::Internal(e.to_string()))?;
    Ok((
        SeedRecord {
            seed: Some(seed),
            best_value: run.best_value,
            best_subset: run.best.bitstring(),
            oracle_calls: run.oracle_calls,
            wall_millis: start.elapsed().as_millis() as u64,
        },
        run.trace,
    ))
}

fn run_deterministic<F: SetFunction + Sync + ?Sized>(
    oracle: &F,
    spec: &ExperimentSpec,
) -> Result<SeedRecord, ExperimentError> {
    let start = Instant::now();
    let (solution, value, oracle_calls) = match spec.algorithm {
        Algorithm::Greedy => {
            let k = spec.k.ok_or_else(|| {
                ExperimentError::InvalidSpec("greedy requires --k".into())
            })?;
            let r = standard_greedy(oracle, k)
                .map_err(|e| ExperimentError::InvalidSpec(e.to_string()))?;
            (r.solution, r.value, r.oracle_calls)
        }
        Algorithm::Doublegreedy => {
            let r = double_greedy(oracle);
            (r.solution, r.value, r.oracle_calls)
        }
        Algorithm::Localsearch => {
            let eps = spec.epsilon.ok_or_else(|| {
                ExperimentError::InvalidSpec("localsearch requires --epsilon".into())
            })?;
            let r = approximate_local_search(oracle, &LocalSearchConfig::new(eps))
                .map_err(|e| ExperimentError::InvalidSpec(e.to_string()))?;
            (r.solution, r.value, r.oracle_calls)
        }
        _ => unreachable!("seeded algorithms are dispatched separately"),
    };
    Ok(SeedRecord {
        seed: None,
        best_value: value,
        best_subset: solution.bitstring(),
        oracle_calls,
        wall_millis: start.elapsed().as_millis() as u64,
    })
}

/// Runs the experiment (seed-parallel for the randomized algorithms) and
/// optionally writes per-seed CSV traces next to `trace_path`.
pub fn run_experiment<F: SetFunction + Sync + ?Sized>(
    oracle: &F,
    spec: &ExperimentSpec,
    trace_path: Option<&Path>,
) -> Result<ResultRecord, ExperimentError> {
    spec.validate()?;
    let mut note = None;
    let records = if spec.algorithm.is_seeded() {
        let stride = trace_path.map(|_| (spec.budget / 200).max(1));
        let per_seed: Vec<(SeedRecord, Vec<TraceRecord>)> = spec
            .seeds
            .par_iter()
            .map(|&seed| run_one_seed(oracle, spec, seed, stride))
            .collect::<Result<_, _>>()?;
        if let Some(base) = trace_path {
            for (record, trace) in per_seed.iter() {
                write_trace(base, record.seed, trace, spec.seeds.len() == 1)?;
            }
        }
        per_seed.into_iter().map(|(r, _)| r).collect()
    } else {
        note = Some("deterministic algorithm: seeds ignored, single record".to_string());
        vec![run_deterministic(oracle, spec)?]
    };
    let aggregate = aggregate(&records);
    Ok(ResultRecord {
        spec: spec.clone(),
        note,
        rng_id: RNG_ID.to_string(),
        records,
        aggregate,
        ratio_to_opt: None,
    })
}

/// CSV trace for one seed: `iteration,bestFeasibleValue,archiveOccupancy`.
/// A single-seed experiment writes exactly the requested path; multi-seed
/// experiments write sibling files suffixed with the seed.
fn write_trace(
    base: &Path,
    seed: Option<u64>,
    trace: &[TraceRecord],
    exact_path: bool,
) -> Result<(), ExperimentError> {
    let path = if exact_path {
        base.to_path_buf()
    } else {
        let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("trace");
        let ext = base.extension().and_then(|s| s.to_str()).unwrap_or("csv");
        base.with_file_name(format!("{stem}-seed{}.{ext}", seed.unwrap_or(0)))
    };
    let io_err = |source| ExperimentError::Output {
        path: path.clone(),
        source,
    };
    let mut out = std::fs::File::create(&path).map_err(io_err)?;
    writeln!(out, "iteration,bestFeasibleValue,archiveOccupancy").map_err(io_err)?;
    for rec in trace {
        writeln!(
            out,
            "{},{},{}",
            rec.iteration, rec.best_feasible_value, rec.archive_occupancy
        )
        .map_err(io_err)?;
    }
    Ok(())
}
