//! Seeded optimizers: the GSEMO with complement offspring and a (1+1)-EA
//! baseline, both with budget-based stopping.

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::archive::{ArchiveError, ParetoArchive};
use crate::oracle::{Evaluator, SetFunction};
use crate::solution::SubsetSolution;

/// Identity of the seeded generator, recorded in every run result so results
/// stay attributable when the generator ever changes.
pub const RNG_ID: &str = "chacha12/seed_from_u64";

/// Size constraint `|x| <= k`, or none.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeBound {
    Unbounded,
    AtMost(usize),
}

impl SizeBound {
    pub fn admits(&self, size: usize) -> bool {
        match self {
            SizeBound::Unbounded => true,
            SizeBound::AtMost(k) => size <= *k,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub max_iterations: u64,
    pub constraint: SizeBound,
    /// Record a trace point every this many iterations (`None` disables).
    pub trace_stride: Option<u64>,
    /// Optional early exit once the best feasible value reaches the target.
    pub target_value: Option<f64>,
}

impl RunConfig {
    pub fn new(seed: u64, max_iterations: u64) -> Self {
        RunConfig {
            seed,
            max_iterations,
            constraint: SizeBound::Unbounded,
            trace_stride: None,
            target_value: None,
        }
    }

    pub fn with_constraint(mut self, bound: SizeBound) -> Self {
        self.constraint = bound;
        self
    }

    pub fn with_trace_stride(mut self, stride: u64) -> Self {
        self.trace_stride = Some(stride);
        self
    }

    fn validate(&self, n: usize) -> Result<(), EngineError> {
        if self.max_iterations == 0 {
            return Err(EngineError::InvalidConfig("max_iterations must be >= 1"));
        }
        if let Some(0) = self.trace_stride {
            return Err(EngineError::InvalidConfig("trace stride must be >= 1"));
        }
        if let SizeBound::AtMost(k) = self.constraint {
            if k == 0 || k > n {
                return Err(EngineError::InvalidConfig("constraint k must satisfy 1 <= k <= n"));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceRecord {
    pub iteration: u64,
    pub best_feasible_value: f64,
    pub archive_occupancy: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunResult {
    pub best: SubsetSolution,
    pub best_value: f64,
    pub oracle_calls: u64,
    pub iterations: u64,
    pub trace: Vec<TraceRecord>,
    /// Final archive summary: stored `f` value per subset size.
    pub final_archive: Vec<Option<f64>>,
    pub rng_id: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub enum EngineError {
    InvalidConfig(&'static str),
    Internal(ArchiveError),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::InvalidConfig(msg) => write!(f, "invalid run config: {msg}"),
            EngineError::Internal(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EngineError {}

impl From<ArchiveError> for EngineError {
    fn from(e: ArchiveError) -> Self {
        EngineError::Internal(e)
    }
}

/// Standard-bit mutation: each bit flipped independently with probability
/// `1/n`. Zero-flip offspring are allowed; the parent is left untouched.
pub fn mutate<R: Rng>(x: &SubsetSolution, rng: &mut R) -> SubsetSolution {
    let n = x.n();
    let p = 1.0 / n as f64;
    let mut child = x.clone();
    child.clear_value();
    for i in 0..n {
        if rng.random_bool(p) {
            child.flip(i);
        }
    }
    child
}

/// The GSEMO on the bi-objective transform `(f(x), -|x|)`.
///
/// Each iteration draws a uniform parent from the archive, produces one
/// offspring by standard-bit mutation and additionally its complement
/// `V \ x'`; both are evaluated and offered to the archive in that order.
/// Runs for exactly the configured budget (unless the optional target value
/// is reached first) and returns the best archived solution within the size
/// constraint. Deterministic given the seed.
pub fn gsemo_run<F: SetFunction + ?Sized>(
    oracle: &F,
    config: &RunConfig,
) -> Result<RunResult, EngineError> {
    let n = oracle.n();
    config.validate(n)?;
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
    let mut eval = Evaluator::new(oracle);
    let mut archive = ParetoArchive::new(n);
    let mut trace = Vec::new();

    let mut init = SubsetSolution::random(n, &mut rng);
    eval.eval(&mut init);
    archive.update(init);

    let mut iterations = 0;
    for it in 1..=config.max_iterations {
        let parent = choose_uniform(&archive, &mut rng);
        let mut child = mutate(parent, &mut rng);
        eval.eval(&mut child);
        let mut comp = child.complemented();
        eval.eval(&mut comp);
        archive.update(child);
        archive.update(comp);
        iterations = it;

        if let Some(stride) = config.trace_stride {
            if it % stride == 0 {
                if let Ok(best) = archive.best_feasible(config.constraint) {
                    trace.push(TraceRecord {
                        iteration: it,
                        best_feasible_value: best.value().unwrap(),
                        archive_occupancy: archive.occupancy(),
                    });
                }
            }
        }
        if let Some(target) = config.target_value {
            if let Ok(best) = archive.best_feasible(config.constraint) {
                if best.value().unwrap() >= target {
                    break;
                }
            }
        }
    }

    let best = archive.best_feasible(config.constraint)?.clone();
    let best_value = best.value().unwrap();
    debug_assert_eq!(eval.calls(), 1 + 2 * iterations);
    Ok(RunResult {
        best,
        best_value,
        oracle_calls: eval.calls(),
        iterations,
        trace,
        final_archive: archive.values_by_size(),
        rng_id: RNG_ID,
    })
}

fn choose_uniform<'a, R: Rng>(archive: &'a ParetoArchive, rng: &mut R) -> &'a SubsetSolution {
    let idx = rng.random_range(0..archive.occupancy());
    archive
        .solutions()
        .nth(idx)
        .expect("occupancy counts stored solutions")
}

/// Lexicographic penalty order for the constrained (1+1)-EA: infeasible
/// solutions rank below every feasible one and among themselves by smaller
/// size; feasible solutions rank by `f`.
fn fitness_at_least(
    cand_value: f64,
    cand_size: usize,
    inc_value: f64,
    inc_size: usize,
    bound: SizeBound,
) -> bool {
    match (bound.admits(cand_size), bound.admits(inc_size)) {
        (true, true) => cand_value >= inc_value,
        (true, false) => true,
        (false, true) => false,
        (false, false) => cand_size <= inc_size,
    }
}

/// (1+1)-EA baseline: a single solution, standard-bit mutation, and offspring
/// acceptance iff its (penalized) fitness is at least the parent's. The size
/// constraint is handled by the lexicographic penalty above; this constrained
/// variant is an extension of ours, not an analyzed algorithm.
pub fn one_plus_one_run<F: SetFunction + ?Sized>(
    oracle: &F,
    config: &RunConfig,
) -> Result<RunResult, EngineError> {
    let n = oracle.n();
    config.validate(n)?;
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
    let mut eval = Evaluator::new(oracle);
    let mut trace = Vec::new();

    let mut current = SubsetSolution::random(n, &mut rng);
    eval.eval(&mut current);

    let mut iterations = 0;
    for it in 1..=config.max_iterations {
        let mut child = mutate(&current, &mut rng);
        eval.eval(&mut child);
        if fitness_at_least(
            child.value().unwrap(),
            child.size(),
            current.value().unwrap(),
            current.size(),
            config.constraint,
        ) {
            current = child;
        }
        iterations = it;

        let feasible = config.constraint.admits(current.size());
        if let Some(stride) = config.trace_stride {
            if it % stride == 0 && feasible {
                trace.push(TraceRecord {
                    iteration: it,
                    best_feasible_value: current.value().unwrap(),
                    archive_occupancy: 1,
                });
            }
        }
        if let Some(target) = config.target_value {
            if feasible && current.value().unwrap() >= target {
                break;
            }
        }
    }

    if !config.constraint.admits(current.size()) {
        let max_size = match config.constraint {
            SizeBound::AtMost(k) => k,
            SizeBound::Unbounded => n,
        };
        return Err(EngineError::Internal(ArchiveError::NoFeasibleSolution {
            max_size,
        }));
    }
    let best_value = current.value().unwrap();
    let mut final_archive = alloc::vec![None; n + 1];
    final_archive[current.size()] = Some(best_value);
    debug_assert_eq!(eval.calls(), 1 + iterations);
    Ok(RunResult {
        best: current,
        best_value,
        oracle_calls: eval.calls(),
        iterations,
        trace,
        final_archive,
        rng_id: RNG_ID,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn mutate_n1_always_flips() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        let x = SubsetSolution::empty(1);
        for _ in 0..20 {
            assert_eq!(mutate(&x, &mut rng).size(), 1);
        }
    }

    #[test]
    fn mutate_leaves_parent_unchanged() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let mut x = SubsetSolution::from_indices(10, &[1, 4, 7]);
        x.set_value(2.5);
        let before = x.clone();
        let _ = mutate(&x, &mut rng);
        assert_eq!(x, before);
    }

    #[test]
    fn config_validation() {
        struct Zero(crate::solution::GroundSet);
        impl SetFunction for Zero {
            fn ground_set(&self) -> &crate::solution::GroundSet {
                &self.0
            }
            fn evaluate(&self, _: &SubsetSolution) -> f64 {
                0.0
            }
            fn is_monotone(&self) -> bool {
                false
            }
            fn is_non_negative(&self) -> bool {
                true
            }
        }
        let f = Zero(crate::solution::GroundSet::new(4));
        assert!(gsemo_run(&f, &RunConfig::new(1, 0)).is_err());
        let bad_k = RunConfig::new(1, 10).with_constraint(SizeBound::AtMost(9));
        assert!(gsemo_run(&f, &bad_k).is_err());
    }
}
