//! Deterministic comparison algorithms: standard greedy, deterministic double
//! greedy, and approximate local search with complement post-step.

use core::fmt;

use crate::oracle::{Evaluator, SetFunction};
use crate::solution::SubsetSolution;

#[derive(Clone, Debug, PartialEq)]
pub struct BaselineResult {
    pub solution: SubsetSolution,
    pub value: f64,
    pub oracle_calls: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum BaselineError {
    InvalidArgument(&'static str),
}

impl fmt::Display for BaselineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaselineError::InvalidArgument(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for BaselineError {}

/// Standard greedy for monotone oracles: exactly `k` iterations, each adding
/// the element with the largest marginal gain, ties broken by lowest index.
pub fn standard_greedy<F: SetFunction + ?Sized>(
    oracle: &F,
    k: usize,
) -> Result<BaselineResult, BaselineError> {
    let n = oracle.n();
    if k == 0 || k > n {
        return Err(BaselineError::InvalidArgument("k must satisfy 1 <= k <= n"));
    }
    let mut eval = Evaluator::new(oracle);
    let mut current = SubsetSolution::empty(n);
    let mut current_value = eval.eval(&mut current);
    for _ in 0..k {
        let mut best: Option<(usize, f64)> = None;
        for v in 0..n {
            if current.contains(v) {
                continue;
            }
            let mut cand = current.clone();
            cand.insert(v);
            let val = eval.eval(&mut cand);
            match best {
                Some((_, bv)) if val <= bv => {}
                _ => best = Some((v, val)),
            }
        }
        let (v, val) = best.expect("k <= n leaves a free element");
        current.insert(v);
        current_value = val;
        current.set_value(val);
    }
    Ok(BaselineResult {
        value: current_value,
        oracle_calls: eval.calls(),
        solution: current,
    })
}

/// Deterministic double greedy for non-negative oracles: a growing set `X`
/// and a shrinking set `Y` converge over one pass; element `v_i` is committed
/// to whichever side has the larger marginal. Gives a 1/3 guarantee for
/// non-negative submodular objectives.
pub fn double_greedy<F: SetFunction + ?Sized>(oracle: &F) -> BaselineResult {
    let n = oracle.n();
    let mut eval = Evaluator::new(oracle);
    let mut lo = SubsetSolution::empty(n);
    let mut lo_value = eval.eval(&mut lo);
    let mut hi = SubsetSolution::full(n);
    let mut hi_value = eval.eval(&mut hi);
    for v in 0..n {
        let mut lo_cand = lo.clone();
        lo_cand.insert(v);
        let lo_cand_value = eval.eval(&mut lo_cand);
        let mut hi_cand = hi.clone();
        hi_cand.remove(v);
        let hi_cand_value = eval.eval(&mut hi_cand);
        let gain_add = lo_cand_value - lo_value;
        let gain_del = hi_cand_value - hi_value;
        if gain_add >= gain_del {
            lo = lo_cand;
            lo_value = lo_cand_value;
        } else {
            hi = hi_cand;
            hi_value = hi_cand_value;
        }
    }
    debug_assert_eq!(lo.bitstring(), hi.bitstring());
    lo.set_value(lo_value);
    BaselineResult {
        value: lo_value,
        oracle_calls: eval.calls(),
        solution: lo,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalSearchConfig {
    pub epsilon: f64,
    pub max_steps: u64,
}

impl LocalSearchConfig {
    pub fn new(epsilon: f64) -> Self {
        LocalSearchConfig {
            epsilon,
            max_steps: 1_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalSearchResult {
    /// The better of the local optimum and its complement.
    pub solution: SubsetSolution,
    pub value: f64,
    /// The (approximate) local optimum before the complement comparison.
    pub local_optimum: SubsetSolution,
    pub local_optimum_value: f64,
    pub truncated: bool,
    pub steps: u64,
    pub oracle_calls: u64,
}

/// Approximate local search: starts from the best singleton, repeatedly
/// applies the best single-element insertion or deletion whose value exceeds
/// `(1 + ε/n²)` times the current value, and finally returns the better of
/// the local optimum and its complement. Ties prefer insertions, then the
/// lowest element index. Stops early (with `truncated = true`) at `max_steps`.
pub fn approximate_local_search<F: SetFunction + ?Sized>(
    oracle: &F,
    config: &LocalSearchConfig,
) -> Result<LocalSearchResult, BaselineError> {
    if !(config.epsilon > 0.0) {
        return Err(BaselineError::InvalidArgument("epsilon must be > 0"));
    }
    let n = oracle.n();
    let factor = 1.0 + config.epsilon / (n as f64 * n as f64);
    let mut eval = Evaluator::new(oracle);

    let mut current = SubsetSolution::empty(n);
    let mut current_value = f64::NEG_INFINITY;
    for v in 0..n {
        let mut cand = SubsetSolution::empty(n);
        cand.insert(v);
        let val = eval.eval(&mut cand);
        if val > current_value {
            current = cand;
            current_value = val;
        }
    }

    let mut steps = 0;
    let mut truncated = false;
    loop {
        if steps >= config.max_steps {
            truncated = true;
            break;
        }
        let mut best: Option<(SubsetSolution, f64)> = None;
        for v in 0..n {
            if current.contains(v) {
                continue;
            }
            let mut cand = current.clone();
            cand.insert(v);
            let val = eval.eval(&mut cand);
            if val > factor * current_value && best.as_ref().is_none_or(|(_, bv)| val > *bv) {
                best = Some((cand, val));
            }
        }
        for v in 0..n {
            if !current.contains(v) {
                continue;
            }
            let mut cand = current.clone();
            cand.remove(v);
            let val = eval.eval(&mut cand);
            if val > factor * current_value && best.as_ref().is_none_or(|(_, bv)| val > *bv) {
                best = Some((cand, val));
            }
        }
        match best {
            Some((cand, val)) => {
                current = cand;
                current_value = val;
                steps += 1;
            }
            None => break,
        }
    }

    let mut comp = current.complemented();
    let comp_value = eval.eval(&mut comp);
    let (solution, value) = if comp_value > current_value {
        (comp, comp_value)
    } else {
        (current.clone(), current_value)
    };
    Ok(LocalSearchResult {
        solution,
        value,
        local_optimum: current,
        local_optimum_value: current_value,
        truncated,
        steps,
        oracle_calls: eval.calls(),
    })
}

/// Direct scan certifying the local-optimality premise: no single-element
/// insertion or deletion achieves value strictly above `(1 + ε/n²)·f(x)`.
pub fn is_approximate_local_optimum<F: SetFunction + ?Sized>(
    oracle: &F,
    x: &SubsetSolution,
    epsilon: f64,
) -> bool {
    let n = oracle.n();
    let factor = 1.0 + epsilon / (n as f64 * n as f64);
    let fx = oracle.evaluate(x);
    for v in 0..n {
        let mut cand = x.clone();
        if cand.contains(v) {
            cand.remove(v);
        } else {
            cand.insert(v);
        }
        if oracle.evaluate(&cand) > factor * fx {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::{CoverageInstance, CutFunction, WeightedGraph};
    use alloc::vec;

    fn disjoint_coverage(weights: &[f64]) -> CoverageInstance {
        let n = weights.len();
        CoverageInstance::new(
            n,
            n,
            (0..n).map(|i| vec![i as u32]).collect(),
            weights.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn greedy_on_disjoint_coverage() {
        let inst = disjoint_coverage(&[5.0, 3.0, 1.0]);
        let res = standard_greedy(&inst, 2).unwrap();
        assert_eq!(res.value, 8.0);
        assert_eq!(res.solution.bitstring(), "110");
        let all = standard_greedy(&inst, 3).unwrap();
        assert_eq!(all.solution.size(), 3);
    }

    #[test]
    fn greedy_rejects_bad_k() {
        let inst = disjoint_coverage(&[1.0]);
        assert!(standard_greedy(&inst, 0).is_err());
        assert!(standard_greedy(&inst, 2).is_err());
    }

    #[test]
    fn double_greedy_single_edge() {
        let f = CutFunction::new(WeightedGraph::new(2, &[(0, 1, 1.0)]).unwrap());
        let res = double_greedy(&f);
        assert_eq!(res.value, 1.0);
        assert_eq!(res.solution.size(), 1);
    }

    #[test]
    fn double_greedy_singleton_ground_set() {
        let inst = disjoint_coverage(&[2.0]);
        let res = double_greedy(&inst);
        assert_eq!(res.solution.size(), 1);
        assert_eq!(res.value, 2.0);
    }

    #[test]
    fn local_search_reaches_modular_optimum() {
        let inst = disjoint_coverage(&[2.0, 0.5, 1.0, 3.0]);
        let res = approximate_local_search(&inst, &LocalSearchConfig::new(0.01)).unwrap();
        assert_eq!(res.value, 6.5);
        assert_eq!(res.solution.size(), 4);
        assert!(!res.truncated);
        assert!(is_approximate_local_optimum(&inst, &res.local_optimum, 0.01));
    }

    #[test]
    fn local_search_n1_picks_better_of_both() {
        let inst = disjoint_coverage(&[4.0]);
        let res = approximate_local_search(&inst, &LocalSearchConfig::new(1.0)).unwrap();
        assert_eq!(res.value, 4.0);
    }

    #[test]
    fn local_search_truncation_flag() {
        let inst = disjoint_coverage(&[1.0, 2.0, 3.0, 4.0, 5.0]);
        let cfg = LocalSearchConfig {
            epsilon: 0.01,
            max_steps: 1,
        };
        let res = approximate_local_search(&inst, &cfg).unwrap();
        assert!(res.truncated);
        assert_eq!(res.steps, 1);
    }
}
