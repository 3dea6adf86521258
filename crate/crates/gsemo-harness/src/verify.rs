//! Verification suites: each criterion checks one of the theoretical
//! guarantees at desk scale, either deterministically (exhaustive small-n
//! checks) or statistically (fixed budgets, >= 18 of 20 fixed seeds).

use gsemo_core::baselines::{
    approximate_local_search, double_greedy, standard_greedy, LocalSearchConfig,
};
use gsemo_core::bounds::{
    additive_guarantee_factor, multiplicative_bound_comparison, multiplicative_guarantee_factor,
    ratio_guarantee_factor, ratio_guarantee_limit,
};
use gsemo_core::diagnostics::{
    brute_force_opt, certify_properties, gamma_min, minimal_additive_epsilon,
    submodularity_ratio,
};
use gsemo_core::engines::{gsemo_run, RunConfig, SizeBound};
use gsemo_core::objectives::{PerturbationMode, PerturbationSpec, PerturbedFunction};
use gsemo_core::{ParetoArchive, SetFunction, SubsetSolution};
use rayon::prelude::*;

use crate::instances::{
    built_ins, perturbation_base, random_coverage, theorem1_graphs, theorem3_regression,
    InstanceRng,
};

pub const SEEDS: std::ops::RangeInclusive<u64> = 1..=20;
pub const REQUIRED_SUCCESSES: usize = 18;

#[derive(Clone, Debug)]
pub struct CriterionOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:2} [{}] {}: {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.details
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Core,
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
    Lemmas,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "core" => Ok(Suite::Core),
            "theorem1" => Ok(Suite::Theorem1),
            "theorem2" => Ok(Suite::Theorem2),
            "theorem3" => Ok(Suite::Theorem3),
            "theorem4" => Ok(Suite::Theorem4),
            "lemmas" => Ok(Suite::Lemmas),
            other => Err(format!(
                "unknown suite {other:?}; expected core, theorem1..theorem4 or lemmas"
            )),
        }
    }
}

pub fn run_suite(suite: Suite) -> Vec<CriterionOutcome> {
    match suite {
        Suite::Theorem1 => vec![criterion_1()],
        Suite::Theorem2 => vec![criterion_2()],
        Suite::Theorem3 => vec![criterion_3()],
        Suite::Theorem4 => vec![criterion_4(), criterion_8()],
        Suite::Lemmas => vec![criterion_5(), criterion_6(), criterion_7()],
        Suite::Core => vec![criterion_9(), criterion_10()],
    }
}

/// Budget for the unconstrained max-cut regime: 10 · (1/ε) · n⁴ · ln n.
pub fn budget_unconstrained(n: usize, epsilon: f64) -> u64 {
    let nf = n as f64;
    (10.0 / epsilon * nf.powi(4) * nf.ln()).ceil() as u64
}

/// Budget for the size-constrained regimes: 20 · n² · (ln n + k).
pub fn budget_constrained(n: usize, k: usize) -> u64 {
    let nf = n as f64;
    (20.0 * nf * nf * (nf.ln() + k as f64)).ceil() as u64
}

fn count_seed_successes<F: SetFunction + Sync>(
    oracle: &F,
    budget: u64,
    bound: SizeBound,
    threshold: f64,
) -> usize {
    SEEDS
        .collect::<Vec<u64>>()
        .par_iter()
        .filter(|&&seed| {
            let mut cfg = RunConfig::new(seed, budget).with_constraint(bound);
            cfg.target_value = Some(threshold);
            let run = gsemo_run(oracle, &cfg).expect("valid config");
            if let SizeBound::AtMost(k) = bound {
                if run.best.size() > k {
                    return false;
                }
            }
            run.best_value >= threshold
        })
        .count()
}

/// Unconstrained max cut: f(x) >= (1/3 - ε/n)·OPT with ε = 1 on the fixed
/// 12-vertex graph family.
pub fn criterion_1() -> CriterionOutcome {
    let epsilon = 1.0;
    let mut details = Vec::new();
    let mut passed = true;
    for (name, graph) in theorem1_graphs() {
        let n = graph.n();
        let (opt, _) = brute_force_opt(&graph, SizeBound::Unbounded, false).unwrap();
        let threshold = (1.0 / 3.0 - epsilon / n as f64) * opt;
        let budget = budget_unconstrained(n, epsilon);
        let ok = count_seed_successes(&graph, budget, SizeBound::Unbounded, threshold);
        passed &= ok >= REQUIRED_SUCCESSES;
        details.push(format!("{name}: {ok}/20"));
    }
    CriterionOutcome {
        id: 1,
        name: "unconstrained max-cut guarantee",
        passed,
        details: details.join(", "),
    }
}

/// Additively perturbed coverage, k = 4: |x| <= k and
/// f(x) >= (1 - 1/e)·(OPT - k·ε).
pub fn criterion_2() -> CriterionOutcome {
    let (eps_f, k) = (0.05, 4usize);
    let f = PerturbedFunction::new(
        perturbation_base(),
        PerturbationSpec {
            mode: PerturbationMode::Additive,
            epsilon: eps_f,
            seed: 2024,
        },
    )
    .expect("built-in base tolerates the perturbation");
    let n = f.n();
    let bound = SizeBound::AtMost(k);
    let (opt, _) = brute_force_opt(&f, bound, false).unwrap();
    let threshold = (1.0 - (-1.0f64).exp()) * (opt - k as f64 * eps_f);
    let budget = budget_constrained(n, k);
    let ok = count_seed_successes(&f, budget, bound, threshold);
    CriterionOutcome {
        id: 2,
        name: "additive-perturbation guarantee",
        passed: ok >= REQUIRED_SUCCESSES,
        details: format!("{ok}/20 seeds >= {threshold:.4} (OPT {opt:.4}, budget {budget})"),
    }
}

/// Sparse regression, k = 3: f(x) >= (1 - e^{-γ_min})·OPT with γ_min exact.
pub fn criterion_3() -> CriterionOutcome {
    let k = 3usize;
    let f = theorem3_regression();
    let n = f.n();
    let bound = SizeBound::AtMost(k);
    let gamma = gamma_min(&f, k).unwrap();
    let (opt, _) = brute_force_opt(&f, bound, false).unwrap();
    let threshold = ratio_guarantee_limit(gamma) * opt;
    let budget = budget_constrained(n, k);
    let ok = count_seed_successes(&f, budget, bound, threshold);
    CriterionOutcome {
        id: 3,
        name: "submodularity-ratio guarantee",
        passed: ok >= REQUIRED_SUCCESSES,
        details: format!(
            "{ok}/20 seeds >= {threshold:.4} (gamma_min {gamma:.4}, OPT {opt:.4}, budget {budget})"
        ),
    }
}

/// Multiplicatively perturbed coverage, k = 4:
/// f(x) >= (1 + 2kε/(1-ε))⁻¹ · (1 - (1-1/k)^k·((1-ε)/(1+ε))^k)·OPT.
pub fn criterion_4() -> CriterionOutcome {
    let (eps, k) = (0.05, 4usize);
    let f = PerturbedFunction::new(
        perturbation_base(),
        PerturbationSpec {
            mode: PerturbationMode::Multiplicative,
            epsilon: eps,
            seed: 2025,
        },
    )
    .expect("valid spec");
    let n = f.n();
    let bound = SizeBound::AtMost(k);
    let (opt, _) = brute_force_opt(&f, bound, false).unwrap();
    let factor = multiplicative_guarantee_factor(k as u32, eps).unwrap();
    let threshold = factor * opt;
    let budget = budget_constrained(n, k);
    let ok = count_seed_successes(&f, budget, bound, threshold);
    CriterionOutcome {
        id: 4,
        name: "multiplicative-perturbation guarantee",
        passed: ok >= REQUIRED_SUCCESSES,
        details: format!("{ok}/20 seeds >= {threshold:.4} (factor {factor:.4}, OPT {opt:.4})"),
    }
}

/// Local-search lemma: max{f(x̂), f(V\x̂)} >= (1/3 - ε/n)·OPT on every
/// built-in instance satisfying the lemma's premises (non-negative
/// submodular), for ε in {0.5, 1.0}.
pub fn criterion_5() -> CriterionOutcome {
    let mut passed = true;
    let mut details = Vec::new();
    let mut checked = 0;
    for inst in built_ins() {
        let flags = certify_properties(inst.oracle.as_ref()).unwrap();
        if !flags.submodular.passed() || !flags.non_negative.passed() {
            continue;
        }
        let n = inst.oracle.n();
        let (opt, _) = brute_force_opt(inst.oracle.as_ref(), SizeBound::Unbounded, false).unwrap();
        for eps in [0.5, 1.0] {
            checked += 1;
            let res =
                approximate_local_search(inst.oracle.as_ref(), &LocalSearchConfig::new(eps))
                    .unwrap();
            let bound = (1.0 / 3.0 - eps / n as f64) * opt;
            if !(res.value >= bound - 1e-9) {
                passed = false;
                details.push(format!(
                    "{} eps {eps}: {:.4} < {:.4}",
                    inst.name, res.value, bound
                ));
            }
        }
    }
    CriterionOutcome {
        id: 5,
        name: "local-search lemma",
        passed,
        details: if details.is_empty() {
            format!("{checked} instance/epsilon combinations hold")
        } else {
            details.join(", ")
        },
    }
}

fn lemma_2_holds<F: SetFunction + ?Sized>(f: &F, k: usize) -> Result<(), String> {
    let n = f.n();
    let (opt, _) = brute_force_opt(f, SizeBound::AtMost(k), false).unwrap();
    for mask in 0u64..(1 << n) - 1 {
        let x = SubsetSolution::from_mask(n, mask);
        let fx = f.evaluate(&x);
        let gamma = submodularity_ratio(f, &x, k).unwrap();
        let needed = gamma / k as f64 * (opt - fx);
        let ok = (0..n).any(|v| {
            mask >> v & 1 == 0 && {
                let y = SubsetSolution::from_mask(n, mask | 1 << v);
                f.evaluate(&y) - fx >= needed - 1e-9
            }
        });
        if !ok {
            return Err(format!("no improving element at x = {mask:b} (k = {k})"));
        }
    }
    Ok(())
}

fn lemma_3_holds<F: SetFunction + ?Sized>(f: &F, k: usize, eps: f64) -> Result<(), String> {
    let n = f.n();
    let (opt, _) = brute_force_opt(f, SizeBound::AtMost(k), false).unwrap();
    for mask in 0u64..(1 << n) - 1 {
        let x = SubsetSolution::from_mask(n, mask);
        let fx = f.evaluate(&x);
        let needed = (opt - fx) / k as f64 - eps;
        let ok = (0..n).any(|v| {
            mask >> v & 1 == 0 && {
                let y = SubsetSolution::from_mask(n, mask | 1 << v);
                f.evaluate(&y) - fx >= needed - 1e-9
            }
        });
        if !ok {
            return Err(format!("no improving element at x = {mask:b} (k = {k})"));
        }
    }
    Ok(())
}

fn lemma_4_holds<F: SetFunction + ?Sized>(f: &F, k: usize, eps: f64) -> Result<(), String> {
    let n = f.n();
    let shrink = (1.0 - eps) / (1.0 + eps);
    let (opt, _) = brute_force_opt(f, SizeBound::AtMost(k), false).unwrap();
    for mask in 0u64..(1 << n) - 1 {
        let x = SubsetSolution::from_mask(n, mask);
        let fx = f.evaluate(&x);
        let needed = shrink / k as f64 * (opt - fx);
        let ok = (0..n).any(|v| {
            mask >> v & 1 == 0 && {
                let y = SubsetSolution::from_mask(n, mask | 1 << v);
                f.evaluate(&y) - shrink * fx >= needed - 1e-9
            }
        });
        if !ok {
            return Err(format!("no improving element at x = {mask:b} (k = {k})"));
        }
    }
    Ok(())
}

/// Improving-element lemmas, exhaustive on n <= 8 instances of each regime.
pub fn criterion_6() -> CriterionOutcome {
    let mut failures = Vec::new();
    let k = 3;

    // Monotone regime with the exact per-x submodularity ratio.
    for inst in built_ins() {
        if inst.oracle.n() > 8 || !inst.oracle.is_monotone() {
            continue;
        }
        if let Err(e) = lemma_2_holds(inst.oracle.as_ref(), k) {
            failures.push(format!("lemma2/{}: {e}", inst.name));
        }
    }

    // Additively perturbed regime.
    let eps = 0.05;
    let additive = PerturbedFunction::new(
        random_coverage(8, 21),
        PerturbationSpec {
            mode: PerturbationMode::Additive,
            epsilon: eps,
            seed: 61,
        },
    )
    .unwrap();
    if let Err(e) = lemma_3_holds(&additive, k, eps) {
        failures.push(format!("lemma3: {e}"));
    }

    // Multiplicatively perturbed regime.
    let multiplicative = PerturbedFunction::new(
        random_coverage(8, 21),
        PerturbationSpec {
            mode: PerturbationMode::Multiplicative,
            epsilon: eps,
            seed: 62,
        },
    )
    .unwrap();
    if let Err(e) = lemma_4_holds(&multiplicative, k, eps) {
        failures.push(format!("lemma4: {e}"));
    }

    CriterionOutcome {
        id: 6,
        name: "improving-element lemmas",
        passed: failures.is_empty(),
        details: if failures.is_empty() {
            "exhaustive checks hold on all regimes".to_string()
        } else {
            failures.join(", ")
        },
    }
}

/// Submodular collapse: on certified-submodular oracles the ratio is 1, the
/// minimal additive deviation is 0, and the three bound formulas coincide at
/// their collapse parameters.
pub fn criterion_7() -> CriterionOutcome {
    let mut failures = Vec::new();
    for inst in built_ins() {
        let flags = certify_properties(inst.oracle.as_ref()).unwrap();
        if !flags.submodular.passed() {
            continue;
        }
        for k in 1..=3usize {
            let g = gamma_min(inst.oracle.as_ref(), k).unwrap();
            if (g - 1.0).abs() > 1e-9 {
                failures.push(format!("{}: gamma(k={k}) = {g}", inst.name));
            }
        }
        let eps = minimal_additive_epsilon(inst.oracle.as_ref()).unwrap();
        if eps.abs() > 1e-12 {
            failures.push(format!("{}: minimal epsilon = {eps}", inst.name));
        }
    }
    for k in 1..=12u32 {
        let base = additive_guarantee_factor(k);
        let ratio = ratio_guarantee_factor(k, 1.0);
        let mult = multiplicative_guarantee_factor(k, 0.0).unwrap();
        if (ratio - base).abs() > 1e-12 || (mult - base).abs() > 1e-12 {
            failures.push(format!("bounds differ at k = {k}: {base} / {ratio} / {mult}"));
        }
    }
    CriterionOutcome {
        id: 7,
        name: "submodular collapse",
        passed: failures.is_empty(),
        details: if failures.is_empty() {
            "ratios 1, deviation 0, bound formulas coincide".to_string()
        } else {
            failures.join(", ")
        },
    }
}

/// Bound-dominance sweep: the multiplicative-regime guarantee is at least the
/// known greedy bound across the whole grid.
pub fn criterion_8() -> CriterionOutcome {
    let mut failures = Vec::new();
    for k in 1..=100u32 {
        for step in 1..=50 {
            let eps = step as f64 * 0.01;
            let cmp = multiplicative_bound_comparison(k, eps).unwrap();
            if !cmp.dominates {
                failures.push(format!(
                    "k {k}, eps {eps}: {:.6} < {:.6}",
                    cmp.ours, cmp.greedy_known
                ));
            }
        }
    }
    CriterionOutcome {
        id: 8,
        name: "bound dominance",
        passed: failures.is_empty(),
        details: if failures.is_empty() {
            "dominates on all 100 x 50 grid points".to_string()
        } else {
            failures.join(", ")
        },
    }
}

/// Baseline guarantees against brute-force optima.
pub fn criterion_9() -> CriterionOutcome {
    let mut failures = Vec::new();
    let greedy_factor = 1.0 - (-1.0f64).exp();
    for inst in built_ins() {
        let n = inst.oracle.n();
        let flags = certify_properties(inst.oracle.as_ref()).unwrap();
        if !flags.submodular.passed() {
            continue;
        }
        if flags.monotone.passed() && n <= 10 {
            for k in [1, 2, n / 2, n] {
                if k == 0 {
                    continue;
                }
                let (opt_k, _) =
                    brute_force_opt(inst.oracle.as_ref(), SizeBound::AtMost(k), false).unwrap();
                let res = standard_greedy(inst.oracle.as_ref(), k).unwrap();
                if !(res.value >= greedy_factor * opt_k - 1e-9) {
                    failures.push(format!(
                        "greedy/{} k {k}: {:.4} < {:.4}",
                        inst.name,
                        res.value,
                        greedy_factor * opt_k
                    ));
                }
            }
        }
        if flags.non_negative.passed() && n <= 12 {
            let (opt, _) =
                brute_force_opt(inst.oracle.as_ref(), SizeBound::Unbounded, false).unwrap();
            let res = double_greedy(inst.oracle.as_ref());
            if !(res.value >= opt / 3.0 - 1e-9) {
                failures.push(format!(
                    "doublegreedy/{}: {:.4} < {:.4}",
                    inst.name,
                    res.value,
                    opt / 3.0
                ));
            }
        }
    }
    CriterionOutcome {
        id: 9,
        name: "baseline guarantees",
        passed: failures.is_empty(),
        details: if failures.is_empty() {
            "greedy and double greedy meet their factors everywhere".to_string()
        } else {
            failures.join(", ")
        },
    }
}

/// Structural invariants: archive laws under random updates, oracle-call
/// accounting, and bit-identical reruns.
pub fn criterion_10() -> CriterionOutcome {
    let mut failures = Vec::new();

    let n = 10;
    let mut rng = InstanceRng::new(515);
    let mut archive = ParetoArchive::new(n);
    let mut empty_in = false;
    for step in 0..100_000u32 {
        let mask = (rng.unit() * (1u64 << n) as f64) as u64 & ((1 << n) - 1);
        let mut x = SubsetSolution::from_mask(n, mask);
        x.set_value((rng.unit() * 20.0).floor() / 2.0);
        archive.update(x);
        empty_in |= mask == 0;
        if archive.occupancy() > n + 1 {
            failures.push(format!("occupancy {} at step {step}", archive.occupancy()));
            break;
        }
        if empty_in && archive.slot(0).is_none() {
            failures.push(format!("slot 0 lost at step {step}"));
            break;
        }
        if !archive.is_pairwise_incomparable() {
            failures.push(format!("comparable pair at step {step}"));
            break;
        }
    }

    let oracle = random_coverage(8, 21);
    for seed in 0..50u64 {
        let cfg = RunConfig::new(seed, 500).with_trace_stride(100);
        let a = gsemo_run(&oracle, &cfg).unwrap();
        let b = gsemo_run(&oracle, &cfg).unwrap();
        if a != b {
            failures.push(format!("seed {seed}: reruns differ"));
        }
        if a.oracle_calls != 1 + 2 * a.iterations {
            failures.push(format!(
                "seed {seed}: {} calls for {} iterations",
                a.oracle_calls, a.iterations
            ));
        }
    }

    CriterionOutcome {
        id: 10,
        name: "structural invariants",
        passed: failures.is_empty(),
        details: if failures.is_empty() {
            "10^5 archive updates and 100 runs keep all invariants".to_string()
        } else {
            failures.join(", ")
        },
    }
}
