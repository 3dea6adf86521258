//! Cross-checks of the brute-force diagnostics against straightforward
//! re-implementations written from the definitions, with no shared code and
//! no memoization. Slow but independent.

use gsemo_core::diagnostics::{
    gamma_min, minimal_additive_epsilon, submodularity_ratio,
};
use gsemo_core::objectives::{CutFunction, RegressionInstance, WeightedGraph};
use gsemo_core::{SetFunction, SubsetSolution};

/// Deterministic pseudo-data, independent of the library's generator.
fn lcg_stream(mut state: u64) -> impl FnMut() -> f64 {
    move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) as f64 / (1u64 << 31) as f64) - 1.0
    }
}

fn fixed_regression(n: usize, rows: usize, seed: u64) -> RegressionInstance {
    let mut next = lcg_stream(seed);
    let columns: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..rows).map(|_| next()).collect())
        .collect();
    // Target correlated with a few columns plus noise, so R² is non-trivial.
    let target: Vec<f64> = (0..rows)
        .map(|r| 2.0 * columns[0][r] - 1.5 * columns[1][r] + 0.3 * next())
        .collect();
    RegressionInstance::new(columns, target).unwrap()
}

fn eval_mask<F: SetFunction>(f: &F, mask: u64) -> f64 {
    f.evaluate(&SubsetSolution::from_mask(f.n(), mask))
}

/// The definition, written as four plain nested loops over masks.
fn ratio_by_definition<F: SetFunction>(f: &F, u_mask: u64, k: usize) -> f64 {
    let n = f.n();
    let mut min: Option<f64> = None;
    for l_mask in 0u64..1 << n {
        if l_mask & !u_mask != 0 {
            continue;
        }
        for s_mask in 1u64..1 << n {
            if s_mask & u_mask != 0 || s_mask.count_ones() as usize > k {
                continue;
            }
            let joint = eval_mask(f, l_mask | s_mask) - eval_mask(f, l_mask);
            if joint <= 1e-12 {
                continue;
            }
            let mut singles = 0.0;
            for v in 0..n {
                if s_mask >> v & 1 == 1 {
                    singles += eval_mask(f, l_mask | 1 << v) - eval_mask(f, l_mask);
                }
            }
            let r = singles / joint;
            if min.map_or(true, |m| r < m) {
                min = Some(r);
            }
        }
    }
    min.unwrap_or(1.0)
}

fn epsilon_by_definition<F: SetFunction>(f: &F) -> f64 {
    let n = f.n();
    let mut worst = 0.0f64;
    for x_mask in 0u64..1 << n {
        for y_mask in 0u64..1 << n {
            if x_mask & !y_mask != 0 {
                continue;
            }
            for v in 0..n {
                if y_mask >> v & 1 == 1 {
                    continue;
                }
                let lhs = eval_mask(f, y_mask | 1 << v) - eval_mask(f, y_mask);
                let rhs = eval_mask(f, x_mask | 1 << v) - eval_mask(f, x_mask);
                worst = worst.max(lhs - rhs);
            }
        }
    }
    worst
}

#[test]
fn submodularity_ratio_matches_definition_on_regression() {
    let inst = fixed_regression(6, 25, 12345);
    for u_mask in [0u64, 0b000011, 0b010101] {
        let u_set = SubsetSolution::from_mask(6, u_mask);
        for k in 1..=3 {
            let fast = submodularity_ratio(&inst, &u_set, k).unwrap();
            let slow = ratio_by_definition(&inst, u_mask, k);
            assert!(
                (fast - slow).abs() < 1e-9,
                "U = {u_mask:b}, k = {k}: {fast} vs {slow}"
            );
        }
    }
}

#[test]
fn gamma_min_matches_definition_on_regression() {
    let inst = fixed_regression(6, 25, 999);
    for k in 1..=3usize {
        let fast = gamma_min(&inst, k).unwrap();
        let slow = (0u64..1 << 6)
            .filter(|m| m.count_ones() as usize == k - 1)
            .map(|m| ratio_by_definition(&inst, m, k))
            .fold(f64::INFINITY, f64::min);
        assert!((fast - slow).abs() < 1e-9, "k = {k}: {fast} vs {slow}");
    }
}

#[test]
fn regression_gamma_stays_in_unit_interval_when_helpful() {
    // Regression R² is monotone; its ratio can dip below 1 but never below 0.
    let inst = fixed_regression(6, 25, 31);
    for k in 1..=3 {
        let g = gamma_min(&inst, k).unwrap();
        assert!(g > 0.0 && g <= 1.0 + 1e-9, "gamma = {g}");
    }
}

#[test]
fn minimal_epsilon_matches_definition() {
    let inst = fixed_regression(6, 25, 2026);
    let fast = minimal_additive_epsilon(&inst).unwrap();
    let slow = epsilon_by_definition(&inst);
    assert!((fast - slow).abs() < 1e-9, "{fast} vs {slow}");

    let cut = CutFunction::new(
        WeightedGraph::new(5, &[(0, 1, 2.0), (1, 2, 1.0), (2, 4, 0.5), (0, 3, 1.5)]).unwrap(),
    );
    let fast = minimal_additive_epsilon(&cut).unwrap();
    assert_eq!(fast, 0.0);
    assert_eq!(epsilon_by_definition(&cut), 0.0);
}
