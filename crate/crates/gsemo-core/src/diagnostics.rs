//! Brute-force ground truth at desk scale: exact optima, the submodularity
//! ratio, the minimal additive submodularity deviation, and exhaustive
//! property certification. All operations are guarded by hard ground-set
//! limits and refuse larger inputs instead of silently sampling.

use alloc::vec::Vec;
use core::fmt;

use crate::engines::SizeBound;
use crate::oracle::SetFunction;
use crate::solution::SubsetSolution;

/// Unconstrained / constrained exact maximization guard.
pub const OPT_GUARD: usize = 24;
/// Guard with the explicit override flag.
pub const OPT_GUARD_OVERRIDE: usize = 28;
/// Triple enumeration (X ⊆ Y, v ∉ Y) guard.
pub const TRIPLE_GUARD: usize = 14;
/// Default enumeration budget for ratio computations, in oracle evaluations.
pub const RATIO_BUDGET: u64 = 100_000_000;

/// Denominator cutoff below which a ratio pair is treated as non-binding.
const DENOM_CUTOFF: f64 = 1e-12;
/// Slack absorbing float noise in exhaustive property certification, needed
/// for oracles whose values come out of least-squares solves.
const CERT_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum DiagnosticsError {
    GroundSetTooLarge { n: usize, limit: usize },
    BudgetExceeded { estimated: u64, budget: u64 },
}

impl fmt::Display for DiagnosticsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagnosticsError::GroundSetTooLarge { n, limit } => {
                write!(f, "ground set of size {n} exceeds the brute-force limit {limit}")
            }
            DiagnosticsError::BudgetExceeded { estimated, budget } => write!(
                f,
                "enumeration would need about {estimated} oracle evaluations (budget {budget})"
            ),
        }
    }
}

impl core::error::Error for DiagnosticsError {}

/// Exact maximum of `f` over all subsets (or all subsets within the size
/// bound). Argmax ties are broken by smaller size, then by the bit pattern as
/// a little-endian integer.
pub fn brute_force_opt<F: SetFunction + ?Sized>(
    oracle: &F,
    bound: SizeBound,
    guard_override: bool,
) -> Result<(f64, SubsetSolution), DiagnosticsError> {
    let n = oracle.n();
    let limit = if guard_override { OPT_GUARD_OVERRIDE } else { OPT_GUARD };
    if n > limit {
        return Err(DiagnosticsError::GroundSetTooLarge { n, limit });
    }
    let mut best: Option<(f64, SubsetSolution)> = None;
    for mask in 0u64..1 << n {
        if let SizeBound::AtMost(k) = bound {
            if mask.count_ones() as usize > k {
                continue;
            }
        }
        let x = SubsetSolution::from_mask(n, mask);
        let v = oracle.evaluate(&x);
        let better = match &best {
            None => true,
            Some((bv, bx)) => {
                v > *bv || (v == *bv && x.canonical_cmp(bx) == core::cmp::Ordering::Less)
            }
        };
        if better {
            let mut x = x;
            x.set_value(v);
            best = Some((v, x));
        }
    }
    Ok(best.expect("at least the empty set is enumerated"))
}

/// All `2^n` values of `f`, indexed by subset bit mask. Internal accelerator
/// for the enumeration operations below.
fn value_table<F: SetFunction + ?Sized>(
    oracle: &F,
    budget: u64,
) -> Result<Vec<f64>, DiagnosticsError> {
    let n = oracle.n();
    if n >= 26 || (1u64 << n) > budget {
        return Err(DiagnosticsError::BudgetExceeded {
            estimated: 1u64.checked_shl(n as u32).unwrap_or(u64::MAX),
            budget,
        });
    }
    Ok((0u64..1 << n)
        .map(|mask| oracle.evaluate(&SubsetSolution::from_mask(n, mask)))
        .collect())
}

fn submask_count(mask: u64) -> u64 {
    1u64 << mask.count_ones()
}

fn subsets_up_to(n: usize, forbidden: u64, k: usize) -> impl Iterator<Item = u64> {
    (1u64..1 << n).filter(move |s| s & forbidden == 0 && s.count_ones() as usize <= k)
}

/// The submodularity ratio of a monotone `f` with respect to `U` and `k`:
/// the exact minimum over `L ⊆ U` and nonempty `S` disjoint from `U` with
/// `|S| <= k` of the sum of singleton gains over the joint gain. Pairs whose
/// joint gain is below the cutoff are non-binding and skipped; if every pair
/// is skipped the ratio is reported as 1.
pub fn submodularity_ratio<F: SetFunction + ?Sized>(
    oracle: &F,
    u_set: &SubsetSolution,
    k: usize,
) -> Result<f64, DiagnosticsError> {
    submodularity_ratio_with_budget(oracle, u_set, k, RATIO_BUDGET)
}

pub fn submodularity_ratio_with_budget<F: SetFunction + ?Sized>(
    oracle: &F,
    u_set: &SubsetSolution,
    k: usize,
    budget: u64,
) -> Result<f64, DiagnosticsError> {
    let n = oracle.n();
    let u_mask = u_set.mask();
    let s_count: u64 = subsets_up_to(n, u_mask, k).count() as u64;
    let estimated = submask_count(u_mask)
        .saturating_mul(s_count)
        .saturating_add(1 << n);
    if estimated > budget {
        return Err(DiagnosticsError::BudgetExceeded { estimated, budget });
    }
    let table = value_table(oracle, budget)?;
    let mut min_ratio: Option<f64> = None;
    // Enumerate L as submasks of U.
    let mut l_mask = u_mask;
    loop {
        let fl = table[l_mask as usize];
        for s_mask in subsets_up_to(n, u_mask, k) {
            let joint = table[(l_mask | s_mask) as usize] - fl;
            if joint <= DENOM_CUTOFF {
                continue;
            }
            let mut singles = 0.0;
            let mut rest = s_mask;
            while rest != 0 {
                let v = rest & rest.wrapping_neg();
                singles += table[(l_mask | v) as usize] - fl;
                rest ^= v;
            }
            let ratio = singles / joint;
            if min_ratio.is_none_or(|m| ratio < m) {
                min_ratio = Some(ratio);
            }
        }
        if l_mask == 0 {
            break;
        }
        l_mask = (l_mask - 1) & u_mask;
    }
    Ok(min_ratio.unwrap_or(1.0))
}

/// `min` of the submodularity ratio over all `U` with `|U| = k - 1`.
pub fn gamma_min<F: SetFunction + ?Sized>(
    oracle: &F,
    k: usize,
) -> Result<f64, DiagnosticsError> {
    gamma_min_with_budget(oracle, k, RATIO_BUDGET)
}

pub fn gamma_min_with_budget<F: SetFunction + ?Sized>(
    oracle: &F,
    k: usize,
    budget: u64,
) -> Result<f64, DiagnosticsError> {
    let n = oracle.n();
    let mut min = f64::INFINITY;
    let mut any = false;
    for mask in 0u64..1 << n {
        if mask.count_ones() as usize != k - 1 {
            continue;
        }
        let u_set = SubsetSolution::from_mask(n, mask);
        let g = submodularity_ratio_with_budget(oracle, &u_set, k, budget)?;
        if g < min {
            min = g;
        }
        any = true;
    }
    Ok(if any { min } else { 1.0 })
}

/// The least ε for which the diminishing-returns inequality holds with
/// deviation ε: the maximum over all `X ⊆ Y`, `v ∉ Y` of the superset
/// marginal minus the subset marginal, clamped below at 0.
pub fn minimal_additive_epsilon<F: SetFunction + ?Sized>(
    oracle: &F,
) -> Result<f64, DiagnosticsError> {
    let n = oracle.n();
    if n > TRIPLE_GUARD {
        return Err(DiagnosticsError::GroundSetTooLarge { n, limit: TRIPLE_GUARD });
    }
    let table = value_table(oracle, RATIO_BUDGET)?;
    let mut worst = 0.0_f64;
    for y_mask in 0u64..1 << n {
        let fy = table[y_mask as usize];
        for v in 0..n {
            let v_bit = 1u64 << v;
            if y_mask & v_bit != 0 {
                continue;
            }
            let super_marginal = table[(y_mask | v_bit) as usize] - fy;
            // X ranges over submasks of Y.
            let mut x_mask = y_mask;
            loop {
                let sub_marginal = table[(x_mask | v_bit) as usize] - table[x_mask as usize];
                let gap = super_marginal - sub_marginal;
                if gap > worst {
                    worst = gap;
                }
                if x_mask == 0 {
                    break;
                }
                x_mask = (x_mask - 1) & y_mask;
            }
        }
    }
    Ok(worst)
}

/// Outcome of one exhaustive property check, with a counterexample on failure.
#[derive(Clone, Debug, PartialEq)]
pub enum CheckOutcome {
    Pass,
    Fail(Witness),
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

/// Counterexample for a failed property: subset masks and the violating gap.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub x_mask: u64,
    pub y_mask: u64,
    pub element: Option<usize>,
    pub gap: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyFlags {
    pub monotone: CheckOutcome,
    pub submodular: CheckOutcome,
    pub non_negative: CheckOutcome,
}

/// Exhaustive certification of monotonicity, submodularity and non-negativity
/// with minimal-in-scan-order witnesses. A small fixed tolerance absorbs float
/// noise from numerically computed oracles.
pub fn certify_properties<F: SetFunction + ?Sized>(
    oracle: &F,
) -> Result<PropertyFlags, DiagnosticsError> {
    let n = oracle.n();
    if n > TRIPLE_GUARD {
        return Err(DiagnosticsError::GroundSetTooLarge { n, limit: TRIPLE_GUARD });
    }
    let table = value_table(oracle, RATIO_BUDGET)?;

    let mut non_negative = CheckOutcome::Pass;
    for (mask, &v) in table.iter().enumerate() {
        if v < -CERT_TOL {
            non_negative = CheckOutcome::Fail(Witness {
                x_mask: mask as u64,
                y_mask: mask as u64,
                element: None,
                gap: -v,
            });
            break;
        }
    }

    // Single-element chains suffice for monotonicity.
    let mut monotone = CheckOutcome::Pass;
    'mono: for x_mask in 0u64..1 << n {
        for v in 0..n {
            let v_bit = 1u64 << v;
            if x_mask & v_bit != 0 {
                continue;
            }
            let gap = table[x_mask as usize] - table[(x_mask | v_bit) as usize];
            if gap > CERT_TOL {
                monotone = CheckOutcome::Fail(Witness {
                    x_mask,
                    y_mask: x_mask | v_bit,
                    element: Some(v),
                    gap,
                });
                break 'mono;
            }
        }
    }

    let mut submodular = CheckOutcome::Pass;
    'sub: for y_mask in 0u64..1 << n {
        for v in 0..n {
            let v_bit = 1u64 << v;
            if y_mask & v_bit != 0 {
                continue;
            }
            let super_marginal = table[(y_mask | v_bit) as usize] - table[y_mask as usize];
            let mut x_mask = y_mask;
            loop {
                let sub_marginal = table[(x_mask | v_bit) as usize] - table[x_mask as usize];
                let gap = super_marginal - sub_marginal;
                if gap > CERT_TOL {
                    submodular = CheckOutcome::Fail(Witness {
                        x_mask,
                        y_mask,
                        element: Some(v),
                        gap,
                    });
                    break 'sub;
                }
                if x_mask == 0 {
                    break;
                }
                x_mask = (x_mask - 1) & y_mask;
            }
        }
    }

    Ok(PropertyFlags {
        monotone,
        submodular,
        non_negative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::{CoverageInstance, CutFunction, WeightedGraph};
    use alloc::vec;

    fn triangle() -> CutFunction {
        CutFunction::new(
            WeightedGraph::new(3, &[(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)]).unwrap(),
        )
    }

    fn coverage() -> CoverageInstance {
        CoverageInstance::new(
            4,
            5,
            vec![vec![0, 1], vec![1, 2], vec![3], vec![2, 4]],
            vec![3.0, 2.0, 5.0, 1.0, 2.0],
        )
        .unwrap()
    }

    fn disjoint(weights: &[f64]) -> CoverageInstance {
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
    fn triangle_opt_and_tie_break() {
        let (opt, arg) = brute_force_opt(&triangle(), SizeBound::Unbounded, false).unwrap();
        assert_eq!(opt, 2.0);
        assert_eq!(arg.bitstring(), "100");
    }

    #[test]
    fn constrained_opt_edges() {
        let cov = coverage();
        let (v0, arg0) = brute_force_opt(&cov, SizeBound::AtMost(0), false).unwrap();
        assert_eq!((v0, arg0.size()), (0.0, 0));
        let (vn, _) = brute_force_opt(&cov, SizeBound::AtMost(4), false).unwrap();
        assert_eq!(vn, cov.evaluate(&SubsetSolution::full(4)));
        let (vu, _) = brute_force_opt(&cov, SizeBound::Unbounded, false).unwrap();
        assert!(vu >= vn);
    }

    #[test]
    fn guard_refuses_large_ground_sets() {
        struct Big(crate::solution::GroundSet);
        impl SetFunction for Big {
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
        let f = Big(crate::solution::GroundSet::new(25));
        assert!(matches!(
            brute_force_opt(&f, SizeBound::Unbounded, false),
            Err(DiagnosticsError::GroundSetTooLarge { limit: 24, .. })
        ));
    }

    #[test]
    fn coverage_ratio_is_one() {
        let cov = coverage();
        for u_mask in 0u64..16 {
            let u_set = SubsetSolution::from_mask(4, u_mask);
            for k in 1..=3 {
                let g = submodularity_ratio(&cov, &u_set, k).unwrap();
                assert!(g >= 1.0 - 1e-9, "gamma = {g}");
                assert!(g <= 1.0 + 1e-9, "gamma = {g}");
            }
        }
    }

    #[test]
    fn modular_ratio_exactly_one() {
        let f = disjoint(&[2.0, 1.0, 0.5]);
        let u_set = SubsetSolution::from_mask(3, 0b001);
        assert_eq!(submodularity_ratio(&f, &u_set, 2).unwrap(), 1.0);
    }

    #[test]
    fn gamma_min_trivial_cases() {
        let cov = coverage();
        for k in 1..=4 {
            let g = gamma_min(&cov, k).unwrap();
            assert!((g - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn minimal_epsilon_zero_for_submodular() {
        assert_eq!(minimal_additive_epsilon(&triangle()).unwrap(), 0.0);
        assert_eq!(minimal_additive_epsilon(&coverage()).unwrap(), 0.0);
        assert_eq!(minimal_additive_epsilon(&disjoint(&[1.0, 2.0])).unwrap(), 0.0);
    }

    #[test]
    fn certify_cut_and_coverage() {
        let flags = certify_properties(&triangle()).unwrap();
        assert!(!flags.monotone.passed());
        assert!(flags.submodular.passed());
        assert!(flags.non_negative.passed());

        let flags = certify_properties(&coverage()).unwrap();
        assert!(flags.monotone.passed());
        assert!(flags.submodular.passed());
        assert!(flags.non_negative.passed());
    }
}
