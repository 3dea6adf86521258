//! Closed-form approximation-guarantee factors for the size-constrained
//! regimes, in their sharp pre-limit form `1 - (1 - ·/k)^k` (which collapses
//! to `1 - 1/e`-style constants as `k` grows), plus the comparison between
//! the multiplicative-regime guarantee and the known greedy bound.

use core::fmt;

use crate::maths;

/// `1 - (1 - 1/k)^k`, the guarantee factor for submodular and
/// additively-perturbed objectives (applied to `OPT - k·ε` in the latter).
pub fn additive_guarantee_factor(k: u32) -> f64 {
    assert!(k >= 1);
    1.0 - maths::powi(1.0 - 1.0 / k as f64, k)
}

/// `1 - (1 - γ/k)^k`, the guarantee factor in terms of the submodularity
/// ratio γ; at γ = 1 this is the submodular factor.
pub fn ratio_guarantee_factor(k: u32, gamma: f64) -> f64 {
    assert!(k >= 1);
    1.0 - maths::powi(1.0 - gamma / k as f64, k)
}

/// `1 - e^{-γ}`, the weaker closed form usually quoted for the ratio regime.
pub fn ratio_guarantee_limit(gamma: f64) -> f64 {
    1.0 - maths::exp(-gamma)
}

/// The multiplicative-regime guarantee factor
/// `(1 + 2kε/(1-ε))^{-1} · (1 - ((1 - 1/k)·(1-ε)/(1+ε))^k)`.
pub fn multiplicative_guarantee_factor(k: u32, epsilon: f64) -> Result<f64, BoundError> {
    check_epsilon(epsilon)?;
    let kf = k as f64;
    let shrink = (1.0 - epsilon) / (1.0 + epsilon);
    let lead = 1.0 / (1.0 + 2.0 * kf * epsilon / (1.0 - epsilon));
    Ok(lead * (1.0 - maths::powi((1.0 - 1.0 / kf) * shrink, k)))
}

/// The known greedy bound in the multiplicative regime:
/// `(1 + 4kε/(1-ε)²)^{-1} · (1 - (1 - 1/k)^k·((1-ε)/(1+ε))^{2k})`.
pub fn multiplicative_greedy_bound(k: u32, epsilon: f64) -> Result<f64, BoundError> {
    check_epsilon(epsilon)?;
    let kf = k as f64;
    let shrink = (1.0 - epsilon) / (1.0 + epsilon);
    let lead = 1.0 / (1.0 + 4.0 * kf * epsilon / ((1.0 - epsilon) * (1.0 - epsilon)));
    Ok(lead * (1.0 - maths::powi(1.0 - 1.0 / kf, k) * maths::powi(shrink, 2 * k)))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundComparison {
    pub ours: f64,
    pub greedy_known: f64,
    pub dominates: bool,
}

/// Evaluates both multiplicative-regime bounds and reports whether ours is at
/// least the greedy one (which holds algebraically for all valid inputs).
pub fn multiplicative_bound_comparison(k: u32, epsilon: f64) -> Result<BoundComparison, BoundError> {
    let ours = multiplicative_guarantee_factor(k, epsilon)?;
    let greedy_known = multiplicative_greedy_bound(k, epsilon)?;
    Ok(BoundComparison {
        ours,
        greedy_known,
        dominates: ours >= greedy_known,
    })
}

fn check_epsilon(epsilon: f64) -> Result<(), BoundError> {
    if (0.0..1.0).contains(&epsilon) {
        Ok(())
    } else {
        Err(BoundError::EpsilonOutOfRange(epsilon))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundError {
    EpsilonOutOfRange(f64),
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::EpsilonOutOfRange(e) => {
                write!(f, "epsilon must lie in [0, 1), got {e}")
            }
        }
    }
}

impl core::error::Error for BoundError {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_zero_collapse() {
        for k in [1u32, 2, 5, 17] {
            let base = additive_guarantee_factor(k);
            assert!((ratio_guarantee_factor(k, 1.0) - base).abs() < 1e-12);
            assert!((multiplicative_guarantee_factor(k, 0.0).unwrap() - base).abs() < 1e-12);
            let cmp = multiplicative_bound_comparison(k, 0.0).unwrap();
            assert!(cmp.dominates);
            assert!((cmp.ours - cmp.greedy_known).abs() < 1e-12);
        }
    }

    #[test]
    fn k1_is_exact() {
        assert_eq!(additive_guarantee_factor(1), 1.0);
        let cmp = multiplicative_bound_comparison(1, 0.0).unwrap();
        assert_eq!(cmp.ours, 1.0);
        assert_eq!(cmp.greedy_known, 1.0);
    }

    #[test]
    fn domain_error() {
        assert!(multiplicative_guarantee_factor(3, 1.0).is_err());
        assert!(multiplicative_guarantee_factor(3, -0.1).is_err());
    }

    #[test]
    fn factors_approach_one_minus_inv_e() {
        let f = additive_guarantee_factor(10_000);
        assert!((f - (1.0 - 1.0 / core::f64::consts::E)).abs() < 1e-4);
    }
}
