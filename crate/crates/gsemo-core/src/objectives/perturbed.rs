//! Controlled departures from submodularity: a monotone submodular base `g`
//! plus a deterministic hash-based perturbation.
//!
//! Additive mode: `f(X) = g(X) + (ε/2)·u(X)` with `u(X) ∈ [0,1]`, `u(∅) = 0`.
//! Every marginal shifts by at most ±ε/2, so the diminishing-returns
//! inequality holds with deviation at most ε, and `f(∅) = 0` is preserved.
//! Monotonicity is verified exhaustively at construction for small ground
//! sets; larger instances require ε/2 below the smallest positive marginal of
//! `g` (caller's responsibility, documented precondition).
//!
//! Multiplicative mode: `f(X) = g(X)·(1 + ε·(2u(X) − 1))`, which is sandwiched
//! in `[(1−ε)g(X), (1+ε)g(X)]` by construction with witness `g`.

use core::fmt;

use crate::oracle::SetFunction;
use crate::solution::{GroundSet, SubsetSolution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerturbationMode {
    Additive,
    Multiplicative,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PerturbationSpec {
    pub mode: PerturbationMode,
    pub epsilon: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PerturbationError {
    NegativeEpsilon(f64),
    /// Multiplicative mode needs ε < 1 to keep the sandwich meaningful.
    EpsilonTooLarge(f64),
    /// Base oracle must declare itself monotone (and be submodular).
    BaseNotMonotone,
    /// Additive perturbation broke monotonicity at the reported pair.
    MonotonicityViolated { epsilon: f64, subset_mask: u64, element: usize },
}

impl fmt::Display for PerturbationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PerturbationError::NegativeEpsilon(e) => write!(f, "epsilon must be >= 0, got {e}"),
            PerturbationError::EpsilonTooLarge(e) => {
                write!(f, "multiplicative epsilon must be < 1, got {e}")
            }
            PerturbationError::BaseNotMonotone => {
                write!(f, "perturbation base must be a monotone submodular oracle")
            }
            PerturbationError::MonotonicityViolated {
                epsilon,
                subset_mask,
                element,
            } => write!(
                f,
                "monotonicity violated at epsilon {epsilon}: adding element {element} to subset {subset_mask:#b} decreases f"
            ),
        }
    }
}

impl core::error::Error for PerturbationError {}

/// Exhaustive monotonicity verification bound for the additive constructor.
const EXHAUSTIVE_LIMIT: usize = 12;

#[derive(Clone, Debug)]
pub struct PerturbedFunction<F: SetFunction> {
    base: F,
    spec: PerturbationSpec,
    monotone: bool,
}

impl<F: SetFunction> PerturbedFunction<F> {
    pub fn new(base: F, spec: PerturbationSpec) -> Result<Self, PerturbationError> {
        if !(spec.epsilon >= 0.0) {
            return Err(PerturbationError::NegativeEpsilon(spec.epsilon));
        }
        if spec.mode == PerturbationMode::Multiplicative && spec.epsilon >= 1.0 {
            return Err(PerturbationError::EpsilonTooLarge(spec.epsilon));
        }
        if !base.is_monotone() {
            return Err(PerturbationError::BaseNotMonotone);
        }
        let mut out = PerturbedFunction {
            base,
            spec,
            monotone: false,
        };
        out.monotone = match spec.mode {
            PerturbationMode::Additive => {
                let n = out.base.n();
                if n <= EXHAUSTIVE_LIMIT {
                    out.verify_monotone()?;
                }
                // Beyond the exhaustive limit the documented precondition
                // (ε below the smallest positive marginal of g) applies.
                true
            }
            // The multiplicative wiggle can break monotonicity; no claim made.
            PerturbationMode::Multiplicative => false,
        };
        Ok(out)
    }

    fn verify_monotone(&self) -> Result<(), PerturbationError> {
        let n = self.base.n();
        for mask in 0u64..1 << n {
            let x = SubsetSolution::from_mask(n, mask);
            let fx = self.evaluate(&x);
            for v in 0..n {
                if mask >> v & 1 == 1 {
                    continue;
                }
                let y = SubsetSolution::from_mask(n, mask | 1 << v);
                if self.evaluate(&y) < fx {
                    return Err(PerturbationError::MonotonicityViolated {
                        epsilon: self.spec.epsilon,
                        subset_mask: mask,
                        element: v,
                    });
                }
            }
        }
        Ok(())
    }

    /// The submodular witness (additive: the unperturbed base; multiplicative:
    /// the function `g` of the sandwich).
    pub fn witness(&self) -> &F {
        &self.base
    }

    pub fn spec(&self) -> &PerturbationSpec {
        &self.spec
    }

    /// Keyed mix of the subset's bit pattern, mapped to `[0, 1)`; `u(∅) = 0`.
    fn noise(&self, x: &SubsetSolution) -> f64 {
        if x.size() == 0 {
            return 0.0;
        }
        let mut h = self.spec.seed ^ 0x9e37_79b9_7f4a_7c15;
        let mut any = false;
        for i in x.members() {
            h ^= (i as u64).wrapping_add(0x9e37_79b9_7f4a_7c15);
            h = mix64(h);
            any = true;
        }
        debug_assert!(any);
        (mix64(h) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl<F: SetFunction> SetFunction for PerturbedFunction<F> {
    fn ground_set(&self) -> &GroundSet {
        self.base.ground_set()
    }

    fn evaluate(&self, x: &SubsetSolution) -> f64 {
        let g = self.base.evaluate(x);
        let u = self.noise(x);
        match self.spec.mode {
            PerturbationMode::Additive => g + 0.5 * self.spec.epsilon * u,
            PerturbationMode::Multiplicative => g * (1.0 + self.spec.epsilon * (2.0 * u - 1.0)),
        }
    }

    fn is_monotone(&self) -> bool {
        self.monotone
    }

    fn is_non_negative(&self) -> bool {
        // Base is non-negative monotone; both modes keep values >= 0.
        true
    }
}
