//! Brute-force diagnostics report: exact optimum, submodularity ratio,
//! minimal additive deviation, certified properties, and the guarantee
//! factors the theorems imply for a given constraint size.

use gsemo_core::bounds::{
    additive_guarantee_factor, multiplicative_guarantee_factor, ratio_guarantee_factor,
};
use gsemo_core::diagnostics::{
    brute_force_opt, certify_properties, gamma_min, minimal_additive_epsilon, CheckOutcome,
    DiagnosticsError,
};
use gsemo_core::engines::SizeBound;
use gsemo_core::SetFunction;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PropertyReport {
    pub holds: bool,
    /// Counterexample subset masks when the property fails.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl From<&CheckOutcome> for PropertyReport {
    fn from(outcome: &CheckOutcome) -> Self {
        match outcome {
            CheckOutcome::Pass => PropertyReport {
                holds: true,
                witness: None,
            },
            CheckOutcome::Fail(w) => PropertyReport {
                holds: false,
                witness: Some(format!(
                    "x = {:#b}, y = {:#b}, element = {:?}, gap = {:.6}",
                    w.x_mask, w.y_mask, w.element, w.gap
                )),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ImpliedBounds {
    pub k: usize,
    /// 1 - (1 - 1/k)^k, the submodular / additive-regime factor.
    pub additive_factor: f64,
    /// 1 - (1 - γ_min/k)^k with the measured ratio.
    pub ratio_factor: f64,
    /// The multiplicative-regime factor at the reported minimal deviation,
    /// read as a multiplicative ε when it is below 1.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub multiplicative_factor: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DiagnosticsReport {
    pub n: usize,
    pub opt: f64,
    pub opt_subset: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub opt_constrained: Option<f64>,
    pub gamma_min: f64,
    pub minimal_additive_epsilon: f64,
    pub monotone: PropertyReport,
    pub submodular: PropertyReport,
    pub non_negative: PropertyReport,
    /// Guarantee factors for the requested k; absent (with the note) when the
    /// oracle is not monotone, since the constrained theorems assume it.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub implied_bounds: Option<ImpliedBounds>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

pub fn diagnose<F: SetFunction + ?Sized>(
    oracle: &F,
    k: Option<usize>,
    guard_override: bool,
) -> Result<DiagnosticsReport, DiagnosticsError> {
    let n = oracle.n();
    let (opt, arg) = brute_force_opt(oracle, SizeBound::Unbounded, guard_override)?;
    let flags = certify_properties(oracle)?;
    let k_eff = k.unwrap_or_else(|| n.div_ceil(2)).clamp(1, n);
    let gamma = gamma_min(oracle, k_eff)?;
    let eps = minimal_additive_epsilon(oracle)?;

    let opt_constrained = match k {
        Some(k) => Some(brute_force_opt(oracle, SizeBound::AtMost(k), guard_override)?.0),
        None => None,
    };

    let (implied_bounds, note) = if flags.monotone.passed() {
        let multiplicative_factor = if eps < 1.0 {
            Some(multiplicative_guarantee_factor(k_eff as u32, eps).unwrap())
        } else {
            None
        };
        (
            Some(ImpliedBounds {
                k: k_eff,
                additive_factor: additive_guarantee_factor(k_eff as u32),
                ratio_factor: ratio_guarantee_factor(k_eff as u32, gamma),
                multiplicative_factor,
            }),
            None,
        )
    } else {
        (
            None,
            Some(
                "oracle is not monotone; the size-constrained guarantees assume \
                 monotonicity, so no implied bounds are reported"
                    .to_string(),
            ),
        )
    };

    Ok(DiagnosticsReport {
        n,
        opt,
        opt_subset: arg.bitstring(),
        opt_constrained,
        gamma_min: gamma,
        minimal_additive_epsilon: eps,
        monotone: (&flags.monotone).into(),
        submodular: (&flags.submodular).into(),
        non_negative: (&flags.non_negative).into(),
        implied_bounds,
        note,
    })
}
