//! Sparse regression R²: the squared multiple correlation of a least-squares
//! fit of the target on the selected (mean-centered) columns. Monotone,
//! non-negative, normalized, and generally non-submodular.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::maths;
use crate::oracle::SetFunction;
use crate::solution::{GroundSet, SubsetSolution};

/// Relative pivot tolerance for the normal-equation solve; systems that fail
/// it fall back to a minimum-norm solution via eigenvalue clipping. Fixed so
/// results are portable across platforms.
const PIVOT_TOL: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct RegressionInstance {
    ground: GroundSet,
    /// Mean-centered columns, one per ground element.
    columns: Vec<Vec<f64>>,
    /// Mean-centered target.
    target: Vec<f64>,
    total_ss: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RegressionError {
    RaggedColumn { col: usize, expected: usize, got: usize },
    NoObservations,
    /// Target has (numerically) zero variance; R² is undefined.
    DegenerateTarget,
}

impl fmt::Display for RegressionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegressionError::RaggedColumn { col, expected, got } => {
                write!(f, "column {col}: expected {expected} rows, got {got}")
            }
            RegressionError::NoObservations => write!(f, "design matrix has no rows"),
            RegressionError::DegenerateTarget => write!(f, "degenerate target"),
        }
    }
}

impl core::error::Error for RegressionError {}

fn center(v: &mut [f64]) {
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    for x in v.iter_mut() {
        *x -= mean;
    }
}

impl RegressionInstance {
    /// `columns` are the candidate variables (ground elements); both columns
    /// and target are mean-centered here.
    pub fn new(mut columns: Vec<Vec<f64>>, mut target: Vec<f64>) -> Result<Self, RegressionError> {
        let rows = target.len();
        if rows == 0 {
            return Err(RegressionError::NoObservations);
        }
        let n = columns.len();
        let ground = GroundSet::new(n);
        for (col, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(RegressionError::RaggedColumn {
                    col,
                    expected: rows,
                    got: c.len(),
                });
            }
        }
        for c in columns.iter_mut() {
            center(c);
        }
        center(&mut target);
        let total_ss: f64 = target.iter().map(|y| y * y).sum();
        if total_ss <= 1e-300 {
            return Err(RegressionError::DegenerateTarget);
        }
        Ok(RegressionInstance {
            ground,
            columns,
            target,
            total_ss,
        })
    }

    pub fn rows(&self) -> usize {
        self.target.len()
    }
}

impl SetFunction for RegressionInstance {
    fn ground_set(&self) -> &GroundSet {
        &self.ground
    }

    fn evaluate(&self, x: &SubsetSolution) -> f64 {
        let selected: Vec<usize> = x.members().collect();
        let k = selected.len();
        if k == 0 {
            return 0.0;
        }
        // Normal equations: gram w = rhs, gram = AᵀA, rhs = Aᵀy.
        let mut gram = vec![0.0; k * k];
        let mut rhs = vec![0.0; k];
        for (a, &ca) in selected.iter().enumerate() {
            for (b, &cb) in selected.iter().enumerate().skip(a) {
                let dot: f64 = self.columns[ca]
                    .iter()
                    .zip(self.columns[cb].iter())
                    .map(|(p, q)| p * q)
                    .sum();
                gram[a * k + b] = dot;
                gram[b * k + a] = dot;
            }
            rhs[a] = self.columns[ca]
                .iter()
                .zip(self.target.iter())
                .map(|(p, q)| p * q)
                .sum();
        }
        let weights = match solve_spd(&gram, &rhs, k) {
            Some(w) => w,
            None => min_norm_solve(&gram, &rhs, k),
        };
        let explained: f64 = weights.iter().zip(rhs.iter()).map(|(w, b)| w * b).sum();
        (explained / self.total_ss).clamp(0.0, 1.0)
    }

    fn is_monotone(&self) -> bool {
        true
    }

    fn is_non_negative(&self) -> bool {
        true
    }
}

/// Symmetric elimination (LDLᵀ without pivoting) with a relative pivot
/// tolerance; returns `None` on a rank-deficient system.
fn solve_spd(gram: &[f64], rhs: &[f64], k: usize) -> Option<Vec<f64>> {
    let max_diag = (0..k).map(|i| gram[i * k + i]).fold(0.0_f64, f64::max);
    if max_diag <= 0.0 {
        return None;
    }
    let mut a = gram.to_vec();
    let mut b = rhs.to_vec();
    for p in 0..k {
        let pivot = a[p * k + p];
        if pivot <= PIVOT_TOL * max_diag {
            return None;
        }
        for r in (p + 1)..k {
            let factor = a[r * k + p] / pivot;
            if factor == 0.0 {
                continue;
            }
            for c in p..k {
                a[r * k + c] -= factor * a[p * k + c];
            }
            b[r] -= factor * b[p];
        }
    }
    let mut w = vec![0.0; k];
    for p in (0..k).rev() {
        let mut acc = b[p];
        for c in (p + 1)..k {
            acc -= a[p * k + c] * w[c];
        }
        w[p] = acc / a[p * k + p];
    }
    Some(w)
}

/// Minimum-norm solution via a Jacobi eigendecomposition of the Gram matrix
/// with small eigenvalues clipped to zero.
fn min_norm_solve(gram: &[f64], rhs: &[f64], k: usize) -> Vec<f64> {
    let (eigvals, eigvecs) = jacobi_eigen(gram, k);
    let max_ev = eigvals.iter().fold(0.0_f64, |m, &v| m.max(maths::abs(v)));
    let mut w = vec![0.0; k];
    if max_ev == 0.0 {
        return w;
    }
    for (j, &ev) in eigvals.iter().enumerate() {
        if ev <= PIVOT_TOL * max_ev {
            continue;
        }
        let proj: f64 = (0..k).map(|i| eigvecs[i * k + j] * rhs[i]).sum();
        let scale = proj / ev;
        for i in 0..k {
            w[i] += scale * eigvecs[i * k + j];
        }
    }
    w
}

/// Cyclic Jacobi rotations for a symmetric matrix; returns eigenvalues and
/// column eigenvectors. Adequate for the small systems here (k <= ~20).
fn jacobi_eigen(m: &[f64], k: usize) -> (Vec<f64>, Vec<f64>) {
    let mut a = m.to_vec();
    let mut v = vec![0.0; k * k];
    for i in 0..k {
        v[i * k + i] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..k {
            for q in (p + 1)..k {
                off += a[p * k + q] * a[p * k + q];
            }
        }
        if off <= 1e-30 {
            break;
        }
        for p in 0..k {
            for q in (p + 1)..k {
                let apq = a[p * k + q];
                if maths::abs(apq) <= 1e-300 {
                    continue;
                }
                let theta = (a[q * k + q] - a[p * k + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + maths::sqrt(1.0 + theta * theta))
                } else {
                    -1.0 / (-theta + maths::sqrt(1.0 + theta * theta))
                };
                let c = 1.0 / maths::sqrt(1.0 + t * t);
                let s = t * c;
                for i in 0..k {
                    let aip = a[i * k + p];
                    let aiq = a[i * k + q];
                    a[i * k + p] = c * aip - s * aiq;
                    a[i * k + q] = s * aip + c * aiq;
                }
                for j in 0..k {
                    let apj = a[p * k + j];
                    let aqj = a[q * k + j];
                    a[p * k + j] = c * apj - s * aqj;
                    a[q * k + j] = s * apj + c * aqj;
                }
                for i in 0..k {
                    let vip = v[i * k + p];
                    let viq = v[i * k + q];
                    v[i * k + p] = c * vip - s * viq;
                    v[i * k + q] = s * vip + c * viq;
                }
            }
        }
    }
    let eigvals = (0..k).map(|i| a[i * k + i]).collect();
    (eigvals, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_set_is_zero() {
        let inst = RegressionInstance::new(
            vec![vec![1.0, 2.0, 3.0], vec![0.0, 1.0, 0.0]],
            vec![1.0, 4.0, 2.0],
        )
        .unwrap();
        assert_eq!(inst.evaluate(&SubsetSolution::empty(2)), 0.0);
    }

    #[test]
    fn perfect_single_column_fit() {
        let col = vec![1.0, 2.0, 3.0, 5.0];
        let inst = RegressionInstance::new(vec![col.clone(), vec![9.0, 1.0, 4.0, 4.0]], col)
            .unwrap();
        let r2 = inst.evaluate(&SubsetSolution::from_mask(2, 0b01));
        assert!((r2 - 1.0).abs() < 1e-12, "r2 = {r2}");
    }

    #[test]
    fn degenerate_target_rejected() {
        assert!(matches!(
            RegressionInstance::new(vec![vec![1.0, 2.0]], vec![3.0, 3.0]),
            Err(RegressionError::DegenerateTarget)
        ));
    }

    #[test]
    fn duplicate_columns_fall_back_to_min_norm() {
        let col = vec![1.0, -1.0, 2.0, 0.0];
        let inst = RegressionInstance::new(
            vec![col.clone(), col.clone()],
            vec![2.0, -2.0, 4.0, 0.0],
        )
        .unwrap();
        let r2 = inst.evaluate(&SubsetSolution::from_mask(2, 0b11));
        assert!((r2 - 1.0).abs() < 1e-9, "r2 = {r2}");
    }

    #[test]
    fn more_columns_never_hurt_small_exhaustive() {
        let inst = RegressionInstance::new(
            vec![
                vec![1.0, 2.0, 0.0, 1.0, 3.0],
                vec![0.5, -1.0, 2.0, 0.0, 1.0],
                vec![2.0, 0.0, 1.0, -1.0, 0.0],
            ],
            vec![1.0, 1.5, -0.5, 2.0, 0.0],
        )
        .unwrap();
        for mask in 0u64..8 {
            for add in 0..3 {
                if mask >> add & 1 == 1 {
                    continue;
                }
                let x = SubsetSolution::from_mask(3, mask);
                let y = SubsetSolution::from_mask(3, mask | 1 << add);
                assert!(inst.evaluate(&y) >= inst.evaluate(&x) - 1e-12);
            }
        }
    }
}
