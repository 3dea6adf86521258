//! Facility location: each customer is served by the best opened facility,
//! minus per-facility opening costs. Cost-free instances are monotone
//! submodular; positive costs give a non-monotone submodular function which
//! may go negative, so non-negativity is only declared when verified.

use alloc::vec::Vec;
use core::fmt;

use crate::oracle::SetFunction;
use crate::solution::{GroundSet, SubsetSolution};

#[derive(Clone, Debug)]
pub struct FacilityLocationInstance {
    ground: GroundSet,
    /// benefits[customer][facility]
    benefits: Vec<Vec<f64>>,
    costs: Vec<f64>,
    non_negative: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FacilityError {
    RaggedMatrix { row: usize, expected: usize, got: usize },
    NegativeEntry { row: usize, col: usize, value: f64 },
    NegativeCost { facility: usize, value: f64 },
    NoCustomers,
}

impl fmt::Display for FacilityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FacilityError::RaggedMatrix { row, expected, got } => {
                write!(f, "benefit row {row}: expected {expected} entries, got {got}")
            }
            FacilityError::NegativeEntry { row, col, value } => {
                write!(f, "benefit[{row}][{col}] = {value} is negative")
            }
            FacilityError::NegativeCost { facility, value } => {
                write!(f, "cost of facility {facility} is negative ({value})")
            }
            FacilityError::NoCustomers => write!(f, "benefit matrix has no rows"),
        }
    }
}

impl core::error::Error for FacilityError {}

/// Exhaustive non-negativity screening is limited to this many facilities.
const EXHAUSTIVE_LIMIT: usize = 12;

impl FacilityLocationInstance {
    pub fn new(benefits: Vec<Vec<f64>>, costs: Vec<f64>) -> Result<Self, FacilityError> {
        if benefits.is_empty() {
            return Err(FacilityError::NoCustomers);
        }
        let n = costs.len();
        for (row, r) in benefits.iter().enumerate() {
            if r.len() != n {
                return Err(FacilityError::RaggedMatrix {
                    row,
                    expected: n,
                    got: r.len(),
                });
            }
            for (col, &b) in r.iter().enumerate() {
                if !(b >= 0.0) {
                    return Err(FacilityError::NegativeEntry {
                        row,
                        col,
                        value: b,
                    });
                }
            }
        }
        for (facility, &c) in costs.iter().enumerate() {
            if !(c >= 0.0) {
                return Err(FacilityError::NegativeCost { facility, value: c });
            }
        }
        let mut inst = FacilityLocationInstance {
            ground: GroundSet::new(n),
            benefits,
            costs,
            non_negative: false,
        };
        inst.non_negative = inst.screen_non_negative();
        Ok(inst)
    }

    fn raw_value(&self, x: &SubsetSolution) -> f64 {
        let mut total = 0.0;
        for row in self.benefits.iter() {
            let mut best = 0.0;
            for j in x.members() {
                if row[j] > best {
                    best = row[j];
                }
            }
            total += best;
        }
        for j in x.members() {
            total -= self.costs[j];
        }
        total
    }

    /// Cost-free instances are non-negative analytically; otherwise fall back
    /// to exhaustive enumeration when small enough.
    fn screen_non_negative(&self) -> bool {
        if self.costs.iter().all(|&c| c == 0.0) {
            return true;
        }
        let n = self.ground.len();
        if n > EXHAUSTIVE_LIMIT {
            return false;
        }
        (0u64..1 << n).all(|mask| self.raw_value(&SubsetSolution::from_mask(n, mask)) >= 0.0)
    }
}

impl SetFunction for FacilityLocationInstance {
    fn ground_set(&self) -> &GroundSet {
        &self.ground
    }

    fn evaluate(&self, x: &SubsetSolution) -> f64 {
        let v = self.raw_value(x);
        if self.non_negative {
            v.max(0.0)
        } else {
            v
        }
    }

    fn is_monotone(&self) -> bool {
        self.costs.iter().all(|&c| c == 0.0)
    }

    fn is_non_negative(&self) -> bool {
        self.non_negative
    }
}
