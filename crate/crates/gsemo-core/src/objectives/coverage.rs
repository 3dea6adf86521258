//! Weighted coverage: total weight of universe items covered by at least one
//! selected element. Monotone, submodular, normalized. Serves as the cheap,
//! exhaustively verifiable submodular base for the perturbed oracles.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::oracle::SetFunction;
use crate::solution::{GroundSet, SubsetSolution};

#[derive(Clone, Debug)]
pub struct CoverageInstance {
    ground: GroundSet,
    universe: usize,
    covered_by: Vec<Vec<u32>>,
    weights: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CoverageError {
    ItemOutOfRange { element: usize, item: usize, universe: usize },
    NegativeWeight { item: usize, weight: f64 },
    WrongElementCount { expected: usize, got: usize },
}

impl fmt::Display for CoverageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverageError::ItemOutOfRange {
                element,
                item,
                universe,
            } => write!(
                f,
                "element {element} covers item {item} outside universe of size {universe}"
            ),
            CoverageError::NegativeWeight { item, weight } => {
                write!(f, "item {item} has negative weight {weight}")
            }
            CoverageError::WrongElementCount { expected, got } => {
                write!(f, "expected {expected} coverage lists, got {got}")
            }
        }
    }
}

impl core::error::Error for CoverageError {}

impl CoverageInstance {
    pub fn new(
        n: usize,
        universe: usize,
        covered_by: Vec<Vec<u32>>,
        weights: Vec<f64>,
    ) -> Result<Self, CoverageError> {
        let ground = GroundSet::new(n);
        if covered_by.len() != n {
            return Err(CoverageError::WrongElementCount {
                expected: n,
                got: covered_by.len(),
            });
        }
        for (element, items) in covered_by.iter().enumerate() {
            for &item in items {
                if item as usize >= universe {
                    return Err(CoverageError::ItemOutOfRange {
                        element,
                        item: item as usize,
                        universe,
                    });
                }
            }
        }
        if weights.len() != universe {
            return Err(CoverageError::WrongElementCount {
                expected: universe,
                got: weights.len(),
            });
        }
        for (item, &w) in weights.iter().enumerate() {
            if !(w >= 0.0) {
                return Err(CoverageError::NegativeWeight { item, weight: w });
            }
        }
        Ok(CoverageInstance {
            ground,
            universe,
            covered_by,
            weights,
        })
    }

    pub fn universe_size(&self) -> usize {
        self.universe
    }
}

impl SetFunction for CoverageInstance {
    fn ground_set(&self) -> &GroundSet {
        &self.ground
    }

    fn evaluate(&self, x: &SubsetSolution) -> f64 {
        let mut covered = vec![0u64; self.universe.div_ceil(64)];
        let mut total = 0.0;
        for i in x.members() {
            for &item in self.covered_by[i].iter() {
                let (word, bit) = (item as usize / 64, item as usize % 64);
                if covered[word] >> bit & 1 == 0 {
                    covered[word] |= 1 << bit;
                    total += self.weights[item as usize];
                }
            }
        }
        total
    }

    fn is_monotone(&self) -> bool {
        true
    }

    fn is_non_negative(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_full_values() {
        let inst = CoverageInstance::new(
            3,
            4,
            vec![vec![0, 1], vec![1, 2], vec![3]],
            vec![2.0, 1.0, 4.0, 0.5],
        )
        .unwrap();
        assert_eq!(inst.evaluate(&SubsetSolution::empty(3)), 0.0);
        assert_eq!(inst.evaluate(&SubsetSolution::full(3)), 7.5);
        assert_eq!(inst.evaluate(&SubsetSolution::from_mask(3, 0b011)), 7.0);
    }

    #[test]
    fn validation() {
        assert!(CoverageInstance::new(2, 2, vec![vec![0], vec![2]], vec![1.0, 1.0]).is_err());
        assert!(CoverageInstance::new(2, 1, vec![vec![0], vec![0]], vec![-1.0]).is_err());
        assert!(CoverageInstance::new(2, 1, vec![vec![0]], vec![1.0]).is_err());
    }
}
