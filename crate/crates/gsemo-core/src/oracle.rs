//! Value-oracle contract for set functions and per-run call accounting.

use crate::solution::{GroundSet, SubsetSolution};

/// A set function `f: 2^V -> R` accessed by value queries.
///
/// Implementations must be deterministic (the same subset always yields the
/// same bits) and immutable after construction, so that a single oracle can be
/// shared across concurrent runs. Call counting is done per run by
/// [`Evaluator`], not by the oracle itself.
pub trait SetFunction {
    fn ground_set(&self) -> &GroundSet;

    fn evaluate(&self, x: &SubsetSolution) -> f64;

    /// Declared monotone: `f(X) <= f(Y)` for `X ⊆ Y`, normalized so `f(∅) = 0`.
    fn is_monotone(&self) -> bool;

    /// Declared non-negative on every subset.
    fn is_non_negative(&self) -> bool;

    fn n(&self) -> usize {
        self.ground_set().len()
    }
}

impl<F: SetFunction + ?Sized> SetFunction for &F {
    fn ground_set(&self) -> &GroundSet {
        (**self).ground_set()
    }
    fn evaluate(&self, x: &SubsetSolution) -> f64 {
        (**self).evaluate(x)
    }
    fn is_monotone(&self) -> bool {
        (**self).is_monotone()
    }
    fn is_non_negative(&self) -> bool {
        (**self).is_non_negative()
    }
}

impl<F: SetFunction + ?Sized> SetFunction for alloc::boxed::Box<F> {
    fn ground_set(&self) -> &GroundSet {
        (**self).ground_set()
    }
    fn evaluate(&self, x: &SubsetSolution) -> f64 {
        (**self).evaluate(x)
    }
    fn is_monotone(&self) -> bool {
        (**self).is_monotone()
    }
    fn is_non_negative(&self) -> bool {
        (**self).is_non_negative()
    }
}

/// Per-run evaluation wrapper: every `eval` caches the value on the solution
/// and increments the counter by exactly one.
pub struct Evaluator<'a, F: SetFunction + ?Sized> {
    oracle: &'a F,
    calls: u64,
}

impl<'a, F: SetFunction + ?Sized> Evaluator<'a, F> {
    pub fn new(oracle: &'a F) -> Self {
        Evaluator { oracle, calls: 0 }
    }

    pub fn eval(&mut self, x: &mut SubsetSolution) -> f64 {
        let v = self.oracle.evaluate(x);
        x.set_value(v);
        self.calls += 1;
        v
    }

    pub fn calls(&self) -> u64 {
        self.calls
    }

    pub fn oracle(&self) -> &'a F {
        self.oracle
    }
}
