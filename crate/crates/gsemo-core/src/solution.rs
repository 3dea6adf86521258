//! Ground set, bit-vector subsets and objective vectors.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use rand::Rng;

/// The finite ground set `V = {v_0, ..., v_{n-1}}` from which subsets are
/// selected. Labels are optional display names used by the harness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    /// Panics if `n == 0`; an empty ground set has no meaningful subsets.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "ground set must contain at least one element");
        GroundSet { n, labels: None }
    }

    pub fn with_labels(n: usize, labels: Vec<String>) -> Result<Self, LabelError> {
        if labels.len() != n {
            return Err(LabelError {
                expected: n,
                got: labels.len(),
            });
        }
        let mut gs = GroundSet::new(n);
        gs.labels = Some(labels);
        Ok(gs)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i].as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelError {
    pub expected: usize,
    pub got: usize,
}

impl fmt::Display for LabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expected {} labels, got {}",
            self.expected, self.got
        )
    }
}

impl core::error::Error for LabelError {}

const WORD_BITS: usize = 64;

/// A subset of the ground set, stored as a fixed-length bit vector.
///
/// Bit `i` is the membership indicator of element `v_i`. The popcount is
/// maintained on every mutation; `value` caches the last oracle evaluation so
/// archived solutions are never re-evaluated.
#[derive(Clone, Debug, PartialEq)]
pub struct SubsetSolution {
    n: usize,
    words: Vec<u64>,
    size: usize,
    value: Option<f64>,
}

impl SubsetSolution {
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1);
        let words = vec![0u64; n.div_ceil(WORD_BITS)];
        SubsetSolution {
            n,
            words,
            size: 0,
            value: None,
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = SubsetSolution::empty(n);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.mask_tail();
        s.size = n;
        s
    }

    /// Subsets of up to 64 elements from a plain bit mask (element `i` = bit `i`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n >= 1 && n <= 64);
        assert!(n == 64 || mask < (1u64 << n), "mask has bits beyond the ground set");
        let mut s = SubsetSolution::empty(n);
        s.words[0] = mask;
        s.size = mask.count_ones() as usize;
        s
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut s = SubsetSolution::empty(n);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    /// Uniform random subset: each bit is a fair coin flip.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut s = SubsetSolution::empty(n);
        for i in 0..n {
            if rng.random_bool(0.5) {
                s.insert(i);
            }
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        if !self.contains(i) {
            self.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
            self.size += 1;
            self.value = None;
        }
    }

    pub fn remove(&mut self, i: usize) {
        if self.contains(i) {
            self.words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
            self.size -= 1;
            self.value = None;
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.n);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
        if self.contains(i) {
            self.size += 1;
        } else {
            self.size -= 1;
        }
        self.value = None;
    }

    /// `V \ x`: bitwise negation over the `n` valid bits.
    pub fn complemented(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.mask_tail();
        out.size = self.n - self.size;
        out.value = None;
        out
    }

    fn mask_tail(&mut self) {
        let rem = self.n % WORD_BITS;
        if rem != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << rem) - 1;
        }
    }

    /// Cached objective value from the most recent evaluation, if any.
    pub fn value(&self) -> Option<f64> {
        self.value
    }

    pub fn set_value(&mut self, v: f64) {
        self.value = Some(v);
    }

    pub fn clear_value(&mut self) {
        self.value = None;
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.contains(i))
    }

    /// Bit mask for subsets of up to 64 elements (diagnostic enumeration).
    pub fn mask(&self) -> u64 {
        debug_assert!(self.n <= 64);
        self.words[0]
    }

    /// Canonical total order used for deterministic tie-breaking:
    /// smaller size first, then the bit pattern as a little-endian integer.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        self.size
            .cmp(&other.size)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }

    /// `"0110..."` rendering, element 0 first.
    pub fn bitstring(&self) -> String {
        (0..self.n)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }

    pub fn objective(&self) -> Option<ObjectiveVector> {
        self.value.map(|v| ObjectiveVector::new(v, self.size))
    }
}

/// The bi-objective image `(f1, f2) = (f(x), -|x|)` of a solution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ObjectiveVector {
    pub value: f64,
    pub neg_size: i64,
}

impl ObjectiveVector {
    pub fn new(value: f64, size: usize) -> Self {
        ObjectiveVector {
            value,
            neg_size: -(size as i64),
        }
    }

    /// `self` is at least as good as `other` in every objective.
    pub fn weakly_dominates(&self, other: &Self) -> bool {
        self.value >= other.value && self.neg_size >= other.neg_size
    }

    /// Weak dominance plus strictly better in at least one objective.
    pub fn dominates(&self, other: &Self) -> bool {
        self.weakly_dominates(other)
            && (self.value > other.value || self.neg_size > other.neg_size)
    }

    pub fn incomparable(&self, other: &Self) -> bool {
        !self.weakly_dominates(other) && !other.weakly_dominates(self)
    }
}
