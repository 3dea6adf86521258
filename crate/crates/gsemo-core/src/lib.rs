//! Subset maximization by the GSEMO multi-objective evolutionary algorithm,
//! together with greedy/local-search baselines, benchmark set functions and
//! brute-force diagnostic oracles.
//!
//! A set function `f: 2^V -> R` over a ground set of `n` elements is accessed
//! through the [`SetFunction`] value-oracle trait. The GSEMO engine maximizes
//! the bi-objective transform `(f(x), -|x|)` and keeps a Pareto archive of
//! mutually incomparable solutions, at most one per subset size. The best
//! solution with respect to the original single-objective problem (optionally
//! under a size constraint `|x| <= k`) is extracted from the archive.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only forwards to the RNG dependencies.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod archive;
pub mod baselines;
pub mod bounds;
pub mod diagnostics;
pub mod engines;
pub mod objectives;
pub mod oracle;
pub mod solution;

mod maths;

pub use archive::{ArchiveError, ParetoArchive};
pub use engines::{RunConfig, RunResult, SizeBound, TraceRecord};
pub use oracle::{Evaluator, SetFunction};
pub use solution::{GroundSet, ObjectiveVector, SubsetSolution};
