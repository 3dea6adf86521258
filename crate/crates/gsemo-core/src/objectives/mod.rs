//! Concrete benchmark set functions.
//!
//! Each oracle declares its monotonicity/non-negativity and evaluates
//! deterministically; see [`crate::oracle::SetFunction`].

mod coverage;
mod cut;
mod facility;
mod perturbed;
mod regression;

pub use coverage::{CoverageError, CoverageInstance};
pub use cut::{CutFunction, GraphError, WeightedGraph};
pub use facility::{FacilityError, FacilityLocationInstance};
pub use perturbed::{PerturbationError, PerturbationMode, PerturbationSpec, PerturbedFunction};
pub use regression::{RegressionError, RegressionInstance};
