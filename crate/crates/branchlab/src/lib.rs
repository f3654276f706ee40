//! Exact computational Lie theory for spherical triples `(G̃, H̃, G)`.
//!
//! The crate enumerates discrete-series parameters, branching laws,
//! Casimir and Harish-Chandra eigenvalue data, generator relations and
//! transfer maps for every triple in the catalog, and verifies each stated
//! identity in exact rational arithmetic.

pub mod branching;
pub mod catalog;
pub mod dgx;
pub mod error;
pub mod hilbert;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod reps;
pub mod verify;
pub mod weights;

pub use catalog::{all_cases, build_case, CaseId, CaseRecord, CaseTag, DiscElement};
pub use error::{Error, Result};
pub use linalg::AffineMap;
pub use rational::Rational;
pub use reps::{GroupDescriptor, GroupKind, InfinitesimalCharacter, IrrepLabel};
pub use weights::{WeightVector, WeylType};
