//! Exact computational algebra for the Fock-space Howe duality between
//! `gl_d` and `gl(m+p|n+q)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`partitions`]: partitions, generalized partitions and admissibility.
//! - [`series`]: truncated multivariate Laurent series with big-integer
//!   coefficients, the carrier of every character.
//! - [`symfunc`]: Schur and skew Schur polynomials by tableau enumeration,
//!   Littlewood-Richardson coefficients and Schur-basis expansion.
//! - [`hookschur`]: hook Schur functions and the two Cauchy-type identities.
//! - [`weights`]: the highest-weight dictionary `λ ↦ Λ(λ)`.
//! - [`characters`]: characters of the finite-dimensional and unitarizable
//!   modules.
//! - [`decomp`]: Howe enumeration, branching and tensor-product tables.
//! - [`oscillator`]: the supercommutative polynomial algebra, the
//!   differential-operator realization and highest-weight-vector checks.

pub mod characters;
pub mod context;
pub mod decomp;
pub mod error;
pub mod hookschur;
pub mod oscillator;
pub mod partitions;
pub mod series;
pub mod symfunc;
pub mod weights;

pub use context::Context;
pub use error::{Error, Result};
pub use partitions::{GeneralizedPartition, Partition, SkewShape};
pub use series::{GradedSeries, VariableSet};
pub use weights::{Basis, Weight};
